use std::collections::HashSet;

use fcstar::harness::enumerate_all;
use fcstar::{build_graph, phi, Family, FcElement};

fn main() -> fcstar::Result<()> {
    let b = build_graph(Family::AffineB, 5)?;
    for text in ["1 3 5 2 4 6 0 3 5", "3 4 2 5 3 1 6 4 2 5 3 0 6 2", "6 5 6"] {
        let w = FcElement::parse(&b, text)?;
        let image = phi(&w)?;
        println!("{w} -> {} {image}", image.graph().type_name());
    }

    let b = build_graph(Family::AffineB, 3)?;
    let elements = enumerate_all(&b, 10)?;
    let images: HashSet<FcElement> = elements.iter().map(phi).collect::<fcstar::Result<_>>()?;
    println!("{}: {} elements, {} distinct images", b.type_name(), elements.len(), images.len());
    Ok(())
}
