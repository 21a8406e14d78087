use fcstar::cli::render_heap;
use fcstar::{build_graph, heap_of, n_value, Family, FcElement};

fn main() -> fcstar::Result<()> {
    let g = build_graph(Family::AffineD, 5)?;
    let w1 = FcElement::parse(&g, "0 4 3 5 2 4 6 7 1")?;
    println!("{}\n", render_heap(&w1));

    let heap = heap_of(&w1);
    println!("labels {:?}", heap.labels());
    println!("covers {:?}", heap.covers());
    println!("largest antichain {}", n_value(&w1));
    let ext = heap.linear_extensions(10_000)?;
    println!("{} reduced expressions, e.g.", ext.len());
    for w in ext.iter().take(3) {
        println!("  {w:?}");
    }
    println!("{}", heap.to_json());
    Ok(())
}
