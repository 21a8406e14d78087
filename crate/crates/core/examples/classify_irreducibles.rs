use std::collections::BTreeMap;

use fcstar::harness::enumerate_all;
use fcstar::star::is_irreducible;
use fcstar::{build_graph, classify_irreducible_b, classify_irreducible_d, Family, Mode};

fn main() -> fcstar::Result<()> {
    for n in [2, 3] {
        let g = build_graph(Family::AffineD, n)?;
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for fc in enumerate_all(&g, 12)? {
            if is_irreducible(&fc, Mode::Star) {
                *counts.entry(classify_irreducible_d(&fc)?.name()).or_default() += 1;
            }
        }
        println!("{} star irreducibles up to length 12: {counts:?}", g.type_name());
    }

    let b = build_graph(Family::AffineB, 3)?;
    for mode in [Mode::Star, Mode::WeakStar] {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for fc in enumerate_all(&b, 12)? {
            if is_irreducible(&fc, mode) {
                *counts.entry(classify_irreducible_b(&fc, mode)?.name()).or_default() += 1;
            }
        }
        println!("{} {mode:?} irreducibles up to length 12: {counts:?}", b.type_name());
    }

    let g = build_graph(Family::AffineD, 4)?;
    for fc in enumerate_all(&g, 8)? {
        if is_irreducible(&fc, Mode::Star) && fc.len() == 8 {
            println!("{} {fc}: {}", g.type_name(), classify_irreducible_d(&fc)?);
        }
    }
    Ok(())
}
