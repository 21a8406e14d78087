use fcstar::star::{apply_move, exhaustive_traces, Reducer};
use fcstar::{available_moves, build_graph, reduce_to_irreducible, Family, FcElement, Mode, Policy, Side, StarMove};

fn main() -> fcstar::Result<()> {
    let g = build_graph(Family::AffineD, 5)?;
    let w1 = FcElement::parse(&g, "0 4 3 5 2 4 6 7 1")?;
    println!("moves from {w1}:");
    for mv in available_moves(&w1, Mode::Star) {
        println!("  {mv}");
    }

    let mut fc = w1.clone();
    for mv in [StarMove::left(4, 3), StarMove::right(1, 2), StarMove::left(5, 6), StarMove::right(2, 0), StarMove::right(4, 3)] {
        fc = apply_move(&fc, &mv)?;
        println!("  {mv} -> {fc}");
    }

    for policy in [Policy::FirstMove, Policy::LeftOnly, Policy::RightOnly] {
        let trace = &reduce_to_irreducible(&w1, Mode::Star, policy)?[0];
        println!("{policy:?}: depth {} ends at {}", trace.len(), trace.end);
    }

    let all = exhaustive_traces(&w1, Mode::Star, 100_000)?;
    println!("{} exhaustive traces", all.len());
    let mut reducer = Reducer::new(Mode::Star);
    println!("{:?}", reducer.summary(&w1));
    println!("left endpoints {:?}", reducer.one_sided_endpoints(&w1, Side::Left));

    let b = build_graph(Family::AffineB, 5)?;
    let w2 = FcElement::parse(&b, "3 4 2 5 3 1 6 4 2 5 3 0 6 2")?;
    let weak = &reduce_to_irreducible(&w2, Mode::WeakStar, Policy::FirstMove)?[0];
    println!("{} {w2}\n  weak star endpoint {}", b.type_name(), weak.end);
    Ok(())
}
