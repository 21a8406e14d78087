use fcstar::diagram::{canonicalize_with, compose_raw, rule_instances, Strategy};
use fcstar::{build_graph, compose, diagram_of, simple_diagram, DecoratedDiagram, Family, FcElement};

fn main() -> fcstar::Result<()> {
    let n = 2;
    let d0 = simple_diagram(0, n)?;
    let d1 = simple_diagram(1, n)?;
    println!("D0\n{}", d0.render_ascii());
    println!("D0 D1\n{}", compose(&d0, &d1)?.render_ascii());
    println!("D0 D0 = delta D0: {}", compose(&d0, &d0)? == d0.with_delta(1));

    let raw = compose_raw(&compose_raw(&d0, &simple_diagram(2, n)?)?, &d0)?;
    println!("raw D0 D2 D0 has {} rewrite rules available", rule_instances(&raw).len());
    let a = canonicalize_with(&raw, Strategy::Deterministic)?;
    let b = canonicalize_with(&raw, Strategy::Random(7))?;
    println!("orders agree: {}, D0 D2 D0 = D0: {}", a == b, a == d0);

    let g = build_graph(Family::AffineD, 2)?;
    let candy = FcElement::parse(&g, "0 4 2 1 3")?;
    let d = diagram_of(&candy)?;
    println!("{candy}\n{}", d.render_ascii());
    let json = d.to_json();
    println!("{json}");
    println!("round trip: {}", DecoratedDiagram::from_json(&json)? == d);
    Ok(())
}
