use fcstar::harness::enumerate_all;
use fcstar::{a_tilde, a_value, build_graph, diagram_of, f_bullet, f_circ, n_value, Family, FcElement};

fn main() -> fcstar::Result<()> {
    let g = build_graph(Family::AffineD, 2)?;
    let w = FcElement::parse(&g, "0 1")?;
    let d = diagram_of(&w)?;
    println!("{w}: n = {}, a~ = {}, a = {}", n_value(&w), a_tilde(&d), a_value(&d));

    let g = build_graph(Family::AffineD, 8)?;
    for text in ["0 3 5 9 1 2 4 6 8 3 5 7 10", "0 5 9 1 10"] {
        let w = FcElement::parse(&g, text)?;
        let d = diagram_of(&w)?;
        println!("{w}: f• = {}, f◦ = {}, L• = {}, L◦ = {}", f_bullet(&w)?, f_circ(&w)?, d.black_loops(), d.white_loops());
    }

    for n in [2, 3] {
        let g = build_graph(Family::AffineD, n)?;
        let mut agree = 0;
        let all = enumerate_all(&g, 12)?;
        for fc in &all {
            if n_value(fc) == a_tilde(&diagram_of(fc)?) {
                agree += 1;
            }
        }
        println!("{}: n(w) = a~(D_w) for {agree} of {} elements", g.type_name(), all.len());
    }
    Ok(())
}
