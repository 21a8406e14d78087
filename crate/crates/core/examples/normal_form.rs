use fcstar::{build_graph, cfnf, fc_check, Family, FcCheck, FcElement, Word};

fn main() -> fcstar::Result<()> {
    let g = build_graph(Family::AffineD, 5)?;
    let w1 = Word::parse(&g, "4 0 5 3 7 6 4 2 1")?;
    let fc = cfnf(&w1)?;
    println!("{} word {}", g.type_name(), fcstar::coxeter::format_letters(w1.letters()));
    println!("normal form {fc}, layers {:?}", fc.layers());
    println!("left descents {:?}, right descents {:?}", fc.left_descents(), fc.right_descents());

    for text in ["2 3 2", "0 2 0", "2 2"] {
        let check = fc_check(&g, &fcstar::coxeter::parse_letters(text)?);
        let verdict = match check {
            FcCheck::FullyCommutative => "FC".to_string(),
            FcCheck::NotReduced(s) => format!("not reduced at {s}"),
            FcCheck::NotFullyCommutative { s, t } => format!("braid in {s} {t}"),
        };
        println!("{text:>8}: {verdict}");
    }

    let b = build_graph(Family::AffineB, 2)?;
    let w = FcElement::parse(&b, "3 2 3")?;
    println!("{} {w} has length {}", b.type_name(), w.len());
    Ok(())
}
