use super::*;
use crate::coxeter::build_graph;

fn d(i: usize, n: usize) -> DecoratedDiagram {
    simple_diagram(i, n).unwrap()
}

fn prod(ds: &[DecoratedDiagram]) -> DecoratedDiagram {
    ds.iter().fold(DecoratedDiagram::identity(ds[0].k), |acc, x| compose(&acc, x).unwrap())
}

#[test]
fn simple_shapes() {
    let d0 = d(0, 3);
    assert_eq!(a_value(&d0), 1);
    assert_eq!(
        d0.to_json().to_string(),
        r#"{"k":5,"edges":[{"from":["N",1],"to":["N",2],"dec":"b"},{"from":["N",3],"to":["S",3],"dec":""},{"from":["N",4],"to":["S",4],"dec":""},{"from":["N",5],"to":["S",5],"dec":""},{"from":["S",1],"to":["S",2],"dec":"b"}],"loops":{"b":0,"w":0,"bw":0},"delta":0,"strips":[{"dec":"b","sites":["N1-N2#0","S1-S2#0"]}]}"#
    );
    assert_eq!(d(5, 3).edges[3].dec_string(), "w");
    assert!(matches!(simple_diagram(6, 3), Err(Error::DiagramIndex { index: 6, max: 5 })));
}

#[test]
fn idempotent_up_to_delta() {
    for n in 2..6 {
        for i in 0..=n + 2 {
            let di = d(i, n);
            assert_eq!(compose(&di, &di).unwrap(), di.with_delta(1), "i={i} n={n}");
        }
    }
}

#[test]
fn braid_relations() {
    for n in 2..6 {
        let g = build_graph(Family::AffineD, n).unwrap();
        for s in g.generators() {
            for t in g.generators() {
                let (ds, dt) = (d(s, n), d(t, n));
                if g.m(s, t) == 3 {
                    assert_eq!(prod(&[ds.clone(), dt.clone(), ds.clone()]), ds, "s={s} t={t} n={n}");
                } else if s != t {
                    assert_eq!(compose(&ds, &dt).unwrap(), compose(&dt, &ds).unwrap(), "s={s} t={t}");
                }
            }
        }
    }
}

#[test]
fn fork_pair_gives_black_loop() {
    let d01 = compose(&d(0, 3), &d(1, 3)).unwrap();
    assert_eq!(d01.edges[0].dec_string(), "");
    assert!(d01.edges[0].is_north_cap());
    assert_eq!(d01.black_loops(), 1);
    assert_eq!(d01.delta_exp, 0);
    assert_eq!(a_tilde(&d01), 2);
}

#[test]
fn candy_has_one_mixed_loop() {
    let g = build_graph(Family::AffineD, 2).unwrap();
    let w = FcElement::parse(&g, "0 4 2 1 3").unwrap();
    let dw = diagram_of(&w).unwrap();
    assert_eq!(a_value(&dw), 2);
    assert_eq!(dw.mixed_loops(), 1);
    assert_eq!(dw.census()["bw"], 1);
    assert_eq!(a_tilde(&dw), 2);
}

#[test]
fn descents_match() {
    let g = build_graph(Family::AffineD, 5).unwrap();
    let w1 = FcElement::parse(&g, "0 4 3 5 2 4 6 7 1").unwrap();
    let dw = diagram_of(&w1).unwrap();
    let found: Vec<usize> =
        g.generators().filter(|&i| has_left_descent_diagrammatic(&dw, i).unwrap()).collect();
    assert_eq!(found, w1.left_descents());
}

#[test]
fn random_orders_agree() {
    let n = 3;
    let raw = [0, 1, 2, 4, 5, 3, 2, 0, 1, 2, 3, 5]
        .iter()
        .fold(DecoratedDiagram::identity(n + 2), |acc, &i| compose_raw(&acc, &d(i, n)).unwrap());
    let det = canonicalize(&raw).unwrap();
    for seed in 0..50 {
        assert_eq!(canonicalize_with(&raw, Strategy::Random(seed)).unwrap(), det);
    }
}

#[test]
fn json_round_trip() {
    let g = build_graph(Family::AffineD, 2).unwrap();
    let dw = diagram_of(&FcElement::parse(&g, "0 4 2 1 3").unwrap()).unwrap();
    assert_eq!(DecoratedDiagram::from_json(&dw.to_json()).unwrap(), dw);
}

#[test]
fn crossing_is_rejected() {
    let mut bad = DecoratedDiagram::identity(2);
    bad.edges = vec![
        Edge { from: Endpoint::north(1), to: Endpoint::south(2), marks: vec![] },
        Edge { from: Endpoint::north(2), to: Endpoint::south(1), marks: vec![] },
    ];
    assert!(matches!(canonicalize(&bad), Err(Error::NonPlanar)));
}

#[test]
fn rank_mismatch() {
    assert!(matches!(compose(&d(0, 2), &d(0, 3)), Err(Error::RankMismatch(4, 5))));
}

#[test]
fn ascii_lists_edges() {
    let text = compose(&d(0, 2), &d(1, 2)).unwrap().render_ascii();
    assert!(text.contains("N1 - N2"));
    assert!(text.contains("b=1"));
}
