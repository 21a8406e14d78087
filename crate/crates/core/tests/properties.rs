use fcstar::coxeter::{build_graph, Family, GraphRef};
use fcstar::diagram::{canonicalize_with, compose, compose_raw, diagram_of_letters, Strategy as Rewrite};
use fcstar::harness::oracle;
use fcstar::{a_tilde, diagram_of, has_left_descent_diagrammatic, heap_of, n_value, DecoratedDiagram, FcElement};
use proptest::prelude::*;

fn graph(family: Family) -> impl Strategy<Value = GraphRef> {
    (2usize..=5).prop_map(move |n| build_graph(family, n).unwrap())
}

/// Greedy FC prefix of a random word: letters that break reducedness or
/// full commutativity are skipped.
fn element(family: Family, max_len: usize) -> impl Strategy<Value = FcElement> {
    graph(family).prop_flat_map(move |g| {
        let rank = g.rank();
        prop::collection::vec(0..rank, 0..max_len * 2).prop_map(move |raw| {
            let mut fc = FcElement::identity(&g);
            for s in raw {
                if fc.len() == max_len {
                    break;
                }
                if let Ok(next) = fc.mul_right(s) {
                    fc = next;
                }
            }
            fc
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_ignores_commutations(fc in element(Family::AffineD, 14), swaps in prop::collection::vec(0usize..32, 0..40)) {
        let g = fc.graph();
        let mut w = fc.letters();
        for i in swaps {
            if w.len() > 1 {
                let i = i % (w.len() - 1);
                if g.commute(w[i], w[i + 1]) {
                    w.swap(i, i + 1);
                }
            }
        }
        prop_assert_eq!(FcElement::from_letters(g, &w).unwrap(), fc);
    }

    #[test]
    fn element_json_round_trip(fc in prop_oneof![element(Family::AffineD, 12), element(Family::AffineB, 12)]) {
        prop_assert_eq!(FcElement::from_json(&fc.to_json()).unwrap(), fc);
    }

    #[test]
    fn antichain_matches_brute_force(fc in element(Family::AffineD, 12)) {
        let less = oracle::heap_order(fc.graph(), &fc.letters());
        prop_assert_eq!(heap_of(&fc).max_antichain_size(), oracle::max_antichain_brute(&less));
    }

    #[test]
    fn inverse_has_reversed_heap(fc in element(Family::AffineB, 12)) {
        let inv = fc.inverse();
        prop_assert_eq!(inv.len(), fc.len());
        prop_assert_eq!(n_value(&inv), n_value(&fc));
        prop_assert_eq!(inv.inverse(), fc);
    }

    #[test]
    fn diagram_of_a_product(fc in element(Family::AffineD, 12), cut in 0usize..13) {
        let w = fc.letters();
        let cut = cut.min(w.len());
        let n = fc.graph().n();
        let left = diagram_of_letters(&w[..cut], n).unwrap();
        let right = diagram_of_letters(&w[cut..], n).unwrap();
        let d = diagram_of(&fc).unwrap();
        prop_assert_eq!(compose(&left, &right).unwrap(), d.clone());
        prop_assert_eq!(d.delta_exp, 0);
        prop_assert_eq!(d.undecorated_loops(), 0);
    }

    #[test]
    fn a_function_and_descents(fc in element(Family::AffineD, 12)) {
        let d = diagram_of(&fc).unwrap();
        prop_assert_eq!(n_value(&fc), a_tilde(&d));
        for i in fc.graph().generators() {
            prop_assert_eq!(has_left_descent_diagrammatic(&d, i).unwrap(), fc.is_left_descent(i));
        }
    }

    #[test]
    fn diagram_json_round_trip(fc in element(Family::AffineD, 12)) {
        let d = diagram_of(&fc).unwrap();
        let back = DecoratedDiagram::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), d.to_json());
        prop_assert_eq!(back, d);
    }

    #[test]
    fn rewriting_order_is_irrelevant(n in 2usize..=5, word in prop::collection::vec(0usize..8, 0..12), seed in any::<u64>()) {
        let word: Vec<usize> = word.into_iter().map(|s| s % (n + 3)).collect();
        let mut raw = DecoratedDiagram::identity(n + 2);
        for &s in &word {
            raw = compose_raw(&raw, &fcstar::simple_diagram(s, n).unwrap()).unwrap();
        }
        let det = canonicalize_with(&raw, Rewrite::Deterministic).unwrap();
        prop_assert_eq!(canonicalize_with(&raw, Rewrite::Random(seed)).unwrap(), det.clone());
        prop_assert_eq!(diagram_of_letters(&word, n).unwrap(), det);
    }
}
