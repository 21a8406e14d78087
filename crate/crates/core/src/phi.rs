//! The embedding of FC(B̃ₙ₊₁) into FC(D̃ₙ₊₂).

use crate::coxeter::{build_graph, Family, Generator};
use crate::element::{down_sets, FcElement};
use crate::error::Result;

/// Image of a B̃ element in D̃ with the same parameter `n`.
///
/// On the heap, an `s_{n+1}` lying in a convex chain `s_n s_{n+1} s_n` is
/// doubled into `s_{n+1} s_{n+2}`; every other `s_{n+1}` keeps a single
/// label, switching fork whenever it closes a convex chain
/// `s_{n+1} s_n s_{n+1}` with the previous one.
pub fn phi(fc: &FcElement) -> Result<FcElement> {
    fc.graph().require(Family::AffineB)?;
    let n = fc.graph().n();
    let target = build_graph(Family::AffineD, n)?;
    let letters = fc.letters();
    let down = down_sets(fc.graph(), &letters);
    let convex = |lo: usize, hi: usize| {
        (lo + 1..hi).filter(|&i| down[i].contains(lo) && down[hi].contains(i)).count() == 1
    };
    let proj: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] == n || letters[i] == n + 1).collect();

    let mut relabel: Vec<Vec<Generator>> = letters.iter().map(|&s| vec![s]).collect();
    let mut prev_single: Option<(usize, Generator)> = None;
    for (p, &pos) in proj.iter().enumerate() {
        if letters[pos] != n + 1 {
            continue;
        }
        let sandwiched = p > 0
            && p + 1 < proj.len()
            && letters[proj[p - 1]] == n
            && letters[proj[p + 1]] == n
            && convex(proj[p - 1], proj[p + 1]);
        if sandwiched {
            relabel[pos] = vec![n + 1, n + 2];
            prev_single = None;
            continue;
        }
        let label = match prev_single {
            Some((q, l)) if q + 2 == p && convex(proj[q], pos) => {
                if l == n + 1 {
                    n + 2
                } else {
                    n + 1
                }
            }
            _ => n + 1,
        };
        relabel[pos] = vec![label];
        prev_single = Some((p, label));
    }
    FcElement::from_letters(&target, &relabel.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::GraphRef;

    fn b(n: usize) -> GraphRef {
        build_graph(Family::AffineB, n).unwrap()
    }

    fn letters_of(fc: &FcElement) -> Vec<Generator> {
        fc.letters()
    }

    #[test]
    fn identity_maps_to_identity() {
        let e = FcElement::identity(&b(3));
        let img = phi(&e).unwrap();
        assert!(img.is_identity());
        assert_eq!(img.graph().family(), Family::AffineD);
        assert_eq!(img.graph().n(), 3);
    }

    #[test]
    fn braid_triples() {
        for n in 2..6 {
            let g = b(n);
            let d = build_graph(Family::AffineD, n).unwrap();
            let w = FcElement::from_letters(&g, &[n + 1, n, n + 1]).unwrap();
            assert_eq!(phi(&w).unwrap(), FcElement::from_letters(&d, &[n + 1, n, n + 2]).unwrap());
            let w = FcElement::from_letters(&g, &[n, n + 1, n]).unwrap();
            assert_eq!(phi(&w).unwrap(), FcElement::from_letters(&d, &[n, n + 1, n + 2, n]).unwrap());
        }
    }

    #[test]
    fn w2_last_fork_switches() {
        // s6 s5 s6 is a factor of w2 (layers 3 to 5), so the last s6 becomes s7
        let g = b(5);
        let w2 = FcElement::parse(&g, "3 2 4 1 3 5 2 4 6 0 3 5 2 6").unwrap();
        let d = build_graph(Family::AffineD, 5).unwrap();
        assert_eq!(phi(&w2).unwrap(), FcElement::parse(&d, "3 2 4 1 3 5 2 4 6 0 3 5 2 7").unwrap());
    }

    #[test]
    fn no_braid_factor_keeps_letters() {
        let g = b(5);
        let w = FcElement::parse(&g, "1 3 5 2 4 6 0 3 5").unwrap();
        let d = build_graph(Family::AffineD, 5).unwrap();
        assert_eq!(phi(&w).unwrap(), FcElement::from_letters(&d, &letters_of(&w)).unwrap());
    }

    #[test]
    fn chain_broken_by_lower_letter_alternates() {
        // 3 2 3 1 2 3 in B~3: two overlapping braid triples sharing the middle s3
        let g = b(2);
        let w = FcElement::parse(&g, "3 2 3 1 2 3").unwrap();
        let d = build_graph(Family::AffineD, 2).unwrap();
        assert_eq!(phi(&w).unwrap(), FcElement::parse(&d, "3 2 4 1 2 3").unwrap());
    }

    #[test]
    fn rejects_d_input() {
        let d = build_graph(Family::AffineD, 2).unwrap();
        assert!(phi(&FcElement::identity(&d)).is_err());
    }
}
