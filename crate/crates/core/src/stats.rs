//! Statistics on fully commutative elements: fork factor counts and the
//! maximal antichain size.

use crate::coxeter::{Family, Generator};
use crate::element::FcElement;
use crate::error::Result;
use crate::heap::heap_of;

/// Blocks of fork letters `a`, `b` delimited by occurrences of `hub`; each
/// block holding both forks is one factor `ab`.
fn fork_blocks(letters: &[Generator], a: Generator, b: Generator, hub: Generator) -> usize {
    let mut count = 0;
    let (mut seen_a, mut seen_b) = (false, false);
    for &s in letters.iter().chain(std::iter::once(&hub)) {
        if s == a {
            seen_a = true;
        } else if s == b {
            seen_b = true;
        } else if s == hub {
            if seen_a && seen_b {
                count += 1;
            }
            seen_a = false;
            seen_b = false;
        }
    }
    count
}

/// Largest number of factors `s0 s1` over reduced expressions.
pub fn f_bullet(fc: &FcElement) -> Result<usize> {
    fc.graph().require(Family::AffineD)?;
    Ok(fork_blocks(&fc.letters(), 0, 1, 2))
}

/// Largest number of factors `s_{n+1} s_{n+2}` over reduced expressions.
pub fn f_circ(fc: &FcElement) -> Result<usize> {
    fc.graph().require(Family::AffineD)?;
    let n = fc.graph().n();
    Ok(fork_blocks(&fc.letters(), n + 1, n + 2, n))
}

/// Size of a maximal antichain in the heap.
pub fn n_value(fc: &FcElement) -> usize {
    heap_of(fc).max_antichain_size()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;
    use crate::error::Error;

    #[test]
    fn d10_example() {
        let g = build_graph(Family::AffineD, 8).unwrap();
        let w = FcElement::parse(&g, "0 3 5 9 1 2 4 6 8 3 5 7 10").unwrap();
        assert_eq!((f_bullet(&w).unwrap(), f_circ(&w).unwrap()), (1, 0));
        let v = FcElement::parse(&g, "0 5 9 1 10").unwrap();
        assert_eq!((f_bullet(&v).unwrap(), f_circ(&v).unwrap()), (1, 1));
    }

    #[test]
    fn identity_stats() {
        let g = build_graph(Family::AffineD, 3).unwrap();
        let e = FcElement::identity(&g);
        assert_eq!((f_bullet(&e).unwrap(), f_circ(&e).unwrap(), n_value(&e)), (0, 0, 0));
    }

    #[test]
    fn zigzag_counts_each_fork_pass() {
        let g = build_graph(Family::AffineD, 2).unwrap();
        let w = FcElement::parse(&g, "0 1 2 3 4 2 0 1").unwrap();
        assert_eq!(f_bullet(&w).unwrap(), 2);
        assert_eq!(f_circ(&w).unwrap(), 1);
    }

    #[test]
    fn rejects_b() {
        let g = build_graph(Family::AffineB, 3).unwrap();
        let e = FcElement::identity(&g);
        assert!(matches!(f_bullet(&e), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn n_of_fork_pair() {
        for n in 2..6 {
            let g = build_graph(Family::AffineD, n).unwrap();
            assert_eq!(n_value(&FcElement::parse(&g, "0 1").unwrap()), 2);
        }
    }
}
