//! Coxeter graphs of affine types D̃ₙ₊₂ and B̃ₙ₊₁, plus words over their
//! generators.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a Coxeter generator `s_i`.
pub type Generator = usize;

/// Bond value standing in for `m(s,t) = ∞`.
pub const INFINITE_BOND: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    AffineD,
    AffineB,
    Generic,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::AffineD => "D",
            Family::AffineB => "B",
            Family::Generic => "G",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" | "d" => Ok(Family::AffineD),
            "B" | "b" => Ok(Family::AffineB),
            other => Err(Error::Parse(format!("unknown family {other:?}, expected D or B"))),
        }
    }
}

/// A Coxeter graph stored as its full bond matrix.
///
/// For [`Family::AffineD`] the generators are `0..=n+2` with forks `{0,1}`
/// and `{n+1,n+2}` hanging off the chain `2..=n`; for [`Family::AffineB`]
/// they are `0..=n+1` with the fork `{0,1}` and a 4-bond between `n` and
/// `n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    family: Family,
    n: usize,
    bond: Vec<Vec<u32>>,
}

pub type GraphRef = Arc<CoxeterGraph>;

/// Builds the graph of the given affine family with parameter `n`.
pub fn build_graph(family: Family, n: usize) -> Result<GraphRef> {
    match family {
        Family::AffineD => CoxeterGraph::affine_d(n),
        Family::AffineB => CoxeterGraph::affine_b(n),
        Family::Generic => Err(Error::Unsupported(
            "generic graphs are built from a bond matrix".into(),
        )),
    }
    .map(Arc::new)
}

impl CoxeterGraph {
    pub fn affine_d(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        let rank = n + 3;
        let mut bond = vec![vec![2; rank]; rank];
        let mut link = |a: usize, b: usize, m: u32| {
            bond[a][b] = m;
            bond[b][a] = m;
        };
        link(0, 2, 3);
        link(1, 2, 3);
        for i in 2..n {
            link(i, i + 1, 3);
        }
        link(n, n + 1, 3);
        link(n, n + 2, 3);
        for (i, row) in bond.iter_mut().enumerate() {
            row[i] = 1;
        }
        Ok(Self { family: Family::AffineD, n, bond })
    }

    pub fn affine_b(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        let rank = n + 2;
        let mut bond = vec![vec![2; rank]; rank];
        let mut link = |a: usize, b: usize, m: u32| {
            bond[a][b] = m;
            bond[b][a] = m;
        };
        link(0, 2, 3);
        link(1, 2, 3);
        for i in 2..n {
            link(i, i + 1, 3);
        }
        link(n, n + 1, 4);
        for (i, row) in bond.iter_mut().enumerate() {
            row[i] = 1;
        }
        Ok(Self { family: Family::AffineB, n, bond })
    }

    /// Any symmetric matrix with ones exactly on the diagonal and entries
    /// `≥ 2` (or [`INFINITE_BOND`]) elsewhere.
    pub fn generic(bond: Vec<Vec<u32>>) -> Result<Self> {
        let rank = bond.len();
        for (i, row) in bond.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix("matrix is not square".into()));
            }
            for (j, &m) in row.iter().enumerate() {
                if m != bond[j][i] {
                    return Err(Error::InvalidMatrix(format!("m({i},{j}) != m({j},{i})")));
                }
                if (i == j) != (m == 1) {
                    return Err(Error::InvalidMatrix(format!("m({i},{j}) = {m}")));
                }
                if m == 0 {
                    return Err(Error::InvalidMatrix(format!("m({i},{j}) = 0")));
                }
            }
        }
        Ok(Self { family: Family::Generic, n: rank, bond })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The family parameter `n` (for generic graphs, the rank).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.bond.len()
    }

    pub fn generators(&self) -> std::ops::Range<Generator> {
        0..self.rank()
    }

    pub fn m(&self, s: Generator, t: Generator) -> u32 {
        self.bond[s][t]
    }

    pub fn bond_matrix(&self) -> &[Vec<u32>] {
        &self.bond
    }

    /// Distinct generators with `m(s,t) = 2`.
    pub fn commute(&self, s: Generator, t: Generator) -> bool {
        self.bond[s][t] == 2
    }

    /// `m(s,t) ≥ 3`, i.e. an edge of the Coxeter graph.
    pub fn adjacent(&self, s: Generator, t: Generator) -> bool {
        self.bond[s][t] >= 3
    }

    pub fn neighbors(&self, s: Generator) -> impl Iterator<Item = Generator> + '_ {
        self.generators().filter(move |&t| self.adjacent(s, t))
    }

    pub fn check_letter(&self, letter: Generator) -> Result<()> {
        if letter < self.rank() {
            Ok(())
        } else {
            Err(Error::InvalidLetter { letter, rank: self.rank() })
        }
    }

    pub fn require(&self, family: Family) -> Result<()> {
        if self.family == family {
            Ok(())
        } else {
            Err(Error::WrongFamily { expected: family.letter(), found: self.family.letter() })
        }
    }

    /// Human-readable type name such as `D~7` or `B~6`.
    pub fn type_name(&self) -> String {
        match self.family {
            Family::AffineD => format!("D~{}", self.n + 2),
            Family::AffineB => format!("B~{}", self.n + 1),
            Family::Generic => format!("generic rank {}", self.rank()),
        }
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.type_name())
    }
}

/// A finite sequence of generators of a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    graph: GraphRef,
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(graph: &GraphRef, letters: Vec<Generator>) -> Result<Self> {
        for &l in &letters {
            graph.check_letter(l)?;
        }
        Ok(Self { graph: graph.clone(), letters })
    }

    /// Parses whitespace-separated generator indices, e.g. `"0 4 3 5"`.
    pub fn parse(graph: &GraphRef, text: &str) -> Result<Self> {
        let letters = parse_letters(text)?;
        Self::new(graph, letters)
    }

    pub fn graph(&self) -> &GraphRef {
        &self.graph
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { graph: self.graph.clone(), letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

pub fn parse_letters(text: &str) -> Result<Vec<Generator>> {
    text.split_whitespace()
        .map(|tok| tok.parse::<Generator>().map_err(|_| Error::Parse(format!("bad generator {tok:?}"))))
        .collect()
}

pub fn format_letters(letters: &[Generator]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_d_smallest() {
        let g = build_graph(Family::AffineD, 2).unwrap();
        assert_eq!(g.rank(), 5);
        for j in [0, 1, 3, 4] {
            assert_eq!(g.m(2, j), 3);
        }
        assert_eq!(g.m(0, 1), 2);
        assert_eq!(g.m(3, 4), 2);
        assert_eq!(g.m(0, 3), 2);
    }

    #[test]
    fn affine_d7() {
        let g = build_graph(Family::AffineD, 5).unwrap();
        assert_eq!(g.rank(), 8);
        let edges: Vec<(usize, usize)> = (0..8)
            .flat_map(|a| (a + 1..8).map(move |b| (a, b)))
            .filter(|&(a, b)| g.adjacent(a, b))
            .collect();
        assert_eq!(edges, vec![(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7)]);
        assert!(edges.iter().all(|&(a, b)| g.m(a, b) == 3));
    }

    #[test]
    fn affine_b6_has_four_bond() {
        let g = build_graph(Family::AffineB, 5).unwrap();
        assert_eq!(g.rank(), 7);
        assert_eq!(g.m(5, 6), 4);
        assert_eq!(g.m(4, 5), 3);
        assert_eq!(g.m(0, 1), 2);
        assert_eq!(g.neighbors(6).collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn affine_b3_bond_at_chain_start() {
        let g = build_graph(Family::AffineB, 2).unwrap();
        assert_eq!(g.rank(), 4);
        assert_eq!(g.m(2, 3), 4);
        assert_eq!(g.m(0, 2), 3);
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(build_graph(Family::AffineD, 1).unwrap_err(), Error::RankTooSmall(1));
        assert_eq!(build_graph(Family::AffineB, 0).unwrap_err(), Error::RankTooSmall(0));
    }

    #[test]
    fn bond_matrix_is_symmetric() {
        for n in 2..7 {
            for family in [Family::AffineD, Family::AffineB] {
                let g = build_graph(family, n).unwrap();
                for s in g.generators() {
                    for t in g.generators() {
                        assert_eq!(g.m(s, t), g.m(t, s));
                        assert_eq!(g.m(s, t) == 1, s == t);
                    }
                }
            }
        }
    }

    #[test]
    fn generic_validation() {
        assert!(CoxeterGraph::generic(vec![vec![1, 3], vec![3, 1]]).is_ok());
        assert!(CoxeterGraph::generic(vec![vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterGraph::generic(vec![vec![2, 3], vec![3, 1]]).is_err());
    }

    #[test]
    fn word_parsing() {
        let g = build_graph(Family::AffineD, 5).unwrap();
        let w = Word::parse(&g, "0 4 3 5 2 4 6 7 1").unwrap();
        assert_eq!(w.letters(), &[0, 4, 3, 5, 2, 4, 6, 7, 1]);
        assert_eq!(w.to_string(), "0 4 3 5 2 4 6 7 1");
        assert!(matches!(Word::parse(&g, "0 8"), Err(Error::InvalidLetter { letter: 8, .. })));
        assert!(matches!(Word::parse(&g, "0 x"), Err(Error::Parse(_))));
        assert!(Word::parse(&g, "").unwrap().is_empty());
    }
}
