//! The fully commutative test and Cartier-Foata normal form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::coxeter::{build_graph, format_letters, Family, Generator, GraphRef, Word, INFINITE_BOND};
use crate::error::{Error, Result};

/// Outcome of [`fc_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcCheck {
    FullyCommutative,
    /// Two occurrences of this generator cover each other, so they cancel.
    NotReduced(Generator),
    /// A convex alternating chain of length `m(s,t)`.
    NotFullyCommutative { s: Generator, t: Generator },
}

impl FcCheck {
    pub fn is_fc(self) -> bool {
        self == FcCheck::FullyCommutative
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            FcCheck::FullyCommutative => Ok(()),
            FcCheck::NotReduced(s) => Err(Error::NotReduced(s)),
            FcCheck::NotFullyCommutative { s, t } => Err(Error::NotFullyCommutative { s, t }),
        }
    }
}

/// Strict down-sets of the heap order on word positions.
pub(crate) fn down_sets(graph: &crate::coxeter::CoxeterGraph, letters: &[Generator]) -> Vec<BitSet> {
    let len = letters.len();
    let mut down: Vec<BitSet> = Vec::with_capacity(len);
    for (k, &b) in letters.iter().enumerate() {
        let mut set = BitSet::new(len);
        for (j, &a) in letters[..k].iter().enumerate().rev() {
            if set.contains(j) {
                continue;
            }
            if a == b || graph.adjacent(a, b) {
                set.insert(j);
                set.union_with(&down[j]);
            }
        }
        down.push(set);
    }
    down
}

fn interval_size(down: &[BitSet], lo: usize, hi: usize) -> usize {
    (lo + 1..hi).filter(|&i| down[i].contains(lo) && down[hi].contains(i)).count()
}

/// Heap criterion for reduced fully commutative words.
pub fn fc_check(graph: &crate::coxeter::CoxeterGraph, letters: &[Generator]) -> FcCheck {
    let down = down_sets(graph, letters);
    let mut last: Vec<Option<usize>> = vec![None; graph.rank()];
    for (k, &s) in letters.iter().enumerate() {
        if let Some(j) = last[s] {
            if interval_size(&down, j, k) == 0 {
                return FcCheck::NotReduced(s);
            }
        }
        last[s] = Some(k);
    }
    for s in graph.generators() {
        for t in s + 1..graph.rank() {
            let m = graph.m(s, t);
            if m < 3 || m == INFINITE_BOND {
                continue;
            }
            let m = m as usize;
            let proj: Vec<usize> =
                (0..letters.len()).filter(|&i| letters[i] == s || letters[i] == t).collect();
            if proj.len() < m {
                continue;
            }
            for win in proj.windows(m) {
                let alternates = win.windows(2).all(|p| letters[p[0]] != letters[p[1]]);
                if alternates && interval_size(&down, win[0], win[m - 1]) == m - 2 {
                    return FcCheck::NotFullyCommutative { s, t };
                }
            }
        }
    }
    FcCheck::FullyCommutative
}

pub fn is_fully_commutative(word: &Word) -> bool {
    fc_check(word.graph(), word.letters()).is_fc()
}

/// Layer index of each position: one more than the deepest earlier letter
/// that fails to commute with it.
fn layer_indices(graph: &crate::coxeter::CoxeterGraph, letters: &[Generator]) -> Vec<usize> {
    let mut layer = Vec::with_capacity(letters.len());
    for (k, &b) in letters.iter().enumerate() {
        let depth = letters[..k]
            .iter()
            .zip(&layer)
            .filter(|(&a, _)| a == b || graph.adjacent(a, b))
            .map(|(_, &l): (_, &usize)| l + 1)
            .max()
            .unwrap_or(0);
        layer.push(depth);
    }
    layer
}

fn layers_of(graph: &crate::coxeter::CoxeterGraph, letters: &[Generator]) -> Vec<Vec<Generator>> {
    let idx = layer_indices(graph, letters);
    let depth = idx.iter().map(|&d| d + 1).max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth];
    for (&s, &d) in letters.iter().zip(&idx) {
        layers[d].push(s);
    }
    for l in &mut layers {
        l.sort_unstable();
    }
    layers
}

/// Normal form of a reduced fully commutative word.
pub fn cfnf(word: &Word) -> Result<FcElement> {
    FcElement::from_letters(word.graph(), word.letters())
}

/// A fully commutative element stored as its Cartier-Foata layers.
#[derive(Clone)]
pub struct FcElement {
    graph: GraphRef,
    layers: Vec<Vec<Generator>>,
}

impl FcElement {
    pub fn identity(graph: &GraphRef) -> Self {
        Self { graph: graph.clone(), layers: Vec::new() }
    }

    pub fn from_letters(graph: &GraphRef, letters: &[Generator]) -> Result<Self> {
        for &s in letters {
            graph.check_letter(s)?;
        }
        fc_check(graph, letters).into_result()?;
        Ok(Self::from_fc_letters(graph, letters))
    }

    /// Skips the FC test; callers guarantee the word is reduced and FC.
    pub(crate) fn from_fc_letters(graph: &GraphRef, letters: &[Generator]) -> Self {
        Self { graph: graph.clone(), layers: layers_of(graph, letters) }
    }

    pub fn parse(graph: &GraphRef, text: &str) -> Result<Self> {
        cfnf(&Word::parse(graph, text)?)
    }

    pub fn graph(&self) -> &GraphRef {
        &self.graph
    }

    pub fn layers(&self) -> &[Vec<Generator>] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.layers.is_empty()
    }

    /// The layers read in order, a reduced expression.
    pub fn letters(&self) -> Vec<Generator> {
        self.layers.concat()
    }

    pub fn word(&self) -> Word {
        Word::new(&self.graph, self.letters()).expect("layers hold valid generators")
    }

    pub fn left_descents(&self) -> Vec<Generator> {
        self.layers.first().cloned().unwrap_or_default()
    }

    pub fn right_descents(&self) -> Vec<Generator> {
        self.inverse().left_descents()
    }

    pub fn is_left_descent(&self, s: Generator) -> bool {
        self.layers.first().is_some_and(|l| l.contains(&s))
    }

    pub fn is_right_descent(&self, s: Generator) -> bool {
        self.right_descents().contains(&s)
    }

    pub fn inverse(&self) -> Self {
        let mut letters = self.letters();
        letters.reverse();
        Self::from_fc_letters(&self.graph, &letters)
    }

    /// Sorted set of generators occurring in the element.
    pub fn support(&self) -> Vec<Generator> {
        let mut s = self.letters();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// `s·w`, provided it is again reduced and FC.
    pub fn mul_left(&self, s: Generator) -> Result<Self> {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(s);
        letters.extend(self.letters());
        Self::from_letters(&self.graph, &letters)
    }

    /// `w·s`, provided it is again reduced and FC.
    pub fn mul_right(&self, s: Generator) -> Result<Self> {
        let mut letters = self.letters();
        letters.push(s);
        Self::from_letters(&self.graph, &letters)
    }

    /// `s·w` for a left descent `s`.
    pub fn remove_left(&self, s: Generator) -> Result<Self> {
        if !self.is_left_descent(s) {
            return Err(Error::IllegalMove(format!("s{s} is not a left descent of {self}")));
        }
        let mut letters = self.letters();
        let pos = letters.iter().position(|&x| x == s).expect("descent occurs");
        letters.remove(pos);
        Ok(Self::from_fc_letters(&self.graph, &letters))
    }

    /// `w·s` for a right descent `s`.
    pub fn remove_right(&self, s: Generator) -> Result<Self> {
        if !self.is_right_descent(s) {
            return Err(Error::IllegalMove(format!("s{s} is not a right descent of {self}")));
        }
        let mut letters = self.letters();
        let pos = letters.iter().rposition(|&x| x == s).expect("descent occurs");
        letters.remove(pos);
        Ok(Self::from_fc_letters(&self.graph, &letters))
    }

    pub fn to_repr(&self) -> FcElementRepr {
        FcElementRepr {
            family: self.graph.family().letter().to_string(),
            n: self.graph.n(),
            layers: self.layers.clone(),
        }
    }

    pub fn from_repr(repr: &FcElementRepr) -> Result<Self> {
        let family: Family = repr.family.parse()?;
        let graph = build_graph(family, repr.n)?;
        Self::from_layers(&graph, &repr.layers)
    }

    /// Accepts only layer sequences already in normal form.
    pub fn from_layers(graph: &GraphRef, layers: &[Vec<Generator>]) -> Result<Self> {
        let el = Self::from_letters(graph, &layers.concat())?;
        if el.layers != layers {
            return Err(Error::Parse(format!("layers {layers:?} are not in normal form")));
        }
        Ok(el)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_repr()).expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let repr: FcElementRepr =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_repr(&repr)
    }
}

/// JSON shape of an element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FcElementRepr {
    pub family: String,
    pub n: usize,
    pub layers: Vec<Vec<Generator>>,
}

impl PartialEq for FcElement {
    fn eq(&self, other: &Self) -> bool {
        self.layers == other.layers
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for FcElement {}

impl Hash for FcElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.layers.hash(state);
    }
}

impl PartialOrd for FcElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter elements first, then lexicographic on layers.
impl Ord for FcElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.layers.cmp(&other.layers))
    }
}

impl fmt::Debug for FcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FcElement({} {:?})", self.graph, self.layers)
    }
}

impl fmt::Display for FcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return f.write_str("e");
        }
        for layer in &self.layers {
            write!(f, "({})", format_letters(layer))?;
        }
        Ok(())
    }
}

impl Serialize for FcElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;

    fn d(n: usize) -> GraphRef {
        build_graph(Family::AffineD, n).unwrap()
    }

    fn b(n: usize) -> GraphRef {
        build_graph(Family::AffineB, n).unwrap()
    }

    #[test]
    fn empty_word_is_fc() {
        let g = d(2);
        assert!(is_fully_commutative(&Word::parse(&g, "").unwrap()));
        assert!(FcElement::parse(&g, "").unwrap().is_identity());
    }

    #[test]
    fn tst_in_b_is_fc() {
        for n in 2..6 {
            let g = b(n);
            let w = Word::new(&g, vec![n, n + 1, n]).unwrap();
            assert!(is_fully_commutative(&w));
            let w = Word::new(&g, vec![n + 1, n, n + 1]).unwrap();
            assert!(is_fully_commutative(&w));
            let w = Word::new(&g, vec![n, n + 1, n, n + 1]).unwrap();
            assert_eq!(fc_check(&g, w.letters()), FcCheck::NotFullyCommutative { s: n, t: n + 1 });
        }
    }

    #[test]
    fn braid_factor_in_d4() {
        let g = d(2);
        let w = Word::parse(&g, "2 0 2").unwrap();
        assert_eq!(fc_check(&g, w.letters()), FcCheck::NotFullyCommutative { s: 0, t: 2 });
        assert!(matches!(cfnf(&w), Err(Error::NotFullyCommutative { s: 0, t: 2 })));
    }

    #[test]
    fn hidden_braid_through_commutation() {
        let g = d(2);
        // 2 0 1 2 has no braid factor; 2 0 3 2 0 hides [20]_3 behind commuting 3
        assert!(fc_check(&g, &[2, 0, 1, 2]).is_fc());
        assert!(!fc_check(&g, &[0, 2, 3, 0]).is_fc());
    }

    #[test]
    fn repeated_letter_is_not_reduced() {
        let g = d(5);
        assert!(matches!(FcElement::parse(&g, "0 0"), Err(Error::NotReduced(0))));
        assert!(matches!(FcElement::parse(&g, "0 3 0"), Err(Error::NotReduced(0))));
        assert!(FcElement::parse(&g, "0 2 0").is_err());
    }

    #[test]
    fn w1_normal_form() {
        let g = d(5);
        let w = FcElement::parse(&g, "0 4 3 5 2 4 6 7 1").unwrap();
        assert_eq!(w.layers(), &[vec![0, 4], vec![3, 5], vec![2, 4, 6, 7], vec![1]]);
        assert_eq!(w.left_descents(), vec![0, 4]);
        assert_eq!(w.len(), 9);
    }

    #[test]
    fn w2_normal_form() {
        let g = b(5);
        let w = FcElement::parse(&g, "3 2 4 1 3 5 2 4 6 0 3 5 2 6").unwrap();
        assert_eq!(
            w.layers(),
            &[vec![3], vec![2, 4], vec![1, 3, 5], vec![2, 4, 6], vec![0, 3, 5], vec![2, 6]]
        );
    }

    #[test]
    fn zigzag_descents() {
        let g = d(2);
        let w = FcElement::parse(&g, "0 1 2 3 4").unwrap();
        assert_eq!(w.left_descents(), vec![0, 1]);
        assert_eq!(w.right_descents(), vec![3, 4]);
        assert!(FcElement::identity(&g).left_descents().is_empty());
    }

    #[test]
    fn inverse_of_two_letters() {
        let g = d(2);
        let w = FcElement::parse(&g, "0 2").unwrap();
        assert_eq!(w.inverse().layers(), &[vec![2], vec![0]]);
        assert!(FcElement::identity(&g).inverse().is_identity());
    }

    #[test]
    fn multiply_and_remove() {
        let g = d(2);
        let w = FcElement::parse(&g, "0 2").unwrap();
        assert_eq!(w.remove_left(0).unwrap(), FcElement::parse(&g, "2").unwrap());
        assert_eq!(w.remove_right(2).unwrap(), FcElement::parse(&g, "0").unwrap());
        assert!(w.remove_left(2).is_err());
        assert!(w.mul_left(2).is_err());
        assert_eq!(w.mul_right(1).unwrap().layers(), &[vec![0], vec![2], vec![1]]);
    }

    #[test]
    fn json_round_trip() {
        let g = d(5);
        let w = FcElement::parse(&g, "0 4 3 5 2 4 6 7 1").unwrap();
        let json = w.to_json();
        assert_eq!(
            json.to_string(),
            r#"{"family":"D","n":5,"layers":[[0,4],[3,5],[2,4,6,7],[1]]}"#
        );
        assert_eq!(FcElement::from_json(&json).unwrap(), w);
        let bad = serde_json::json!({"family":"D","n":5,"layers":[[3,5],[0,4]]});
        assert!(FcElement::from_json(&bad).is_err());
    }

    #[test]
    fn layers_satisfy_cover_condition() {
        let g = b(5);
        let w = FcElement::parse(&g, "3 2 4 1 3 5 2 4 6 0 3 5 2 6").unwrap();
        for pair in w.layers().windows(2) {
            for &t in &pair[1] {
                assert!(pair[0].iter().any(|&s| g.adjacent(s, t)));
            }
        }
        for layer in w.layers() {
            for (i, &s) in layer.iter().enumerate() {
                for &t in &layer[i + 1..] {
                    assert!(g.commute(s, t));
                }
            }
        }
    }
}
