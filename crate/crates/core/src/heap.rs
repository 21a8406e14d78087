//! Heaps of fully commutative elements.

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::coxeter::Generator;
use crate::element::{down_sets, FcElement};
use crate::error::{Error, Result};

/// Labeled poset on the letter occurrences of an element, indexed in the
/// order of its normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    labels: Vec<Generator>,
    down: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
}

pub fn heap_of(fc: &FcElement) -> Heap {
    let labels = fc.letters();
    let down = down_sets(fc.graph(), &labels);
    let mut covers = Vec::new();
    for k in 0..labels.len() {
        for j in down[k].iter() {
            let covered = down[k].iter().any(|i| i != j && down[i].contains(j));
            if !covered {
                covers.push((j, k));
            }
        }
    }
    Heap { labels, down, covers }
}

impl Heap {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Generator] {
        &self.labels
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict order `j < k`.
    pub fn less(&self, j: usize, k: usize) -> bool {
        self.down[k].contains(j)
    }

    pub fn comparable(&self, j: usize, k: usize) -> bool {
        self.less(j, k) || self.less(k, j)
    }

    pub fn down_set(&self, k: usize) -> &BitSet {
        &self.down[k]
    }

    /// Size of a largest antichain, via a maximum matching in the
    /// comparability graph and Dilworth's theorem.
    pub fn max_antichain_size(&self) -> usize {
        let r = self.size();
        let succ: Vec<Vec<usize>> =
            (0..r).map(|j| (j + 1..r).filter(|&k| self.less(j, k)).collect()).collect();
        let mut mate: Vec<Option<usize>> = vec![None; r];
        let mut matched = 0;
        for j in 0..r {
            let mut seen = vec![false; r];
            if augment(j, &succ, &mut mate, &mut seen) {
                matched += 1;
            }
        }
        r - matched
    }

    /// Every linear extension, read as a label word.
    pub fn linear_extensions(&self, limit: usize) -> Result<Vec<Vec<Generator>>> {
        let r = self.size();
        let mut out = Vec::new();
        let mut placed = vec![false; r];
        let mut word = Vec::with_capacity(r);
        self.extend(&mut placed, &mut word, &mut out, limit)?;
        Ok(out)
    }

    fn extend(
        &self,
        placed: &mut [bool],
        word: &mut Vec<Generator>,
        out: &mut Vec<Vec<Generator>>,
        limit: usize,
    ) -> Result<()> {
        if word.len() == self.size() {
            if out.len() >= limit {
                return Err(Error::Budget(limit));
            }
            out.push(word.clone());
            return Ok(());
        }
        for k in 0..self.size() {
            if !placed[k] && self.down[k].iter().all(|j| placed[j]) {
                placed[k] = true;
                word.push(self.labels[k]);
                self.extend(placed, word, out, limit)?;
                word.pop();
                placed[k] = false;
            }
        }
        Ok(())
    }

    pub fn to_repr(&self) -> HeapRepr {
        HeapRepr {
            labels: self.labels.clone(),
            covers: self.covers.iter().map(|&(j, k)| [j, k]).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_repr()).expect("plain data")
    }
}

fn augment(j: usize, succ: &[Vec<usize>], mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &k in &succ[j] {
        if seen[k] {
            continue;
        }
        seen[k] = true;
        if mate[k].is_none_or(|other| augment(other, succ, mate, seen)) {
            mate[k] = Some(j);
            return true;
        }
    }
    false
}

/// JSON shape of a heap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeapRepr {
    pub labels: Vec<Generator>,
    pub covers: Vec<[usize; 2]>,
}
