//! Brute-force oracles. Nothing here calls the heap, normal form or star
//! code of the library; the oracles work on raw words and the bond matrix.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::ops::{Add, Mul, Neg, Sub};

use crate::coxeter::{CoxeterGraph, Generator, INFINITE_BOND};
use crate::error::{Error, Result};

/// `a + b√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    pub a: i64,
    pub b: i64,
}

impl Surd {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn signum(self) -> Ordering {
        let (sa, sb) = (self.a.cmp(&0), self.b.cmp(&0));
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            // opposite signs: compare a² with 2b²
            (s, _) => {
                let (a2, b2) = (self.a as i128 * self.a as i128, 2 * self.b as i128 * self.b as i128);
                match a2.cmp(&b2) {
                    Ordering::Greater => s,
                    Ordering::Less => s.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }
}

impl Add for Surd {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Surd {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Surd {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for Surd {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

/// The Tits representation on the root span, with twice the bilinear form
/// stored exactly.
#[derive(Debug, Clone)]
pub struct GeometricRep {
    form: Vec<Vec<Surd>>,
}

/// Matrix of an element on the simple roots, a faithful key.
pub type ElementKey = Vec<Vec<Surd>>;

impl GeometricRep {
    pub fn new(graph: &CoxeterGraph) -> Result<Self> {
        let r = graph.rank();
        let mut form = vec![vec![Surd::default(); r]; r];
        for s in 0..r {
            for t in 0..r {
                form[s][t] = match graph.m(s, t) {
                    1 => Surd::new(2, 0),
                    2 => Surd::new(0, 0),
                    3 => Surd::new(-1, 0),
                    4 => Surd::new(0, -1),
                    INFINITE_BOND => Surd::new(-2, 0),
                    m => return Err(Error::Unsupported(format!("bond {m} in the geometric oracle"))),
                };
            }
        }
        Ok(Self { form })
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    pub fn reflect(&self, s: Generator, v: &mut [Surd]) {
        let c = (0..v.len()).fold(Surd::default(), |acc, t| acc + self.form[s][t] * v[t]);
        v[s] = v[s] - c;
    }

    /// `w(v)` for `w` the product of `word`.
    pub fn act(&self, word: &[Generator], v: &mut [Surd]) {
        for &s in word.iter().rev() {
            self.reflect(s, v);
        }
    }

    fn simple_root(&self, s: Generator) -> Vec<Surd> {
        let mut v = vec![Surd::default(); self.rank()];
        v[s] = Surd::new(1, 0);
        v
    }

    fn is_positive(v: &[Surd]) -> bool {
        v.iter().all(|c| c.signum() != Ordering::Less)
    }

    /// `ℓ(ws) > ℓ(w)`.
    pub fn extends(&self, word: &[Generator], s: Generator) -> bool {
        let mut v = self.simple_root(s);
        self.act(word, &mut v);
        Self::is_positive(&v)
    }

    pub fn is_reduced(&self, word: &[Generator]) -> bool {
        (0..word.len()).all(|j| self.extends(&word[..j], word[j]))
    }

    pub fn key(&self, word: &[Generator]) -> ElementKey {
        (0..self.rank())
            .map(|t| {
                let mut v = self.simple_root(t);
                self.act(word, &mut v);
                v
            })
            .collect()
    }
}

/// Every word obtained from `word` by swapping adjacent commuting letters.
pub fn commutation_class(graph: &CoxeterGraph, word: &[Generator]) -> HashSet<Vec<Generator>> {
    let bond = graph.bond_matrix();
    let mut seen: HashSet<Vec<Generator>> = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if bond[w[i]][w[i + 1]] == 2 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

fn has_braid_factor(graph: &CoxeterGraph, word: &[Generator]) -> bool {
    let bond = graph.bond_matrix();
    (0..word.len()).any(|i| {
        let (s, t) = (word[i], word.get(i + 1).copied().unwrap_or(word[i]));
        let m = bond[s][t];
        if s == t || m < 3 || m == INFINITE_BOND {
            return false;
        }
        let m = m as usize;
        i + m <= word.len() && (0..m).all(|j| word[i + j] == if j % 2 == 0 { s } else { t })
    })
}

/// Full commutativity straight from the definition: a reduced word none of
/// whose commutation-equivalent words holds a braid factor.
pub fn is_fc_word(graph: &CoxeterGraph, rep: &GeometricRep, word: &[Generator]) -> bool {
    rep.is_reduced(word) && !commutation_class(graph, word).iter().any(|w| has_braid_factor(graph, w))
}

/// FC elements by length, as one representative word each, found by a
/// breadth-first search over group elements.
pub fn fc_words_by_length(graph: &CoxeterGraph, max_len: usize) -> Result<Vec<Vec<Vec<Generator>>>> {
    let rep = GeometricRep::new(graph)?;
    let mut out = vec![vec![Vec::new()]];
    let mut frontier: Vec<Vec<Generator>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut seen: HashSet<ElementKey> = HashSet::new();
        let mut next = Vec::new();
        for w in &frontier {
            for s in graph.generators() {
                if !rep.extends(w, s) {
                    continue;
                }
                let mut ws = w.clone();
                ws.push(s);
                if seen.insert(rep.key(&ws)) {
                    next.push(ws);
                }
            }
        }
        // every FC element has only FC prefixes
        next.retain(|w| is_fc_word(graph, &rep, w));
        out.push(next.clone());
        frontier = next;
    }
    Ok(out)
}

/// Strict order of the heap of `word`, closed transitively.
pub fn heap_order(graph: &CoxeterGraph, word: &[Generator]) -> Vec<Vec<bool>> {
    let bond = graph.bond_matrix();
    let r = word.len();
    let mut less = vec![vec![false; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            less[i][j] = word[i] == word[j] || bond[word[i]][word[j]] != 2;
        }
    }
    for k in 0..r {
        for i in 0..r {
            if less[i][k] {
                for j in 0..r {
                    if less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
    }
    less
}

/// Number of linear extensions, by dynamic programming over order ideals.
pub fn count_linear_extensions(less: &[Vec<bool>]) -> u64 {
    let r = less.len();
    assert!(r < 32, "poset too large");
    let preds: Vec<u32> =
        (0..r).map(|j| (0..r).filter(|&i| less[i][j]).fold(0u32, |m, i| m | (1 << i))).collect();
    let mut memo: HashMap<u32, u64> = HashMap::new();
    fn go(mask: u32, full: u32, preds: &[u32], memo: &mut HashMap<u32, u64>) -> u64 {
        if mask == full {
            return 1;
        }
        if let Some(&c) = memo.get(&mask) {
            return c;
        }
        let mut total = 0;
        for (j, &p) in preds.iter().enumerate() {
            if mask & (1 << j) == 0 && p & !mask == 0 {
                total += go(mask | (1 << j), full, preds, memo);
            }
        }
        memo.insert(mask, total);
        total
    }
    let full = if r == 0 { 0 } else { u32::MAX >> (32 - r) };
    go(0, full, &preds, &mut memo)
}

/// Largest antichain, by trying every subset.
pub fn max_antichain_brute(less: &[Vec<bool>]) -> usize {
    let r = less.len();
    let mut best = 0;
    for mask in 0u32..(1u32 << r) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
        let anti = members
            .iter()
            .enumerate()
            .all(|(x, &i)| members[x + 1..].iter().all(|&j| !less[i][j] && !less[j][i]));
        if anti {
            best = size;
        }
    }
    best
}

/// Most adjacent `{a, b}` pairs over all reduced expressions.
pub fn max_pair_factors(graph: &CoxeterGraph, word: &[Generator], a: Generator, b: Generator) -> usize {
    commutation_class(graph, word)
        .iter()
        .map(|w| w.windows(2).filter(|p| (p[0] == a && p[1] == b) || (p[0] == b && p[1] == a)).count())
        .max()
        .unwrap_or(0)
}

/// The textual embedding rule applied to every reduced expression holding
/// the most braid triples; returns the distinct FC images in the target.
pub fn phi_textual(
    source: &CoxeterGraph,
    target: &CoxeterGraph,
    word: &[Generator],
) -> Result<BTreeSet<Vec<Generator>>> {
    let n = source.n();
    let triples = |w: &[Generator]| -> Vec<usize> {
        (0..w.len().saturating_sub(2))
            .filter(|&i| {
                (w[i], w[i + 1], w[i + 2]) == (n + 1, n, n + 1) || (w[i], w[i + 1], w[i + 2]) == (n, n + 1, n)
            })
            .collect()
    };
    let class = commutation_class(source, word);
    let most = class.iter().map(|w| triples(w).len()).max().unwrap_or(0);
    let rep = GeometricRep::new(target)?;
    let mut images: HashMap<ElementKey, Vec<Generator>> = HashMap::new();
    for w in class.iter().filter(|w| triples(w).len() == most) {
        let starts = triples(w);
        let mut out = Vec::new();
        for (i, &s) in w.iter().enumerate() {
            let in_triple = |off: usize| i >= off && starts.contains(&(i - off));
            if s == n + 1 && in_triple(2) && w[i - 2] == n + 1 {
                out.push(n + 2);
            } else if s == n + 1 && in_triple(1) && w[i - 1] == n {
                out.extend([n + 1, n + 2]);
            } else {
                out.push(s);
            }
        }
        if is_fc_word(target, &rep, &out) {
            images.entry(rep.key(&out)).or_insert(out);
        }
    }
    Ok(images.into_values().collect())
}
