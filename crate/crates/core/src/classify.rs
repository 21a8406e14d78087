//! Pattern classifiers for irreducible elements, complete zigzags and weak
//! zigzags.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde_json::{json, Map, Value};

use crate::coxeter::{Family, Generator, GraphRef};
use crate::element::FcElement;
use crate::error::{Error, Result};
use crate::star::{is_irreducible, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZigzagParams {
    /// 1 for the form starting at `{s0, s1}`, 2 for the other fork.
    pub form: u8,
    pub k: usize,
    pub h: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CandyParams {
    /// Index of the last layer; the element has `m + 1` layers.
    pub m: usize,
    pub x0: Generator,
    /// Right fork letter of the first layer (type D̃ only).
    pub y0: Option<Generator>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibleClassD {
    CC,
    CZ(ZigzagParams),
    Candy(CandyParams),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibleClassBStar {
    CC,
    Candy(CandyParams),
    CZbullet(ZigzagParams),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibleClassBWeak {
    CCw,
    Candy(CandyParams),
    LeftCandy(CandyParams),
    CZ(ZigzagParams),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibleClassB {
    Star(IrreducibleClassBStar),
    Weak(IrreducibleClassBWeak),
}

fn zigzag_params(p: &ZigzagParams) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("form".into(), json!(p.form));
    m.insert("k".into(), json!(p.k));
    m.insert("h".into(), json!(p.h));
    m
}

fn candy_params(p: &CandyParams) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("m".into(), json!(p.m));
    m.insert("x0".into(), json!(p.x0));
    if let Some(y0) = p.y0 {
        m.insert("y0".into(), json!(y0));
    }
    m
}

fn class_json(name: &str, params: Map<String, Value>) -> Value {
    json!({ "class": name, "params": params })
}

impl IrreducibleClassD {
    pub fn name(&self) -> &'static str {
        match self {
            Self::CC => "CC",
            Self::CZ(_) => "CZ",
            Self::Candy(_) => "Candy",
        }
    }

    pub fn to_json(&self) -> Value {
        let params = match self {
            Self::CC => Map::new(),
            Self::CZ(p) => zigzag_params(p),
            Self::Candy(p) => candy_params(p),
        };
        class_json(self.name(), params)
    }
}

impl IrreducibleClassB {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Star(IrreducibleClassBStar::CC) => "CC",
            Self::Star(IrreducibleClassBStar::Candy(_)) => "Candy",
            Self::Star(IrreducibleClassBStar::CZbullet(_)) => "CZbullet",
            Self::Weak(IrreducibleClassBWeak::CCw) => "CCw",
            Self::Weak(IrreducibleClassBWeak::Candy(_)) => "Candy",
            Self::Weak(IrreducibleClassBWeak::LeftCandy(_)) => "LeftCandy",
            Self::Weak(IrreducibleClassBWeak::CZ(_)) => "CZ",
        }
    }

    pub fn to_json(&self) -> Value {
        let params = match self {
            Self::Star(IrreducibleClassBStar::CC) | Self::Weak(IrreducibleClassBWeak::CCw) => Map::new(),
            Self::Star(IrreducibleClassBStar::Candy(p))
            | Self::Weak(IrreducibleClassBWeak::Candy(p))
            | Self::Weak(IrreducibleClassBWeak::LeftCandy(p)) => candy_params(p),
            Self::Star(IrreducibleClassBStar::CZbullet(p)) | Self::Weak(IrreducibleClassBWeak::CZ(p)) => {
                zigzag_params(p)
            }
        };
        class_json(self.name(), params)
    }
}

impl fmt::Display for IrreducibleClassD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json().to_string())
    }
}

impl fmt::Display for IrreducibleClassB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json().to_string())
    }
}

/// Product of pairwise commuting generators.
pub fn is_cc(fc: &FcElement) -> bool {
    fc.layers().len() <= 1
}

/// The two sweeps of a complete zigzag, `A` then `B`.
fn sweeps(graph: &GraphRef) -> (Vec<Generator>, Vec<Generator>) {
    let n = graph.n();
    let top = match graph.family() {
        Family::AffineB => n + 1,
        _ => n + 2,
    };
    let a: Vec<Generator> = (2..=top).collect();
    let b: Vec<Generator> = (0..=n).rev().collect();
    (a, b)
}

/// Letters of the complete zigzag with the given parameters.
pub fn zigzag_letters(graph: &GraphRef, p: ZigzagParams) -> Result<Vec<Generator>> {
    let family = graph.family();
    if family == Family::Generic {
        return Err(Error::WrongFamily { expected: "D or B", found: family.letter() });
    }
    if p.k + p.h == 0 || p.h > 1 || !(1..=2).contains(&p.form) {
        return Err(Error::Unsupported(format!("no complete zigzag with parameters {p:?}")));
    }
    let n = graph.n();
    let (a, b) = sweeps(graph);
    let (mut out, first, second) = match (p.form, family) {
        (1, _) => (vec![0, 1], &a, &b),
        (_, Family::AffineD) => (vec![n + 2, n + 1], &b, &a),
        _ => (vec![n + 1], &b, &a),
    };
    for _ in 0..p.k {
        out.extend(first);
        out.extend(second);
    }
    if p.h == 1 {
        out.extend(first);
    }
    Ok(out)
}

pub fn complete_zigzag(graph: &GraphRef, p: ZigzagParams) -> Result<FcElement> {
    FcElement::from_letters(graph, &zigzag_letters(graph, p)?)
}

/// All complete zigzags of length at most `max_len`.
pub fn complete_zigzags(graph: &GraphRef, max_len: usize) -> Vec<(ZigzagParams, FcElement)> {
    let mut out = Vec::new();
    for form in 1..=2 {
        for k in 0.. {
            let mut any = false;
            for h in 0..=1 {
                let p = ZigzagParams { form, k, h };
                let Ok(letters) = zigzag_letters(graph, p) else { continue };
                if letters.len() <= max_len {
                    any = true;
                    out.push((p, FcElement::from_letters(graph, &letters).expect("zigzags are FC")));
                }
            }
            if !any && k > 0 {
                break;
            }
        }
    }
    out
}

pub fn zigzag_params_of(fc: &FcElement) -> Option<ZigzagParams> {
    if is_cc(fc) || fc.graph().family() == Family::Generic {
        return None;
    }
    complete_zigzags(fc.graph(), fc.len())
        .into_iter()
        .find(|(_, z)| z == fc)
        .map(|(p, _)| p)
}

fn check_layer(layer: &[Generator], base: &[Generator], extra: &[Generator]) -> bool {
    let mut want: Vec<Generator> = base.iter().chain(extra).copied().collect();
    want.sort_unstable();
    layer == want.as_slice()
}

/// Generic candy pattern: layers alternate between `odd` and `even ∪ {x_i}`
/// (and `{y_i}` when a right fork is given), with forks alternating.
fn candy_pattern(
    fc: &FcElement,
    even: &[Generator],
    odd: &[Generator],
    right_fork: Option<(Generator, Generator)>,
) -> Option<CandyParams> {
    let layers = fc.layers();
    if layers.len() < 3 || layers.len().is_multiple_of(2) {
        return None;
    }
    let m = layers.len() - 1;
    let pick = |layer: &[Generator], a: Generator, b: Generator| -> Option<Generator> {
        match (layer.contains(&a), layer.contains(&b)) {
            (true, false) => Some(a),
            (false, true) => Some(b),
            _ => None,
        }
    };
    let (mut prev_x, mut prev_y) = (None, None);
    let mut first = None;
    for (i, layer) in layers.iter().enumerate() {
        if i % 2 == 1 {
            if !check_layer(layer, odd, &[]) {
                return None;
            }
            continue;
        }
        let x = pick(layer, 0, 1)?;
        let mut extra = vec![x];
        let y = match right_fork {
            Some((a, b)) => {
                let y = pick(layer, a, b)?;
                extra.push(y);
                Some(y)
            }
            None => None,
        };
        if !check_layer(layer, even, &extra) || prev_x == Some(x) || (y.is_some() && prev_y == y) {
            return None;
        }
        if first.is_none() {
            first = Some((x, y));
        }
        prev_x = Some(x);
        prev_y = y;
    }
    let (x0, y0) = first?;
    Some(CandyParams { m, x0, y0 })
}

fn stepped(from: usize, to: usize) -> Vec<Generator> {
    (from..=to).step_by(2).collect()
}

pub fn candy_params_d(fc: &FcElement) -> Option<CandyParams> {
    let g = fc.graph();
    let n = g.n();
    if g.family() != Family::AffineD || n % 2 == 1 {
        return None;
    }
    candy_pattern(fc, &stepped(3, n - 1), &stepped(2, n), Some((n + 1, n + 2)))
}

pub fn candy_params_b(fc: &FcElement) -> Option<CandyParams> {
    let g = fc.graph();
    let n = g.n();
    if g.family() != Family::AffineB || n % 2 == 1 {
        return None;
    }
    candy_pattern(fc, &stepped(3, n + 1), &stepped(2, n), None)
}

pub fn left_candy_params_b(fc: &FcElement) -> Option<CandyParams> {
    let g = fc.graph();
    let n = g.n();
    if g.family() != Family::AffineB || n.is_multiple_of(2) {
        return None;
    }
    candy_pattern(fc, &stepped(3, n), &stepped(2, n + 1), None)
}

/// `CC`, or `s_n s_{n+1} v` / `s_{n+1} s_n v` with `v` commuting and free of
/// `s_n, s_{n+1}` and every neighbour of `s_n` (for `n = 2` that includes
/// `s_0, s_1`, not only `s_{n-1}`).
pub fn is_cc_w(fc: &FcElement) -> bool {
    if is_cc(fc) {
        return true;
    }
    let g = fc.graph();
    if g.family() != Family::AffineB {
        return false;
    }
    let n = g.n();
    let letters = fc.letters();
    let count = |s: Generator| letters.iter().filter(|&&x| x == s).count();
    if count(n) != 1 || count(n + 1) != 1 || g.neighbors(n).any(|t| t != n + 1 && count(t) != 0) {
        return false;
    }
    let rest: Vec<Generator> = letters.into_iter().filter(|&x| x != n && x != n + 1).collect();
    rest.iter().enumerate().all(|(i, &s)| rest[i + 1..].iter().all(|&t| g.commute(s, t)))
}

/// Complete zigzag of B̃ with `D_L = D_R = {s0, s1}`.
pub fn cz_bullet_params(fc: &FcElement) -> Option<ZigzagParams> {
    let p = zigzag_params_of(fc)?;
    (fc.left_descents() == [0, 1] && fc.right_descents() == [0, 1]).then_some(p)
}

pub fn classify_irreducible_d(fc: &FcElement) -> Result<IrreducibleClassD> {
    fc.graph().require(Family::AffineD)?;
    if !is_irreducible(fc, Mode::Star) {
        return Err(Error::NotIrreducible("star"));
    }
    if is_cc(fc) {
        Ok(IrreducibleClassD::CC)
    } else if let Some(p) = zigzag_params_of(fc) {
        Ok(IrreducibleClassD::CZ(p))
    } else if let Some(p) = candy_params_d(fc) {
        Ok(IrreducibleClassD::Candy(p))
    } else {
        Err(Error::Unclassified(fc.to_string()))
    }
}

pub fn classify_irreducible_b(fc: &FcElement, mode: Mode) -> Result<IrreducibleClassB> {
    fc.graph().require(Family::AffineB)?;
    if !is_irreducible(fc, mode) {
        return Err(Error::NotIrreducible(match mode {
            Mode::Star => "star",
            Mode::WeakStar => "weak star",
        }));
    }
    let class = match mode {
        Mode::Star => {
            if is_cc(fc) {
                Some(IrreducibleClassB::Star(IrreducibleClassBStar::CC))
            } else if let Some(p) = candy_params_b(fc) {
                Some(IrreducibleClassB::Star(IrreducibleClassBStar::Candy(p)))
            } else {
                cz_bullet_params(fc).map(|p| IrreducibleClassB::Star(IrreducibleClassBStar::CZbullet(p)))
            }
        }
        Mode::WeakStar => {
            if is_cc_w(fc) {
                Some(IrreducibleClassB::Weak(IrreducibleClassBWeak::CCw))
            } else if let Some(p) = candy_params_b(fc) {
                Some(IrreducibleClassB::Weak(IrreducibleClassBWeak::Candy(p)))
            } else if let Some(p) = left_candy_params_b(fc) {
                Some(IrreducibleClassB::Weak(IrreducibleClassBWeak::LeftCandy(p)))
            } else {
                zigzag_params_of(fc).map(|p| IrreducibleClassB::Weak(IrreducibleClassBWeak::CZ(p)))
            }
        }
    };
    class.ok_or_else(|| Error::Unclassified(fc.to_string()))
}

/// Every factor of length at least `min_len` of a complete zigzag of length
/// at most `max_len`.
pub fn zigzag_factors(graph: &GraphRef, max_len: usize, min_len: usize) -> HashSet<FcElement> {
    let mut seen: HashSet<FcElement> = HashSet::new();
    let mut queue: VecDeque<FcElement> = VecDeque::new();
    for (_, z) in complete_zigzags(graph, max_len) {
        if seen.insert(z.clone()) {
            queue.push_back(z);
        }
    }
    while let Some(u) = queue.pop_front() {
        if u.len() <= min_len {
            continue;
        }
        let lefts = u.left_descents().into_iter().map(|s| u.remove_left(s));
        let rights = u.right_descents().into_iter().map(|s| u.remove_right(s));
        for v in lefts.chain(rights) {
            let v = v.expect("descent removal");
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.retain(|v| v.len() >= min_len);
    seen
}

/// Search window used by [`is_weak_zigzag`] beyond the element's length.
pub fn weak_zigzag_window(graph: &GraphRef) -> usize {
    2 * (graph.n() + 1) + 2
}

pub fn is_weak_zigzag(fc: &FcElement) -> bool {
    if is_cc(fc) || fc.graph().family() == Family::Generic {
        return false;
    }
    let g = fc.graph();
    zigzag_factors(g, fc.len() + weak_zigzag_window(g), fc.len()).contains(fc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    fn el(g: &GraphRef, w: &str) -> FcElement {
        FcElement::parse(g, w).unwrap()
    }

    #[test]
    fn zigzag_lengths() {
        for n in 2..6 {
            let g = build_graph(Family::AffineD, n).unwrap();
            for (p, z) in complete_zigzags(&g, 40) {
                assert_eq!(z.len(), (2 * p.k + p.h) * (n + 1) + 2);
                let fork = if p.form == 1 { vec![0, 1] } else { vec![n + 1, n + 2] };
                assert_eq!(z.left_descents(), fork);
                assert_eq!(z.left_descents() == z.right_descents(), p.h == 0);
            }
        }
    }

    #[test]
    fn d6_zigzag() {
        let g = build_graph(Family::AffineD, 4).unwrap();
        let w = el(&g, "0 1 2 3 4 5 6");
        assert_eq!(
            classify_irreducible_d(&w).unwrap(),
            IrreducibleClassD::CZ(ZigzagParams { form: 1, k: 0, h: 1 })
        );
        let w2 = el(&g, "5 6 4 3 2 0 1 2 3 4 5 6");
        assert!(matches!(classify_irreducible_d(&w2).unwrap(), IrreducibleClassD::CZ(p) if p.form == 2 && p.k == 1));
    }

    #[test]
    fn d4_candy() {
        let g = build_graph(Family::AffineD, 2).unwrap();
        let w = el(&g, "0 4 2 1 3");
        let c = classify_irreducible_d(&w).unwrap();
        assert_eq!(c, IrreducibleClassD::Candy(CandyParams { m: 2, x0: 0, y0: Some(4) }));
        assert_eq!(c.to_json().to_string(), r#"{"class":"Candy","params":{"m":2,"x0":0,"y0":4}}"#);
    }

    #[test]
    fn d10_commuting() {
        let g = build_graph(Family::AffineD, 8).unwrap();
        let c = classify_irreducible_d(&el(&g, "0 1 5")).unwrap();
        assert_eq!(c, IrreducibleClassD::CC);
        assert_eq!(c.to_json().to_string(), r#"{"class":"CC","params":{}}"#);
    }

    #[test]
    fn reducible_is_rejected() {
        let g = build_graph(Family::AffineD, 2).unwrap();
        assert_eq!(classify_irreducible_d(&el(&g, "0 2")).unwrap_err(), Error::NotIrreducible("star"));
        let b = build_graph(Family::AffineB, 2).unwrap();
        assert!(matches!(classify_irreducible_d(&FcElement::identity(&b)), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn b_zigzag_modes() {
        for n in 2..6 {
            let g = build_graph(Family::AffineB, n).unwrap();
            // s0 s1 A: weak irreducible complete zigzag, star reducible
            let letters: Vec<usize> = [0, 1].into_iter().chain(2..=n + 1).collect();
            let w = FcElement::from_letters(&g, &letters).unwrap();
            assert!(matches!(
                classify_irreducible_b(&w, Mode::WeakStar).unwrap(),
                IrreducibleClassB::Weak(IrreducibleClassBWeak::CZ(_))
            ));
            assert!(classify_irreducible_b(&w, Mode::Star).is_err());
            let p = ZigzagParams { form: 1, k: 1, h: 0 };
            let z = complete_zigzag(&g, p).unwrap();
            assert_eq!(
                classify_irreducible_b(&z, Mode::Star).unwrap(),
                IrreducibleClassB::Star(IrreducibleClassBStar::CZbullet(p))
            );
        }
    }

    #[test]
    fn b_cc_w() {
        let g = build_graph(Family::AffineB, 5).unwrap();
        let w = el(&g, "5 6 0 1 3");
        assert!(is_cc_w(&w));
        assert_eq!(
            classify_irreducible_b(&w, Mode::WeakStar).unwrap(),
            IrreducibleClassB::Weak(IrreducibleClassBWeak::CCw)
        );
        assert!(!is_cc_w(&el(&g, "5 6 4")));
        assert!(!is_cc_w(&el(&g, "5 6 0 2 1")));
        let g = build_graph(Family::AffineB, 2).unwrap();
        let w = el(&g, "2 3 0");
        assert!(!is_cc_w(&w));
        assert!(!is_irreducible(&w, Mode::WeakStar));
    }

    #[test]
    fn b6_left_candy() {
        let g = build_graph(Family::AffineB, 5).unwrap();
        let v2 = el(&g, "1 3 5 2 4 6 0 3 5");
        assert_eq!(
            classify_irreducible_b(&v2, Mode::WeakStar).unwrap(),
            IrreducibleClassB::Weak(IrreducibleClassBWeak::LeftCandy(CandyParams { m: 2, x0: 1, y0: None }))
        );
    }

    #[test]
    fn weak_zigzags() {
        let g = build_graph(Family::AffineD, 4).unwrap();
        assert!(is_weak_zigzag(&el(&g, "0 1 2 3")));
        assert!(is_weak_zigzag(&el(&g, "2 0 1 2 3 4 5 6")));
        assert!(is_weak_zigzag(&el(&g, "3 4 5 6 4 3 2 0 1 2 3 4 6")));
        assert!(!is_weak_zigzag(&el(&g, "0 1")));
        assert!(!is_weak_zigzag(&FcElement::identity(&g)));
        let d4 = build_graph(Family::AffineD, 2).unwrap();
        assert!(!is_weak_zigzag(&el(&d4, "0 4 2 1 3")));
    }
}
