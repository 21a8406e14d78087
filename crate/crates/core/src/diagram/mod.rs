//! Decorated Temperley-Lieb diagrams of type D̃ₙ₊₂.

mod rewrite;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::{json, Map, Value};

use crate::coxeter::{Family, Generator};
use crate::element::FcElement;
use crate::error::{Error, Result};

pub use rewrite::{canonicalize, canonicalize_with, rule_instances, Rule, Site, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    North,
    South,
}

/// A boundary node; `index` runs over `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub face: Face,
    pub index: usize,
}

impl Endpoint {
    pub fn north(index: usize) -> Self {
        Self { face: Face::North, index }
    }

    pub fn south(index: usize) -> Self {
        Self { face: Face::South, index }
    }

    /// Position in the boundary circle `N1..Nk, Sk..S1`.
    fn circle_pos(self, k: usize) -> usize {
        match self.face {
            Face::North => self.index - 1,
            Face::South => 2 * k - self.index,
        }
    }

    fn to_json(self) -> Value {
        let face = match self.face {
            Face::North => "N",
            Face::South => "S",
        };
        json!([face, self.index])
    }

    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad endpoint {v}"));
        let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
        let face = match arr[0].as_str() {
            Some("N") => Face::North,
            Some("S") => Face::South,
            _ => return Err(bad()),
        };
        let index = arr[1].as_u64().ok_or_else(bad)? as usize;
        Ok(Self { face, index })
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.face {
            Face::North => write!(f, "N{}", self.index),
            Face::South => write!(f, "S{}", self.index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dec {
    Black,
    White,
}

impl Dec {
    pub fn code(self) -> char {
        match self {
            Dec::Black => 'b',
            Dec::White => 'w',
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Dec::Black => '•',
            Dec::White => '◦',
        }
    }

    fn from_code(c: char) -> Result<Self> {
        match c {
            'b' => Ok(Dec::Black),
            'w' => Ok(Dec::White),
            other => Err(Error::Parse(format!("bad decoration {other:?}"))),
        }
    }
}

/// A decoration with the height of the layer it was drawn in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mark {
    pub dec: Dec,
    pub height: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: Endpoint,
    pub to: Endpoint,
    /// Read from `from` to `to`.
    pub marks: Vec<Mark>,
}

impl Edge {
    pub fn is_north_cap(&self) -> bool {
        self.from.face == Face::North && self.to.face == Face::North
    }

    pub fn is_propagating(&self) -> bool {
        self.from.face != self.to.face
    }

    pub fn dec_string(&self) -> String {
        dec_string(&self.marks)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    /// Read cyclically from an arbitrary start.
    pub marks: Vec<Mark>,
}

impl Loop {
    /// Census key: the least rotation or reflection of the cyclic word.
    pub fn key(&self) -> String {
        let word: Vec<char> = self.marks.iter().map(|m| m.dec.code()).collect();
        let len = word.len();
        let mut best: Option<String> = None;
        for dir in [false, true] {
            for r in 0..len.max(1) {
                let s: String = (0..len)
                    .map(|i| if dir { word[(r + len - i) % len] } else { word[(r + i) % len] })
                    .collect();
                if best.as_ref().is_none_or(|b| s < *b) {
                    best = Some(s);
                }
            }
        }
        best.unwrap_or_default()
    }
}

fn dec_string(marks: &[Mark]) -> String {
    marks.iter().map(|m| m.dec.code()).collect()
}

/// A monomial `δ^delta_exp · D` with `D` a decorated pseudo diagram.
#[derive(Debug, Clone)]
pub struct DecoratedDiagram {
    pub k: usize,
    pub edges: Vec<Edge>,
    pub loops: Vec<Loop>,
    pub delta_exp: u32,
    /// Number of heights used by marks, so stacked diagrams stay ordered.
    pub depth: u32,
}

/// A maximal band of heights holding marks of one colour, with the sites of
/// those marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strip {
    pub dec: Dec,
    pub sites: Vec<String>,
}

/// Canonical comparison data. Heights are forgotten except, when exactly one
/// north cap is present, through the vertical order of strips.
type DiagramKey = (usize, Vec<(Endpoint, Endpoint, String)>, BTreeMap<String, usize>, u32, Option<Vec<Strip>>);

/// A mark awaiting a height: (is loop, site index, mark index).
type Slot = (bool, usize, usize);

fn edge_site(e: &Edge, j: usize) -> String {
    format!("{}-{}#{j}", e.from, e.to)
}

fn loop_site(l: &Loop) -> String {
    format!("loop:{}", l.key())
}

impl DecoratedDiagram {
    pub fn identity(k: usize) -> Self {
        let edges = (1..=k)
            .map(|i| Edge { from: Endpoint::north(i), to: Endpoint::south(i), marks: Vec::new() })
            .collect();
        Self { k, edges, loops: Vec::new(), delta_exp: 0, depth: 0 }
    }

    pub fn key(&self) -> DiagramKey {
        let mut edges: Vec<_> = self.edges.iter().map(|e| (e.from, e.to, e.dec_string())).collect();
        edges.sort();
        let strips = (a_value(self) == 1).then(|| self.strips());
        (self.k, edges, self.census(), self.delta_exp, strips)
    }

    /// Marks bottom to top, grouped into maximal runs of one colour.
    pub fn strips(&self) -> Vec<Strip> {
        let mut marks: Vec<(u32, Dec, String)> = Vec::new();
        for e in &self.edges {
            marks.extend(e.marks.iter().enumerate().map(|(j, m)| (m.height, m.dec, edge_site(e, j))));
        }
        for l in &self.loops {
            marks.extend(l.marks.iter().map(|m| (m.height, m.dec, loop_site(l))));
        }
        marks.sort_by_key(|m| m.0);
        let mut strips: Vec<Strip> = Vec::new();
        for (_, dec, site) in marks {
            match strips.last_mut() {
                Some(s) if s.dec == dec => s.sites.push(site),
                _ => strips.push(Strip { dec, sites: vec![site] }),
            }
        }
        for s in &mut strips {
            s.sites.sort();
        }
        strips
    }

    /// Loop counts by key; `b`, `w` and `bw` are always present.
    pub fn census(&self) -> BTreeMap<String, usize> {
        let mut c: BTreeMap<String, usize> = ["b", "w", "bw"].iter().map(|s| (s.to_string(), 0)).collect();
        for l in &self.loops {
            *c.entry(l.key()).or_default() += 1;
        }
        c
    }

    pub fn loops_of(&self, key: &str) -> usize {
        self.loops.iter().filter(|l| l.key() == key).count()
    }

    pub fn black_loops(&self) -> usize {
        self.loops_of("b")
    }

    pub fn white_loops(&self) -> usize {
        self.loops_of("w")
    }

    pub fn mixed_loops(&self) -> usize {
        self.loops_of("bw")
    }

    pub fn undecorated_loops(&self) -> usize {
        self.loops_of("")
    }

    pub fn with_delta(&self, delta_exp: u32) -> Self {
        Self { delta_exp, ..self.clone() }
    }

    /// Checks that the edges form a planar perfect matching.
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for e in &self.edges {
            for p in [e.from, e.to] {
                if p.index == 0 || p.index > self.k {
                    return Err(Error::DiagramIndex { index: p.index, max: self.k });
                }
                if !seen.insert(p) {
                    return Err(Error::Parse(format!("endpoint {p} used twice")));
                }
            }
        }
        if seen.len() != 2 * self.k {
            return Err(Error::Parse("edges do not cover every node".into()));
        }
        let chords: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (e.from.circle_pos(self.k), e.to.circle_pos(self.k));
                (a.min(b), a.max(b))
            })
            .collect();
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::NonPlanar);
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut edges: Vec<&Edge> = self.edges.iter().collect();
        edges.sort_by_key(|e| (e.from, e.to));
        let edges: Vec<Value> = edges
            .iter()
            .map(|e| json!({"from": e.from.to_json(), "to": e.to.to_json(), "dec": e.dec_string()}))
            .collect();
        let census = self.census();
        let mut loops = Map::new();
        for key in ["b", "w", "bw"] {
            loops.insert(key.into(), json!(census[key]));
        }
        for (key, count) in census.iter().filter(|(k, _)| !matches!(k.as_str(), "b" | "w" | "bw")) {
            loops.insert(key.clone(), json!(count));
        }
        let mut out = json!({"k": self.k, "edges": edges, "loops": loops, "delta": self.delta_exp});
        if a_value(self) == 1 {
            let strips: Vec<Value> = self
                .strips()
                .iter()
                .map(|s| json!({"dec": s.dec.code().to_string(), "sites": s.sites}))
                .collect();
            out["strips"] = json!(strips);
        }
        out
    }

    /// Parses the JSON shape produced by [`to_json`](Self::to_json). Marks
    /// get the index of their strip as height, or 0 without strips.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("diagram JSON: {what}"));
        let k = v["k"].as_u64().ok_or_else(|| bad("k"))? as usize;
        let marks = |s: &str| -> Result<Vec<Mark>> {
            s.chars().map(|c| Ok(Mark { dec: Dec::from_code(c)?, height: 0 })).collect()
        };
        let mut edges = Vec::new();
        for e in v["edges"].as_array().ok_or_else(|| bad("edges"))? {
            edges.push(Edge {
                from: Endpoint::from_json(&e["from"])?,
                to: Endpoint::from_json(&e["to"])?,
                marks: marks(e["dec"].as_str().ok_or_else(|| bad("dec"))?)?,
            });
        }
        let mut loops = Vec::new();
        for (key, count) in v["loops"].as_object().ok_or_else(|| bad("loops"))? {
            for _ in 0..count.as_u64().ok_or_else(|| bad("loop count"))? {
                loops.push(Loop { marks: marks(key)? });
            }
        }
        let delta = v["delta"].as_u64().ok_or_else(|| bad("delta"))? as u32;
        let mut d = Self { k, edges, loops, delta_exp: delta, depth: 1 };
        d.validate()?;
        if let Some(strips) = v.get("strips").and_then(Value::as_array) {
            d.place_strips(strips)?;
        }
        Ok(d)
    }

    fn place_strips(&mut self, strips: &[Value]) -> Result<()> {
        let bad = || Error::Parse("diagram JSON: strips".into());
        // (site, colour) -> marks not yet placed
        let mut free: BTreeMap<(String, Dec), VecDeque<Slot>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for (j, m) in e.marks.iter().enumerate() {
                free.entry((edge_site(e, j), m.dec)).or_default().push_back((false, i, j));
            }
        }
        for (i, l) in self.loops.iter().enumerate() {
            for (j, m) in l.marks.iter().enumerate() {
                free.entry((loop_site(l), m.dec)).or_default().push_back((true, i, j));
            }
        }
        for (h, strip) in strips.iter().enumerate() {
            let dec = Dec::from_code(strip["dec"].as_str().and_then(|s| s.chars().next()).ok_or_else(bad)?)?;
            for site in strip["sites"].as_array().ok_or_else(bad)? {
                let site = site.as_str().ok_or_else(bad)?.to_string();
                let (is_loop, i, j) = free.get_mut(&(site, dec)).and_then(VecDeque::pop_front).ok_or_else(bad)?;
                let mark = if is_loop { &mut self.loops[i].marks[j] } else { &mut self.edges[i].marks[j] };
                mark.height = h as u32;
            }
        }
        if free.values().any(|q| !q.is_empty()) {
            return Err(bad());
        }
        self.depth = strips.len() as u32;
        Ok(())
    }

    /// Nodes as columns, one row per face, edges named by letters.
    pub fn render_ascii(&self) -> String {
        let mut edges: Vec<&Edge> = self.edges.iter().collect();
        edges.sort_by_key(|e| (e.from, e.to));
        let name = |i: usize| (b'A' + (i % 26) as u8) as char;
        let mut north = vec!['?'; self.k];
        let mut south = vec!['?'; self.k];
        for (i, e) in edges.iter().enumerate() {
            for p in [e.from, e.to] {
                match p.face {
                    Face::North => north[p.index - 1] = name(i),
                    Face::South => south[p.index - 1] = name(i),
                }
            }
        }
        let row = |cells: &[char]| cells.iter().map(|c| format!("{c:>3}")).collect::<String>();
        let mut out = String::new();
        out.push_str(&format!("    {}\n", (1..=self.k).map(|i| format!("{i:>3}")).collect::<String>()));
        out.push_str(&format!("N  {}\n", row(&north)));
        out.push_str(&format!("S  {}\n", row(&south)));
        for (i, e) in edges.iter().enumerate() {
            let dec = e.dec_string();
            out.push_str(&format!(
                "{}: {} - {}{}\n",
                name(i),
                e.from,
                e.to,
                if dec.is_empty() { String::new() } else { format!("  [{dec}]") }
            ));
        }
        let census: Vec<String> = self.census().iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("loops: {}  delta: {}  a: {}\n", census.join(" "), self.delta_exp, a_value(self)));
        if a_value(self) == 1 {
            let strips: Vec<String> =
                self.strips().iter().map(|s| format!("{}[{}]", s.dec.code(), s.sites.join(" "))).collect();
            out.push_str(&format!("strips: {}\n", strips.join(" ")));
        }
        out.push_str("legend: b = •, w = ◦\n");
        out
    }
}

impl PartialEq for DecoratedDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for DecoratedDiagram {}

impl Hash for DecoratedDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Display for DecoratedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json().to_string())
    }
}

/// The generator `D_i` of the diagram algebra on `n + 2` nodes.
pub fn simple_diagram(i: usize, n: usize) -> Result<DecoratedDiagram> {
    let k = n + 2;
    if i > k {
        return Err(Error::DiagramIndex { index: i, max: k });
    }
    let (left, dec) = match i {
        0 => (1, Some(Dec::Black)),
        i if i == k => (k - 1, Some(Dec::White)),
        i => (i, None),
    };
    let mark = |height| dec.map(|dec| Mark { dec, height }).into_iter().collect::<Vec<_>>();
    let mut edges = vec![
        Edge { from: Endpoint::north(left), to: Endpoint::north(left + 1), marks: mark(0) },
        Edge { from: Endpoint::south(left), to: Endpoint::south(left + 1), marks: mark(1) },
    ];
    for j in (1..=k).filter(|&j| j != left && j != left + 1) {
        edges.push(Edge { from: Endpoint::north(j), to: Endpoint::south(j), marks: Vec::new() });
    }
    edges.sort_by_key(|e| (e.from, e.to));
    Ok(DecoratedDiagram { k, edges, loops: Vec::new(), delta_exp: 0, depth: 2 })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Top,
    Bottom,
}

enum Walk {
    Outer(Endpoint),
    Closed,
    Visited,
}

struct Stack<'a> {
    top: &'a [Edge],
    bottom: &'a [Edge],
    top_at: BTreeMap<Endpoint, (usize, bool)>,
    bottom_at: BTreeMap<Endpoint, (usize, bool)>,
    used_top: Vec<bool>,
    used_bottom: Vec<bool>,
}

fn endpoint_index(edges: &[Edge]) -> BTreeMap<Endpoint, (usize, bool)> {
    let mut m = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        m.insert(e.from, (i, true));
        m.insert(e.to, (i, false));
    }
    m
}

impl Stack<'_> {
    /// Follows the path from `at` until it leaves through an outer node or
    /// comes back to an edge already taken.
    fn walk(&mut self, mut part: Part, mut at: Endpoint, marks: &mut Vec<Mark>) -> Walk {
        let mut steps = 0;
        loop {
            let (edges, map, used) = match part {
                Part::Top => (self.top, &self.top_at, &mut self.used_top),
                Part::Bottom => (self.bottom, &self.bottom_at, &mut self.used_bottom),
            };
            let (ei, at_from) = map[&at];
            if used[ei] {
                return if steps == 0 { Walk::Visited } else { Walk::Closed };
            }
            used[ei] = true;
            steps += 1;
            let e = &edges[ei];
            let other = if at_from {
                marks.extend(e.marks.iter().copied());
                e.to
            } else {
                marks.extend(e.marks.iter().rev().copied());
                e.from
            };
            match (part, other.face) {
                (Part::Top, Face::North) | (Part::Bottom, Face::South) => return Walk::Outer(other),
                (Part::Top, Face::South) => {
                    part = Part::Bottom;
                    at = Endpoint::north(other.index);
                }
                (Part::Bottom, Face::North) => {
                    part = Part::Top;
                    at = Endpoint::south(other.index);
                }
            }
        }
    }
}

/// Stacks `top` above `bottom` and joins the paths through the middle
/// nodes, without rewriting.
pub fn compose_raw(top: &DecoratedDiagram, bottom: &DecoratedDiagram) -> Result<DecoratedDiagram> {
    if top.k != bottom.k {
        return Err(Error::RankMismatch(top.k, bottom.k));
    }
    let k = top.k;
    let shift = top.depth;
    let lift = |marks: &[Mark]| -> Vec<Mark> {
        marks.iter().map(|m| Mark { dec: m.dec, height: m.height + shift }).collect()
    };
    let bottom_edges: Vec<Edge> =
        bottom.edges.iter().map(|e| Edge { from: e.from, to: e.to, marks: lift(&e.marks) }).collect();
    let mut stack = Stack {
        top: &top.edges,
        bottom: &bottom_edges,
        top_at: endpoint_index(&top.edges),
        bottom_at: endpoint_index(&bottom_edges),
        used_top: vec![false; top.edges.len()],
        used_bottom: vec![false; bottom_edges.len()],
    };

    let mut edges = Vec::new();
    let starts = (1..=k)
        .map(|i| (Part::Top, Endpoint::north(i)))
        .chain((1..=k).map(|i| (Part::Bottom, Endpoint::south(i))));
    for (part, start) in starts {
        let mut marks = Vec::new();
        let Walk::Outer(end) = stack.walk(part, start, &mut marks) else { continue };
        let (from, to) = if start <= end {
            (start, end)
        } else {
            marks.reverse();
            (end, start)
        };
        edges.push(Edge { from, to, marks });
    }
    let mut loops: Vec<Loop> = top.loops.clone();
    loops.extend(bottom.loops.iter().map(|l| Loop { marks: lift(&l.marks) }));
    for i in 1..=k {
        let mut marks = Vec::new();
        if let Walk::Closed = stack.walk(Part::Top, Endpoint::south(i), &mut marks) {
            loops.push(Loop { marks });
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    Ok(DecoratedDiagram {
        k,
        edges,
        loops,
        delta_exp: top.delta_exp + bottom.delta_exp,
        depth: top.depth + bottom.depth,
    })
}

/// Product `top · bottom`, rewritten to canonical form.
pub fn compose(top: &DecoratedDiagram, bottom: &DecoratedDiagram) -> Result<DecoratedDiagram> {
    canonicalize(&compose_raw(top, bottom)?)
}

/// `D_w`, the product of simple diagrams along the normal form of `w`.
pub fn diagram_of(fc: &FcElement) -> Result<DecoratedDiagram> {
    fc.graph().require(Family::AffineD)?;
    let n = fc.graph().n();
    diagram_of_letters(&fc.letters(), n)
}

/// Left-to-right product of simple diagrams, the first letter on top.
pub fn diagram_of_letters(letters: &[Generator], n: usize) -> Result<DecoratedDiagram> {
    let mut d = DecoratedDiagram::identity(n + 2);
    for &i in letters {
        d = compose(&d, &simple_diagram(i, n)?)?;
    }
    Ok(d)
}

/// Number of edges joining two north nodes.
pub fn a_value(d: &DecoratedDiagram) -> usize {
    d.edges.iter().filter(|e| e.is_north_cap()).count()
}

pub fn a_tilde(d: &DecoratedDiagram) -> usize {
    let a = a_value(d);
    let (b, w) = (d.black_loops(), d.white_loops());
    if a == 1 {
        a + usize::from(b + w > 0)
    } else {
        a + b + w
    }
}

/// Whether `D_i · D = δ · D`.
pub fn has_left_descent_diagrammatic(d: &DecoratedDiagram, i: usize) -> Result<bool> {
    let n = d.k - 2;
    let prod = compose(&simple_diagram(i, n)?, d)?;
    Ok(prod == d.with_delta(d.delta_exp + 1))
}

#[cfg(test)]
mod tests;
