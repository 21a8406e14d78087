//! Star and weak star reductions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coxeter::Generator;
use crate::element::{fc_check, FcElement};
use crate::error::{Error, Result};

/// Default cap on the number of traces collected by [`Policy::Exhaustive`].
pub const TRACE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn code(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Star,
    WeakStar,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(Mode::Star),
            "weak" => Ok(Mode::WeakStar),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Policy {
    FirstMove,
    LeftOnly,
    RightOnly,
    Exhaustive,
}

impl FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(Policy::FirstMove),
            "left" => Ok(Policy::LeftOnly),
            "right" => Ok(Policy::RightOnly),
            "exhaustive" => Ok(Policy::Exhaustive),
            other => Err(Error::Parse(format!("unknown policy {other:?}"))),
        }
    }
}

/// Removal of the descent `s` on one side, witnessed by `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarMove {
    pub side: Side,
    pub s: Generator,
    pub t: Generator,
    pub weak: bool,
}

impl StarMove {
    pub fn left(s: Generator, t: Generator) -> Self {
        Self { side: Side::Left, s, t, weak: false }
    }

    pub fn right(s: Generator, t: Generator) -> Self {
        Self { side: Side::Right, s, t, weak: false }
    }

    fn same_as(&self, other: &StarMove) -> bool {
        self.side == other.side && self.s == other.s && self.t == other.t
    }
}

impl fmt::Display for StarMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} s={} t={}", self.side.code(), self.s, self.t)?;
        if self.weak {
            f.write_str(" weak")?;
        }
        Ok(())
    }
}

fn left_moves(fc: &FcElement) -> Vec<StarMove> {
    let graph = fc.graph();
    let letters = fc.letters();
    let mut moves = Vec::new();
    for s in fc.left_descents() {
        let Ok(sw) = fc.remove_left(s) else { continue };
        let next = sw.left_descents();
        for t in graph.neighbors(s) {
            if !next.contains(&t) {
                continue;
            }
            let mut tw = Vec::with_capacity(letters.len() + 1);
            tw.push(t);
            tw.extend_from_slice(&letters);
            let weak = !fc_check(graph, &tw).is_fc();
            moves.push(StarMove { side: Side::Left, s, t, weak });
        }
    }
    moves
}

/// Legal moves on both sides, left first, each side ordered by `(s, t)`.
pub fn available_moves(fc: &FcElement, mode: Mode) -> Vec<StarMove> {
    let mut moves = left_moves(fc);
    moves.extend(left_moves(&fc.inverse()).into_iter().map(|m| StarMove { side: Side::Right, ..m }));
    if mode == Mode::WeakStar {
        moves.retain(|m| m.weak);
    }
    moves
}

fn side_moves(fc: &FcElement, mode: Mode, side: Side) -> Vec<StarMove> {
    let moves = match side {
        Side::Left => left_moves(fc),
        Side::Right => {
            left_moves(&fc.inverse()).into_iter().map(|m| StarMove { side: Side::Right, ..m }).collect()
        }
    };
    moves.into_iter().filter(|m| mode == Mode::Star || m.weak).collect()
}

pub fn is_irreducible(fc: &FcElement, mode: Mode) -> bool {
    available_moves(fc, mode).is_empty()
}

fn apply_unchecked(fc: &FcElement, mv: &StarMove) -> FcElement {
    match mv.side {
        Side::Left => fc.remove_left(mv.s),
        Side::Right => fc.remove_right(mv.s),
    }
    .expect("legal move removes a descent")
}

/// Applies a legal star move; the `weak` flag of `mv` is ignored.
pub fn apply_move(fc: &FcElement, mv: &StarMove) -> Result<FcElement> {
    if !available_moves(fc, Mode::Star).iter().any(|m| m.same_as(mv)) {
        return Err(Error::IllegalMove(format!("{} on {fc}", StarMove { weak: false, ..*mv })));
    }
    Ok(apply_unchecked(fc, mv))
}

/// Applies moves in order, failing on the first illegal one.
pub fn apply_sequence(fc: &FcElement, moves: &[StarMove]) -> Result<ReductionTrace> {
    let mut trace = ReductionTrace::trivial(fc);
    for mv in moves {
        let legal = available_moves(&trace.end, Mode::Star)
            .into_iter()
            .find(|m| m.same_as(mv))
            .ok_or_else(|| Error::IllegalMove(format!("{mv} on {}", trace.end)))?;
        trace.push(legal);
    }
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub mv: StarMove,
    pub result: FcElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: FcElement,
    pub steps: Vec<TraceStep>,
    pub end: FcElement,
}

impl ReductionTrace {
    fn trivial(fc: &FcElement) -> Self {
        Self { start: fc.clone(), steps: Vec::new(), end: fc.clone() }
    }

    fn push(&mut self, mv: StarMove) {
        let result = apply_unchecked(&self.end, &mv);
        self.end = result.clone();
        self.steps.push(TraceStep { mv, result });
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

impl Serialize for ReductionTrace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Step<'a> {
            side: &'static str,
            s: Generator,
            t: Generator,
            weak: bool,
            result: &'a FcElement,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            start: &'a FcElement,
            steps: Vec<Step<'a>>,
            end: &'a FcElement,
        }
        Repr {
            start: &self.start,
            steps: self
                .steps
                .iter()
                .map(|st| Step {
                    side: st.mv.side.code(),
                    s: st.mv.s,
                    t: st.mv.t,
                    weak: st.mv.weak,
                    result: &st.result,
                })
                .collect(),
            end: &self.end,
        }
        .serialize(serializer)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for step in &self.steps {
            write!(f, "\n  --[{}]--> {}", step.mv, step.result)?;
        }
        Ok(())
    }
}

/// Reduces `fc` until no move allowed by `policy` remains. Deterministic
/// policies return one trace; [`Policy::Exhaustive`] returns every trace in
/// depth-first move order.
pub fn reduce_to_irreducible(fc: &FcElement, mode: Mode, policy: Policy) -> Result<Vec<ReductionTrace>> {
    let side = match policy {
        Policy::Exhaustive => return exhaustive_traces(fc, mode, TRACE_LIMIT),
        Policy::FirstMove => None,
        Policy::LeftOnly => Some(Side::Left),
        Policy::RightOnly => Some(Side::Right),
    };
    let mut trace = ReductionTrace::trivial(fc);
    loop {
        let next = match side {
            None => available_moves(&trace.end, mode).into_iter().next(),
            Some(side) => side_moves(&trace.end, mode, side).into_iter().next(),
        };
        match next {
            Some(mv) => trace.push(mv),
            None => return Ok(vec![trace]),
        }
    }
}

pub fn exhaustive_traces(fc: &FcElement, mode: Mode, limit: usize) -> Result<Vec<ReductionTrace>> {
    let mut out = Vec::new();
    let mut trace = ReductionTrace::trivial(fc);
    explore(&mut trace, mode, limit, &mut out)?;
    Ok(out)
}

fn explore(trace: &mut ReductionTrace, mode: Mode, limit: usize, out: &mut Vec<ReductionTrace>) -> Result<()> {
    let moves = available_moves(&trace.end, mode);
    if moves.is_empty() {
        if out.len() >= limit {
            return Err(Error::TraceLimit(limit));
        }
        out.push(trace.clone());
        return Ok(());
    }
    for mv in moves {
        let saved = trace.end.clone();
        trace.push(mv);
        explore(trace, mode, limit, out)?;
        trace.steps.pop();
        trace.end = saved;
    }
    Ok(())
}

/// Depths and endpoints of all traces from an element.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TraceSummary {
    pub depths: BTreeSet<usize>,
    pub endpoints: BTreeSet<FcElement>,
}

/// Memoized trace summaries, avoiding explicit enumeration of traces.
#[derive(Debug)]
pub struct Reducer {
    mode: Mode,
    all: HashMap<FcElement, TraceSummary>,
    one_sided: HashMap<(Side, FcElement), BTreeSet<FcElement>>,
}

impl Reducer {
    pub fn new(mode: Mode) -> Self {
        Self { mode, all: HashMap::new(), one_sided: HashMap::new() }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn summary(&mut self, fc: &FcElement) -> TraceSummary {
        if let Some(s) = self.all.get(fc) {
            return s.clone();
        }
        let moves = available_moves(fc, self.mode);
        let mut out = TraceSummary::default();
        if moves.is_empty() {
            out.depths.insert(0);
            out.endpoints.insert(fc.clone());
        }
        for mv in moves {
            let sub = self.summary(&apply_unchecked(fc, &mv));
            out.depths.extend(sub.depths.iter().map(|d| d + 1));
            out.endpoints.extend(sub.endpoints);
        }
        self.all.insert(fc.clone(), out.clone());
        out
    }

    /// Endpoints of all traces using moves of one side only.
    pub fn one_sided_endpoints(&mut self, fc: &FcElement, side: Side) -> BTreeSet<FcElement> {
        let key = (side, fc.clone());
        if let Some(s) = self.one_sided.get(&key) {
            return s.clone();
        }
        let moves = side_moves(fc, self.mode, side);
        let mut out = BTreeSet::new();
        if moves.is_empty() {
            out.insert(fc.clone());
        }
        for mv in moves {
            out.extend(self.one_sided_endpoints(&apply_unchecked(fc, &mv), side));
        }
        self.one_sided.insert(key, out.clone());
        out
    }
}
