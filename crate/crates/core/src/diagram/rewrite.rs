//! Rewriting of decorated diagrams to canonical form.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{a_value, DecoratedDiagram, Mark};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    Edge(usize),
    Loop(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Two equal adjacent marks at `pos` and the next position vanish. With
    /// one north cap they must also share a strip.
    Cancel { site: Site, pos: usize },
    /// An undecorated loop becomes a factor `δ`.
    DropLoop { index: usize },
    /// The one-mark loop `source` removes an equal mark elsewhere.
    Absorb { source: usize, site: Site, pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Cancellations first, then loop removal, then absorption.
    Deterministic,
    /// Uniformly random applicable rule at every step.
    Random(u64),
}

fn marks_at(d: &DecoratedDiagram, site: Site) -> &[Mark] {
    match site {
        Site::Edge(i) => &d.edges[i].marks,
        Site::Loop(i) => &d.loops[i].marks,
    }
}

fn marks_at_mut(d: &mut DecoratedDiagram, site: Site) -> &mut Vec<Mark> {
    match site {
        Site::Edge(i) => &mut d.edges[i].marks,
        Site::Loop(i) => &mut d.loops[i].marks,
    }
}

fn sites(d: &DecoratedDiagram) -> impl Iterator<Item = Site> {
    (0..d.edges.len()).map(Site::Edge).chain((0..d.loops.len()).map(Site::Loop))
}

/// No mark of the other colour lies strictly between the two heights.
fn same_strip(d: &DecoratedDiagram, a: Mark, b: Mark) -> bool {
    let (lo, hi) = (a.height.min(b.height), a.height.max(b.height));
    !sites(d)
        .flat_map(|s| marks_at(d, s).iter())
        .any(|m| m.dec != a.dec && m.height > lo && m.height < hi)
}

/// Every applicable rule, in the priority order used by the deterministic
/// strategy.
pub fn rule_instances(d: &DecoratedDiagram) -> Vec<Rule> {
    let mut rules = Vec::new();
    let strips = a_value(d) == 1;
    for site in sites(d) {
        let marks = marks_at(d, site);
        let len = marks.len();
        let pairs = match site {
            Site::Edge(_) => len.saturating_sub(1),
            Site::Loop(_) if len == 2 => 1,
            Site::Loop(_) if len > 2 => len,
            Site::Loop(_) => 0,
        };
        for pos in 0..pairs {
            let (a, b) = (marks[pos], marks[(pos + 1) % len]);
            if a.dec == b.dec && (!strips || same_strip(d, a, b)) {
                rules.push(Rule::Cancel { site, pos });
            }
        }
    }
    for (index, l) in d.loops.iter().enumerate() {
        if l.marks.is_empty() {
            rules.push(Rule::DropLoop { index });
        }
    }
    for (source, l) in d.loops.iter().enumerate() {
        let [m] = l.marks[..] else { continue };
        for site in sites(d).filter(|&s| s != Site::Loop(source)) {
            for (pos, t) in marks_at(d, site).iter().enumerate() {
                if t.dec == m.dec && (!strips || same_strip(d, m, *t)) {
                    rules.push(Rule::Absorb { source, site, pos });
                }
            }
        }
    }
    rules
}

fn apply(d: &mut DecoratedDiagram, rule: Rule) {
    match rule {
        Rule::Cancel { site, pos } => {
            let marks = marks_at_mut(d, site);
            let next = (pos + 1) % marks.len();
            let (first, second) = (pos.max(next), pos.min(next));
            marks.remove(first);
            marks.remove(second);
        }
        Rule::DropLoop { index } => {
            d.loops.remove(index);
            d.delta_exp += 1;
        }
        Rule::Absorb { site, pos, .. } => {
            marks_at_mut(d, site).remove(pos);
        }
    }
}

/// Rewrites with the deterministic strategy.
pub fn canonicalize(d: &DecoratedDiagram) -> Result<DecoratedDiagram> {
    canonicalize_with(d, Strategy::Deterministic)
}

pub fn canonicalize_with(d: &DecoratedDiagram, strategy: Strategy) -> Result<DecoratedDiagram> {
    d.validate()?;
    let mut d = d.clone();
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Deterministic => None,
    };
    loop {
        let rules = rule_instances(&d);
        let Some(&first) = rules.first() else { break };
        let rule = match rng.as_mut() {
            Some(rng) => rules[rng.gen_range(0..rules.len())],
            None => first,
        };
        apply(&mut d, rule);
    }
    d.edges.sort_by_key(|e| (e.from, e.to));
    d.loops.sort_by_key(|l| l.key());
    Ok(d)
}
