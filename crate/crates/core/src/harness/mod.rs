//! Enumeration of fully commutative elements and property suites checked
//! against brute-force oracles.

pub mod oracle;
mod suites;

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::coxeter::{build_graph, Family, Generator, GraphRef};
use crate::element::{fc_check, FcElement};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 5_000_000;
pub const EXPRESSION_GUARD: usize = 12;

#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    pub graph: GraphRef,
    pub max_length: usize,
    pub budget: usize,
}

impl EnumerationConfig {
    pub fn new(graph: &GraphRef, max_length: usize) -> Self {
        Self { graph: graph.clone(), max_length, budget: DEFAULT_BUDGET }
    }
}

/// All FC elements of length at most `max_length`, one vector per length,
/// each sorted.
pub fn enumerate_fc(config: &EnumerationConfig) -> Result<Vec<Vec<FcElement>>> {
    let g = &config.graph;
    let mut levels = vec![vec![FcElement::identity(g)]];
    let mut total = 1;
    for _ in 0..config.max_length {
        let prev = levels.last().expect("identity level");
        let found: HashSet<FcElement> = prev
            .par_iter()
            .flat_map_iter(|w| {
                let letters = w.letters();
                g.generators().filter_map(move |s| {
                    if w.is_right_descent(s) {
                        return None;
                    }
                    let mut ext = letters.clone();
                    ext.push(s);
                    fc_check(g, &ext).is_fc().then(|| FcElement::from_letters(g, &ext).expect("checked FC"))
                })
            })
            .collect();
        let mut next: Vec<FcElement> = found.into_iter().collect();
        next.sort();
        total += next.len();
        if total > config.budget {
            return Err(Error::Budget(config.budget));
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Flattened [`enumerate_fc`].
pub fn enumerate_all(graph: &GraphRef, max_length: usize) -> Result<Vec<FcElement>> {
    Ok(enumerate_fc(&EnumerationConfig::new(graph, max_length))?.into_iter().flatten().collect())
}

/// Every reduced expression, as the commutation closure of one of them.
pub fn all_reduced_expressions(fc: &FcElement) -> Result<BTreeSet<Vec<Generator>>> {
    if fc.len() > EXPRESSION_GUARD {
        return Err(Error::LengthGuard { length: fc.len(), limit: EXPRESSION_GUARD });
    }
    let g = fc.graph();
    let start = fc.letters();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] != w[i + 1] && g.commute(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(seen)
}

pub const SUITES: &[&str] = &[
    "cfnf-uniqueness",
    "trace-length",
    "classification-D",
    "classification-B",
    "phi",
    "diagram-relations",
    "loop-census",
    "descent-transfer",
    "faithfulness",
    "a-function",
    "confluence",
    "enumeration",
    "heap-oracles",
    "worked-examples",
];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub graphs: Vec<GraphRef>,
    pub max_length: usize,
    pub seed: u64,
    /// Random triples for associativity, diagrams for confluence.
    pub samples: usize,
    /// Random rewriting orders per diagram.
    pub orders: usize,
    pub budget: usize,
}

fn graphs(family: Family, ns: &[usize]) -> Vec<GraphRef> {
    ns.iter().map(|&n| build_graph(family, n).expect("n >= 2")).collect()
}

impl SuiteConfig {
    pub fn new(graphs: Vec<GraphRef>, max_length: usize) -> Self {
        Self { graphs, max_length, seed: 0, samples: 1000, orders: 100, budget: DEFAULT_BUDGET }
    }

    /// The configuration the acceptance run uses for a suite.
    pub fn default_for(suite: &str) -> Result<Self> {
        let d = || graphs(Family::AffineD, &[2, 3]);
        let b = || graphs(Family::AffineB, &[2, 3]);
        let both = || [d(), b()].concat();
        Ok(match suite {
            "cfnf-uniqueness" => Self::new(both(), 10),
            "trace-length" | "heap-oracles" => Self::new(both(), 14),
            "classification-D" | "loop-census" | "descent-transfer" | "faithfulness" | "a-function" => {
                Self::new(d(), 14)
            }
            "classification-B" | "phi" => Self::new(b(), 14),
            "diagram-relations" => Self { samples: 10_000, ..Self::new(graphs(Family::AffineD, &[2, 3, 4, 5]), 10) },
            "confluence" => Self::new(graphs(Family::AffineD, &[2, 3, 4, 5]), 10),
            "enumeration" => Self::new(both(), 8),
            "worked-examples" => Self::new(Vec::new(), 0),
            other => return Err(Error::UnknownSuite(other.into())),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "groups": self.graphs.iter().map(|g| g.type_name()).collect::<Vec<_>>(),
            "max_length": self.max_length,
            "seed": self.seed,
            "samples": self.samples,
            "orders": self.orders,
        })
    }

    fn elements(&self, graph: &GraphRef) -> Result<Vec<FcElement>> {
        let config = EnumerationConfig { graph: graph.clone(), max_length: self.max_length, budget: self.budget };
        Ok(enumerate_fc(&config)?.into_iter().flatten().collect())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub word: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub config: Value,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub metrics: Map<String, Value>,
}

impl Report {
    fn new(suite: &str, config: &SuiteConfig) -> Self {
        Self { suite: suite.into(), config: config.to_json(), checked: 0, failures: Vec::new(), metrics: Map::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, word: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Failure { word: word.into(), detail: detail.into() });
    }

    fn metric(&mut self, key: &str, value: impl Into<Value>) {
        self.metrics.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "config": self.config,
            "checked": self.checked,
            "failures": self.failures,
            "metrics": self.metrics,
        })
    }
}

/// Runs a registered suite.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new(name, config);
    match name {
        "cfnf-uniqueness" => suites::cfnf_uniqueness(config, &mut report)?,
        "trace-length" => suites::trace_length(config, &mut report)?,
        "classification-D" => suites::classification_d(config, &mut report)?,
        "classification-B" => suites::classification_b(config, &mut report)?,
        "phi" => suites::phi(config, &mut report)?,
        "diagram-relations" => suites::diagram_relations(config, &mut report)?,
        "loop-census" => suites::loop_census(config, &mut report)?,
        "descent-transfer" => suites::descent_transfer(config, &mut report)?,
        "faithfulness" => suites::faithfulness(config, &mut report)?,
        "a-function" => suites::a_function(config, &mut report)?,
        "confluence" => suites::confluence(config, &mut report)?,
        "enumeration" => suites::enumeration(config, &mut report)?,
        "heap-oracles" => suites::heap_oracles(config, &mut report)?,
        "worked-examples" => suites::worked_examples(&mut report)?,
        _ => return Err(Error::UnknownSuite(name.into())),
    }
    Ok(report)
}
