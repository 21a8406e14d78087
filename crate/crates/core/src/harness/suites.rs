use std::collections::{BTreeMap, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::oracle::{self, GeometricRep};
use super::{all_reduced_expressions, Report, SuiteConfig};
use crate::classify::{
    candy_params_b, candy_params_d, cz_bullet_params, is_cc, is_cc_w, left_candy_params_b, zigzag_params_of,
};
use crate::coxeter::{build_graph, Family, GraphRef, Word};
use crate::diagram::{
    a_tilde, a_value, canonicalize, canonicalize_with, compose, compose_raw, diagram_of, diagram_of_letters,
    has_left_descent_diagrammatic, simple_diagram, DecoratedDiagram, Strategy,
};
use crate::element::{cfnf, FcElement};
use crate::error::Result;
use crate::heap::heap_of;
use crate::phi::phi as phi_map;
use crate::star::{apply_sequence, is_irreducible, Mode, Policy, Reducer, Side, StarMove};
use crate::stats::{f_bullet, f_circ, n_value};

fn label(w: &FcElement) -> String {
    format!("{} {}", w.graph().type_name(), w)
}

/// Runs `check` on every element in parallel; `Some(detail)` is a failure.
fn check_each<F>(elements: &[FcElement], report: &mut Report, check: F) -> Result<()>
where
    F: Fn(&FcElement) -> Result<Option<String>> + Sync,
{
    let results: Vec<(usize, Option<String>)> = elements
        .par_iter()
        .enumerate()
        .map(|(i, w)| check(w).map(|r| (i, r)))
        .collect::<Result<_>>()?;
    for (i, detail) in results {
        if let Some(detail) = detail {
            report.fail(label(&elements[i]), detail);
        }
    }
    report.checked += elements.len();
    Ok(())
}

fn require_all(config: &SuiteConfig, family: Family) -> Result<()> {
    config.graphs.iter().try_for_each(|g| g.require(family))
}

pub(super) fn cfnf_uniqueness(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let mut expressions = 0;
    for g in &config.graphs {
        let elements = config.elements(g)?;
        expressions += elements.par_iter().map(|w| all_reduced_expressions(w).map(|e| e.len())).sum::<Result<usize>>()?;
        check_each(&elements, report, |w| {
            let exprs = all_reduced_expressions(w)?;
            let count = oracle::count_linear_extensions(&oracle::heap_order(g, &w.letters()));
            if exprs.len() as u64 != count {
                return Ok(Some(format!("{} expressions, {count} linear extensions", exprs.len())));
            }
            for e in &exprs {
                let nf = cfnf(&Word::new(g, e.clone())?)?;
                if nf != *w {
                    return Ok(Some(format!("expression {e:?} gives {nf}")));
                }
            }
            Ok(None)
        })?;
    }
    report.metric("expressions", expressions);
    Ok(())
}

pub(super) fn trace_length(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    for g in &config.graphs {
        let elements = config.elements(g)?;
        let modes: &[Mode] = match g.family() {
            Family::AffineB => &[Mode::Star, Mode::WeakStar],
            _ => &[Mode::Star],
        };
        for &mode in modes {
            let mut reducer = Reducer::new(mode);
            let mut multi_endpoint = 0;
            for w in &elements {
                let summary = reducer.summary(w);
                if summary.depths.len() != 1 {
                    report.fail(label(w), format!("{mode:?} trace depths {:?}", summary.depths));
                }
                multi_endpoint += usize::from(summary.endpoints.len() > 1);
                for side in [Side::Left, Side::Right] {
                    let ends = reducer.one_sided_endpoints(w, side);
                    if ends.len() != 1 {
                        report.fail(label(w), format!("{mode:?} {} endpoints {}", side.code(), ends.len()));
                    }
                }
                report.checked += 1;
            }
            report.metric(&format!("{} {mode:?} several endpoints", g.type_name()), multi_endpoint);
        }
    }
    Ok(())
}

pub(super) fn classification_d(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for g in &config.graphs {
        let elements = config.elements(g)?;
        let n = g.n();
        let classes: Vec<(bool, [bool; 3])> = elements
            .par_iter()
            .map(|w| {
                let irr = is_irreducible(w, Mode::Star);
                (irr, [is_cc(w), zigzag_params_of(w).is_some(), candy_params_d(w).is_some()])
            })
            .collect();
        for (w, (irr, pats)) in elements.iter().zip(classes) {
            report.checked += 1;
            let hits = pats.iter().filter(|&&p| p).count();
            if irr != (hits > 0) {
                report.fail(label(w), format!("irreducible={irr}, patterns CC/CZ/candy={pats:?}"));
            } else if hits > 1 {
                report.fail(label(w), format!("patterns overlap {pats:?}"));
            } else if pats[2] && n % 2 == 1 {
                report.fail(label(w), "candy for odd n");
            }
            for (name, hit) in ["CC", "CZ", "Candy"].iter().zip(pats) {
                if hit {
                    *counts.entry(format!("{} {name}", g.type_name())).or_default() += 1;
                }
            }
        }
    }
    report.metric("irreducibles", json!(counts));
    Ok(())
}

pub(super) fn classification_b(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineB)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for g in &config.graphs {
        let elements = config.elements(g)?;
        let n = g.n();
        let rows: Vec<(bool, bool, [bool; 4], [bool; 3])> = elements
            .par_iter()
            .map(|w| {
                let weak = [
                    is_cc_w(w),
                    candy_params_b(w).is_some(),
                    left_candy_params_b(w).is_some(),
                    zigzag_params_of(w).is_some(),
                ];
                let star = [is_cc(w), candy_params_b(w).is_some(), cz_bullet_params(w).is_some()];
                (is_irreducible(w, Mode::WeakStar), is_irreducible(w, Mode::Star), weak, star)
            })
            .collect();
        for (w, (irr_w, irr, weak, star)) in elements.iter().zip(rows) {
            report.checked += 1;
            let weak_hits = weak.iter().filter(|&&p| p).count();
            let star_hits = star.iter().filter(|&&p| p).count();
            if irr_w != (weak_hits > 0) || weak_hits > 1 {
                report.fail(label(w), format!("weak irreducible={irr_w}, CCw/K/Kw/CZ={weak:?}"));
            }
            if irr != (star_hits > 0) || star_hits > 1 {
                report.fail(label(w), format!("star irreducible={irr}, CC/K/CZ•={star:?}"));
            }
            if (weak[1] && n % 2 == 1) || (weak[2] && n % 2 == 0) {
                report.fail(label(w), "candy parity");
            }
            let names = ["CCw", "K", "Kw", "CZ"].iter().zip(weak).chain(["CC", "K", "CZ•"].iter().zip(star));
            for (i, (name, hit)) in names.enumerate() {
                if hit {
                    let mode = if i < 4 { "weak" } else { "star" };
                    *counts.entry(format!("{} {mode} {name}", g.type_name())).or_default() += 1;
                }
            }
        }
    }
    report.metric("irreducibles", json!(counts));
    Ok(())
}

const TEXTUAL_PHI_MAX: usize = 10;

pub(super) fn phi(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineB)?;
    let mut ambiguous = 0;
    for g in &config.graphs {
        let elements = config.elements(g)?;
        let target = build_graph(Family::AffineD, g.n())?;
        let rep = GeometricRep::new(&target)?;
        let images: Vec<FcElement> = elements.par_iter().map(phi_map).collect::<Result<_>>()?;
        let mut seen: HashMap<&FcElement, &FcElement> = HashMap::new();
        for (w, img) in elements.iter().zip(&images) {
            if let Some(prev) = seen.insert(img, w) {
                report.fail(label(w), format!("same image {img} as {prev}"));
            }
        }
        let textual: Vec<Option<usize>> = elements
            .par_iter()
            .map(|w| {
                (w.len() <= TEXTUAL_PHI_MAX)
                    .then(|| oracle::phi_textual(g, &target, &w.letters()))
                    .transpose()
                    .map(|r| r.map(|set| set.len()))
            })
            .collect::<Result<_>>()?;
        let checks: Vec<Option<String>> = elements
            .par_iter()
            .zip(&images)
            .map(|(w, img)| {
                if is_irreducible(w, Mode::Star) != is_irreducible(img, Mode::Star) {
                    return Ok(Some(format!("irreducibility differs for image {img}")));
                }
                if w.len() <= TEXTUAL_PHI_MAX {
                    let options = oracle::phi_textual(g, &target, &w.letters())?;
                    let key = rep.key(&img.letters());
                    if !options.iter().any(|o| rep.key(o) == key) {
                        return Ok(Some(format!("image {img} not among textual images {options:?}")));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        for (w, c) in elements.iter().zip(checks) {
            if let Some(detail) = c {
                report.fail(label(w), detail);
            }
        }
        ambiguous += textual.iter().filter(|t| t.is_some_and(|k| k > 1)).count();
        report.checked += elements.len();
    }
    report.metric("textual rule ambiguous", ambiguous);
    Ok(())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..=n + 2)).collect()
}

pub(super) fn diagram_relations(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    for g in &config.graphs {
        let n = g.n();
        for s in g.generators() {
            let ds = simple_diagram(s, n)?;
            for t in g.generators() {
                let dt = simple_diagram(t, n)?;
                let name = format!("{} D{s} D{t}", g.type_name());
                let st = compose(&ds, &dt)?;
                let ok = if s == t {
                    st == ds.with_delta(1)
                } else if g.m(s, t) == 2 {
                    st == compose(&dt, &ds)?
                } else {
                    compose(&st, &ds)? == ds
                };
                if !ok {
                    report.fail(name, format!("relation fails for m={}", g.m(s, t)));
                }
                report.checked += 1;
            }
        }
    }
    if config.graphs.is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let triples: Vec<(usize, [Vec<usize>; 3])> = (0..config.samples)
        .map(|i| {
            let n = config.graphs[i % config.graphs.len()].n();
            (n, [random_word(&mut rng, n, 6), random_word(&mut rng, n, 6), random_word(&mut rng, n, 6)])
        })
        .collect();
    let checks: Vec<Option<String>> = triples
        .par_iter()
        .map(|(n, [x, y, z])| {
            let (a, b, c) = (diagram_of_letters(x, *n)?, diagram_of_letters(y, *n)?, diagram_of_letters(z, *n)?);
            let left = compose(&compose(&a, &b)?, &c)?;
            let right = compose(&a, &compose(&b, &c)?)?;
            Ok((left != right).then(|| format!("n={n} {x:?} {y:?} {z:?}: {left} vs {right}")))
        })
        .collect::<Result<_>>()?;
    for detail in checks.into_iter().flatten() {
        report.fail("associativity", detail);
    }
    report.checked += config.samples;
    report.metric("triples", config.samples);
    Ok(())
}

pub(super) fn loop_census(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    for g in &config.graphs {
        let elements = config.elements(g)?;
        check_each(&elements, report, |w| {
            let d = diagram_of(w)?;
            let (fb, fc) = (f_bullet(w)?, f_circ(w)?);
            if d.delta_exp != 0 || d.undecorated_loops() != 0 {
                return Ok(Some(format!("delta {} undecorated {}", d.delta_exp, d.undecorated_loops())));
            }
            if let Some(bad) = d.loops.iter().map(|l| l.key()).find(|k| !matches!(k.as_str(), "b" | "w" | "bw")) {
                return Ok(Some(format!("loop type {bad}")));
            }
            if d.black_loops() != fb || d.white_loops() != fc {
                return Ok(Some(format!("loops b={} w={} but f=({fb},{fc})", d.black_loops(), d.white_loops())));
            }
            if let Some(p) = candy_params_d(w) {
                if d.mixed_loops() != p.m / 2 || d.loops.len() != p.m / 2 {
                    return Ok(Some(format!("candy m={} with census {:?}", p.m, d.census())));
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

pub(super) fn descent_transfer(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    for g in &config.graphs {
        let elements = config.elements(g)?;
        check_each(&elements, report, |w| {
            let d = diagram_of(w)?;
            for i in g.generators() {
                let diag = has_left_descent_diagrammatic(&d, i)?;
                if diag != w.is_left_descent(i) {
                    return Ok(Some(format!("generator {i}: diagram says {diag}")));
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

const EXPRESSION_CHECK_MAX: usize = 8;

pub(super) fn faithfulness(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    let mut sizes = BTreeMap::new();
    for g in &config.graphs {
        let elements = config.elements(g)?;
        let diagrams: Vec<DecoratedDiagram> = elements.par_iter().map(diagram_of).collect::<Result<_>>()?;
        let mut seen: HashMap<&DecoratedDiagram, &FcElement> = HashMap::new();
        for (w, d) in elements.iter().zip(&diagrams) {
            if let Some(prev) = seen.insert(d, w) {
                report.fail(label(w), format!("same diagram as {prev}"));
            }
        }
        sizes.insert(g.type_name(), json!({"elements": elements.len(), "diagrams": seen.len()}));
        let short: Vec<FcElement> = elements.iter().filter(|w| w.len() <= EXPRESSION_CHECK_MAX).cloned().collect();
        check_each(&short, report, |w| {
            let d = diagram_of(w)?;
            for e in all_reduced_expressions(w)? {
                if diagram_of_letters(&e, g.n())? != d {
                    return Ok(Some(format!("expression {e:?} gives another diagram")));
                }
            }
            Ok(None)
        })?;
        report.checked += elements.len() - short.len();
    }
    report.metric("sizes", json!(sizes));
    Ok(())
}

pub(super) fn a_function(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    for g in &config.graphs {
        let elements = config.elements(g)?;
        check_each(&elements, report, |w| {
            let d = diagram_of(w)?;
            let (nv, at) = (n_value(w), a_tilde(&d));
            Ok((nv != at).then(|| format!("n={nv} ã={at} a={}", a_value(&d))))
        })?;
        let s01 = FcElement::parse(g, "0 1")?;
        let d = diagram_of(&s01)?;
        if (n_value(&s01), a_tilde(&d), a_value(&d)) != (2, 2, 1) {
            report.fail(label(&s01), "witness n=2, ã=2, a=1 not reproduced");
        }
        report.checked += 1;
    }
    Ok(())
}

pub(super) fn confluence(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    require_all(config, Family::AffineD)?;
    if config.graphs.is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let words: Vec<(usize, Vec<usize>, u64)> = (0..config.samples)
        .map(|i| {
            let n = config.graphs[i % config.graphs.len()].n();
            (n, random_word(&mut rng, n, config.max_length), rng.gen())
        })
        .collect();
    let checks: Vec<Option<String>> = words
        .par_iter()
        .map(|(n, word, seed)| {
            let mut raw = DecoratedDiagram::identity(n + 2);
            for &i in word {
                raw = compose_raw(&raw, &simple_diagram(i, *n)?)?;
            }
            let det = canonicalize(&raw)?;
            let mut order_rng = ChaCha8Rng::seed_from_u64(*seed);
            for _ in 0..config.orders {
                let other = canonicalize_with(&raw, Strategy::Random(order_rng.gen()))?;
                if other != det {
                    return Ok(Some(format!("n={n} {word:?}: {det} vs {other}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    for detail in checks.into_iter().flatten() {
        report.fail("confluence", detail);
    }
    report.checked += config.samples;
    report.metric("orders per diagram", config.orders);
    Ok(())
}

const ENUMERATION_ORACLE_MAX: usize = 8;

pub(super) fn enumeration(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let max = config.max_length.min(ENUMERATION_ORACLE_MAX);
    let mut counts = BTreeMap::new();
    for g in &config.graphs {
        let rep = GeometricRep::new(g)?;
        let levels = super::enumerate_fc(&super::EnumerationConfig { max_length: max, ..super::EnumerationConfig::new(g, max) })?;
        let words = oracle::fc_words_by_length(g, max)?;
        for (len, (mine, theirs)) in levels.iter().zip(&words).enumerate() {
            let name = format!("{} length {len}", g.type_name());
            let mine_keys: HashSet<_> = mine.iter().map(|w| rep.key(&w.letters())).collect();
            let their_keys: HashSet<_> = theirs.iter().map(|w| rep.key(w)).collect();
            if mine_keys.len() != mine.len() {
                report.fail(name.clone(), "duplicate elements");
            }
            if mine_keys != their_keys {
                report.fail(name, format!("{} elements, oracle has {}", mine.len(), theirs.len()));
            }
            report.checked += mine.len();
        }
        counts.insert(g.type_name(), levels.iter().map(Vec::len).collect::<Vec<_>>());
    }
    report.metric("counts by length", json!(counts));
    Ok(())
}

const BRUTE_EXPRESSIONS_MAX: usize = 10;

pub(super) fn heap_oracles(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    for g in &config.graphs {
        let elements = config.elements(g)?;
        check_each(&elements, report, |w| {
            let letters = w.letters();
            let less = oracle::heap_order(g, &letters);
            let heap = heap_of(w);
            for j in 0..letters.len() {
                for k in 0..letters.len() {
                    if heap.less(j, k) != less[j][k] {
                        return Ok(Some(format!("order differs at ({j},{k})")));
                    }
                }
            }
            let (anti, brute) = (n_value(w), oracle::max_antichain_brute(&less));
            if anti != brute {
                return Ok(Some(format!("antichain {anti}, brute force {brute}")));
            }
            if w.len() <= BRUTE_EXPRESSIONS_MAX {
                let count = oracle::count_linear_extensions(&less);
                let listed = heap.linear_extensions(usize::MAX)?.len() as u64;
                if listed != count {
                    return Ok(Some(format!("{listed} linear extensions listed, {count} counted")));
                }
                if g.family() == Family::AffineD {
                    let n = g.n();
                    let fb = oracle::max_pair_factors(g, &letters, 0, 1);
                    let fc = oracle::max_pair_factors(g, &letters, n + 1, n + 2);
                    if (f_bullet(w)?, f_circ(w)?) != (fb, fc) {
                        return Ok(Some(format!("f=({},{}), brute force ({fb},{fc})", f_bullet(w)?, f_circ(w)?)));
                    }
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

fn graph(family: Family, n: usize) -> Result<GraphRef> {
    build_graph(family, n)
}

pub(super) fn worked_examples(report: &mut Report) -> Result<()> {
    let mut check = |name: &str, ok: bool, detail: String| {
        report.checked += 1;
        if !ok {
            report.fail(name, detail);
        }
    };
    let d7 = graph(Family::AffineD, 5)?;
    let w1 = cfnf(&Word::parse(&d7, "4 0 5 3 7 6 4 2 1")?)?;
    let layers = vec![vec![0, 4], vec![3, 5], vec![2, 4, 6, 7], vec![1]];
    check("w1 normal form", w1.layers() == layers, format!("{w1}"));

    let b6 = graph(Family::AffineB, 5)?;
    let w2 = cfnf(&Word::parse(&b6, "3 4 2 5 3 1 6 4 2 5 3 0 6 2")?)?;
    let layers = vec![vec![3], vec![2, 4], vec![1, 3, 5], vec![2, 4, 6], vec![0, 3, 5], vec![2, 6]];
    check("w2 normal form", w2.layers() == layers, format!("{w2}"));

    let v1 = FcElement::parse(&d7, "0 3 6 7")?;
    let moves = [StarMove::left(4, 3), StarMove::right(1, 2), StarMove::left(5, 6), StarMove::right(2, 0), StarMove::right(4, 3)];
    let trace = apply_sequence(&w1, &moves)?;
    check("w1 to s0s3s6s7", trace.end == v1, format!("{}", trace.end));

    let v2 = FcElement::parse(&d7, "1 4 6 7")?;
    let left = crate::star::reduce_to_irreducible(&w1, Mode::Star, Policy::LeftOnly)?;
    check("w1 to s1s4s6s7", left[0].end == v2 && left[0].len() == 5, format!("{}", left[0].end));

    let mut reducer = Reducer::new(Mode::Star);
    let summary = reducer.summary(&w1);
    let both = summary.endpoints.contains(&v1) && summary.endpoints.contains(&v2);
    check("w1 endpoints", both && summary.depths.len() == 1, format!("{:?}", summary.endpoints));

    let weak_end = FcElement::parse(&b6, "1 3 5 2 4 6 0 3 5")?;
    let weak = Reducer::new(Mode::WeakStar).summary(&w2);
    check(
        "w2 weak endpoint",
        weak.endpoints.len() == 1 && weak.endpoints.contains(&weak_end),
        format!("{:?}", weak.endpoints),
    );
    let cc = FcElement::parse(&b6, "2 4 6")?;
    let star = Reducer::new(Mode::Star).summary(&w2);
    let from_v2 = Reducer::new(Mode::Star).summary(&weak_end);
    check(
        "w2 star endpoint",
        star.endpoints.contains(&cc) && from_v2.endpoints.contains(&cc),
        format!("{:?}", star.endpoints),
    );

    let d10 = graph(Family::AffineD, 8)?;
    let w = FcElement::parse(&d10, "0 3 5 9 1 2 4 6 8 3 5 7 10")?;
    let v = FcElement::parse(&d10, "0 5 9 1 10")?;
    let f = (f_bullet(&w)?, f_circ(&w)?, f_bullet(&v)?, f_circ(&v)?);
    check("D~10 fork counts", f == (1, 0, 1, 1), format!("{f:?}"));

    let d4 = graph(Family::AffineD, 2)?;
    let s01 = FcElement::parse(&d4, "0 1")?;
    let d = diagram_of(&s01)?;
    let got = (n_value(&s01), a_tilde(&d), a_value(&d));
    check("n(s0s1)=2, a=1", got == (2, 2, 1), format!("{got:?}"));
    Ok(())
}
