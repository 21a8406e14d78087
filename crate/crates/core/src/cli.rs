//! Command line front end behind the `fcstar` binary.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify_irreducible_b, classify_irreducible_d};
use crate::coxeter::{build_graph, parse_letters, Family, Generator, GraphRef};
use crate::diagram::{a_tilde, a_value, diagram_of};
use crate::element::FcElement;
use crate::error::{Error, Result};
use crate::harness::{enumerate_fc, run_suite, EnumerationConfig, SuiteConfig, DEFAULT_BUDGET, SUITES};
use crate::heap::heap_of;
use crate::phi::phi;
use crate::star::{reduce_to_irreducible, Mode, Policy};
use crate::stats::n_value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fcstar", version, about = "Fully commutative elements of affine D~ and B~")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartier-Foata layers of a word
    Cfnf(ElementArgs),
    /// Heap drawn in columns, fork generators sharing the outer columns
    Heap(ElementArgs),
    /// Star or weak star reduction traces
    Reduce {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_enum, default_value = "star")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "first")]
        policy: PolicyArg,
    },
    /// Family and parameters of an irreducible element
    Classify {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_enum, default_value = "star")]
        mode: ModeArg,
    },
    /// Image of a B~ element in D~
    Phi(ElementArgs),
    /// Canonical decorated diagram of a D~ element
    Diagram(ElementArgs),
    /// n(w) against a~ of the diagram
    Afunc(ElementArgs),
    /// Every FC element up to a length
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "max-len", default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run a property suite
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long = "type", value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: Option<u32>,
        #[arg(long = "max-len")]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long = "type", value_enum, default_value = "D")]
    family: FamilyArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    n: u32,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Args, Debug)]
struct ElementArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Generator indices, separate or in one quoted string
    word: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Ascii,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Star,
    Weak,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolicyArg {
    First,
    Left,
    Right,
    Exhaustive,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::D => Family::AffineD,
            FamilyArg::B => Family::AffineB,
        }
    }
}

impl ModeArg {
    fn mode(self) -> Mode {
        match self {
            ModeArg::Star => Mode::Star,
            ModeArg::Weak => Mode::WeakStar,
        }
    }
}

impl PolicyArg {
    fn policy(self) -> Policy {
        match self {
            PolicyArg::First => Policy::FirstMove,
            PolicyArg::Left => Policy::LeftOnly,
            PolicyArg::Right => Policy::RightOnly,
            PolicyArg::Exhaustive => Policy::Exhaustive,
        }
    }
}

impl GroupArgs {
    fn graph(&self) -> Result<GraphRef> {
        build_graph(self.family.family(), self.n as usize)
    }
}

impl ElementArgs {
    fn element(&self) -> Result<FcElement> {
        let g = self.group.graph()?;
        let letters = parse_letters(&self.word.join(" "))?;
        FcElement::from_letters(&g, &letters)
    }

    fn json(&self) -> bool {
        self.group.format == Format::Json
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.exit_code() == 0 {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.kind());
            EXIT_DOMAIN
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, value: Value, text: impl FnOnce() -> String) -> Result<()> {
    let s = if json { value.to_string() } else { text() };
    writeln!(out, "{s}").map_err(|e| Error::Unsupported(e.to_string()))
}

fn layers_text(fc: &FcElement) -> String {
    serde_json::to_string(fc.layers()).expect("plain data")
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Cfnf(a) => {
            let fc = a.element()?;
            emit(out, a.json(), fc.to_json(), || layers_text(&fc))?;
        }
        Command::Heap(a) => {
            let fc = a.element()?;
            let heap = heap_of(&fc);
            let value = json!({ "element": fc.to_json(), "heap": heap.to_json() });
            emit(out, a.json(), value, || render_heap(&fc))?;
        }
        Command::Reduce { element, mode, policy } => {
            let fc = element.element()?;
            let traces = reduce_to_irreducible(&fc, mode.mode(), policy.policy())?;
            let value = json!({
                "mode": format!("{mode:?}").to_lowercase(),
                "policy": format!("{policy:?}").to_lowercase(),
                "traces": traces.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            });
            emit(out, element.json(), value, || {
                traces
                    .iter()
                    .enumerate()
                    .map(|(i, t)| format!("trace {} depth {}\n{t}", i + 1, t.len()))
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
        }
        Command::Classify { element, mode } => {
            let fc = element.element()?;
            let class = match fc.graph().family() {
                Family::AffineB => classify_irreducible_b(&fc, mode.mode())?.to_json(),
                _ => classify_irreducible_d(&fc)?.to_json(),
            };
            let params = class["params"]
                .as_object()
                .map(|m| m.iter().map(|(k, v)| format!(" {k}={v}")).collect::<String>())
                .unwrap_or_default();
            let text = format!("{}{params}", class["class"].as_str().unwrap_or_default());
            emit(out, element.json(), class, || text)?;
        }
        Command::Phi(a) => {
            let fc = a.element()?;
            let image = phi(&fc)?;
            emit(out, a.json(), image.to_json(), || format!("{} {image}", image.graph().type_name()))?;
        }
        Command::Diagram(a) => {
            let d = diagram_of(&a.element()?)?;
            emit(out, a.json(), d.to_json(), || d.render_ascii().trim_end().to_string())?;
        }
        Command::Afunc(a) => {
            let fc = a.element()?;
            let d = diagram_of(&fc)?;
            let (n, at, av) = (n_value(&fc), a_tilde(&d), a_value(&d));
            let value = json!({ "n": n, "a_tilde": at, "a": av, "agree": n == at });
            emit(out, a.json(), value, || format!("n={n} a~={at} a={av} agree={}", n == at))?;
        }
        Command::Enumerate { group, max_len, budget } => {
            let g = group.graph()?;
            let levels = enumerate_fc(&EnumerationConfig { graph: g, max_length: max_len, budget })?;
            for fc in levels.iter().flatten() {
                emit(out, group.format == Format::Json, fc.to_json(), || format!("{}\t{fc}", fc.len()))?;
            }
        }
        Command::Verify { suite, family, n, max_len, seed, samples, format } => {
            let mut config = SuiteConfig::default_for(&suite)?;
            if family.is_some() || n.is_some() {
                let family = family.unwrap_or(FamilyArg::D).family();
                config.graphs = vec![build_graph(family, n.unwrap_or(2) as usize)?];
            }
            if let Some(m) = max_len {
                config.max_length = m;
            }
            if let Some(s) = samples {
                config.samples = s;
            }
            config.seed = seed;
            let report = run_suite(&suite, &config)?;
            emit(out, format == Format::Json, report.to_json(), || {
                let mut s = format!(
                    "{} {}: checked {}, failures {}",
                    report.suite,
                    if report.passed() { "PASS" } else { "FAIL" },
                    report.checked,
                    report.failures.len()
                );
                for f in report.failures.iter().take(10) {
                    s.push_str(&format!("\n  {}: {}", f.word, f.detail));
                }
                s
            })?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_DOMAIN });
        }
    }
    Ok(EXIT_OK)
}

/// Column of a generator: the fork `{0, 1}` shares the first column, the
/// other D~ fork the last.
fn column(g: &GraphRef, s: Generator) -> usize {
    let n = g.n();
    match g.family() {
        Family::AffineD if s > n => n,
        _ if s <= 1 => 0,
        _ => s - 1,
    }
}

/// One row per normal form layer, first layer on top; two fork letters in
/// one layer are fused into a single mark.
pub fn render_heap(fc: &FcElement) -> String {
    let g = fc.graph();
    let width = g.n() + 1;
    let mut header = vec![String::new(); width];
    for s in g.generators() {
        let c = column(g, s);
        if !header[c].is_empty() {
            header[c].push('/');
        }
        header[c].push_str(&s.to_string());
    }
    let rows: Vec<Vec<String>> = fc
        .layers()
        .iter()
        .map(|layer| {
            let mut row = vec![String::new(); width];
            for &s in layer {
                let c = column(g, s);
                if !row[c].is_empty() && s >= 10 {
                    row[c].push(',');
                }
                row[c].push_str(&s.to_string());
            }
            row.into_iter().map(|c| if c.is_empty() { ".".into() } else { c }).collect()
        })
        .collect();
    let widths: Vec<usize> = (0..width)
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(1))
        .collect();
    let line = |cells: &[String]| {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:^w$}")).collect::<Vec<_>>().join(" ").trim_end().to_string()
    };
    let mut lines = vec![format!("{} {fc}", g.type_name()), line(&header)];
    lines.extend(rows.iter().map(|r| line(r)));
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("fcstar").chain(args.split_whitespace()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cfnf_layers() {
        let (code, out, _) = call("cfnf --type D --n 5 0 4 3 5 2 4 6 7 1");
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "[[0,4],[3,5],[2,4,6,7],[1]]");
    }

    #[test]
    fn not_reduced() {
        let (code, _, err) = call("cfnf --type D --n 5 0 0");
        assert_eq!(code, 1);
        assert!(err.contains("NotReduced"));
    }

    #[test]
    fn afunc_witness() {
        let (code, out, _) = call("afunc --type D --n 2 --format json 0 1");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, json!({"n": 2, "a_tilde": 2, "a": 1, "agree": true}));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call("cfnf --type Q --n 3 0").0, 2);
        assert_eq!(call("cfnf --type D --n 1 0").0, 2);
        assert_eq!(call("reduce --n 3 --policy sideways 0").0, 2);
        assert_eq!(call("verify no-such-suite").0, 2);
        assert_eq!(call("frobnicate").0, 2);
    }

    #[test]
    fn heap_columns() {
        let g = build_graph(Family::AffineD, 2).unwrap();
        let fc = FcElement::parse(&g, "0 1 2 3").unwrap();
        assert_eq!(render_heap(&fc), "D~4 (0 1)(2)(3)\n0/1 2 3/4\n01  .  .\n .  2  .\n .  .  3");
    }
}
