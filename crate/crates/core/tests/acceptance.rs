use std::process::ExitCode;
use std::time::{Duration, Instant};

use fcstar::harness::{run_suite, SuiteConfig};

/// Every criterion demands an exact match.
const ALLOWED_FAILURES: usize = 0;
const SUITE_TIME_LIMIT: Duration = Duration::from_secs(300);

const CRITERIA: &[(u32, &str, &[&str])] = &[
    (1, "normal form unique over all reduced expressions", &["cfnf-uniqueness", "enumeration"]),
    (2, "trace length invariance, one-sided endpoint uniqueness", &["trace-length"]),
    (3, "D~ irreducibles = CC + CZ + Candy", &["classification-D"]),
    (4, "B~ irreducibles in weak and star mode", &["classification-B"]),
    (5, "phi injective, irreducibility preserved", &["phi"]),
    (6, "diagram relations and associativity", &["diagram-relations"]),
    (7, "loop census", &["loop-census"]),
    (8, "descent transfer", &["descent-transfer"]),
    (9, "faithfulness", &["faithfulness"]),
    (10, "n(w) = a~(D_w)", &["a-function", "heap-oracles"]),
    (11, "canonicalizer confluence", &["confluence"]),
    (12, "worked examples", &["worked-examples"]),
];

#[allow(clippy::absurd_extreme_comparisons)]
fn main() -> ExitCode {
    let mut all_ok = true;
    for &(id, title, suites) in CRITERIA {
        let mut checked = 0;
        let mut failures = Vec::new();
        let mut slowest = Duration::ZERO;
        let mut error = None;
        for suite in suites {
            let start = Instant::now();
            let result = SuiteConfig::default_for(suite).and_then(|c| run_suite(suite, &c));
            slowest = slowest.max(start.elapsed());
            match result {
                Ok(report) => {
                    checked += report.checked;
                    failures.extend(report.failures);
                }
                Err(e) => error = Some(format!("{suite}: {e}")),
            }
        }
        let ok = error.is_none() && failures.len() <= ALLOWED_FAILURES && slowest <= SUITE_TIME_LIMIT;
        all_ok &= ok;
        println!(
            "criterion {id:>2} {} {title}: checked {checked}, failures {}, slowest suite {:.1}s",
            if ok { "PASS" } else { "FAIL" },
            failures.len(),
            slowest.as_secs_f64()
        );
        if let Some(e) = error {
            println!("    error: {e}");
        }
        for f in failures.iter().take(5) {
            println!("    {}: {}", f.word, f.detail);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
