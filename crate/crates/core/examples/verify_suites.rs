use fcstar::harness::{run_suite, SuiteConfig, SUITES};
use fcstar::{build_graph, Family};

fn main() -> fcstar::Result<()> {
    let small = SuiteConfig::new(vec![build_graph(Family::AffineD, 2)?, build_graph(Family::AffineB, 2)?], 8);
    for &suite in SUITES {
        let mut config = SuiteConfig::default_for(suite)?;
        if !config.graphs.is_empty() {
            config.graphs.retain(|g| small.graphs.iter().any(|s| s.family() == g.family()));
            config.graphs.truncate(1);
            config.max_length = config.max_length.min(small.max_length);
            config.samples = 200;
            config.orders = 20;
        }
        let report = run_suite(suite, &config)?;
        println!(
            "{suite:<18} {} checked {:>5} failures {}",
            if report.passed() { "PASS" } else { "FAIL" },
            report.checked,
            report.failures.len()
        );
    }
    let report = run_suite("worked-examples", &SuiteConfig::default_for("worked-examples")?)?;
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    Ok(())
}
