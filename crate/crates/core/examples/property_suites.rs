//! Runs one named property suite (or `all`) and prints a line per suite.
//!
//! cargo run --release --example property_suites -- independence-calculus 8

use std::time::Instant;

use ppmod::suite::{run_suite, SuiteConfig};

fn main() -> ppmod::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "linear-algebra".into());
    let bound = args.next().map(|b| b.parse().expect("bound"));
    let cfg = SuiteConfig { bound, ..SuiteConfig::default() };
    let start = Instant::now();
    for r in run_suite(&name, &cfg)? {
        println!(
            "{:<28} checks {:>9} violations {:>4} {:?}",
            r.name, r.checks, r.violations, r.counters
        );
        if let Some(c) = r.first_counterexample {
            println!("  first counterexample: {c}");
        }
    }
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}
