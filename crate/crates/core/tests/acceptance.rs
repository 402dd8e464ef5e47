//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::thread;
use std::time::Instant;

use ppmod::suite::{run_suite, SuiteConfig, SuiteReport};

fn suite(name: &str, bound: Option<u64>) -> Result<SuiteReport, String> {
    let cfg = SuiteConfig { bound, ..SuiteConfig::default() };
    let mut reps = run_suite(name, &cfg).map_err(|e| e.to_string())?;
    Ok(reps.remove(0))
}

fn summary(r: &SuiteReport) -> String {
    let counters: Vec<String> = r.counters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!("{} checks, {} violations [{}]", r.checks, r.violations, counters.join(" "));
    if let Some(c) = &r.first_counterexample {
        s.push_str(&format!("; first counterexample: {c}"));
    }
    s
}

fn full_run() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ppmod"))
        .args(["suite", "run", "--name", "all", "--bound", "8"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)));
    }
    Ok(out.stdout)
}

fn main() {
    let criteria: [(&str, &str, Option<u64>); 9] = [
        ("1 linear algebra oracle", "linear-algebra", None),
        ("2 pushouts preserve kind-embeddings (|N| <= 12)", "push-preservation", Some(12)),
        ("3 direct sums of kind-embeddings (|C+D| <= 12)", "direct-sums", Some(12)),
        ("4 independence calculus (corners <= 8)", "independence-calculus", Some(8)),
        ("5 local character (|N| <= 12)", "local-character", Some(12)),
        ("6 extension by decomposition (|B|, |E| <= 8)", "extension-algorithm", Some(8)),
        ("7 injectivity classification (|E| <= 16)", "injectivity-classification", Some(16)),
        ("8 purity against splitting (|B| <= 16)", "purity-split", Some(16)),
        ("9 noetherian closure (|E| <= 16)", "noetherian", Some(16)),
    ];
    // the determinism runs are independent of the in-process suites
    let runs = thread::spawn(|| {
        let a = thread::spawn(full_run);
        let b = full_run();
        (a.join().expect("first run"), b)
    });

    let mut failed = 0;
    for (label, name, bound) in criteria {
        let start = Instant::now();
        let (ok, detail) = match suite(name, bound) {
            Ok(r) => (r.passed(), summary(&r)),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!ok);
        println!("{} criterion {label}: {detail} ({:.1?})", if ok { "PASS" } else { "FAIL" }, start.elapsed());
    }

    let (a, b) = runs.join().expect("determinism runs");
    let (ok, detail) = match (a, b) {
        (Ok(a), Ok(b)) if a == b => (true, format!("two runs of `suite run --name all --bound 8`, {} identical bytes", a.len())),
        (Ok(a), Ok(b)) => (false, format!("reports differ ({} vs {} bytes)", a.len(), b.len())),
        (Err(e), _) | (_, Err(e)) => (false, e),
    };
    failed += usize::from(!ok);
    println!("{} criterion 10 determinism: {detail}", if ok { "PASS" } else { "FAIL" });

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria pass");
}
