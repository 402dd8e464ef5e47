//! Named property suites. Each one enumerates a bounded universe, checks an
//! invariant exhaustively and reports counts with the first counterexample.

mod embeddings;
mod independence;
mod inject;
mod linalg;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::limits::Limits;
use crate::module::Module;
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Rings to run over; `None` means the suite's default list.
    pub rings: Option<Vec<Ring>>,
    /// Module cardinality bound; `None` means the suite's default.
    pub bound: Option<u64>,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { rings: None, bound: None, limits: Limits::from_env() }
    }
}

impl SuiteConfig {
    pub(crate) fn rings_or(&self, default: &[&str]) -> Vec<Ring> {
        match &self.rings {
            Some(r) => r.clone(),
            None => default.iter().map(|n| ring_by_name(n).expect("built-in ring")).collect(),
        }
    }

    pub(crate) fn bound_or(&self, default: u64) -> u64 {
        self.bound.unwrap_or(default)
    }
}

/// Z/2, Z/4, Z/8, Z/9 and F2[x,y]/(x,y)^2.
pub const TEST_RINGS: [&str; 5] = ["z2", "z4", "z8", "z9", "f2xy"];

/// `z<n>`, `f2xy` or `ut2`.
pub fn ring_by_name(name: &str) -> Option<Ring> {
    Ring::preset(name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub rings: Vec<String>,
    pub bound: Option<u64>,
    pub checks: u64,
    pub violations: u64,
    /// Named counters, in a fixed order.
    pub counters: Vec<(String, u64)>,
    pub first_counterexample: Option<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Accumulates check outcomes for one suite.
pub(crate) struct Tally {
    report: SuiteReport,
}

impl Tally {
    pub(crate) fn new(name: &str, rings: &[Ring], bound: Option<u64>) -> Tally {
        Tally {
            report: SuiteReport {
                name: name.to_string(),
                rings: rings.iter().map(ring_label).collect(),
                bound,
                checks: 0,
                violations: 0,
                counters: Vec::new(),
                first_counterexample: None,
                notes: Vec::new(),
            },
        }
    }

    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.violations += 1;
            if self.report.first_counterexample.is_none() {
                self.report.first_counterexample = Some(what());
            }
        }
    }

    pub(crate) fn count(&mut self, key: &str, by: u64) {
        match self.report.counters.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v += by,
            None => self.report.counters.push((key.to_string(), by)),
        }
    }

    pub(crate) fn note(&mut self, text: &str) {
        self.report.notes.push(text.to_string());
    }

    pub(crate) fn finish(self) -> SuiteReport {
        self.report
    }
}

pub(crate) fn ring_label(r: &Ring) -> String {
    match r.name() {
        Some(n) => n.to_string(),
        None => format!("ring{:?}", r.orders()),
    }
}

/// Orders and action matrices, for counterexample text.
pub(crate) fn describe_module(m: &Module) -> String {
    let mut s = format!("orders {:?}", m.orders());
    for (i, a) in m.actions().iter().enumerate() {
        let _ = write!(s, " b{i}={:?}", a.to_rows());
    }
    s
}

pub(crate) fn describe_hom(h: &Hom) -> String {
    format!(
        "[{}] -> [{}] matrix {:?}",
        describe_module(h.source()),
        describe_module(h.target()),
        h.matrix().to_rows()
    )
}

/// Suite names in the order `all` runs them.
pub const SUITES: [&str; 11] = [
    "linear-algebra",
    "push-preservation",
    "direct-sums",
    "independence-calculus",
    "local-character",
    "witness-surrogate",
    "extension-algorithm",
    "injectivity-classification",
    "purity-split",
    "noetherian",
    "class-closure",
];

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        let mut out = Vec::new();
        for n in SUITES {
            out.extend(run_suite(n, cfg)?);
        }
        return Ok(out);
    }
    let rep = match name {
        "linear-algebra" => linalg::linear_algebra(cfg)?,
        "push-preservation" => embeddings::push_preservation(cfg)?,
        "direct-sums" => embeddings::direct_sums(cfg)?,
        "independence-calculus" => independence::calculus(cfg)?,
        "local-character" => independence::local_character(cfg)?,
        "witness-surrogate" => independence::witness_surrogate(cfg)?,
        "extension-algorithm" => inject::extension_algorithm(cfg)?,
        "injectivity-classification" => inject::classification(cfg)?,
        "purity-split" => embeddings::purity_split(cfg)?,
        "noetherian" => inject::noetherian(cfg)?,
        "class-closure" => inject::class_closure(cfg)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(vec![rep])
}
