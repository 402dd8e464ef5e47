//! The `ppmod` command line. Every verb reads JSON records, runs one
//! operation and writes one JSON record.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::injectivity::{
    audit_class_closure, baer_ideal_test, is_rel_injective, noetherian_bounded_check, sigma_injective_bounded,
    ClassFilter, Universe, UniverseSpec,
};
use crate::limits::Limits;
use crate::module::{enumerate_modules_with, Module, Submodule};
use crate::pp::{classify_embedding, Mode, PpFormula};
use crate::pushout::{decompose_chain, find_independence_base, is_independent_square, pushout, ChainStart};
use crate::ring::Ring;
use crate::serial::*;
use crate::suite::{run_suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "ppmod", version, about = "Finite modules, pp-formulas, pushouts and relative injectivity")]
pub struct Cli {
    #[command(flatten)]
    pub caps: Caps,
    /// Write the record here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub verb: Verb,
}

/// Resource caps; each overrides its environment variable.
#[derive(Args, Debug, Default)]
pub struct Caps {
    /// Largest ring cardinality accepted [env PPMOD_MAX_RING_SIZE, default 256].
    #[arg(long, global = true)]
    pub max_ring_size: Option<u64>,
    /// Candidate presentations per module enumeration [env PPMOD_MAX_CANDIDATES, default 100000].
    #[arg(long, global = true)]
    pub max_candidates: Option<u64>,
    /// Nodes visited by the decomposition extension search [env PPMOD_MAX_BACKTRACK, default 65536].
    #[arg(long, global = true)]
    pub max_backtrack: Option<u64>,
    /// Largest power built by the sigma test [env PPMOD_MAX_POWER_SIZE, default 4096].
    #[arg(long, global = true)]
    pub max_power_size: Option<u64>,
}

impl Caps {
    pub fn apply(&self, mut l: Limits) -> Limits {
        if let Some(x) = self.max_ring_size {
            l.max_ring_size = x;
        }
        if let Some(x) = self.max_candidates {
            l.max_candidates = x;
        }
        if let Some(x) = self.max_backtrack {
            l.max_backtrack = x;
        }
        if let Some(x) = self.max_power_size {
            l.max_power_size = x;
        }
        l
    }
}

/// A universe of modules: ring, mode and cardinality bound.
#[derive(Args, Debug)]
pub struct UniverseArgs {
    /// Ring record file or built-in name (z<n>, f2xy, ut2).
    #[arg(long)]
    pub ring: String,
    #[arg(long, default_value = "emb")]
    pub mode: Mode,
    #[arg(long, default_value_t = 16)]
    pub bound: u64,
    /// JSON list of module records to use as the class instead of every
    /// module within the bound.
    #[arg(long)]
    pub members: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Validate a ring record, or describe a built-in ring.
    Ring {
        /// Ring record file or built-in name.
        ring: String,
    },
    /// Canonical form of a module record, or every module up to a bound.
    Module {
        #[arg(long, conflicts_with_all = ["ring", "bound"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "bound")]
        ring: Option<String>,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Kernel, image and bijectivity of a homomorphism.
    Hom {
        #[arg(long)]
        input: PathBuf,
    },
    /// The subgroup a pp-formula defines in a module.
    Pp {
        /// Formula text, e.g. "E w1 . 2*w1 - x1 = 0".
        #[arg(long)]
        formula: String,
        #[arg(long)]
        module: PathBuf,
    },
    /// Plain, RD, pure and split verdicts of a map with a witness.
    Classify {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        mode: Option<Mode>,
    },
    Pushout {
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        #[arg(long, default_value = "emb")]
        mode: Mode,
    },
    /// Independence of the square h1 f1 = h2 f2.
    Indep {
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        #[arg(long)]
        h1: PathBuf,
        #[arg(long)]
        h2: PathBuf,
        #[arg(long, default_value = "emb")]
        mode: Mode,
    },
    /// A base over which two submodules of one module are independent.
    IndepBase {
        #[arg(long)]
        m1: PathBuf,
        #[arg(long)]
        m2: PathBuf,
        #[arg(long, default_value = "emb")]
        mode: Mode,
    },
    /// A chain of independent squares from the image of a map up to its target.
    Decompose {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long, default_value = "emb")]
        mode: Mode,
        /// New target elements per step.
        #[arg(long, default_value_t = 1)]
        step: usize,
        /// Start the chain at zero instead of at the image.
        #[arg(long)]
        from_zero: bool,
    },
    /// Relative injectivity within a bounded universe.
    Inj {
        #[arg(long)]
        subject: PathBuf,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Extension along every left ideal of the ring.
    Baer {
        #[arg(long)]
        subject: PathBuf,
    },
    /// Injectivity of E, E^2, .., E^k.
    Sigma {
        #[arg(long)]
        subject: PathBuf,
        #[arg(long, default_value_t = 2)]
        powers: usize,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Closure of the injectives under sums, chains and mutual embeddings.
    Noetherian {
        #[arg(long, default_value_t = 3)]
        arity: usize,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Closure of the class under isomorphism, kind-submodules and sums.
    Audit {
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Property suites.
    Suite {
        #[command(subcommand)]
        action: SuiteAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteAction {
    Run {
        /// Suite name, or `all`.
        #[arg(long)]
        name: String,
        /// Restrict to these rings (repeatable).
        #[arg(long)]
        ring: Vec<String>,
        #[arg(long)]
        bound: Option<u64>,
    },
}

/// A JSON record and whether the command succeeded (a failing suite
/// still produces its report).
pub struct Outcome {
    pub record: Value,
    pub ok: bool,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())))
}

/// Runs a decoder and prefixes its error with the file name.
fn load<T>(path: &Path, decode: impl FnOnce(&Value) -> Result<T>) -> Result<T> {
    decode(&read_json(path)?).map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// A built-in name or a ring record file.
fn load_ring(spec: &str) -> Result<Ring> {
    if let Some(r) = crate::suite::ring_by_name(spec) {
        return Ok(r);
    }
    load(Path::new(spec), ring_from_json)
}

fn universe(a: &UniverseArgs, limits: Limits) -> Result<Universe> {
    let ring = load_ring(&a.ring)?;
    let mut spec = UniverseSpec::new(&ring, a.mode, a.bound).with_limits(limits);
    if let Some(path) = &a.members {
        let list = read_json(path)?;
        let members = list
            .as_array()
            .ok_or_else(|| Error::Input(format!("{}: expected a list of modules", path.display())))?
            .iter()
            .map(module_from_json)
            .collect::<Result<Vec<Module>>>()?;
        spec = spec.with_filter(ClassFilter::Explicit(members));
    }
    spec.realize()
}

fn ok(record: Value) -> Result<Outcome> {
    Ok(Outcome { record, ok: true })
}

/// Runs one verb with the given caps.
pub fn execute(verb: &Verb, limits: Limits) -> Result<Outcome> {
    match verb {
        Verb::Ring { ring } => {
            let r = load_ring(ring)?;
            ok(json!({
                "kind": "ring",
                "ring": ring_to_json(&r),
                "cardinality": int(r.cardinality() as i64),
                "commutative": r.is_commutative(),
                "local": r.is_local(),
            }))
        }
        Verb::Module { input: Some(path), .. } => {
            let m = load(path, module_from_json)?;
            ok(json!({ "kind": "module", "module": module_to_json(&m), "cardinality": int(m.cardinality() as i64) }))
        }
        Verb::Module { input: None, ring, bound } => {
            let (Some(ring), Some(bound)) = (ring, bound) else {
                return Err(Error::Input("give --input, or --ring with --bound".into()));
            };
            let r = load_ring(ring)?;
            let ms = enumerate_modules_with(&r, *bound, &limits)?;
            ok(json!({
                "kind": "modules",
                "bound": int(*bound as i64),
                "count": int(ms.len() as i64),
                "modules": Value::Array(ms.iter().map(module_to_json).collect()),
            }))
        }
        Verb::Hom { input } => {
            let h = load(input, hom_from_json)?;
            let a = h.analyze();
            ok(json!({
                "kind": "hom",
                "hom": hom_to_json(&h),
                "kernel": submodule_to_json(&a.kernel),
                "image": submodule_to_json(&a.image),
                "injective": a.injective,
                "surjective": a.surjective,
            }))
        }
        Verb::Pp { formula, module } => {
            let m = load(module, module_from_json)?;
            let phi = PpFormula::parse(formula, m.ring())?;
            let g = phi.subgroup(&m)?;
            ok(json!({
                "kind": "pp",
                "formula": phi.to_string(),
                "free": int(phi.free_vars() as i64),
                "cardinality": int(g.cardinality() as i64),
                "generators": Value::Array(g.generators().iter().map(|v| ints(v)).collect()),
            }))
        }
        Verb::Classify { hom, mode } => {
            let f = load(hom, hom_from_json)?;
            let c = classify_embedding(&f);
            let mut rec = classification_to_json(&c);
            if let Some(mode) = mode {
                rec["mode"] = json!(mode.name());
                rec["holds"] = json!(c.holds(*mode));
            }
            ok(rec)
        }
        Verb::Pushout { f1, f2, mode } => {
            let p = pushout(&load(f1, hom_from_json)?, &load(f2, hom_from_json)?)?;
            let legs = p.check_legs(*mode);
            ok(pushout_to_json(&p, &legs))
        }
        Verb::Indep { f1, f2, h1, h2, mode } => {
            let maps: Vec<Hom> = [f1, f2, h1, h2].iter().map(|p| load(p, hom_from_json)).collect::<Result<_>>()?;
            let sq = is_independent_square(&maps[0], &maps[1], &maps[2], &maps[3], *mode)?;
            ok(square_to_json(&sq))
        }
        Verb::IndepBase { m1, m2, mode } => {
            let (a, b): (Submodule, Submodule) = (load(m1, submodule_from_json)?, load(m2, submodule_from_json)?);
            if a.ambient() != b.ambient() {
                return Err(Error::Mismatch("the submodules live in different modules".into()));
            }
            let (m0, m1e) = find_independence_base(&a, &b, *mode)?;
            ok(base_to_json(&m0, &m1e))
        }
        Verb::Decompose { hom, mode, step, from_zero } => {
            let f = load(hom, hom_from_json)?;
            let start = if *from_zero { ChainStart::Zero } else { ChainStart::Source };
            let c = decompose_chain(&f, *mode, *step, start)?;
            ok(chain_to_json(&c))
        }
        Verb::Inj { subject, universe: ua } => {
            let e = load(subject, module_from_json)?;
            let u = universe(ua, limits)?;
            ok(injectivity_to_json(&is_rel_injective(&e, &u)?))
        }
        Verb::Baer { subject } => {
            let e = load(subject, module_from_json)?;
            ok(baer_to_json(&baer_ideal_test(&e, Mode::Emb)?))
        }
        Verb::Sigma { subject, powers, universe: ua } => {
            let e = load(subject, module_from_json)?;
            let u = universe(ua, limits)?;
            ok(sigma_to_json(&sigma_injective_bounded(&e, &u, *powers)?))
        }
        Verb::Noetherian { arity, universe: ua } => {
            let u = universe(ua, limits)?;
            ok(noetherian_to_json(&noetherian_bounded_check(&u, *arity)?))
        }
        Verb::Audit { universe: ua } => {
            let u = universe(ua, limits)?;
            ok(audit_to_json(&audit_class_closure(&u)?))
        }
        Verb::Suite { action: SuiteAction::Run { name, ring, bound } } => {
            let rings = if ring.is_empty() {
                None
            } else {
                Some(ring.iter().map(|r| load_ring(r)).collect::<Result<Vec<_>>>()?)
            };
            let cfg = SuiteConfig { rings, bound: *bound, limits };
            let reports = run_suite(name, &cfg)?;
            let pass = reports.iter().all(|r| r.passed());
            Ok(Outcome {
                record: json!({
                    "kind": "suite-run",
                    "name": name,
                    "pass": pass,
                    "suites": Value::Array(reports.iter().map(suite_report_to_json).collect()),
                }),
                ok: pass,
            })
        }
    }
}

/// Parses arguments, runs the verb and writes the record; returns the exit
/// status (0 success, 1 domain error or failing suite, 2 resource cap).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let limits = cli.caps.apply(Limits::from_env());
    // ring validation reads its cap from the environment
    if let Some(x) = cli.caps.max_ring_size {
        std::env::set_var("PPMOD_MAX_RING_SIZE", x.to_string());
    }
    let (record, code) = match execute(&cli.verb, limits) {
        Ok(o) => (o.record, if o.ok { 0 } else { 1 }),
        Err(e) => (error_to_json(&e), e.exit_code()),
    };
    let text = render(&record);
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("{}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{text}"),
    }
    code
}
