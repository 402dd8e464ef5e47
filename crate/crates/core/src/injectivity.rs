//! Relative injectivity over bounded universes of finite modules.
//!
//! Verdicts are relative to the realized universe: "injective at bound B"
//! means every kind-embedding between members of cardinality at most B
//! admits extensions.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactlin::{CanonicalSubgroup, Solution};
use crate::hom::{extension_system, solve_extension, Hom, HomGroup};
use crate::limits::Limits;
use crate::module::{
    all_submodules, are_isomorphic, direct_sum, enumerate_modules_with, fingerprint, power, quotient_by, Module,
    Submodule,
};
use crate::pp::{is_mode_embedding, mode_submodules, Mode};
use crate::pushout::{decompose_chain, induced_corner, pushout, Chain, ChainStart, PushoutResult};
use crate::ring::Ring;

/// Which modules make up the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    All,
    /// Modules without torsion with respect to non-zero-divisors. Over a
    /// finite ring every non-zero-divisor is a unit, so this keeps every
    /// module; the filter exists so that the check is explicit.
    TorsionFree,
    /// A given list, taken up to isomorphism.
    Explicit(Vec<Module>),
}

#[derive(Clone, Debug)]
pub struct UniverseSpec {
    pub ring: Ring,
    pub mode: Mode,
    pub max_size: u64,
    pub filter: ClassFilter,
    pub limits: Limits,
}

impl UniverseSpec {
    pub fn new(ring: &Ring, mode: Mode, max_size: u64) -> UniverseSpec {
        UniverseSpec { ring: ring.clone(), mode, max_size, filter: ClassFilter::All, limits: Limits::from_env() }
    }

    pub fn with_filter(mut self, filter: ClassFilter) -> UniverseSpec {
        self.filter = filter;
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> UniverseSpec {
        self.limits = limits;
        self
    }

    pub fn realize(&self) -> Result<Universe> {
        let members = match &self.filter {
            ClassFilter::All => enumerate_modules_with(&self.ring, self.max_size, &self.limits)?,
            ClassFilter::TorsionFree => enumerate_modules_with(&self.ring, self.max_size, &self.limits)?
                .into_iter()
                .filter(is_torsion_free)
                .collect(),
            ClassFilter::Explicit(list) => {
                let mut out: Vec<Module> = Vec::new();
                for m in list {
                    if m.ring() != &self.ring {
                        return Err(Error::RingMismatch);
                    }
                    if m.cardinality() <= self.max_size && find_iso(&out, m)?.is_none() {
                        out.push(m.clone());
                    }
                }
                out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
                out
            }
        };
        let subs = (0..members.len()).map(|_| OnceLock::new()).collect();
        Ok(Universe { spec: self.clone(), members, subs })
    }
}

/// No nonzero element is killed by a non-zero-divisor of the ring.
fn is_torsion_free(m: &Module) -> bool {
    let ring = m.ring();
    let nzd: Vec<_> = ring
        .elements()
        .iter()
        .filter(|r| ring.elements().iter().all(|s| ring.mul(r, s).iter().any(|&x| x != 0) || s.iter().all(|&x| x == 0)))
        .collect();
    m.elements().iter().filter(|x| x.iter().any(|&v| v != 0)).all(|x| nzd.iter().all(|r| m.act(r, x).iter().any(|&v| v != 0)))
}

/// A realized universe with per-member caches.
#[derive(Debug)]
pub struct Universe {
    pub spec: UniverseSpec,
    pub members: Vec<Module>,
    subs: Vec<OnceLock<Vec<Submodule>>>,
}

impl Universe {
    pub fn mode(&self) -> Mode {
        self.spec.mode
    }

    /// Kind-submodules of member `i`.
    pub fn mode_submodules(&self, i: usize) -> &[Submodule] {
        self.subs[i].get_or_init(|| mode_submodules(&self.members[i], self.spec.mode))
    }

    /// Index of the member isomorphic to `m`.
    pub fn find(&self, m: &Module) -> Result<Option<usize>> {
        find_iso(&self.members, m)
    }

    /// Whether `m` belongs to the class (up to isomorphism), ignoring the
    /// size bound for unrestricted filters.
    pub fn admits(&self, m: &Module) -> Result<bool> {
        match self.spec.filter {
            ClassFilter::All => Ok(true),
            ClassFilter::TorsionFree => Ok(is_torsion_free(m)),
            ClassFilter::Explicit(_) => Ok(self.find(m)?.is_some()),
        }
    }
}

fn find_iso(list: &[Module], m: &Module) -> Result<Option<usize>> {
    let fp = fingerprint(m);
    for (i, x) in list.iter().enumerate() {
        if x.cardinality() == m.cardinality() && fingerprint(x) == fp && are_isomorphic(x, m)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    Submodule,
    Quotient,
    Sum,
}

/// A module built from members that is not itself a member.
#[derive(Clone, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Indices of the members it was built from.
    pub from: Vec<usize>,
    pub witness: Module,
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub members: usize,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Kind-submodules, quotients by kind-submodules and direct sums within the
/// bound must all be members.
pub fn audit_class_closure(u: &Universe) -> Result<ClosureReport> {
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut record = |kind, from: Vec<usize>, m: Module| -> Result<()> {
        if !u.admits(&m)? || (m.cardinality() <= u.spec.max_size && u.find(&m)?.is_none()) {
            violations.push(Violation { kind, from, witness: m });
        }
        Ok(())
    };
    for (i, m) in u.members.iter().enumerate() {
        for s in u.mode_submodules(i) {
            checked += 2;
            record(ViolationKind::Submodule, vec![i], s.module().clone())?;
            record(ViolationKind::Quotient, vec![i], quotient_by(m, s)?.0)?;
        }
    }
    for i in 0..u.members.len() {
        for j in i..u.members.len() {
            let (a, b) = (&u.members[i], &u.members[j]);
            if a.cardinality() * b.cardinality() <= u.spec.max_size {
                checked += 1;
                record(ViolationKind::Sum, vec![i, j], direct_sum(a, b)?.module)?;
            }
        }
    }
    Ok(ClosureReport { members: u.members.len(), checked, violations })
}

/// Some `g: A -> E` that does not extend along `f: A -> B`, if any; decided
/// by comparing the image of restriction with `Hom(A, E)`.
pub fn restriction_gap(f: &Hom, e: &Module) -> Result<Option<Hom>> {
    let ha = HomGroup::new(f.source(), e)?;
    let hb = HomGroup::new(f.target(), e)?;
    let orders = ha.subgroup().ambient_orders().to_vec();
    let gens: Vec<Vec<i64>> = hb.basis.iter().map(|h| h.compose_after(f).map(|c| c.flat())).collect::<Result<_>>()?;
    let image = CanonicalSubgroup::new(&gens, &orders)?;
    if image.cardinality() == ha.cardinality() {
        return Ok(None);
    }
    Ok(ha.basis.iter().find(|g| !image.contains(&g.flat())).cloned())
}

/// A kind-embedding with a map that does not extend along it.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub f: Hom,
    pub g: Hom,
}

impl Counterexample {
    /// Rechecks with the extension solver.
    pub fn replay(&self) -> Result<bool> {
        Ok(solve_extension(&self.f, &self.g)?.is_none())
    }
}

#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub subject: Module,
    pub mode: Mode,
    pub bound: u64,
    pub verdict: bool,
    /// Embeddings tested.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

fn check_subject(e: &Module, u: &Universe) -> Result<()> {
    if e.ring() != &u.spec.ring {
        return Err(Error::RingMismatch);
    }
    if let ClassFilter::Explicit(_) = u.spec.filter {
        let audit = audit_class_closure(u)?;
        if !audit.closed() {
            return Err(Error::Precondition(format!("class is not closed ({} violations)", audit.violations.len())));
        }
        if u.find(e)?.is_none() {
            return Err(Error::Precondition("subject is not in the class".into()));
        }
    }
    Ok(())
}

/// Every kind-embedding `A -> B` between members is, up to an automorphism
/// of `A`, the inclusion of a kind-submodule of `B`; the extension property
/// does not see the automorphism, so inclusions are enough.
fn test_embeddings(u: &Universe) -> impl Iterator<Item = &Submodule> {
    (0..u.members.len()).flat_map(move |i| u.mode_submodules(i).iter()).filter(|s| !s.is_zero() && !s.is_full())
}

pub fn is_rel_injective(e: &Module, u: &Universe) -> Result<InjectivityReport> {
    check_subject(e, u)?;
    let mut checked = 0;
    let mut counterexample = None;
    for s in test_embeddings(u) {
        if !u.admits(s.module())? {
            continue;
        }
        checked += 1;
        if let Some(g) = restriction_gap(s.inclusion(), e)? {
            counterexample = Some(Counterexample { f: s.inclusion().clone(), g });
            break;
        }
    }
    Ok(InjectivityReport {
        subject: e.clone(),
        mode: u.mode(),
        bound: u.spec.max_size,
        verdict: counterexample.is_none(),
        checked,
        counterexample,
    })
}

/// The same verdict reached by solving one extension problem per map.
pub fn is_rel_injective_by_extension(e: &Module, u: &Universe) -> Result<bool> {
    check_subject(e, u)?;
    for s in test_embeddings(u) {
        if !u.admits(s.module())? {
            continue;
        }
        for g in HomGroup::new(s.module(), e)?.elements() {
            if solve_extension(s.inclusion(), &g)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct BaerReport {
    pub pass: bool,
    pub ideals: usize,
    pub ideal: Option<Submodule>,
    pub g: Option<Hom>,
}

/// Extension along every left ideal `I <= R`.
pub fn baer_ideal_test(e: &Module, mode: Mode) -> Result<BaerReport> {
    if mode != Mode::Emb {
        return Err(Error::Precondition("the ideal test applies to plain embeddings only".into()));
    }
    let reg = Module::regular(e.ring());
    let ideals = all_submodules(&reg);
    for i in &ideals {
        if let Some(g) = restriction_gap(i.inclusion(), e)? {
            return Ok(BaerReport { pass: false, ideals: ideals.len(), ideal: Some(i.clone()), g: Some(g) });
        }
    }
    Ok(BaerReport { pass: true, ideals: ideals.len(), ideal: None, g: None })
}

/// `g` restricted to a submodule `x` of `B` lying inside `f[A]`.
fn transport(f: &Hom, g: &Hom, x: &Submodule) -> Hom {
    let k = x.module().num_generators();
    let cols: Vec<Vec<i64>> = (0..k)
        .map(|j| g.apply(&f.lift(&x.inclusion().apply(&x.module().generator(j))).expect("inside the image")))
        .collect();
    let m = crate::exactlin::Matrix::from_fn(g.target().num_generators(), k, |i, j| cols[j][i]);
    Hom::new(x.module(), g.target(), m).expect("restriction of a homomorphism")
}

/// Statistics of a decomposition-based extension.
#[derive(Clone, Debug)]
pub struct ExtensionRun {
    pub h: Option<Hom>,
    pub steps: usize,
    pub nodes: u64,
}

/// The part of [`extend_via_decomposition`] that depends only on `f`: the
/// chain and, per step, the pushout `P` with its corner `t: P -> B_{j+1}`.
#[derive(Clone, Debug)]
pub struct DecompositionPlan {
    pub f: Hom,
    pub mode: Mode,
    pub chain: Chain,
    base: Hom,
    steps: Vec<(PushoutResult, Hom)>,
}

impl DecompositionPlan {
    pub fn new(f: &Hom, mode: Mode) -> Result<DecompositionPlan> {
        let chain = decompose_chain(f, mode, 1, ChainStart::Zero)?;
        let between = |x: &Submodule, y: &Submodule| y.inclusion().factor_through(x.inclusion()).expect("nested");
        let mut steps = Vec::new();
        for j in 0..chain.len() - 1 {
            let (aj, aj1, bj, bj1) = (&chain.image[j], &chain.image[j + 1], &chain.b[j], &chain.b[j + 1]);
            let p = pushout(&between(aj, aj1), &between(aj, bj))?;
            let t = induced_corner(&p, &between(aj1, bj1), &between(bj, bj1))?;
            if !is_mode_embedding(&t, mode) {
                return Err(Error::Exhausted(format!("step {j}: corner map is not a {mode}-embedding")));
            }
            steps.push((p, t));
        }
        let base = between(&chain.image[0], &chain.b[0]);
        Ok(DecompositionPlan { f: f.clone(), mode, chain, base, steps })
    }

    pub fn extend(&self, g: &Hom, limits: &Limits) -> Result<ExtensionRun> {
        let f = &self.f;
        if f.source() != g.source() {
            return Err(Error::Mismatch("f and g have different sources".into()));
        }
        let e = g.target();
        let mut layers = Vec::with_capacity(self.steps.len());
        for (j, (p, t)) in self.steps.iter().enumerate() {
            let hg = HomGroup::new(self.chain.b[j + 1].module(), e)?;
            layers.push(Layer { p, t, hg, g: transport(f, g, &self.chain.image[j + 1]) });
        }
        let h0 = solve_extension(&self.base, &transport(f, g, &self.chain.image[0]))?;
        let mut nodes = 0u64;
        let hlast = match h0 {
            None => None,
            Some(h0) => dfs(&layers, h0, &mut nodes, limits.max_backtrack)?,
        };
        let h = match hlast {
            None => None,
            Some(hl) => {
                let top = self.chain.b.last().expect("nonempty chain");
                let to_top = top.inclusion().factor_through(&Hom::identity(f.target())).expect("top is all of B");
                Some(hl.compose_after(&to_top)?)
            }
        };
        Ok(ExtensionRun { h, steps: self.steps.len(), nodes })
    }
}

/// Extends `g: A -> E` along `f: A -> B` one independent step at a time:
/// at step `j` the pushout `P` of `A_j -> A_{j+1}` and `A_j -> B_j` maps
/// into `B_{j+1}` by a kind-embedding `t`, the maps `g` and `h_j` glue to
/// `s: P -> E`, and `h_{j+1}` solves `h_{j+1} ∘ t = s`. Choices of
/// `h_{j+1}` are backtracked over when a later step fails.
pub fn extend_via_decomposition(f: &Hom, g: &Hom, mode: Mode, limits: &Limits) -> Result<ExtensionRun> {
    DecompositionPlan::new(f, mode)?.extend(g, limits)
}

struct Layer<'a> {
    p: &'a PushoutResult,
    t: &'a Hom,
    hg: HomGroup,
    g: Hom,
}

fn dfs(layers: &[Layer], hj: Hom, nodes: &mut u64, cap: u64) -> Result<Option<Hom>> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::ResourceCap(format!("extension search exceeded {cap} nodes")));
    }
    let Some((layer, rest)) = layers.split_first() else { return Ok(Some(hj)) };
    let s = induced_corner(layer.p, &layer.g, &hj)?;
    let hg = &layer.hg;
    let (particular, kernel) = match extension_system(hg, layer.t, &s).solve() {
        Solution::Unsolvable => return Ok(None),
        Solution::Solvable { particular, kernel } => (particular, kernel),
    };
    for k in kernel.elements() {
        let coeffs: Vec<i64> =
            particular.iter().zip(&k).zip(&hg.orders).map(|((a, b), &o)| (a + b).rem_euclid(o)).collect();
        if let Some(h) = dfs(rest, hg.combination(&coeffs), nodes, cap)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct SigmaReport {
    /// `(n, verdict for E^n)` for each power tested.
    pub powers: Vec<(usize, bool)>,
    pub first_failure: Option<usize>,
}

/// `E, E^2, .., E^k`, stopping at the first failure.
pub fn sigma_injective_bounded(e: &Module, u: &Universe, k: usize) -> Result<SigmaReport> {
    if k == 0 {
        return Err(Error::Precondition("power bound must be at least 1".into()));
    }
    let mut powers = Vec::new();
    for n in 1..=k {
        let size = e.cardinality().checked_pow(n as u32);
        if size.is_none_or(|s| s > u.spec.limits.max_power_size) {
            return Err(Error::ResourceCap(format!(
                "E^{n} exceeds the power size cap {}",
                u.spec.limits.max_power_size
            )));
        }
        let ok = is_rel_injective(&power(e, n), u)?.verdict;
        powers.push((n, ok));
        if !ok {
            return Ok(SigmaReport { powers, first_failure: Some(n) });
        }
    }
    Ok(SigmaReport { powers, first_failure: None })
}

/// A complement of `f[E]` in `A`, the kernel of a retraction.
pub fn split_off_injective(f: &Hom, mode: Mode) -> Result<Submodule> {
    if !is_mode_embedding(f, mode) {
        return Err(Error::Precondition(format!("not a {mode}-embedding")));
    }
    let r = solve_extension(f, &Hom::identity(f.source()))?
        .ok_or_else(|| Error::Exhausted("no retraction: the image is not a direct summand".into()))?;
    let c = r.kernel();
    debug_assert!(c.intersection(&f.image()).is_zero() && c.sum(&f.image()).is_full());
    Ok(c)
}

#[derive(Clone, Debug, Default)]
pub struct NoetherianReport {
    /// Indices of the verdict-injective members.
    pub injectives: Vec<usize>,
    pub sums_checked: usize,
    /// Member indices whose direct sum is not verdict-injective.
    pub sum_violations: Vec<Vec<usize>>,
    pub chains_checked: usize,
    pub chain_violations: Vec<Vec<usize>>,
    pub csb_checked: usize,
    /// Pairs with embeddings both ways that are not isomorphic.
    pub csb_violations: Vec<(usize, usize)>,
}

impl NoetherianReport {
    pub fn closed(&self) -> bool {
        self.sum_violations.is_empty() && self.chain_violations.is_empty() && self.csb_violations.is_empty()
    }
}

/// Direct sums of verdict-injectives, the chains of split inclusions
/// `E_1 <= E_1 + E_2 <= ..`, and mutual embeddings between injectives.
pub fn noetherian_bounded_check(u: &Universe, arity: usize) -> Result<NoetherianReport> {
    let mut rep = NoetherianReport::default();
    for (i, m) in u.members.iter().enumerate() {
        if is_rel_injective(m, u)?.verdict {
            rep.injectives.push(i);
        }
    }
    let inj = rep.injectives.clone();
    let mut verdicts: Vec<(Module, bool)> = Vec::new();
    let mut verdict_of = |m: &Module| -> Result<bool> {
        if let Some(i) = find_iso(&verdicts.iter().map(|v| v.0.clone()).collect::<Vec<_>>(), m)? {
            return Ok(verdicts[i].1);
        }
        let v = is_rel_injective(m, u)?.verdict;
        verdicts.push((m.clone(), v));
        Ok(v)
    };
    // nondecreasing index tuples of length 2..=arity
    let mut stack: Vec<Vec<usize>> = inj.iter().map(|&i| vec![i]).collect();
    while let Some(t) = stack.pop() {
        if t.len() >= 2 {
            let mut acc = u.members[t[0]].clone();
            let mut chain_ok = true;
            for &i in &t[1..] {
                let s = direct_sum(&acc, &u.members[i])?;
                chain_ok &= is_mode_embedding(&s.inj[0], u.mode()) && solve_extension(&s.inj[0], &Hom::identity(&acc))?.is_some();
                acc = s.module;
            }
            rep.sums_checked += 1;
            rep.chains_checked += 1;
            if !verdict_of(&acc)? {
                rep.sum_violations.push(t.clone());
            }
            if !chain_ok {
                rep.chain_violations.push(t.clone());
            }
        }
        if t.len() < arity {
            let size: u64 = t.iter().map(|&i| u.members[i].cardinality()).product();
            for &i in inj.iter().filter(|&&i| i >= *t.last().expect("nonempty")) {
                if size * u.members[i].cardinality() <= u.spec.max_size {
                    let mut n = t.clone();
                    n.push(i);
                    stack.push(n);
                }
            }
        }
    }
    rep.sum_violations.sort();
    rep.chain_violations.sort();
    for (x, &i) in inj.iter().enumerate() {
        for &j in &inj[x..] {
            rep.csb_checked += 1;
            if embeds(u, i, j)? && embeds(u, j, i)? && are_isomorphic(&u.members[i], &u.members[j])?.is_none() {
                rep.csb_violations.push((i, j));
            }
        }
    }
    Ok(rep)
}

/// A kind-embedding of member `i` into member `j`.
fn embeds(u: &Universe, i: usize, j: usize) -> Result<bool> {
    let a = &u.members[i];
    for s in u.mode_submodules(j) {
        if s.cardinality() == a.cardinality() && are_isomorphic(s.module(), a)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;

    fn z4() -> Ring {
        Ring::zmod(4).unwrap()
    }

    fn cyc(r: &Ring, n: i64) -> Module {
        Module::new(r, vec![n], vec![Matrix::identity(1)]).unwrap()
    }

    #[test]
    fn z4_is_self_injective() {
        let r = z4();
        let u = UniverseSpec::new(&r, Mode::Emb, 16).realize().unwrap();
        let rep = is_rel_injective(&Module::regular(&r), &u).unwrap();
        assert!(rep.verdict && rep.checked > 0);
        let rep = is_rel_injective(&cyc(&r, 2), &u).unwrap();
        assert!(!rep.verdict);
        let cx = rep.counterexample.unwrap();
        assert!(cx.replay().unwrap());
        assert!(!is_rel_injective_by_extension(&cyc(&r, 2), &u).unwrap());
    }

    #[test]
    fn pure_mode_is_total() {
        let r = z4();
        let u = UniverseSpec::new(&r, Mode::Pure, 8).realize().unwrap();
        for m in &u.members {
            assert!(is_rel_injective(m, &u).unwrap().verdict);
        }
    }

    #[test]
    fn baer() {
        let r = z4();
        assert!(baer_ideal_test(&Module::regular(&r), Mode::Emb).unwrap().pass);
        let rep = baer_ideal_test(&cyc(&r, 2), Mode::Emb).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.ideal.unwrap().cardinality(), 2);
        assert!(baer_ideal_test(&Module::zero(&r), Mode::Emb).unwrap().pass);
        assert!(baer_ideal_test(&Module::zero(&r), Mode::Rd).is_err());
    }

    #[test]
    fn closure_audit() {
        let r = z4();
        let u = UniverseSpec::new(&r, Mode::Pure, 8).realize().unwrap();
        assert!(audit_class_closure(&u).unwrap().closed());
        let list = vec![Module::zero(&r), Module::regular(&r)];
        let u = UniverseSpec::new(&r, Mode::Emb, 16).with_filter(ClassFilter::Explicit(list)).realize().unwrap();
        let rep = audit_class_closure(&u).unwrap();
        assert!(rep.violations.iter().any(|v| v.kind == ViolationKind::Submodule && v.witness.cardinality() == 2));
        let u =
            UniverseSpec::new(&r, Mode::Emb, 16).with_filter(ClassFilter::Explicit(vec![Module::zero(&r)])).realize().unwrap();
        assert!(audit_class_closure(&u).unwrap().closed());
    }

    #[test]
    fn decomposition_extension_examples() {
        let r2 = Ring::zmod(2).unwrap();
        let z2 = Module::regular(&r2);
        let s = direct_sum(&z2, &z2).unwrap();
        let lim = Limits::default();
        let run = extend_via_decomposition(&s.inj[0], &Hom::identity(&z2), Mode::Pure, &lim).unwrap();
        let h = run.h.unwrap();
        assert_eq!(h.compose_after(&s.inj[0]).unwrap(), Hom::identity(&z2));

        let r = z4();
        let f = Hom::new(&cyc(&r, 2), &Module::regular(&r), Matrix::from_vec(1, 1, vec![2])).unwrap();
        let g = Hom::identity(&cyc(&r, 2));
        assert!(extend_via_decomposition(&f, &g, Mode::Emb, &lim).unwrap().h.is_none());
        assert!(solve_extension(&f, &g).unwrap().is_none());

        let id = Hom::identity(&z2);
        assert_eq!(extend_via_decomposition(&id, &id, Mode::Emb, &lim).unwrap().h.unwrap(), id);
    }

    #[test]
    fn sigma_and_split() {
        let r = z4();
        let u = UniverseSpec::new(&r, Mode::Emb, 16).realize().unwrap();
        let rep = sigma_injective_bounded(&Module::regular(&r), &u, 3).unwrap();
        assert_eq!(rep.first_failure, None);
        assert_eq!(rep.powers.len(), 3);
        assert_eq!(sigma_injective_bounded(&cyc(&r, 2), &u, 2).unwrap().first_failure, Some(1));
        assert_eq!(sigma_injective_bounded(&Module::zero(&r), &u, 2).unwrap().first_failure, None);

        let s = direct_sum(&Module::regular(&r), &cyc(&r, 2)).unwrap();
        let c = split_off_injective(&s.inj[0], Mode::Emb).unwrap();
        assert_eq!(c.cardinality(), 2);
        let reg = Module::regular(&r);
        assert!(split_off_injective(&Hom::identity(&reg), Mode::Emb).unwrap().is_zero());
        assert!(split_off_injective(&Hom::zero(&Module::zero(&r), &reg), Mode::Emb).unwrap().is_full());
    }

    #[test]
    fn noetherian_z4() {
        let r = z4();
        let u = UniverseSpec::new(&r, Mode::Emb, 16).realize().unwrap();
        let rep = noetherian_bounded_check(&u, 2).unwrap();
        let inj: Vec<Vec<i64>> = rep.injectives.iter().map(|&i| u.members[i].orders().to_vec()).collect();
        assert_eq!(inj, vec![vec![], vec![4], vec![4, 4]]);
        assert!(rep.closed());
    }
}
