//! Finite left modules over a [`Ring`].
//!
//! A module is stored in invariant-factor form: additive generators
//! `g_1..g_k` of orders `d_1 | d_2 | ... | d_k` (all `> 1`), plus one action
//! matrix per ring basis element. Elements are coordinate vectors; column
//! `j` of an action matrix is the image of `g_j`.

mod enumerate;
mod iso;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactlin::{apply, big_mod, smith_normal_form, CanonicalSubgroup, Matrix};
use crate::hom::Hom;
use crate::ring::{enumerate_coords, Ring};

pub use enumerate::{enumerate_modules, enumerate_modules_with, simple_modules};
pub use iso::{are_isomorphic, fingerprint, Isomorphism};

pub type ModuleElement = Vec<i64>;

#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

struct ModuleData {
    ring: Ring,
    orders: Vec<i64>,
    actions: Vec<Matrix<i64>>,
    elements: OnceLock<Vec<ModuleElement>>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.orders == other.0.orders && self.0.actions == other.0.actions && self.0.ring == other.0.ring)
    }
}

impl Eq for Module {}

impl Hash for Module {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.orders.hash(state);
        self.0.actions.hash(state);
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.0.orders)
    }
}

/// Result of putting an arbitrary presentation into invariant-factor form.
pub(crate) struct Canonical {
    pub module: Module,
    /// new coordinates from old ones
    pub to_new: Matrix<i64>,
    /// old coordinates of the new generators
    pub to_old: Matrix<i64>,
}

impl Module {
    /// Validates a presentation and brings it into invariant-factor form.
    pub fn new(ring: &Ring, orders: Vec<i64>, actions: Vec<Matrix<i64>>) -> Result<Module> {
        validate(ring, &orders, &actions)?;
        Ok(canonicalize(ring, &orders, &actions).module)
    }

    pub(crate) fn from_canonical(ring: &Ring, orders: Vec<i64>, actions: Vec<Matrix<i64>>) -> Module {
        debug_assert!(is_canonical_orders(&orders));
        debug_assert!(validate(ring, &orders, &actions).is_ok(), "invalid internal module {orders:?}");
        Module(Arc::new(ModuleData { ring: ring.clone(), orders, actions, elements: OnceLock::new() }))
    }

    pub fn zero(ring: &Ring) -> Module {
        Module::from_canonical(ring, vec![], vec![Matrix::zeros(0, 0); ring.rank()])
    }

    /// `R` as a left module over itself.
    pub fn regular(ring: &Ring) -> Module {
        Module::free(ring, 1)
    }

    /// `R^k`.
    pub fn free(ring: &Ring, k: usize) -> Module {
        let m = ring.rank();
        let orders: Vec<i64> = (0..k).flat_map(|_| ring.orders().iter().copied()).collect();
        let actions: Vec<Matrix<i64>> = (0..m)
            .map(|i| {
                let mut a = Matrix::zeros(k * m, k * m);
                for block in 0..k {
                    for j in 0..m {
                        for (t, &x) in ring.structure()[i][j].iter().enumerate() {
                            *a.at_mut(block * m + t, block * m + j) = x;
                        }
                    }
                }
                a
            })
            .collect();
        canonicalize(ring, &orders, &actions).module
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn orders(&self) -> &[i64] {
        &self.0.orders
    }

    pub fn actions(&self) -> &[Matrix<i64>] {
        &self.0.actions
    }

    pub fn action(&self, basis: usize) -> &Matrix<i64> {
        &self.0.actions[basis]
    }

    pub fn num_generators(&self) -> usize {
        self.0.orders.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.0.orders.iter().map(|&d| d as u64).product()
    }

    pub fn is_zero(&self) -> bool {
        self.0.orders.is_empty()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> &[ModuleElement] {
        self.0.elements.get_or_init(|| enumerate_coords(&self.0.orders))
    }

    pub fn zero_element(&self) -> ModuleElement {
        vec![0; self.num_generators()]
    }

    pub fn generator(&self, j: usize) -> ModuleElement {
        let mut v = self.zero_element();
        v[j] = 1;
        v
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.num_generators() && x.iter().zip(&self.0.orders).all(|(v, d)| (0..*d).contains(v))
    }

    pub fn check_element(&self, x: &[i64]) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ForeignElement(format!("{x:?}")))
        }
    }

    pub fn reduce(&self, x: &[i64]) -> ModuleElement {
        x.iter().zip(&self.0.orders).map(|(v, d)| v.rem_euclid(*d)).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> ModuleElement {
        a.iter().zip(b).zip(&self.0.orders).map(|((x, y), d)| (x + y).rem_euclid(*d)).collect()
    }

    pub fn neg(&self, a: &[i64]) -> ModuleElement {
        a.iter().zip(&self.0.orders).map(|(x, d)| (-x).rem_euclid(*d)).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> ModuleElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> ModuleElement {
        a.iter().zip(&self.0.orders).map(|(x, d)| ((k as i128 * *x as i128).rem_euclid(*d as i128)) as i64).collect()
    }

    /// Matrix of the action of a ring element.
    pub fn action_matrix(&self, r: &[i64]) -> Matrix<i64> {
        let k = self.num_generators();
        Matrix::from_fn(k, k, |i, j| {
            let mut acc: i128 = 0;
            for (b, &rb) in r.iter().enumerate() {
                acc += rb as i128 * *self.0.actions[b].at(i, j) as i128;
            }
            acc.rem_euclid(self.0.orders[i] as i128) as i64
        })
    }

    /// `r * x`.
    pub fn act(&self, r: &[i64], x: &[i64]) -> ModuleElement {
        let mut acc = vec![0i128; self.num_generators()];
        for (b, &rb) in r.iter().enumerate() {
            if rb == 0 {
                continue;
            }
            let a = &self.0.actions[b];
            for (j, &xj) in x.iter().enumerate() {
                if xj == 0 {
                    continue;
                }
                for (i, s) in acc.iter_mut().enumerate() {
                    *s += rb as i128 * xj as i128 * *a.at(i, j) as i128;
                }
            }
        }
        acc.iter().zip(&self.0.orders).map(|(s, d)| s.rem_euclid(*d as i128) as i64).collect()
    }

    pub fn act_basis(&self, basis: usize, x: &[i64]) -> ModuleElement {
        apply(&self.0.actions[basis], x, &self.0.orders)
    }

    /// Additive order of an element.
    pub fn element_order(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.0.orders).fold(1, |acc, (&v, &d)| crate::exactlin::lcm(acc, d / crate::exactlin::gcd(v, d)))
    }

    /// `r x = 0`, as a mask over `ring.elements()`.
    pub fn annihilator(&self, x: &[i64]) -> Vec<bool> {
        self.ring().elements().iter().map(|r| self.act(r, x).iter().all(|&v| v == 0)).collect()
    }

    /// Sort key used for deterministic enumeration output.
    pub fn sort_key(&self) -> (u64, &[i64], &[Matrix<i64>]) {
        (self.cardinality(), &self.0.orders, &self.0.actions)
    }

    pub fn identity(&self) -> Hom {
        Hom::identity(self)
    }
}

fn is_canonical_orders(orders: &[i64]) -> bool {
    orders.iter().all(|&d| d > 1) && orders.windows(2).all(|w| w[1] % w[0] == 0)
}

/// Checks dimensions, additive well-definedness, unit and multiplicativity.
pub(crate) fn validate(ring: &Ring, orders: &[i64], actions: &[Matrix<i64>]) -> Result<()> {
    let k = orders.len();
    if orders.iter().any(|&d| d < 1) {
        return Err(Error::DimensionMismatch(format!("additive orders must be positive, got {orders:?}")));
    }
    if actions.len() != ring.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices given for a ring with {} basis elements",
            actions.len(),
            ring.rank()
        )));
    }
    for a in actions {
        if a.rows() != k || a.cols() != k {
            return Err(Error::DimensionMismatch(format!(
                "action matrix is {}x{}, expected {k}x{k}",
                a.rows(),
                a.cols()
            )));
        }
    }
    for (b, a) in actions.iter().enumerate() {
        for j in 0..k {
            for i in 0..k {
                let x = *a.at(i, j) as i128;
                if (orders[j] as i128 * x) % orders[i] as i128 != 0 {
                    return Err(Error::NotWellDefined(format!(
                        "action of b{b} on generator {j}: order {} does not annihilate the image",
                        orders[j]
                    )));
                }
                if (ring.orders()[b] as i128 * x) % orders[i] as i128 != 0 {
                    return Err(Error::NotWellDefined(format!(
                        "action of b{b} is not annihilated by its additive order {}",
                        ring.orders()[b]
                    )));
                }
            }
        }
    }
    let act = |r: &[i64]| -> Matrix<i64> {
        Matrix::from_fn(k, k, |i, j| {
            let mut acc: i128 = 0;
            for (b, &rb) in r.iter().enumerate() {
                acc += rb as i128 * *actions[b].at(i, j) as i128;
            }
            acc.rem_euclid(orders[i] as i128) as i64
        })
    };
    let reduce = |m: Matrix<i64>| -> Matrix<i64> {
        Matrix::from_fn(k, k, |i, j| m.at(i, j).rem_euclid(orders[i]))
    };
    let unit = act(ring.unit());
    for j in 0..k {
        for i in 0..k {
            if *unit.at(i, j) != if i == j { 1 % orders[i] } else { 0 } {
                return Err(Error::UnitNotIdentity(j));
            }
        }
    }
    for bi in 0..ring.rank() {
        for bj in 0..ring.rank() {
            let lhs = reduce(actions[bi].mul(&actions[bj]));
            let rhs = act(&ring.structure()[bi][bj]);
            if lhs != rhs {
                return Err(Error::NonMultiplicative(bi, bj));
            }
        }
    }
    Ok(())
}

/// Invariant-factor form of a validated presentation.
pub(crate) fn canonicalize(ring: &Ring, orders: &[i64], actions: &[Matrix<i64>]) -> Canonical {
    let k = orders.len();
    if is_canonical_orders(orders) {
        let actions = actions.iter().map(|a| Matrix::from_fn(k, k, |i, j| a.at(i, j).rem_euclid(orders[i]))).collect();
        return Canonical {
            module: Module::from_canonical(ring, orders.to_vec(), actions),
            to_new: Matrix::identity(k),
            to_old: Matrix::identity(k),
        };
    }
    let rel = Matrix::from_fn(k, k, |i, j| BigInt::from(if i == j { orders[i] } else { 0 }));
    present(ring, rel, orders, actions)
}

/// Module `Z^k / span(columns of rel)` with the action of `actions` (given
/// on `Z^k` modulo `orders`, which must be among the relations).
fn present(ring: &Ring, rel: Matrix<BigInt>, orders: &[i64], actions: &[Matrix<i64>]) -> Canonical {
    let k = orders.len();
    let snf = smith_normal_form(&rel);
    let diag = snf.diagonal();
    let keep: Vec<usize> = (0..k).filter(|&i| diag[i] != BigInt::from(1)).collect();
    let new_orders: Vec<i64> = keep.iter().map(|&i| i64::try_from(&diag[i]).expect("order fits")).collect();
    let to_new = Matrix::from_fn(keep.len(), k, |r, j| big_mod(snf.u.at(keep[r], j), new_orders[r]));
    let to_old = Matrix::from_fn(k, keep.len(), |i, c| big_mod(snf.u_inv.at(i, keep[c]), orders[i]));
    let new_actions: Vec<Matrix<i64>> = actions
        .iter()
        .map(|a| {
            let aq = Matrix::from_fn(k, keep.len(), |i, c| {
                let mut acc: i128 = 0;
                for p in 0..k {
                    acc += *a.at(i, p) as i128 * *to_old.at(p, c) as i128;
                }
                acc.rem_euclid(orders[i] as i128) as i64
            });
            Matrix::from_fn(keep.len(), keep.len(), |r, c| {
                let mut acc: i128 = 0;
                for i in 0..k {
                    acc += *to_new.at(r, i) as i128 * *aq.at(i, c) as i128;
                }
                acc.rem_euclid(new_orders[r] as i128) as i64
            })
        })
        .collect();
    Canonical { module: Module::from_canonical(ring, new_orders, new_actions), to_new, to_old }
}

/// The regular module together with the map taking a ring element to its
/// coordinates in the module.
pub fn regular_with_coordinates(ring: &Ring) -> (Module, impl Fn(&[i64]) -> ModuleElement) {
    let m = ring.rank();
    let actions: Vec<Matrix<i64>> =
        (0..m).map(|i| Matrix::from_fn(m, m, |t, j| ring.structure()[i][j][t])).collect();
    let c = canonicalize(ring, ring.orders(), &actions);
    let module = c.module.clone();
    let to_new = c.to_new;
    let orders = module.orders().to_vec();
    (module, move |r: &[i64]| apply(&to_new, r, &orders))
}

/// Validated module constructor.
pub fn make_module(ring: &Ring, orders: Vec<i64>, actions: Vec<Matrix<i64>>) -> Result<Module> {
    Module::new(ring, orders, actions)
}

/// `A + B` with its canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub inj: [Hom; 2],
    pub proj: [Hom; 2],
}

pub fn direct_sum(a: &Module, b: &Module) -> Result<DirectSum> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let (ka, kb) = (a.num_generators(), b.num_generators());
    let k = ka + kb;
    let orders: Vec<i64> = a.orders().iter().chain(b.orders()).copied().collect();
    let actions: Vec<Matrix<i64>> = a
        .actions()
        .iter()
        .zip(b.actions())
        .map(|(x, y)| {
            Matrix::from_fn(k, k, |i, j| match (i < ka, j < ka) {
                (true, true) => *x.at(i, j),
                (false, false) => *y.at(i - ka, j - ka),
                _ => 0,
            })
        })
        .collect();
    let c = canonicalize(a.ring(), &orders, &actions);
    let s = c.module;
    let inj_a = Matrix::from_fn(s.num_generators(), ka, |r, j| *c.to_new.at(r, j));
    let inj_b = Matrix::from_fn(s.num_generators(), kb, |r, j| *c.to_new.at(r, ka + j));
    let proj_a = Matrix::from_fn(ka, s.num_generators(), |i, col| *c.to_old.at(i, col));
    let proj_b = Matrix::from_fn(kb, s.num_generators(), |i, col| *c.to_old.at(ka + i, col));
    Ok(DirectSum {
        inj: [Hom::new_unchecked(a, &s, inj_a), Hom::new_unchecked(b, &s, inj_b)],
        proj: [Hom::new_unchecked(&s, a, proj_a), Hom::new_unchecked(&s, b, proj_b)],
        module: s,
    })
}

/// `M^n`.
pub fn power(m: &Module, n: usize) -> Module {
    let mut acc = Module::zero(m.ring());
    for _ in 0..n {
        acc = direct_sum(&acc, m).expect("same ring").module;
    }
    acc
}

/// A submodule of a fixed ambient module, stored as a canonical subgroup.
#[derive(Clone)]
pub struct Submodule(Arc<SubData>);

struct SubData {
    ambient: Module,
    subgroup: CanonicalSubgroup,
    realized: OnceLock<(Module, Hom)>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.0.subgroup == other.0.subgroup
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.subgroup.hash(state);
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By cardinality, then canonical form.
impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality().cmp(&other.cardinality()).then_with(|| self.0.subgroup.cmp(&other.0.subgroup))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sub{:?}", self.0.subgroup)
    }
}

impl Submodule {
    pub(crate) fn from_closed(ambient: &Module, subgroup: CanonicalSubgroup) -> Submodule {
        debug_assert_eq!(subgroup.ambient_orders(), ambient.orders());
        Submodule(Arc::new(SubData { ambient: ambient.clone(), subgroup, realized: OnceLock::new() }))
    }

    /// Checks closure under the ring action.
    pub fn from_subgroup(ambient: &Module, subgroup: CanonicalSubgroup) -> Result<Submodule> {
        if subgroup.ambient_orders() != ambient.orders() {
            return Err(Error::DimensionMismatch("subgroup lives in a different ambient group".into()));
        }
        for g in subgroup.generators() {
            for b in 0..ambient.ring().rank() {
                if !subgroup.contains(&ambient.act_basis(b, &g)) {
                    return Err(Error::NotActionClosed(b));
                }
            }
        }
        Ok(Submodule::from_closed(ambient, subgroup))
    }

    /// Smallest submodule containing `gens`.
    pub fn generate(ambient: &Module, gens: &[ModuleElement]) -> Result<Submodule> {
        for g in gens {
            ambient.check_element(g)?;
        }
        Ok(Submodule::from_closed(ambient, close(ambient, CanonicalSubgroup::new(gens, ambient.orders())?)))
    }

    pub fn zero(ambient: &Module) -> Submodule {
        Submodule::from_closed(ambient, CanonicalSubgroup::zero(ambient.orders()))
    }

    pub fn full(ambient: &Module) -> Submodule {
        Submodule::from_closed(ambient, CanonicalSubgroup::full(ambient.orders()))
    }

    pub fn ambient(&self) -> &Module {
        &self.0.ambient
    }

    pub fn subgroup(&self) -> &CanonicalSubgroup {
        &self.0.subgroup
    }

    pub fn cardinality(&self) -> u64 {
        self.0.subgroup.cardinality()
    }

    pub fn is_zero(&self) -> bool {
        self.0.subgroup.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.cardinality() == self.ambient().cardinality()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.0.subgroup.contains(x)
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.0.subgroup.elements()
    }

    pub fn generators(&self) -> Vec<ModuleElement> {
        self.0.subgroup.generators()
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        self.0.subgroup.is_subgroup_of(&other.0.subgroup)
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule::from_closed(self.ambient(), self.0.subgroup.sum(&other.0.subgroup))
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        Submodule::from_closed(self.ambient(), self.0.subgroup.intersection(&other.0.subgroup))
    }

    /// `r S`.
    pub fn scaled(&self, r: &[i64]) -> Submodule {
        let m = self.ambient();
        let gens: Vec<ModuleElement> = self.generators().iter().map(|g| m.act(r, g)).collect();
        // r S is only a subgroup in general; close it for use as a submodule
        Submodule::from_closed(m, close(m, CanonicalSubgroup::new(&gens, m.orders()).expect("same ambient")))
    }

    /// The subgroup `r S` (not closed under the action).
    pub fn scaled_subgroup(&self, r: &[i64]) -> CanonicalSubgroup {
        let m = self.ambient();
        let gens: Vec<ModuleElement> = self.generators().iter().map(|g| m.act(r, g)).collect();
        CanonicalSubgroup::new(&gens, m.orders()).expect("same ambient")
    }

    /// The submodule as a module in its own right, with its inclusion.
    pub fn realize(&self) -> (&Module, &Hom) {
        let (m, h) = self.0.realized.get_or_init(|| {
            let ambient = self.ambient();
            let sub = &self.0.subgroup;
            let basis = sub.abelian_basis();
            let k = basis.orders.len();
            let actions: Vec<Matrix<i64>> = (0..ambient.ring().rank())
                .map(|b| {
                    let cols: Vec<Vec<i64>> = basis
                        .generators
                        .iter()
                        .map(|g| basis.coordinates(sub, &ambient.act_basis(b, g)).expect("closed submodule"))
                        .collect();
                    Matrix::from_fn(k, k, |i, j| cols[j][i])
                })
                .collect();
            let m = Module::from_canonical(ambient.ring(), basis.orders.clone(), actions);
            let incl = Matrix::from_fn(ambient.num_generators(), k, |i, j| basis.generators[j][i]);
            let h = Hom::new_unchecked(&m, ambient, incl);
            (m, h)
        });
        (m, h)
    }

    pub fn module(&self) -> &Module {
        self.realize().0
    }

    pub fn inclusion(&self) -> &Hom {
        self.realize().1
    }
}

/// Closure of a subgroup under the ring action.
pub(crate) fn close(m: &Module, mut s: CanonicalSubgroup) -> CanonicalSubgroup {
    loop {
        let mut gens = s.generators();
        let base = gens.clone();
        for g in &base {
            for b in 0..m.ring().rank() {
                let img = m.act_basis(b, g);
                if !s.contains(&img) {
                    gens.push(img);
                }
            }
        }
        if gens.len() == base.len() {
            return s;
        }
        s = CanonicalSubgroup::new(&gens, m.orders()).expect("same ambient");
    }
}

pub fn submodule_generate(m: &Module, gens: &[ModuleElement]) -> Result<Submodule> {
    Submodule::generate(m, gens)
}

/// Every submodule, sorted by cardinality then canonical form.
pub fn all_submodules(m: &Module) -> Vec<Submodule> {
    let mut cyclic: BTreeSet<CanonicalSubgroup> = BTreeSet::new();
    for x in m.elements() {
        cyclic.insert(close(m, CanonicalSubgroup::new(std::slice::from_ref(x), m.orders()).expect("same ambient")));
    }
    let mut all: BTreeSet<CanonicalSubgroup> = BTreeSet::new();
    all.insert(CanonicalSubgroup::zero(m.orders()));
    for c in &cyclic {
        let current: Vec<CanonicalSubgroup> = all.iter().cloned().collect();
        for s in current {
            if !c.is_subgroup_of(&s) {
                all.insert(s.sum(c));
            }
        }
    }
    let mut out: Vec<Submodule> = all.into_iter().map(|s| Submodule::from_closed(m, s)).collect();
    out.sort();
    out
}

/// Quotient module with its projection.
pub fn quotient_by(m: &Module, s: &Submodule) -> Result<(Module, Hom)> {
    if s.ambient() != m {
        return Err(Error::Mismatch("submodule of a different module".into()));
    }
    for g in s.generators() {
        for b in 0..m.ring().rank() {
            if !s.contains(&m.act_basis(b, &g)) {
                return Err(Error::NotActionClosed(b));
            }
        }
    }
    let k = m.num_generators();
    let gens = s.generators();
    let rel = Matrix::from_fn(k, k + gens.len(), |i, j| {
        BigInt::from(if j < k {
            if i == j {
                m.orders()[i]
            } else {
                0
            }
        } else {
            gens[j - k][i]
        })
    });
    let c = present(m.ring(), rel, m.orders(), m.actions());
    let proj = Hom::new_unchecked(m, &c.module, c.to_new);
    Ok((c.module, proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Ring {
        Ring::zmod(4).unwrap()
    }

    fn cyclic(r: &Ring, n: i64) -> Module {
        Module::new(r, vec![n], vec![Matrix::from_vec(1, 1, vec![1])]).unwrap()
    }

    #[test]
    fn regular_module_over_z4() {
        let m = Module::regular(&z4());
        assert_eq!(m.orders(), &[4]);
    }

    #[test]
    fn regular_module_over_f2xy() {
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        let m = Module::regular(&r);
        assert_eq!(m.orders(), &[2, 2, 2]);
        // x sends 1 to x and kills x, y
        let x = m.action(1);
        assert_eq!(x, &Matrix::from_vec(3, 3, vec![0, 0, 0, 1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn zero_action_of_unit_is_rejected() {
        let e = Module::new(&z4(), vec![2], vec![Matrix::from_vec(1, 1, vec![0])]).unwrap_err();
        assert_eq!(e, Error::UnitNotIdentity(0));
    }

    #[test]
    fn ill_defined_action_is_rejected() {
        // over Z/2, an order-4 generator is not allowed
        let r = Ring::zmod(2).unwrap();
        let e = Module::new(&r, vec![4], vec![Matrix::from_vec(1, 1, vec![1])]).unwrap_err();
        assert!(matches!(e, Error::NotWellDefined(_)));
    }

    #[test]
    fn non_canonical_orders_are_normalized() {
        let r = Ring::zmod(12).unwrap();
        let m = Module::new(&r, vec![4, 3], vec![Matrix::identity(2)]).unwrap();
        assert_eq!(m.orders(), &[12]);
        let again = Module::new(&r, m.orders().to_vec(), m.actions().to_vec()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn direct_sums() {
        let r = z4();
        let (z2, z4m) = (cyclic(&r, 2), cyclic(&r, 4));
        let s = direct_sum(&z2, &z2).unwrap();
        assert_eq!(s.module.orders(), &[2, 2]);
        let a = direct_sum(&z2, &z4m).unwrap();
        let b = direct_sum(&z4m, &z2).unwrap();
        assert_eq!(a.module.orders(), &[2, 4]);
        assert!(are_isomorphic(&a.module, &b.module).unwrap().is_some());
        for (i, p) in a.inj.iter().zip(&a.proj) {
            assert!(p.compose_after(i).unwrap().is_identity());
        }
        let zero = Module::zero(&r);
        assert_eq!(direct_sum(&z4m, &zero).unwrap().module, z4m);
    }

    #[test]
    fn generated_submodules() {
        let r = z4();
        let m = Module::regular(&r);
        let s = Submodule::generate(&m, &[vec![2]]).unwrap();
        assert_eq!(s.elements(), vec![vec![0], vec![2]]);
        assert!(Submodule::generate(&m, &[]).unwrap().is_zero());
        assert!(matches!(Submodule::generate(&m, &[vec![7]]), Err(Error::ForeignElement(_))));

        let f = Ring::truncated_poly(2, 2, 2).unwrap();
        let reg = Module::regular(&f);
        let x = Submodule::generate(&reg, &[f.basis_element(1)]).unwrap();
        assert_eq!(x.cardinality(), 2);
    }

    #[test]
    fn quotients() {
        let r = z4();
        let m = Module::regular(&r);
        let s = Submodule::generate(&m, &[vec![2]]).unwrap();
        let (q, p) = quotient_by(&m, &s).unwrap();
        assert_eq!(q.orders(), &[2]);
        assert_eq!(p.apply(&[1]), vec![1]);
        let (q0, _) = quotient_by(&m, &Submodule::zero(&m)).unwrap();
        assert_eq!(q0, m);
        let (qf, _) = quotient_by(&m, &Submodule::full(&m)).unwrap();
        assert!(qf.is_zero());
    }

    #[test]
    fn submodule_realization_has_right_size() {
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        let m = Module::free(&r, 2);
        for s in all_submodules(&m).iter().step_by(7) {
            let (sm, incl) = s.realize();
            assert_eq!(sm.cardinality(), s.cardinality());
            assert!(incl.is_injective());
            let (q, _) = quotient_by(&m, s).unwrap();
            assert_eq!(q.cardinality() * s.cardinality(), m.cardinality());
        }
    }

    #[test]
    fn submodules_of_z4_squared_over_z4() {
        let m = Module::free(&z4(), 2);
        // subgroups of Z/4 + Z/4: 15
        assert_eq!(all_submodules(&m).len(), 15);
    }
}
