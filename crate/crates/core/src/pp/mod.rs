//! Positive primitive formulas: syntax, evaluation on finite modules, and
//! the embedding classifier.

mod classify;
mod parse;

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{CanonicalSubgroup, LinearSystem, Solution};
use crate::module::{Module, ModuleElement};
use crate::ring::{Ring, RingElement};

pub use classify::{
    classify_embedding, diagram_formula, is_mode_embedding, is_mode_submodule, mode_submodules, reflection_failure,
    EmbeddingClass, FormulaShape, Mode, Witness,
};

/// One equation `sum_j bound[j] w_j + sum_k free[k] x_k = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub free: Vec<RingElement>,
    pub bound: Vec<RingElement>,
}

/// `E w_1 .. w_l . (eq_1 & .. & eq_m)` with free variables `x_1..x_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct PpFormula {
    ring: Ring,
    free: usize,
    bound: usize,
    equations: Vec<Equation>,
}

impl fmt::Debug for PpFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PpFormula {
    pub fn empty(ring: &Ring, free: usize, bound: usize) -> PpFormula {
        PpFormula { ring: ring.clone(), free, bound, equations: Vec::new() }
    }

    pub fn parse(text: &str, ring: &Ring) -> Result<PpFormula> {
        parse::parse(text, ring)
    }

    /// Adds an equation; coefficients are reduced into the ring.
    pub fn push_equation(&mut self, free: Vec<RingElement>, bound: Vec<RingElement>) {
        assert_eq!(free.len(), self.free, "free coefficient count");
        assert_eq!(bound.len(), self.bound, "bound coefficient count");
        let free = free.iter().map(|c| self.ring.reduce(c)).collect();
        let bound = bound.iter().map(|c| self.ring.reduce(c)).collect();
        self.equations.push(Equation { free, bound });
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn free_vars(&self) -> usize {
        self.free
    }

    pub fn bound_vars(&self) -> usize {
        self.bound
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// `phi(M)`, a subgroup of `M^n` (coordinates of `x_1` first).
    pub fn subgroup(&self, m: &Module) -> Result<CanonicalSubgroup> {
        pp_subgroup(self, m)
    }

    /// `M |= phi(a)`.
    pub fn holds(&self, m: &Module, tuple: &[ModuleElement]) -> Result<bool> {
        if tuple.len() != self.free {
            return Err(Error::DimensionMismatch(format!("formula has {} free variables", self.free)));
        }
        for a in tuple {
            m.check_element(a)?;
        }
        Ok(self.subgroup(m)?.contains(&tuple.concat()))
    }
}

impl fmt::Display for PpFormula {
    /// Every term is printed, zero coefficients included, so the arity
    /// survives a round trip through the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bound > 0 {
            let ws: Vec<String> = (1..=self.bound).map(|j| format!("w{j}")).collect();
            write!(f, "E {} . ", ws.join(" "))?;
        }
        for (e, eq) in self.equations.iter().enumerate() {
            if e > 0 {
                write!(f, " & ")?;
            }
            let terms = eq
                .bound
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{}*w{}", self.ring.format_element(c), j + 1))
                .chain(eq.free.iter().enumerate().map(|(k, c)| format!("{}*x{}", self.ring.format_element(c), k + 1)));
            let terms: Vec<String> = terms.collect();
            if terms.is_empty() {
                // no variables at all: the formula is "true"
                write!(f, "0*x1 = 0")?;
            } else {
                write!(f, "{} = 0", terms.join(" + "))?;
            }
        }
        if self.equations.is_empty() {
            write!(f, "0*x1 = 0")?;
        }
        Ok(())
    }
}

pub fn parse_pp(text: &str, ring: &Ring) -> Result<PpFormula> {
    PpFormula::parse(text, ring)
}

/// The solution set of `phi` in `M^n`, with the bound variables
/// eliminated.
pub fn pp_subgroup(phi: &PpFormula, m: &Module) -> Result<CanonicalSubgroup> {
    if phi.ring != *m.ring() {
        return Err(Error::RingMismatch);
    }
    let k = m.num_generators();
    let (n, l) = (phi.free, phi.bound);
    let moduli: Vec<i64> = (0..n + l).flat_map(|_| m.orders().iter().copied()).collect();
    let mut sys = LinearSystem::new(moduli);
    for eq in &phi.equations {
        let mats: Vec<_> = eq.free.iter().chain(&eq.bound).map(|c| m.action_matrix(c)).collect();
        for (i, &d) in m.orders().iter().enumerate() {
            let mut coeffs = vec![0i64; (n + l) * k];
            for (v, a) in mats.iter().enumerate() {
                coeffs[v * k..(v + 1) * k].copy_from_slice(a.row(i));
            }
            if coeffs.iter().any(|&c| c != 0) {
                sys.push(coeffs, 0, d);
            }
        }
    }
    let kernel = match sys.solve() {
        Solution::Solvable { kernel, .. } => kernel,
        Solution::Unsolvable => unreachable!("homogeneous system"),
    };
    let orders: Vec<i64> = (0..n).flat_map(|_| m.orders().iter().copied()).collect();
    let gens: Vec<Vec<i64>> = kernel.generators().iter().map(|g| g[..n * k].to_vec()).collect();
    Ok(CanonicalSubgroup::new(&gens, &orders).expect("projection"))
}

/// Formulas used to express local character: every equation in at most
/// `arity` free variables, and for each `r` the formula
/// `E z w . (r w = z & z = x1 + x2)`.
#[derive(Clone, Debug)]
pub struct PhiFamily {
    pub formulas: Vec<PpFormula>,
    /// The equation part is infinite; only arities up to this bound are
    /// present.
    pub arity_bound: usize,
    pub truncated: bool,
}

pub fn phi_family(ring: &Ring, arity_bound: usize) -> Result<PhiFamily> {
    if arity_bound < 1 {
        return Err(Error::Precondition("arity bound must be at least 1".into()));
    }
    let mut formulas = Vec::new();
    for r in ring.elements() {
        // w1 plays z, w2 plays w
        let mut f = PpFormula::empty(ring, 2, 2);
        f.push_equation(vec![ring.zero(), ring.zero()], vec![ring.neg(&ring.one()), r.clone()]);
        f.push_equation(vec![ring.neg(&ring.one()), ring.neg(&ring.one())], vec![ring.one(), ring.zero()]);
        formulas.push(f);
    }
    for n in 1..=arity_bound {
        for coeffs in tuples(ring, n) {
            let mut f = PpFormula::empty(ring, n, 0);
            f.push_equation(coeffs, vec![]);
            formulas.push(f);
        }
    }
    Ok(PhiFamily { formulas, arity_bound, truncated: true })
}

/// All `n`-tuples of ring elements, lexicographically.
pub(crate) fn tuples(ring: &Ring, n: usize) -> Vec<Vec<RingElement>> {
    let mut out: Vec<Vec<RingElement>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * ring.elements().len());
        for t in &out {
            for r in ring.elements() {
                let mut u = t.clone();
                u.push(r.clone());
                next.push(u);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;

    fn z4() -> Ring {
        Ring::zmod(4).unwrap()
    }

    #[test]
    fn divisibility_by_two() {
        let r = z4();
        let f = PpFormula::parse("E w1 . 2*w1 - x1 = 0", &r).unwrap();
        let reg = Module::regular(&r);
        assert_eq!(pp_subgroup(&f, &reg).unwrap().elements(), vec![vec![0], vec![2]]);
        let z2 = Module::new(&r, vec![2], vec![Matrix::identity(1)]).unwrap();
        assert!(pp_subgroup(&f, &z2).unwrap().is_zero());
        let t = PpFormula::parse("0*x1 = 0", &r).unwrap();
        assert_eq!(pp_subgroup(&t, &z2).unwrap().cardinality(), 2);
    }

    #[test]
    fn printing_round_trips() {
        let r = z4();
        for text in ["E w1 . 2*w1 - 1*x1 = 0", "0*x1 = 0", "E w1 w2 . -1*w1 + 2*w2 = 0 & 1*w1 - 1*x1 - 1*x2 = 0"] {
            let f = PpFormula::parse(text, &r).unwrap();
            assert_eq!(PpFormula::parse(&f.to_string(), &r).unwrap(), f);
        }
        let f2 = Ring::truncated_poly(2, 2, 2).unwrap();
        let f = PpFormula::parse("E w1 . (0,1,1)*w1 + x2 = 0", &f2).unwrap();
        assert_eq!(f.to_string(), "E w1 . (0,1,1)*w1 + (0,0,0)*x1 + (1,0,0)*x2 = 0");
        assert_eq!(PpFormula::parse(&f.to_string(), &f2).unwrap(), f);
    }

    #[test]
    fn phi_family_shapes() {
        let r = z4();
        let fam = phi_family(&r, 1).unwrap();
        let want = PpFormula::parse("E w1 w2 . -1*w1 + 2*w2 = 0 & 1*w1 - 1*x1 - 1*x2 = 0", &r).unwrap();
        assert!(fam.formulas.contains(&want));
        let z2 = Ring::zmod(2).unwrap();
        let fam = phi_family(&z2, 1).unwrap();
        assert_eq!(fam.formulas.len(), 4);
        let zero = Ring::zmod(1).unwrap();
        assert_eq!(phi_family(&zero, 1).unwrap().formulas.len(), 2);
    }
}
