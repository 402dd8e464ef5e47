//! Plain, RD, pure and split embeddings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hom::{solve_extension, Hom};
use crate::module::{all_submodules, Module, ModuleElement, Submodule};
use crate::ring::{Ring, RingElement};

use super::{pp_subgroup, tuples, PpFormula};

/// Which embeddings count as morphisms of the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Emb,
    Rd,
    Pure,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Emb, Mode::Rd, Mode::Pure];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Emb => "emb",
            Mode::Rd => "rd",
            Mode::Pure => "pure",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s.to_ascii_lowercase().as_str() {
            "emb" | "embedding" | "plain" => Ok(Mode::Emb),
            "rd" => Ok(Mode::Rd),
            "pure" | "split" => Ok(Mode::Pure),
            other => Err(Error::Input(format!("unknown mode '{other}' (expected emb, rd or pure)"))),
        }
    }
}

/// Evidence that a map fails one of the embedding properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A nonzero element of the kernel.
    Kernel { element: ModuleElement },
    /// `f(a)` is divisible by `r` in the target but `a` is not divisible by
    /// `r` in the source.
    Divisibility { r: RingElement, element: ModuleElement },
    /// `B |= phi(f(a))` but not `A |= phi(a)`.
    Formula { formula: PpFormula, tuple: Vec<ModuleElement> },
}

impl Witness {
    /// Rechecks the witness against `f` from scratch.
    pub fn replay(&self, f: &Hom) -> Result<bool> {
        let (a, b) = (f.source(), f.target());
        match self {
            Witness::Kernel { element } => {
                Ok(a.contains(element) && element.iter().any(|&x| x != 0) && f.apply(element).iter().all(|&x| x == 0))
            }
            Witness::Divisibility { r, element } => {
                let phi = divisibility_formula(a.ring(), r);
                Ok(phi.holds(b, &[f.apply(element)])? && !phi.holds(a, std::slice::from_ref(element))?)
            }
            Witness::Formula { formula, tuple } => {
                let image: Vec<ModuleElement> = tuple.iter().map(|x| f.apply(x)).collect();
                Ok(formula.holds(b, &image)? && !formula.holds(a, tuple)?)
            }
        }
    }
}

/// `E w1 . r*w1 - 1*x1 = 0`.
pub(crate) fn divisibility_formula(ring: &Ring, r: &[i64]) -> PpFormula {
    let mut f = PpFormula::empty(ring, 1, 1);
    f.push_equation(vec![ring.neg(&ring.one())], vec![r.to_vec()]);
    f
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingClass {
    pub is_embedding: bool,
    pub is_rd: bool,
    pub is_pure: bool,
    pub is_split: bool,
    pub witness: Option<Witness>,
}

impl EmbeddingClass {
    pub fn holds(&self, mode: Mode) -> bool {
        match mode {
            Mode::Emb => self.is_embedding,
            Mode::Rd => self.is_rd,
            Mode::Pure => self.is_pure,
        }
    }
}

/// First `r` (in element order) and `a` with `f(a) in rB` but `a` not in
/// `rA`. Assumes `f` injective.
fn rd_failure(f: &Hom) -> Option<(RingElement, ModuleElement)> {
    let (a, b) = (f.source(), f.target());
    let image = f.image();
    let full_b = Submodule::full(b);
    let full_a = Submodule::full(a);
    for r in a.ring().elements() {
        let rb = full_b.scaled_subgroup(r);
        let meet = image.subgroup().intersection(&rb);
        let rfa = image.scaled_subgroup(r);
        if meet != rfa {
            let ra = full_a.scaled_subgroup(r);
            let x = a
                .elements()
                .iter()
                .find(|x| rb.contains(&f.apply(x)) && !ra.contains(x))
                .expect("a witness exists when the subgroups differ");
            return Some((r.clone(), x.clone()));
        }
    }
    None
}

/// Plain, RD, pure and split verdicts with the first failure as witness.
/// Purity is decided through the retraction (finite modules are
/// pure-injective, so pure and split coincide); the witness for a
/// non-split map is [`diagram_formula`].
pub fn classify_embedding(f: &Hom) -> EmbeddingClass {
    let kernel = f.kernel();
    if !kernel.is_zero() {
        let element = kernel.elements().into_iter().find(|x| x.iter().any(|&v| v != 0)).expect("nonzero kernel");
        return EmbeddingClass {
            is_embedding: false,
            is_rd: false,
            is_pure: false,
            is_split: false,
            witness: Some(Witness::Kernel { element }),
        };
    }
    let rd = rd_failure(f);
    let split = solve_extension(f, &Hom::identity(f.source())).expect("same source").is_some();
    let witness = match (&rd, split) {
        (Some((r, a)), _) => Some(Witness::Divisibility { r: r.clone(), element: a.clone() }),
        (None, false) => {
            let (formula, tuple) = diagram_formula(f);
            Some(Witness::Formula { formula, tuple })
        }
        (None, true) => None,
    };
    EmbeddingClass { is_embedding: true, is_rd: rd.is_none(), is_pure: split, is_split: split, witness }
}

/// Whether `f` is an embedding of the given kind.
pub fn is_mode_embedding(f: &Hom, mode: Mode) -> bool {
    if !f.is_injective() {
        return false;
    }
    match mode {
        Mode::Emb => true,
        Mode::Rd => rd_failure(f).is_none(),
        Mode::Pure => solve_extension(f, &Hom::identity(f.source())).expect("same source").is_some(),
    }
}

/// Whether `s <= m` is an embedding of the given kind.
pub fn is_mode_submodule(s: &Submodule, mode: Mode) -> bool {
    match mode {
        Mode::Emb => true,
        Mode::Rd => {
            let full = Submodule::full(s.ambient());
            s.ambient()
                .ring()
                .elements()
                .iter()
                .all(|r| s.subgroup().intersection(&full.scaled_subgroup(r)) == s.scaled_subgroup(r))
        }
        Mode::Pure => is_mode_embedding(s.inclusion(), Mode::Pure),
    }
}

/// All submodules whose inclusion is an embedding of the given kind, sorted
/// by cardinality then canonical form.
pub fn mode_submodules(m: &Module, mode: Mode) -> Vec<Submodule> {
    all_submodules(m).into_iter().filter(|s| is_mode_submodule(s, mode)).collect()
}

/// A formula reflected by `f` exactly when `f` splits.
///
/// The bound variables stand for the generators of the target `B`, the
/// equations are a presentation of `B` (additive orders and the ring
/// action), and `x_j` is tied to the image of the `j`-th generator of `A`.
/// A solution in `A` is a map `g: B -> A` with `g f = id`.
pub fn diagram_formula(f: &Hom) -> (PpFormula, Vec<ModuleElement>) {
    let (a, b) = (f.source(), f.target());
    let ring = a.ring();
    let (ka, kb) = (a.num_generators(), b.num_generators());
    let zero_free = vec![ring.zero(); ka];
    let mut phi = PpFormula::empty(ring, ka, kb);
    for (p, &d) in b.orders().iter().enumerate() {
        let c = ring.from_int(d);
        if c.iter().any(|&x| x != 0) {
            let mut bound = vec![ring.zero(); kb];
            bound[p] = c;
            phi.push_equation(zero_free.clone(), bound);
        }
    }
    for (i, act) in b.actions().iter().enumerate() {
        for p in 0..kb {
            let mut bound = vec![ring.zero(); kb];
            bound[p] = ring.basis_element(i);
            for (q, slot) in bound.iter_mut().enumerate() {
                *slot = ring.sub(slot, &ring.from_int(*act.at(q, p)));
            }
            if bound.iter().any(|c| c.iter().any(|&x| x != 0)) {
                phi.push_equation(zero_free.clone(), bound);
            }
        }
    }
    for j in 0..ka {
        let mut free = zero_free.clone();
        free[j] = ring.one();
        let bound: Vec<RingElement> = (0..kb).map(|p| ring.neg(&ring.from_int(*f.matrix().at(p, j)))).collect();
        phi.push_equation(free, bound);
    }
    let tuple = (0..ka).map(|j| a.generator(j)).collect();
    (phi, tuple)
}

/// Size limits for the formula enumeration oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaShape {
    pub max_free: usize,
    pub max_bound: usize,
    pub max_equations: usize,
}

/// Searches all formulas within `shape` (free count, then bound count, then
/// equation count, then coefficients lexicographically) for one that `f`
/// fails to reflect, together with the first offending tuple.
pub fn reflection_failure(f: &Hom, shape: FormulaShape) -> Result<Option<(PpFormula, Vec<ModuleElement>)>> {
    let (a, b) = (f.source(), f.target());
    let ring = a.ring();
    for n in 1..=shape.max_free {
        let tuples_a = module_tuples(a, n);
        for l in 0..=shape.max_bound {
            let rows = tuples(ring, n + l);
            for m in 1..=shape.max_equations {
                let mut idx = vec![0usize; m];
                loop {
                    // one formula per nondecreasing choice of rows
                    let mut phi = PpFormula::empty(ring, n, l);
                    for &r in &idx {
                        let row = &rows[r];
                        phi.push_equation(row[..n].to_vec(), row[n..].to_vec());
                    }
                    let in_b = pp_subgroup(&phi, b)?;
                    let in_a = pp_subgroup(&phi, a)?;
                    if in_b.cardinality() > 1 {
                        for t in &tuples_a {
                            let image: Vec<i64> = t.iter().flat_map(|x| f.apply(x)).collect();
                            if in_b.contains(&image) && !in_a.contains(&t.concat()) {
                                return Ok(Some((phi, t.clone())));
                            }
                        }
                    }
                    if !advance(&mut idx, rows.len()) {
                        break;
                    }
                }
            }
        }
    }
    Ok(None)
}

fn advance(idx: &mut [usize], limit: usize) -> bool {
    let mut i = idx.len();
    while i > 0 {
        i -= 1;
        if idx[i] + 1 < limit {
            idx[i] += 1;
            for j in i + 1..idx.len() {
                idx[j] = idx[i];
            }
            return true;
        }
    }
    false
}

fn module_tuples(m: &Module, n: usize) -> Vec<Vec<ModuleElement>> {
    let mut out: Vec<Vec<ModuleElement>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for x in m.elements() {
                let mut u = t.clone();
                u.push(x.clone());
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
    use crate::module::direct_sum;

    fn setup() -> (Ring, Module, Module) {
        let r = Ring::zmod(4).unwrap();
        let z2 = Module::new(&r, vec![2], vec![Matrix::identity(1)]).unwrap();
        let z4 = Module::regular(&r);
        (r, z2, z4)
    }

    #[test]
    fn two_into_four() {
        let (_, z2, z4) = setup();
        let f = Hom::new(&z2, &z4, Matrix::from_vec(1, 1, vec![2])).unwrap();
        let c = classify_embedding(&f);
        assert!(c.is_embedding && !c.is_rd && !c.is_pure && !c.is_split);
        assert_eq!(c.witness, Some(Witness::Divisibility { r: vec![2], element: vec![1] }));
        assert!(c.witness.unwrap().replay(&f).unwrap());
    }

    #[test]
    fn split_cases() {
        let (_, z2, z4) = setup();
        let s = direct_sum(&z2, &z2).unwrap();
        let c = classify_embedding(&s.inj[0]);
        assert!(c.is_embedding && c.is_rd && c.is_pure && c.is_split && c.witness.is_none());
        let c = classify_embedding(&Hom::identity(&z4));
        assert!(c.is_split && c.witness.is_none());
    }

    #[test]
    fn diagram_formula_certifies_non_split() {
        // over F2[x,y]/(x,y)^2 the socle inclusion k -> R is RD-like but not split
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        let reg = Module::regular(&r);
        for s in all_submodules(&reg) {
            let inc = s.inclusion();
            let c = classify_embedding(inc);
            if let Some(w) = &c.witness {
                assert!(w.replay(inc).unwrap(), "witness {w:?} for {s:?}");
            }
            let (phi, tuple) = diagram_formula(inc);
            let holds_in_source = phi.holds(s.module(), &tuple).unwrap();
            assert_eq!(holds_in_source, c.is_split);
        }
    }

    #[test]
    fn kernel_witness() {
        let (_, z2, z4) = setup();
        let p = Hom::new(&z4, &z2, Matrix::from_vec(1, 1, vec![1])).unwrap();
        let c = classify_embedding(&p);
        assert_eq!(c.witness, Some(Witness::Kernel { element: vec![2] }));
    }

    #[test]
    fn reflection_oracle_finds_divisibility() {
        let (_, z2, z4) = setup();
        let f = Hom::new(&z2, &z4, Matrix::from_vec(1, 1, vec![2])).unwrap();
        let shape = FormulaShape { max_free: 1, max_bound: 1, max_equations: 1 };
        let (phi, t) = reflection_failure(&f, shape).unwrap().unwrap();
        let w = Witness::Formula { formula: phi, tuple: t };
        assert!(w.replay(&f).unwrap());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("pure".parse::<Mode>().unwrap(), Mode::Pure);
        assert!("nope".parse::<Mode>().is_err());
    }
}
