//! Pushouts, independent squares, local character and chain decomposition.

use crate::error::{Error, Result};
use crate::exactlin::unit_vector;
use crate::hom::Hom;
use crate::module::{direct_sum, quotient_by, DirectSum, Module, ModuleElement, Submodule};
use crate::pp::{is_mode_embedding, is_mode_submodule, mode_submodules, Mode};

/// `P = (N1 + N2) / {(f1(m), -f2(m))}` for a span `N1 <- M -> N2`.
///
/// `leg1` is the pushout of `f1` (so it starts at `N2`) and `leg2` the
/// pushout of `f2` (starting at `N1`).
#[derive(Clone, Debug)]
pub struct PushoutResult {
    pub f1: Hom,
    pub f2: Hom,
    pub apex: Module,
    /// `N1 -> P`.
    pub from_n1: Hom,
    /// `N2 -> P`.
    pub from_n2: Hom,
    sum: DirectSum,
    proj: Hom,
}

/// Which legs of a pushout are embeddings of a given kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegCheck {
    pub mode: Mode,
    pub f1: bool,
    pub f2: bool,
    pub leg1: bool,
    pub leg2: bool,
}

impl LegCheck {
    /// A kind-embedding pushes out to a kind-embedding, on both sides.
    pub fn preserved(&self) -> bool {
        (!self.f1 || self.leg1) && (!self.f2 || self.leg2)
    }
}

impl PushoutResult {
    /// `N2 -> P`, the pushout of `f1`.
    pub fn leg1(&self) -> &Hom {
        &self.from_n2
    }

    /// `N1 -> P`, the pushout of `f2`.
    pub fn leg2(&self) -> &Hom {
        &self.from_n1
    }

    pub fn n1(&self) -> &Module {
        self.f1.target()
    }

    pub fn n2(&self) -> &Module {
        self.f2.target()
    }

    /// Canonical apex coordinates of the class of `(n1, n2)`.
    pub fn coset(&self, n1: &[i64], n2: &[i64]) -> Result<ModuleElement> {
        self.n1().check_element(n1)?;
        self.n2().check_element(n2)?;
        let s = &self.sum.module;
        let x = s.add(&self.sum.inj[0].apply(n1), &self.sum.inj[1].apply(n2));
        Ok(self.proj.apply(&x))
    }

    pub fn check_legs(&self, mode: Mode) -> LegCheck {
        LegCheck {
            mode,
            f1: is_mode_embedding(&self.f1, mode),
            f2: is_mode_embedding(&self.f2, mode),
            leg1: is_mode_embedding(self.leg1(), mode),
            leg2: is_mode_embedding(self.leg2(), mode),
        }
    }
}

pub fn pushout(f1: &Hom, f2: &Hom) -> Result<PushoutResult> {
    if f1.source() != f2.source() {
        return Err(Error::Mismatch("pushout: f1 and f2 have different sources".into()));
    }
    let m = f1.source();
    let sum = direct_sum(f1.target(), f2.target())?;
    let s = &sum.module;
    let gens: Vec<ModuleElement> = (0..m.num_generators())
        .map(|j| {
            let g = m.generator(j);
            s.sub(&sum.inj[0].apply(&f1.apply(&g)), &sum.inj[1].apply(&f2.apply(&g)))
        })
        .collect();
    let anti = Submodule::generate(s, &gens)?;
    let (apex, proj) = quotient_by(s, &anti)?;
    let from_n1 = proj.compose_after(&sum.inj[0])?;
    let from_n2 = proj.compose_after(&sum.inj[1])?;
    Ok(PushoutResult { f1: f1.clone(), f2: f2.clone(), apex, from_n1, from_n2, sum, proj })
}

/// The map `t: P -> Q`, `t[(n1, n2)] = h1(n1) + h2(n2)`.
pub fn induced_corner(p: &PushoutResult, h1: &Hom, h2: &Hom) -> Result<Hom> {
    if h1.source() != p.n1() || h2.source() != p.n2() || h1.target() != h2.target() {
        return Err(Error::Mismatch("induced corner: maps do not fit the pushout".into()));
    }
    if h1.compose_after(&p.f1)? != h2.compose_after(&p.f2)? {
        return Err(Error::NotCommuting("h1 ∘ f1 differs from h2 ∘ f2".into()));
    }
    let u = h1.compose_after(&p.sum.proj[0])?.add(&h2.compose_after(&p.sum.proj[1])?);
    let k = p.apex.num_generators();
    let cols: Vec<ModuleElement> = (0..k)
        .map(|j| u.apply(&p.proj.lift(&unit_vector(k, j)).expect("the quotient map is onto")))
        .collect();
    let m = crate::exactlin::Matrix::from_fn(h1.target().num_generators(), k, |i, j| cols[j][i]);
    Hom::new(&p.apex, h1.target(), m)
}

/// The square
///
/// ```text
/// M1 --h1--> M3
/// ^          ^
/// f1         h2
/// |          |
/// M0 --f2--> M2
/// ```
/// with its corner map out of the pushout of `(f1, f2)`.
#[derive(Clone, Debug)]
pub struct IndependenceSquare {
    pub f1: Hom,
    pub f2: Hom,
    pub h1: Hom,
    pub h2: Hom,
    pub mode: Mode,
    pub verdict: bool,
    pub corner: Hom,
    /// `f1, f2, h1, h2` in that order.
    pub maps_ok: [bool; 4],
    pub corner_ok: bool,
}

pub fn is_independent_square(f1: &Hom, f2: &Hom, h1: &Hom, h2: &Hom, mode: Mode) -> Result<IndependenceSquare> {
    if h1.source() != f1.target() || h2.source() != f2.target() {
        return Err(Error::Mismatch("square: h1, h2 must start where f1, f2 end".into()));
    }
    let p = pushout(f1, f2)?;
    let corner = induced_corner(&p, h1, h2)?;
    let maps_ok = [f1, f2, h1, h2].map(|h| is_mode_embedding(h, mode));
    let corner_ok = is_mode_embedding(&corner, mode);
    Ok(IndependenceSquare {
        f1: f1.clone(),
        f2: f2.clone(),
        h1: h1.clone(),
        h2: h2.clone(),
        mode,
        verdict: maps_ok.iter().all(|&b| b) && corner_ok,
        corner,
        maps_ok,
        corner_ok,
    })
}

/// Whether `inner <= outer` (submodules of one ambient module) is an
/// embedding of the given kind.
pub fn is_mode_between(inner: &Submodule, outer: &Submodule, mode: Mode) -> bool {
    if !inner.is_subset_of(outer) {
        return false;
    }
    match mode {
        Mode::Emb => true,
        Mode::Rd => inner
            .ambient()
            .ring()
            .elements()
            .iter()
            .all(|r| inner.subgroup().intersection(&outer.scaled_subgroup(r)) == inner.scaled_subgroup(r)),
        Mode::Pure if outer.is_full() => is_mode_submodule(inner, mode),
        Mode::Pure => match outer.inclusion().factor_through(inner.inclusion()) {
            Some(h) => is_mode_embedding(&h, mode),
            None => false,
        },
    }
}

/// The four inclusions of a square of submodules, realized as maps.
pub fn submodule_square(m0: &Submodule, m1: &Submodule, m2: &Submodule, m3: &Submodule) -> Result<[Hom; 4]> {
    check_square(m0, m1, m2, m3)?;
    let between = |a: &Submodule, b: &Submodule| b.inclusion().factor_through(a.inclusion()).expect("nested");
    Ok([between(m0, m1), between(m0, m2), between(m1, m3), between(m2, m3)])
}

fn check_square(m0: &Submodule, m1: &Submodule, m2: &Submodule, m3: &Submodule) -> Result<()> {
    let n = m0.ambient();
    if [m1, m2, m3].iter().any(|s| s.ambient() != n) {
        return Err(Error::Mismatch("square corners live in different modules".into()));
    }
    if !(m0.is_subset_of(m1) && m0.is_subset_of(m2) && m1.is_subset_of(m3) && m2.is_subset_of(m3)) {
        return Err(Error::Precondition("square corners are not nested".into()));
    }
    Ok(())
}

/// Independence of a square of submodules `M0 <= M1, M2 <= M3`.
///
/// The corner map is injective exactly when `M1 ∩ M2 = M0`, and then it is
/// an isomorphism onto `M1 + M2`.
pub fn is_independent_submodules(
    m0: &Submodule,
    m1: &Submodule,
    m2: &Submodule,
    m3: &Submodule,
    mode: Mode,
) -> Result<bool> {
    check_square(m0, m1, m2, m3)?;
    Ok(m1.intersection(m2) == *m0
        && is_mode_between(m0, m1, mode)
        && is_mode_between(m0, m2, mode)
        && is_mode_between(m1, m3, mode)
        && is_mode_between(m2, m3, mode)
        && is_mode_between(&m1.sum(m2), m3, mode))
}

/// Least `(M0, M1')` with `M0 <= m2`, `m1 <= M1'` and the square
/// `(M0; M1', m2; N)` independent, ordered by `|M0|`, then `|M1'|`, then
/// canonical form.
pub fn find_independence_base(m1: &Submodule, m2: &Submodule, mode: Mode) -> Result<(Submodule, Submodule)> {
    let cands = mode_submodules(m1.ambient(), mode);
    find_independence_base_in(&cands, m1, m2, mode)
}

/// As [`find_independence_base`] with the kind-submodules of the ambient
/// module precomputed (sorted).
pub fn find_independence_base_in(
    cands: &[Submodule],
    m1: &Submodule,
    m2: &Submodule,
    mode: Mode,
) -> Result<(Submodule, Submodule)> {
    let n = m1.ambient();
    if m2.ambient() != n {
        return Err(Error::Mismatch("submodules of different modules".into()));
    }
    if !is_mode_submodule(m1, mode) || !is_mode_submodule(m2, mode) {
        return Err(Error::Precondition(format!("inputs must be {mode}-submodules")));
    }
    let full = Submodule::full(n);
    let meet = m1.intersection(m2);
    for m0 in cands.iter().filter(|s| meet.is_subset_of(s) && s.is_subset_of(m2)) {
        let low = m1.sum(m0);
        for m1e in cands.iter().filter(|s| low.is_subset_of(s)) {
            if m1e.intersection(m2) == *m0 && is_independent_submodules(m0, m1e, m2, &full, mode)? {
                return Ok((m0.clone(), m1e.clone()));
            }
        }
    }
    Err(Error::Exhausted(format!("no independence base for {m1:?} and {m2:?}")))
}

/// Where a decomposition starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChainStart {
    /// `A_0 = B_0 = A`.
    #[default]
    Source,
    /// `A_0 = B_0 = 0`.
    Zero,
}

/// Increasing chains `A_i <= A` and `B_i <= B` with `f[A_i] <= B_i`.
#[derive(Clone, Debug)]
pub struct Chain {
    pub f: Hom,
    pub mode: Mode,
    pub a: Vec<Submodule>,
    pub b: Vec<Submodule>,
    /// `f[A_i]` as submodules of `B`.
    pub image: Vec<Submodule>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// Checks every square `(A_i; B_i, A_j; B_j)` for `i < j`, together
    /// with exhaustion.
    pub fn verify(&self) -> Result<bool> {
        let full_a = self.a.last().is_some_and(|s| s.is_full());
        let full_b = self.b.last().is_some_and(|s| s.is_full());
        if !full_a || !full_b {
            return Ok(false);
        }
        for j in 0..self.len() {
            for i in 0..j {
                if !is_independent_submodules(&self.image[i], &self.b[i], &self.image[j], &self.b[j], self.mode)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Greedy finite decomposition of a kind-embedding into independent steps.
///
/// Each step adds the next `step` elements of `B` (in element order) that
/// are not yet covered, closes up to kind-submodules, and then alternates
/// with [`find_independence_base`] until the pair stabilizes.
pub fn decompose_chain(f: &Hom, mode: Mode, step: usize, start: ChainStart) -> Result<Chain> {
    if !is_mode_embedding(f, mode) {
        return Err(Error::Precondition(format!("decomposition needs a {mode}-embedding")));
    }
    if step == 0 {
        return Err(Error::Precondition("step must be positive".into()));
    }
    let b = f.target();
    let fa = f.image();
    let full = Submodule::full(b);
    let cands_b = mode_submodules(b, mode);
    let cands_a: Vec<Submodule> =
        cands_b.iter().filter(|s| s.is_subset_of(&fa) && is_mode_between(s, &fa, mode)).cloned().collect();
    let hull = |cands: &[Submodule], s: &Submodule| -> Submodule {
        cands.iter().find(|c| s.is_subset_of(c)).cloned().expect("the top module is always a candidate")
    };
    let (mut aj, mut bj) = match start {
        ChainStart::Source => (fa.clone(), fa.clone()),
        ChainStart::Zero => (Submodule::zero(b), Submodule::zero(b)),
    };
    let mut image = vec![aj.clone()];
    let mut bs = vec![bj.clone()];
    while !bj.is_full() {
        let seeds: Vec<ModuleElement> = b.elements().iter().filter(|x| !bj.contains(x)).take(step).cloned().collect();
        let seeds_a: Vec<ModuleElement> = seeds.iter().filter(|x| fa.contains(x)).cloned().collect();
        let mut m = hull(&cands_a, &aj.sum(&Submodule::generate(b, &seeds_a)?));
        let mut n = hull(&cands_b, &m.sum(&bj).sum(&Submodule::generate(b, &seeds)?));
        loop {
            let (mstar, _) = find_independence_base_in(&cands_b, &n, &fa, mode)?;
            let m2 = hull(&cands_a, &mstar.sum(&m));
            let n2 = hull(&cands_b, &n.sum(&m2));
            if m2 == m && n2 == n {
                break;
            }
            m = m2;
            n = n2;
        }
        if !is_independent_submodules(&m, &n, &fa, &full, mode)? {
            return Err(Error::Exhausted("decomposition step did not reach an independent square".into()));
        }
        aj = m;
        bj = n;
        image.push(aj.clone());
        bs.push(bj.clone());
    }
    let a = image.iter().map(|s| f.preimage(s)).collect();
    Ok(Chain { f: f.clone(), mode, a, b: bs, image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use crate::module::{all_submodules, are_isomorphic};
    use crate::ring::Ring;

    fn z4() -> Ring {
        Ring::zmod(4).unwrap()
    }

    fn cyc(r: &Ring, n: i64) -> Module {
        Module::new(r, vec![n], vec![Matrix::identity(1)]).unwrap()
    }

    fn m1(x: i64) -> Matrix<i64> {
        Matrix::from_vec(1, 1, vec![x])
    }

    #[test]
    fn pushout_of_two_into_four_along_identity() {
        let r = z4();
        let (z2, z4m) = (cyc(&r, 2), Module::regular(&r));
        let f1 = Hom::new(&z2, &z4m, m1(2)).unwrap();
        let f2 = Hom::identity(&z2);
        let p = pushout(&f1, &f2).unwrap();
        assert!(are_isomorphic(&p.apex, &z4m).unwrap().is_some());
        assert!(p.leg2().is_injective() && p.leg2().is_surjective());
        let c = p.check_legs(Mode::Pure);
        assert!(!c.f1 && !c.leg1 && c.f2 && c.leg2);
        assert!(p.leg1().is_injective() && !is_mode_embedding(p.leg1(), Mode::Rd));
        // coset of (1, 1) equals coset of (3, 0)
        assert_eq!(p.coset(&[1], &[1]).unwrap(), p.coset(&[3], &[0]).unwrap());
        let t = induced_corner(&p, &Hom::identity(&z4m), &f1).unwrap();
        assert!(t.is_injective() && t.is_surjective());
    }

    #[test]
    fn pushout_over_zero_is_sum() {
        let r = z4();
        let (z2, z4m) = (cyc(&r, 2), Module::regular(&r));
        let zero = Module::zero(&r);
        let p = pushout(&Hom::zero(&zero, &z4m), &Hom::zero(&zero, &z2)).unwrap();
        assert_eq!(p.apex.cardinality(), 8);
        let s = direct_sum(&z4m, &z2).unwrap();
        let t = induced_corner(&p, &s.inj[0], &s.inj[1]).unwrap();
        assert!(t.is_injective() && t.is_surjective());
        assert!(induced_corner(&p, &p.from_n1, &p.from_n2).unwrap().is_identity());
    }

    #[test]
    fn non_commuting_corner_is_rejected() {
        let r = z4();
        let z4m = Module::regular(&r);
        let id = Hom::identity(&z4m);
        let p = pushout(&id, &id).unwrap();
        let twice = id.add(&id);
        assert!(matches!(induced_corner(&p, &id, &twice), Err(Error::NotCommuting(_))));
    }

    #[test]
    fn square_examples() {
        let r = Ring::zmod(2).unwrap();
        let z2 = Module::regular(&r);
        let zero = Module::zero(&r);
        let s = direct_sum(&z2, &z2).unwrap();
        let o = Hom::zero(&zero, &z2);
        let sq = is_independent_square(&o, &o, &s.inj[0], &s.inj[1], Mode::Pure).unwrap();
        assert!(sq.verdict);
        let id = Hom::identity(&z2);
        let sq = is_independent_square(&o, &o, &id, &id, Mode::Emb).unwrap();
        assert!(!sq.verdict && !sq.corner_ok);
        let sq = is_independent_square(&id, &id, &id, &id, Mode::Pure).unwrap();
        assert!(sq.verdict);
    }

    #[test]
    fn submodule_squares_match_pushout_squares() {
        for r in [Ring::zmod(4).unwrap(), Ring::truncated_poly(2, 2, 2).unwrap()] {
            let k = crate::module::simple_modules(&r).remove(0);
            let ms = [Module::regular(&r), direct_sum(&k, &Module::regular(&r)).unwrap().module];
            for n in ms.iter().filter(|m| m.cardinality() <= 8) {
                let subs = all_submodules(n);
                for mode in Mode::ALL {
                    for m0 in &subs {
                        for m1s in subs.iter().filter(|s| m0.is_subset_of(s)) {
                            for m2s in subs.iter().filter(|s| m0.is_subset_of(s)) {
                                let m3 = Submodule::full(n);
                                let [f1, f2, h1, h2] = submodule_square(m0, m1s, m2s, &m3).unwrap();
                                let sq = is_independent_square(&f1, &f2, &h1, &h2, mode).unwrap();
                                let fast = is_independent_submodules(m0, m1s, m2s, &m3, mode).unwrap();
                                assert_eq!(sq.verdict, fast, "{mode} {m0:?} {m1s:?} {m2s:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn independence_base_examples() {
        let r = Ring::zmod(2).unwrap();
        let z2 = Module::regular(&r);
        let full = Submodule::full(&z2);
        let (m0, m1e) = find_independence_base(&full, &full, Mode::Pure).unwrap();
        assert!(m0.is_full() && m1e.is_full());

        let n = direct_sum(&z2, &z2).unwrap().module;
        let a = Submodule::generate(&n, &[vec![1, 0]]).unwrap();
        let b = Submodule::generate(&n, &[vec![0, 1]]).unwrap();
        let d = Submodule::generate(&n, &[vec![1, 1]]).unwrap();
        let (m0, m1e) = find_independence_base(&a, &b, Mode::Pure).unwrap();
        assert!(m0.is_zero() && m1e == a);
        let (m0, m1e) = find_independence_base(&a, &d, Mode::Emb).unwrap();
        assert!(m0.is_zero() && m1e == a);
    }

    #[test]
    fn decompositions() {
        let r = Ring::zmod(2).unwrap();
        let z2 = Module::regular(&r);
        let s = direct_sum(&z2, &z2).unwrap();
        let c = decompose_chain(&s.inj[0], Mode::Pure, 1, ChainStart::Source).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.a[0].is_full() && c.b[0] == c.image[0] && c.b[1].is_full());
        assert!(c.verify().unwrap());

        let c = decompose_chain(&Hom::identity(&z2), Mode::Pure, 1, ChainStart::Source).unwrap();
        assert_eq!(c.len(), 1);

        let zero = Module::zero(&r);
        let c = decompose_chain(&Hom::zero(&zero, &s.module), Mode::Emb, 1, ChainStart::Zero).unwrap();
        assert!(c.a.iter().all(|x| x.is_zero()) && c.verify().unwrap());

        let r4 = z4();
        let f = Hom::new(&cyc(&r4, 2), &Module::regular(&r4), m1(2)).unwrap();
        let c = decompose_chain(&f, Mode::Emb, 1, ChainStart::Zero).unwrap();
        assert!(c.verify().unwrap());
    }
}
