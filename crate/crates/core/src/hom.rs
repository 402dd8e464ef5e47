//! Module homomorphisms, Hom-groups and the extension solver.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{apply, AbelianBasis, CanonicalSubgroup, LinearSystem, Matrix, Solution};
use crate::module::{Module, ModuleElement, Submodule};

/// `matrix` column `j` is the image of source generator `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    source: Module,
    target: Module,
    matrix: Matrix<i64>,
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({:?} -> {:?}: {:?})", self.source, self.target, self.matrix)
    }
}

/// Kernel, image and the two bijectivity flags of a map.
#[derive(Clone, Debug)]
pub struct HomAnalysis {
    pub kernel: Submodule,
    pub image: Submodule,
    pub injective: bool,
    pub surjective: bool,
}

impl Hom {
    /// Validated constructor.
    pub fn new(source: &Module, target: &Module, matrix: Matrix<i64>) -> Result<Hom> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        let (ks, kt) = (source.num_generators(), target.num_generators());
        if matrix.rows() != kt || matrix.cols() != ks {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix is {}x{}, expected {kt}x{ks}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let matrix = Matrix::from_fn(kt, ks, |i, j| matrix.at(i, j).rem_euclid(target.orders()[i]));
        for (j, &d) in source.orders().iter().enumerate() {
            for (i, &e) in target.orders().iter().enumerate() {
                if (d as i128 * *matrix.at(i, j) as i128) % e as i128 != 0 {
                    return Err(Error::NotWellDefined(format!(
                        "generator {j} has order {d} but its image {:?} does not",
                        matrix.col(j)
                    )));
                }
            }
        }
        let h = Hom { source: source.clone(), target: target.clone(), matrix };
        for b in 0..source.ring().rank() {
            for j in 0..ks {
                let lhs = h.apply(&source.act_basis(b, &source.generator(j)));
                let rhs = target.act_basis(b, &h.matrix.col(j));
                if lhs != rhs {
                    return Err(Error::NotEquivariant { basis: b, generator: j });
                }
            }
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: &Module, target: &Module, matrix: Matrix<i64>) -> Hom {
        let h = Hom {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::from_fn(matrix.rows(), matrix.cols(), |i, j| matrix.at(i, j).rem_euclid(target.orders()[i])),
        };
        debug_assert!(Hom::new(source, target, h.matrix.clone()).is_ok(), "invalid internal hom {h:?}");
        h
    }

    pub fn identity(m: &Module) -> Hom {
        Hom::new_unchecked(m, m, Matrix::identity(m.num_generators()))
    }

    pub fn zero(source: &Module, target: &Module) -> Hom {
        Hom::new_unchecked(source, target, Matrix::zeros(target.num_generators(), source.num_generators()))
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> ModuleElement {
        apply(&self.matrix, x, self.target.orders())
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix == Matrix::identity(self.source.num_generators())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.data().iter().all(|&x| x == 0)
    }

    /// `self ∘ f`.
    pub fn compose_after(&self, f: &Hom) -> Result<Hom> {
        if f.target != self.source {
            return Err(Error::Mismatch("middle modules differ".into()));
        }
        let k = self.target.num_generators();
        let m = Matrix::from_fn(k, f.source.num_generators(), |i, j| {
            let mut acc: i128 = 0;
            for p in 0..self.source.num_generators() {
                acc += *self.matrix.at(i, p) as i128 * *f.matrix.at(p, j) as i128;
            }
            acc.rem_euclid(self.target.orders()[i] as i128) as i64
        });
        Ok(Hom { source: f.source.clone(), target: self.target.clone(), matrix: m })
    }

    pub fn add(&self, other: &Hom) -> Hom {
        let m = Matrix::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            (self.matrix.at(i, j) + other.matrix.at(i, j)).rem_euclid(self.target.orders()[i])
        });
        Hom { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    pub fn neg(&self) -> Hom {
        let m = Matrix::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            (-self.matrix.at(i, j)).rem_euclid(self.target.orders()[i])
        });
        Hom { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    pub fn image(&self) -> Submodule {
        let gens: Vec<ModuleElement> = (0..self.matrix.cols()).map(|j| self.matrix.col(j)).collect();
        let sub = CanonicalSubgroup::new(&gens, self.target.orders()).expect("target coordinates");
        Submodule::from_closed(&self.target, sub)
    }

    /// Image of a submodule of the source.
    pub fn image_of(&self, s: &Submodule) -> Submodule {
        let gens: Vec<ModuleElement> = s.generators().iter().map(|g| self.apply(g)).collect();
        let sub = CanonicalSubgroup::new(&gens, self.target.orders()).expect("target coordinates");
        Submodule::from_closed(&self.target, sub)
    }

    /// Preimage of a submodule of the target.
    pub fn preimage(&self, s: &Submodule) -> Submodule {
        let t = &self.target;
        // f(x) - sum c_g g = 0 in the target, unknowns x and c
        let gens = s.generators();
        let mut moduli = self.source.orders().to_vec();
        moduli.extend(gens.iter().map(|g| t.element_order(g)));
        let mut sys = LinearSystem::new(moduli);
        for (i, &e) in t.orders().iter().enumerate() {
            let mut coeffs: Vec<i64> = self.matrix.row(i).to_vec();
            coeffs.extend(gens.iter().map(|g| (-g[i]).rem_euclid(e)));
            sys.push(coeffs, 0, e);
        }
        let kernel = match sys.solve() {
            Solution::Solvable { kernel, .. } => kernel,
            Solution::Unsolvable => unreachable!("homogeneous system"),
        };
        let ks = self.source.num_generators();
        let proj: Vec<ModuleElement> = kernel.generators().iter().map(|v| v[..ks].to_vec()).collect();
        Submodule::from_closed(&self.source, CanonicalSubgroup::new(&proj, self.source.orders()).expect("source"))
    }

    /// The least `x` (in solver order) with `f(x) = y`.
    pub fn lift(&self, y: &[i64]) -> Option<ModuleElement> {
        let t = &self.target;
        let mut sys = LinearSystem::new(self.source.orders().to_vec());
        for (i, &e) in t.orders().iter().enumerate() {
            sys.push(self.matrix.row(i).to_vec(), y[i].rem_euclid(e), e);
        }
        sys.solve().particular().map(|x| x.to_vec())
    }

    /// For injective `self: B -> C` and `g: A -> C` with image inside the
    /// image of `self`, the unique `h: A -> B` with `self ∘ h = g`.
    pub fn factor_through(&self, g: &Hom) -> Option<Hom> {
        if g.target != self.target {
            return None;
        }
        let a = &g.source;
        let cols: Vec<ModuleElement> =
            (0..a.num_generators()).map(|j| self.lift(&g.matrix.col(j))).collect::<Option<_>>()?;
        let m = Matrix::from_fn(self.source.num_generators(), a.num_generators(), |i, j| cols[j][i]);
        Hom::new(a, &self.source, m).ok().filter(|h| self.compose_after(h).ok().as_ref() == Some(g))
    }

    pub fn kernel(&self) -> Submodule {
        self.preimage(&Submodule::zero(&self.target))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    pub fn analyze(&self) -> HomAnalysis {
        let kernel = self.kernel();
        let image = self.image();
        let injective = kernel.is_zero();
        let surjective = image.is_full();
        HomAnalysis { kernel, image, injective, surjective }
    }

    /// Restriction to a submodule of the source.
    pub fn restrict(&self, s: &Submodule) -> Hom {
        self.compose_after(s.inclusion()).expect("submodule of the source")
    }

    /// Entries in column-major order, the coordinates used by Hom-group
    /// systems.
    pub(crate) fn flat(&self) -> Vec<i64> {
        let (r, c) = (self.matrix.rows(), self.matrix.cols());
        (0..c).flat_map(|j| (0..r).map(move |i| (i, j))).map(|(i, j)| *self.matrix.at(i, j)).collect()
    }

    pub(crate) fn from_flat(source: &Module, target: &Module, v: &[i64]) -> Hom {
        let r = target.num_generators();
        Hom::new_unchecked(source, target, Matrix::from_fn(r, source.num_generators(), |i, j| v[j * r + i]))
    }
}

pub fn make_hom(source: &Module, target: &Module, matrix: Matrix<i64>) -> Result<Hom> {
    Hom::new(source, target, matrix)
}

/// `g ∘ f`.
pub fn compose_hom(g: &Hom, f: &Hom) -> Result<Hom> {
    g.compose_after(f)
}

pub fn analyze_hom(f: &Hom) -> HomAnalysis {
    f.analyze()
}

/// The congruences cutting out `Hom(a, b)` inside the matrices; unknown
/// `j * k_b + i` is entry `(i, j)`.
pub(crate) fn hom_system(a: &Module, b: &Module) -> LinearSystem {
    let (ka, kb) = (a.num_generators(), b.num_generators());
    let var = |i: usize, j: usize| j * kb + i;
    let moduli: Vec<i64> = (0..ka).flat_map(|_| b.orders().iter().copied()).collect();
    let mut sys = LinearSystem::new(moduli);
    let n = ka * kb;
    for (j, &d) in a.orders().iter().enumerate() {
        for (i, &e) in b.orders().iter().enumerate() {
            if d % e != 0 {
                let mut c = vec![0; n];
                c[var(i, j)] = d % e;
                sys.push(c, 0, e);
            }
        }
    }
    for t in 0..a.ring().rank() {
        let (aa, bb) = (a.action(t), b.action(t));
        for j in 0..ka {
            for (i, &e) in b.orders().iter().enumerate() {
                // (X A)[i][j] - (B X)[i][j]
                let mut c = vec![0i64; n];
                for p in 0..ka {
                    let v = var(i, p);
                    c[v] = (c[v] + aa.at(p, j)).rem_euclid(e);
                }
                for q in 0..kb {
                    let v = var(q, j);
                    c[v] = (c[v] - bb.at(i, q)).rem_euclid(e);
                }
                if c.iter().any(|&x| x != 0) {
                    sys.push(c, 0, e);
                }
            }
        }
    }
    sys
}

/// `Hom(source, target)` as a finite abelian group.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<Hom>,
    pub orders: Vec<i64>,
    subgroup: CanonicalSubgroup,
    presentation: AbelianBasis,
}

impl HomGroup {
    pub fn new(source: &Module, target: &Module) -> Result<HomGroup> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        let subgroup = match hom_system(source, target).solve() {
            Solution::Solvable { kernel, .. } => kernel,
            Solution::Unsolvable => unreachable!("homogeneous system"),
        };
        let presentation = subgroup.abelian_basis();
        let basis = presentation.generators.iter().map(|v| Hom::from_flat(source, target, v)).collect();
        Ok(HomGroup {
            source: source.clone(),
            target: target.clone(),
            basis,
            orders: presentation.orders.clone(),
            subgroup,
            presentation,
        })
    }

    pub fn cardinality(&self) -> u64 {
        self.subgroup.cardinality()
    }

    /// Coordinates of `h` on the basis, each in `[0, orders[k])`.
    pub fn coordinates(&self, h: &Hom) -> Option<Vec<i64>> {
        self.presentation.coordinates(&self.subgroup, &h.flat())
    }

    pub fn combination(&self, coeffs: &[i64]) -> Hom {
        let kt = self.target.num_generators();
        let mut acc = vec![0i128; kt * self.source.num_generators()];
        for (c, h) in coeffs.iter().zip(&self.basis) {
            for (a, x) in acc.iter_mut().zip(h.flat()) {
                *a += *c as i128 * x as i128;
            }
        }
        let flat: Vec<i64> =
            acc.iter().enumerate().map(|(v, a)| a.rem_euclid(self.target.orders()[v % kt] as i128) as i64).collect();
        Hom::from_flat(&self.source, &self.target, &flat)
    }

    /// Every homomorphism, ordered by matrix entries.
    pub fn elements(&self) -> Vec<Hom> {
        self.subgroup.elements().iter().map(|v| Hom::from_flat(&self.source, &self.target, v)).collect()
    }

    /// All homomorphisms as column-major entry vectors.
    pub(crate) fn subgroup(&self) -> &CanonicalSubgroup {
        &self.subgroup
    }
}

pub fn hom_group(a: &Module, b: &Module) -> Result<HomGroup> {
    HomGroup::new(a, b)
}

/// Some `h: B -> E` with `h ∘ f = g`, the least in Hom-group coordinates.
pub fn solve_extension(f: &Hom, g: &Hom) -> Result<Option<Hom>> {
    if f.source != g.source {
        return Err(Error::Mismatch("extension problem: f and g have different sources".into()));
    }
    let hg = HomGroup::new(&f.target, &g.target)?;
    Ok(solve_extension_in(&hg, f, g))
}

pub(crate) fn extension_system(hg: &HomGroup, f: &Hom, g: &Hom) -> LinearSystem {
    let e = &g.target;
    let composites: Vec<Vec<i64>> = hg.basis.iter().map(|h| h.compose_after(f).expect("f lands in B").flat()).collect();
    let target = g.flat();
    let ka = f.source.num_generators();
    let mut sys = LinearSystem::new(hg.orders.clone());
    for j in 0..ka {
        for (i, &ei) in e.orders().iter().enumerate() {
            let v = j * e.num_generators() + i;
            let coeffs: Vec<i64> = composites.iter().map(|c| c[v]).collect();
            sys.push(coeffs, target[v], ei);
        }
    }
    sys
}

pub(crate) fn solve_extension_in(hg: &HomGroup, f: &Hom, g: &Hom) -> Option<Hom> {
    extension_system(hg, f, g).solve().particular().map(|y| hg.combination(y))
}
