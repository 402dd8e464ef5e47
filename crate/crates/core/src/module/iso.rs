//! Isomorphism testing by backtracking over generator images.

use crate::error::{Error, Result};
use crate::exactlin::{CanonicalSubgroup, LinearSystem, Solution};
use crate::hom::{hom_system, Hom};

use super::{Module, ModuleElement};

/// A module isomorphism, as a homomorphism that is bijective.
pub type Isomorphism = Hom;

/// Isomorphism invariant: additive orders plus the sorted multiset of
/// (element order, annihilator) pairs.
pub fn fingerprint(m: &Module) -> (Vec<i64>, Vec<(i64, Vec<bool>)>) {
    let mut v: Vec<(i64, Vec<bool>)> = m.elements().iter().map(|x| (m.element_order(x), m.annihilator(x))).collect();
    v.sort();
    (m.orders().to_vec(), v)
}

/// An isomorphism `a -> b` when one exists. Generator images are tried in
/// lexicographic order, so the witness is deterministic.
pub fn are_isomorphic(a: &Module, b: &Module) -> Result<Option<Isomorphism>> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    if a.orders() != b.orders() {
        return Ok(None);
    }
    if a == b {
        return Ok(Some(Hom::identity(a)));
    }
    if fingerprint(a) != fingerprint(b) {
        return Ok(None);
    }
    let sys = hom_system(a, b);
    let anns: Vec<Vec<bool>> = (0..a.num_generators()).map(|j| a.annihilator(&a.generator(j))).collect();
    let mut images: Vec<ModuleElement> = Vec::new();
    Ok(search(a, b, &sys, &anns, &mut images))
}

fn search(
    a: &Module,
    b: &Module,
    sys: &LinearSystem,
    anns: &[Vec<bool>],
    images: &mut Vec<ModuleElement>,
) -> Option<Hom> {
    let (particular, kernel) = match sys.solve() {
        Solution::Unsolvable => return None,
        Solution::Solvable { particular, kernel } => (particular, kernel),
    };
    let kb = b.num_generators();
    let j = images.len();
    if j == a.num_generators() {
        return Some(Hom::from_flat(a, b, &particular));
    }
    // the possible images of generator j under the remaining solutions
    let col = |v: &[i64]| v[j * kb..(j + 1) * kb].to_vec();
    let spread: Vec<ModuleElement> = kernel.generators().iter().map(|g| col(g)).collect();
    let spread = CanonicalSubgroup::new(&spread, b.orders()).expect("target coordinates");
    let base = col(&particular);
    let mut candidates: Vec<ModuleElement> = spread.elements().iter().map(|s| b.add(&base, s)).collect();
    candidates.sort();
    let d = a.orders()[j];
    let needed: u64 = a.orders()[..=j].iter().map(|&x| x as u64).product();
    for c in candidates {
        if b.element_order(&c) != d || b.annihilator(&c) != anns[j] {
            continue;
        }
        let mut span = images.clone();
        span.push(c.clone());
        if CanonicalSubgroup::new(&span, b.orders()).expect("target coordinates").cardinality() != needed {
            continue;
        }
        let mut fixed = sys.clone();
        for (i, &e) in b.orders().iter().enumerate() {
            let mut coeffs = vec![0; a.num_generators() * kb];
            coeffs[j * kb + i] = 1;
            fixed.push(coeffs, c[i], e);
        }
        images.push(c);
        if let Some(h) = search(a, b, &fixed, anns, images) {
            return Some(h);
        }
        images.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use crate::module::direct_sum;
    use crate::ring::Ring;

    #[test]
    fn examples() {
        let r = Ring::zmod(4).unwrap();
        let z2 = Module::new(&r, vec![2], vec![Matrix::identity(1)]).unwrap();
        let z4 = Module::regular(&r);
        let z2z2 = direct_sum(&z2, &z2).unwrap().module;
        assert!(are_isomorphic(&z4, &z2z2).unwrap().is_none());
        assert!(are_isomorphic(&z4, &z4).unwrap().unwrap().is_identity());
        let a = direct_sum(&z2, &z4).unwrap().module;
        let b = direct_sum(&z4, &z2).unwrap().module;
        let iso = are_isomorphic(&a, &b).unwrap().unwrap();
        assert!(iso.is_injective() && iso.is_surjective());
    }

    #[test]
    fn same_additive_group_different_action() {
        // over F2[x,y]/(x,y)^2: R/(y) and R/(x) are isomorphic via swapping x, y?
        // no: as modules they are not, since the ring is fixed; but the
        // additive groups agree
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        let reg = Module::regular(&r);
        let qx = crate::module::quotient_by(&reg, &crate::module::Submodule::generate(&reg, &[r.basis_element(1)]).unwrap())
            .unwrap()
            .0;
        let qy = crate::module::quotient_by(&reg, &crate::module::Submodule::generate(&reg, &[r.basis_element(2)]).unwrap())
            .unwrap()
            .0;
        assert_eq!(qx.orders(), qy.orders());
        assert!(are_isomorphic(&qx, &qy).unwrap().is_none());
        let trivial = Module::new(&r, vec![2, 2], vec![Matrix::identity(2), Matrix::zeros(2, 2), Matrix::zeros(2, 2)]).unwrap();
        assert!(are_isomorphic(&qx, &trivial).unwrap().is_none());
    }
}
