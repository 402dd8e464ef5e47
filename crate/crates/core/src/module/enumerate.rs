//! Enumeration of all modules up to a size bound, one per isomorphism class.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hom::HomGroup;
use crate::limits::Limits;
use crate::ring::Ring;

use super::{are_isomorphic, direct_sum, fingerprint, quotient_by, Module, Submodule};

/// Indecomposable projective modules `Re` (`e` a primitive idempotent),
/// one per isomorphism class, each paired with its simple top `Re / J Re`.
pub fn indecomposable_projectives(ring: &Ring) -> Vec<(Module, Module)> {
    if ring.is_zero_ring() {
        return Vec::new();
    }
    let idempotents: Vec<&Vec<i64>> =
        ring.elements().iter().filter(|e| ring.mul(e, e) == **e && e.iter().any(|&x| x != 0)).collect();
    let primitive = idempotents.iter().filter(|e| {
        !idempotents.iter().any(|f| f != *e && ring.mul(e, f) == **f && ring.mul(f, e) == **f)
    });
    let (reg, coords_of) = super::regular_with_coordinates(ring);
    let mut out: Vec<(Module, Module)> = Vec::new();
    for e in primitive {
        let coords = coords_of(e);
        let p = Submodule::generate(&reg, &[coords]).expect("element of R").module().clone();
        if out.iter().any(|(q, _)| are_isomorphic(q, &p).expect("same ring").is_some()) {
            continue;
        }
        let top = quotient_by(&p, &radical_times(&p)).expect("submodule").0;
        out.push((p, top));
    }
    out.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
    out
}

/// `J M`.
pub fn radical_times(m: &Module) -> Submodule {
    let gens: Vec<Vec<i64>> = m
        .ring()
        .radical()
        .iter()
        .flat_map(|r| (0..m.num_generators()).map(|j| m.act(r, &m.generator(j))).collect::<Vec<_>>())
        .collect();
    Submodule::generate(m, &gens).expect("elements of m")
}

/// Simple modules of the ring, one per isomorphism class.
pub fn simple_modules(ring: &Ring) -> Vec<Module> {
    let mut out: Vec<Module> = indecomposable_projectives(ring).into_iter().map(|(_, top)| top).collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Maximal submodules of `k`, as submodules of its ambient.
fn maximal_submodules(k: &Submodule, simples: &[Module]) -> Vec<Submodule> {
    let (km, incl) = k.realize();
    let mut out: BTreeSet<Submodule> = BTreeSet::new();
    for s in simples {
        let hg = HomGroup::new(km, s).expect("same ring");
        for phi in hg.elements() {
            if phi.is_zero() {
                continue;
            }
            out.insert(incl.image_of(&phi.kernel()));
        }
    }
    out.into_iter().collect()
}

/// Every module of cardinality at most `max_size`, one per isomorphism
/// class, sorted by (cardinality, additive invariants, action matrices).
pub fn enumerate_modules(ring: &Ring, max_size: u64) -> Result<Vec<Module>> {
    enumerate_modules_with(ring, max_size, &Limits::from_env())
}

pub fn enumerate_modules_with(ring: &Ring, max_size: u64, limits: &Limits) -> Result<Vec<Module>> {
    if max_size < 1 {
        return Err(Error::Precondition("max_size must be at least 1".into()));
    }
    let simples = simple_modules(ring);
    let mut presentations: BTreeSet<(u64, Vec<i64>, Vec<crate::exactlin::Matrix<i64>>)> = BTreeSet::new();
    let mut modules: Vec<Module> = vec![Module::zero(ring)];
    presentations.insert(key(&modules[0]));
    if simples.is_empty() {
        return Ok(modules);
    }
    let projectives = indecomposable_projectives(ring);
    let tops: Vec<u64> = projectives.iter().map(|(_, t)| t.cardinality()).collect();
    let mut candidates: u64 = 0;
    // every module is a quotient of its projective cover P = sum P_i^{n_i}
    // by a submodule of J P, and |M / J M| = prod |top_i|^{n_i}
    for mult in multiplicities(&tops, max_size) {
        let mut free = Module::zero(ring);
        for ((p, _), &n) in projectives.iter().zip(&mult) {
            for _ in 0..n {
                free = direct_sum(&free, p).expect("same ring").module;
            }
        }
        let start = radical_times(&free);
        let index = |s: &Submodule| free.cardinality() / s.cardinality();
        let mut seen: BTreeSet<Submodule> = BTreeSet::new();
        let mut stack = vec![start.clone()];
        seen.insert(start);
        while let Some(kk) = stack.pop() {
            candidates += 1;
            if candidates > limits.max_candidates {
                return Err(Error::ResourceCap(format!(
                    "module enumeration examined more than {} candidate presentations",
                    limits.max_candidates
                )));
            }
            let (q, _) = quotient_by(&free, &kk).expect("submodule of the cover");
            if presentations.insert(key(&q)) {
                modules.push(q);
            }
            for m in maximal_submodules(&kk, &simples) {
                if index(&m) <= max_size && !seen.contains(&m) {
                    seen.insert(m.clone());
                    stack.push(m);
                }
            }
        }
    }
    modules.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let mut kept: Vec<Module> = Vec::new();
    let mut prints: Vec<(Vec<i64>, Vec<(i64, Vec<bool>)>)> = Vec::new();
    for m in modules {
        let fp = fingerprint(&m);
        let dup = kept
            .iter()
            .zip(&prints)
            .any(|(o, ofp)| *ofp == fp && are_isomorphic(o, &m).expect("same ring").is_some());
        if !dup {
            kept.push(m);
            prints.push(fp);
        }
    }
    Ok(kept)
}

/// Nonzero exponent vectors `n` with `prod tops[i]^n[i] <= max`.
fn multiplicities(tops: &[u64], max: u64) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &t in tops {
        let mut next = Vec::new();
        for v in &out {
            let used: u64 = v.iter().zip(tops).map(|(&n, &s)| s.pow(n)).product();
            let mut n = 0u32;
            while used * t.pow(n) <= max {
                let mut w = v.clone();
                w.push(n);
                next.push(w);
                n += 1;
            }
        }
        out = next;
    }
    out.retain(|v| v.iter().any(|&n| n > 0));
    out
}

fn key(m: &Module) -> (u64, Vec<i64>, Vec<crate::exactlin::Matrix<i64>>) {
    (m.cardinality(), m.orders().to_vec(), m.actions().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(ms: &[Module]) -> Vec<Vec<i64>> {
        ms.iter().map(|m| m.orders().to_vec()).collect()
    }

    #[test]
    fn z4_up_to_four() {
        let ms = enumerate_modules(&Ring::zmod(4).unwrap(), 4).unwrap();
        assert_eq!(orders(&ms), vec![vec![], vec![2], vec![2, 2], vec![4]]);
    }

    #[test]
    fn z2_up_to_four() {
        let ms = enumerate_modules(&Ring::zmod(2).unwrap(), 4).unwrap();
        assert_eq!(orders(&ms), vec![vec![], vec![2], vec![2, 2]]);
    }

    #[test]
    fn size_one_is_zero_only() {
        for r in [Ring::zmod(3).unwrap(), Ring::truncated_poly(2, 2, 2).unwrap()] {
            assert_eq!(enumerate_modules(&r, 1).unwrap().len(), 1);
        }
    }

    #[test]
    fn abelian_groups_of_exponent_dividing_eight() {
        // partitions with parts <= 3 of total <= 4: 1+1+2+3+4 = 11 classes
        let ms = enumerate_modules(&Ring::zmod(8).unwrap(), 16).unwrap();
        assert_eq!(ms.len(), 1 + 1 + 2 + 3 + 4);
    }

    #[test]
    fn f2xy_small_modules() {
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        let ms = enumerate_modules(&r, 4).unwrap();
        // 0, k, k^2, and the uniserial modules R/(ax+by, x, y) of length 2:
        // R/I with I a 2-dim ideal containing... = three lines in J/J^2 = F2^2
        assert_eq!(ms.len(), 3 + 3);
    }

    #[test]
    fn simple_modules_of_rings() {
        assert_eq!(simple_modules(&Ring::zmod(6).unwrap()).len(), 2);
        assert_eq!(simple_modules(&Ring::upper_triangular(2).unwrap()).len(), 2);
        assert_eq!(simple_modules(&Ring::truncated_poly(2, 2, 2).unwrap()).len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let limits = Limits { max_candidates: 3, ..Limits::default() };
        assert!(matches!(
            enumerate_modules_with(&Ring::zmod(4).unwrap(), 16, &limits),
            Err(Error::ResourceCap(_))
        ));
    }
}
