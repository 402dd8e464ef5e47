use std::fmt;

use num_bigint::BigInt;

use super::howell::{howell_form, lcm, pivot, reduce};
use super::matrix::{IntMatrix, Matrix};
use super::smith::smith_normal_form;
use super::solve::{LinearSystem, Solution};
use crate::error::{Error, Result};

/// A subgroup of `Z/d_1 + ... + Z/d_k`, stored by its Howell form.
///
/// Internally every coordinate `x_i` is scaled into `Z/n` (`n = lcm d_i`)
/// as `(n / d_i) * x_i`; the Howell form of the scaled span is unique, so
/// equality of two subgroups of the same ambient is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSubgroup {
    orders: Vec<i64>,
    modulus: i64,
    rows: Vec<Vec<i64>>,
}

/// The invariant-factor decomposition of a subgroup: `generators[i]` has
/// order `orders[i]` and the subgroup is their internal direct sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianBasis {
    pub orders: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
    /// `to_basis * c` converts coefficients on the Howell rows into basis
    /// coordinates.
    pub(crate) to_basis: Matrix<i64>,
}

pub(crate) fn ambient_modulus(orders: &[i64]) -> i64 {
    orders.iter().fold(1, |acc, &d| lcm(acc, d))
}

impl CanonicalSubgroup {
    pub fn zero(orders: &[i64]) -> Self {
        CanonicalSubgroup { orders: orders.to_vec(), modulus: ambient_modulus(orders), rows: Vec::new() }
    }

    pub fn full(orders: &[i64]) -> Self {
        let gens: Vec<Vec<i64>> = (0..orders.len()).map(|i| unit_vector(orders.len(), i)).collect();
        Self::from_generators_unchecked(&gens, orders)
    }

    /// Canonical presentation of the subgroup generated by `generators`.
    pub fn new(generators: &[Vec<i64>], orders: &[i64]) -> Result<Self> {
        if orders.iter().any(|&d| d < 1) {
            return Err(Error::DimensionMismatch(format!("cyclic orders must be positive, got {orders:?}")));
        }
        for g in generators {
            if g.len() != orders.len() {
                return Err(Error::DimensionMismatch(format!(
                    "generator {g:?} has {} coordinates, ambient has {}",
                    g.len(),
                    orders.len()
                )));
            }
        }
        Ok(Self::from_generators_unchecked(generators, orders))
    }

    pub(crate) fn from_generators_unchecked(generators: &[Vec<i64>], orders: &[i64]) -> Self {
        let modulus = ambient_modulus(orders);
        let scaled: Vec<Vec<i64>> = generators.iter().map(|g| scale(g, orders, modulus)).collect();
        let rows = howell_form(scaled, orders.len(), modulus);
        CanonicalSubgroup { orders: orders.to_vec(), modulus, rows }
    }

    /// Builds from rows that are already scaled into `Z/modulus`.
    pub(crate) fn from_scaled(rows: Vec<Vec<i64>>, orders: &[i64]) -> Self {
        let modulus = ambient_modulus(orders);
        let rows = howell_form(rows, orders.len(), modulus);
        CanonicalSubgroup { orders: orders.to_vec(), modulus, rows }
    }

    pub fn ambient_orders(&self) -> &[i64] {
        &self.orders
    }

    /// Howell generators in ordinary coordinates (each reduced modulo the
    /// ambient orders).
    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| unscale(r, &self.orders, self.modulus)).collect()
    }

    pub fn gen_matrix(&self) -> IntMatrix {
        let k = self.orders.len();
        let gens = self.generators();
        Matrix::from_fn(gens.len(), k, |i, j| BigInt::from(gens[i][j]))
    }

    pub fn cardinality(&self) -> u64 {
        self.rows.iter().map(|r| (self.modulus / r[pivot(r).unwrap()]) as u64).product()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.orders.len() {
            return false;
        }
        let mut s = scale(v, &self.orders, self.modulus);
        reduce(&self.rows, &mut s, self.modulus);
        s.iter().all(|&x| x == 0)
    }

    pub fn is_subgroup_of(&self, other: &CanonicalSubgroup) -> bool {
        self.rows.iter().all(|r| {
            let mut s = r.clone();
            reduce(&other.rows, &mut s, other.modulus);
            s.iter().all(|&x| x == 0)
        })
    }

    /// Least element of the coset `v + self`, in lexicographic order.
    pub fn coset_min(&self, v: &[i64]) -> Vec<i64> {
        let mut s = scale(v, &self.orders, self.modulus);
        reduce(&self.rows, &mut s, self.modulus);
        unscale(&s, &self.orders, self.modulus)
    }

    pub fn sum(&self, other: &CanonicalSubgroup) -> CanonicalSubgroup {
        self.check_same_ambient(other);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::from_scaled(rows, &self.orders)
    }

    /// Intersection through the kernel of the join: the span of the rows
    /// `(a, a)` and `(b, 0)` meets `{0} x G` exactly in `{0} x (A n B)`.
    pub fn intersection(&self, other: &CanonicalSubgroup) -> CanonicalSubgroup {
        self.check_same_ambient(other);
        let k = self.orders.len();
        let n = self.modulus;
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        for a in &self.rows {
            let mut r = a.clone();
            r.extend_from_slice(a);
            rows.push(r);
        }
        for b in &other.rows {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(0, k));
            rows.push(r);
        }
        let h = howell_form(rows, 2 * k, n);
        let lower: Vec<Vec<i64>> =
            h.into_iter().filter(|r| pivot(r).is_some_and(|p| p >= k)).map(|r| r[k..].to_vec()).collect();
        CanonicalSubgroup { orders: self.orders.clone(), modulus: n, rows: lower }
    }

    fn check_same_ambient(&self, other: &CanonicalSubgroup) {
        assert_eq!(self.orders, other.orders, "subgroups of different ambient groups");
    }

    /// Every element, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let n = self.modulus;
        let k = self.orders.len();
        let mut acc: Vec<Vec<i64>> = vec![vec![0; k]];
        for r in &self.rows {
            let steps = n / r[pivot(r).unwrap()];
            let mut next = Vec::with_capacity(acc.len() * steps as usize);
            for base in &acc {
                let mut cur = base.clone();
                for _ in 0..steps {
                    next.push(cur.clone());
                    for (c, x) in cur.iter_mut().zip(r) {
                        *c = (*c + x) % n;
                    }
                }
            }
            acc = next;
        }
        let mut out: Vec<Vec<i64>> = acc.iter().map(|s| unscale(s, &self.orders, n)).collect();
        out.sort();
        out
    }

    /// Coefficients `c` (one per Howell row, each in `[0, n / pivot)`) with
    /// `sum c_i g_i = v`, or `None` when `v` is not in the subgroup.
    pub fn coefficients(&self, v: &[i64]) -> Option<Vec<i64>> {
        let mut s = scale(v, &self.orders, self.modulus);
        let c = reduce(&self.rows, &mut s, self.modulus);
        s.iter().all(|&x| x == 0).then_some(c)
    }

    /// Invariant-factor basis of the subgroup as an abstract abelian group.
    pub fn abelian_basis(&self) -> AbelianBasis {
        let gens = self.generators();
        let t = gens.len();
        let n = self.modulus;
        // relations among the Howell generators: kernel of c -> sum c_i g_i
        let mut sys = LinearSystem::new(vec![n; t]);
        for (p, &d) in self.orders.iter().enumerate() {
            let coeffs: Vec<i64> = gens.iter().map(|g| g[p]).collect();
            sys.push(coeffs, 0, d);
        }
        let kernel = match sys.solve() {
            Solution::Solvable { kernel, .. } => kernel,
            Solution::Unsolvable => unreachable!("homogeneous system"),
        };
        let mut rel_cols: Vec<Vec<i64>> = kernel.generators();
        for i in 0..t {
            let mut e = vec![0; t];
            e[i] = n;
            rel_cols.push(e);
        }
        let rel = Matrix::from_fn(t, rel_cols.len(), |i, j| BigInt::from(rel_cols[j][i]));
        let snf = smith_normal_form(&rel);
        let diag = snf.diagonal();
        let keep: Vec<usize> = (0..t).filter(|&i| diag[i] != BigInt::from(1)).collect();
        let orders: Vec<i64> = keep.iter().map(|&i| i64::try_from(&diag[i]).expect("order fits")).collect();
        // new generator i is sum_j u_inv[j][i] g_j
        let generators: Vec<Vec<i64>> = keep
            .iter()
            .map(|&i| {
                let mut v = vec![0i64; self.orders.len()];
                for (j, g) in gens.iter().enumerate() {
                    let c = big_mod(snf.u_inv.at(j, i), n);
                    for (p, x) in v.iter_mut().enumerate() {
                        *x = (*x as i128 + c as i128 * g[p] as i128).rem_euclid(self.orders[p] as i128) as i64;
                    }
                }
                v
            })
            .collect();
        let to_basis = Matrix::from_fn(keep.len(), t, |r, j| big_mod(snf.u.at(keep[r], j), orders[r]));
        AbelianBasis { orders, generators, to_basis }
    }
}

impl AbelianBasis {
    /// Basis coordinates of an element of the subgroup `sub` this basis was
    /// computed from.
    pub fn coordinates(&self, sub: &CanonicalSubgroup, v: &[i64]) -> Option<Vec<i64>> {
        let c = sub.coefficients(v)?;
        Some(
            (0..self.orders.len())
                .map(|r| {
                    let mut acc: i128 = 0;
                    for (j, cj) in c.iter().enumerate() {
                        acc += *self.to_basis.at(r, j) as i128 * *cj as i128;
                    }
                    acc.rem_euclid(self.orders[r] as i128) as i64
                })
                .collect(),
        )
    }

    pub fn cardinality(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }
}

pub(crate) fn big_mod(x: &BigInt, n: i64) -> i64 {
    let r = x % BigInt::from(n);
    let r = i64::try_from(&r).expect("residue fits");
    r.rem_euclid(n)
}

pub(crate) fn unit_vector(k: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; k];
    v[i] = 1;
    v
}

pub(crate) fn scale(v: &[i64], orders: &[i64], n: i64) -> Vec<i64> {
    v.iter().zip(orders).map(|(&x, &d)| ((x.rem_euclid(d) as i128 * (n / d) as i128) % n as i128) as i64).collect()
}

pub(crate) fn unscale(v: &[i64], orders: &[i64], n: i64) -> Vec<i64> {
    v.iter()
        .zip(orders)
        .map(|(&x, &d)| {
            let s = n / d;
            debug_assert_eq!(x % s, 0, "scaled coordinate outside the ambient image");
            (x / s).rem_euclid(d)
        })
        .collect()
}

/// `m * v`, reduced modulo `target_orders`.
pub(crate) fn apply(m: &Matrix<i64>, v: &[i64], target_orders: &[i64]) -> Vec<i64> {
    debug_assert_eq!(m.cols(), v.len());
    (0..m.rows())
        .map(|i| {
            let mut acc: i128 = 0;
            for (j, &x) in v.iter().enumerate() {
                acc += *m.at(i, j) as i128 * x as i128;
            }
            acc.rem_euclid(target_orders[i] as i128) as i64
        })
        .collect()
}

impl fmt::Debug for CanonicalSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?} in {:?}>", self.generators(), self.orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_subgroup_cardinality() {
        let s = CanonicalSubgroup::new(&[vec![2, 0], vec![0, 1]], &[4, 2]).unwrap();
        assert_eq!(s.cardinality(), 4);
    }

    #[test]
    fn order_two_subgroups_meet_trivially() {
        let a = CanonicalSubgroup::new(&[vec![2, 1]], &[4, 2]).unwrap();
        let b = CanonicalSubgroup::new(&[vec![2, 0]], &[4, 2]).unwrap();
        let i = a.intersection(&b);
        assert!(i.is_zero());
        assert_eq!(i.cardinality(), 1);
    }

    #[test]
    fn empty_generators_give_zero() {
        let s = CanonicalSubgroup::new(&[], &[4, 2]).unwrap();
        assert_eq!(s.cardinality(), 1);
        assert_eq!(s, CanonicalSubgroup::zero(&[4, 2]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(matches!(CanonicalSubgroup::new(&[vec![1]], &[4, 2]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn abelian_basis_of_mixed_subgroup() {
        let s = CanonicalSubgroup::new(&[vec![1, 1, 0], vec![0, 2, 3]], &[2, 4, 9]).unwrap();
        let b = s.abelian_basis();
        assert_eq!(b.cardinality(), s.cardinality());
        for (g, &d) in b.generators.iter().zip(&b.orders) {
            assert!(s.contains(g));
            let multiple: Vec<i64> = g.iter().zip(s.ambient_orders()).map(|(x, o)| (x * d) % o).collect();
            assert!(multiple.iter().all(|&x| x == 0));
        }
        for e in s.elements() {
            let c = b.coordinates(&s, &e).unwrap();
            let mut back = vec![0; 3];
            for (ci, g) in c.iter().zip(&b.generators) {
                for p in 0..3 {
                    back[p] = (back[p] + ci * g[p]).rem_euclid(s.ambient_orders()[p]);
                }
            }
            assert_eq!(back, e);
        }
    }

    use proptest::prelude::*;

    fn orders_and_gens() -> impl Strategy<Value = (Vec<i64>, Vec<Vec<i64>>)> {
        proptest::collection::vec(1i64..=8, 1..=3).prop_flat_map(|orders| {
            let k = orders.len();
            (Just(orders), proptest::collection::vec(proptest::collection::vec(0i64..8, k), 0..4))
        })
    }

    proptest! {
        #[test]
        fn same_span_same_form((orders, gens) in orders_and_gens(), shuffle in 0usize..24, extra in 0i64..5) {
            let a = CanonicalSubgroup::new(&gens, &orders).unwrap();
            let mut other = gens.clone();
            if !other.is_empty() {
                let len = other.len();
                other.rotate_left(shuffle % len);
                // add a combination of existing generators, and a multiple of the first
                let combo: Vec<i64> = (0..orders.len()).map(|p| other.iter().map(|g| g[p]).sum::<i64>()).collect();
                other.push(combo);
                other.push(other[0].iter().map(|x| x * extra).collect());
            }
            let b = CanonicalSubgroup::new(&other, &orders).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.cardinality() as usize, a.elements().len());
        }

        #[test]
        fn lattice_laws((orders, g1) in orders_and_gens(), g2 in proptest::collection::vec(proptest::collection::vec(0i64..8, 3), 0..3),
                        g3 in proptest::collection::vec(proptest::collection::vec(0i64..8, 3), 0..3)) {
            let k = orders.len();
            let trim = |g: &Vec<Vec<i64>>| g.iter().map(|v| v[..k].to_vec()).collect::<Vec<_>>();
            let a = CanonicalSubgroup::new(&g1, &orders).unwrap();
            let b = CanonicalSubgroup::new(&trim(&g2), &orders).unwrap();
            let c = CanonicalSubgroup::new(&trim(&g3), &orders).unwrap();
            prop_assert_eq!(a.intersection(&b), b.intersection(&a));
            prop_assert_eq!(a.sum(&b), b.sum(&a));
            prop_assert_eq!(a.intersection(&b).intersection(&c), a.intersection(&b.intersection(&c)));
            prop_assert_eq!(a.sum(&b).sum(&c), a.sum(&b.sum(&c)));
            prop_assert_eq!(&a.intersection(&a), &a);
            prop_assert_eq!(&a.sum(&a), &a);
            prop_assert_eq!(a.cardinality() * b.cardinality(), a.intersection(&b).cardinality() * a.sum(&b).cardinality());
            let ea = a.elements();
            let eb = b.elements();
            let meet: Vec<_> = ea.iter().filter(|x| eb.contains(x)).cloned().collect();
            prop_assert_eq!(a.intersection(&b).elements(), meet);
        }
    }
}
