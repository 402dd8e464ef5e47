//! Finite unital rings given by an additive basis and structure constants.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Coordinates of a ring element on the additive basis, reduced modulo the
/// additive orders.
pub type RingElement = Vec<i64>;

/// A finite ring. Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

struct RingData {
    orders: Vec<i64>,
    structure: Vec<Vec<Vec<i64>>>,
    unit: Vec<i64>,
    commutative: bool,
    name: Option<String>,
    elements: Vec<RingElement>,
    units: OnceLock<Vec<RingElement>>,
    radical: OnceLock<Vec<RingElement>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.orders == other.0.orders && self.0.structure == other.0.structure && self.0.unit == other.0.unit)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.name {
            Some(n) => write!(f, "Ring({n})"),
            None => write!(f, "Ring(orders={:?})", self.0.orders),
        }
    }
}

impl Ring {
    /// Validates and builds a ring. `structure[i][j]` holds `b_i * b_j`.
    pub fn new(orders: Vec<i64>, structure: Vec<Vec<Vec<i64>>>, unit: Vec<i64>) -> Result<Ring> {
        Self::with_cap(orders, structure, unit, Limits::from_env().max_ring_size)
    }

    pub fn with_cap(orders: Vec<i64>, structure: Vec<Vec<Vec<i64>>>, unit: Vec<i64>, cap: u64) -> Result<Ring> {
        let m = orders.len();
        if orders.iter().any(|&c| c < 1) {
            return Err(Error::DimensionMismatch(format!("additive orders must be positive, got {orders:?}")));
        }
        if structure.len() != m || structure.iter().any(|row| row.len() != m || row.iter().any(|v| v.len() != m)) {
            return Err(Error::DimensionMismatch(format!("structure constants must form a {m} x {m} table of {m}-vectors")));
        }
        if unit.len() != m {
            return Err(Error::DimensionMismatch(format!("unit has {} coordinates, expected {m}", unit.len())));
        }
        let size = orders.iter().try_fold(1u64, |acc, &c| acc.checked_mul(c as u64)).unwrap_or(u64::MAX);
        if size > cap {
            return Err(Error::RingTooLarge { size, cap });
        }
        let reduce = |v: &[i64]| -> Vec<i64> { v.iter().zip(&orders).map(|(x, c)| x.rem_euclid(*c)).collect() };
        let structure: Vec<Vec<Vec<i64>>> =
            structure.iter().map(|row| row.iter().map(|v| reduce(v)).collect()).collect();
        let unit = reduce(&unit);
        // b_i has order c_i, so c_i (b_i b_j) and c_j (b_i b_j) must vanish
        for i in 0..m {
            for j in 0..m {
                let p = &structure[i][j];
                for (k, &ck) in orders.iter().enumerate() {
                    if (orders[i] * p[k]) % ck != 0 || (orders[j] * p[k]) % ck != 0 {
                        return Err(Error::NotWellDefined(format!(
                            "product b{i}*b{j} is not annihilated by the orders of its factors"
                        )));
                    }
                }
            }
        }
        let data = RingData {
            orders: orders.clone(),
            structure,
            unit,
            commutative: false,
            name: None,
            elements: enumerate_coords(&orders),
            units: OnceLock::new(),
            radical: OnceLock::new(),
        };
        let mut ring = Ring(Arc::new(data));
        for j in 0..m {
            let b = ring.basis_element(j);
            if ring.mul(&ring.0.unit, &b) != b || ring.mul(&b, &ring.0.unit) != b {
                return Err(Error::UnitFailure(format!("unit {:?} does not fix basis element b{j}", ring.0.unit)));
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let left = ring.mul(&ring.0.structure[i][j], &ring.basis_element(k));
                    let right = ring.mul(&ring.basis_element(i), &ring.0.structure[j][k]);
                    if left != right {
                        return Err(Error::Associativity(i, j, k));
                    }
                }
            }
        }
        let commutative = (0..m).all(|i| (0..m).all(|j| ring.0.structure[i][j] == ring.0.structure[j][i]));
        Arc::get_mut(&mut ring.0).expect("fresh ring").commutative = commutative;
        Ok(ring)
    }

    pub fn named(self, name: &str) -> Ring {
        let d = &self.0;
        Ring(Arc::new(RingData {
            orders: d.orders.clone(),
            structure: d.structure.clone(),
            unit: d.unit.clone(),
            commutative: d.commutative,
            name: Some(name.to_string()),
            elements: d.elements.clone(),
            units: OnceLock::new(),
            radical: OnceLock::new(),
        }))
    }

    /// `Z/n`.
    pub fn zmod(n: i64) -> Result<Ring> {
        if n < 1 {
            return Err(Error::DimensionMismatch(format!("Z/{n} is not a ring")));
        }
        Ok(Ring::new(vec![n], vec![vec![vec![1 % n]]], vec![1 % n])?.named(&format!("Z/{n}")))
    }

    /// `Z/p[x_1..x_vars]` modulo all monomials of total degree `>= degree`.
    /// `truncated_poly(2, 2, 2)` is `F_2[x,y]/(x,y)^2`.
    pub fn truncated_poly(p: i64, vars: usize, degree: u32) -> Result<Ring> {
        if p < 1 || degree < 1 {
            return Err(Error::DimensionMismatch("truncated polynomial ring needs p >= 1 and degree >= 1".into()));
        }
        let monomials = monomials_below(vars, degree);
        let m = monomials.len();
        let index = |e: &[u32]| monomials.iter().position(|x| x.as_slice() == e);
        let mut structure = vec![vec![vec![0; m]; m]; m];
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate() {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(k) = index(&e) {
                    structure[i][j][k] = 1 % p;
                }
            }
        }
        let mut unit = vec![0; m];
        unit[0] = 1 % p;
        let ring = Ring::new(vec![p; m], structure, unit)?;
        let name = if p == 2 && vars == 2 && degree == 2 {
            "F2[x,y]/(x,y)^2".to_string()
        } else {
            format!("Z/{p}[{vars} vars]/deg>={degree}")
        };
        Ok(ring.named(&name))
    }

    /// Upper triangular 2x2 matrices over `Z/n`, basis `e11, e12, e22`.
    pub fn upper_triangular(n: i64) -> Result<Ring> {
        let one = 1 % n;
        let mut s = vec![vec![vec![0; 3]; 3]; 3];
        s[0][0][0] = one; // e11 e11 = e11
        s[0][1][1] = one; // e11 e12 = e12
        s[1][2][1] = one; // e12 e22 = e12
        s[2][2][2] = one; // e22 e22 = e22
        Ok(Ring::new(vec![n; 3], s, vec![one, 0, one])?.named(&format!("UT2(Z/{n})")))
    }

    /// Named test rings: `z2`, `z4`, `z8`, `z9`, `f2xy`, `zN`, `ut2`.
    pub fn preset(name: &str) -> Option<Ring> {
        match name {
            "f2xy" => Ring::truncated_poly(2, 2, 2).ok(),
            "ut2" => Ring::upper_triangular(2).ok(),
            _ => name.strip_prefix('z').and_then(|n| n.parse::<i64>().ok()).and_then(|n| Ring::zmod(n).ok()),
        }
    }

    pub fn orders(&self) -> &[i64] {
        &self.0.orders
    }

    pub fn structure(&self) -> &[Vec<Vec<i64>>] {
        &self.0.structure
    }

    pub fn unit(&self) -> &[i64] {
        &self.0.unit
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn is_commutative(&self) -> bool {
        self.0.commutative
    }

    /// Number of additive basis elements.
    pub fn rank(&self) -> usize {
        self.0.orders.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.0.elements.len() as u64
    }

    pub fn is_zero_ring(&self) -> bool {
        self.cardinality() == 1
    }

    /// `Z/n` presented on the single generator `1`.
    pub fn is_cyclic(&self) -> bool {
        self.0.orders.len() == 1 && self.0.unit == [1 % self.0.orders[0]]
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        let mut v = vec![0; self.rank()];
        v[i] = 1 % self.0.orders[i];
        v
    }

    pub fn zero(&self) -> RingElement {
        vec![0; self.rank()]
    }

    pub fn one(&self) -> RingElement {
        self.0.unit.clone()
    }

    /// The image of the integer `k` in the ring.
    pub fn from_int(&self, k: i64) -> RingElement {
        self.0.unit.iter().zip(&self.0.orders).map(|(u, c)| ((*u as i128 * k as i128).rem_euclid(*c as i128)) as i64).collect()
    }

    pub fn reduce(&self, v: &[i64]) -> RingElement {
        v.iter().zip(&self.0.orders).map(|(x, c)| x.rem_euclid(*c)).collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.rank() && v.iter().zip(&self.0.orders).all(|(x, c)| (0..*c).contains(x))
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> RingElement {
        a.iter().zip(b).zip(&self.0.orders).map(|((x, y), c)| (x + y).rem_euclid(*c)).collect()
    }

    pub fn neg(&self, a: &[i64]) -> RingElement {
        a.iter().zip(&self.0.orders).map(|(x, c)| (-x).rem_euclid(*c)).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> RingElement {
        let m = self.rank();
        let mut acc = vec![0i128; m];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai as i128 * bj as i128;
                for (k, &s) in self.0.structure[i][j].iter().enumerate() {
                    acc[k] += c * s as i128;
                }
            }
        }
        acc.iter().zip(&self.0.orders).map(|(x, c)| x.rem_euclid(*c as i128) as i64).collect()
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> &[RingElement] {
        &self.0.elements
    }

    pub fn units(&self) -> &[RingElement] {
        self.0.units.get_or_init(|| {
            let one = self.one();
            self.elements()
                .iter()
                .filter(|a| self.elements().iter().any(|b| self.mul(a, b) == one && self.mul(b, a) == one))
                .cloned()
                .collect()
        })
    }

    pub fn is_unit(&self, a: &[i64]) -> bool {
        self.units().iter().any(|u| u.as_slice() == a)
    }

    /// Jacobson radical: the `r` with `1 - s r` a unit for every `s`.
    pub fn radical(&self) -> &[RingElement] {
        self.0.radical.get_or_init(|| {
            let one = self.one();
            self.elements()
                .iter()
                .filter(|r| self.elements().iter().all(|s| self.is_unit(&self.sub(&one, &self.mul(s, r)))))
                .cloned()
                .collect()
        })
    }

    /// Local rings: the non-units form an ideal (equivalently, `R/J` is a
    /// division ring, i.e. the radical is exactly the non-units).
    pub fn is_local(&self) -> bool {
        !self.is_zero_ring() && self.radical().len() + self.units().len() == self.elements().len()
    }

    /// Textual form of an element: an integer for `Z/n`, a tuple otherwise.
    pub fn format_element(&self, a: &[i64]) -> String {
        if self.is_cyclic() {
            a[0].to_string()
        } else {
            let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

pub fn enumerate_elements(r: &Ring) -> Vec<RingElement> {
    r.elements().to_vec()
}

/// All coordinate vectors in `prod Z/orders[i]`, lexicographically.
pub(crate) fn enumerate_coords(orders: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(orders.len())];
    for &c in orders {
        let mut next = Vec::with_capacity(out.len() * c as usize);
        for v in &out {
            for x in 0..c {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn monomials_below(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..vars {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..degree - used {
                let mut w = m.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out.sort_by_key(|m| (m.iter().sum::<u32>(), std::cmp::Reverse(m.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_four() {
        let r = Ring::zmod(4).unwrap();
        assert!(r.is_commutative());
        assert_eq!(r.elements(), &[vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(r.units(), &[vec![1], vec![3]]);
        assert_eq!(r.radical(), &[vec![0], vec![2]]);
        assert!(r.is_local());
    }

    #[test]
    fn truncated_poly_ring() {
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        assert_eq!(r.cardinality(), 8);
        assert_eq!(r.orders(), &[2, 2, 2]);
        let x = r.basis_element(1);
        let y = r.basis_element(2);
        assert_eq!(r.mul(&x, &y), r.zero());
        assert_eq!(r.mul(&x, &x), r.zero());
        assert!(r.is_local());
        assert_eq!(r.radical().len(), 4);
    }

    #[test]
    fn unit_failure_is_reported() {
        let e = Ring::new(vec![2], vec![vec![vec![1]]], vec![0]).unwrap_err();
        assert!(matches!(e, Error::UnitFailure(_)));
    }

    #[test]
    fn associativity_failure_has_witness() {
        // basis 1, a, b with a*a = b, a*b = a, b*a = 0: (aa)a = 0 but a(aa) = a
        let mut s = vec![vec![vec![0; 3]; 3]; 3];
        for j in 0..3 {
            s[0][j][j] = 1;
            s[j][0][j] = 1;
        }
        s[1][1] = vec![0, 0, 1];
        s[1][2] = vec![0, 1, 0];
        let e = Ring::new(vec![2, 2, 2], s, vec![1, 0, 0]).unwrap_err();
        assert_eq!(e, Error::Associativity(1, 1, 1));
    }

    #[test]
    fn upper_triangular_is_noncommutative() {
        let r = Ring::upper_triangular(2).unwrap();
        assert!(!r.is_commutative());
        assert_eq!(r.cardinality(), 8);
        assert!(!r.is_local());
    }

    #[test]
    fn zero_ring() {
        let r = Ring::zmod(1).unwrap();
        assert_eq!(r.elements(), &[vec![0]]);
        assert!(r.is_zero_ring());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            Ring::with_cap(vec![17, 17], vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]], vec![1, 0], 256),
            Err(Error::RingTooLarge { .. })
        ));
    }

    #[test]
    fn zmod_multiplication_matches_integers() {
        for n in 1..=16 {
            let r = Ring::zmod(n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(r.mul(&[a], &[b]), vec![(a * b) % n]);
                }
            }
        }
    }

    #[test]
    fn distributivity_on_small_rings() {
        for r in [Ring::zmod(6).unwrap(), Ring::truncated_poly(2, 2, 2).unwrap(), Ring::upper_triangular(2).unwrap()] {
            let el = r.elements();
            for a in el {
                for b in el {
                    for c in el {
                        assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
                        assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)));
                    }
                }
            }
        }
    }
}
