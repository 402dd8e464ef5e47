//! Linear systems with mixed moduli.
//!
//! Unknown `x_j` lives in `Z/v_j`; equation `i` reads
//! `sum_j a_ij x_j = b_i (mod m_i)`. Each equation must be well defined on
//! the unknowns, i.e. `a_ij * v_j = 0 (mod m_i)`.

use super::howell::{howell_form, lcm, pivot, reduce};
use super::subgroup::{unscale, CanonicalSubgroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LinearSystem {
    var_moduli: Vec<i64>,
    rows: Vec<(Vec<i64>, i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unsolvable,
    /// `particular` is the lexicographically least solution; the full
    /// solution set is `particular + kernel`.
    Solvable { particular: Vec<i64>, kernel: CanonicalSubgroup },
}

impl Solution {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Solution::Solvable { .. })
    }

    pub fn particular(&self) -> Option<&[i64]> {
        match self {
            Solution::Solvable { particular, .. } => Some(particular),
            Solution::Unsolvable => None,
        }
    }
}

impl LinearSystem {
    pub fn new(var_moduli: Vec<i64>) -> Self {
        assert!(var_moduli.iter().all(|&v| v >= 1), "variable moduli must be positive");
        LinearSystem { var_moduli, rows: Vec::new() }
    }

    pub fn var_moduli(&self) -> &[i64] {
        &self.var_moduli
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    /// Adds `sum coeffs[j] x_j = rhs (mod modulus)`.
    pub fn push(&mut self, coeffs: Vec<i64>, rhs: i64, modulus: i64) {
        assert_eq!(coeffs.len(), self.var_moduli.len(), "equation width");
        assert!(modulus >= 1, "equation modulus must be positive");
        debug_assert!(
            coeffs.iter().zip(&self.var_moduli).all(|(&a, &v)| (a as i128 * v as i128) % modulus as i128 == 0),
            "equation not well defined on the unknowns"
        );
        if modulus == 1 {
            return;
        }
        let coeffs = coeffs.into_iter().map(|a| a.rem_euclid(modulus)).collect();
        self.rows.push((coeffs, rhs.rem_euclid(modulus), modulus));
    }

    /// Like [`push`](Self::push) but checks well-definedness.
    pub fn try_push(&mut self, coeffs: Vec<i64>, rhs: i64, modulus: i64) -> Result<()> {
        if coeffs.len() != self.var_moduli.len() {
            return Err(Error::DimensionMismatch(format!(
                "equation has {} coefficients for {} unknowns",
                coeffs.len(),
                self.var_moduli.len()
            )));
        }
        if modulus < 1 {
            return Err(Error::DimensionMismatch(format!("equation modulus {modulus} is not positive")));
        }
        for (j, (&a, &v)) in coeffs.iter().zip(&self.var_moduli).enumerate() {
            if (a as i128 * v as i128) % modulus as i128 != 0 {
                return Err(Error::NotWellDefined(format!(
                    "coefficient {a} of unknown {j} (mod {v}) is not well defined modulo {modulus}"
                )));
            }
        }
        self.push(coeffs, rhs, modulus);
        Ok(())
    }

    /// Kernel and lexicographically least particular solution.
    ///
    /// Each unknown becomes one row `[(N/m_i) a_ij]_i | (N/v_j) e_j` over
    /// `Z/N`; in the Howell form of these rows the ones whose pivot lies in
    /// the second block span exactly the solutions of the homogeneous system.
    pub fn solve(&self) -> Solution {
        let m = self.rows.len();
        let k = self.var_moduli.len();
        let n = self.rows.iter().map(|r| r.2).chain(self.var_moduli.iter().copied()).fold(1, lcm);
        let width = m + k;
        let mut rows = Vec::with_capacity(k);
        for j in 0..k {
            let mut r = vec![0i64; width];
            for (i, (coeffs, _, mi)) in self.rows.iter().enumerate() {
                r[i] = ((coeffs[j] as i128 * (n / mi) as i128) % n as i128) as i64;
            }
            r[m + j] = (n / self.var_moduli[j]) % n;
            rows.push(r);
        }
        let h = howell_form(rows, width, n);
        let split = h.iter().position(|r| pivot(r).unwrap() >= m).unwrap_or(h.len());
        let (first, second) = h.split_at(split);

        let mut target = vec![0i64; width];
        for (i, (_, b, mi)) in self.rows.iter().enumerate() {
            target[i] = ((*b as i128 * (n / mi) as i128) % n as i128) as i64;
        }
        reduce(first, &mut target, n);
        if target[..m].iter().any(|&x| x != 0) {
            return Solution::Unsolvable;
        }
        // target = b' - (combination with first block b'), so the unknowns
        // are the negated second block
        let mut x = vec![0i64; width];
        for j in 0..k {
            x[m + j] = (n - target[m + j]) % n;
        }
        reduce(second, &mut x, n);
        let particular = unscale(&x[m..], &self.var_moduli, n);
        let kernel_gens: Vec<Vec<i64>> = second.iter().map(|r| unscale(&r[m..], &self.var_moduli, n)).collect();
        let kernel = CanonicalSubgroup::from_generators_unchecked(&kernel_gens, &self.var_moduli);
        Solution::Solvable { particular, kernel }
    }

    /// Checks a candidate assignment.
    pub fn satisfied_by(&self, x: &[i64]) -> bool {
        self.rows.iter().all(|(coeffs, b, mi)| {
            let mut acc: i128 = 0;
            for (a, v) in coeffs.iter().zip(x) {
                acc += *a as i128 * *v as i128;
            }
            (acc - *b as i128).rem_euclid(*mi as i128) == 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(sys: &LinearSystem) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; sys.var_moduli.len()];
        loop {
            if sys.satisfied_by(&cur) {
                out.push(cur.clone());
            }
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < sys.var_moduli[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    fn agree(sys: &LinearSystem) {
        let all = brute(sys);
        match sys.solve() {
            Solution::Unsolvable => assert!(all.is_empty(), "solver missed {:?}", all[0]),
            Solution::Solvable { particular, kernel } => {
                assert_eq!(all.first(), Some(&particular));
                assert_eq!(kernel.cardinality() as usize, all.len());
                for s in &all {
                    let d: Vec<i64> =
                        s.iter().zip(&particular).zip(&sys.var_moduli).map(|((a, b), v)| (a - b).rem_euclid(*v)).collect();
                    assert!(kernel.contains(&d));
                }
            }
        }
    }

    #[test]
    fn two_x_equals_one_mod_four_has_no_solution() {
        let mut sys = LinearSystem::new(vec![4]);
        sys.push(vec![2], 1, 4);
        assert_eq!(sys.solve(), Solution::Unsolvable);
        agree(&sys);
    }

    #[test]
    fn mixed_moduli_system() {
        let mut sys = LinearSystem::new(vec![4, 2, 6]);
        sys.push(vec![1, 2, 2], 3, 4);
        sys.push(vec![0, 1, 3], 1, 2);
        agree(&sys);
        let mut sys = LinearSystem::new(vec![4, 2, 6]);
        sys.push(vec![2, 1, 1], 0, 2);
        agree(&sys);
    }

    #[test]
    fn ill_defined_equation_is_rejected() {
        let mut sys = LinearSystem::new(vec![3]);
        assert!(matches!(sys.try_push(vec![1], 0, 2), Err(Error::NotWellDefined(_))));
    }

    #[test]
    fn exhaustive_small_square_systems() {
        for n in 2..=6i64 {
            for a in 0..n * n * n * n {
                let c = [a % n, (a / n) % n, (a / n / n) % n, a / n / n / n];
                for b in 0..n * n {
                    let mut sys = LinearSystem::new(vec![n, n]);
                    sys.push(vec![c[0], c[1]], b % n, n);
                    sys.push(vec![c[2], c[3]], b / n, n);
                    agree(&sys);
                }
            }
        }
    }
}
