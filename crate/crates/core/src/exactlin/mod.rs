//! Exact linear algebra over `Z` and `Z/n`.

mod howell;
mod matrix;
mod smith;
mod solve;
mod subgroup;

pub use howell::{gcd, howell_form, lcm};
pub use matrix::{IntMatrix, Matrix};
pub use smith::{invariant_factors_by_minors, smith_normal_form, Smith};
pub use solve::{LinearSystem, Solution};
pub use subgroup::{AbelianBasis, CanonicalSubgroup};
pub(crate) use subgroup::{apply, big_mod, unit_vector};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Solves `a x = b` with row `i` read modulo `moduli[i]` and every unknown
/// ranging over `Z/lcm(moduli)`.
///
/// Returns the lexicographically least particular solution (if any) and the
/// subgroup of solutions of the homogeneous system.
pub fn howell_solve(a: &IntMatrix, b: &[BigInt], moduli: &[i64]) -> Result<(Option<Vec<i64>>, CanonicalSubgroup)> {
    if b.len() != a.rows() || moduli.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "system has {} rows, {} right-hand sides and {} moduli",
            a.rows(),
            b.len(),
            moduli.len()
        )));
    }
    if moduli.iter().any(|&m| m < 1) {
        return Err(Error::DimensionMismatch(format!("moduli must be positive, got {moduli:?}")));
    }
    let n = moduli.iter().copied().fold(1, lcm);
    let mut sys = LinearSystem::new(vec![n; a.cols()]);
    for i in 0..a.rows() {
        let coeffs = a.row(i).iter().map(|x| big_mod(x, moduli[i])).collect();
        sys.push(coeffs, big_mod(&b[i], moduli[i]), moduli[i]);
    }
    let homogeneous = {
        let mut h = LinearSystem::new(vec![n; a.cols()]);
        for i in 0..a.rows() {
            let coeffs = a.row(i).iter().map(|x| big_mod(x, moduli[i])).collect();
            h.push(coeffs, 0, moduli[i]);
        }
        h
    };
    let kernel = match homogeneous.solve() {
        Solution::Solvable { kernel, .. } => kernel,
        Solution::Unsolvable => unreachable!("homogeneous system"),
    };
    Ok((sys.solve().particular().map(|p| p.to_vec()), kernel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve1(a: i64, b: i64, m: i64) -> (Option<Vec<i64>>, CanonicalSubgroup) {
        howell_solve(&IntMatrix::from_i64(1, 1, &[a]), &[BigInt::from(b)], &[m]).unwrap()
    }

    #[test]
    fn two_x_is_two_mod_four() {
        let (p, k) = solve1(2, 2, 4);
        assert_eq!(p, Some(vec![1]));
        assert_eq!(k.elements(), vec![vec![0], vec![2]]);
    }

    #[test]
    fn two_x_is_one_mod_four() {
        assert_eq!(solve1(2, 1, 4).0, None);
    }

    #[test]
    fn identity_system() {
        let (p, k) = solve1(1, 0, 4);
        assert_eq!(p, Some(vec![0]));
        assert!(k.is_zero());
    }

    #[test]
    fn inconsistent_dimensions_are_rejected() {
        let a = IntMatrix::from_i64(2, 1, &[1, 1]);
        assert!(howell_solve(&a, &[BigInt::from(0)], &[4, 4]).is_err());
    }
}
