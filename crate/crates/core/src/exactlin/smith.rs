//! Smith normal form over the integers.
//!
//! The elimination runs on checked `i128` arithmetic first and restarts on
//! `BigInt` the moment any intermediate value would overflow, so results are
//! always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::matrix::{IntMatrix, Matrix};

/// `u * m * v == d`, `d` diagonal with `d[0] | d[1] | ...` and nonnegative
/// entries, `u` and `v` unimodular. `u_inv` is the inverse of `u`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
}

impl Smith {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.at(i, i).clone()).collect()
    }
}

trait Exact: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul {}
impl<T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul> Exact for T {}

struct Overflow;

struct State<T> {
    m: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
}

impl<T: Exact> State<T> {
    /// row[dst] -= q * row[src], tracked in u and u_inv.
    fn row_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        axpy_row(&mut self.m, dst, src, q)?;
        axpy_row(&mut self.u, dst, src, q)?;
        // u' = E u with E = I - q e_dst e_src^T, so u'^{-1} = u^{-1} (I + q e_dst e_src^T):
        // column src of u_inv gains q * column dst.
        let neg = T::zero() - q.clone();
        axpy_col(&mut self.u_inv, src, dst, &neg)
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        axpy_col(&mut self.m, dst, src, q)?;
        axpy_col(&mut self.v, dst, src, q)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.m.cols() {
            let x = self.m.at(r, j).clone();
            *self.m.at_mut(r, j) = T::zero() - x;
        }
        for j in 0..self.u.cols() {
            let x = self.u.at(r, j).clone();
            *self.u.at_mut(r, j) = T::zero() - x;
        }
        for i in 0..self.u_inv.rows() {
            let x = self.u_inv.at(i, r).clone();
            *self.u_inv.at_mut(i, r) = T::zero() - x;
        }
    }
}

// row[dst] -= q * row[src]
fn axpy_row<T: Exact>(m: &mut Matrix<T>, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
    if q.is_zero() {
        return Ok(());
    }
    for j in 0..m.cols() {
        let s = m.at(src, j);
        if s.is_zero() {
            continue;
        }
        let p = q.checked_mul(s).ok_or(Overflow)?;
        let v = m.at(dst, j).checked_sub(&p).ok_or(Overflow)?;
        *m.at_mut(dst, j) = v;
    }
    Ok(())
}

// col[dst] -= q * col[src]
fn axpy_col<T: Exact>(m: &mut Matrix<T>, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
    if q.is_zero() {
        return Ok(());
    }
    for i in 0..m.rows() {
        let s = m.at(i, src);
        if s.is_zero() {
            continue;
        }
        let p = q.checked_mul(s).ok_or(Overflow)?;
        let v = m.at(i, dst).checked_sub(&p).ok_or(Overflow)?;
        *m.at_mut(i, dst) = v;
    }
    Ok(())
}

fn run<T: Exact>(m: Matrix<T>) -> Result<State<T>, Overflow> {
    let (r, c) = (m.rows(), m.cols());
    let mut st = State { m, u: Matrix::identity(r), u_inv: Matrix::identity(r), v: Matrix::identity(c) };
    let k = r.min(c);
    for t in 0..k {
        // pivot: smallest nonzero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = st.m.at(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < st.m.at(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            let p = st.m.at(t, t).clone();
            for i in t + 1..r {
                let q = st.m.at(i, t).div_floor(&p);
                st.row_sub(i, t, &q)?;
            }
            for j in t + 1..c {
                let q = st.m.at(t, j).div_floor(&p);
                st.col_sub(j, t, &q)?;
            }
            // leftover remainders in the pivot row/column become the new pivot
            let mut smaller: Option<(usize, bool)> = None;
            for i in t + 1..r {
                if !st.m.at(i, t).is_zero()
                    && smaller.is_none_or(|(s, row)| st.m.at(i, t).abs() < pick(&st.m, t, s, row).abs())
                {
                    smaller = Some((i, true));
                }
            }
            for j in t + 1..c {
                if !st.m.at(t, j).is_zero()
                    && smaller.is_none_or(|(s, row)| st.m.at(t, j).abs() < pick(&st.m, t, s, row).abs())
                {
                    smaller = Some((j, false));
                }
            }
            match smaller {
                Some((i, true)) => {
                    st.swap_rows(t, i);
                    continue;
                }
                Some((j, false)) => {
                    st.swap_cols(t, j);
                    continue;
                }
                None => {}
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !st.m.at(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = T::zero() - T::one();
                    st.row_sub(t, i, &minus_one)?;
                }
                None => break,
            }
        }
        if st.m.at(t, t).is_negative() {
            st.negate_row(t);
        }
    }
    Ok(st)
}

fn pick<T>(m: &Matrix<T>, t: usize, s: usize, row: bool) -> &T {
    if row {
        m.at(s, t)
    } else {
        m.at(t, s)
    }
}

fn lift(m: &Matrix<i128>) -> IntMatrix {
    m.map(|&x| BigInt::from(x))
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let small: Option<Matrix<i128>> = m
        .data()
        .iter()
        .map(|x| x.to_i128())
        .collect::<Option<Vec<_>>>()
        .map(|d| Matrix::from_vec(m.rows(), m.cols(), d));
    if let Some(sm) = small {
        if let Ok(st) = run(sm) {
            return Smith { d: lift(&st.m), u: lift(&st.u), v: lift(&st.v), u_inv: lift(&st.u_inv) };
        }
    }
    match run(m.clone()) {
        Ok(st) => Smith { d: st.m, u: st.u, v: st.v, u_inv: st.u_inv },
        Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
    }
}

/// The determinantal divisors route: `d_1 ... d_k = gcd of all k x k minors`.
/// Independent of the elimination above; used as a test oracle.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let (r, c) = (m.rows(), m.cols());
    let k = r.min(c);
    let mut divisors: Vec<BigInt> = vec![BigInt::one()];
    for size in 1..=k {
        let mut g = BigInt::zero();
        for rows in combinations(r, size) {
            for cols in combinations(c, size) {
                let minor = m.select_rows(&rows).select_cols(&cols).determinant();
                g = g.gcd(&minor);
            }
        }
        divisors.push(g);
    }
    let mut out = Vec::with_capacity(k);
    for i in 1..=k {
        if divisors[i].is_zero() {
            out.push(BigInt::zero());
        } else {
            out.push(&divisors[i] / &divisors[i - 1]);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "u*m*v != d for {m:?}");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.at(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        assert_eq!(diag, invariant_factors_by_minors(m));
        s
    }

    #[test]
    fn diag_two_three_becomes_one_six() {
        let s = check(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn single_zero_entry() {
        let s = check(&IntMatrix::from_i64(1, 1, &[0]));
        assert_eq!(s.diagonal(), vec![BigInt::from(0)]);
    }

    #[test]
    fn four_two_two_two() {
        let s = check(&IntMatrix::from_i64(2, 2, &[4, 2, 2, 2]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn empty_shapes() {
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
        check(&IntMatrix::zeros(0, 0));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX;
        let m = IntMatrix::from_i64(3, 3, &[big, big - 1, 7, big - 3, big, 5, 3, big - 11, big - 2]);
        check(&m);
    }

    proptest! {
        #[test]
        fn recomposes_exactly(rows in 0usize..5, cols in 0usize..5, seed in proptest::collection::vec(-30i64..30, 25)) {
            let m = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
            check(&m);
        }
    }
}
