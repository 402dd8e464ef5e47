//! Smith and Howell forms against brute-force enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{SuiteConfig, SuiteReport, Tally};
use crate::error::Result;
use crate::exactlin::{gcd, howell_form, invariant_factors_by_minors, smith_normal_form, IntMatrix, Matrix};

/// Matrices checked: every matrix with at most four entries in `[-4, 4]`,
/// every 2x3 and 3x2 matrix over `[-2, 2]`, every 3x3 matrix over
/// `[-1, 1]`, and a fixed stride through the 3x3 matrices over `[-4, 4]`.
pub(crate) fn families() -> Vec<(usize, usize, Vec<i64>)> {
    let mut out = Vec::new();
    let all = |r: usize, c: usize, lo: i64, hi: i64, out: &mut Vec<(usize, usize, Vec<i64>)>| {
        let base = (hi - lo + 1) as u64;
        let total = base.pow((r * c) as u32);
        for idx in 0..total {
            out.push((r, c, digits(idx, base, r * c, lo)));
        }
    };
    for (r, c) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)] {
        all(r, c, -4, 4, &mut out);
    }
    all(2, 3, -2, 2, &mut out);
    all(3, 2, -2, 2, &mut out);
    all(3, 3, -1, 1, &mut out);
    let total = 9u64.pow(9);
    let stride = 129_061u64; // prime, coprime to 9
    let mut idx = 7u64;
    for _ in 0..3000 {
        out.push((3, 3, digits(idx, 9, 9, -4)));
        idx = (idx + stride) % total;
    }
    out
}

fn digits(mut idx: u64, base: u64, len: usize, lo: i64) -> Vec<i64> {
    let mut v = vec![0i64; len];
    for slot in v.iter_mut().rev() {
        *slot = (idx % base) as i64 + lo;
        idx /= base;
    }
    v
}

/// Every combination of `rows` over `Z/n`, by closure under addition.
fn span(rows: &[Vec<i64>], width: usize, n: i64) -> BTreeSet<Vec<i64>> {
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    set.insert(vec![0; width]);
    let mut frontier = vec![vec![0; width]];
    while let Some(v) = frontier.pop() {
        for r in rows {
            let w: Vec<i64> = v.iter().zip(r).map(|(a, b)| (a + b).rem_euclid(n)).collect();
            if set.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    set
}

/// Structural checks of a Howell form against the enumerated span.
fn howell_ok(h: &[Vec<i64>], target: &BTreeSet<Vec<i64>>, width: usize, n: i64) -> bool {
    let pivots: Vec<usize> = match h.iter().map(|r| r.iter().position(|&x| x != 0)).collect::<Option<Vec<_>>>() {
        Some(p) => p,
        None => return false,
    };
    if pivots.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    for (i, &p) in pivots.iter().enumerate() {
        let d = h[i][p];
        if n % d != 0 || h[i].iter().any(|&x| x < 0 || x >= n) {
            return false;
        }
        if (0..i).any(|k| h[k][p] >= d) {
            return false;
        }
    }
    if span(h, width, n) != *target {
        return false;
    }
    // the Howell property: each tail of rows spans the span's vectors
    // vanishing before its first pivot column
    for c in 0..=width {
        let tail: Vec<Vec<i64>> = h.iter().zip(&pivots).filter(|(_, &p)| p >= c).map(|(r, _)| r.clone()).collect();
        let want: BTreeSet<Vec<i64>> = target.iter().filter(|v| v[..c].iter().all(|&x| x == 0)).cloned().collect();
        if span(&tail, width, n) != want {
            return false;
        }
    }
    true
}

fn smith_ok(m: &IntMatrix) -> bool {
    let s = smith_normal_form(m);
    if s.u.mul(m).mul(&s.v) != s.d {
        return false;
    }
    if s.u.mul(&s.u_inv) != IntMatrix::identity(m.rows()) {
        return false;
    }
    if !s.v.determinant().abs().is_one() {
        return false;
    }
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && !s.d.at(i, j).is_zero() {
                return false;
            }
        }
    }
    let diag = s.diagonal();
    if diag.iter().any(|x| x.is_negative()) {
        return false;
    }
    if diag.windows(2).any(|w| !(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()))) {
        return false;
    }
    diag == invariant_factors_by_minors(m)
}

pub(super) fn linear_algebra(_cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut t = Tally::new("linear-algebra", &[], None);
    t.note("entries in [-4,4] with at most four entries; 2x3 and 3x2 over [-2,2]; 3x3 over [-1,1] plus 3000 strided 3x3 over [-4,4]; moduli 2..8");
    for (r, c, data) in families() {
        let m = Matrix::from_i64(r, c, &data);
        let ok = smith_ok(&m);
        t.count("smith", 1);
        t.check(ok, || format!("smith form of {r}x{c} {data:?}"));
        let diag = smith_normal_form(&m).diagonal();
        let rows: Vec<Vec<i64>> = data.chunks(c).map(|x| x.to_vec()).collect();
        for n in 2..=8i64 {
            let reduced: Vec<Vec<i64>> = rows.iter().map(|x| x.iter().map(|v| v.rem_euclid(n)).collect()).collect();
            let sp = span(&reduced, c, n);
            let predicted: u64 = diag
                .iter()
                .map(|d| {
                    let d = (d % BigInt::from(n)).to_i64().expect("small");
                    (n / gcd(d, n)) as u64
                })
                .product();
            t.count("span-size", 1);
            t.check(sp.len() as u64 == predicted, || format!("span size mod {n} of {r}x{c} {data:?}"));
            let h = howell_form(reduced.clone(), c, n);
            t.count("howell", 1);
            t.check(howell_ok(&h, &sp, c, n), || format!("howell form mod {n} of {r}x{c} {data:?}"));
            let mut rev = reduced.clone();
            rev.reverse();
            rev.push(reduced.iter().fold(vec![0; c], |acc, x| acc.iter().zip(x).map(|(a, b)| (a + b) % n).collect()));
            t.count("howell-canonical", 1);
            t.check(howell_form(rev, c, n) == h, || format!("howell form depends on generators mod {n}: {data:?}"));
        }
    }
    Ok(t.finish())
}
