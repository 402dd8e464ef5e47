//! Howell normal form of row spans over `Z/n`.
//!
//! All values are kept reduced in `[0, n)`; products go through `i128`, so
//! any modulus below `2^62` is handled exactly.

pub(crate) fn mulmod(a: i64, b: i64, n: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(n as i128)) as i64
}

pub(crate) fn addmod(a: i64, b: i64, n: i64) -> i64 {
    ((a as i128 + b as i128).rem_euclid(n as i128)) as i64
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended gcd: `(g, s, t)` with `s*a + t*b = g >= 0`.
pub(crate) fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

/// A unit `u` of `Z/n` with `u * a = gcd(a, n) (mod n)`.
pub(crate) fn normalizing_unit(a: i64, n: i64) -> i64 {
    if n == 1 {
        return 0;
    }
    let g = gcd(a, n);
    if g == 0 {
        return 1;
    }
    let (a1, n1) = (a / g, n / g);
    // inverse of a1 modulo n1, lifted to a unit modulo n
    let inv = if n1 == 1 { 0 } else { xgcd(a1.rem_euclid(n1), n1).1.rem_euclid(n1) };
    let mut u = inv;
    while gcd(u, n) != 1 {
        u += n1;
    }
    u.rem_euclid(n)
}

fn scale_row(row: &mut [i64], c: i64, n: i64) {
    for x in row.iter_mut() {
        *x = mulmod(*x, c, n);
    }
}

/// `dst += c * src`
fn axpy(dst: &mut [i64], c: i64, src: &[i64], n: i64) {
    if c == 0 {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if *s != 0 {
            *d = addmod(*d, mulmod(c, *s, n), n);
        }
    }
}

/// Pivot column of a row: first nonzero entry.
pub(crate) fn pivot(row: &[i64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Howell normal form of the `Z/n`-span of `rows` (each of length `width`).
///
/// Output rows are in echelon order, each pivot is a divisor of `n`, entries
/// above a pivot lie in `[0, pivot)`, and for every `c` the rows with pivot
/// column `>= c` span all of the span's vectors vanishing on columns `< c`.
pub fn howell_form(rows: Vec<Vec<i64>>, width: usize, n: i64) -> Vec<Vec<i64>> {
    assert!(n >= 1, "modulus must be positive");
    let mut pool: Vec<Vec<i64>> = rows
        .into_iter()
        .map(|r| {
            debug_assert_eq!(r.len(), width);
            r.into_iter().map(|x| x.rem_euclid(n)).collect::<Vec<_>>()
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut out: Vec<Vec<i64>> = Vec::new();
    for c in 0..width {
        if pool.is_empty() {
            break;
        }
        let mut piv: Option<Vec<i64>> = None;
        let mut rest: Vec<Vec<i64>> = Vec::with_capacity(pool.len());
        for mut r in pool.drain(..) {
            if r[c] == 0 {
                rest.push(r);
                continue;
            }
            match piv.as_mut() {
                None => piv = Some(r),
                Some(p) => {
                    let (a, b) = (p[c], r[c]);
                    let (g, s, t) = xgcd(a, b);
                    // [p; r] <- [s p + t r; (b/g) p - (a/g) r], a unimodular step
                    let (bg, ag) = ((b / g).rem_euclid(n), (a / g).rem_euclid(n));
                    let mut np = p.clone();
                    scale_row(&mut np, s.rem_euclid(n), n);
                    axpy(&mut np, t.rem_euclid(n), &r, n);
                    let mut nr = p.clone();
                    scale_row(&mut nr, bg, n);
                    scale_row(&mut r, (n - ag) % n, n);
                    axpy(&mut nr, 1, &r, n);
                    *p = np;
                    if nr.iter().any(|&x| x != 0) {
                        rest.push(nr);
                    }
                }
            }
        }
        if let Some(mut p) = piv {
            let u = normalizing_unit(p[c], n);
            scale_row(&mut p, u, n);
            let d = p[c];
            // annihilator of the pivot keeps the Howell property
            let mut ann = p.clone();
            scale_row(&mut ann, n / d, n);
            if ann.iter().any(|&x| x != 0) {
                rest.push(ann);
            }
            out.push(p);
        }
        pool = rest;
    }
    debug_assert!(pool.iter().all(|r| r.iter().all(|&x| x == 0)));
    // reduce entries above each pivot
    for i in 0..out.len() {
        let pc = pivot(&out[i]).expect("nonzero pivot row");
        let d = out[i][pc];
        let (upper, lower) = out.split_at_mut(i);
        for row in upper.iter_mut() {
            let q = row[pc] / d;
            if q != 0 {
                axpy(row, (n - q % n) % n, &lower[0], n);
            }
        }
    }
    out
}

/// Reduces `v` by a Howell basis: returns the residue after clearing every
/// pivot column as far as possible. `v` lies in the span iff the residue is
/// zero; in any case the residue is the lexicographically least element of
/// `v + span`.
pub(crate) fn reduce(basis: &[Vec<i64>], v: &mut [i64], n: i64) -> Vec<i64> {
    let mut coeffs = Vec::with_capacity(basis.len());
    for row in basis {
        let pc = pivot(row).expect("nonzero basis row");
        let d = row[pc];
        let q = v[pc] / d;
        coeffs.push(q);
        if q != 0 {
            axpy(v, (n - q % n) % n, row, n);
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[Vec<i64>], width: usize, n: i64) -> std::collections::BTreeSet<Vec<i64>> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(vec![0; width]);
        loop {
            let before = set.len();
            let cur: Vec<_> = set.iter().cloned().collect();
            for v in &cur {
                for r in rows {
                    let w: Vec<i64> = v.iter().zip(r).map(|(a, b)| (a + b).rem_euclid(n)).collect();
                    set.insert(w);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn unit_normalization() {
        for n in 1..40 {
            for a in 0..n {
                let u = normalizing_unit(a, n);
                assert_eq!(gcd(u, n), if n == 1 { n } else { 1 });
                assert_eq!(mulmod(u, a, n), gcd(a, n) % n);
            }
        }
    }

    #[test]
    fn howell_span_matches_enumeration() {
        let cases: Vec<(Vec<Vec<i64>>, usize, i64)> = vec![
            (vec![vec![2, 1], vec![2, 0]], 2, 4),
            (vec![vec![4, 2, 1]], 3, 8),
            (vec![vec![3, 6], vec![6, 3]], 2, 9),
            (vec![vec![2, 3, 0], vec![0, 4, 2], vec![1, 1, 1]], 3, 6),
        ];
        for (rows, width, n) in cases {
            let h = howell_form(rows.clone(), width, n);
            assert_eq!(span(&h, width, n), span(&rows, width, n));
            let card: i64 = h.iter().map(|r| n / r[pivot(r).unwrap()]).product();
            assert_eq!(card as usize, span(&rows, width, n).len());
        }
    }
}
