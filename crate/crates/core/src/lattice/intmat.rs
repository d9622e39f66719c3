//! Integer and rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntVec = Vec<i64>;
pub type BigVec = Vec<BigInt>;

pub fn to_big(v: &[i64]) -> BigVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Panics if an entry does not fit; cone data in this crate stays small.
pub fn to_small(v: &[BigInt]) -> IntVec {
    v.iter()
        .map(|x| x.to_i64().expect("integer vector entry overflows i64"))
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Divide by the gcd of the entries. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> IntVec {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn primitive_big(v: &[BigInt]) -> BigVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        v.to_vec()
    } else {
        v.iter().map(|x| x / &g).collect()
    }
}

/// Scale a rational vector to the primitive integer vector on the same ray.
pub fn primitive_from_rational(v: &[BigRational]) -> BigVec {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: BigVec = v.iter().map(|x| (x * BigRational::from(l.clone())).to_integer()).collect();
    primitive_big(&ints)
}

/// Result of integer row reduction `V * M = H`.
pub struct Echelon {
    pub h: Vec<BigVec>,
    pub v: Vec<BigVec>,
    pub v_inv: Vec<BigVec>,
    pub rank: usize,
}

fn identity(m: usize) -> Vec<BigVec> {
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Row echelon form over the integers with a unimodular transform and its
/// inverse. Pivots are positive and entries above a pivot are reduced into
/// `[0, pivot)`, so `h` is the Hermite normal form of `m`.
pub fn echelon(m: &[BigVec], ncols: usize) -> Echelon {
    let nrows = m.len();
    let mut h: Vec<BigVec> = m.to_vec();
    let mut v = identity(nrows);
    let mut v_inv = identity(nrows);

    fn swap(h: &mut [BigVec], v: &mut [BigVec], v_inv: &mut [BigVec], i: usize, j: usize) {
        if i == j {
            return;
        }
        h.swap(i, j);
        v.swap(i, j);
        for row in v_inv.iter_mut() {
            row.swap(i, j);
        }
    }
    // row_i -= q * row_j
    fn sub_row(h: &mut [BigVec], v: &mut [BigVec], v_inv: &mut [BigVec], i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (hj, vj) = (h[j].clone(), v[j].clone());
        for (a, b) in h[i].iter_mut().zip(&hj) {
            *a -= q * b;
        }
        for (a, b) in v[i].iter_mut().zip(&vj) {
            *a -= q * b;
        }
        for row in v_inv.iter_mut() {
            let t = &row[i] * q;
            row[j] += t;
        }
    }
    fn negate(h: &mut [BigVec], v: &mut [BigVec], v_inv: &mut [BigVec], i: usize) {
        for a in h[i].iter_mut() {
            *a = -a.clone();
        }
        for a in v[i].iter_mut() {
            *a = -a.clone();
        }
        for row in v_inv.iter_mut() {
            row[i] = -row[i].clone();
        }
    }

    let mut p = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if p == nrows {
            break;
        }
        loop {
            let best = (p..nrows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()));
            let Some(best) = best else { break };
            swap(&mut h, &mut v, &mut v_inv, p, best);
            let mut done = true;
            for i in p + 1..nrows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[p][c]);
                sub_row(&mut h, &mut v, &mut v_inv, i, p, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(p).is_some_and(|row| !row[c].is_zero()) {
            if h[p][c].is_negative() {
                negate(&mut h, &mut v, &mut v_inv, p);
            }
            for i in 0..p {
                let q = h[i][c].div_floor(&h[p][c]);
                sub_row(&mut h, &mut v, &mut v_inv, i, p, &q);
            }
            pivots.push(c);
            p += 1;
        }
    }
    Echelon { h, v, v_inv, rank: p }
}

pub fn rank(rows: &[IntVec], ncols: usize) -> usize {
    let m: Vec<BigVec> = rows.iter().map(|r| to_big(r)).collect();
    echelon(&m, ncols).rank
}

pub fn rank_big(rows: &[BigVec], ncols: usize) -> usize {
    echelon(rows, ncols).rank
}

/// Saturated integer kernel of the map `x -> (<a, x>)_a` for the given rows.
///
/// Returns `(basis, dual)` where `basis` spans `{x in Z^n : <a,x> = 0 for all a}`
/// and `dual` satisfies `<dual[i], basis[j]> = delta_ij`.
pub fn integer_kernel(rows: &[BigVec], n: usize) -> (Vec<BigVec>, Vec<BigVec>) {
    // columns of the transpose are the constraint rows
    let mt: Vec<BigVec> = (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    let e = echelon(&mt, rows.len());
    let basis: Vec<BigVec> = e.v[e.rank..].to_vec();
    let dual: Vec<BigVec> = (e.rank..n)
        .map(|k| (0..n).map(|i| e.v_inv[i][k].clone()).collect())
        .collect();
    (basis, dual)
}

/// Basis of the saturation `span_Q(rows) ∩ Z^n`, together with dual vectors
/// `dual[i]` satisfying `<dual[i], basis[j]> = delta_ij`.
pub fn saturated_span(rows: &[BigVec], n: usize) -> (Vec<BigVec>, Vec<BigVec>) {
    let (perp, _) = integer_kernel(rows, n);
    integer_kernel(&perp, n)
}

/// Canonical basis of the rational span: Hermite form of its saturation.
pub fn canonical_subspace_basis(rows: &[BigVec], n: usize) -> Vec<BigVec> {
    let (basis, _) = saturated_span(rows, n);
    let e = echelon(&basis, n);
    e.h.into_iter().take(e.rank).collect()
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &piv;
            inv[c][j] = &inv[c][j] / &piv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
                let t = &f * &inv[c][j];
                inv[i][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Determinant of a square integer matrix (fraction-free elimination).
pub fn determinant(m: &[BigVec]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<BigVec> {
        rows.iter().map(|r| to_big(r)).collect()
    }

    #[test]
    fn kernel_is_saturated_with_dual() {
        // x + 2y + 3z = 0
        let (basis, dual) = integer_kernel(&big(&[&[1, 2, 3]]), 3);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(dot_big(b, &to_big(&[1, 2, 3])).is_zero());
        }
        for (i, d) in dual.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(dot_big(d, b), BigInt::from(expect));
            }
        }
    }

    #[test]
    fn saturation_recovers_primitive_direction() {
        let (basis, dual) = saturated_span(&big(&[&[2, 4]]), 2);
        assert_eq!(basis.len(), 1);
        assert_eq!(primitive_big(&basis[0]).iter().map(|x| x.abs()).collect::<Vec<_>>(), to_big(&[1, 2]));
        assert_eq!(dot_big(&dual[0], &basis[0]), BigInt::one());
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(determinant(&big(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(determinant(&big(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])), BigInt::from(-1));
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]], 2), 1);
    }
}
