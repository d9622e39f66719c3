//! Double description: generators of `{x : <a_j, x> >= 0}` from inequalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::intmat::{canonical_subspace_basis, dot_big, primitive_big, primitive_from_rational, BigVec};

/// Generators of a polyhedral cone: a lineality basis plus rays that are
/// extreme modulo the lineality space.
#[derive(Clone, Debug, Default)]
pub struct Generators {
    pub lineality: Vec<BigVec>,
    pub rays: Vec<BigVec>,
}

#[derive(Clone)]
struct Ray {
    v: BigVec,
    tight: Vec<u64>,
}

fn set_bit(bits: &mut [u64], k: usize) {
    bits[k / 64] |= 1 << (k % 64);
}

fn is_superset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == *y)
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Double description over the integers. Every intermediate vector is kept
/// primitive so entries stay small.
pub fn generators_of(n: usize, ineqs: &[BigVec]) -> Generators {
    let words = ineqs.len().div_ceil(64).max(1);
    let mut lineality: Vec<BigVec> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed = vec![0u64; words];

    for (j, a) in ineqs.iter().enumerate() {
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Some(k) = lineality.iter().position(|l| !dot_big(a, l).is_zero()) {
            let mut l0 = lineality.remove(k);
            let mut c = dot_big(a, &l0);
            if c.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                c = -c;
            }
            for l in lineality.iter_mut() {
                let s = dot_big(a, l);
                *l = primitive_big(&l.iter().zip(&l0).map(|(x, y)| &c * x - &s * y).collect::<Vec<_>>());
            }
            for r in rays.iter_mut() {
                let s = dot_big(a, &r.v);
                r.v = primitive_big(&r.v.iter().zip(&l0).map(|(x, y)| &c * x - &s * y).collect::<Vec<_>>());
                set_bit(&mut r.tight, j);
            }
            rays.push(Ray { v: primitive_big(&l0), tight: processed.clone() });
            set_bit(&mut processed, j);
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot_big(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            let mut r = r.clone();
            if vals[i].is_zero() {
                set_bit(&mut r.tight, j);
            }
            next.push(r);
        }
        for &p in &pos {
            for &q in &neg {
                let common = and(&rays[p].tight, &rays[q].tight);
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && is_superset(&r.tight, &common));
                if blocked {
                    continue;
                }
                let cp = &vals[p];
                let cq = -&vals[q];
                let v: BigVec = rays[p].v.iter().zip(&rays[q].v).map(|(x, y)| &cq * x + cp * y).collect();
                let mut tight = common;
                set_bit(&mut tight, j);
                next.push(Ray { v: primitive_big(&v), tight });
            }
        }
        rays = next;
        set_bit(&mut processed, j);
    }

    Generators { lineality, rays: rays.into_iter().map(|r| r.v).collect() }
}

/// Canonical form: Hermite basis of the lineality space and rays projected
/// onto its orthogonal complement, primitive, deduplicated and sorted.
pub fn canonicalize(n: usize, g: Generators) -> Generators {
    let lineality = canonical_subspace_basis(&g.lineality, n);
    let mut rays: Vec<BigVec> = if lineality.is_empty() {
        g.rays.iter().map(|r| primitive_big(r)).collect()
    } else {
        let ortho = gram_schmidt(&lineality);
        g.rays
            .iter()
            .map(|r| {
                let mut v: Vec<BigRational> = r.iter().map(|x| BigRational::from(x.clone())).collect();
                for u in &ortho {
                    let num: BigRational = v.iter().zip(u).map(|(a, b)| a * b).sum();
                    let den: BigRational = u.iter().map(|b| b * b).sum();
                    let f = num / den;
                    for (a, b) in v.iter_mut().zip(u) {
                        *a -= &f * b;
                    }
                }
                primitive_from_rational(&v)
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect()
    };
    rays.sort();
    rays.dedup();
    Generators { lineality, rays }
}

fn gram_schmidt(basis: &[BigVec]) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for b in basis {
        let mut v: Vec<BigRational> = b.iter().map(|x| BigRational::from(x.clone())).collect();
        for u in &out {
            let num: BigRational = v.iter().zip(u).map(|(a, c)| a * c).sum();
            let den: BigRational = u.iter().map(|c| c * c).sum();
            let f = num / den;
            for (a, c) in v.iter_mut().zip(u) {
                *a -= &f * c;
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::intmat::to_big;

    #[test]
    fn orthant_is_self_generated() {
        let ineqs: Vec<BigVec> = vec![to_big(&[1, 0, 0]), to_big(&[0, 1, 0]), to_big(&[0, 0, 1])];
        let g = canonicalize(3, generators_of(3, &ineqs));
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays, vec![to_big(&[0, 0, 1]), to_big(&[0, 1, 0]), to_big(&[1, 0, 0])]);
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let g = canonicalize(2, generators_of(2, &[to_big(&[1, 0])]));
        assert_eq!(g.lineality, vec![to_big(&[0, 1])]);
        assert_eq!(g.rays, vec![to_big(&[1, 0])]);
    }

    #[test]
    fn planar_dual() {
        // dual of cone((0,1),(2,-1)) is cone((1,0),(1,2))
        let g = canonicalize(2, generators_of(2, &[to_big(&[0, 1]), to_big(&[2, -1])]));
        assert_eq!(g.rays, vec![to_big(&[1, 0]), to_big(&[1, 2])]);
    }
}
