//! Arithmetic in `F[x]/(m)` for a squarefree modulus `m`, and points whose
//! coordinates live there. Such a point stands for every root of `m` at once:
//! a polynomial identity reduced to zero modulo `m` holds at each of them.
//!
//! Because `m` need not be irreducible the ring may have zero divisors. The
//! gcd routines split the modulus whenever a leading coefficient turns out to
//! be a zero divisor, so each returned branch is a ring in which all the
//! needed inversions succeed.

use super::field::Field;
use super::mpoly::MPoly;
use super::upoly::UPoly;

/// Outcome of trying to invert an element.
pub enum Inversion<F: Field> {
    Unit(UPoly<F>),
    /// Nontrivial common factor with the modulus.
    ZeroDivisor(UPoly<F>),
    Zero,
}

pub fn reduce<F: Field>(a: &UPoly<F>, m: &UPoly<F>) -> UPoly<F> {
    a.rem(m)
}

pub fn mul_mod<F: Field>(a: &UPoly<F>, b: &UPoly<F>, m: &UPoly<F>) -> UPoly<F> {
    a.mul(b).rem(m)
}

pub fn invert<F: Field>(a: &UPoly<F>, m: &UPoly<F>) -> Inversion<F> {
    let a = a.rem(m);
    if a.is_zero() {
        return Inversion::Zero;
    }
    let (g, s, _) = a.ext_gcd(m);
    if g.deg0() == 0 {
        Inversion::Unit(s.rem(m))
    } else if g.deg0() == m.deg0() {
        Inversion::Zero
    } else {
        Inversion::ZeroDivisor(g)
    }
}

/// Split `m` into the part where `a` vanishes and the part where it is a unit.
pub fn split_on<F: Field>(a: &UPoly<F>, m: &UPoly<F>) -> (Option<UPoly<F>>, Option<UPoly<F>>) {
    let g = a.rem(m).gcd(m);
    if g.is_zero() || g.deg0() == m.deg0() {
        return (Some(m.monic()), None);
    }
    if g.deg0() == 0 {
        return (None, Some(m.monic()));
    }
    (Some(g.clone()), Some(m.divrem(&g).0.monic()))
}

pub fn pow_mod<F: Field>(a: &UPoly<F>, k: i64, m: &UPoly<F>) -> Option<UPoly<F>> {
    let base = if k < 0 {
        match invert(a, m) {
            Inversion::Unit(inv) => inv,
            _ => return None,
        }
    } else {
        a.rem(m)
    };
    let mut acc = UPoly::one().rem(m);
    for _ in 0..k.unsigned_abs() {
        acc = mul_mod(&acc, &base, m);
    }
    Some(acc)
}

/// Point with coordinates in `F[x]/(modulus)`.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraicPoint<F: Field> {
    pub modulus: UPoly<F>,
    pub coords: Vec<UPoly<F>>,
}

impl<F: Field> AlgebraicPoint<F> {
    /// A point with coordinates in the base field.
    pub fn rational(coords: Vec<F>) -> Self {
        Self {
            modulus: UPoly::x(),
            coords: coords.into_iter().map(UPoly::constant).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Every coordinate is a unit, so the point lies in the torus at every root.
    pub fn in_torus(&self) -> bool {
        self.coords
            .iter()
            .all(|c| matches!(invert(c, &self.modulus), Inversion::Unit(_)))
    }

    /// Residue of a Laurent polynomial at the point; `None` if a negative
    /// power of a non-unit coordinate is required.
    pub fn eval(&self, p: &MPoly<F>) -> Option<UPoly<F>> {
        let m = &self.modulus;
        let mut acc = UPoly::zero();
        for (e, c) in p.terms() {
            let mut term = UPoly::constant(c.clone()).rem(m);
            for (x, &k) in self.coords.iter().zip(e) {
                term = mul_mod(&term, &pow_mod(x, k, m)?, m);
            }
            acc = acc.add(&term);
        }
        Some(acc.rem(m))
    }

    pub fn vanishes(&self, p: &MPoly<F>) -> bool {
        self.eval(p).is_some_and(|r| r.is_zero())
    }

    /// Coordinates as plain field elements when the modulus is linear.
    pub fn as_rational(&self) -> Option<Vec<F>> {
        if self.modulus.deg0() != 1 {
            return None;
        }
        Some(self.coords.iter().map(|c| c.rem(&self.modulus).coeff(0)).collect())
    }

    /// Same point after restricting to a factor of the modulus.
    pub fn restrict(&self, factor: &UPoly<F>) -> Self {
        Self {
            modulus: factor.monic(),
            coords: self.coords.iter().map(|c| c.rem(factor)).collect(),
        }
    }
}

/// Polynomial in `y` with coefficients in `F[x]/(m)`.
pub type ExtPoly<F> = Vec<UPoly<F>>;

fn trim<F: Field>(p: &mut ExtPoly<F>, m: &UPoly<F>) {
    for c in p.iter_mut() {
        *c = c.rem(m);
    }
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn reduce_all<F: Field>(p: &ExtPoly<F>, m: &UPoly<F>) -> ExtPoly<F> {
    let mut q = p.clone();
    trim(&mut q, m);
    q
}

/// Make `p` monic, splitting the modulus where its leading coefficient is a
/// zero divisor. Returns branches `(modulus, monic poly)`; the poly may be
/// empty (zero) on a branch.
pub fn monic_split<F: Field>(m: &UPoly<F>, p: &ExtPoly<F>) -> Vec<(UPoly<F>, ExtPoly<F>)> {
    let p = reduce_all(p, m);
    let Some(lc) = p.last() else {
        return vec![(m.clone(), p)];
    };
    match invert(lc, m) {
        Inversion::Unit(inv) => {
            let q = p.iter().map(|c| mul_mod(c, &inv, m)).collect();
            vec![(m.clone(), q)]
        }
        Inversion::Zero => unreachable!("trimmed leading coefficient is nonzero"),
        Inversion::ZeroDivisor(g) => {
            let h = m.divrem(&g).0.monic();
            let mut out = monic_split(&g, &p);
            out.extend(monic_split(&h, &p));
            out
        }
    }
}

/// gcd of two polynomials over `F[x]/(m)` with modulus splitting.
pub fn gcd_split<F: Field>(m: &UPoly<F>, a: &ExtPoly<F>, b: &ExtPoly<F>) -> Vec<(UPoly<F>, ExtPoly<F>)> {
    let a = reduce_all(a, m);
    let b = reduce_all(b, m);
    if b.is_empty() {
        return monic_split(m, &a);
    }
    let lc = b.last().unwrap().clone();
    match invert(&lc, m) {
        Inversion::Unit(inv) => {
            // a mod b
            let mut r = a.clone();
            let db = b.len() - 1;
            while r.len() > db {
                let k = r.len() - 1;
                let c = mul_mod(&r[k], &inv, m);
                for (j, bc) in b.iter().enumerate() {
                    let idx = k - db + j;
                    r[idx] = r[idx].sub(&mul_mod(&c, bc, m)).rem(m);
                }
                trim(&mut r, m);
                if r.len() > k {
                    // leading term did not cancel; cannot happen with a unit lc
                    unreachable!("leading coefficient failed to cancel");
                }
            }
            gcd_split(m, &b, &r)
        }
        Inversion::Zero => unreachable!("trimmed leading coefficient is nonzero"),
        Inversion::ZeroDivisor(g) => {
            let h = m.divrem(&g).0.monic();
            let mut out = gcd_split(&g, &a, &b);
            out.extend(gcd_split(&h, &a, &b));
            out
        }
    }
}

/// gcd of several polynomials, branching over modulus splits.
pub fn gcd_many_split<F: Field>(m: &UPoly<F>, polys: &[ExtPoly<F>]) -> Vec<(UPoly<F>, ExtPoly<F>)> {
    let mut branches = vec![(m.clone(), Vec::new())];
    for p in polys {
        let mut next = Vec::new();
        for (mk, g) in branches {
            next.extend(gcd_split(&mk, &g, p));
        }
        branches = next;
    }
    branches
}

/// Remove factors of `y` from a monic polynomial over `F[x]/(m)`, splitting
/// where the constant coefficient is a zero divisor.
pub fn strip_y_split<F: Field>(m: &UPoly<F>, p: &ExtPoly<F>) -> Vec<(UPoly<F>, ExtPoly<F>)> {
    let p = reduce_all(p, m);
    if p.is_empty() {
        return vec![(m.clone(), p)];
    }
    match split_on(&p[0], m) {
        (Some(zero_part), None) => strip_y_split(&zero_part, &p[1..].to_vec()),
        (None, Some(unit_part)) => vec![(unit_part, p)],
        (Some(zero_part), Some(unit_part)) => {
            let mut out = strip_y_split(&zero_part, &p[1..].to_vec());
            out.push((unit_part.clone(), reduce_all(&p, &unit_part)));
            out
        }
        (None, None) => unreachable!(),
    }
}
