use std::collections::BTreeMap;

use super::field::Field;
use super::upoly::{format_term, join_terms};

/// Exponent vector of a Laurent monomial.
pub type Exponent = Vec<i64>;

/// Sparse multivariate Laurent polynomial with exact coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn monomial(nvars: usize, e: Exponent, c: F) -> Self {
        Self::from_terms(nvars, [(e, c)])
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable with index `k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(nvars, e, F::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, e: &[i64]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, e: Exponent, c: F) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map_coeffs(|c| c.clone() * k.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, F::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        MPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Partial derivative with respect to variable `k`.
    pub fn derivative(&self, k: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.add_term(e2, c.clone() * F::from_i64(e[k]));
        }
        out
    }

    /// `x_k * d/dx_k`, which keeps the support.
    pub fn log_derivative(&self, k: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * F::from_i64(e[k]));
        }
        out
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())),
        )
    }

    /// Divide out the largest monomial so that every exponent is nonnegative
    /// and each variable has a term of exponent zero.
    pub fn normalize_monomial_factor(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mins: Vec<i64> = (0..self.nvars)
            .map(|k| self.terms.keys().map(|e| e[k]).min().unwrap())
            .collect();
        let neg: Vec<i64> = mins.iter().map(|m| -m).collect();
        self.shift(&neg)
    }

    /// Evaluate at a point of the field (all exponents must be realisable,
    /// i.e. coordinates with negative exponents must be nonzero).
    pub fn eval(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                m = m * field_pow(x, k);
            }
            acc = acc + m;
        }
        acc
    }

    /// Substitute `x_k = value` and drop the variable.
    pub fn substitute(&self, k: usize, value: &F) -> Self {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let p = e2.remove(k);
            out.add_term(e2, c.clone() * field_pow(value, p));
        }
        out
    }

    /// Degree in variable `k` (for polynomials with nonnegative exponents).
    pub fn degree_in(&self, k: usize) -> i64 {
        self.terms.keys().map(|e| e[k]).max().unwrap_or(0)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(v, &k)| if k == 1 { names[v].clone() } else { format!("{}^{}", names[v], k) })
                    .collect();
                format_term(c, &mono.join("*"))
            })
            .collect();
        join_terms(&terms)
    }
}

/// `x^k` for integer `k`; negative powers invert.
pub fn field_pow<F: Field>(x: &F, k: i64) -> F {
    let mut acc = F::one();
    let base = if k < 0 { x.inv() } else { x.clone() };
    for _ in 0..k.unsigned_abs() {
        acc = acc * base.clone();
    }
    acc
}

/// Standard variable names `prefix1, prefix2, ...`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}
