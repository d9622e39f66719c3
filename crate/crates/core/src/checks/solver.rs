//! Exact solvability of Laurent polynomial systems in the algebraic torus.
//!
//! Exponents of each equation are rewritten in a basis of the saturated
//! lattice spanned by their differences. After this unimodular change of
//! coordinates the system lives in `k` variables. For `k <= 2` the question
//! is decided by gcds and resultants; larger systems are sliced at random
//! points and can only produce witnesses.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::algebraic::{gcd_many_split, gcd_split, pow_mod, strip_y_split, ExtPoly};
use crate::arith::{AlgebraicPoint, Field, GaussianRational, MPoly, RatFunc, UPoly};
use crate::lattice::intmat::{dot_big, saturated_span, to_big, BigVec};

/// Outcome of a torus solve.
#[derive(Clone, Debug)]
pub enum Solve<F: Field> {
    /// No common zero in the torus; the string says why.
    NoSolution(String),
    /// A common zero, valid at every root of the point's modulus.
    Solution { point: AlgebraicPoint<F>, searched: bool, trace: String },
    Unknown(String),
}

/// Dimension of the lattice spanned by exponent differences within each equation.
pub fn reduced_dimension<F: Field>(eqs: &[MPoly<F>]) -> usize {
    let n = eqs.first().map_or(0, |e| e.nvars());
    let diffs = differences(eqs);
    saturated_span(&diffs, n).0.len()
}

fn differences<F: Field>(eqs: &[MPoly<F>]) -> Vec<BigVec> {
    let mut diffs = Vec::new();
    for e in eqs {
        let mut it = e.support();
        let Some(base) = it.next() else { continue };
        for a in it {
            let d: Vec<i64> = a.iter().zip(base).map(|(x, y)| x - y).collect();
            diffs.push(to_big(&d));
        }
    }
    diffs
}

fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("reduced exponent overflows i64")
}

pub fn solve_torus<F: Field>(eqs: &[MPoly<F>], rng: &mut ChaCha8Rng, budget: usize) -> Solve<F> {
    let n = eqs.first().map_or(0, |e| e.nvars());
    let eqs: Vec<MPoly<F>> = eqs.iter().filter(|e| !e.is_zero()).cloned().collect();
    if eqs.is_empty() {
        return Solve::Solution {
            point: AlgebraicPoint::rational(vec![F::one(); n]),
            searched: false,
            trace: "every equation vanishes identically".into(),
        };
    }
    if let Some(k) = eqs.iter().position(|e| e.is_monomial()) {
        return Solve::NoSolution(format!("equation {} is a single monomial", k + 1));
    }
    let (gamma, dual) = saturated_span(&differences(&eqs), n);
    let k = gamma.len();
    let reduced: Vec<MPoly<F>> = eqs
        .iter()
        .map(|e| {
            let base = to_big(e.support().next().unwrap());
            MPoly::from_terms(
                k,
                e.terms().iter().map(|(a, c)| {
                    let d: BigVec = to_big(a).iter().zip(&base).map(|(x, y)| x - y).collect();
                    ((0..k).map(|j| small(&dot_big(&dual[j], &d))).collect(), c.clone())
                }),
            )
            .normalize_monomial_factor()
        })
        .collect();

    let outcome = match k {
        1 => solve_line(&reduced),
        2 => solve_plane(&reduced, rng, budget),
        _ => solve_by_slicing(&reduced, k, rng, budget),
    };
    match outcome {
        Solve::Solution { point, searched, trace } => {
            let m = point.modulus.clone();
            let coords: Option<Vec<UPoly<F>>> = (0..n)
                .map(|i| {
                    let mut acc = UPoly::one();
                    for (y, kj) in point.coords.iter().zip(&dual) {
                        acc = acc.mul(&pow_mod(y, small(&kj[i]), &m)?).rem(&m);
                    }
                    Some(acc)
                })
                .collect();
            let Some(coords) = coords else {
                return Solve::Unknown("reduced solution has a non-invertible coordinate".into());
            };
            let lifted = AlgebraicPoint { modulus: m, coords };
            if lifted.in_torus() && eqs.iter().all(|e| lifted.vanishes(e)) {
                Solve::Solution { point: lifted, searched, trace: format!("reduced to {k} variables; {trace}") }
            } else {
                Solve::Unknown("candidate solution failed exact verification".into())
            }
        }
        Solve::NoSolution(why) => Solve::NoSolution(format!("reduced to {k} variables; {why}")),
        Solve::Unknown(why) => Solve::Unknown(format!("reduced to {k} variables; {why}")),
    }
}

fn to_upoly<F: Field>(p: &MPoly<F>) -> UPoly<F> {
    let deg = p.degree_in(0) as usize;
    let mut c = vec![F::zero(); deg + 1];
    for (e, v) in p.terms() {
        c[e[0] as usize] = v.clone();
    }
    UPoly::new(c)
}

fn solve_line<F: Field>(polys: &[MPoly<F>]) -> Solve<F> {
    let g = polys.iter().fold(UPoly::zero(), |g, p| g.gcd(&to_upoly(p)));
    let (g, _) = g.strip_x();
    if g.deg0() == 0 {
        return Solve::NoSolution("univariate gcd is constant".into());
    }
    let m = g.squarefree();
    Solve::Solution {
        point: AlgebraicPoint { modulus: m.clone(), coords: vec![UPoly::x()] },
        searched: false,
        trace: format!("univariate gcd of degree {}", m.deg0()),
    }
}

/// Dense bivariate polynomial: index is the power of `y2`, entries are
/// polynomials in `y1`.
type Bi<F> = Vec<UPoly<F>>;

fn to_bi<F: Field>(p: &MPoly<F>) -> Bi<F> {
    let deg = p.degree_in(1) as usize;
    let mut out = vec![UPoly::zero(); deg + 1];
    for (e, c) in p.terms() {
        let k = e[1] as usize;
        out[k] = out[k].add(&UPoly::monomial(c.clone(), e[0] as usize));
    }
    out
}

fn bi_to_rat<F: Field>(b: &Bi<F>) -> UPoly<RatFunc<F>> {
    UPoly::new(b.iter().map(|c| RatFunc::from_poly(c.clone())).collect())
}

fn rat_to_poly<F: Field>(r: &RatFunc<F>) -> Option<UPoly<F>> {
    if r.den().is_constant() {
        Some(r.num().scale(&r.den().lc().inv()))
    } else {
        None
    }
}

/// Clear denominators of a polynomial over `F(y1)`.
fn clear_denominators<F: Field>(g: &UPoly<RatFunc<F>>) -> Bi<F> {
    let mut l = UPoly::one();
    for c in g.coeffs() {
        let d = c.den();
        l = l.mul(d).divrem(&l.gcd(d)).0;
    }
    g.coeffs()
        .iter()
        .map(|c| c.num().mul(&l.divrem(c.den()).0))
        .collect()
}

fn small_values<F: Field>() -> impl Iterator<Item = F> {
    (1..).flat_map(|k: i64| [F::from_i64(k), F::from_i64(-k)])
}

fn random_small<F: Field>(rng: &mut ChaCha8Rng) -> F {
    let v: i64 = rng.gen_range(1..=7);
    if rng.gen_bool(0.5) {
        F::from_i64(v)
    } else {
        F::from_i64(-v)
    }
}

fn solve_plane<F: Field>(polys: &[MPoly<F>], rng: &mut ChaCha8Rng, budget: usize) -> Solve<F> {
    let bis: Vec<Bi<F>> = polys.iter().map(to_bi).collect();

    // common factor depending on y1 only
    let content = bis.iter().flatten().fold(UPoly::zero(), |g, c| g.gcd(c));
    let (content, _) = content.strip_x();
    if content.deg0() >= 1 {
        let m = content.squarefree();
        return Solve::Solution {
            point: AlgebraicPoint { modulus: m, coords: vec![UPoly::x(), UPoly::one()] },
            searched: false,
            trace: "common factor in the first variable".into(),
        };
    }

    // common factor of positive degree in y2: a curve of solutions
    let rats: Vec<UPoly<RatFunc<F>>> = bis.iter().map(bi_to_rat).collect();
    let g = rats.iter().fold(UPoly::zero(), |g, p| g.gcd(p));
    if g.deg0() >= 1 {
        let p = clear_denominators(&g);
        for c in small_values::<F>().take(budget.max(16)) {
            let spec = UPoly::new(p.iter().map(|co| co.eval(&c)).collect());
            let (s, _) = spec.strip_x();
            if s.deg0() >= 1 && !spec.is_zero() {
                let m = s.squarefree();
                return Solve::Solution {
                    point: AlgebraicPoint { modulus: m, coords: vec![UPoly::constant(c), UPoly::x()] },
                    searched: false,
                    trace: "common curve component, sampled on a vertical line".into(),
                };
            }
        }
        return Solve::Unknown("common curve component without a sample point".into());
    }

    // finitely many common zeros: eliminate y2
    let mut r = None;
    for attempt in 0..6 {
        let (a, b) = if bis.len() == 2 && attempt == 0 {
            (rats[0].clone(), rats[1].clone())
        } else {
            let mut a = UPoly::zero();
            let mut b = UPoly::zero();
            for p in &rats {
                a = a.add(&p.scale(&RatFunc::from_poly(UPoly::constant(random_small(rng)))));
                b = b.add(&p.scale(&RatFunc::from_poly(UPoly::constant(random_small(rng)))));
            }
            (a, b)
        };
        let res = a.resultant(&b);
        if !res.is_zero() {
            r = rat_to_poly(&res);
            break;
        }
    }
    let Some(r) = r else {
        return Solve::Unknown("resultants of random combinations vanish".into());
    };
    let (r, _) = r.strip_x();
    if r.deg0() == 0 {
        return Solve::NoSolution("resultant has no nonzero root".into());
    }
    let m = r.squarefree();
    let mut pending = false;
    for (mb, g) in gcd_many_split(&m, &bis) {
        if g.is_empty() {
            return Solve::Solution {
                point: AlgebraicPoint { modulus: mb, coords: vec![UPoly::x(), UPoly::one()] },
                searched: false,
                trace: "all equations vanish over a root of the resultant".into(),
            };
        }
        for (mb2, g2) in strip_y_split(&mb, &g) {
            match g2.len() {
                0 | 1 => {}
                2 => {
                    let y = g2[0].neg().rem(&mb2);
                    return Solve::Solution {
                        point: AlgebraicPoint { modulus: mb2, coords: vec![UPoly::x(), y] },
                        searched: false,
                        trace: format!("resultant of degree {}, linear gcd over its roots", r.deg0()),
                    };
                }
                _ => match tower_point(&mb2, &g2) {
                    Some(point) => {
                        return Solve::Solution {
                            point,
                            searched: false,
                            trace: "resultant with a primitive element for the second coordinate".into(),
                        }
                    }
                    None => pending = true,
                },
            }
        }
    }
    if pending {
        Solve::Unknown("common zeros exist but no primitive element was found".into())
    } else {
        Solve::NoSolution(format!("resultant of degree {} has no root with a common nonzero y2", r.deg0()))
    }
}

/// For `x` a root of `m` and `y` a root of `g(x, .)` (monic, degree >= 2),
/// express both through a primitive element `θ = y + c x`.
fn tower_point<F: Field>(m: &UPoly<F>, g: &ExtPoly<F>) -> Option<AlgebraicPoint<F>> {
    for c in small_values::<F>().take(12) {
        // h(X) = g(X, θ - cX), coefficients in F[θ], indexed by the power of X
        let mut h: Vec<UPoly<F>> = Vec::new();
        let lin_theta = UPoly::x(); // θ
        let mut power: Vec<UPoly<F>> = vec![UPoly::one()]; // (θ - cX)^j by powers of X
        for gj in g.iter() {
            for (xp, coeff_theta) in power.iter().enumerate() {
                for (gp, gc) in gj.coeffs().iter().enumerate() {
                    let idx = xp + gp;
                    if h.len() <= idx {
                        h.resize(idx + 1, UPoly::zero());
                    }
                    h[idx] = h[idx].add(&coeff_theta.scale(gc));
                }
            }
            // multiply power by (θ - cX)
            let mut next = vec![UPoly::zero(); power.len() + 1];
            for (xp, co) in power.iter().enumerate() {
                next[xp] = next[xp].add(&co.mul(&lin_theta));
                next[xp + 1] = next[xp + 1].sub(&co.scale(&c));
            }
            power = next;
        }
        while h.last().is_some_and(|p| p.is_zero()) {
            h.pop();
        }
        let m_rat: UPoly<RatFunc<F>> = UPoly::new(m.coeffs().iter().map(|a| RatFunc::from_poly(UPoly::constant(a.clone()))).collect());
        let h_rat = bi_to_rat(&h);
        let res = m_rat.resultant(&h_rat);
        let Some(big_m) = rat_to_poly(&res) else { continue };
        if big_m.deg0() == 0 {
            continue;
        }
        let big_m = big_m.squarefree();
        let m_ext: ExtPoly<F> = m.coeffs().iter().map(|a| UPoly::constant(a.clone())).collect();
        for (mb, gx) in gcd_split(&big_m, &m_ext, &h) {
            if gx.len() == 2 {
                let x = gx[0].neg().rem(&mb);
                let y = UPoly::x().sub(&x.scale(&c)).rem(&mb);
                let pt = AlgebraicPoint { modulus: mb, coords: vec![x, y] };
                return Some(pt);
            }
        }
    }
    None
}

fn solve_by_slicing<F: Field>(polys: &[MPoly<F>], k: usize, rng: &mut ChaCha8Rng, budget: usize) -> Solve<F> {
    for _ in 0..budget {
        let values: Vec<F> = (2..k).map(|_| F::from_gaussian(&random_gaussian(rng))).collect();
        let sliced: Vec<MPoly<F>> = polys
            .iter()
            .map(|p| {
                let mut q = p.clone();
                for v in values.iter().rev() {
                    q = q.substitute(q.nvars() - 1, v);
                }
                q.normalize_monomial_factor()
            })
            .filter(|q| !q.is_zero())
            .collect();
        if sliced.iter().any(|q| q.is_monomial()) {
            continue;
        }
        let sol = if sliced.is_empty() {
            Solve::Solution {
                point: AlgebraicPoint::rational(vec![F::one(), F::one()]),
                searched: true,
                trace: String::new(),
            }
        } else {
            solve_plane(&sliced, rng, budget)
        };
        if let Solve::Solution { mut point, .. } = sol {
            point.coords.extend(values.iter().map(|v| UPoly::constant(v.clone())));
            return Solve::Solution { point, searched: true, trace: "random slice of the reduced system".into() };
        }
    }
    Solve::Unknown(format!("{k}-dimensional reduced system; {budget} random slices found no zero"))
}

/// Nonzero Gaussian rational of small height.
pub fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let re: i64 = rng.gen_range(-3..=3);
        let im: i64 = if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 };
        let den: i64 = rng.gen_range(1..=3);
        let g = GaussianRational::from_parts((re, den), (im, den));
        if !g.is_zero() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::GaussianRational as G;
    use rand::SeedableRng;

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> MPoly<G> {
        MPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), G::from_i64(*c))))
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn binomial_pair_without_common_root() {
        // x^2 y - x y^3 and its partials; reduced to one variable, gcd trivial
        let l = poly(2, &[(&[2, 1], 1), (&[1, 3], -1)]);
        let eqs = vec![l.clone(), l.log_derivative(0), l.log_derivative(1)];
        assert!(matches!(solve_torus(&eqs, &mut rng(), 8), Solve::NoSolution(_)));
    }

    #[test]
    fn conic_and_line() {
        // x^2 + y^2 - 2 = 0, x - y = 0 -> (1,1) and (-1,-1)
        let a = poly(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -2)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        match solve_torus(&[a.clone(), b.clone()], &mut rng(), 8) {
            Solve::Solution { point, .. } => {
                assert!(point.vanishes(&a) && point.vanishes(&b));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_circles_needing_a_primitive_element() {
        // x^2 + y^2 = 3, x^2 - y^2 = 1: x^2 = 2, y^2 = 1, four points
        let a = poly(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -3)]);
        let b = poly(2, &[(&[2, 0], 1), (&[0, 2], -1), (&[0, 0], -1)]);
        match solve_torus(&[a.clone(), b.clone()], &mut rng(), 8) {
            Solve::Solution { point, .. } => assert!(point.vanishes(&a) && point.vanishes(&b)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inconsistent_plane_system() {
        // x + y - 1, x + y - 2
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -2)]);
        assert!(matches!(solve_torus(&[a, b], &mut rng(), 8), Solve::NoSolution(_)));
    }

    #[test]
    fn solutions_on_axes_do_not_count() {
        // x*y - x = x (y - 1) and x + y - 1: torus solutions need y = 1, x = 0
        let a = poly(2, &[(&[1, 1], 1), (&[1, 0], -1)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        assert!(matches!(solve_torus(&[a, b], &mut rng(), 8), Solve::NoSolution(_)));
    }
}
