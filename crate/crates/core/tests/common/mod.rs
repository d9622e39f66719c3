#![allow(dead_code)]

pub mod suites;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_whitney::arith::{GaussianRational, MPoly};
use toric_whitney::cli::parse::parse_polynomial;
use toric_whitney::lattice::{IntVec, RationalCone};
use toric_whitney::newton::ToricPolynomial;
use toric_whitney::toric::{build_variety, BuildOptions, ToricVariety, VarietyInput};

pub type G = GaussianRational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sigma(rays: &[&[i64]]) -> ToricVariety {
    let rays = rays.iter().map(|r| r.to_vec()).collect();
    build_variety(&VarietyInput::SigmaRays(rays), &BuildOptions::default()).unwrap()
}

pub fn generators(gens: &[&[i64]], strict: bool) -> ToricVariety {
    let gens = gens.iter().map(|g| g.to_vec()).collect();
    let opts = BuildOptions { require_saturation: strict, ..Default::default() };
    build_variety(&VarietyInput::Generators(gens), &opts).unwrap()
}

pub fn poly(v: &ToricVariety, s: &str) -> ToricPolynomial<G> {
    ToricPolynomial::new(parse_polynomial(s, v.r).unwrap()).unwrap()
}

pub fn plane() -> ToricVariety {
    sigma(&[&[0, 1], &[2, -1]])
}

pub fn c3() -> ToricVariety {
    generators(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], true)
}

pub fn four_generators() -> ToricVariety {
    generators(&[&[0, 1, 2], &[2, 1, 0], &[1, 0, 3], &[1, 1, 1]], false)
}

pub fn ray_variety(q: i64) -> ToricVariety {
    let gens = (0..=q).map(|k| vec![1, k]).collect();
    build_variety(&VarietyInput::Generators(gens), &BuildOptions::default()).unwrap()
}

/// The varieties the randomized suites draw from.
pub fn zoo() -> Vec<ToricVariety> {
    vec![
        plane(),
        generators(&[&[1, 0], &[0, 1]], true),
        c3(),
        four_generators(),
        ray_variety(3),
        sigma(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 3]]),
    ]
}

pub fn small_gaussian(rng: &mut ChaCha8Rng) -> G {
    loop {
        let re = rng.gen_range(-3..=3);
        let im = if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 };
        let c = G::from_parts((re, 1), (im, 1));
        if re != 0 || im != 0 {
            return c;
        }
    }
}

/// A random polynomial without constant term, 2 to 4 terms, exponents at most 3.
pub fn random_polynomial(v: &ToricVariety, rng: &mut ChaCha8Rng) -> ToricPolynomial<G> {
    loop {
        let k = rng.gen_range(2..=4);
        let mut p = MPoly::zero(v.r);
        for _ in 0..k {
            let e: Vec<i64> = (0..v.r).map(|_| if rng.gen_bool(0.5) { rng.gen_range(0..=3) } else { 0 }).collect();
            if e.iter().any(|&x| x != 0) {
                p.add_term(e, small_gaussian(rng));
            }
        }
        if !p.is_zero() {
            return ToricPolynomial::new(p).unwrap();
        }
    }
}

/// A polynomial with a squared binomial, so some compact face tends to be degenerate.
pub fn squared_binomial(v: &ToricVariety, rng: &mut ChaCha8Rng) -> ToricPolynomial<G> {
    loop {
        let mut h = MPoly::zero(v.r);
        for _ in 0..2 {
            let e: Vec<i64> = (0..v.r).map(|_| rng.gen_range(0..=1)).collect();
            h.add_term(e, small_gaussian(rng));
        }
        if h.len() == 2 && !h.terms().keys().any(|e| e.iter().all(|&x| x == 0)) {
            return ToricPolynomial::new(h.pow(2)).unwrap();
        }
    }
}

/// A random strongly convex full-dimensional cone in dimension 2 or 3.
pub fn random_cone(rng: &mut ChaCha8Rng, max_entry: i64) -> (usize, Vec<IntVec>) {
    loop {
        let n = rng.gen_range(2..=3);
        let k = rng.gen_range(n..=n + 1);
        let rays: Vec<IntVec> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-max_entry..=max_entry)).collect()).collect();
        if rays.iter().any(|r| r.iter().all(|&c| c == 0)) {
            continue;
        }
        if let Ok(c) = RationalCone::new(n, &rays) {
            if c.is_pointed() && c.is_full_dimensional() {
                return (n, rays);
            }
        }
    }
}

fn pairs_nonnegatively(x: &[i64], sigma_rays: &[IntVec]) -> bool {
    sigma_rays.iter().all(|s| s.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() >= 0)
}

fn lattice_box(n: usize, b: i64) -> Vec<IntVec> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|p: IntVec| (-b..=b).map(move |c| [p.clone(), vec![c]].concat())).collect();
    }
    out
}

/// Brute-force Hilbert basis check against `σ̌ = {x : <x, s> >= 0}`: every
/// basis element is irreducible and every cone point of `[-b, b]^n` is
/// generated. `search` bounds the summand search for irreducibility.
pub fn brute_hilbert_check(sigma_rays: &[IntVec], basis: &[IntVec], b: i64, search: i64) -> Result<(), String> {
    let n = sigma_rays[0].len();
    let summands: Vec<IntVec> = lattice_box(n, search)
        .into_iter()
        .filter(|q| q.iter().any(|&c| c != 0) && pairs_nonnegatively(q, sigma_rays))
        .collect();
    for h in basis {
        if !pairs_nonnegatively(h, sigma_rays) {
            return Err(format!("{h:?} outside the cone"));
        }
        for q in &summands {
            let rest: IntVec = h.iter().zip(q).map(|(a, c)| a - c).collect();
            if rest.iter().any(|&c| c != 0) && pairs_nonnegatively(&rest, sigma_rays) {
                return Err(format!("{h:?} = {q:?} + {rest:?}"));
            }
        }
    }
    let mut memo = HashMap::new();
    fn generated(x: IntVec, basis: &[IntVec], s: &[IntVec], memo: &mut HashMap<IntVec, bool>) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if let Some(&m) = memo.get(&x) {
            return m;
        }
        let ok = basis.iter().any(|h| {
            let y: IntVec = x.iter().zip(h).map(|(a, c)| a - c).collect();
            pairs_nonnegatively(&y, s) && generated(y, basis, s, memo)
        });
        memo.insert(x, ok);
        ok
    }
    for x in lattice_box(n, b) {
        if pairs_nonnegatively(&x, sigma_rays) && !generated(x.clone(), basis, sigma_rays, &mut memo) {
            return Err(format!("{x:?} not generated"));
        }
    }
    Ok(())
}
