//! Affine toric varieties: generators, valid index sets, orbits and the
//! embedding of the torus.

use toric_whitney::arith::GaussianRational as G;
use toric_whitney::toric::{build_variety, BuildOptions, VarietyInput};

fn main() {
    let v = build_variety(&VarietyInput::SigmaRays(vec![vec![0, 1], vec![2, -1]]), &BuildOptions::default()).unwrap();
    println!("n = {}, r = {}, generators {:?}", v.n, v.r, v.generators);
    for i in v.valid_index_sets() {
        println!("  X*^{i}: dim {}", v.orbit_dimension(i).unwrap());
    }
    let xi = [G::from_ratio(2, 1), G::from_parts((1, 2), (1, 1))];
    let z = v.embed(&xi).unwrap();
    println!("embed(2, 1/2 + i) = [{}]", z.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));

    // four generators of a three-dimensional dual cone that only generate it as a cone
    let gens = vec![vec![0, 1, 2], vec![2, 1, 0], vec![1, 0, 3], vec![1, 1, 1]];
    let strict = build_variety(&VarietyInput::Generators(gens.clone()), &BuildOptions::default());
    println!("strict: {}", strict.map(|_| "accepted".to_string()).unwrap_or_else(|e| e.to_string()));
    let lenient = BuildOptions { require_saturation: false, ..Default::default() };
    let v = build_variety(&VarietyInput::Generators(gens), &lenient).unwrap();
    let sets: Vec<String> = v.valid_index_sets().iter().map(|i| i.to_string()).collect();
    println!("lenient: valid index sets {}", sets.join(" "));
    for w in &v.warnings {
        println!("  warning: {w}");
    }
}
