//! The canonical stratification of an admissible family.

use toric_whitney::checks::CheckConfig;
use toric_whitney::cli::parse::parse_family;
use toric_whitney::family::{canonical_stratification, FamilyPolynomial};
use toric_whitney::toric::{build_variety, BuildOptions, VarietyInput};

fn main() {
    let v = build_variety(&VarietyInput::Generators((0..=5).map(|k| vec![1, k]).collect()), &BuildOptions::default()).unwrap();
    let f = FamilyPolynomial::new(parse_family("z1^2 + t*z2^3 + z4", v.r).unwrap()).unwrap();
    for s in canonical_stratification(&v, &f, &CheckConfig::default()).unwrap() {
        println!("{:<16} dim {}  {}", s.label(), s.dim, s.description);
    }
}
