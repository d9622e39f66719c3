//! One-parameter families: constant Newton data, non-degeneracy and
//! tameness for all t, and the equisingularity verdict.

use toric_whitney::checks::CheckConfig;
use toric_whitney::cli::parse::parse_family;
use toric_whitney::family::{equisingularity_verdict, FamilyPolynomial};
use toric_whitney::toric::{build_variety, BuildOptions, VarietyInput};

fn main() {
    let cfg = CheckConfig::default();
    for q in [5i64, 6] {
        let v = build_variety(&VarietyInput::Generators((0..=q).map(|k| vec![1, k]).collect()), &BuildOptions::default()).unwrap();
        for src in [format!("z1^2 + t*z2^3 + z{}", q - 1), format!("z1^2 + t*z{}", q - 1)] {
            let f = FamilyPolynomial::new(parse_family(&src, v.r).unwrap()).unwrap();
            let rep = equisingularity_verdict(&v, &f, &cfg).unwrap();
            println!("q = {q}: f = {}", f.display());
            println!("  exceptional t {:?}", rep.exceptional_t);
            println!("  (I) {:?}: {}", rep.condition_i.status, rep.condition_i.evidence);
            println!("  (II) at 0 {:?}, generic {:?}", rep.condition_ii_zero.status, rep.condition_ii_generic.status);
            println!("  {:?}: {}", rep.equisingular.status, rep.equisingular.evidence);
        }
    }
}
