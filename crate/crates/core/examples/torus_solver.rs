//! Exact solutions of polynomial systems on the torus, as points over a
//! number field.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_whitney::arith::{var_names, GaussianRational as G, MPoly};
use toric_whitney::checks::solver::{reduced_dimension, solve_torus, Solve};
use toric_whitney::checks::Witness;
use toric_whitney::cli::parse::parse_polynomial;

fn main() {
    let systems: [&[&str]; 4] = [
        &["z1^2 - 2", "z1*z2 - 1"],
        &["z1^2 + z2^2 - 1", "z1 - z2"],
        &["z1*z2 - 1", "z1*z2 - 2"],
        &["z1^2*z2 - z3", "z2 - 3", "z3^2 + 1"],
    ];
    for eqs in systems {
        let n = 3;
        let polys: Vec<MPoly<G>> = eqs.iter().map(|s| parse_polynomial(s, n).unwrap()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        print!("{eqs:?} (reduced dimension {}): ", reduced_dimension(&polys));
        match solve_torus(&polys, &mut rng, 32) {
            Solve::NoSolution(why) => println!("no torus solution: {why}"),
            Solve::Unknown(why) => println!("undecided: {why}"),
            Solve::Solution { point, .. } => {
                let w = Witness::new(var_names("z", n), &point, &polys);
                println!("{}; replay {:?}", w.describe(), w.replay());
            }
        }
    }
}
