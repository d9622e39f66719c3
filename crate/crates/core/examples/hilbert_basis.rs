//! Hilbert bases of `σ̌ ∩ Z^n`.

use toric_whitney::lattice::{hilbert_basis, in_semigroup, grading, RationalCone};

fn main() {
    for sigma in [
        vec![vec![0, 1], vec![2, -1]],
        vec![vec![0, 1], vec![5, -3]],
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]],
        vec![vec![2, -4, 2], vec![3, 2, -1], vec![-3, 6, 1]],
    ] {
        let n = sigma[0].len();
        let dual = RationalCone::new(n, &sigma).unwrap().dual();
        let hb = hilbert_basis(&dual).unwrap();
        println!("σ rays {sigma:?}");
        println!("  σ̌ rays {:?}", dual.rays());
        println!("  Hilbert basis ({}): {hb:?}", hb.len());
        if n == 3 {
            let g = grading(&dual);
            let rays_only = dual.rays().to_vec();
            let missing: Vec<_> = hb.iter().filter(|h| !in_semigroup(&rays_only, h, &g)).collect();
            println!("  not generated by the rays alone: {missing:?}");
        }
    }
}
