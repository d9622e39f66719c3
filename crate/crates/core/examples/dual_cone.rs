//! Dual cones and their faces, exactly.

use toric_whitney::lattice::RationalCone;

fn show(name: &str, c: &RationalCone) {
    println!("{name}: rays {:?}, facet normals {:?}, dim {}", c.rays(), c.facets(), c.dim());
}

fn main() {
    let sigma = RationalCone::new(3, &[vec![2, -4, 2], vec![3, 2, -1], vec![-3, 6, 1]]).unwrap();
    let dual = sigma.dual();
    show("σ", &sigma);
    show("σ̌", &dual);
    assert_eq!(dual.dual(), sigma);

    for f in dual.face_lattice().unwrap() {
        println!("  face of σ̌: dim {} rays {:?}", f.dim, f.rays);
    }

    // a cone with a redundant generator and one that is a half-plane
    show("redundant", &RationalCone::new(2, &[vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap());
    show("half-plane", &RationalCone::new(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap());
}
