mod common;

use common::*;
use toric_whitney::arith::{Field, MPoly};
use toric_whitney::newton::{face_function, newton_polyhedron, torus_form};

#[test]
fn three_compact_edges_on_the_plane() {
    let v = plane();
    let g = poly(&v, "z1^4 + z1^2*z2 + z1*z2^2 - z1*z2*z3^2");
    let np = newton_polyhedron(&v, &g).unwrap();
    assert_eq!(np.vertices, vec![vec![3, 1], vec![3, 2], vec![4, 0], vec![4, 5]]);
    let edges: Vec<_> = np.compact_boundary().unwrap().into_iter().filter(|f| f.dim == 1).map(|f| f.vertices).collect();
    assert_eq!(edges, vec![vec![vec![3, 1], vec![3, 2]], vec![vec![3, 1], vec![4, 0]], vec![vec![3, 2], vec![4, 5]]]);
}

#[test]
fn collapsing_quartic_on_the_plane() {
    let v = plane();
    let g = poly(&v, "z1^4 + z2^4*z3 - z2^2*z3^2");
    let np = newton_polyhedron(&v, &g).unwrap();
    assert_eq!(np.vertices, vec![vec![4, 0], vec![4, 6]]);
    let edge = np.compact_boundary().unwrap().into_iter().find(|f| f.dim == 1).unwrap();
    let (_, l) = face_function(&v, &g, &edge).unwrap();
    let expected = MPoly::from_terms(2, [(vec![4, 0], G::one()), (vec![4, 6], G::from_ratio(-1, 1))]);
    assert_eq!(l, expected);
    assert!(torus_form(&v, &g).cancellations.is_empty());
}

#[test]
fn cancellation_in_the_torus_form_is_reported() {
    let v = plane();
    let g = poly(&v, "z1*z3 - z2^2 + z1^3");
    let tf = torus_form(&v, &g);
    assert_eq!(tf.cancellations.len(), 1);
    assert_eq!(tf.cancellations[0].lambda, vec![2, 2]);
    let np = newton_polyhedron(&v, &g).unwrap();
    assert_eq!(np.vertices, vec![vec![3, 0]]);
}
