mod common;

use common::*;
use toric_whitney::toric::{build_variety, BuildOptions, IndexSet, ToricError, VarietyInput};

#[test]
fn planar_dual_and_basis() {
    let v = plane();
    assert_eq!(v.dual.rays(), &[vec![1, 0], vec![1, 2]]);
    assert_eq!(v.generators, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    assert_eq!(v.r, 3);
}

#[test]
fn three_dimensional_dual() {
    let v = sigma(&[&[2, -4, 2], &[3, 2, -1], &[-3, 6, 1]]);
    let mut rays = v.dual.rays().to_vec();
    rays.sort();
    assert_eq!(rays, vec![vec![0, 1, 2], vec![1, 0, 3], vec![2, 1, 0]]);
    // the semigroup needs more than the three rays and (1,1,1)
    for g in [[0, 1, 2], [2, 1, 0], [1, 0, 3], [1, 1, 1], [1, 1, 2]] {
        assert!(v.generators.contains(&g.to_vec()), "{g:?}");
    }
    assert_eq!(v.generators.len(), 10);
}

#[test]
fn valid_index_sets_of_four_generators() {
    let v = four_generators();
    let mut got: Vec<Vec<usize>> = v.valid_index_sets().iter().map(|i| i.one_based()).collect();
    got.sort();
    let mut want: Vec<Vec<usize>> = vec![vec![], vec![1, 2, 3, 4], vec![1, 2, 4], vec![1, 3], vec![2, 3], vec![1], vec![2], vec![3]];
    want.sort();
    assert_eq!(got, want);
    assert!(!v.is_valid_index_set(&IndexSet::from_one_based(&[1, 4])));
    assert!(!v.warnings.is_empty());
}

#[test]
fn four_generators_are_not_a_semigroup_basis() {
    let gens = vec![vec![0, 1, 2], vec![2, 1, 0], vec![1, 0, 3], vec![1, 1, 1]];
    let err = build_variety(&VarietyInput::Generators(gens), &BuildOptions::default());
    assert!(matches!(err, Err(ToricError::GeneratorsDontGenerate { .. })), "{err:?}");
}

#[test]
fn duality_is_an_involution() {
    suites::duality_involution(60).unwrap();
}

#[test]
fn hilbert_bases_agree_with_box_enumeration() {
    suites::hilbert_box(25).unwrap();
}

#[test]
fn embed_lands_on_the_determinantal_surface() {
    let v = ray_variety(5);
    let mut rng = rng(5);
    for _ in 0..20 {
        let xi = [small_gaussian(&mut rng), small_gaussian(&mut rng)];
        let z = v.embed(&xi).unwrap();
        for a in 0..5 {
            for b in a + 1..5 {
                assert_eq!(z[a].clone() * z[b + 1].clone(), z[b].clone() * z[a + 1].clone());
            }
        }
    }
}
