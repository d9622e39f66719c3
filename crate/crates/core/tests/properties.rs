mod common;

use common::suites;

#[test]
fn transport_identity_on_face_terms() {
    suites::transport_identity(200).unwrap();
}

#[test]
fn face_functions_are_weighted_homogeneous() {
    suites::euler_identity(200).unwrap();
}

#[test]
fn restrictions_of_nondegenerate_polynomials_never_fail() {
    let summary = suites::restrictions_never_fail(200).unwrap();
    println!("{summary}");
}

#[test]
fn every_failure_witness_replays() {
    let summary = suites::witness_replay(200).unwrap();
    println!("{summary}");
}

#[test]
fn structured_reports_are_deterministic() {
    suites::deterministic_reports(200).unwrap();
}
