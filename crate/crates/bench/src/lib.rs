//! Shared fixtures for the criterion benchmarks.

use zhualg::lattice::{validate_gram, GramLattice};
use zhualg::smith::nc::Gen;

pub fn a2() -> GramLattice {
    validate_gram(vec![vec![2, -1], vec![-1, 2]]).unwrap()
}

pub fn rank2_det8() -> GramLattice {
    validate_gram(vec![vec![2, 0], vec![0, 4]]).unwrap()
}

/// A word whose normal form exercises all three rewriting rules.
pub fn mixed_word() -> Vec<Gen> {
    use Gen::*;
    vec![A, A, H, B, B, A, H, B]
}
