//! The sign 2-cocycle of the central extension of an even lattice.
//!
//! The standard upper-triangular bimultiplicative section: on basis
//! vectors eps(alpha_i, alpha_j) = (-1)^G_ij for i > j and +1 for i <= j,
//! extended by bimultiplicativity. Bimultiplicativity makes the cocycle
//! identity hold on the nose, and the triangular choice produces the
//! required commutator eps(a,b) eps(b,a) = (-1)^<a,b> because the diagonal
//! Gram entries are even.

use super::gram::GramLattice;

/// Entries are +-1; only the strictly lower triangle can be -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    table: Vec<Vec<i64>>,
}

pub fn make_cocycle(lat: &GramLattice) -> Cocycle {
    let d = lat.rank();
    let table = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if i > j && lat.entry(i, j) % 2 != 0 {
                        -1
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect();
    Cocycle { table }
}

impl Cocycle {
    pub fn table(&self) -> &[Vec<i64>] {
        &self.table
    }

    /// eps(a, b) for lattice vectors in basis coordinates.
    pub fn eval(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut parity = 0i64;
        for (i, row) in self.table.iter().enumerate() {
            if a[i] == 0 {
                continue;
            }
            for (j, &t) in row.iter().enumerate() {
                if t == -1 && b[j] != 0 {
                    parity += a[i] * b[j];
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// eps(a,b) eps(a+b,c) = eps(b,c) eps(a,b+c).
    pub fn cocycle_identity_holds(&self, a: &[i64], b: &[i64], c: &[i64]) -> bool {
        let ab: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let bc: Vec<i64> = b.iter().zip(c).map(|(x, y)| x + y).collect();
        self.eval(a, b) * self.eval(&ab, c) == self.eval(b, c) * self.eval(a, &bc)
    }

    /// eps(a,b) eps(b,a) = (-1)^<a,b>.
    pub fn commutator_holds(&self, lat: &GramLattice, a: &[i64], b: &[i64]) -> bool {
        let expected = if lat.inner_int(a, b).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        self.eval(a, b) * self.eval(b, a) == expected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::gram::validate_gram;

    #[test]
    fn rank_one_is_trivial() {
        let lat = validate_gram(vec![vec![2]]).unwrap();
        let eps = make_cocycle(&lat);
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                assert_eq!(eps.eval(&[a], &[b]), 1);
            }
        }
    }

    #[test]
    fn a2_table_rule() {
        let lat = validate_gram(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let eps = make_cocycle(&lat);
        // eps(alpha_2, alpha_1) = (-1)^(-1) = -1, eps(alpha_1, alpha_2) = 1
        assert_eq!(eps.eval(&[0, 1], &[1, 0]), -1);
        assert_eq!(eps.eval(&[1, 0], &[0, 1]), 1);
    }

    #[test]
    fn identities_exhaustive_small_window() {
        for gram in [
            vec![vec![2, -1], vec![-1, 2]],
            vec![vec![2, 1], vec![1, 4]],
            vec![vec![4]],
        ] {
            let lat = validate_gram(gram).unwrap();
            let eps = make_cocycle(&lat);
            let d = lat.rank();
            let window: Vec<Vec<i64>> = if d == 1 {
                (-2..=2).map(|x| vec![x]).collect()
            } else {
                (-2..=2)
                    .flat_map(|x| (-2..=2).map(move |y| vec![x, y]))
                    .collect()
            };
            for a in &window {
                for b in &window {
                    assert!(eps.commutator_holds(&lat, a, b), "a={a:?} b={b:?}");
                    for c in &window {
                        assert!(eps.cocycle_identity_holds(a, b, c));
                    }
                }
            }
        }
    }
}
