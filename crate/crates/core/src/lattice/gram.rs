//! Positive-definite even lattices presented by integer Gram matrices.
//!
//! A lattice is handed over as the Gram matrix G of a chosen basis
//! alpha_1..alpha_d. Lattice vectors are integer coordinate vectors in that
//! basis; dual vectors are rational coordinate vectors lambda with
//! G lambda integral. Evenness only needs an even diagonal since
//! <v,v> = sum v_i^2 G_ii mod 2, and positive definiteness is decided
//! exactly through leading principal minors.

use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::linalg::QMat;
use crate::rat::{rat_int, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Integer coordinates of a lattice vector in the alpha-basis.
pub type LatticeVec = Vec<i64>;

/// Rational coordinates of a dual-lattice vector in the alpha-basis.
pub type DualVec = Vec<Rat>;

/// Gram-matrix input file: `{"gram": [[2,-1],[-1,2]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GramFile {
    pub gram: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
    inv: QMat,
    det: i64,
}

/// Validates symmetry, even diagonal and positive definiteness, and caches
/// the exact inverse. The three failure modes are distinct errors.
pub fn validate_gram(gram: Vec<Vec<i64>>) -> Result<GramLattice> {
    let d = gram.len();
    if d == 0 || gram.iter().any(|row| row.len() != d) {
        return Err(Error::GramNotSquare);
    }
    for i in 0..d {
        for j in 0..d {
            if gram[i][j] != gram[j][i] {
                return Err(Error::GramNotSymmetric);
            }
        }
    }
    if (0..d).any(|i| gram[i][i] % 2 != 0) {
        return Err(Error::GramOddDiagonal);
    }
    for r in 1..=d {
        if leading_minor(&gram, r) <= 0 {
            return Err(Error::GramNotPositiveDefinite);
        }
    }
    let det = leading_minor(&gram, d);
    let inv = invert(&gram).expect("positive definite matrix is invertible");
    Ok(GramLattice {
        gram,
        inv,
        det: i64::try_from(det).expect("determinant exceeds i64"),
    })
}

fn leading_minor(gram: &[Vec<i64>], r: usize) -> i128 {
    // Laplace expansion; r <= 4 at desk scale
    fn det(m: &[Vec<i128>]) -> i128 {
        match m.len() {
            0 => 1,
            1 => m[0][0],
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i128>> = (1..n)
                        .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * m[0][j] * det(&minor)
                })
                .sum(),
        }
    }
    let sub: Vec<Vec<i128>> = (0..r)
        .map(|i| (0..r).map(|j| gram[i][j] as i128).collect())
        .collect();
    det(&sub)
}

fn invert(gram: &[Vec<i64>]) -> Option<QMat> {
    let d = gram.len();
    // Gauss-Jordan on [G | I]
    let mut aug = QMat::zeros(d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            aug[(i, j)] = rat_int(gram[i][j]);
        }
        aug[(i, d + i)] = Rat::one();
    }
    for col in 0..d {
        let pivot_row = (col..d).find(|&r| !aug[(r, col)].is_zero())?;
        if pivot_row != col {
            for j in 0..2 * d {
                let tmp = aug[(pivot_row, j)].clone();
                aug[(pivot_row, j)] = aug[(col, j)].clone();
                aug[(col, j)] = tmp;
            }
        }
        let inv = aug[(col, col)].clone().recip();
        for j in 0..2 * d {
            aug[(col, j)] *= &inv;
        }
        for r in 0..d {
            if r == col || aug[(r, col)].is_zero() {
                continue;
            }
            let factor = aug[(r, col)].clone();
            for j in 0..2 * d {
                let delta = &factor * &aug[(col, j)];
                aug[(r, j)] -= delta;
            }
        }
    }
    let mut out = QMat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            out[(i, j)] = aug[(i, d + j)].clone();
        }
    }
    Some(out)
}

impl GramLattice {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn inverse(&self) -> &QMat {
        &self.inv
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    /// <a, b> for integer coordinate vectors.
    pub fn inner_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let d = self.rank();
        let mut acc = 0i64;
        for i in 0..d {
            for j in 0..d {
                acc += a[i] * self.gram[i][j] * b[j];
            }
        }
        acc
    }

    pub fn norm_int(&self, a: &[i64]) -> i64 {
        self.inner_int(a, a)
    }

    /// <a, b> for rational coordinate vectors.
    pub fn inner(&self, a: &[Rat], b: &[Rat]) -> Rat {
        let d = self.rank();
        let mut acc = Rat::zero();
        for i in 0..d {
            for j in 0..d {
                acc += &a[i] * rat_int(self.gram[i][j]) * &b[j];
            }
        }
        acc
    }

    pub fn norm(&self, a: &[Rat]) -> Rat {
        self.inner(a, a)
    }

    /// <lambda, alpha> with lambda rational and alpha integral.
    pub fn inner_mixed(&self, a: &[Rat], b: &[i64]) -> Rat {
        let b_rat: Vec<Rat> = b.iter().map(|&x| rat_int(x)).collect();
        self.inner(a, &b_rat)
    }

    /// True iff G v is an integer vector, i.e. v lies in the dual lattice.
    pub fn is_dual_vector(&self, v: &[Rat]) -> bool {
        let d = self.rank();
        (0..d).all(|i| {
            let mut acc = Rat::zero();
            for j in 0..d {
                acc += rat_int(self.gram[i][j]) * &v[j];
            }
            acc.denom().is_one()
        })
    }

    /// Invariant factors of the discriminant group L°/L (the >1 entries of
    /// the Smith normal form diagonal) and one coset representative per
    /// element, with coordinates normalized into [0, 1).
    ///
    /// With U G V = D, the cosets of Z^d inside G^(-1) Z^d are represented
    /// by V D^(-1) t as t runs over the mixed-radix box prod [0, d_i).
    pub fn discriminant_group(&self) -> (Vec<i64>, Vec<DualVec>) {
        let d = self.rank();
        let snf = smith_normal_form(&self.gram);
        let factors: Vec<i64> = snf.diag.iter().copied().filter(|&x| x > 1).collect();

        let mut reps = Vec::new();
        let mut t = vec![0i64; d];
        'outer: loop {
            let frac: Vec<Rat> = (0..d).map(|i| Rat::new(t[i].into(), snf.diag[i].into())).collect();
            let mut coords: Vec<Rat> = (0..d)
                .map(|i| {
                    let mut acc = Rat::zero();
                    for (jj, f) in frac.iter().enumerate() {
                        acc += rat_int(snf.v[i][jj]) * f;
                    }
                    acc
                })
                .collect();
            for c in coords.iter_mut() {
                let fl = c.floor();
                *c -= fl;
            }
            reps.push(coords);
            // advance the mixed-radix counter, last index fastest
            let mut i = d;
            while i > 0 {
                i -= 1;
                t[i] += 1;
                if t[i] < snf.diag[i] {
                    continue 'outer;
                }
                t[i] = 0;
            }
            break;
        }
        debug_assert_eq!(reps.len() as i64, self.det);
        (factors, reps)
    }
}
