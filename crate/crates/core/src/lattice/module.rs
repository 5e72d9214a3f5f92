//! Irreducible modules of the lattice algebra.
//!
//! For lambda of minimal norm in its coset, the module has basis indexed by
//! Delta(lambda). Cartan elements act diagonally by <lambda+alpha, h>; the
//! operator E_beta sends u_alpha to eps(beta, alpha) u_(alpha+beta) when
//! that stays in the minimal layer and to zero otherwise, so every E_beta
//! matrix is a signed partial permutation.
//!
//! The sign convention is operator-symbol-first, eps(beta, alpha): with the
//! bimultiplicative cocycle this composes as E_(b1) E_(b2) =
//! eps(b1, b2) E_(b1+b2) on the nose, which is the form the relation
//! checker verifies.

use super::cocycle::{make_cocycle, Cocycle};
use super::enumerate::{delta_set, support_set};
use super::gram::{DualVec, GramLattice, LatticeVec};
use crate::error::{Error, Result};
use crate::linalg::QMat;
use crate::poly::{binom_poly, Poly};
use crate::rat::{binom_int, rat_int, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeModule {
    pub lambda: DualVec,
    pub delta: Vec<LatticeVec>,
    /// Diagonal action of each basis Cartan element alpha_i.
    pub h_action: Vec<QMat>,
    /// E_beta for every beta in the support set (zero matrices included).
    pub e_action: BTreeMap<LatticeVec, QMat>,
}

impl LatticeModule {
    pub fn dim(&self) -> usize {
        self.delta.len()
    }

    /// Matrix of the Cartan element with the given rational coordinates.
    pub fn cartan(&self, coords: &[Rat]) -> QMat {
        let n = self.dim();
        let mut m = QMat::zeros(n, n);
        for (i, h) in self.h_action.iter().enumerate() {
            m = &m + &h.scale(&coords[i]);
        }
        m
    }

    /// Cartan element of an integral lattice vector.
    pub fn cartan_int(&self, beta: &[i64]) -> QMat {
        let coords: Vec<Rat> = beta.iter().map(|&c| rat_int(c)).collect();
        self.cartan(&coords)
    }

    pub fn e_matrix(&self, beta: &[i64]) -> QMat {
        self.e_action
            .get(beta)
            .cloned()
            .unwrap_or_else(|| QMat::zeros(self.dim(), self.dim()))
    }

    /// The h-weight of basis vector index i, as a dual vector.
    pub fn weight(&self, i: usize) -> DualVec {
        self.lambda
            .iter()
            .zip(&self.delta[i])
            .map(|(l, &a)| l + rat_int(a))
            .collect()
    }
}

/// Builds M^lambda. Errors if lambda is not a minimal-norm representative.
pub fn build_module(lat: &GramLattice, lambda: &DualVec) -> Result<LatticeModule> {
    let support = support_set(lat);
    let eps = make_cocycle(lat);
    build_module_with(lat, &eps, &support, lambda)
}

/// Same as `build_module` with the cocycle and support set precomputed, so
/// a pipeline over all cosets shares them.
pub fn build_module_with(
    lat: &GramLattice,
    eps: &Cocycle,
    support: &[LatticeVec],
    lambda: &DualVec,
) -> Result<LatticeModule> {
    let delta = delta_set(lat, lambda)?;
    let n = delta.len();
    let index: BTreeMap<&LatticeVec, usize> = delta.iter().zip(0..).collect();

    let d = lat.rank();
    let mut h_action = Vec::with_capacity(d);
    for i in 0..d {
        let mut basis_dir = vec![0i64; d];
        basis_dir[i] = 1;
        let mut m = QMat::zeros(n, n);
        for (col, alpha) in delta.iter().enumerate() {
            let weight: DualVec = lambda
                .iter()
                .zip(alpha)
                .map(|(l, &a)| l + rat_int(a))
                .collect();
            m[(col, col)] = lat.inner_mixed(&weight, &basis_dir);
        }
        h_action.push(m);
    }

    let mut e_action = BTreeMap::new();
    for beta in support {
        let mut m = QMat::zeros(n, n);
        for (col, alpha) in delta.iter().enumerate() {
            let target: LatticeVec = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
            if let Some(&row) = index.get(&target) {
                m[(row, col)] = rat_int(eps.eval(beta, alpha));
            }
        }
        e_action.insert(beta.clone(), m);
    }

    Ok(LatticeModule {
        lambda: lambda.clone(),
        delta,
        h_action,
        e_action,
    })
}

/// The structure polynomial of the commutation relation: zero when
/// <alpha, beta> >= 0, otherwise C(x + <alpha,alpha>/2 - 1, -<alpha,beta>-1).
/// The displayed sum over binomials is re-verified against the closed form
/// on every call; a mismatch would be a bug, not bad input.
pub fn g_alpha_beta(lat: &GramLattice, alpha: &[i64], beta: &[i64]) -> Result<Poly> {
    let pairing = lat.inner_int(alpha, beta);
    if pairing >= 0 {
        return Ok(Poly::zero());
    }
    let half_norm = lat.norm_int(alpha) / 2;
    let upper = half_norm - 1; // summation limit
    let lower = -pairing - 1; // binomial lower index
    let closed = binom_poly(lower as usize).shift(&rat_int(upper));
    let mut sum = Poly::zero();
    for r in 0..=upper {
        let idx = lower - r;
        if idx < 0 {
            continue; // C(x, negative) = 0
        }
        let coeff = binom_int(&rat_int(upper), r as usize);
        sum = &sum + &binom_poly(idx as usize).scale(&coeff);
    }
    if sum != closed {
        return Err(Error::InternalCheck(format!(
            "binomial sum disagrees with closed form at alpha={alpha:?} beta={beta:?}"
        )));
    }
    Ok(closed)
}

/// M^l1 and M^l2 are equivalent iff the representatives differ by a
/// lattice vector. Both inputs must lie in S.
pub fn module_equivalence(lat: &GramLattice, l1: &DualVec, l2: &DualVec) -> Result<bool> {
    // delta_set validates membership in S
    delta_set(lat, l1)?;
    delta_set(lat, l2)?;
    Ok(l1
        .iter()
        .zip(l2)
        .all(|(a, b)| (a - b).denom() == &num_bigint::BigInt::from(1)))
}

/// True iff every entry is 0 or +-1 with at most one nonzero entry per row
/// and per column.
pub fn is_signed_partial_permutation(m: &QMat) -> bool {
    let (r, c) = (m.nrows(), m.ncols());
    let one = Rat::from_integer(1.into());
    for i in 0..r {
        let mut seen = 0;
        for j in 0..c {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            if x != &one && *x != -one.clone() {
                return false;
            }
            seen += 1;
        }
        if seen > 1 {
            return false;
        }
    }
    for j in 0..c {
        let nonzero = (0..r).filter(|&i| !m[(i, j)].is_zero()).count();
        if nonzero > 1 {
            return false;
        }
    }
    true
}
