//! The semisimple quotients of R(g_k) by the two-sided ideal generated by
//! (1 - 2H)A.
//!
//! For each positive integer k the quotient has exactly 2k inequivalent
//! irreducible modules L(n/2k), -(k-1) <= n <= k: one of dimension 2 at
//! highest weight 1/2 and the rest one-dimensional. The quotient is
//! realized computationally as the image of A, B, H in End of the direct
//! sum of those modules; its linear span closed under multiplication has
//! dimension 2k + 3 = (2k - 1) * 1^2 + 2^2, the Wedderburn sum, which the
//! span closure recomputes independently.

use crate::error::{Error, Result};
use crate::linalg::{close_span, QMat, SpanClosure};
use crate::poly::Poly;
use crate::rat::{rat, rat_int, rat_to_string, Rat};
use crate::smith::{SimpleModuleSpec, SmithAlgebra};
use serde::{Deserialize, Serialize};

/// g_k(x) = 2k x (4k^2 x^2 - 1)(4k^2 x^2 - 4) ... (4k^2 x^2 - (k-1)^2) / (2k-1)!
pub fn g_k(k: usize) -> Poly {
    assert!(k >= 1);
    let kk = k as i64;
    let mut p = Poly::from_ints(&[0, 2 * kk]);
    for j in 1..=(kk - 1) {
        p = &p * &Poly::from_ints(&[-j * j, 0, 4 * kk * kk]);
    }
    let mut fact = Rat::from_integer(1.into());
    for i in 2..=(2 * kk - 1) {
        fact *= rat_int(i);
    }
    p.scale(&fact.recip())
}

/// The quotient, carried by its full list of irreducibles.
#[derive(Debug, Clone)]
pub struct RbarSpec {
    pub k: usize,
    pub g: Poly,
    pub irreducibles: Vec<SimpleModuleSpec>,
}

/// Builds every irreducible L(n/2k) for -(k-1) <= n <= k over g_k and
/// verifies the expected dimension pattern and the vanishing of (1 - 2H)A
/// on each. A failed check is reported as an internal error carrying the
/// offending n; it signals a bug, not bad input.
pub fn rbar_irreducibles(k: usize) -> Result<RbarSpec> {
    assert!(k >= 1);
    let g = g_k(k);
    let alg = SmithAlgebra::new(g.clone());
    let mut irreducibles = Vec::with_capacity(2 * k);
    for n in -(k as i64 - 1)..=(k as i64) {
        let weight = rat(n, 2 * k as i64);
        let module = alg
            .simple_module(&weight, 2)
            .map_err(|_| Error::InternalCheck(format!("no small simple at n = {n}")))?;
        let expected_dim = if n == k as i64 { 2 } else { 1 };
        if module.dim != expected_dim {
            return Err(Error::InternalCheck(format!(
                "L({}) has dimension {}, expected {expected_dim} (n = {n})",
                rat_to_string(&weight),
                module.dim
            )));
        }
        if !module.satisfies_relations(&alg) {
            return Err(Error::InternalCheck(format!("relations fail at n = {n}")));
        }
        if !module.one_minus_two_h_times_a().is_zero() {
            return Err(Error::InternalCheck(format!(
                "(1-2H)A does not vanish at n = {n}"
            )));
        }
        irreducibles.push(module);
    }
    Ok(RbarSpec { k, g, irreducibles })
}

impl RbarSpec {
    /// Block-diagonal images of A, B, H on the direct sum of all
    /// irreducibles.
    pub fn block_generators(&self) -> (QMat, QMat, QMat) {
        let a = QMat::block_diag(&self.irreducibles.iter().map(|m| m.a.clone()).collect::<Vec<_>>());
        let b = QMat::block_diag(&self.irreducibles.iter().map(|m| m.b.clone()).collect::<Vec<_>>());
        let h = QMat::block_diag(&self.irreducibles.iter().map(|m| m.h.clone()).collect::<Vec<_>>());
        (a, b, h)
    }

    /// Closure of the unital span of the A, B, H images under
    /// multiplication.
    pub fn span_closure(&self) -> SpanClosure {
        let (a, b, h) = self.block_generators();
        let n = a.nrows();
        close_span(&[a, b, h], n)
    }

    /// Highest-weight labels n/2k in order.
    pub fn weights(&self) -> Vec<Rat> {
        self.irreducibles.iter().map(|m| m.lambda.clone()).collect()
    }

    /// Multiset of H-eigenvalues per irreducible, each sorted.
    pub fn h_spectra(&self) -> Vec<Vec<Rat>> {
        self.irreducibles
            .iter()
            .map(|m| {
                let mut s: Vec<Rat> = (0..m.dim).map(|i| m.h[(i, i)].clone()).collect();
                s.sort();
                s
            })
            .collect()
    }
}

/// Dimension of the quotient as computed by span closure over the direct
/// sum of its irreducibles. Equals 2k + 3.
pub fn rbar_dimension(k: usize) -> Result<usize> {
    Ok(rbar_irreducibles(k)?.span_closure().dim())
}

/// True iff (1 - 2H)A is the zero operator on every irreducible.
pub fn check_ideal_relation(k: usize) -> Result<bool> {
    let spec = rbar_irreducibles(k)?;
    Ok(spec
        .irreducibles
        .iter()
        .all(|m| m.one_minus_two_h_times_a().is_zero()))
}

/// Summary of one quotient: irreducible table, span dimension,
/// semisimplicity verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub k: usize,
    pub irreducibles: Vec<IrreducibleEntry>,
    pub algebra_dim: usize,
    pub semisimple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleEntry {
    pub weight: String,
    pub dim: usize,
}

/// Full pipeline for one k: irreducibles, span dimension, and the trace
/// form verdict on the span algebra.
pub fn rbar_report(k: usize) -> Result<AlgebraReport> {
    let spec = rbar_irreducibles(k)?;
    let closure = spec.span_closure();
    let semisimple = crate::lattice::span::trace_form_nondegenerate(&closure)?;
    Ok(AlgebraReport {
        k,
        irreducibles: spec
            .irreducibles
            .iter()
            .map(|m| IrreducibleEntry {
                weight: rat_to_string(&m.lambda),
                dim: m.dim,
            })
            .collect(),
        algebra_dim: closure.dim(),
        semisimple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_k_small_cases() {
        assert_eq!(g_k(1), Poly::from_ints(&[0, 2]));
        // g_2 = 32/3 x^3 - 2/3 x
        assert_eq!(
            g_k(2),
            Poly::from_coeffs(vec![rat_int(0), rat(-2, 3), rat_int(0), rat(32, 3)])
        );
        // g_3 = (1/20) x (36x^2 - 1)(36x^2 - 4)
        let expect = (&Poly::from_ints(&[0, 1]) * &(&Poly::from_ints(&[-1, 0, 36]) * &Poly::from_ints(&[-4, 0, 36])))
            .scale(&rat(1, 20));
        assert_eq!(g_k(3), expect);
    }

    #[test]
    fn irreducibles_k1() {
        let spec = rbar_irreducibles(1).unwrap();
        assert_eq!(spec.weights(), vec![rat_int(0), rat(1, 2)]);
        let dims: Vec<usize> = spec.irreducibles.iter().map(|m| m.dim).collect();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn irreducibles_k2() {
        let spec = rbar_irreducibles(2).unwrap();
        assert_eq!(
            spec.weights(),
            vec![rat(-1, 4), rat_int(0), rat(1, 4), rat(1, 2)]
        );
        let dims: Vec<usize> = spec.irreducibles.iter().map(|m| m.dim).collect();
        assert_eq!(dims, vec![1, 1, 1, 2]);
    }

    #[test]
    fn irreducibles_k3_pattern() {
        let spec = rbar_irreducibles(3).unwrap();
        assert_eq!(spec.irreducibles.len(), 6);
        let twos = spec.irreducibles.iter().filter(|m| m.dim == 2).count();
        let ones = spec.irreducibles.iter().filter(|m| m.dim == 1).count();
        assert_eq!((ones, twos), (5, 1));
    }

    #[test]
    fn dimension_is_wedderburn_sum() {
        for k in 1..=4 {
            assert_eq!(rbar_dimension(k).unwrap(), 2 * k + 3, "k = {k}");
        }
    }

    #[test]
    fn span_closure_stabilizes_quickly() {
        for k in 1..=4 {
            let closure = rbar_irreducibles(k).unwrap().span_closure();
            assert!(closure.rounds <= 3, "k = {k}: {} rounds", closure.rounds);
        }
    }

    #[test]
    fn ideal_relation_holds_on_quotient_modules() {
        assert!(check_ideal_relation(1).unwrap());
        assert!(check_ideal_relation(3).unwrap());
    }

    #[test]
    fn ideal_relation_fails_on_discarded_module() {
        // L(1) over g_1 = 2x is 3-dimensional; it survives in R_1 but not
        // in the quotient, and (1-2H)A is nonzero there.
        let alg = SmithAlgebra::new(g_k(1));
        let module = alg.simple_module(&rat_int(1), 4).unwrap();
        assert_eq!(module.dim, 3);
        assert!(!module.one_minus_two_h_times_a().is_zero());
    }

    #[test]
    fn weights_stay_in_declared_window() {
        for k in 1..=4usize {
            let spec = rbar_irreducibles(k).unwrap();
            for m in &spec.irreducibles {
                for i in 0..m.dim {
                    let w = &m.h[(i, i)] * rat_int(2 * k as i64);
                    assert!(w >= rat_int(-(k as i64)) && w <= rat_int(k as i64));
                }
            }
        }
    }

    #[test]
    fn representation_separates_span() {
        // no nonzero element of the closed span acts as zero
        let closure = rbar_irreducibles(2).unwrap().span_closure();
        for m in &closure.basis {
            assert!(!m.is_zero());
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = rbar_report(1).unwrap();
        assert!(report.semisimple);
        assert_eq!(report.algebra_dim, 5);
        let s = serde_json::to_string(&report).unwrap();
        let back: AlgebraReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, report);
    }
}
