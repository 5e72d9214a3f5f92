//! The lattice algebra as an operator span, its semisimplicity
//! certificate, and the verification of its defining relations.
//!
//! The algebra is realized concretely as the span of the Cartan and E_beta
//! operators on the direct sum of the modules M^lambda, one per coset,
//! closed under multiplication by exact row reduction. Semisimplicity is
//! decided by Dickson's criterion: in characteristic zero the algebra is
//! semisimple iff the trace form T(a, b) = tr(L_a L_b) of the left regular
//! representation is nondegenerate.

use super::cocycle::make_cocycle;
use super::enumerate::{min_coset_reps, support_set, CosetMin};
use super::gram::{GramLattice, LatticeVec};
use super::module::{build_module_with, LatticeModule};
use crate::error::{Error, Result};
use crate::linalg::{close_span, QMat, RowSpace, SpanClosure};
use crate::rat::{binom_int, rat, rat_int, rat_to_string, Rat};
use serde::{Deserialize, Serialize};

/// A finite-dimensional associative algebra presented by a closed list of
/// matrices.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    pub basis: Vec<QMat>,
    /// `constants[i][j][k]`: coefficient of `basis[k]` in `basis[i] * basis[j]`.
    pub constants: Vec<Vec<Vec<Rat>>>,
    /// Multiplication passes the span closure needed (0 when the
    /// generators were already closed).
    pub rounds: usize,
}

impl StructureAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Wraps an explicit list of matrices, computing structure constants.
    /// Errors if the list does not span a closed algebra.
    pub fn from_matrices(basis: Vec<QMat>) -> Result<StructureAlgebra> {
        let n = basis.first().map_or(0, |m| m.nrows());
        let mut space = RowSpace::new(n * n);
        for m in &basis {
            space.insert(&m.flatten());
        }
        let d = basis.len();
        let mut constants = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = &basis[i] * &basis[j];
                constants[i][j] = space.express(&prod.flatten()).ok_or(Error::NotClosed)?;
            }
        }
        Ok(StructureAlgebra {
            basis,
            constants,
            rounds: 0,
        })
    }

    fn from_closure(closure: SpanClosure) -> StructureAlgebra {
        let constants = closure.structure_constants();
        StructureAlgebra {
            basis: closure.basis,
            rounds: closure.rounds,
            constants,
        }
    }

    /// Left regular representation of basis element i.
    fn left_mul(&self, i: usize) -> QMat {
        let d = self.dim();
        let mut m = QMat::zeros(d, d);
        for j in 0..d {
            for k in 0..d {
                m[(k, j)] = self.constants[i][j][k].clone();
            }
        }
        m
    }

    /// Gram matrix of the trace form T(a_i, a_j) = tr(L_i L_j).
    pub fn trace_form(&self) -> QMat {
        let d = self.dim();
        let left: Vec<QMat> = (0..d).map(|i| self.left_mul(i)).collect();
        let mut t = QMat::zeros(d, d);
        for i in 0..d {
            for j in 0..=i {
                let tr = (&left[i] * &left[j]).trace();
                t[(i, j)] = tr.clone();
                t[(j, i)] = tr;
            }
        }
        t
    }
}

/// Dickson's criterion. Revalidates closure from the stored matrices, per
/// the contract that non-closed input is an error rather than a wrong
/// answer.
pub fn is_semisimple(alg: &StructureAlgebra) -> Result<bool> {
    let n = alg.basis.first().map_or(0, |m| m.nrows());
    let mut space = RowSpace::new(n * n);
    for m in &alg.basis {
        space.insert(&m.flatten());
    }
    if space.rank() != alg.dim() {
        return Err(Error::NotClosed);
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let prod = &alg.basis[i] * &alg.basis[j];
            if !space.contains(&prod.flatten()) {
                return Err(Error::NotClosed);
            }
        }
    }
    let t = alg.trace_form();
    Ok(t.rank() == alg.dim())
}

/// Trace-form verdict straight from a span closure (shared with the
/// quotient-algebra pipeline).
pub fn trace_form_nondegenerate(closure: &SpanClosure) -> Result<bool> {
    let alg = StructureAlgebra::from_closure(closure.clone());
    let t = alg.trace_form();
    Ok(t.rank() == alg.dim())
}

/// Everything the span pipeline produces for one lattice.
#[derive(Debug, Clone)]
pub struct LatticeAnalysis {
    pub cosets: Vec<CosetMin>,
    pub modules: Vec<LatticeModule>,
    pub support: Vec<LatticeVec>,
    pub algebra: StructureAlgebra,
}

/// Builds every module M^lambda (one per coset), assembles block-diagonal
/// generators, and closes their span.
pub fn analyze(lat: &GramLattice) -> Result<LatticeAnalysis> {
    let cosets = min_coset_reps(lat);
    let support = support_set(lat);
    let eps = make_cocycle(lat);
    let modules: Vec<LatticeModule> = cosets
        .iter()
        .map(|c| build_module_with(lat, &eps, &support, &c.rep))
        .collect::<Result<_>>()?;

    let mut generators: Vec<QMat> = Vec::new();
    for i in 0..lat.rank() {
        generators.push(QMat::block_diag(
            &modules.iter().map(|m| m.h_action[i].clone()).collect::<Vec<_>>(),
        ));
    }
    for beta in &support {
        generators.push(QMat::block_diag(
            &modules.iter().map(|m| m.e_matrix(beta)).collect::<Vec<_>>(),
        ));
    }
    let total_dim: usize = modules.iter().map(|m| m.dim()).sum();
    let closure = close_span(&generators, total_dim);
    Ok(LatticeAnalysis {
        cosets,
        modules,
        support,
        algebra: StructureAlgebra::from_closure(closure),
    })
}

/// The operator span of the lattice algebra on the sum of all M^lambda.
pub fn algebra_span(lat: &GramLattice) -> Result<StructureAlgebra> {
    Ok(analyze(lat)?.algebra)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationVerdict {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    /// Coordinates of the first failure, when any.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relations: Vec<RelationVerdict>,
    pub all_pass: bool,
}

struct RelationTally {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl RelationTally {
    fn new(name: &'static str) -> Self {
        RelationTally {
            name,
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn verdict(self) -> RelationVerdict {
        RelationVerdict {
            name: self.name.to_string(),
            checked: self.checked,
            pass: self.failure.is_none(),
            counterexample: self.failure,
        }
    }
}

/// Exact matrix verification of the defining relations of the lattice
/// algebra on every module: identity at zero, commuting Cartans, the
/// Cartan/E commutator, the Cartan annihilator, vanishing products at
/// positive pairing, and the binomial product rule at nonpositive pairing
/// with the Cartan polynomial factor applied on the source side.
pub fn verify_relations(lat: &GramLattice) -> Result<RelationReport> {
    let analysis = analyze(lat)?;
    verify_relations_on(lat, &analysis)
}

pub fn verify_relations_on(lat: &GramLattice, analysis: &LatticeAnalysis) -> Result<RelationReport> {
    let eps = make_cocycle(lat);
    let mut e0 = RelationTally::new("E_0 = 1");
    let mut hh = RelationTally::new("Cartan elements commute");
    let mut he = RelationTally::new("h E_b - E_b h = <h,b> E_b");
    let mut annih = RelationTally::new("(b - <b,b>/2) E_b = 0");
    let mut positive = RelationTally::new("E_a E_b = 0 when <a,b> > 0");
    let mut product = RelationTally::new("E_a E_b = eps(a,b) E_(a+b) C(a + <a,a>/2, -<a,b>)");

    for module in &analysis.modules {
        let n = module.dim();
        let zero_vec = vec![0i64; lat.rank()];
        e0.record(module.e_matrix(&zero_vec) == QMat::identity(n), || {
            format!("lambda = {:?}", module.lambda)
        });

        for i in 0..lat.rank() {
            for j in 0..lat.rank() {
                let ij = &module.h_action[i] * &module.h_action[j];
                let ji = &module.h_action[j] * &module.h_action[i];
                hh.record(ij == ji, || format!("h_{i}, h_{j} on {:?}", module.lambda));
            }
        }

        for beta in &analysis.support {
            let e_b = module.e_matrix(beta);
            for i in 0..lat.rank() {
                let mut basis_dir = vec![0i64; lat.rank()];
                basis_dir[i] = 1;
                let lhs = &(&module.h_action[i] * &e_b) - &(&e_b * &module.h_action[i]);
                let rhs = e_b.scale(&rat_int(lat.inner_int(&basis_dir, beta)));
                he.record(lhs == rhs, || {
                    format!("h_{i}, beta = {beta:?}, lambda = {:?}", module.lambda)
                });
            }

            let half_norm = rat(lat.norm_int(beta), 2);
            let cartan_shifted = &module.cartan_int(beta) - &QMat::identity(n).scale(&half_norm);
            annih.record((&cartan_shifted * &e_b).is_zero(), || {
                format!("beta = {beta:?}, lambda = {:?}", module.lambda)
            });

            for beta2 in &analysis.support {
                let pairing = lat.inner_int(beta, beta2);
                let e_b2 = module.e_matrix(beta2);
                let lhs = &e_b * &e_b2;
                if pairing > 0 {
                    positive.record(lhs.is_zero(), || {
                        format!("a = {beta:?}, b = {beta2:?}, lambda = {:?}", module.lambda)
                    });
                } else {
                    let sum: LatticeVec = beta.iter().zip(beta2).map(|(a, b)| a + b).collect();
                    let e_sum = module.e_matrix(&sum);
                    // binomial factor evaluated on the source weight:
                    // rightmost, diagonal in the u_alpha basis
                    let r = (-pairing) as usize;
                    let factor = module
                        .cartan_int(beta)
                        .map_diagonal(|x| binom_int(&(x + &half_norm), r));
                    let sign = rat_int(eps.eval(beta, beta2));
                    let rhs = (&e_sum * &factor).scale(&sign);
                    product.record(lhs == rhs, || {
                        format!("a = {beta:?}, b = {beta2:?}, lambda = {:?}", module.lambda)
                    });
                }
            }
        }
    }

    let relations: Vec<RelationVerdict> = vec![
        e0.verdict(),
        hh.verdict(),
        he.verdict(),
        annih.verdict(),
        positive.verdict(),
        product.verdict(),
    ];
    let all_pass = relations.iter().all(|r| r.pass);
    Ok(RelationReport { relations, all_pass })
}

/// JSON report of the full lattice pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub det: i64,
    pub invariant_factors: Vec<i64>,
    pub modules: Vec<ModuleEntry>,
    pub algebra_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semisimple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations_verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub lambda: Vec<String>,
    pub dim: usize,
    pub min_norm: String,
}

/// `analyze` level report; `verify` additionally runs the relation checks
/// and the trace form.
pub fn lattice_report(lat: &GramLattice, verify: bool) -> Result<LatticeReport> {
    let analysis = analyze(lat)?;
    let (factors, _) = lat.discriminant_group();
    let (semisimple, relations_verified) = if verify {
        let ss = is_semisimple(&analysis.algebra)?;
        let rel = verify_relations_on(lat, &analysis)?;
        (Some(ss), Some(rel.all_pass))
    } else {
        (None, None)
    };
    Ok(LatticeReport {
        det: lat.det(),
        invariant_factors: factors,
        modules: analysis
            .cosets
            .iter()
            .zip(&analysis.modules)
            .map(|(c, m)| ModuleEntry {
                lambda: c.rep.iter().map(rat_to_string).collect(),
                dim: m.dim(),
                min_norm: rat_to_string(&c.min_norm),
            })
            .collect(),
        algebra_dim: analysis.algebra.dim(),
        semisimple,
        relations_verified,
    })
}
