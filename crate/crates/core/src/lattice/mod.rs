//! Positive-definite even lattices and their algebras: Gram validation,
//! discriminant group, short-vector enumeration, sign cocycles, the
//! irreducible modules M^lambda, and the operator-span realization with
//! relation verification and a semisimplicity certificate.

pub mod cocycle;
pub mod enumerate;
pub mod gram;
pub mod module;
pub mod snf;
pub mod span;

pub use cocycle::{make_cocycle, Cocycle};
pub use enumerate::{delta_set, min_coset_reps, short_vectors, support_set, CosetMin};
pub use gram::{validate_gram, DualVec, GramFile, GramLattice, LatticeVec};
pub use module::{
    build_module, g_alpha_beta, is_signed_partial_permutation, module_equivalence, LatticeModule,
};
pub use span::{
    algebra_span, analyze, is_semisimple, lattice_report, verify_relations, LatticeAnalysis,
    LatticeReport, RelationReport, StructureAlgebra,
};
