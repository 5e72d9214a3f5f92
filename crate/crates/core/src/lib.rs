//! Exact computer algebra for a family of associative algebras attached to
//! even lattices.
//!
//! The library computes, entirely over the rationals:
//!
//! - the three-generator algebras R(g) for arbitrary g in `Q[x]`, with PBW
//!   normal forms, the central element Omega, its Casimir-style
//!   factorization, finite-dimensional simple modules and their
//!   classification by dimension ([`smith`]);
//! - the semisimple quotients of R(g_k) by the ideal generated by
//!   (1 - 2H)A, with all 2k irreducibles realized by exact matrices and
//!   the algebra dimension 2k + 3 recomputed by span closure ([`rbar`]);
//! - positive-definite even lattices: discriminant groups, minimal coset
//!   representatives, sign cocycles, the irreducible modules M^lambda,
//!   relation verification and a trace-form semisimplicity certificate
//!   ([`lattice`]);
//! - the binomial and Schur-polynomial identities tying the two pictures
//!   together, plus a structural cross-check that the rank-one lattice
//!   pipeline and the quotient pipeline produce the same algebra
//!   ([`zhu`]).
//!
//! No floating point is used anywhere: scalars are arbitrary-precision
//! rationals, polynomial arithmetic is exact, and every verdict the
//! library emits (dimension, semisimplicity, identity) is the result of an
//! exact computation.

pub mod error;
pub mod lattice;
pub mod linalg;
pub mod multipoly;
pub mod poly;
pub mod rat;
pub mod rbar;
pub mod smith;
pub mod zhu;

pub use error::{Error, Result};
pub use lattice::{GramLattice, LatticeModule, StructureAlgebra};
pub use linalg::QMat;
pub use multipoly::{schur_poly, schur_specialize_alt, MultiPoly};
pub use poly::{binom_poly, is_squarefree, poly_gcd, poly_shift, rational_roots, Poly};
pub use rat::Rat;
pub use rbar::{g_k, rbar_dimension, rbar_irreducibles, AlgebraReport, RbarSpec};
pub use smith::{nc::NcElement, SimpleModuleSpec, SmithAlgebra};
pub use zhu::{rank_one_crosscheck, IdentityReport};
