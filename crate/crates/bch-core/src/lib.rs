//! Closed forms of the Baker-Campbell-Hausdorff formula for centrally
//! extended commutator algebras and for generators of semisimple complex
//! Lie algebras, with every closed form certified against independent
//! numerical oracles.
//!
//! The crate computes W in exp(X)exp(Y) = exp(W) whenever
//! `[X,Y]` = uX + vY + cI, and W in exp(X)exp(Y)exp(Z) = exp(W) for the
//! commutator-algebra types with closed splitting solutions (1c-i, 4, 5).
//! On the Lie-algebra side it ships a catalog of Cartan-Weyl algebras
//! (sl2, sl3, so5) built from faithful matrix representations, the named
//! generator-pair and generator-triple products stated in root data, and a
//! classification of the Jacobi-identity linear system into its thirteen
//! solution types.
//!
//! Verification is first-class: matrix exponentials in the representation
//! certify catalog results, and a truncated graded BCH series inside
//! bracket-closed coefficient spaces certifies abstract parameter-space
//! formulas. Candidate formulas that fail their residual gates are errors,
//! not answers; the witness-mediated pair formula is always reported with
//! its oracle residual because its hypotheses alone do not guarantee it.

pub mod algebra;
pub mod canon;
pub mod closed_forms;
pub mod engine;
pub mod error;
pub mod jacobi;
pub mod linalg;
pub mod oracle;
pub mod scalar;
mod series_table;

pub use algebra::{build_algebra, Algebra, Generator, GeneratorKind, LieElement, Root};
pub use engine::{
    bch_pair, bch_pair_lemma1, bch_triple, find_witness, solve_alpha, AlphaSolution, BCHResult,
    Lemma1Report, TildeParams,
};
pub use error::{Error, Result};
pub use jacobi::{check_jacobi, classify, solve_jacobi, JacobiSolutionFamily, PairParams, TripleParams, TypeTag};
pub use oracle::{dynkin_bch, mat_exp, mat_log, verify_product, AbstractClosure};
pub use scalar::{f_kernel, ghl_coeffs, s_kernel, CScalar};
