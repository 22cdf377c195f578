//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by kernel evaluation, classification, and the BCH engine.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A scalar argument was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFiniteInput(String),

    /// The kernel f(u,v) was evaluated on its non-removable singular set
    /// (e^u = e^v with u != v).
    #[error("degenerate kernel input: e^u = e^v with u != v (u = {u}, v = {v})")]
    DegenerateKernelInput { u: String, v: String },

    /// A commutator failed to lie in the required span.
    #[error("span failure: commutator has component {component} (coefficient magnitude {magnitude:.3e}) outside the allowed span")]
    SpanFailure { component: String, magnitude: f64 },

    /// The extracted parameters violate the Jacobi linear system.
    #[error("Jacobi identity violated: residuals {residuals:?} exceed tolerance {tol:.3e}")]
    JacobiViolation { residuals: [f64; 4], tol: f64 },

    /// Classification landed within the ambiguity band of a case boundary.
    #[error("classification ambiguous near a case boundary: candidates {candidates:?} (quantity {quantity} has magnitude {magnitude:.3e})")]
    BoundaryAmbiguity {
        candidates: Vec<String>,
        quantity: String,
        magnitude: f64,
    },

    /// The triple classified into a type without an implemented alpha solver.
    #[error("unsupported commutator-algebra type {subcase}: closed-form alpha solutions exist here only for 1c-i, 4, and 5")]
    UnsupportedType { subcase: String },

    /// The linear system for (m, n, p, e) has no solution for these inputs.
    #[error("inconsistent Jacobi system: {0}")]
    InconsistentSystem(String),

    /// A type-box formula hit a vanishing denominator.
    #[error("degenerate case in the {context} formula: {detail}")]
    DegenerateCase { context: String, detail: String },

    /// Neither quadratic branch of the type-4 alpha equation survived the residual gate.
    #[error("no valid branch: both type-4 quadratic roots fail the alpha-equation residual gate (residuals {0:.3e}, {1:.3e})")]
    NoBranch(f64, f64),

    /// The E-H-E split condition has no usable root.
    #[error("no split solution: {0}")]
    NoSplitSolution(String),

    /// The sandwich discriminant vanished, so the two lambda roots coincide.
    #[error("coincident quadratic roots: discriminant magnitude {0:.3e}")]
    CoincidentRoots(f64),

    /// A root-string configuration outside the supported catalog was requested.
    #[error("unsupported root string: {0}")]
    UnsupportedRootString(String),

    /// A named root is not in the algebra's root system (or other root-level misuse).
    #[error("root error: {0}")]
    RootError(String),

    /// An element references a generator the algebra does not have.
    #[error("foreign generator: index {index} out of range for algebra {algebra}")]
    ForeignGenerator { index: usize, algebra: String },

    /// Catalog name outside {sl2, sl3, so5}.
    #[error("unsupported algebra name: {0}")]
    UnsupportedAlgebra(String),

    /// Algebra file failed to load or violated a load-time invariant.
    #[error("algebra load error: {0}")]
    AlgebraLoad(String),

    /// Matrix dimension above the supported desk scale.
    #[error("matrix dimension {0} exceeds the supported limit of {1}")]
    DimensionLimit(usize, usize),

    /// Principal matrix logarithm does not exist (spectrum on the closed negative real axis)
    /// or the inverse scaling-and-squaring iteration failed.
    #[error("matrix logarithm branch error: {0}")]
    LogBranch(String),

    /// Anything the Dynkin evaluator cannot accept.
    #[error("oracle error: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
