//! Exact homology of finite-dimensional algebras over ℚ and prime fields.
//!
//! The library computes second Lie algebra homology H₂(L), first cyclic
//! homology HC₁(A), the symmetric-square coinvariants B(L), and verifies the
//! decomposition identities that relate them for current algebras L ⊗ A,
//! tensor products, and matrix algebras.  All arithmetic is exact; every
//! verification computes both sides of an identity independently.
//!
//! Start with the runnable examples, one per capability:
//!
//! ```text
//! cargo run --example homology_basics      # H₂, essential H₂, B(L) on the catalog
//! cargo run --example current_algebras     # the H₂(L ⊗ A) decomposition, both sides
//! cargo run --example cyclic_homology      # HC₁, cyclic spans, the tensor-product rule
//! cargo run --example exact_sequences      # the five-term sequence and its relatives
//! cargo run --example tensor_bracket       # H₂ of (A ⊗ B)⁽⁻⁾ and the matrix identities
//! cargo run --example algebra_files        # the on-disk algebra format
//! cargo run --example verification_grid    # the full verification grid
//! ```
//!
//! The same capabilities are exposed by the `lieh2` binary; see the README.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cyclic;
pub mod field;
pub mod format;
pub mod grid;
pub mod homology;
pub mod linalg;
pub mod multilinear;
pub mod sequences;
pub mod subspace;
pub mod verify;

pub use algebra::{AlgebraKind, AxiomReport, BasedAlgebra, ProductMode};
pub use field::{FieldSpec, Scalar};
pub use linalg::{SparseMatrix, SparseVec};
pub use subspace::{QuotientSpace, Subspace};

/// Error type shared across the crate.  Every variant maps to CLI exit code
/// 2 (bad input); verification mismatches are not errors but report fields.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid algebra: {0}")]
    Algebra(String),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// Guardrail shared by every verifier: the decomposition identities
    /// assume the characteristic is not 2.
    pub(crate) fn char_two(what: &str) -> Error {
        Error::Unsupported(format!("{what} requires characteristic ≠ 2"))
    }
}
