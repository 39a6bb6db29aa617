//! Real right-eigenvalue solver for 2x2 and 3x3 octonionic Hermitian matrices.
//!
//! The right eigenvalue problem `A v = v λ` over the octonions behaves very
//! differently from its complex cousin: a 3x3 octonionic Hermitian (Jordan)
//! matrix has up to **six** real eigenvalues rather than three. They split
//! into two *families* of three, one per root `r` of
//!
//! ```text
//! r² + 4 Φ(a,b,c) r − |[a,b,c]|² = 0
//! ```
//!
//! and each family satisfies the modified characteristic equation
//! `λ³ − (tr A) λ² + σ(A) λ − det A = r`. Within a family the eigenvectors
//! are orthogonal in the generalized sense `(v v†) w = 0`, which is what
//! makes the spectral decomposition `A = Σ λᵢ vᵢ vᵢ†` work.
//!
//! Module map:
//! - [`octonion`]: the scalar type, its Cayley-Dickson product and the
//!   trilinear forms (commutator, associator, Φ, triple cross product);
//! - [`hermitian`]: Hermitian matrix types, Jordan/Freudenthal products,
//!   invariants and the characteristic equation;
//! - [`eigensolve`]: the actual solver (families, eigenvectors, generalized
//!   orthogonality, decomposition);
//! - [`embed`]: an independent brute-force oracle that embeds everything
//!   into real symmetric matrices and diagonalizes with Jacobi rotations;
//! - [`cli`]: the `octeig` command-line front end and its file formats;
//! - [`rng`]: the seeded generator used for reproducible random instances.

pub mod cli;
pub mod eigensolve;
pub mod embed;
pub mod hermitian;
pub mod octonion;
pub mod rng;

mod cubic;

use thiserror::Error;

/// Errors surfaced by the library API.
#[derive(Debug, Error)]
pub enum Error {
    /// Inverting the zero octonion.
    #[error("zero octonion has no inverse")]
    ZeroInverse,
    /// An operation received an input outside its domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The Jacobi eigensolver failed to converge.
    #[error("Jacobi sweep did not converge after {0} sweeps")]
    JacobiNonConvergence(usize),
    /// A solver invariant failed; indicates a genuine defect, not bad input.
    #[error("solver defect: {0}")]
    SolverDefect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
