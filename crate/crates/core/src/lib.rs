//! Exact verification and exhaustive search for circulant Hadamard matrices.
//!
//! A square ±1 matrix is Hadamard when its rows are pairwise orthogonal. For
//! a circulant matrix the whole question reduces to the first row: the matrix
//! is Hadamard exactly when every nontrivial periodic autocorrelation of the
//! first row vanishes. This crate provides
//!
//! * exact integer row algebra ([`row`]),
//! * periodic autocorrelation and the Hadamard predicate ([`correlation`]),
//! * the eigenvalue and cross-sum identities that constrain candidate rows,
//!   including the interleaved half-row decomposition ([`identities`]),
//! * a floating-point spectral cross-check via the representer polynomial
//!   ([`spectrum`]),
//! * a symmetry-reduced exhaustive search with sound pruning ([`search`]),
//! * the known solutions at orders 1 and 4 ([`known`]),
//! * deterministic JSON/CSV reporting ([`report`]).
//!
//! Everything that can be decided in integers is decided in integers; the
//! floating-point spectrum is a cross-check, never the source of truth.

pub mod correlation;
pub mod error;
pub mod identities;
pub mod known;
pub mod report;
pub mod row;
pub mod search;
pub mod spectrum;

pub use error::Error;
pub use row::{HalfSplit, SignRow};
