//! Exact verification of k-leaf-connectivity.
//!
//! A graph on at least `k + 1` vertices is k-leaf-connected when every
//! k-subset of its vertices is exactly the leaf set of some spanning tree.
//! The crate decides this by search, computes the `(n+k-1)`-closure,
//! evaluates the known edge, degree and spectral sufficient conditions, and
//! builds and recognizes the graph families that are their exceptions.
//!
//! Numerical code is generic over [`num_traits::Float`]; the aliases below fix
//! the scalar to `f64` (and `i64` for exact cubic coefficients).

pub mod closure;
pub mod conditions;
pub mod decider;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod scan;
pub mod spectral;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};

pub type SymmetricMatrixF64 = spectral::SymmetricMatrix<f64>;
pub type SpectralReportF64 = spectral::SpectralReport<f64>;
pub type SpectralThresholdsF64 = conditions::SpectralThresholds<f64>;
pub type CubicF64 = spectral::Cubic<f64>;
/// Exact integer cubic, as returned by [`spectral::family_charpoly`].
pub type ExactCubic = spectral::Cubic<i64>;
