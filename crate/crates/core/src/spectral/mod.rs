//! Spectral radii of `A(G)` and `Q(G)`, the closed-form bounds on them, exact
//! quotient matrices and the family inequalities built on top.
//!
//! Floating-point routines are generic over [`num_traits::Float`]; quotient
//! entries and characteristic polynomials stay exact.

mod bounds;
mod cubic;
pub mod inequalities;
mod matrix;
mod quotient;

pub use bounds::{feng_yu_bound, hong_bound, hong_f};
pub use cubic::{family_charpoly, largest_real_root_cubic, Cubic};
pub use matrix::{
    adjacency_radius, dominant_eigenvalue, signless_laplacian_radius, spectral_report, SpectralReport,
    SymmetricMatrix,
};
pub use quotient::{quotient_matrix, MatrixKind, QuotientMatrix};

/// Default absolute eigenvalue tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
