//! Exact linear algebra over a prime field.
//!
//! Dense [`Mat`] and canonical [`Subspace`] values for the public API, plus
//! the sparse [`Echelon`] used by the syzygy engine.

pub mod field;
pub mod mat;
pub mod sparse;
pub mod subspace;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME};
pub use mat::{kernel_basis, rref, solve, Mat, Rref};
pub use sparse::{kernel_of_images, Echelon, SparseVec};
pub use subspace::Subspace;
