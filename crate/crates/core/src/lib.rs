//! Exact homological computations over short local algebras, i.e. local
//! algebras `A` with `J^3 = 0`, over a prime field.
//!
//! The core objects are [`ShortLocalAlgebra`] and [`ModulePresentation`];
//! [`resolution`] computes syzygies, Betti numbers and the Koszul and
//! alignedness checks, [`spectral`] the closed-form predictions from the
//! Hilbert type.

pub mod algebra;
pub mod amodule;
pub mod conca;
pub mod error;
pub mod exactla;
pub mod presets;
pub mod random;
pub mod resolution;
pub mod spectral;
pub mod verify;

pub use algebra::{AlgebraElement, ShortLocalAlgebra};
pub use amodule::{ActionModule, DimensionVector, ModulePresentation};
pub use error::{Error, Result};
