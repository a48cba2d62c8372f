//! Exact construction of the quaternionic Cauchy–Szegő kernel on the
//! quaternionic Siegel half space, together with the hypercomplex algebra,
//! Heisenberg-group geometry and numerical integration needed to check the
//! integral identities it satisfies.

pub mod error;
pub mod geometry;
pub mod hypercomplex;
pub mod kernel;
pub mod polyfrac;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
pub use hypercomplex::{Algebra, Hypercomplex, Rational, Scalar};
