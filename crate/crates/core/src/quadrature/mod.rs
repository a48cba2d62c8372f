//! Numerical integration: Gauss rules, exact Gamma arithmetic, spherical
//! product rules on `R^3`, boundary integrals over `H^n x R^3` and seeded
//! Monte Carlo.

pub mod boundary;
pub mod gamma;
pub mod gauss;
pub mod monte_carlo;
pub mod spherical;

use serde::Serialize;

pub use boundary::{integrate_boundary, BoundaryIntegrand, BoundaryOptions};
pub use gamma::{gamma_half, prop32_closed_form, prop32_exact, MomentValue, SqrtPiSeries};
pub use gauss::{gauss_legendre, GaussLegendre};
pub use monte_carlo::{mc_integrate, mc_integrate_vec, PowerLawSampler, ProductSampler, Sampler};
pub use spherical::{fourier_newton, fourier_newton_numeric, integrate_r3, DecayHint, R3Options};

/// A numerical integral together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult<V> {
    pub value: V,
    pub error_estimate: f64,
    pub n_evals: u64,
    /// Seed of the random streams; 0 for deterministic rules.
    pub seed: u64,
}

impl<V: Serialize> QuadratureResult<V> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serialises")
    }
}
