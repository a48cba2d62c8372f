//! Seeded Monte Carlo integration with importance sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, StandardNormal};
use rayon::prelude::*;

use super::QuadratureResult;
use crate::error::{Error, Result};

/// Samples per independent random stream. Fixed so the draws depend only
/// on the seed, never on how chunks are scheduled.
const CHUNK: u64 = 1 << 14;

/// A proposal distribution on `R^d` with a known density.
pub trait Sampler: Sync {
    fn dim(&self) -> usize;
    /// Writes one draw into `x` and returns the density at it.
    fn sample(&self, rng: &mut ChaCha8Rng, x: &mut [f64]) -> f64;
}

/// Density proportional to `(1 + |x|^2)^{-a}` on `R^d`, `a > d/2`.
#[derive(Debug, Clone)]
pub struct PowerLawSampler {
    dim: usize,
    exponent: f64,
    log_norm: f64,
    beta: Beta<f64>,
}

impl PowerLawSampler {
    pub fn new(dim: usize, exponent: f64) -> Result<Self> {
        let half = dim as f64 / 2.0;
        if dim == 0 || !(exponent > half) {
            return Err(Error::InvalidParameter(format!(
                "power-law sampler needs a > d/2 (d = {dim}, a = {exponent})"
            )));
        }
        // |x|^2 = b / (1 - b) with b ~ Beta(d/2, a - d/2).
        let beta = Beta::new(half, exponent - half).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        // int (1+|x|^2)^{-a} dx = pi^{d/2} Gamma(a - d/2) / Gamma(a)
        let log_norm = half * std::f64::consts::PI.ln() + libm::lgamma(exponent - half) - libm::lgamma(exponent);
        Ok(PowerLawSampler { dim, exponent, log_norm, beta })
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn density(&self, x: &[f64]) -> f64 {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        (-self.exponent * r2.ln_1p() - self.log_norm).exp()
    }
}

impl Sampler for PowerLawSampler {
    fn dim(&self) -> usize {
        self.dim
    }

    fn sample(&self, rng: &mut ChaCha8Rng, x: &mut [f64]) -> f64 {
        let b = self.beta.sample(rng);
        let r = (b / (1.0 - b)).sqrt();
        let mut n2 = 0.0;
        for v in x.iter_mut() {
            *v = rng.sample(StandardNormal);
            n2 += *v * *v;
        }
        let s = r / n2.sqrt();
        for v in x.iter_mut() {
            *v *= s;
        }
        self.density(x)
    }
}

/// Independent blocks of coordinates, each drawn from its own sampler.
pub struct ProductSampler {
    parts: Vec<Box<dyn Sampler>>,
}

impl ProductSampler {
    pub fn new(parts: Vec<Box<dyn Sampler>>) -> Self {
        ProductSampler { parts }
    }
}

impl Sampler for ProductSampler {
    fn dim(&self) -> usize {
        self.parts.iter().map(|p| p.dim()).sum()
    }

    fn sample(&self, rng: &mut ChaCha8Rng, x: &mut [f64]) -> f64 {
        let mut offset = 0;
        let mut density = 1.0;
        for p in &self.parts {
            let d = p.dim();
            density *= p.sample(rng, &mut x[offset..offset + d]);
            offset += d;
        }
        density
    }
}

/// `int f dx` for vector-valued `f` from `n_samples` weighted draws.
///
/// Chunk `k` uses the ChaCha stream `k` of `seed`, and chunk sums are
/// combined in index order, so the value is reproducible for a given seed
/// regardless of the thread count. The error estimate is the largest
/// componentwise standard error.
pub fn mc_integrate_vec(
    f: impl Fn(&[f64], &mut [f64]) + Sync,
    components: usize,
    sampler: &dyn Sampler,
    n_samples: u64,
    seed: u64,
) -> Result<QuadratureResult<Vec<f64>>> {
    if n_samples < 2 {
        return Err(Error::InvalidParameter("need at least two samples".into()));
    }
    let chunks = n_samples.div_ceil(CHUNK);
    let d = sampler.dim();
    let partial: Vec<Result<(Vec<f64>, Vec<f64>)>> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let count = CHUNK.min(n_samples - k * CHUNK);
            let mut x = vec![0.0; d];
            let mut y = vec![0.0; components];
            let mut sum = vec![0.0; components];
            let mut sq = vec![0.0; components];
            for _ in 0..count {
                let p = sampler.sample(&mut rng, &mut x);
                if !(p > 0.0 && p.is_finite()) {
                    return Err(Error::InvalidWeight(format!("sampler density {p} at {x:?}")));
                }
                f(&x, &mut y);
                for ((s, q), v) in sum.iter_mut().zip(sq.iter_mut()).zip(&y) {
                    let w = v / p;
                    if !w.is_finite() {
                        return Err(Error::InvalidWeight(format!("non-finite weighted value at {x:?}")));
                    }
                    *s += w;
                    *q += w * w;
                }
            }
            Ok((sum, sq))
        })
        .collect();
    let mut sum = vec![0.0; components];
    let mut sq = vec![0.0; components];
    for part in partial {
        let (s, q) = part?;
        for i in 0..components {
            sum[i] += s[i];
            sq[i] += q[i];
        }
    }
    let n = n_samples as f64;
    let value: Vec<f64> = sum.iter().map(|s| s / n).collect();
    let error_estimate = value
        .iter()
        .zip(&sq)
        .map(|(m, q)| ((q / n - m * m).max(0.0) / (n - 1.0)).sqrt())
        .fold(0.0, f64::max);
    Ok(QuadratureResult { value, error_estimate, n_evals: n_samples, seed })
}

/// Scalar form of [`mc_integrate_vec`].
pub fn mc_integrate(
    f: impl Fn(&[f64]) -> f64 + Sync,
    sampler: &dyn Sampler,
    n_samples: u64,
    seed: u64,
) -> Result<QuadratureResult<f64>> {
    let r = mc_integrate_vec(|x, out| out[0] = f(x), 1, sampler, n_samples, seed)?;
    Ok(QuadratureResult { value: r.value[0], error_estimate: r.error_estimate, n_evals: r.n_evals, seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn normalisation_constant() {
        let s = PowerLawSampler::new(4, 5.0).unwrap();
        assert!((s.log_norm.exp() - PI * PI / 12.0).abs() < 1e-13);
        assert!(PowerLawSampler::new(4, 2.0).is_err());
    }

    #[test]
    fn half_space_has_half_the_mass() {
        let s = PowerLawSampler::new(4, 5.0).unwrap();
        let r = mc_integrate(|x| if x[0] > 0.0 { s.density(x) } else { 0.0 }, &s, 200_000, 7).unwrap();
        assert!((r.value - 0.5).abs() < 4.0 * r.error_estimate + 1e-12, "{r:?}");
    }

    #[test]
    fn known_integral_within_error() {
        // int_{R^3} (1+|x|^2)^{-3} dx = pi^{3/2} Gamma(3/2) / Gamma(3) = pi^2 / 4
        let s = PowerLawSampler::new(3, 2.5).unwrap();
        let r = mc_integrate(|x| (1.0 + x.iter().map(|v| v * v).sum::<f64>()).powi(-3), &s, 300_000, 11).unwrap();
        assert!((r.value - PI * PI / 4.0).abs() < 5.0 * r.error_estimate, "{r:?}");
    }

    #[test]
    fn reproducible_for_a_seed() {
        let s = ProductSampler::new(vec![
            Box::new(PowerLawSampler::new(2, 2.0).unwrap()),
            Box::new(PowerLawSampler::new(3, 2.5).unwrap()),
        ]);
        let f = |x: &[f64]| x[0] * x[0] / (1.0 + x.iter().map(|v| v.powi(4)).sum::<f64>());
        let a = mc_integrate(f, &s, 50_000, 3).unwrap();
        let b = mc_integrate(f, &s, 50_000, 3).unwrap();
        let c = mc_integrate(f, &s, 50_000, 4).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_ne!(a.value.to_bits(), c.value.to_bits());
    }

    #[test]
    fn invalid_values_are_rejected() {
        let s = PowerLawSampler::new(2, 2.0).unwrap();
        assert!(matches!(mc_integrate(|_| f64::NAN, &s, 10, 0), Err(Error::InvalidWeight(_))));
    }
}
