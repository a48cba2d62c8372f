//! Product rules on `R^3` in spherical coordinates, the Fourier transform of
//! the Newton potential slice and the moment identities built on them.

use std::f64::consts::PI;

use super::gamma::{prop32_exact, MomentValue};
use super::gauss::gauss_legendre;
use super::QuadratureResult;
use crate::error::{Error, Result};
use crate::kernel::newton_potential;
use crate::polyfrac::CompiledRadial;

/// How the integrand decays as `|x| -> infinity`; selects the radial map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayHint {
    /// Roughly `e^{-rate |x|}`: composite Gauss–Legendre panels on
    /// `[0, 80/rate]`; the discarded tail is below `e^{-80}`.
    Exponential { rate: f64 },
    /// A negative power of `|x|`: `r = scale * u / (1 - u)` on `(0, 1)`.
    Algebraic { scale: f64 },
}

impl DecayHint {
    fn validate(&self) -> Result<()> {
        let v = match *self {
            DecayHint::Exponential { rate } => rate,
            DecayHint::Algebraic { scale } => scale,
        };
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidParameter(format!("decay parameter must be positive, got {v}")));
        }
        Ok(())
    }

    /// Radial nodes `r_i` and weights on `[0, infinity)` (no `r^2` factor).
    pub fn radial_rule(&self, n: usize) -> Vec<(f64, f64)> {
        match *self {
            DecayHint::Exponential { rate } => {
                const PANEL: usize = 16;
                let panels = n.div_ceil(PANEL).max(1);
                let g = gauss_legendre(PANEL);
                let width = 80.0 / rate / panels as f64;
                (0..panels)
                    .flat_map(|j| {
                        let a = j as f64 * width;
                        g.on_interval(a, a + width).collect::<Vec<_>>()
                    })
                    .collect()
            }
            DecayHint::Algebraic { scale } => gauss_legendre(n)
                .on_interval(0.0, 1.0)
                .map(|(u, w)| (scale * u / (1.0 - u), w * scale / ((1.0 - u) * (1.0 - u))))
                .collect(),
        }
    }
}

/// Points of the unit sphere `S^2` with weights summing to `4 pi`:
/// Gauss–Legendre in `cos(theta)` and the trapezoid rule in `phi`.
pub fn sphere_rule(n_theta: usize) -> Vec<([f64; 3], f64)> {
    let g = gauss_legendre(n_theta);
    let n_phi = 2 * n_theta;
    let dphi = 2.0 * PI / n_phi as f64;
    let mut out = Vec::with_capacity(n_theta * n_phi);
    for (c, w) in g.nodes.iter().zip(&g.weights) {
        let s = (1.0 - c * c).sqrt();
        for j in 0..n_phi {
            let phi = (j as f64 + 0.5) * dphi;
            out.push(([*c, s * phi.cos(), s * phi.sin()], w * dphi));
        }
    }
    out
}

/// Tensor grid on `R^3` with quadrature weights including `r^2`.
pub fn spherical_grid(hint: DecayHint, n_radial: usize, n_theta: usize) -> Vec<([f64; 3], f64)> {
    let sphere = sphere_rule(n_theta);
    let mut out = Vec::with_capacity(n_radial * sphere.len());
    for (r, wr) in hint.radial_rule(n_radial) {
        for (d, wd) in &sphere {
            out.push(([r * d[0], r * d[1], r * d[2]], wr * r * r * wd));
        }
    }
    out
}

/// Refinement controls for [`integrate_r3`].
#[derive(Debug, Clone, Copy)]
pub struct R3Options {
    /// Relative tolerance on the value.
    pub tol: f64,
    /// Finest refinement level tried; level `L` has `32 * 2^L` radial and
    /// `8 * 2^L` polar nodes.
    pub max_level: u32,
}

impl Default for R3Options {
    fn default() -> Self {
        R3Options { tol: 1e-10, max_level: 4 }
    }
}

/// `int_{R^3} f(x) dx` by nested spherical product rules, doubling the
/// node counts until two successive levels agree.
///
/// The error estimate is the difference between the last two levels. A
/// result is also accepted when that difference is below `1e-13` of
/// `int |f|`, which is the floating-point floor for integrals that cancel.
pub fn integrate_r3(f: impl Fn(&[f64; 3]) -> f64, hint: DecayHint, opts: R3Options) -> Result<QuadratureResult<f64>> {
    hint.validate()?;
    let mut previous: Option<f64> = None;
    let mut n_evals = 0u64;
    let mut best = (f64::NAN, f64::INFINITY);
    for level in 0..=opts.max_level {
        let grid = spherical_grid(hint, 32 << level, 8 << level);
        n_evals += grid.len() as u64;
        let (mut sum, mut abs_sum) = (0.0, 0.0);
        for (x, w) in &grid {
            let v = w * f(x);
            sum += v;
            abs_sum += v.abs();
        }
        if !sum.is_finite() {
            return Err(Error::NonIntegrable(format!("non-finite sum at level {level}")));
        }
        if let Some(prev) = previous {
            let err = (sum - prev).abs();
            best = (sum, err);
            if err <= opts.tol * sum.abs() || err <= 1e-13 * abs_sum {
                return Ok(QuadratureResult { value: sum, error_estimate: err, n_evals, seed: 0 });
            }
        }
        previous = Some(sum);
    }
    Err(Error::NonConvergence { best: best.0, error: best.1 })
}

/// `N^(rho) = (pi / rho) e^{-2 pi x0 rho}`, the Fourier transform in
/// `(x1, x2, x3)` of `1 / (x0^2 + |x'|^2)`.
pub fn fourier_newton(x0: f64, rho: f64) -> Result<f64> {
    if !(x0 > 0.0 && rho > 0.0) {
        return Err(Error::InvalidParameter(format!("x0 and rho must be positive (got {x0}, {rho})")));
    }
    Ok(PI / rho * (-2.0 * PI * x0 * rho).exp())
}

/// Direct numerical Fourier transform of the slice `1 / (x0^2 + |xi|^2)`.
///
/// For a radial function on `R^3` the transform reduces to
/// `(2 / rho) int_0^inf r sin(2 pi rho r) / (x0^2 + r^2) dr`. The
/// oscillatory tail is summed over half periods and the alternating partial
/// sums are accelerated by repeated averaging.
pub fn fourier_newton_numeric(x0: f64, rho: f64) -> Result<QuadratureResult<f64>> {
    fourier_newton(x0, rho)?;
    const HALF_PERIODS: usize = 400;
    const AVERAGING: usize = 40;
    let h = 1.0 / (2.0 * rho);
    let g = gauss_legendre(24);
    let f = |r: f64| r * (2.0 * PI * rho * r).sin() / (x0 * x0 + r * r);
    let mut partial = Vec::with_capacity(HALF_PERIODS);
    let mut acc = 0.0;
    for k in 0..HALF_PERIODS {
        acc += g.integrate(k as f64 * h, (k + 1) as f64 * h, f);
        partial.push(acc);
    }
    let mut seq = partial[HALF_PERIODS - AVERAGING - 2..].to_vec();
    let mut last_two = (0.0, 0.0);
    for _ in 0..AVERAGING {
        seq = seq.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        last_two = (seq[seq.len() - 2], seq[seq.len() - 1]);
    }
    let value = 2.0 / rho * last_two.1;
    let error_estimate = 2.0 / rho * (last_two.1 - last_two.0).abs();
    Ok(QuadratureResult { value, error_estimate, n_evals: (HALF_PERIODS * 24) as u64, seed: 0 })
}

/// Multi-index of a partial derivative in `(x0, x1, x2, x3)`.
pub type MultiIndex = [u32; 4];

fn order(p: &MultiIndex) -> u32 {
    p.iter().sum()
}

/// The right-hand side of the Parseval identity for
/// `int_{R^3} d^p N d^q N dx1 dx2 dx3` at fixed `x0`, reduced to a single
/// moment integral: returns `(sign * 2^{a+g} pi^{a+g+2}, moment)` so the
/// value is `prefactor * moment(4 pi x0)`.
pub fn prop31_rhs_parts(p: &MultiIndex, q: &MultiIndex) -> Result<(f64, MomentValue)> {
    let (alpha, gamma) = (order(p), order(q));
    let l = [p[1] + q[1], p[2] + q[2], p[3] + q[3]];
    let moment = prop32_exact((p[0] + q[0]) as i32 - 2, l)?;
    let imag: u32 = l.iter().sum();
    // (-1)^{p0 + gamma} i^{imag}; only even `imag` survives the moment.
    let mut sign = if (p[0] + gamma).is_multiple_of(2) { 1.0 } else { -1.0 };
    if imag % 4 == 2 {
        sign = -sign;
    }
    let pre = sign * 2f64.powi((alpha + gamma) as i32) * PI.powi((alpha + gamma + 2) as i32);
    Ok((pre, moment))
}

pub fn prop31_rhs(p: &MultiIndex, q: &MultiIndex, x0: f64) -> Result<f64> {
    if !(x0 > 0.0) {
        return Err(Error::InvalidParameter(format!("x0 must be positive, got {x0}")));
    }
    let (pre, m) = prop31_rhs_parts(p, q)?;
    Ok(pre * m.eval(4.0 * PI * x0))
}

/// Outcome of one Parseval-identity comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct Prop31Report {
    pub p: MultiIndex,
    pub q: MultiIndex,
    pub x0: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `sqrt(rhs(p,p) rhs(q,q))`, the Cauchy–Schwarz bound on `|lhs|`.
    pub scale: f64,
    pub error_estimate: f64,
    pub n_evals: u64,
    pub tol: f64,
    pub pass: bool,
}

impl Prop31Report {
    /// Relative deviation, measured against `scale` when the exact value is 0.
    pub fn deviation(&self) -> f64 {
        let denom = if self.rhs == 0.0 { self.scale } else { self.rhs.abs() };
        (self.lhs - self.rhs).abs() / denom
    }
}

fn derivative_of_newton(p: &MultiIndex) -> CompiledRadial {
    newton_potential().deriv_multi(p).compile()
}

fn make_report(p: MultiIndex, q: MultiIndex, x0: f64, lhs: f64, err: f64, n_evals: u64, tol: f64) -> Result<Prop31Report> {
    let rhs = prop31_rhs(&p, &q, x0)?;
    let scale = (prop31_rhs(&p, &p, x0)? * prop31_rhs(&q, &q, x0)?).sqrt();
    let mut r = Prop31Report { p, q, x0, lhs, rhs, scale, error_estimate: err, n_evals, tol, pass: false };
    r.pass = r.deviation() <= tol;
    Ok(r)
}

/// Compares both sides of the Parseval identity for one pair of
/// multi-indices at height `x0`.
pub fn prop31_check(p: MultiIndex, q: MultiIndex, x0: f64, tol: f64) -> Result<Prop31Report> {
    if order(&p) > 5 || order(&q) > 5 {
        return Err(Error::InvalidParameter("derivative orders above 5 are not supported".into()));
    }
    let (fp, fq) = (derivative_of_newton(&p), derivative_of_newton(&q));
    let lhs = integrate_r3(
        |x| {
            let y = [x0, x[0], x[1], x[2]];
            fp.eval(&y) * fq.eval(&y)
        },
        DecayHint::Algebraic { scale: x0 },
        R3Options { tol: tol * 1e-3, max_level: 5 },
    )?;
    make_report(p, q, x0, lhs.value, lhs.error_estimate, lhs.n_evals, tol)
}

/// All multi-indices with `|p| <= max_order`.
pub fn multi_indices(max_order: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for a in 0..=max_order {
        for b in 0..=max_order - a {
            for c in 0..=max_order - a - b {
                for d in 0..=max_order - a - b - c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// [`prop31_check`] for every pair with `|p|, |q| <= max_order`, sharing
/// one pair of nested grids across all pairs.
pub fn prop31_sweep(max_order: u32, x0: f64, tol: f64) -> Result<Vec<Prop31Report>> {
    if max_order > 5 {
        return Err(Error::InvalidParameter("derivative orders above 5 are not supported".into()));
    }
    if !(x0 > 0.0) {
        return Err(Error::InvalidParameter(format!("x0 must be positive, got {x0}")));
    }
    let idx = multi_indices(max_order);
    let funcs: Vec<CompiledRadial> = idx.iter().map(derivative_of_newton).collect();
    let hint = DecayHint::Algebraic { scale: x0 };
    let levels = [(96, 12), (192, 16)];
    let mut sums: Vec<Vec<f64>> = Vec::new();
    let mut n_evals = 0u64;
    for (nr, nt) in levels {
        let grid = spherical_grid(hint, nr, nt);
        n_evals += grid.len() as u64;
        let values: Vec<Vec<f64>> = funcs
            .iter()
            .map(|f| grid.iter().map(|(x, _)| f.eval(&[x0, x[0], x[1], x[2]])).collect())
            .collect();
        let weights: Vec<f64> = grid.iter().map(|(_, w)| *w).collect();
        let mut level = Vec::with_capacity(idx.len() * idx.len());
        for vi in &values {
            for vj in &values {
                level.push(vi.iter().zip(vj).zip(&weights).map(|((a, b), w)| a * b * w).sum());
            }
        }
        sums.push(level);
    }
    let mut out = Vec::with_capacity(idx.len() * idx.len());
    for (i, p) in idx.iter().enumerate() {
        for (j, q) in idx.iter().enumerate() {
            let k = i * idx.len() + j;
            let (coarse, fine) = (sums[0][k], sums[1][k]);
            out.push(make_report(*p, *q, x0, fine, (fine - coarse).abs(), n_evals, tol)?);
        }
    }
    Ok(out)
}
