//! Size estimates for the group kernel `K(h) = s(|omega|^2 + e.t)` and
//! boundary `L^p` norms of vertical translates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde_json::json;

use super::flambda::TestFunction;
use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::geometry::{homogeneous_dim, GroupElement, GroupKind};
use crate::hypercomplex::{Algebra, Hypercomplex};
use crate::kernel::{group_kernel, KernelOrder};
use crate::quadrature::boundary::{integrate_boundary, BoundaryIntegrand, BoundaryOptions};

/// Largest observed values of `|K| rho^d`, `|grad_y K| rho^{d+1}` and
/// `|grad_t K| rho^{d+2}` over a sample shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecaySuprema {
    pub kernel: f64,
    pub grad_y: f64,
    pub grad_t: f64,
    pub samples: usize,
}

/// Random group element with `rho(h) = 1`.
fn unit_sphere_element(rng: &mut ChaCha8Rng, n: usize) -> Result<GroupElement<f64>> {
    loop {
        let omega = (0..n)
            .map(|_| Hypercomplex::quaternion(std::array::from_fn(|_| rng.sample(StandardNormal))))
            .collect();
        let t = (0..3).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let h = GroupElement::new(GroupKind::Quaternionic, omega, t)?;
        let rho = h.rho_length();
        if rho > 1e-6 {
            return h.dilate(&(1.0 / rho));
        }
    }
}

fn norm(h: &Hypercomplex<f64>) -> f64 {
    h.norm()
}

/// Samples `samples` elements with `rho` log-uniform in `[rho_min, rho_max]`
/// and records the three normalised suprema. Gradients use central
/// differences with steps `1e-5 rho` in `omega` and `1e-5 rho^2` in `t`.
pub fn decay_suprema(n: usize, samples: usize, rho_min: f64, rho_max: f64, seed: u64) -> Result<DecaySuprema> {
    if !(rho_min > 0.0 && rho_max >= rho_min) {
        return Err(Error::InvalidParameter(format!("invalid shell [{rho_min}, {rho_max}]")));
    }
    let order = KernelOrder::quaternionic(n)?;
    let d = homogeneous_dim(n) as i32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sup = DecaySuprema { kernel: 0.0, grad_y: 0.0, grad_t: 0.0, samples };
    let (lo, hi) = (rho_min.ln(), rho_max.ln());
    for _ in 0..samples {
        let target = if hi > lo { rng.gen_range(lo..hi).exp() } else { rho_min };
        let h = unit_sphere_element(&mut rng, n)?.dilate(&target)?;
        let rho = h.rho_length();
        let k = group_kernel(order, &h, 0.0)?;
        sup.kernel = sup.kernel.max(norm(&k) * rho.powi(d));
        let hy = 1e-5 * rho;
        let mut gy = 0.0;
        for l in 0..n {
            for c in 0..4 {
                let mut plus = h.clone();
                let mut minus = h.clone();
                let mut cp = plus.omega[l].coeffs().to_vec();
                cp[c] += hy;
                plus.omega[l] = Hypercomplex::new(cp)?;
                let mut cm = minus.omega[l].coeffs().to_vec();
                cm[c] -= hy;
                minus.omega[l] = Hypercomplex::new(cm)?;
                let diff = group_kernel(order, &plus, 0.0)?.try_sub(&group_kernel(order, &minus, 0.0)?)?;
                gy += (norm(&diff) / (2.0 * hy)).powi(2);
            }
        }
        sup.grad_y = sup.grad_y.max(gy.sqrt() * rho.powi(d + 1));
        let ht = 1e-5 * rho * rho;
        let mut gt = 0.0;
        for j in 0..3 {
            let mut plus = h.clone();
            let mut minus = h.clone();
            plus.t[j] += ht;
            minus.t[j] -= ht;
            let diff = group_kernel(order, &plus, 0.0)?.try_sub(&group_kernel(order, &minus, 0.0)?)?;
            gt += (norm(&diff) / (2.0 * ht)).powi(2);
        }
        sup.grad_t = sup.grad_t.max(gt.sqrt() * rho.powi(d + 2));
    }
    Ok(sup)
}

/// Compares the suprema over the shells `rho in [1, 10]` and
/// `rho in [10, 100]`; passes when every ratio (larger over smaller) is
/// below 2.
pub fn kernel_decay_check(n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let inner = decay_suprema(n, samples, 1.0, 10.0, seed)?;
    let outer = decay_suprema(n, samples, 10.0, 100.0, seed.wrapping_add(1))?;
    let pairs = [(inner.kernel, outer.kernel), (inner.grad_y, outer.grad_y), (inner.grad_t, outer.grad_t)];
    let worst = pairs
        .iter()
        .map(|&(a, b)| if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() { a.max(b) / a.min(b) } else { f64::INFINITY })
        .fold(1.0, f64::max);
    let evals = 2 * samples as u64 * (1 + 8 * n as u64 + 6);
    Ok(CheckReport::with_deviation(
        format!("kernel_decay/n={n}"),
        json!({"n": n, "samples_per_shell": samples, "seed": seed, "shells": [[1.0, 10.0], [10.0, 100.0]]}),
        json!([inner.kernel, inner.grad_y, inner.grad_t]),
        json!([outer.kernel, outer.grad_y, outer.grad_t]),
        worst - 1.0,
        worst,
        2.0 - f64::EPSILON,
        evals,
    ))
}

/// `|K(delta o h)| = delta^{-d} |K(h)|` on seeded samples.
pub fn kernel_scale_invariance_check(n: usize, samples: usize, deltas: &[f64], seed: u64) -> Result<CheckReport> {
    let order = KernelOrder::quaternionic(n)?;
    let d = homogeneous_dim(n) as i32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let h = unit_sphere_element(&mut rng, n)?.dilate(&rng.gen_range(0.5..3.0))?;
        let k = norm(&group_kernel(order, &h, 0.0)?);
        for &delta in deltas {
            let kd = norm(&group_kernel(order, &h.dilate(&delta)?, 0.0)?);
            worst = worst.max((kd - delta.powi(-d) * k).abs() / (delta.powi(-d) * k));
        }
    }
    Ok(CheckReport::with_deviation(
        format!("kernel_scale_invariance/n={n}"),
        json!({"n": n, "samples": samples, "deltas": deltas, "seed": seed}),
        json!(worst),
        json!(0.0),
        worst,
        worst,
        1e-12,
        (samples * (1 + deltas.len())) as u64,
    ))
}

/// On the `t1` axis `K = s(e1 t1)`, so `|K| |t1|^{d/2}` is constant.
pub fn kernel_axis_check(n: usize) -> Result<CheckReport> {
    let order = KernelOrder::quaternionic(n)?;
    let d = homogeneous_dim(n) as f64;
    let values: Vec<f64> = [0.25, 0.5, 1.0, 2.0, 5.0, -3.0]
        .iter()
        .map(|&t1| {
            let h = GroupElement::new(GroupKind::Quaternionic, vec![Hypercomplex::zero(Algebra::Quaternion); n], vec![t1, 0.0, 0.0])?;
            Ok(norm(&group_kernel(order, &h, 0.0)?) * t1.abs().powf(d / 2.0))
        })
        .collect::<Result<_>>()?;
    let reference = vec![values[2]; values.len()];
    Ok(CheckReport::numeric(format!("kernel_axis/n={n}"), json!({"n": n, "t1": [0.25, 0.5, 1, 2, 5, -3]}), &values, &reference, 1e-12, 6))
}

/// A function on `U_n` that can be evaluated on vertical translates of
/// the boundary.
pub trait BoundaryFunction: Sync {
    fn n(&self) -> usize;
    /// `F` at `(omega', |omega'|^2 + eps + e.t)`.
    fn eval(&self, omega: &[f64], t: &[f64; 3], eps: f64, out: &mut [f64; 4]);
    /// `k` with `|F| = O(|nu|^{-k})` at infinity on the boundary.
    fn decay_order(&self) -> f64;
    fn radial_in_omega(&self) -> bool {
        false
    }
}

impl BoundaryFunction for TestFunction {
    fn n(&self) -> usize {
        self.spec().n
    }

    fn eval(&self, omega: &[f64], t: &[f64; 3], eps: f64, out: &mut [f64; 4]) {
        let x0 = 1.0 + eps + omega.iter().map(|v| v * v).sum::<f64>();
        self.eval_nu_into(&[x0, t[0], t[1], t[2]], out);
    }

    fn decay_order(&self) -> f64 {
        self.spec().decay_order() as f64
    }

    fn radial_in_omega(&self) -> bool {
        true
    }
}

/// A constant function.
#[derive(Debug, Clone, Copy)]
pub struct ConstantFunction {
    pub n: usize,
    pub value: [f64; 4],
}

impl BoundaryFunction for ConstantFunction {
    fn n(&self) -> usize {
        self.n
    }

    fn eval(&self, _: &[f64], _: &[f64; 3], _: f64, out: &mut [f64; 4]) {
        *out = self.value;
    }

    fn decay_order(&self) -> f64 {
        0.0
    }
}

/// `F(delta o q)` with `delta o (q', q_{n+1}) = (delta q', delta^2 q_{n+1})`.
pub struct Dilated<F> {
    pub inner: F,
    pub delta: f64,
}

impl<F: BoundaryFunction> BoundaryFunction for Dilated<F> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn eval(&self, omega: &[f64], t: &[f64; 3], eps: f64, out: &mut [f64; 4]) {
        let d2 = self.delta * self.delta;
        let w: Vec<f64> = omega.iter().map(|v| v * self.delta).collect();
        self.inner.eval(&w, &[t[0] * d2, t[1] * d2, t[2] * d2], eps * d2, out);
    }

    fn decay_order(&self) -> f64 {
        self.inner.decay_order()
    }

    fn radial_in_omega(&self) -> bool {
        self.inner.radial_in_omega()
    }
}

struct PowerIntegrand<'a> {
    f: &'a dyn BoundaryFunction,
    p: f64,
    eps: f64,
}

impl BoundaryIntegrand for PowerIntegrand<'_> {
    fn n(&self) -> usize {
        self.f.n()
    }

    fn components(&self) -> usize {
        1
    }

    fn eval(&self, omega: &[f64], t: &[f64; 3], out: &mut [f64]) {
        let mut v = [0.0; 4];
        self.f.eval(omega, t, self.eps, &mut v);
        out[0] = v.iter().map(|x| x * x).sum::<f64>().powf(self.p / 2.0);
    }

    fn decay_exponent(&self) -> f64 {
        self.p * self.f.decay_order()
    }

    fn radial_in_omega(&self) -> bool {
        self.f.radial_in_omega()
    }
}

/// `(int |F_eps|^p d beta)^{1/p}` for each `eps` and the maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct HardyEstimate {
    pub per_eps: Vec<(f64, f64)>,
    pub max: f64,
    pub n_evals: u64,
}

/// Numerical estimate of the Hardy norm over a grid of vertical shifts.
/// This is an estimate on finitely many translates, not a proof that the
/// norm is finite.
pub fn hardy_norm_estimate(
    f: &dyn BoundaryFunction,
    p: f64,
    eps_grid: &[f64],
    tol: f64,
    budget: u64,
) -> Result<HardyEstimate> {
    if !(p > 2.0 / 3.0) {
        return Err(Error::InvalidParameter(format!("p = {p} must exceed 2/3")));
    }
    if eps_grid.is_empty() || eps_grid.iter().any(|e| !(*e > 0.0)) {
        return Err(Error::InvalidParameter("the eps grid must be non-empty and positive".into()));
    }
    let mut per_eps = Vec::with_capacity(eps_grid.len());
    let mut n_evals = 0;
    for &eps in eps_grid {
        let r = integrate_boundary(&PowerIntegrand { f, p, eps }, BoundaryOptions { tol, budget: budget - n_evals.min(budget) })?;
        n_evals += r.n_evals;
        per_eps.push((eps, r.value[0].powf(1.0 / p)));
    }
    let max = per_eps.iter().map(|x| x.1).fold(0.0, f64::max);
    Ok(HardyEstimate { per_eps, max, n_evals })
}
