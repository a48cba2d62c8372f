//! Integrals over the boundary `H^n x R^3` of the Siegel half space.

use rayon::prelude::*;

use super::gauss::gauss_legendre;
use super::spherical::{spherical_grid, DecayHint};
use super::QuadratureResult;
use crate::error::{Error, Result};

/// A function on the boundary, parametrised by `(omega', t)`.
pub trait BoundaryIntegrand: Sync {
    /// Number of horizontal quaternionic variables.
    fn n(&self) -> usize;
    /// Number of real output components.
    fn components(&self) -> usize;
    /// `omega` has `4n` real coordinates.
    fn eval(&self, omega: &[f64], t: &[f64; 3], out: &mut [f64]);
    /// `a` such that the integrand is `O((1 + |omega'|^2 + |t|)^{-a})`.
    fn decay_exponent(&self) -> f64;
    /// Whether the integrand depends on `omega'` only through `|omega'|`.
    fn radial_in_omega(&self) -> bool {
        false
    }
    /// Length scale of the radial maps.
    fn scale(&self) -> f64 {
        1.0
    }
}

/// Accuracy and cost controls for [`integrate_boundary`].
#[derive(Debug, Clone, Copy)]
pub struct BoundaryOptions {
    /// Relative tolerance on the norm of the value.
    pub tol: f64,
    /// Maximum total number of integrand evaluations.
    pub budget: u64,
}

impl Default for BoundaryOptions {
    fn default() -> Self {
        BoundaryOptions { tol: 1e-6, budget: 20_000_000 }
    }
}

/// `|S^{d-1}| = 2 pi^{d/2} / Gamma(d/2)` for even `d`.
fn sphere_area(d: usize) -> f64 {
    let half = d / 2;
    2.0 * std::f64::consts::PI.powi(half as i32) / libm::tgamma(half as f64)
}

/// Product rule on `S^{d-1}` in hyperspherical angles: Gauss–Legendre in
/// each polar angle (with the `sin^k` Jacobian folded into the weights)
/// and the trapezoid rule in the azimuth.
fn hypersphere_rule(d: usize, m: usize) -> Vec<(Vec<f64>, f64)> {
    let g = gauss_legendre(m);
    let polar: Vec<(f64, f64)> = g.on_interval(0.0, std::f64::consts::PI).collect();
    let n_phi = 2 * m;
    let mut rule: Vec<(Vec<f64>, f64, f64)> = vec![(Vec::new(), 1.0, 1.0)]; // (coords, weight, remaining radius)
    for j in 0..d - 2 {
        let power = (d - 2 - j) as i32;
        let mut next = Vec::with_capacity(rule.len() * m);
        for (coords, w, rad) in &rule {
            for (psi, wp) in &polar {
                let mut c = coords.clone();
                c.push(rad * psi.cos());
                next.push((c, w * wp * psi.sin().powi(power), rad * psi.sin()));
            }
        }
        rule = next;
    }
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut out = Vec::with_capacity(rule.len() * n_phi);
    for (coords, w, rad) in &rule {
        for k in 0..n_phi {
            let phi = (k as f64 + 0.5) * dphi;
            let mut c = coords.clone();
            c.push(rad * phi.cos());
            c.push(rad * phi.sin());
            out.push((c, w * dphi));
        }
    }
    out
}

struct Level {
    omega: Vec<(Vec<f64>, f64)>,
    t: Vec<([f64; 3], f64)>,
}

fn build_level(n: usize, radial: bool, scale: f64, level: u32) -> Level {
    let d = 4 * n;
    let nr = 32usize << level;
    let n_theta = 8usize << (level / 2);
    let hint = DecayHint::Algebraic { scale };
    let radii = hint.radial_rule(nr);
    let omega = if radial {
        let area = sphere_area(d);
        radii
            .iter()
            .map(|&(u, w)| {
                let mut x = vec![0.0; d];
                x[0] = u;
                (x, area * w * u.powi(d as i32 - 1))
            })
            .collect()
    } else {
        let sphere = hypersphere_rule(d, 6usize << (level / 2));
        radii
            .iter()
            .flat_map(|&(u, w)| {
                sphere.iter().map(move |(s, ws)| (s.iter().map(|c| u * c).collect(), w * ws * u.powi(d as i32 - 1)))
            })
            .collect()
    };
    Level { omega, t: spherical_grid(hint, nr, n_theta) }
}

/// `int_{H^n x R^3} F(omega', t) d omega' dt` by tensor products of mapped
/// Gauss rules, refining until two levels agree to `tol` or the budget
/// runs out. Partial sums are reduced in a fixed order, so the result does
/// not depend on the number of worker threads.
pub fn integrate_boundary(f: &dyn BoundaryIntegrand, opts: BoundaryOptions) -> Result<QuadratureResult<Vec<f64>>> {
    let n = f.n();
    let a = f.decay_exponent();
    if !(a > (2 * n + 3) as f64) {
        return Err(Error::NonIntegrable(format!(
            "decay exponent {a} does not exceed the homogeneous threshold {}",
            2 * n + 3
        )));
    }
    if !(opts.tol > 0.0) || opts.budget == 0 {
        return Err(Error::InvalidParameter("tolerance and budget must be positive".into()));
    }
    let k = f.components();
    let mut spent = 0u64;
    let mut previous: Option<Vec<f64>> = None;
    let mut best: Option<(Vec<f64>, f64)> = None;
    for level in 0.. {
        let grid = build_level(n, f.radial_in_omega(), f.scale(), level);
        let cost = (grid.omega.len() * grid.t.len()) as u64;
        if spent + cost > opts.budget {
            let (value, err) = best.map(|(v, e)| (norm(&v), e)).unwrap_or((f64::NAN, f64::INFINITY));
            return Err(Error::BudgetExhausted { budget: opts.budget, best: value, error: err });
        }
        spent += cost;
        let partials: Vec<(Vec<f64>, f64)> = grid
            .omega
            .par_iter()
            .map(|(w, ww)| {
                let mut sum = vec![0.0; k];
                let mut abs = 0.0;
                let mut out = vec![0.0; k];
                for (t, wt) in &grid.t {
                    f.eval(w, t, &mut out);
                    for (s, o) in sum.iter_mut().zip(&out) {
                        *s += wt * o;
                        abs += (wt * o).abs();
                    }
                }
                (sum.into_iter().map(|s| s * ww).collect(), abs * ww)
            })
            .collect();
        let mut value = vec![0.0; k];
        let mut abs_total = 0.0;
        for (p, a) in &partials {
            for (v, x) in value.iter_mut().zip(p) {
                *v += x;
            }
            abs_total += a;
        }
        if value.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonIntegrable(format!("non-finite sum at level {level}")));
        }
        if let Some(prev) = previous.take() {
            let err = value.iter().zip(&prev).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            if err <= opts.tol * norm(&value) || err <= 1e-13 * abs_total {
                return Ok(QuadratureResult { value, error_estimate: err, n_evals: spent, seed: 0 });
            }
            best = Some((value.clone(), err));
        }
        previous = Some(value);
    }
    unreachable!("the level loop only exits by returning")
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    struct Separable {
        radial: bool,
    }

    impl BoundaryIntegrand for Separable {
        fn n(&self) -> usize {
            1
        }
        fn components(&self) -> usize {
            1
        }
        fn eval(&self, omega: &[f64], t: &[f64; 3], out: &mut [f64]) {
            let w2: f64 = omega.iter().map(|x| x * x).sum();
            let t2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2];
            out[0] = (1.0 + w2).powi(-6) * (-t2).exp();
        }
        fn decay_exponent(&self) -> f64 {
            f64::INFINITY
        }
        fn radial_in_omega(&self) -> bool {
            self.radial
        }
    }

    struct Constant;

    impl BoundaryIntegrand for Constant {
        fn n(&self) -> usize {
            1
        }
        fn components(&self) -> usize {
            1
        }
        fn eval(&self, _: &[f64], _: &[f64; 3], out: &mut [f64]) {
            out[0] = 1.0;
        }
        fn decay_exponent(&self) -> f64 {
            0.0
        }
    }

    // int_{R^4} (1+|w|^2)^{-6} dw = 2 pi^2 int_0^inf r^3 (1+r^2)^{-6} dr = pi^2 / 20.
    const OMEGA_INTEGRAL: f64 = PI * PI / 20.0;

    #[test]
    fn separable_product_of_closed_forms() {
        let exact = OMEGA_INTEGRAL * PI.powf(1.5);
        let r = integrate_boundary(&Separable { radial: true }, BoundaryOptions { tol: 1e-10, budget: 50_000_000 }).unwrap();
        assert!((r.value[0] - exact).abs() < 1e-8 * exact, "{} vs {exact}", r.value[0]);
    }

    #[test]
    fn radial_reduction_matches_full_grid() {
        let opts = BoundaryOptions { tol: 1e-6, budget: 400_000_000 };
        let radial = integrate_boundary(&Separable { radial: true }, opts).unwrap();
        let full = integrate_boundary(&Separable { radial: false }, opts).unwrap();
        assert!((radial.value[0] - full.value[0]).abs() < 1e-6 * radial.value[0]);
    }

    #[test]
    fn constant_is_rejected() {
        assert!(matches!(
            integrate_boundary(&Constant, BoundaryOptions::default()),
            Err(Error::NonIntegrable(_))
        ));
    }

    #[test]
    fn small_budget_is_reported() {
        let r = integrate_boundary(&Separable { radial: true }, BoundaryOptions { tol: 1e-14, budget: 100_000 });
        assert!(matches!(r, Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn sphere_rules_have_the_right_area() {
        assert!((sphere_area(4) - 2.0 * PI * PI).abs() < 1e-13);
        let s: f64 = hypersphere_rule(4, 8).iter().map(|(_, w)| w).sum();
        assert!((s - 2.0 * PI * PI).abs() < 1e-8, "{s}");
    }
}
