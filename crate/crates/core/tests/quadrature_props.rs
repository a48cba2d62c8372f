use std::f64::consts::PI;

use szego::quadrature::{
    integrate_boundary, mc_integrate, BoundaryIntegrand, BoundaryOptions, PowerLawSampler, ProductSampler,
};

/// `(1 + |omega|^2)^{-6} exp(-|t|^2)`.
struct Separable;

impl BoundaryIntegrand for Separable {
    fn n(&self) -> usize {
        1
    }
    fn components(&self) -> usize {
        1
    }
    fn eval(&self, omega: &[f64], t: &[f64; 3], out: &mut [f64]) {
        let w2: f64 = omega.iter().map(|x| x * x).sum();
        out[0] = (1.0 + w2).powi(-6) * (-(t[0] * t[0] + t[1] * t[1] + t[2] * t[2])).exp();
    }
    fn decay_exponent(&self) -> f64 {
        f64::INFINITY
    }
    fn radial_in_omega(&self) -> bool {
        true
    }
}

/// `(1 + |omega|^2 + |t|^2)^{-6}`.
struct Joint;

impl BoundaryIntegrand for Joint {
    fn n(&self) -> usize {
        1
    }
    fn components(&self) -> usize {
        1
    }
    fn eval(&self, omega: &[f64], t: &[f64; 3], out: &mut [f64]) {
        let r2: f64 = omega.iter().chain(t).map(|x| x * x).sum();
        out[0] = (1.0 + r2).powi(-6);
    }
    fn decay_exponent(&self) -> f64 {
        6.0
    }
    fn radial_in_omega(&self) -> bool {
        true
    }
}

fn split(x: &[f64]) -> (&[f64], [f64; 3]) {
    (&x[..4], [x[4], x[5], x[6]])
}

fn agree(f: &dyn BoundaryIntegrand, exact: f64, sampler: &dyn szego::quadrature::Sampler) {
    let grid = integrate_boundary(f, BoundaryOptions { tol: 1e-8, budget: 100_000_000 }).unwrap();
    let mc = mc_integrate(
        |x| {
            let (w, t) = split(x);
            let mut out = [0.0];
            f.eval(w, &t, &mut out);
            out[0]
        },
        sampler,
        400_000,
        3,
    )
    .unwrap();
    let combined = grid.error_estimate + mc.error_estimate;
    assert!(
        (grid.value[0] - mc.value).abs() <= 3.0 * combined,
        "grid {} +- {}, mc {} +- {}",
        grid.value[0],
        grid.error_estimate,
        mc.value,
        mc.error_estimate
    );
    assert!((grid.value[0] - exact).abs() <= 1e-7 * exact, "{} vs {exact}", grid.value[0]);
    assert!((mc.value - exact).abs() <= 5.0 * mc.error_estimate);
}

#[test]
fn grid_and_monte_carlo_agree_on_a_product() {
    let sampler = ProductSampler::new(vec![
        Box::new(PowerLawSampler::new(4, 4.0).unwrap()),
        Box::new(PowerLawSampler::new(3, 2.5).unwrap()),
    ]);
    agree(&Separable, PI * PI / 20.0 * PI.powf(1.5), &sampler);
}

#[test]
fn grid_and_monte_carlo_agree_on_a_joint_power_law() {
    // pi^{7/2} Gamma(5/2) / Gamma(6)
    agree(&Joint, PI.powi(4) / 160.0, &PowerLawSampler::new(7, 4.5).unwrap());
}
