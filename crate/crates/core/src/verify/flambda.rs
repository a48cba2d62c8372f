//! The test family `F_lambda`, its closed form at `(0, 1)`, the
//! reproducing-property check and the coefficient system that pins down
//! the kernel.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::geometry::SiegelPoint;
use crate::hypercomplex::{rat, Algebra, Hypercomplex, Rational, Scalar};
use crate::kernel::{newton_potential, szego_density, CompiledKernel, KernelOrder};
use crate::polyfrac::{CompiledHyperFrac, HyperFrac};
use crate::quadrature::boundary::{integrate_boundary, BoundaryIntegrand, BoundaryOptions};
use crate::quadrature::gamma::{gamma_series, SqrtPiSeries};

/// Index data of one member of the test family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TestFunctionSpec {
    pub n: usize,
    pub t: [u32; 4],
}

impl TestFunctionSpec {
    pub fn new(n: usize, t: [u32; 4]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        Ok(TestFunctionSpec { n, t })
    }

    pub fn lambda(&self) -> u32 {
        self.t.iter().sum()
    }

    /// `lambda > (2n - 3) / 2`.
    pub fn in_hardy_range(&self) -> bool {
        2 * self.lambda() as i64 > 2 * self.n as i64 - 3
    }

    /// `(q1, q2, q3)` when `t = (t0, 2 q1, 2 q2, 2 q3 + 1)`.
    pub fn closed_form_indices(&self) -> Option<[u32; 3]> {
        let [_, t1, t2, t3] = self.t;
        (t1 % 2 == 0 && t2 % 2 == 0 && t3 % 2 == 1).then_some([t1 / 2, t2 / 2, t3 / 2])
    }

    /// `|F_lambda| = O(|nu|^{-(lambda + 3)})`.
    pub fn decay_order(&self) -> u32 {
        self.lambda() + 3
    }
}

/// All specs of the closed-form parity class with `lambda <= max_lambda`.
pub fn parity_valid_specs(n: usize, max_lambda: u32) -> Vec<TestFunctionSpec> {
    let mut out = Vec::new();
    for t0 in 0..=max_lambda {
        for t1 in (0..=max_lambda).step_by(2) {
            for t2 in (0..=max_lambda).step_by(2) {
                for t3 in (1..=max_lambda).step_by(2) {
                    if t0 + t1 + t2 + t3 <= max_lambda {
                        out.push(TestFunctionSpec { n, t: [t0, t1, t2, t3] });
                    }
                }
            }
        }
    }
    out
}

/// `F_lambda` as an exact function of `nu = 1 + q_{n+1}`.
#[derive(Debug, Clone)]
pub struct TestFunction {
    spec: TestFunctionSpec,
    body: HyperFrac,
    compiled: CompiledHyperFrac,
}

impl TestFunction {
    /// `d^t (d_0 N - d_1 N e1 - d_2 N e2 - d_3 N e3)`.
    pub fn new(spec: TestFunctionSpec) -> Self {
        let n = newton_potential();
        let comps = (0..4)
            .map(|i| {
                let mut orders = spec.t;
                orders[i] += 1;
                let d = n.deriv_multi(&orders);
                if i == 0 {
                    d
                } else {
                    d.neg()
                }
            })
            .collect();
        let body = HyperFrac::new(comps).expect("four components in four variables");
        let compiled = body.compile();
        TestFunction { spec, body, compiled }
    }

    pub fn spec(&self) -> TestFunctionSpec {
        self.spec
    }

    pub fn body(&self) -> &HyperFrac {
        &self.body
    }

    /// The value at `nu` (exact or floating).
    pub fn eval_nu<S: Scalar>(&self, nu: &Hypercomplex<S>) -> Result<Hypercomplex<S>> {
        if nu.algebra() != Algebra::Quaternion {
            return Err(Error::DimensionMismatch { expected: 4, found: nu.dim() });
        }
        self.body.eval(nu.coeffs()).map_err(|_| Error::Singular("nu = 0".into()))
    }

    /// Floating value at `nu`, written into `out`.
    pub fn eval_nu_into(&self, nu: &[f64], out: &mut [f64]) {
        self.compiled.eval_into(nu, out);
    }
}

/// `F_lambda(p)`, which only depends on `nu = 1 + q_{n+1}`.
pub fn f_lambda<S: Scalar>(spec: &TestFunctionSpec, p: &SiegelPoint<S>) -> Result<Hypercomplex<S>> {
    if p.algebra() != Algebra::Quaternion || p.n() != spec.n {
        return Err(Error::InvalidParameter(format!(
            "expected a quaternionic point with n = {}, got n = {} in dimension {}",
            spec.n,
            p.n(),
            p.algebra().dim()
        )));
    }
    let nu = p.vertical.try_add(&Hypercomplex::one(Algebra::Quaternion))?;
    TestFunction::new(*spec).eval_nu(&nu)
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn two_pow(k: i64) -> Rational {
    let p = num_traits::pow(rat(2, 1), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

/// The `e3` coefficient of `F_lambda(0, 1)` from the Gamma closed form,
/// `(-1)^{t0+q1+q2+q3} 2^{-lambda-4} pi^{-1} Gamma(lambda+3) Gamma(q1+1/2)
/// Gamma(q2+1/2) Gamma(q3+3/2) / Gamma(q1+q2+q3+5/2)`.
pub fn f_lambda_closed_form_series(spec: &TestFunctionSpec) -> Result<SqrtPiSeries> {
    let [q1, q2, q3] = spec
        .closed_form_indices()
        .ok_or_else(|| Error::Precondition(format!("t = {:?} is not of the form (t0, 2q1, 2q2, 2q3+1)", spec.t)))?;
    let lambda = spec.lambda() as i64;
    let (q1, q2, q3) = (q1 as i64, q2 as i64, q3 as i64);
    let num = gamma_series(2 * (lambda + 3))?
        .mul(&gamma_series(2 * q1 + 1)?)
        .mul(&gamma_series(2 * q2 + 1)?)
        .mul(&gamma_series(2 * q3 + 3)?)
        .mul(&SqrtPiSeries::pi_pow(-1));
    let c = sign(spec.t[0] + (q1 + q2 + q3) as u32) * two_pow(-lambda - 4);
    num.div(&gamma_series(2 * (q1 + q2 + q3) + 5)?).map(|s| s.scale(&c))
}

/// The closed form as an exact quaternion (all powers of `pi` cancel).
pub fn f_lambda_closed_form(spec: &TestFunctionSpec) -> Result<Hypercomplex<Rational>> {
    let series = f_lambda_closed_form_series(spec)?;
    let e3 = series
        .as_rational()
        .ok_or_else(|| Error::Precondition(format!("closed form {series} is not rational")))?;
    Ok(Hypercomplex::quaternion([Rational::zero(), Rational::zero(), Rational::zero(), e3]))
}

/// The point `(0, 1)` in `U_n`.
pub fn base_point<S: Scalar>(n: usize) -> SiegelPoint<S> {
    SiegelPoint::on_axis(n, Hypercomplex::one(Algebra::Quaternion))
}

/// Exact agreement of the derivative route and the Gamma closed form at `(0, 1)`.
pub fn closed_form_check(spec: &TestFunctionSpec) -> Result<CheckReport> {
    let direct = f_lambda::<Rational>(spec, &base_point(spec.n))?;
    let closed = f_lambda_closed_form(spec)?;
    Ok(CheckReport::exact(
        format!("f_lambda_closed_form/t={:?}", spec.t),
        json!({"n": spec.n, "t": spec.t}),
        direct.to_json(),
        closed.to_json(),
        direct == closed,
    ))
}

fn qmul(a: &[f64], b: &[f64], out: &mut [f64]) {
    out[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
    out[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
    out[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
    out[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
}

/// `S((0,1), omega) F_lambda(omega)` at the boundary point with horizontal
/// part `omega'` and centre `t`, where `nu = 1 + |omega'|^2 + e.t` and the
/// kernel is evaluated at `conj(nu)`.
struct ReproducingIntegrand {
    n: usize,
    s: CompiledKernel,
    f: TestFunction,
}

impl BoundaryIntegrand for ReproducingIntegrand {
    fn n(&self) -> usize {
        self.n
    }

    fn components(&self) -> usize {
        4
    }

    fn eval(&self, omega: &[f64], t: &[f64; 3], out: &mut [f64]) {
        let x0 = 1.0 + omega.iter().map(|v| v * v).sum::<f64>();
        let nu = [x0, t[0], t[1], t[2]];
        let nu_bar = [x0, -t[0], -t[1], -t[2]];
        let (mut s, mut f) = ([0.0; 4], [0.0; 4]);
        self.s.eval_into(&nu_bar, &mut s);
        self.f.eval_nu_into(&nu, &mut f);
        qmul(&s, &f, out);
    }

    fn decay_exponent(&self) -> f64 {
        (2 * self.n + 3) as f64 + self.f.spec().decay_order() as f64
    }

    fn radial_in_omega(&self) -> bool {
        true
    }
}

/// Compares `F_lambda(0, 1)` with the boundary integral of
/// `S((0,1), omega) F_lambda(omega)`.
pub fn reproducing_check(spec: &TestFunctionSpec, tol: f64, budget: u64) -> Result<CheckReport> {
    if !spec.in_hardy_range() {
        return Err(Error::Precondition(format!(
            "lambda = {} does not exceed (2n - 3)/2 for n = {}",
            spec.lambda(),
            spec.n
        )));
    }
    let order = KernelOrder::quaternionic(spec.n)?;
    let integrand = ReproducingIntegrand { n: spec.n, s: szego_density(order).compile(), f: TestFunction::new(*spec) };
    let r = integrate_boundary(&integrand, BoundaryOptions { tol: tol / 10.0, budget })?;
    let direct = f_lambda::<f64>(spec, &base_point(spec.n))?;
    Ok(CheckReport::numeric(
        format!("reproducing/n={}/t={:?}", spec.n, spec.t),
        json!({"n": spec.n, "t": spec.t, "tol": tol, "budget": budget, "error_estimate": r.error_estimate}),
        &r.value,
        direct.coeffs(),
        tol,
        r.n_evals,
    ))
}

/// Solved coefficients `c(s0, s1, s2)` (four components each, as exact
/// `sqrt(pi)` series): `c(2n, 0, 0) = -2^{2n-2} / pi^{2n+2}`, all others zero.
pub fn solved_coefficients(n: usize) -> BTreeMap<(u32, u32, u32), [SqrtPiSeries; 4]> {
    let two_n = 2 * n as u32;
    let mut out = BTreeMap::new();
    for s0 in 0..=two_n {
        for s1 in 0..=two_n - s0 {
            out.insert((s0, s1, two_n - s0 - s1), std::array::from_fn(|_| SqrtPiSeries::zero()));
        }
    }
    let c0 = SqrtPiSeries::monomial(-two_pow(2 * n as i64 - 2), -(4 * n as i32 + 4));
    out.get_mut(&(two_n, 0, 0)).expect("present")[0] = c0;
    out
}

/// One equation family: `sum over (p0, p1, p2)` with `p0+p1+p2 = total`.
struct Family {
    name: &'static str,
    total_shift: u32,
    components: &'static [usize],
    /// Index of the coefficient for `(p0, p1, p2)`.
    index: fn(u32, u32, u32) -> (u32, u32, u32),
    /// `(2x)` arguments of the two numerator Gammas and the denominator,
    /// given `(p, q)`, plus a sign exponent.
    weight: fn(&[u32; 3], &[u32; 3], u32) -> (i64, i64, i64, u32),
}

const FAMILIES: [Family; 5] = [
    Family {
        name: "family1",
        total_shift: 0,
        components: &[1, 2, 3],
        index: |p0, p1, p2| (2 * p0, 2 * p1, 2 * p2),
        weight: |p, q, n| {
            let big_q = (q[0] + q[1] + q[2] + n - p[0]) as i64;
            ((2 * (p[1] + q[0]) + 1) as i64, (2 * (p[2] + q[1]) + 1) as i64, 2 * big_q + 5, p[0])
        },
    },
    Family {
        name: "family2",
        total_shift: 0,
        components: &[0],
        index: |p0, p1, p2| (2 * p0, 2 * p1, 2 * p2),
        weight: |p, q, n| {
            let big_q = (q[0] + q[1] + q[2] + n - p[0]) as i64;
            ((2 * (p[1] + q[0]) + 1) as i64, (2 * (p[2] + q[1]) + 1) as i64, 2 * big_q + 5, n + p[0] + 1)
        },
    },
    Family {
        name: "family3",
        total_shift: 1,
        components: &[0, 1, 2, 3],
        index: |p0, p1, p2| (2 * p0 + 1, 2 * p1 + 1, 2 * p2),
        weight: |p, q, n| {
            let big_q = (q[0] + q[1] + q[2] + n - p[0]) as i64;
            ((2 * (p[1] + q[0]) + 3) as i64, (2 * (p[2] + q[1]) + 1) as i64, 2 * big_q + 5, p[0])
        },
    },
    Family {
        name: "family4",
        total_shift: 1,
        components: &[0, 1, 2, 3],
        index: |p0, p1, p2| (2 * p0 + 1, 2 * p1, 2 * p2 + 1),
        weight: |p, q, n| {
            let big_q = (q[0] + q[1] + q[2] + n - p[0]) as i64;
            ((2 * (p[1] + q[0]) + 1) as i64, (2 * (p[2] + q[1]) + 3) as i64, 2 * big_q + 5, p[0])
        },
    },
    Family {
        name: "family5",
        total_shift: 1,
        components: &[0, 1, 2, 3],
        index: |p0, p1, p2| (2 * p0, 2 * p1 + 1, 2 * p2 + 1),
        weight: |p, q, n| {
            let big_q = (q[0] + q[1] + q[2] + n - p[0]) as i64;
            ((2 * (p[1] + q[0]) + 3) as i64, (2 * (p[2] + q[1]) + 3) as i64, 2 * big_q + 7, p[0])
        },
    },
];

fn family_rhs(family: &Family, q: &[u32; 3], n: usize) -> Result<SqrtPiSeries> {
    if family.name != "family2" {
        return Ok(SqrtPiSeries::zero());
    }
    // 2^{2n-2} / pi^{2n+2} * Gamma(q1+1/2) Gamma(q2+1/2) / Gamma(q1+q2+q3+5/2)
    let g = gamma_series((2 * q[0] + 1) as i64)?.mul(&gamma_series((2 * q[1] + 1) as i64)?);
    let g = g.div(&gamma_series((2 * (q[0] + q[1] + q[2]) + 5) as i64)?)?;
    Ok(g.mul(&SqrtPiSeries::pi_pow(-(2 * n as i32 + 2))).scale(&two_pow(2 * n as i64 - 2)))
}

fn compositions(total: u32) -> impl Iterator<Item = [u32; 3]> {
    (0..=total).flat_map(move |p0| (0..=total - p0).map(move |p1| [p0, p1, total - p0 - p1]))
}

/// Number of equations checked and the failures found.
#[derive(Debug, Clone, Default)]
pub struct SystemOutcome {
    pub equations: usize,
    pub failures: Vec<String>,
}

/// Substitutes the solved coefficients into every equation family for
/// `(q1, q2, q3) in {0,1,2}^3`, and additionally checks the unreduced
/// form of the even family against the `F_lambda` closed form for
/// `t0 in {0, 1, 2}`. All arithmetic is exact.
pub fn coefficient_system(n: usize) -> Result<SystemOutcome> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidParameter(format!("coefficient system check needs 1 <= n <= 6, got {n}")));
    }
    let c = solved_coefficients(n);
    let nn = n as u32;
    let mut out = SystemOutcome::default();
    for q1 in 0..3 {
        for q2 in 0..3 {
            for q3 in 0..3 {
                let q = [q1, q2, q3];
                for fam in &FAMILIES {
                    if fam.total_shift > nn {
                        continue;
                    }
                    let rhs = family_rhs(fam, &q, n)?;
                    for &i in fam.components {
                        let mut lhs = SqrtPiSeries::zero();
                        for p in compositions(nn - fam.total_shift) {
                            let (a, b, d, e) = (fam.weight)(&p, &q, nn);
                            let coeff = &c[&(fam.index)(p[0], p[1], p[2])][i];
                            if coeff.is_zero() {
                                continue;
                            }
                            let w = gamma_series(a)?.mul(&gamma_series(b)?).div(&gamma_series(d)?)?;
                            lhs = lhs.add(&w.mul(coeff).scale(&sign(e)));
                        }
                        out.equations += 1;
                        if lhs != rhs {
                            out.failures.push(format!("{} i={i} q={q:?}: {lhs} != {rhs}", fam.name));
                        }
                    }
                }
                for t0 in 0..3 {
                    out.equations += 1;
                    if let Some(msg) = unreduced_mismatch(&c, n, t0, &q)? {
                        out.failures.push(msg);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The even family before cancelling common factors:
/// `sum conj(c(2p0,2p1,2p2)) * (-1)^{t0+Q+n+p0+1} 2^{-2n-lambda-2} pi^{2n+1}
/// Gamma(lambda+3) Gamma(p1+q1+1/2) Gamma(p2+q2+1/2) Gamma(q3+3/2) /
/// Gamma(Q+n-p0+5/2) e3 = F_lambda(0, 1)`.
fn unreduced_mismatch(
    c: &BTreeMap<(u32, u32, u32), [SqrtPiSeries; 4]>,
    n: usize,
    t0: u32,
    q: &[u32; 3],
) -> Result<Option<String>> {
    let spec = TestFunctionSpec { n, t: [t0, 2 * q[0], 2 * q[1], 2 * q[2] + 1] };
    let lambda = spec.lambda() as i64;
    let big_q = q[0] + q[1] + q[2];
    let nn = n as u32;
    let table = Algebra::Quaternion.table();
    let mut lhs: [SqrtPiSeries; 4] = std::array::from_fn(|_| SqrtPiSeries::zero());
    for p in compositions(nn) {
        let coeff = &c[&(2 * p[0], 2 * p[1], 2 * p[2])];
        if coeff.iter().all(SqrtPiSeries::is_zero) {
            continue;
        }
        let w = gamma_series(2 * (lambda + 3))?
            .mul(&gamma_series((2 * (p[1] + q[0]) + 1) as i64)?)
            .mul(&gamma_series((2 * (p[2] + q[1]) + 1) as i64)?)
            .mul(&gamma_series((2 * q[2] + 3) as i64)?)
            .div(&gamma_series((2 * (big_q + nn - p[0]) + 5) as i64)?)?
            .mul(&SqrtPiSeries::pi_pow(2 * n as i32 + 1))
            .scale(&(sign(t0 + big_q + nn + p[0] + 1) * two_pow(-2 * n as i64 - lambda - 2)));
        // conj(c) * e3, component by component.
        for (j, cj) in coeff.iter().enumerate() {
            let cj = if j == 0 { cj.clone() } else { cj.neg() };
            let (s, k) = table.product(j, 3);
            let term = cj.mul(&w);
            lhs[k] = if s > 0 { lhs[k].add(&term) } else { lhs[k].sub(&term) };
        }
    }
    let rhs = f_lambda_closed_form_series(&spec)?;
    let ok = lhs[0].is_zero() && lhs[1].is_zero() && lhs[2].is_zero() && lhs[3] == rhs;
    Ok((!ok).then(|| format!("unreduced t0={t0} q={q:?}: {:?} != {rhs} e3", lhs)))
}

/// [`coefficient_system`] as a report.
pub fn coefficient_system_check(n: usize) -> Result<CheckReport> {
    let o = coefficient_system(n)?;
    Ok(CheckReport::exact(
        format!("coefficient_system/n={n}"),
        json!({"n": n, "q_grid": [0, 1, 2], "equations": o.equations}),
        json!(o.failures),
        json!([]),
        o.failures.is_empty(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: [u32; 4]) -> TestFunctionSpec {
        TestFunctionSpec::new(1, t).unwrap()
    }

    #[test]
    fn hand_value_at_base_point() {
        let v = f_lambda::<Rational>(&spec([2, 0, 0, 1]), &base_point(1)).unwrap();
        assert_eq!(v, Hypercomplex::quaternion([rat(0, 1), rat(0, 1), rat(0, 1), rat(5, 8)]));
        assert_eq!(f_lambda_closed_form(&spec([2, 0, 0, 1])).unwrap(), v);
        let v = f_lambda_closed_form(&spec([0, 0, 0, 1])).unwrap();
        assert_eq!(v.coeffs()[3], rat(1, 8));
    }

    #[test]
    fn closed_form_sign_follows_t0() {
        let a = f_lambda_closed_form(&spec([1, 0, 0, 1])).unwrap();
        let b = f_lambda_closed_form(&spec([2, 0, 0, 1])).unwrap();
        assert!(a.coeffs()[3].is_negative() != b.coeffs()[3].is_negative());
        assert!(matches!(f_lambda_closed_form(&spec([0, 1, 0, 1])), Err(Error::Precondition(_))));
    }

    #[test]
    fn odd_factors_vanish_and_value_is_independent_of_horizontal_part() {
        // t1 odd: every component carries an odd power of x1 at real nu.
        let v = TestFunction::new(spec([0, 1, 0, 0])).eval_nu(&Hypercomplex::quaternion([rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)])).unwrap();
        assert!(v.coeffs()[0].is_zero() && v.coeffs()[2].is_zero() && v.coeffs()[3].is_zero());
        let one = Hypercomplex::<Rational>::one(Algebra::Quaternion);
        let p = SiegelPoint::new(vec![Hypercomplex::quaternion([rat(1, 2), rat(1, 3), rat(0, 1), rat(0, 1)])], one.clone()).unwrap();
        let s = spec([2, 0, 0, 1]);
        assert_eq!(f_lambda(&s, &p).unwrap(), f_lambda(&s, &base_point(1)).unwrap());
    }

    #[test]
    fn vertical_translate_shifts_nu() {
        let s = spec([2, 0, 0, 1]);
        let eps = rat(1, 4);
        let p = base_point::<Rational>(1).vertical_shift(&eps);
        let nu = Hypercomplex::real(Algebra::Quaternion, rat(2, 1) + eps);
        assert_eq!(f_lambda(&s, &p).unwrap(), TestFunction::new(s).eval_nu(&nu).unwrap());
        let singular = SiegelPoint::on_axis(1, Hypercomplex::real(Algebra::Quaternion, rat(-1, 1)));
        assert!(matches!(f_lambda(&s, &singular), Err(Error::Singular(_))));
    }

    #[test]
    fn every_small_parity_valid_spec_agrees() {
        let specs = parity_valid_specs(1, 6);
        assert!(specs.len() > 20);
        for s in specs {
            assert!(closed_form_check(&s).unwrap().pass, "{s:?}");
        }
    }

    #[test]
    fn coefficient_system_is_exact() {
        for n in 1..=2 {
            let o = coefficient_system(n).unwrap();
            assert!(o.failures.is_empty(), "{:?}", o.failures);
            assert!(o.equations > 27 * 10);
        }
        assert!(coefficient_system(7).is_err());
    }

    #[test]
    fn perturbed_coefficients_are_detected() {
        let mut c = solved_coefficients(1);
        c.get_mut(&(2, 0, 0)).unwrap()[0] = SqrtPiSeries::monomial(rat(-1, 2), -8);
        assert!(unreduced_mismatch(&c, 1, 0, &[0, 0, 0]).unwrap().is_some());
    }

    #[test]
    fn reproducing_rejects_specs_below_the_bound() {
        let s = TestFunctionSpec::new(3, [0, 0, 0, 1]).unwrap();
        assert!(matches!(reproducing_check(&s, 1e-3, 1000), Err(Error::Precondition(_))));
    }

    #[test]
    fn reproduces_the_hand_value() {
        for t in [[2, 0, 0, 1], [3, 0, 0, 1]] {
            let r = reproducing_check(&spec(t), 1e-3, 20_000_000).unwrap();
            println!("{}", r.to_jsonl());
            assert!(r.pass, "{}", r.to_jsonl());
        }
    }
}
