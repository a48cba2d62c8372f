//! Closed forms of the Newton potential, the Cauchy kernels, the
//! Cauchy–Szegő density `s(nu)`, the kernel `S(q, omega)` and the group
//! kernel `K_eps`.
//!
//! Powers of `pi` are kept outside the symbolic body so that every
//! structural identity is an exact rational statement; floating values
//! multiply by `pi^k` only at the end.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, LazyLock, Mutex};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{GroupElement, GroupKind, SiegelPoint};
use crate::hypercomplex::{rat, Algebra, Hypercomplex, Rational, Scalar};
use crate::polyfrac::{CompiledHyperFrac, HyperFrac, RadialFraction, RatPoly};

/// `coeff * pi^pi_pow * body(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiScaledKernel {
    pub coeff: Rational,
    pub pi_pow: i32,
    pub body: HyperFrac,
}

impl PiScaledKernel {
    pub fn algebra(&self) -> Algebra {
        self.body.algebra()
    }

    /// The floating constant `coeff * pi^pi_pow`.
    pub fn factor(&self) -> f64 {
        self.coeff.to_f64() * PI.powi(self.pi_pow)
    }

    /// `coeff * body(nu)` exactly; the caller supplies `pi^pi_pow`.
    pub fn eval_rational(&self, nu: &Hypercomplex<Rational>) -> Result<Hypercomplex<Rational>> {
        Ok(self.body.eval(nu.coeffs())?.scale(&self.coeff))
    }

    pub fn eval(&self, nu: &Hypercomplex<f64>) -> Result<Hypercomplex<f64>> {
        if nu.dim() != self.algebra().dim() {
            return Err(Error::DimensionMismatch { expected: self.algebra().dim(), found: nu.dim() });
        }
        Ok(self.body.eval(nu.coeffs())?.scale(&self.factor()))
    }

    pub fn compile(&self) -> CompiledKernel {
        CompiledKernel { factor: self.factor(), body: self.body.compile(), dim: self.algebra().dim() }
    }

    /// Equality of the represented functions, allowing the rational
    /// constant to move between `coeff` and `body`.
    pub fn same_function(&self, other: &Self) -> bool {
        self.pi_pow == other.pi_pow && self.body.scale(&self.coeff) == other.body.scale(&other.coeff)
    }

    pub fn to_json(&self) -> Value {
        json!({ "coeff": self.coeff.render(), "pi_pow": self.pi_pow, "body": self.body.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let coeff = Rational::from_json(v.get("coeff").ok_or_else(|| Error::Parse("missing `coeff`".into()))?)?;
        let pi_pow = v
            .get("pi_pow")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Parse("missing integer `pi_pow`".into()))? as i32;
        let body = HyperFrac::from_json(v.get("body").ok_or_else(|| Error::Parse("missing `body`".into()))?)?;
        Ok(PiScaledKernel { coeff, pi_pow, body })
    }
}

/// Floating evaluator for a [`PiScaledKernel`]; no singularity check.
#[derive(Debug, Clone)]
pub struct CompiledKernel {
    factor: f64,
    body: CompiledHyperFrac,
    dim: usize,
}

impl CompiledKernel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval_into(&self, nu: &[f64], out: &mut [f64]) {
        self.body.eval_into(nu, out);
        for o in out.iter_mut() {
            *o *= self.factor;
        }
    }

    pub fn eval(&self, nu: &[f64]) -> Hypercomplex<f64> {
        let mut out = vec![0.0; self.dim];
        self.eval_into(nu, &mut out);
        Hypercomplex::new(out).expect("dimension from a valid algebra")
    }
}

/// Number of horizontal variables `n` and algebra dimension `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelOrder {
    n: usize,
    m: usize,
}

impl KernelOrder {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if m != 2 && m != 4 {
            return Err(Error::UnsupportedOrder(format!("m = {m}; only m = 2 and m = 4 have a known density")));
        }
        Ok(KernelOrder { n, m })
    }

    pub fn quaternionic(n: usize) -> Result<Self> {
        Self::new(n, 4)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `mn/2`, the number of `x_0` derivatives.
    pub fn derivative_order(&self) -> u32 {
        (self.m * self.n / 2) as u32
    }

    /// Degree of homogeneity of `s`: `-(m - 1) - mn/2`.
    pub fn homogeneity(&self) -> i64 {
        -(self.m as i64 - 1) - self.derivative_order() as i64
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::from_dim(self.m).expect("m is 2 or 4")
    }
}

/// `N(x) = 1/|x|^2` on `R^4`.
pub fn newton_potential() -> RadialFraction {
    RadialFraction::inverse_norm_sq(4)
}

fn conj_identity(m: usize) -> Vec<RatPoly> {
    (0..m)
        .map(|i| {
            let v = RatPoly::var(m, i);
            if i == 0 {
                v
            } else {
                -&v
            }
        })
        .collect()
}

/// `E_m(nu) = Gamma(m/2) / (2 pi^{m/2}) * conj(nu) / |nu|^m`.
pub fn cauchy_kernel(m: usize) -> Result<PiScaledKernel> {
    let (pi_pow, k) = match m {
        2 => (-1, 1),
        4 => (-2, 2),
        _ => return Err(Error::UnsupportedOrder(format!("Cauchy kernel for m = {m}"))),
    };
    let body = HyperFrac::new(conj_identity(m).into_iter().map(|p| RadialFraction::new(p, k)).collect())?;
    Ok(PiScaledKernel { coeff: rat(1, 2), pi_pow, body })
}

static DENSITIES: LazyLock<Mutex<HashMap<KernelOrder, Arc<PiScaledKernel>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `s(nu) = (-2/pi)^{mn/2} d^{mn/2} E_m / dx_0^{mn/2}`, built once per order.
pub fn szego_density(order: KernelOrder) -> Arc<PiScaledKernel> {
    let mut cache = DENSITIES.lock().unwrap_or_else(|e| e.into_inner());
    cache.entry(order).or_insert_with(|| Arc::new(build_density(order))).clone()
}

fn build_density(order: KernelOrder) -> PiScaledKernel {
    let e = cauchy_kernel(order.m).expect("order validated");
    let d = order.derivative_order();
    let mut body = e.body;
    for _ in 0..d {
        body = body.deriv(0);
    }
    let sign = if d.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let coeff = e.coeff * sign * num_traits::pow(Rational::from_i64(2), d as usize);
    PiScaledKernel { coeff, pi_pow: e.pi_pow - d as i32, body }
}

/// `nu = q_{n+1} + conj(omega_{n+1}) - 2 conj(omega') . q'`.
pub fn szego_nu<S: Scalar>(q: &SiegelPoint<S>, omega: &SiegelPoint<S>) -> Result<Hypercomplex<S>> {
    if q.n() != omega.n() {
        return Err(Error::DimensionMismatch { expected: q.n(), found: omega.n() });
    }
    let mut nu = q.vertical.try_add(&omega.vertical.conj())?;
    for (w, x) in omega.horizontal.iter().zip(&q.horizontal) {
        nu = nu.try_sub(&w.conj().try_mul(x)?.scale(&S::from_i64(2)))?;
    }
    Ok(nu)
}

/// `S(q, omega) = s(nu)`.
pub fn szego_eval(order: KernelOrder, q: &SiegelPoint<f64>, omega: &SiegelPoint<f64>) -> Result<Hypercomplex<f64>> {
    if q.algebra() != order.algebra() || q.n() != order.n {
        return Err(Error::InvalidParameter(format!(
            "point shape (n = {}, dim {}) does not match kernel order (n = {}, m = {})",
            q.n(),
            q.algebra().dim(),
            order.n,
            order.m
        )));
    }
    let nu = szego_nu(q, omega)?;
    if nu.is_zero() {
        return Err(Error::Singular("nu = 0 (coincident boundary points)".into()));
    }
    szego_density(order).eval(&nu)
}

/// `2^{n-1} n! pi^{-(n+1)} nu^{-(n+1)}`.
pub fn complex_szego_closed_form(n: usize, nu: Complex64) -> Result<Complex64> {
    if nu.is_zero() {
        return Err(Error::Singular("nu = 0".into()));
    }
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let c = 2f64.powi(n as i32 - 1) * fact * PI.powi(-(n as i32 + 1));
    Ok(nu.powi(-(n as i32 + 1)) * c)
}

/// The same closed form as an exact kernel, `conj(nu)^{n+1} / |nu|^{2(n+1)}`.
pub fn complex_szego_closed_form_symbolic(n: usize) -> Result<PiScaledKernel> {
    let x0 = RatPoly::var(2, 0);
    let x1 = RatPoly::var(2, 1);
    let (mut re, mut im) = (RatPoly::one(2), RatPoly::zero(2));
    for _ in 0..=n {
        let next_re = &(&re * &x0) + &(&im * &x1);
        let next_im = &(&im * &x0) - &(&re * &x1);
        re = next_re;
        im = next_im;
    }
    let k = n as u32 + 1;
    let body = HyperFrac::new(vec![RadialFraction::new(re, k), RadialFraction::new(im, k)])?;
    let fact: Rational = (1..=n as i64).map(Rational::from_i64).product();
    let coeff = fact * num_traits::pow(Rational::from_i64(2), n) / Rational::from_i64(2);
    Ok(PiScaledKernel { coeff, pi_pow: -(n as i32 + 1), body })
}

/// `K_eps(h) = s(|omega'|^2 + eps + e.t)` on the quaternionic group.
pub fn group_kernel(order: KernelOrder, h: &GroupElement<f64>, eps: f64) -> Result<Hypercomplex<f64>> {
    let nu = group_kernel_nu(order, h, eps)?;
    if nu.is_zero() {
        return Err(Error::Singular("K_0 at the identity".into()));
    }
    szego_density(order).eval(&nu)
}

/// The argument `nu` of `s` in [`group_kernel`].
pub fn group_kernel_nu(order: KernelOrder, h: &GroupElement<f64>, eps: f64) -> Result<Hypercomplex<f64>> {
    if order.m != 4 || h.kind != GroupKind::Quaternionic || h.n() != order.n {
        return Err(Error::InvalidParameter("group kernel needs a quaternionic element matching n".into()));
    }
    if !(eps >= 0.0) {
        return Err(Error::InvalidParameter(format!("eps must be nonnegative, got {eps}")));
    }
    let mut p = h.boundary_param();
    p.vertical = p.vertical.try_add(&Hypercomplex::real(Algebra::Quaternion, eps))?;
    Ok(p.vertical)
}
