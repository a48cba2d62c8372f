use std::collections::BTreeMap;
use std::fmt;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypercomplex::{Rational, Scalar};

/// Exact linear combination `sum_k c_k (sqrt pi)^k` with rational `c_k`.
///
/// Products of Gamma values at half-integers and powers of `pi` all live
/// in this ring, so identities between them can be checked exactly.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SqrtPiSeries {
    terms: BTreeMap<i32, Rational>,
}

impl SqrtPiSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c (sqrt pi)^k`.
    pub fn monomial(c: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        SqrtPiSeries { terms }
    }

    /// `pi^k`.
    pub fn pi_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), 2 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// `Some((c, k))` when the value is a single term `c (sqrt pi)^k`.
    pub fn as_monomial(&self) -> Option<(Rational, i32)> {
        match self.terms.len() {
            0 => Some((Rational::zero(), 0)),
            1 => self.terms.iter().next().map(|(k, c)| (c.clone(), *k)),
            _ => None,
        }
    }

    /// The rational value when no power of `pi` remains.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.as_monomial()? {
            (c, 0) => Some(c),
            (c, _) if c.is_zero() => Some(c),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let e = out.terms.entry(*k).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SqrtPiSeries { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        SqrtPiSeries { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out = out.add(&Self::monomial(x * y, a + b));
            }
        }
        out
    }

    /// Division by a single nonzero term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        match other.as_monomial() {
            Some((c, k)) if !c.is_zero() => Ok(SqrtPiSeries {
                terms: self.terms.iter().map(|(j, x)| (j - k, x / &c)).collect(),
            }),
            Some(_) => Err(Error::Singular("division by zero".into())),
            None => Err(Error::InvalidParameter("division by a multi-term series".into())),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(k, c)| c.to_f64() * PI.sqrt().powi(*k)).sum()
    }
}

impl fmt::Debug for SqrtPiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SqrtPiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => c.render(),
                k if k % 2 == 0 => format!("{}*pi^{}", c.render(), k / 2),
                k => format!("{}*pi^({}/2)", c.render(), k),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Gamma(x)` at a positive integer or half-integer `x`, written as
/// `rational * sqrt(pi)^{0 or 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfIntegerGamma {
    pub rational: Rational,
    pub sqrt_pi: bool,
}

impl HalfIntegerGamma {
    pub fn to_series(&self) -> SqrtPiSeries {
        SqrtPiSeries::monomial(self.rational.clone(), self.sqrt_pi as i32)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_series().to_f64()
    }
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exact `Gamma(twice_x / 2)`.
pub fn gamma_half(twice_x: i64) -> Result<HalfIntegerGamma> {
    if twice_x <= 0 {
        return Err(Error::InvalidParameter(format!("Gamma argument {twice_x}/2 is not positive")));
    }
    let k = (twice_x / 2) as u32;
    Ok(if twice_x % 2 == 0 {
        HalfIntegerGamma { rational: Rational::from_integer(factorial(k - 1)), sqrt_pi: false }
    } else {
        // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
        let num = factorial(2 * k);
        let den = BigInt::from(4).pow(k) * factorial(k);
        HalfIntegerGamma { rational: Rational::new(num, den), sqrt_pi: true }
    })
}

/// `Gamma(twice_x / 2)` as a series term.
pub fn gamma_series(twice_x: i64) -> Result<SqrtPiSeries> {
    gamma_half(twice_x).map(|g| g.to_series())
}

/// `a^{a_pow} * ledger`: the exact value of a moment integral as a
/// function of the decay rate `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentValue {
    pub ledger: SqrtPiSeries,
    pub a_pow: i32,
}

impl MomentValue {
    pub fn is_zero(&self) -> bool {
        self.ledger.is_zero()
    }

    pub fn eval(&self, a: f64) -> f64 {
        self.ledger.to_f64() * a.powi(self.a_pow)
    }

    pub fn eval_rational(&self, a: &Rational) -> SqrtPiSeries {
        let p = num_traits::pow(a.clone(), self.a_pow.unsigned_abs() as usize);
        let p = if self.a_pow < 0 { p.recip() } else { p };
        self.ledger.scale(&p)
    }
}

/// Exact value of
/// `int_{R^3} |x|^{l0} x1^{l1} x2^{l2} x3^{l3} e^{-a|x|} dx`
/// as `2 Gamma(l+3) Gamma(k1+1/2) Gamma(k2+1/2) Gamma(k3+1/2) / Gamma(k1+k2+k3+3/2) a^{-l-3}`
/// when every `l_i = 2 k_i` is even, zero otherwise.
///
/// `l0` may be negative as long as the radial integral converges
/// (`l + 3 > 0`).
pub fn prop32_exact(l0: i32, l: [u32; 3]) -> Result<MomentValue> {
    let total = l0 + l.iter().sum::<u32>() as i32;
    if total + 3 <= 0 {
        return Err(Error::NonIntegrable(format!("radial power r^{} at the origin", total + 2)));
    }
    if l.iter().any(|v| v % 2 == 1) {
        return Ok(MomentValue { ledger: SqrtPiSeries::zero(), a_pow: -total - 3 });
    }
    let k: Vec<i64> = l.iter().map(|&v| (v / 2) as i64).collect();
    let mut ledger = gamma_series(2 * (total as i64 + 3))?.scale(&Rational::from_i64(2));
    for &ki in &k {
        ledger = ledger.mul(&gamma_series(2 * ki + 1)?);
    }
    ledger = ledger.div(&gamma_series(2 * (k[0] + k[1] + k[2]) + 3)?)?;
    Ok(MomentValue { ledger, a_pow: -total - 3 })
}

/// Floating value of [`prop32_exact`] at decay rate `a > 0`.
pub fn prop32_closed_form(a: f64, l0: i32, l: [u32; 3]) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::InvalidParameter(format!("decay rate must be positive, got {a}")));
    }
    Ok(prop32_exact(l0, l)?.eval(a))
}
