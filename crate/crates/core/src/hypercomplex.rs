//! Complex numbers, quaternions and octonions over an exact-rational or
//! floating scalar.
//!
//! All three algebras share one representation, a coefficient vector of
//! length 2, 4 or 8, and one multiplication driver. The driver reads a
//! sign/index table that is generated from the defining triples: for every
//! triple `(a, b, c)` the rules `e_a e_b = e_c = -e_b e_a` and their cyclic
//! shifts hold, `e_i^2 = -1` for `i > 0` and `e_0` is the identity.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// The seven octonion triples.
pub const OCTONION_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

pub const QUATERNION_TRIPLES: [(usize, usize, usize); 1] = [(1, 2, 3)];

/// Field of coefficients. Implemented for [`Rational`] (exact) and `f64`.
///
/// Conversions between the two modes are always explicit
/// ([`Scalar::from_rational`], [`Scalar::to_f64`]).
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact zero test in rational mode, `|x| <= tol` in floating mode.
    fn is_negligible(&self, tol: f64) -> bool;
    fn is_negative(&self) -> bool;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
    fn render(&self) -> String;
    fn parse_scalar(s: &str) -> Result<Self>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn to_json(&self) -> Value {
        Value::String(self.render())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Self::parse_scalar(s),
            Value::Number(n) if n.is_i64() => Ok(Self::from_i64(n.as_i64().unwrap_or(0))),
            other => Err(Error::Parse(format!("expected rational string, found {other}"))),
        }
    }

    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("not a float: {n}"))),
            Value::String(s) => Self::parse_scalar(s),
            other => Err(Error::Parse(format!("expected number, found {other}"))),
        }
    }

    fn render(&self) -> String {
        format!("{self}")
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: f64 = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let q: f64 = q.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            return Ok(p / q);
        }
        s.parse().map_err(|_| Error::Parse(format!("not a float: {s}")))
    }
}

/// Parses `p/q` or an integer `p` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    Complex,
    Quaternion,
    Octonion,
}

impl Algebra {
    pub fn dim(self) -> usize {
        match self {
            Algebra::Complex => 2,
            Algebra::Quaternion => 4,
            Algebra::Octonion => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Result<Self> {
        match dim {
            2 => Ok(Algebra::Complex),
            4 => Ok(Algebra::Quaternion),
            8 => Ok(Algebra::Octonion),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    pub fn table(self) -> &'static MulTable {
        match self {
            Algebra::Complex => &COMPLEX_TABLE,
            Algebra::Quaternion => &QUATERNION_TABLE,
            Algebra::Octonion => &OCTONION_TABLE,
        }
    }
}

/// Product table: `e_i e_j = sign(i, j) e_{index(i, j)}`.
#[derive(Debug, Clone)]
pub struct MulTable {
    dim: usize,
    sign: Vec<i8>,
    index: Vec<usize>,
}

impl MulTable {
    /// Builds the table from the identity rules and the given triples.
    ///
    /// Panics if the triples leave a product undetermined or assign it twice
    /// inconsistently; both indicate a malformed triple list.
    pub fn from_triples(dim: usize, triples: &[(usize, usize, usize)]) -> Self {
        let mut sign = vec![0i8; dim * dim];
        let mut index = vec![usize::MAX; dim * dim];
        let mut set = |i: usize, j: usize, s: i8, k: usize| {
            let slot = i * dim + j;
            assert!(
                sign[slot] == 0 || (sign[slot] == s && index[slot] == k),
                "conflicting product e{i} e{j}"
            );
            sign[slot] = s;
            index[slot] = k;
        };
        for i in 0..dim {
            set(0, i, 1, i);
            set(i, 0, 1, i);
            if i > 0 {
                set(i, i, -1, 0);
            }
        }
        for &(a, b, c) in triples {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                set(x, y, 1, z);
                set(y, x, -1, z);
            }
        }
        assert!(sign.iter().all(|&s| s != 0), "incomplete multiplication table");
        MulTable { dim, sign, index }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> (i8, usize) {
        let slot = i * self.dim + j;
        (self.sign[slot], self.index[slot])
    }
}

static COMPLEX_TABLE: LazyLock<MulTable> = LazyLock::new(|| MulTable::from_triples(2, &[]));
static QUATERNION_TABLE: LazyLock<MulTable> =
    LazyLock::new(|| MulTable::from_triples(4, &QUATERNION_TRIPLES));
static OCTONION_TABLE: LazyLock<MulTable> =
    LazyLock::new(|| MulTable::from_triples(8, &OCTONION_TRIPLES));

/// An element of the complex numbers, quaternions or octonions.
#[derive(Clone, PartialEq)]
pub struct Hypercomplex<S> {
    c: Vec<S>,
}

pub type Quaternion<S> = Hypercomplex<S>;
pub type Octonion<S> = Hypercomplex<S>;

impl<S: Scalar> Hypercomplex<S> {
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        Algebra::from_dim(coeffs.len())?;
        Ok(Hypercomplex { c: coeffs })
    }

    pub fn quaternion(c: [S; 4]) -> Self {
        Hypercomplex { c: c.into() }
    }

    pub fn octonion(c: [S; 8]) -> Self {
        Hypercomplex { c: c.into() }
    }

    pub fn complex(re: S, im: S) -> Self {
        Hypercomplex { c: vec![re, im] }
    }

    pub fn zero(algebra: Algebra) -> Self {
        Hypercomplex { c: vec![S::zero(); algebra.dim()] }
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::real(algebra, S::one())
    }

    pub fn real(algebra: Algebra, x: S) -> Self {
        let mut h = Self::zero(algebra);
        h.c[0] = x;
        h
    }

    pub fn basis(algebra: Algebra, i: usize) -> Result<Self> {
        let dim = algebra.dim();
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        let mut h = Self::zero(algebra);
        h.c[i] = S::one();
        Ok(h)
    }

    /// `x_0 + sum_i t_i e_i` for `t` of length `dim - 1`.
    pub fn from_real_and_vector(x0: S, t: &[S]) -> Result<Self> {
        let mut c = Vec::with_capacity(t.len() + 1);
        c.push(x0);
        c.extend(t.iter().cloned());
        Self::new(c)
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::from_dim(self.c.len()).expect("validated at construction")
    }

    pub fn coeffs(&self) -> &[S] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.c
    }

    pub fn re(&self) -> S {
        self.c[0].clone()
    }

    pub fn im(&self, i: usize) -> Result<S> {
        if i == 0 || i >= self.dim() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim() });
        }
        Ok(self.c[i].clone())
    }

    pub fn vector_part(&self) -> Self {
        let mut v = self.clone();
        v.c[0] = S::zero();
        v
    }

    pub fn conj(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, x)| if i == 0 { x.clone() } else { -x.clone() })
            .collect();
        Hypercomplex { c }
    }

    pub fn norm_sq(&self) -> S {
        self.c
            .iter()
            .fold(S::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, k: &S) -> Self {
        Hypercomplex { c: self.c.iter().map(|x| x.clone() * k.clone()).collect() }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Hypercomplex { c: self.c.iter().zip(&other.c).map(|(a, b)| f(a, b)).collect() }
    }

    /// Product through the multiplication table of the common algebra.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let table = self.algebra().table();
        let mut out = vec![S::zero(); self.dim()];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (s, k) = table.product(i, j);
                let term = a.clone() * b.clone();
                out[k] = if s > 0 { out[k].clone() + term } else { out[k].clone() - term };
            }
        }
        Ok(Hypercomplex { c: out })
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(self.conj().scale(&(S::one() / n)))
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(x: &Self, y: &Self, z: &Self) -> Result<Self> {
        let left = x.try_mul(y)?.try_mul(z)?;
        let right = x.try_mul(&y.try_mul(z)?)?;
        left.try_sub(&right)
    }

    /// Matrix `L` with `(self * x)_k = sum_i L[k][i] x_i`.
    pub fn left_mul_matrix(&self) -> Vec<Vec<S>> {
        let dim = self.dim();
        let table = self.algebra().table();
        let mut m = vec![vec![S::zero(); dim]; dim];
        for (l, a) in self.c.iter().enumerate() {
            for i in 0..dim {
                let (s, k) = table.product(l, i);
                let v = if s > 0 { a.clone() } else { -a.clone() };
                m[k][i] = m[k][i].clone() + v;
            }
        }
        m
    }

    pub fn to_f64(&self) -> Hypercomplex<f64> {
        Hypercomplex { c: self.c.iter().map(Scalar::to_f64).collect() }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(Scalar::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
        Self::new(arr.iter().map(S::from_json).collect::<Result<_>>()?)
    }

    /// Parses the text form `a0 + a1 e1 + ...` for an algebra of the given
    /// dimension. Terms may appear in any order and missing terms are zero.
    pub fn parse(dim: usize, s: &str) -> Result<Self> {
        let algebra = Algebra::from_dim(dim)?;
        let mut c = vec![S::zero(); algebra.dim()];
        for term in s.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (coef, idx) = match term.rsplit_once(' ') {
                Some((coef, unit)) if unit.starts_with('e') => {
                    let idx: usize = unit[1..]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad unit {unit:?}")))?;
                    (coef, idx)
                }
                _ => (term, 0),
            };
            if idx >= dim {
                return Err(Error::IndexOutOfRange { index: idx, dim });
            }
            c[idx] = c[idx].clone() + S::parse_scalar(coef)?;
        }
        Ok(Hypercomplex { c })
    }
}

impl Hypercomplex<Rational> {
    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&v| Rational::from_i64(v)).collect())
    }
}

impl Hypercomplex<f64> {
    pub fn from_rational(h: &Hypercomplex<Rational>) -> Self {
        h.to_f64()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> fmt::Display for Hypercomplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", x.render())?;
            } else {
                write!(f, "{} e{i}", x.render())?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "{}", S::zero().render())?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Hypercomplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypercomplex({self})")
    }
}

impl<S: Scalar> Serialize for Hypercomplex<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Hypercomplex<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

// Operator forms panic on a dimension mismatch; use the `try_*` methods when
// the dimensions are not known to agree.

impl<S: Scalar> Add for &Hypercomplex<S> {
    type Output = Hypercomplex<S>;
    fn add(self, rhs: Self) -> Hypercomplex<S> {
        self.try_add(rhs).expect("hypercomplex dimension mismatch")
    }
}

impl<S: Scalar> Sub for &Hypercomplex<S> {
    type Output = Hypercomplex<S>;
    fn sub(self, rhs: Self) -> Hypercomplex<S> {
        self.try_sub(rhs).expect("hypercomplex dimension mismatch")
    }
}

impl<S: Scalar> Mul for &Hypercomplex<S> {
    type Output = Hypercomplex<S>;
    fn mul(self, rhs: Self) -> Hypercomplex<S> {
        self.try_mul(rhs).expect("hypercomplex dimension mismatch")
    }
}

impl<S: Scalar> Neg for &Hypercomplex<S> {
    type Output = Hypercomplex<S>;
    fn neg(self) -> Hypercomplex<S> {
        Hypercomplex { c: self.c.iter().map(|x| -x.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for Hypercomplex<S> {
            type Output = Hypercomplex<S>;
            fn $m(self, rhs: Self) -> Hypercomplex<S> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Hypercomplex<S> {
    type Output = Hypercomplex<S>;
    fn neg(self) -> Hypercomplex<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [i64; 4]) -> Hypercomplex<Rational> {
        Hypercomplex::from_ints(&c).unwrap()
    }

    fn o(c: [i64; 8]) -> Hypercomplex<Rational> {
        Hypercomplex::from_ints(&c).unwrap()
    }

    fn e(alg: Algebra, i: usize) -> Hypercomplex<Rational> {
        Hypercomplex::basis(alg, i).unwrap()
    }

    #[test]
    fn octonion_table_matches_every_triple() {
        let t = Algebra::Octonion.table();
        for &(a, b, c) in &OCTONION_TRIPLES {
            assert_eq!(t.product(a, b), (1, c));
            assert_eq!(t.product(b, a), (-1, c));
            assert_eq!(t.product(b, c), (1, a));
            assert_eq!(t.product(c, b), (-1, a));
            assert_eq!(t.product(c, a), (1, b));
            assert_eq!(t.product(a, c), (-1, b));
        }
        for i in 1..8 {
            assert_eq!(t.product(i, i), (-1, 0));
            assert_eq!(t.product(0, i), (1, i));
            assert_eq!(t.product(i, 0), (1, i));
        }
        // Each row is a signed permutation.
        for i in 0..8 {
            let mut seen = [false; 8];
            for j in 0..8 {
                seen[t.product(i, j).1] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn quaternion_units() {
        let h = Algebra::Quaternion;
        assert_eq!(&e(h, 1) * &e(h, 2), e(h, 3));
        assert_eq!(&e(h, 2) * &e(h, 3), e(h, 1));
        assert_eq!(&e(h, 3) * &e(h, 1), e(h, 2));
        assert_eq!(&e(h, 2) * &e(h, 1), -e(h, 3));
    }

    #[test]
    fn octonion_e2_e5_is_e7() {
        let o8 = Algebra::Octonion;
        assert_eq!(&e(o8, 2) * &e(o8, 5), e(o8, 7));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q([1, 1, 0, 0]) * &q([1, -1, 0, 0]), q([2, 0, 0, 0]));
    }

    #[test]
    fn mismatched_dimensions_error() {
        let err = q([1, 0, 0, 0]).try_mul(&o([1, 0, 0, 0, 0, 0, 0, 0])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 4, found: 8 });
        assert!(Hypercomplex::<f64>::new(vec![0.0; 3]).is_err());
    }

    #[test]
    fn conj_norm_inverse() {
        assert_eq!(q([0, 1, 1, 0]).conj(), q([0, -1, -1, 0]));
        assert_eq!(q([0, 1, 1, 0]).norm_sq(), Rational::from_i64(2));
        let half = Hypercomplex::quaternion([rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(q([2, 0, 0, 0]).inverse().unwrap(), half);
        assert_eq!(q([0, 0, 0, 0]).inverse().unwrap_err(), Error::InverseOfZero);
    }

    #[test]
    fn associator_examples() {
        let o8 = Algebra::Octonion;
        let a = Hypercomplex::associator(&e(o8, 1), &e(o8, 2), &e(o8, 4)).unwrap();
        assert_eq!(a, e(o8, 7).scale(&Rational::from_i64(2)));
        let z = Hypercomplex::associator(&e(o8, 1), &e(o8, 2), &e(o8, 3)).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn component_access() {
        let x = o([3, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(x.re(), Rational::from_i64(3));
        assert_eq!(q([0, 2, 0, 0]).im(1).unwrap(), Rational::from_i64(2));
        assert_eq!(q([1, 0, 1, 0]).vector_part(), q([0, 0, 1, 0]));
        assert!(q([1, 0, 0, 0]).im(0).is_err());
        assert!(q([1, 0, 0, 0]).im(4).is_err());
    }

    #[test]
    fn left_mul_matrix_of_e1() {
        let m = e(Algebra::Quaternion, 1).left_mul_matrix();
        // real part of e1 x is -x1
        assert_eq!(m[0], vec![rat(0, 1), rat(-1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn text_and_json_round_trip() {
        let x = Hypercomplex::octonion([
            rat(1, 2),
            rat(-3, 1),
            rat(0, 1),
            rat(7, 5),
            rat(0, 1),
            rat(0, 1),
            rat(-1, 9),
            rat(2, 1),
        ]);
        let text = x.to_string();
        assert_eq!(Hypercomplex::<Rational>::parse(8, &text).unwrap(), x);
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.contains("\"1/2\""));
        let back: Hypercomplex<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);

        let y = Hypercomplex::quaternion([0.25, -1.5, 1e-7, 3.0]);
        assert_eq!(Hypercomplex::<f64>::parse(4, &y.to_string()).unwrap(), y);
    }
}
