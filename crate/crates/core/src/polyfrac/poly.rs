use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypercomplex::{Rational, Scalar};

/// Largest number of variables a polynomial may have.
pub const MAX_VARS: usize = 8;

/// Exponent vector of a monomial. Unused trailing slots are zero.
///
/// Ordering is lexicographic with `x_0` most significant, so the largest key
/// of a polynomial has the highest power of `x_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MonomialKey(pub [u16; MAX_VARS]);

impl MonomialKey {
    pub fn from_slice(exps: &[u16]) -> Self {
        let mut k = [0u16; MAX_VARS];
        k[..exps.len()].copy_from_slice(exps);
        MonomialKey(k)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    fn bump(mut self, i: usize, by: u16) -> Self {
        self.0[i] = self.0[i].checked_add(by).expect("monomial exponent overflow");
        self
    }

    fn times(mut self, other: &MonomialKey) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("monomial exponent overflow");
        }
        self
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    dim: usize,
    terms: BTreeMap<MonomialKey, Rational>,
}

impl RatPoly {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&dim), "polynomial dimension {dim} out of range");
        RatPoly { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(dim, MonomialKey::default(), c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn var(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        Self::monomial(dim, MonomialKey::default().bump(i, 1), Rational::one())
    }

    pub fn monomial(dim: usize, key: MonomialKey, c: Rational) -> Self {
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(key, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<'a>(dim: usize, terms: impl IntoIterator<Item = (&'a [u16], Rational)>) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (exps, c) in terms {
            if exps.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: exps.len() });
            }
            p.add_term(MonomialKey::from_slice(exps), c);
        }
        Ok(p)
    }

    /// `x_0^2 + ... + x_{d-1}^2`.
    pub fn norm_sq(dim: usize) -> Self {
        let mut p = Self::zero(dim);
        for i in 0..dim {
            p.terms.insert(MonomialKey::default().bump(i, 2), Rational::one());
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &MonomialKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MonomialKey::degree).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(MonomialKey::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, key: MonomialKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.times(kb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        RatPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (*m, c.clone() * k.clone())).collect(),
        }
    }

    /// Multiplies by the monomial `x_i`.
    pub fn mul_var(&self, i: usize) -> Self {
        RatPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.bump(i, 1), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.dim);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn deriv(&self, i: usize) -> Self {
        assert!(i < self.dim, "axis {i} out of range for dimension {}", self.dim);
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut k = *m;
            k.0[i] -= 1;
            out.add_term(k, c.clone() * Rational::from_i64(e as i64));
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        (0..self.dim).fold(Self::zero(self.dim), |acc, i| &acc + &self.deriv(i).deriv(i))
    }

    /// Division by `x_0^2 + ... + x_{d-1}^2`, returning `(quotient, remainder)`.
    ///
    /// The remainder has `x_0`-degree below 2 and is unique, so the
    /// polynomial is divisible exactly when the remainder is zero.
    pub fn div_rem_norm_sq(&self) -> (Self, Self) {
        let mut work = self.terms.clone();
        let mut quot = Self::zero(self.dim);
        let mut rem = Self::zero(self.dim);
        while let Some((key, c)) = work.pop_last() {
            if key.0[0] < 2 {
                rem.terms.insert(key, c);
                continue;
            }
            let mut q = key;
            q.0[0] -= 2;
            for i in 1..self.dim {
                let t = q.bump(i, 2);
                let v = work.remove(&t).unwrap_or_else(Rational::zero) - c.clone();
                if !v.is_zero() {
                    work.insert(t, v);
                }
            }
            quot.add_term(q, c);
        }
        (quot, rem)
    }

    /// Evaluates at `x` (length `dim`) in either scalar mode.
    pub fn eval<S: Scalar>(&self, x: &[S]) -> Result<S> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        let mut powers: Vec<Vec<S>> = x.iter().map(|xi| vec![S::one(), xi.clone()]).collect();
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut term = S::from_rational(c);
            for (i, &e) in m.0[..self.dim].iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table[table.len() - 1].clone() * x[i].clone();
                    table.push(next);
                }
                term = term * table[e as usize].clone();
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Substitutes `x_j -> sum_k a[j][k] x_k` for a square rational matrix.
    pub fn linear_substitute(&self, a: &[Vec<Rational>]) -> Result<Self> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: a.len() });
        }
        if let Some(row) = a.iter().find(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, found: row.len() });
        }
        let forms: Vec<RatPoly> = a
            .iter()
            .map(|row| {
                let mut p = Self::zero(self.dim);
                for (k, c) in row.iter().enumerate() {
                    p.add_term(MonomialKey::default().bump(k, 1), c.clone());
                }
                p
            })
            .collect();
        let mut powers: Vec<Vec<RatPoly>> = forms.iter().map(|f| vec![Self::one(self.dim), f.clone()]).collect();
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.dim, c.clone());
            for j in 0..self.dim {
                let e = m.0[j] as usize;
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &forms[j];
                    powers[j].push(next);
                }
                term = &term * &powers[j][e];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Floating-point evaluator for hot loops.
    pub fn compile(&self) -> CompiledPoly {
        let max_exp = self
            .terms
            .keys()
            .flat_map(|m| m.0[..self.dim].iter().copied())
            .max()
            .unwrap_or(0) as usize;
        CompiledPoly {
            dim: self.dim,
            max_exp,
            terms: self.terms.iter().map(|(m, c)| (c.to_f64(), m.0)).collect(),
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly[{}](", self.dim)?;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, &e) in m.0[..self.dim].iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{v}")?,
                    _ => write!(f, "*x{v}^{e}")?,
                }
            }
        }
        write!(f, ")")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: Self) -> RatPoly {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: Self) -> RatPoly {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: Self) -> RatPoly {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        self.scale(&-Rational::one())
    }
}

/// A polynomial with `f64` coefficients, evaluated with per-variable power
/// tables.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    dim: usize,
    max_exp: usize,
    terms: Vec<(f64, [u16; MAX_VARS])>,
}

impl CompiledPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        let stride = self.max_exp + 1;
        let mut pw = [0.0f64; MAX_VARS * 32];
        let mut heap;
        let table: &mut [f64] = if self.dim * stride <= pw.len() {
            &mut pw[..self.dim * stride]
        } else {
            heap = vec![0.0; self.dim * stride];
            &mut heap
        };
        for (i, &xi) in x.iter().enumerate().take(self.dim) {
            let row = &mut table[i * stride..(i + 1) * stride];
            row[0] = 1.0;
            for e in 1..stride {
                row[e] = row[e - 1] * xi;
            }
        }
        let mut acc = 0.0;
        for (c, m) in &self.terms {
            let mut t = *c;
            for i in 0..self.dim {
                let e = m[i] as usize;
                if e != 0 {
                    t *= table[i * stride + e];
                }
            }
            acc += t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::rat;

    fn x(dim: usize, i: usize) -> RatPoly {
        RatPoly::var(dim, i)
    }

    #[test]
    fn ring_operations() {
        assert!((&x(4, 0) + &(-&x(4, 0))).is_zero());
        let p = &x(4, 0) * &x(4, 1);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&MonomialKey::from_slice(&[1, 1, 0, 0])), rat(1, 1));
        let sq = (&x(4, 0) * &x(4, 0)).scale(&rat(3, 2));
        assert_eq!(sq.coeff(&MonomialKey::from_slice(&[2, 0, 0, 0])), rat(3, 2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(x(4, 0).try_add(&x(8, 0)).is_err());
        assert!(x(4, 0).try_mul(&x(2, 0)).is_err());
    }

    #[test]
    fn division_by_norm_square() {
        let s = RatPoly::norm_sq(4);
        let p = &(&s * &x(4, 1)) + &x(4, 2).scale(&rat(5, 1));
        let (q, r) = p.div_rem_norm_sq();
        assert_eq!(q, x(4, 1));
        assert_eq!(r, x(4, 2).scale(&rat(5, 1)));
        let (q2, r2) = s.pow(3).div_rem_norm_sq();
        assert_eq!(q2, s.pow(2));
        assert!(r2.is_zero());
    }

    #[test]
    fn substitution_examples() {
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| rat((i == j) as i64, 1)).collect())
            .collect();
        let p = &x(4, 1) * &x(4, 1);
        assert_eq!(p.linear_substitute(&id).unwrap(), p);
        let two: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| rat(2 * (i == j) as i64, 1)).collect())
            .collect();
        assert_eq!(p.linear_substitute(&two).unwrap(), p.scale(&rat(4, 1)));
    }

    #[test]
    fn compiled_matches_exact() {
        let p = &(&x(3, 0) * &x(3, 0)).scale(&rat(7, 3)) - &(&x(3, 1) * &x(3, 2)).scale(&rat(1, 2));
        let pt = [0.5, -1.25, 2.0];
        let exact = p.eval(&[rat(1, 2), rat(-5, 4), rat(2, 1)]).unwrap();
        assert!((p.compile().eval(&pt) - exact.to_f64()).abs() < 1e-14);
        assert!((p.eval(&pt).unwrap() - exact.to_f64()).abs() < 1e-14);
    }
}
