use super::poly::{CompiledPoly, RatPoly};
use crate::error::{Error, Result};
use crate::hypercomplex::{Rational, Scalar};

/// `P(x) / |x|^{2k}` with `P` a rational polynomial.
///
/// Always stored in canonical form: the numerator is not divisible by
/// `|x|^2` unless `k = 0`, and the zero function has `k = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct RadialFraction {
    num: RatPoly,
    k: u32,
}

impl RadialFraction {
    pub fn new(num: RatPoly, k: u32) -> Self {
        let mut f = RadialFraction { num, k };
        f.canonicalize();
        f
    }

    pub fn polynomial(num: RatPoly) -> Self {
        RadialFraction { num, k: 0 }
    }

    pub fn zero(dim: usize) -> Self {
        RadialFraction { num: RatPoly::zero(dim), k: 0 }
    }

    /// `1 / |x|^2`.
    pub fn inverse_norm_sq(dim: usize) -> Self {
        RadialFraction { num: RatPoly::one(dim), k: 1 }
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 {
            let (q, r) = self.num.div_rem_norm_sq();
            if !r.is_zero() {
                break;
            }
            self.num = q;
            self.k -= 1;
        }
    }

    /// True when no further factor of `|x|^2` can be cancelled.
    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.k == 0;
        }
        self.k == 0 || !self.num.div_rem_norm_sq().1.is_zero()
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.k == 0
    }

    /// Degree of homogeneity `deg P - 2k`, if the numerator is homogeneous.
    pub fn homogeneity(&self) -> Option<i64> {
        self.num
            .homogeneous_degree()
            .map(|d| d as i64 - 2 * self.k as i64)
    }

    fn lift(&self, k: u32) -> RatPoly {
        debug_assert!(k >= self.k);
        let s = RatPoly::norm_sq(self.dim());
        &self.num * &s.pow(k - self.k)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let k = self.k.max(other.k);
        Ok(Self::new(&self.lift(k) + &other.lift(k), k))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RadialFraction { num: -&self.num, k: self.k }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.k)
    }

    pub fn mul_poly(&self, p: &RatPoly) -> Result<Self> {
        Ok(Self::new(self.num.try_mul(p)?, self.k))
    }

    /// `d/dx_i [P / |x|^{2k}] = (d_i P |x|^2 - 2k x_i P) / |x|^{2(k+1)}`.
    pub fn deriv(&self, i: usize) -> Self {
        assert!(i < self.dim(), "axis {i} out of range for dimension {}", self.dim());
        if self.k == 0 {
            return RadialFraction { num: self.num.deriv(i), k: 0 };
        }
        let s = RatPoly::norm_sq(self.dim());
        let a = &self.num.deriv(i) * &s;
        let b = self.num.mul_var(i).scale(&Rational::from_i64(2 * self.k as i64));
        Self::new(&a - &b, self.k + 1)
    }

    /// Iterated derivative `d^{|orders|} / dx_0^{o_0} ... dx_{d-1}^{o_{d-1}}`.
    pub fn deriv_multi(&self, orders: &[u32]) -> Self {
        let mut f = self.clone();
        for (i, &o) in orders.iter().enumerate() {
            for _ in 0..o {
                f = f.deriv(i);
            }
        }
        f
    }

    pub fn laplacian(&self) -> Self {
        (0..self.dim()).fold(Self::zero(self.dim()), |acc, i| {
            acc.try_add(&self.deriv(i).deriv(i)).expect("same dimension")
        })
    }

    pub fn eval<S: Scalar>(&self, x: &[S]) -> Result<S> {
        let p = self.num.eval(x)?;
        if self.k == 0 {
            return Ok(p);
        }
        let r2 = x.iter().fold(S::zero(), |acc, v| acc + v.clone() * v.clone());
        if r2.is_zero() {
            return Err(Error::Singular("evaluation at the origin".into()));
        }
        let mut den = S::one();
        for _ in 0..self.k {
            den = den * r2.clone();
        }
        Ok(p / den)
    }

    pub fn linear_substitute(&self, a: &[Vec<Rational>]) -> Result<Self> {
        if self.k != 0 {
            return Err(Error::NotPolynomial);
        }
        Ok(Self::polynomial(self.num.linear_substitute(a)?))
    }

    pub fn compile(&self) -> CompiledRadial {
        CompiledRadial { num: self.num.compile(), k: self.k as i32 }
    }
}

impl std::fmt::Debug for RadialFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} / |x|^{}", self.num, 2 * self.k)
    }
}

/// Floating evaluator for a [`RadialFraction`]; no singularity check.
#[derive(Debug, Clone)]
pub struct CompiledRadial {
    num: CompiledPoly,
    k: i32,
}

impl CompiledRadial {
    #[inline]
    pub fn eval(&self, x: &[f64]) -> f64 {
        let p = self.num.eval(x);
        if self.k == 0 {
            return p;
        }
        let r2: f64 = x.iter().map(|v| v * v).sum();
        p / r2.powi(self.k)
    }

    /// Evaluation when `|x|^2` is already known.
    #[inline]
    pub fn eval_with_r2(&self, x: &[f64], r2: f64) -> f64 {
        let p = self.num.eval(x);
        if self.k == 0 {
            p
        } else {
            p / r2.powi(self.k)
        }
    }
}
