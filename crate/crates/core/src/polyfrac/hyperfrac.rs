use num_traits::Zero;

use super::poly::RatPoly;
use super::radial::{CompiledRadial, RadialFraction};
use crate::error::{Error, Result};
use crate::hypercomplex::{Algebra, Hypercomplex, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `D f = sum_i e_i df/dx_i`
    Left,
    /// `f D = sum_i df/dx_i e_i`
    Right,
}

/// A hypercomplex-valued function whose `e_i` coefficient is a
/// [`RadialFraction`] in a common set of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperFrac {
    vars: usize,
    comps: Vec<RadialFraction>,
}

impl HyperFrac {
    pub fn new(comps: Vec<RadialFraction>) -> Result<Self> {
        Algebra::from_dim(comps.len())?;
        let vars = comps[0].dim();
        if let Some(c) = comps.iter().find(|c| c.dim() != vars) {
            return Err(Error::DimensionMismatch { expected: vars, found: c.dim() });
        }
        Ok(HyperFrac { vars, comps })
    }

    pub fn from_polys(polys: Vec<RatPoly>) -> Result<Self> {
        Self::new(polys.into_iter().map(RadialFraction::polynomial).collect())
    }

    pub fn zero(algebra: Algebra, vars: usize) -> Self {
        HyperFrac { vars, comps: vec![RadialFraction::zero(vars); algebra.dim()] }
    }

    /// The identity map `x -> sum_i x_i e_i`.
    pub fn identity(algebra: Algebra) -> Self {
        let d = algebra.dim();
        HyperFrac {
            vars: d,
            comps: (0..d).map(|i| RadialFraction::polynomial(RatPoly::var(d, i))).collect(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::from_dim(self.comps.len()).expect("validated at construction")
    }

    pub fn components(&self) -> &[RadialFraction] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &RadialFraction {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(RadialFraction::is_zero)
    }

    pub fn is_polynomial(&self) -> bool {
        self.comps.iter().all(RadialFraction::is_polynomial)
    }

    /// Common degree of homogeneity of the nonzero components.
    pub fn homogeneity(&self) -> Option<i64> {
        let mut degs = self.comps.iter().filter(|c| !c.is_zero()).map(RadialFraction::homogeneity);
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.comps.len() != other.comps.len() {
            return Err(Error::DimensionMismatch { expected: self.comps.len(), found: other.comps.len() });
        }
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: other.vars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(HyperFrac { vars: self.vars, comps })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(RadialFraction::neg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|f| f.scale(c))
    }

    pub fn conj(&self) -> Self {
        let mut out = self.neg();
        out.comps[0] = self.comps[0].clone();
        out
    }

    fn map(&self, f: impl Fn(&RadialFraction) -> RadialFraction) -> Self {
        HyperFrac { vars: self.vars, comps: self.comps.iter().map(f).collect() }
    }

    pub fn deriv(&self, i: usize) -> Self {
        self.map(|f| f.deriv(i))
    }

    pub fn deriv_multi(&self, orders: &[u32]) -> Self {
        self.map(|f| f.deriv_multi(orders))
    }

    pub fn laplacian(&self) -> Self {
        self.map(RadialFraction::laplacian)
    }

    /// Dirac operator with the basis unit `e_i` paired with variable `x_i`.
    pub fn dirac(&self, side: Side, conjugated: bool) -> Result<Self> {
        if self.vars != self.comps.len() {
            return Err(Error::DimensionMismatch { expected: self.comps.len(), found: self.vars });
        }
        let axes: Vec<usize> = (0..self.vars).collect();
        self.dirac_on(&axes, side, conjugated)
    }

    /// Dirac operator in a subset of the variables: `axes[i]` is the
    /// variable differentiated against basis unit `e_i`. With `conjugated`
    /// the units are replaced by their conjugates.
    pub fn dirac_on(&self, axes: &[usize], side: Side, conjugated: bool) -> Result<Self> {
        let m = self.comps.len();
        if axes.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: axes.len() });
        }
        if let Some(&a) = axes.iter().find(|&&a| a >= self.vars) {
            return Err(Error::IndexOutOfRange { index: a, dim: self.vars });
        }
        let table = self.algebra().table();
        let mut out = vec![RadialFraction::zero(self.vars); m];
        for (i, &axis) in axes.iter().enumerate() {
            let flip = conjugated && i > 0;
            for (j, comp) in self.comps.iter().enumerate() {
                let g = comp.deriv(axis);
                if g.is_zero() {
                    continue;
                }
                let (s, k) = match side {
                    Side::Left => table.product(i, j),
                    Side::Right => table.product(j, i),
                };
                let positive = (s > 0) != flip;
                out[k] = if positive { out[k].try_add(&g)? } else { out[k].try_sub(&g)? };
            }
        }
        Ok(HyperFrac { vars: self.vars, comps: out })
    }

    /// Left product `a * f` by a constant.
    pub fn mul_const_left(&self, a: &Hypercomplex<Rational>) -> Result<Self> {
        self.mul_const(a, Side::Left)
    }

    /// Right product `f * a` by a constant.
    pub fn mul_const_right(&self, a: &Hypercomplex<Rational>) -> Result<Self> {
        self.mul_const(a, Side::Right)
    }

    fn mul_const(&self, a: &Hypercomplex<Rational>, side: Side) -> Result<Self> {
        let m = self.comps.len();
        if a.dim() != m {
            return Err(Error::DimensionMismatch { expected: m, found: a.dim() });
        }
        let table = self.algebra().table();
        let mut out = vec![RadialFraction::zero(self.vars); m];
        for (i, ai) in a.coeffs().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, comp) in self.comps.iter().enumerate() {
                let (s, k) = match side {
                    Side::Left => table.product(i, j),
                    Side::Right => table.product(j, i),
                };
                let term = comp.scale(&(if s > 0 { ai.clone() } else { -ai.clone() }));
                out[k] = out[k].try_add(&term)?;
            }
        }
        Ok(HyperFrac { vars: self.vars, comps: out })
    }

    /// `f(A x)`; only defined for polynomial components.
    pub fn linear_substitute(&self, a: &[Vec<Rational>]) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|c| c.linear_substitute(a))
            .collect::<Result<_>>()?;
        Ok(HyperFrac { vars: self.vars, comps })
    }

    pub fn eval<S: Scalar>(&self, x: &[S]) -> Result<Hypercomplex<S>> {
        if x.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: x.len() });
        }
        Hypercomplex::new(self.comps.iter().map(|c| c.eval(x)).collect::<Result<_>>()?)
    }

    pub fn compile(&self) -> CompiledHyperFrac {
        CompiledHyperFrac {
            vars: self.vars,
            comps: self.comps.iter().map(RadialFraction::compile).collect(),
        }
    }
}

/// Floating evaluator for a [`HyperFrac`].
#[derive(Debug, Clone)]
pub struct CompiledHyperFrac {
    vars: usize,
    comps: Vec<CompiledRadial>,
}

impl CompiledHyperFrac {
    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn eval_into(&self, x: &[f64], out: &mut [f64]) {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        for (o, c) in out.iter_mut().zip(&self.comps) {
            *o = c.eval_with_r2(x, r2);
        }
    }

    pub fn eval(&self, x: &[f64]) -> Hypercomplex<f64> {
        let mut out = vec![0.0; self.comps.len()];
        self.eval_into(x, &mut out);
        Hypercomplex::new(out).expect("component count validated")
    }
}
