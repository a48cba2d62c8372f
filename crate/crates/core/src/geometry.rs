//! Siegel half spaces, the quaternionic and octonionic Heisenberg groups
//! acting on them, the Cayley transform onto the unit ball and the
//! homogeneous length on the group.
//!
//! Every operation is generic over [`Scalar`], so group axioms can be
//! checked exactly in rational mode and the same code serves quadrature
//! grids in floating mode.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypercomplex::{Algebra, Hypercomplex, Scalar};

/// Tolerance for `boundary_unparam` and unit checks in floating mode.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// A point `(q', q_{n+1})` of `A^n x A` for `A` the complex numbers,
/// quaternions or octonions.
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelPoint<S: Scalar> {
    pub horizontal: Vec<Hypercomplex<S>>,
    pub vertical: Hypercomplex<S>,
}

impl<S: Scalar> SiegelPoint<S> {
    pub fn new(horizontal: Vec<Hypercomplex<S>>, vertical: Hypercomplex<S>) -> Result<Self> {
        let dim = vertical.dim();
        if let Some(h) = horizontal.iter().find(|h| h.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
        }
        Ok(SiegelPoint { horizontal, vertical })
    }

    /// The point `(0, ..., 0, v)`.
    pub fn on_axis(n: usize, vertical: Hypercomplex<S>) -> Self {
        let alg = vertical.algebra();
        SiegelPoint { horizontal: vec![Hypercomplex::zero(alg); n], vertical }
    }

    pub fn algebra(&self) -> Algebra {
        self.vertical.algebra()
    }

    pub fn n(&self) -> usize {
        self.horizontal.len()
    }

    /// `r = Re q_{n+1} - |q'|^2`.
    pub fn height(&self) -> S {
        self.horizontal
            .iter()
            .fold(self.vertical.re(), |acc, h| acc - h.norm_sq())
    }

    pub fn in_domain(&self) -> bool {
        let r = self.height();
        !r.is_negative() && !r.is_negligible(0.0)
    }

    /// Exact in rational mode; `|r| <= tol` in floating mode.
    pub fn on_boundary(&self, tol: f64) -> bool {
        self.height().is_negligible(tol)
    }

    /// `(delta q', delta^2 q_{n+1})`.
    pub fn dilate(&self, delta: &S) -> Result<Self> {
        check_positive(delta)?;
        Ok(SiegelPoint {
            horizontal: self.horizontal.iter().map(|h| h.scale(delta)).collect(),
            vertical: self.vertical.scale(&(delta.clone() * delta.clone())),
        })
    }

    /// `(R_1 q_1, ..., R_n q_n, q_{n+1})` for unit `R_i`.
    pub fn rotate(&self, r: &[Hypercomplex<S>]) -> Result<Self> {
        if r.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: r.len() });
        }
        let mut horizontal = Vec::with_capacity(r.len());
        for (ri, qi) in r.iter().zip(&self.horizontal) {
            if !(ri.norm_sq() - S::one()).is_negligible(BOUNDARY_TOL) {
                return Err(Error::InvalidParameter(format!("rotation component {ri} is not a unit")));
            }
            horizontal.push(ri.try_mul(qi)?);
        }
        Ok(SiegelPoint { horizontal, vertical: self.vertical.clone() })
    }

    /// `F_eps` shift `q -> q + eps e_0` of the vertical coordinate.
    pub fn vertical_shift(&self, eps: &S) -> Self {
        let mut p = self.clone();
        p.vertical = p.vertical.try_add(&Hypercomplex::real(p.algebra(), eps.clone())).expect("same algebra");
        p
    }

    /// Reads `[omega, t]` off a boundary point.
    pub fn boundary_unparam(&self, kind: GroupKind) -> Result<GroupElement<S>> {
        if !self.on_boundary(BOUNDARY_TOL) {
            return Err(Error::NotOnBoundary(self.height().to_f64()));
        }
        let t = self.vertical.coeffs()[1..].to_vec();
        GroupElement::new(kind, self.horizontal.clone(), t)
    }

    pub fn to_f64(&self) -> SiegelPoint<f64> {
        SiegelPoint {
            horizontal: self.horizontal.iter().map(Hypercomplex::to_f64).collect(),
            vertical: self.vertical.to_f64(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "horizontal": self.horizontal.iter().map(Hypercomplex::to_json).collect::<Vec<_>>(),
            "vertical": self.vertical.to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let horizontal = v
            .get("horizontal")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `horizontal` array".into()))?
            .iter()
            .map(Hypercomplex::from_json)
            .collect::<Result<_>>()?;
        let vertical = Hypercomplex::from_json(
            v.get("vertical").ok_or_else(|| Error::Parse("missing `vertical`".into()))?,
        )?;
        Self::new(horizontal, vertical)
    }
}

fn check_positive<S: Scalar>(delta: &S) -> Result<()> {
    if delta.is_negative() || delta.is_negligible(0.0) {
        return Err(Error::InvalidParameter(format!("dilation must be positive, got {}", delta.render())));
    }
    Ok(())
}

/// Which Heisenberg law to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// `Q_n = H^n x R^3`, `t + s - 2 Im(conj(beta) . alpha)`.
    Quaternionic,
    /// `O = O x R^7`, `t + s + 2 Im(conj(alpha) beta)`.
    Octonionic,
}

impl GroupKind {
    pub fn algebra(self) -> Algebra {
        match self {
            GroupKind::Quaternionic => Algebra::Quaternion,
            GroupKind::Octonionic => Algebra::Octonion,
        }
    }

    pub fn center_dim(self) -> usize {
        self.algebra().dim() - 1
    }
}

/// An element `[omega, t]` of a Heisenberg group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<S: Scalar> {
    pub kind: GroupKind,
    pub omega: Vec<Hypercomplex<S>>,
    pub t: Vec<S>,
}

impl<S: Scalar> GroupElement<S> {
    pub fn new(kind: GroupKind, omega: Vec<Hypercomplex<S>>, t: Vec<S>) -> Result<Self> {
        let dim = kind.algebra().dim();
        if let Some(w) = omega.iter().find(|w| w.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: w.dim() });
        }
        if kind == GroupKind::Octonionic && omega.len() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: omega.len() });
        }
        if t.len() != kind.center_dim() {
            return Err(Error::DimensionMismatch { expected: kind.center_dim(), found: t.len() });
        }
        Ok(GroupElement { kind, omega, t })
    }

    pub fn identity(kind: GroupKind, n: usize) -> Self {
        let n = if kind == GroupKind::Octonionic { 1 } else { n };
        GroupElement {
            kind,
            omega: vec![Hypercomplex::zero(kind.algebra()); n],
            t: vec![S::zero(); kind.center_dim()],
        }
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::InvalidParameter("group kind mismatch".into()));
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: other.n() });
        }
        Ok(())
    }

    /// `[alpha, t] <> [beta, s]` by the law of `self.kind`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let omega = self
            .omega
            .iter()
            .zip(&other.omega)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        let twist = match self.kind {
            GroupKind::Quaternionic => sum_conj_products(&other.omega, &self.omega)?.scale(&S::from_i64(-2)),
            GroupKind::Octonionic => sum_conj_products(&self.omega, &other.omega)?.scale(&S::from_i64(2)),
        };
        let t = self
            .t
            .iter()
            .zip(&other.t)
            .zip(&twist.coeffs()[1..])
            .map(|((a, b), c)| a.clone() + b.clone() + c.clone())
            .collect();
        Ok(GroupElement { kind: self.kind, omega, t })
    }

    /// `[-omega, -t]`.
    pub fn inverse(&self) -> Self {
        GroupElement {
            kind: self.kind,
            omega: self.omega.iter().map(|w| -w).collect(),
            t: self.t.iter().map(|x| -x.clone()).collect(),
        }
    }

    /// `(delta omega, delta^2 t)`.
    pub fn dilate(&self, delta: &S) -> Result<Self> {
        check_positive(delta)?;
        let d2 = delta.clone() * delta.clone();
        Ok(GroupElement {
            kind: self.kind,
            omega: self.omega.iter().map(|w| w.scale(delta)).collect(),
            t: self.t.iter().map(|x| x.clone() * d2.clone()).collect(),
        })
    }

    fn e_dot_t(&self) -> Hypercomplex<S> {
        Hypercomplex::from_real_and_vector(S::zero(), &self.t).expect("shape validated")
    }

    fn omega_norm_sq(&self) -> S {
        self.omega.iter().fold(S::zero(), |acc, w| acc + w.norm_sq())
    }

    /// `(q' + omega, q_{n+1} + |omega|^2 + 2 conj(omega) . q' + e.t)`.
    pub fn translate(&self, p: &SiegelPoint<S>) -> Result<SiegelPoint<S>> {
        if p.algebra() != self.kind.algebra() {
            return Err(Error::DimensionMismatch { expected: self.kind.algebra().dim(), found: p.algebra().dim() });
        }
        if p.n() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: p.n() });
        }
        let horizontal = p
            .horizontal
            .iter()
            .zip(&self.omega)
            .map(|(q, w)| q.try_add(w))
            .collect::<Result<Vec<_>>>()?;
        let cross = sum_conj_products(&self.omega, &p.horizontal)?.scale(&S::from_i64(2));
        let vertical = p
            .vertical
            .try_add(&Hypercomplex::real(p.algebra(), self.omega_norm_sq()))?
            .try_add(&cross)?
            .try_add(&self.e_dot_t())?;
        Ok(SiegelPoint { horizontal, vertical })
    }

    /// `[omega, t] -> (omega, |omega|^2 + e.t)`, the image of the origin.
    pub fn boundary_param(&self) -> SiegelPoint<S> {
        let vertical = self
            .e_dot_t()
            .try_add(&Hypercomplex::real(self.kind.algebra(), self.omega_norm_sq()))
            .expect("same algebra");
        SiegelPoint { horizontal: self.omega.clone(), vertical }
    }

    /// `max(|omega|, |t_i|^{1/2})`.
    pub fn rho_length(&self) -> f64 {
        let w = self.omega_norm_sq().to_f64().sqrt();
        self.t.iter().map(|x| x.to_f64().abs().sqrt()).fold(w, f64::max)
    }

    pub fn to_f64(&self) -> GroupElement<f64> {
        GroupElement {
            kind: self.kind,
            omega: self.omega.iter().map(Hypercomplex::to_f64).collect(),
            t: self.t.iter().map(Scalar::to_f64).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": match self.kind { GroupKind::Quaternionic => "quaternionic", GroupKind::Octonionic => "octonionic" },
            "omega": self.omega.iter().map(Hypercomplex::to_json).collect::<Vec<_>>(),
            "t": self.t.iter().map(Scalar::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `sum_l conj(a_l) b_l`.
fn sum_conj_products<S: Scalar>(a: &[Hypercomplex<S>], b: &[Hypercomplex<S>]) -> Result<Hypercomplex<S>> {
    let alg = a.first().or(b.first()).map(Hypercomplex::algebra).unwrap_or(Algebra::Quaternion);
    a.iter()
        .zip(b)
        .try_fold(Hypercomplex::zero(alg), |acc, (x, y)| acc.try_add(&x.conj().try_mul(y)?))
}

/// Homogeneous dimension `4n + 6` of `Q_n`.
pub fn homogeneous_dim(n: usize) -> usize {
    4 * n + 6
}

/// Outcome of testing `translate(a, translate(b, p)) = translate(a <> b, p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionReport {
    pub kind: GroupKind,
    pub trials: usize,
    pub failures: usize,
    pub max_deviation: f64,
}

impl ActionReport {
    pub fn is_action(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the action-compatibility test over the given triples `(a, b, p)`.
pub fn action_compatibility<S: Scalar>(
    triples: &[(GroupElement<S>, GroupElement<S>, SiegelPoint<S>)],
    tol: f64,
) -> Result<ActionReport> {
    let kind = triples.first().map(|t| t.0.kind).unwrap_or(GroupKind::Quaternionic);
    let mut failures = 0;
    let mut max_deviation: f64 = 0.0;
    for (a, b, p) in triples {
        let lhs = a.translate(&b.translate(p)?)?;
        let rhs = a.mul(b)?.translate(p)?;
        let mut ok = true;
        let pairs = lhs.horizontal.iter().chain([&lhs.vertical]).zip(rhs.horizontal.iter().chain([&rhs.vertical]));
        for (x, y) in pairs {
            for c in x.try_sub(y)?.coeffs() {
                ok &= c.is_negligible(tol);
                max_deviation = max_deviation.max(c.to_f64().abs());
            }
        }
        if !ok {
            failures += 1;
        }
    }
    Ok(ActionReport { kind, trials: triples.len(), failures, max_deviation })
}

/// A point of the octonionic unit ball in `O^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint<S: Scalar> {
    pub sigma1: Hypercomplex<S>,
    pub sigma2: Hypercomplex<S>,
}

impl<S: Scalar> BallPoint<S> {
    pub fn norm_sq(&self) -> S {
        self.sigma1.norm_sq() + self.sigma2.norm_sq()
    }

    pub fn in_ball(&self) -> bool {
        (self.norm_sq() - S::one()).is_negative()
    }
}

/// `(1 + conj(w)) (1 - w) / |1 + w|^2`, shared by both directions.
fn cayley_vertical<S: Scalar>(w: &Hypercomplex<S>) -> Result<(Hypercomplex<S>, Hypercomplex<S>, S)> {
    let one = Hypercomplex::one(w.algebra());
    let p = one.try_add(w)?;
    let d = p.norm_sq();
    if d.is_negligible(0.0) {
        return Err(Error::Singular("Cayley transform pole at -1".into()));
    }
    let pc = p.conj();
    let v = pc.try_mul(&one.try_sub(w)?)?.scale(&(S::one() / d.clone()));
    Ok((pc, v, d))
}

/// Cayley transform from the octonionic Siegel half space to the unit ball.
pub fn cayley<S: Scalar>(tau: &SiegelPoint<S>) -> Result<BallPoint<S>> {
    if tau.n() != 1 || tau.algebra() != Algebra::Octonion {
        return Err(Error::InvalidParameter("Cayley transform needs an octonionic point with n = 1".into()));
    }
    let (pc, sigma2, d) = cayley_vertical(&tau.vertical)?;
    let sigma1 = tau.horizontal[0].try_mul(&pc)?.scale(&(S::from_i64(2) / d));
    Ok(BallPoint { sigma1, sigma2 })
}

/// Inverse Cayley transform.
pub fn cayley_inv<S: Scalar>(sigma: &BallPoint<S>) -> Result<SiegelPoint<S>> {
    let (pc, tau2, d) = cayley_vertical(&sigma.sigma2)?;
    let tau1 = sigma.sigma1.try_mul(&pc)?.scale(&(S::one() / d));
    SiegelPoint::new(vec![tau1], tau2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{rat, Rational};

    fn q(c: [i64; 4]) -> Hypercomplex<Rational> {
        Hypercomplex::from_ints(&c).unwrap()
    }

    fn tq(t: [i64; 3]) -> Vec<Rational> {
        t.iter().map(|&v| rat(v, 1)).collect()
    }

    fn qel(w: [i64; 4], t: [i64; 3]) -> GroupElement<Rational> {
        GroupElement::new(GroupKind::Quaternionic, vec![q(w)], tq(t)).unwrap()
    }

    #[test]
    fn quaternionic_product_example() {
        let a = qel([0, 1, 0, 0], [0, 0, 0]);
        let b = qel([0, 0, 1, 0], [0, 0, 0]);
        assert_eq!(a.mul(&b).unwrap(), qel([0, 1, 1, 0], [0, 0, -2]));
        let s = qel([0, 0, 0, 0], [1, 2, 3]);
        let a = qel([1, 2, 3, 4], [5, 6, 7]);
        assert_eq!(a.mul(&s).unwrap(), qel([1, 2, 3, 4], [6, 8, 10]));
        assert_eq!(a.mul(&a.inverse()).unwrap(), GroupElement::identity(GroupKind::Quaternionic, 1));
    }

    #[test]
    fn translation_examples() {
        let h = qel([0, 1, 0, 0], [0, 0, 0]);
        let p = SiegelPoint::on_axis(1, q([1, 0, 0, 0]));
        let image = h.translate(&p).unwrap();
        assert_eq!(image, SiegelPoint::new(vec![q([0, 1, 0, 0])], q([2, 0, 0, 0])).unwrap());
        assert_eq!(image.height(), rat(1, 1));
        let id = GroupElement::identity(GroupKind::Quaternionic, 1);
        assert_eq!(id.translate(&image).unwrap(), image);
    }

    #[test]
    fn dilation_and_rotation() {
        let p = SiegelPoint::on_axis(1, q([1, 0, 0, 0]));
        assert_eq!(p.dilate(&rat(2, 1)).unwrap().vertical, q([4, 0, 0, 0]));
        assert!(p.dilate(&rat(0, 1)).is_err());
        let p = SiegelPoint::new(vec![q([0, 0, 1, 0])], q([1, 0, 0, 0])).unwrap();
        let r = p.rotate(&[q([0, 1, 0, 0])]).unwrap();
        assert_eq!(r.horizontal[0], q([0, 0, 0, 1]));
        assert_eq!(r.height(), p.height());
        assert!(p.rotate(&[q([1, 1, 0, 0])]).is_err());
    }

    #[test]
    fn boundary_identification() {
        let id = GroupElement::<Rational>::identity(GroupKind::Quaternionic, 1);
        assert_eq!(id.boundary_param(), SiegelPoint::on_axis(1, q([0, 0, 0, 0])));
        let h = qel([0, 1, 0, 0], [1, 0, 0]);
        let b = h.boundary_param();
        assert_eq!(b.vertical, q([1, 1, 0, 0]));
        assert_eq!(b.boundary_unparam(GroupKind::Quaternionic).unwrap(), h);
        let inside = SiegelPoint::on_axis(1, q([1, 0, 0, 0]));
        assert!(matches!(inside.boundary_unparam(GroupKind::Quaternionic), Err(Error::NotOnBoundary(_))));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(qel([0, 0, 0, 0], [4, 0, 0]).rho_length(), 2.0);
        assert_eq!(qel([0, 1, 0, 0], [0, 0, 0]).rho_length(), 1.0);
        assert_eq!(homogeneous_dim(1), 10);
    }

    #[test]
    fn cayley_examples() {
        let o = |i: usize| Hypercomplex::<Rational>::basis(Algebra::Octonion, i).unwrap();
        let zero = Hypercomplex::<Rational>::zero(Algebra::Octonion);
        let center = SiegelPoint::new(vec![zero.clone()], o(0)).unwrap();
        let c = cayley(&center).unwrap();
        assert!(c.sigma1.is_zero() && c.sigma2.is_zero());
        let b = SiegelPoint::new(vec![zero.clone()], o(1)).unwrap();
        let c = cayley(&b).unwrap();
        assert_eq!(c.sigma2, -&o(1));
        assert_eq!(c.norm_sq(), rat(1, 1));
        let pole = SiegelPoint::new(vec![zero], -&o(0)).unwrap();
        assert!(matches!(cayley(&pole), Err(Error::Singular(_))));
    }
}
