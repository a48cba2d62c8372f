//! Octonionic and bi-quaternionic regularity checks: Stein–Weiss systems,
//! the universal-`alpha` criterion, slices `F(q, alpha q)` and
//! subharmonicity of `|f|^p`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::hypercomplex::{rat, Algebra, Hypercomplex, Rational};
use crate::polyfrac::{HyperFrac, MonomialKey, RadialFraction, RatPoly, Side};

/// A failed condition of a Stein–Weiss system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteinWeissViolation {
    /// `sum_i d mu_i / d x_i` is not zero.
    Divergence,
    /// `d mu_j / d x_k != d mu_k / d x_j`.
    Asymmetric { j: usize, k: usize },
}

fn require_polynomial(f: &HyperFrac) -> Result<()> {
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial);
    }
    Ok(())
}

fn poly(f: &RadialFraction) -> &RatPoly {
    f.numerator()
}

/// Whether the real components `mu` of `conj(f)` form a Stein–Weiss
/// conjugate harmonic system: divergence free with a symmetric Jacobian.
pub fn stein_weiss_check(f: &HyperFrac) -> Result<(bool, Vec<SteinWeissViolation>)> {
    require_polynomial(f)?;
    let mu = f.conj();
    let d = f.components().len();
    if f.vars() != d {
        return Err(Error::DimensionMismatch { expected: d, found: f.vars() });
    }
    let jac: Vec<Vec<RatPoly>> = (0..d).map(|j| (0..d).map(|k| poly(mu.component(j)).deriv(k)).collect()).collect();
    let mut violations = Vec::new();
    let div = (0..d).try_fold(RatPoly::zero(d), |acc, i| acc.try_add(&jac[i][i]))?;
    if !div.is_zero() {
        violations.push(SteinWeissViolation::Divergence);
    }
    for j in 0..d {
        for k in j + 1..d {
            if jac[j][k] != jac[k][j] {
                violations.push(SteinWeissViolation::Asymmetric { j, k });
            }
        }
    }
    Ok((violations.is_empty(), violations))
}

/// The generalised Cauchy–Riemann system for `f = sum f_j e_j`:
/// `d0 f0 = sum_i di fi`, `di f0 = -d0 fi` and `dk fj = dj fk` for `j, k >= 1`.
pub fn cauchy_riemann_system(f: &HyperFrac) -> Result<bool> {
    require_polynomial(f)?;
    let d = f.components().len();
    let p = |j: usize, k: usize| poly(f.component(j)).deriv(k);
    let sum = (1..d).try_fold(RatPoly::zero(f.vars()), |acc, i| acc.try_add(&p(i, i)))?;
    if p(0, 0) != sum {
        return Ok(false);
    }
    for i in 1..d {
        if p(0, i) != -&p(i, 0) {
            return Ok(false);
        }
    }
    for j in 1..d {
        for k in j + 1..d {
            if p(j, k) != p(k, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of comparing the two characterisations of Stein–Weiss type
/// octonionic functions.
#[derive(Debug, Clone, PartialEq)]
pub struct Prop47Outcome {
    /// `D(f(alpha x)) = 0` for every tested `alpha`.
    pub universal: bool,
    /// The generalised Cauchy–Riemann system holds.
    pub cauchy_riemann: bool,
    /// An `alpha` for which `D(f(alpha x)) != 0`, if any.
    pub witness: Option<Hypercomplex<Rational>>,
}

impl Prop47Outcome {
    pub fn agree(&self) -> bool {
        self.universal == self.cauchy_riemann
    }
}

/// Random octonion with integer coefficients in `[-3, 3]`, never zero.
fn random_octonion(rng: &mut ChaCha8Rng) -> Hypercomplex<Rational> {
    loop {
        let c: Vec<Rational> = (0..8).map(|_| rat(rng.gen_range(-3..=3), 1)).collect();
        if c.iter().any(|x| !x.is_zero()) {
            return Hypercomplex::new(c).expect("eight coefficients");
        }
    }
}

/// `D(f(alpha x))` for the basis units and `random_alphas` seeded random
/// octonions, against the Cauchy–Riemann system.
pub fn prop47(f: &HyperFrac, random_alphas: usize, seed: u64) -> Result<Prop47Outcome> {
    require_polynomial(f)?;
    if f.algebra() != Algebra::Octonion || f.vars() != 8 {
        return Err(Error::InvalidParameter("the universal-alpha criterion needs an octonionic function of 8 variables".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphas = (0..8)
        .map(|i| Hypercomplex::basis(Algebra::Octonion, i).expect("basis unit"))
        .chain((0..random_alphas).map(|_| random_octonion(&mut rng)));
    let mut witness = None;
    for alpha in alphas {
        let g = f.linear_substitute(&alpha.left_mul_matrix())?;
        if !g.dirac(Side::Left, false)?.is_zero() {
            witness = Some(alpha);
            break;
        }
    }
    Ok(Prop47Outcome { universal: witness.is_none(), cauchy_riemann: cauchy_riemann_system(f)?, witness })
}

/// [`prop47`] with 20 random `alpha`, as a report that passes when the
/// two verdicts agree.
pub fn prop47_check(name: &str, f: &HyperFrac, seed: u64) -> Result<CheckReport> {
    let o = prop47(f, 20, seed)?;
    Ok(CheckReport::exact(
        format!("prop47/{name}"),
        json!({"seed": seed, "alphas": 28}),
        json!({"universal": o.universal, "witness": o.witness.as_ref().map(Hypercomplex::to_json)}),
        json!({"cauchy_riemann": o.cauchy_riemann}),
        o.agree(),
    ))
}

const Q1: [usize; 4] = [0, 1, 2, 3];
const Q2: [usize; 4] = [4, 5, 6, 7];

/// For `F(q1, q2)` quaternion valued in 8 variables and left regular in
/// each of `q1 = (x0..x3)` and `q2 = (x4..x7)`: whether
/// `f(q1) = F(q1, alpha q1)` is left regular.
pub fn prop45_check(f: &HyperFrac, alpha: &Hypercomplex<Rational>) -> Result<bool> {
    require_polynomial(f)?;
    if f.algebra() != Algebra::Quaternion || f.vars() != 8 || alpha.algebra() != Algebra::Quaternion {
        return Err(Error::InvalidParameter("expected a quaternionic function of two quaternion variables".into()));
    }
    for axes in [Q1, Q2] {
        if !f.dirac_on(&axes, Side::Left, false)?.is_zero() {
            return Err(Error::Precondition(format!("F is not left regular in variables {axes:?}")));
        }
    }
    let l = alpha.left_mul_matrix();
    let mut a = vec![vec![Rational::zero(); 8]; 8];
    for i in 0..4 {
        a[i][i] = Rational::one();
        a[4 + i][..4].clone_from_slice(&l[i]);
    }
    let g = f.linear_substitute(&a)?;
    Ok(g.dirac_on(&Q1, Side::Left, false)?.is_zero())
}

fn var(dim: usize, i: usize) -> RatPoly {
    RatPoly::var(dim, i)
}

fn from_polys(comps: Vec<RatPoly>) -> HyperFrac {
    HyperFrac::from_polys(comps).expect("valid component count")
}

/// `conj(grad h)`, which satisfies the Cauchy–Riemann system when `h` is harmonic.
fn conj_gradient(h: &RatPoly) -> HyperFrac {
    let d = h.dim();
    from_polys((0..d).map(|i| if i == 0 { h.deriv(0) } else { -&h.deriv(i) }).collect())
}

fn monomial(dim: usize, exps: &[(usize, u16)], c: i64) -> RatPoly {
    let mut e = [0u16; 8];
    for &(i, k) in exps {
        e[i] = k;
    }
    RatPoly::monomial(dim, MonomialKey::from_slice(&e[..dim]), rat(c, 1))
}

/// A named octonionic test function.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub f: HyperFrac,
}

/// The octonionic corpus: conjugate gradients of harmonic polynomials
/// (Stein–Weiss class), left-analytic functions outside that class,
/// constants, the identity and seeded random polynomials of degree at most
/// 3 with coefficients in `[-3, 3]`.
pub fn octonion_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, f: HyperFrac| out.push(CorpusEntry { name, f });
    let harmonic: Vec<(&str, RatPoly)> = vec![
        ("x0", var(8, 0)),
        ("x5", var(8, 5)),
        ("x0x1", monomial(8, &[(0, 1), (1, 1)], 1)),
        ("x2x7", monomial(8, &[(2, 1), (7, 1)], 1)),
        ("x0^2-x3^2", monomial(8, &[(0, 2)], 1).try_sub(&monomial(8, &[(3, 2)], 1)).unwrap()),
        ("x1x2x3", monomial(8, &[(1, 1), (2, 1), (3, 1)], 1)),
        ("x0^3-3x0x4^2", monomial(8, &[(0, 3)], 1).try_sub(&monomial(8, &[(0, 1), (4, 2)], 3)).unwrap()),
        ("x4x5-2x6x7", monomial(8, &[(4, 1), (5, 1)], 1).try_sub(&monomial(8, &[(6, 1), (7, 1)], 2)).unwrap()),
        ("x1^2-x6^2+x0x3", monomial(8, &[(1, 2)], 1)
            .try_sub(&monomial(8, &[(6, 2)], 1))
            .unwrap()
            .try_add(&monomial(8, &[(0, 1), (3, 1)], 1))
            .unwrap()),
    ];
    for (name, h) in harmonic {
        push(format!("conj_grad[{name}]"), conj_gradient(&h));
    }
    let zero = || RatPoly::zero(8);
    let mut constant = vec![zero(); 8];
    constant[0] = RatPoly::constant(8, rat(2, 1));
    constant[5] = RatPoly::constant(8, rat(-1, 3));
    push("constant".into(), from_polys(constant));
    // Fueter-type variable x1 - x0 e1 (also Stein–Weiss).
    let mut fueter = vec![zero(); 8];
    fueter[0] = var(8, 1);
    fueter[1] = -&var(8, 0);
    push("x1-x0e1".into(), from_polys(fueter));
    // Left analytic but not of Stein–Weiss type.
    let mut rot = vec![zero(); 8];
    rot[2] = var(8, 1);
    rot[1] = -&var(8, 2);
    rot[3] = var(8, 0).scale(&rat(-2, 1));
    push("x1e2-x2e1-2x0e3".into(), from_polys(rot));
    let mut rot2 = vec![zero(); 8];
    rot2[5] = var(8, 4);
    rot2[4] = -&var(8, 5);
    rot2[1] = var(8, 0).scale(&rat(-2, 1));
    push("x4e5-x5e4-2x0e1".into(), from_polys(rot2));
    push("identity".into(), HyperFrac::identity(Algebra::Octonion));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..8 {
        push(format!("random[{k}]"), random_polynomial(&mut rng, 8, 3));
    }
    out
}

/// Random polynomial components with at most four terms each.
fn random_polynomial(rng: &mut ChaCha8Rng, dim: usize, max_degree: u16) -> HyperFrac {
    let comps = (0..dim)
        .map(|_| {
            let mut p = RatPoly::zero(dim);
            for _ in 0..rng.gen_range(0..=4) {
                let mut e = [0u16; 8];
                for _ in 0..rng.gen_range(0..=max_degree) {
                    e[rng.gen_range(0..dim)] += 1;
                }
                let c = rng.gen_range(-3..=3);
                p = p.try_add(&RatPoly::monomial(dim, MonomialKey::from_slice(&e[..dim]), rat(c, 1))).unwrap();
            }
            p
        })
        .collect();
    from_polys(comps)
}

/// Quaternionic functions of `(q1, q2)` left regular in each variable.
pub fn biquaternion_corpus() -> Vec<CorpusEntry> {
    let zero = || RatPoly::zero(8);
    // Fueter variable x_i - x_0 e_i in the block starting at `offset`.
    let zeta = |offset: usize, i: usize| {
        let mut c = vec![zero(); 4];
        c[0] = var(8, offset + i);
        c[i] = -&var(8, offset);
        from_polys(c)
    };
    // Same in the sum q1 + q2.
    let zeta_sum = |i: usize| zeta(0, i).try_add(&zeta(4, i)).unwrap();
    let e2 = Hypercomplex::<Rational>::basis(Algebra::Quaternion, 2).unwrap();
    let c = Hypercomplex::quaternion([rat(1, 1), rat(-2, 1), rat(0, 1), rat(3, 1)]);
    let mut constant = vec![zero(); 4];
    constant[0] = RatPoly::constant(8, rat(1, 2));
    constant[3] = RatPoly::constant(8, rat(-5, 1));
    vec![
        CorpusEntry { name: "zeta1(q2)".into(), f: zeta(4, 1) },
        CorpusEntry { name: "zeta2(q1)".into(), f: zeta(0, 2) },
        CorpusEntry { name: "zeta1(q1)+zeta3(q2)".into(), f: zeta(0, 1).try_add(&zeta(4, 3)).unwrap() },
        CorpusEntry { name: "zeta2(q2)*e2".into(), f: zeta(4, 2).mul_const_right(&e2).unwrap() },
        CorpusEntry { name: "zeta3(q1)*c".into(), f: zeta(0, 3).mul_const_right(&c).unwrap() },
        CorpusEntry { name: "zeta1(q1+q2)".into(), f: zeta_sum(1) },
        CorpusEntry { name: "constant".into(), f: from_polys(constant) },
    ]
}

/// Outcome of the finite-difference subharmonicity test.
#[derive(Debug, Clone, PartialEq)]
pub struct SubharmonicOutcome {
    pub tested: usize,
    pub skipped: usize,
    pub failures: usize,
    /// Most negative `Delta |f|^p / scale` seen.
    pub worst: f64,
}

/// Samples `points` seeded points in `[-1, 1]^8` and checks
/// `Delta |f|^p >= -1e-4 * scale` with a fourth-order difference stencil of
/// step `h`, where `scale = |f|^{p-2} |grad f|^2`. Points closer than
/// about `50 h` to a zero of `f` are skipped and counted.
pub fn subharmonicity(f: &HyperFrac, p: f64, points: usize, h: f64, seed: u64) -> Result<SubharmonicOutcome> {
    require_polynomial(f)?;
    if f.algebra() != Algebra::Octonion || f.vars() != 8 {
        return Err(Error::InvalidParameter("expected an octonionic function of 8 variables".into()));
    }
    if !f.dirac(Side::Left, false)?.is_zero() {
        return Err(Error::Precondition("f is not left analytic".into()));
    }
    if !(p >= 6.0 / 7.0 - 1e-15) {
        return Err(Error::InvalidParameter(format!("exponent p = {p} is below 6/7")));
    }
    let c = f.compile();
    let norm = |x: &[f64]| {
        let mut out = [0.0; 8];
        c.eval_into(x, &mut out);
        out
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SubharmonicOutcome { tested: 0, skipped: 0, failures: 0, worst: f64::INFINITY };
    let mut x = [0.0; 8];
    for _ in 0..points {
        for v in x.iter_mut() {
            *v = rng.gen_range(-1.0..1.0);
        }
        let fx = norm(&x);
        let r = fx.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut grad2 = 0.0;
        let mut lap = 0.0;
        let g = |y: &[f64]| norm(y).iter().map(|v| v * v).sum::<f64>().powf(p / 2.0);
        let g0 = r.powf(p);
        for i in 0..8 {
            let mut y = x;
            let mut at = |s: f64| {
                y[i] = x[i] + s;
                (norm(&y), g(&y))
            };
            let (fp, gp) = at(h);
            let (fm, gm) = at(-h);
            let (_, gp2) = at(2.0 * h);
            let (_, gm2) = at(-2.0 * h);
            grad2 += fp.iter().zip(&fm).map(|(a, b)| ((a - b) / (2.0 * h)).powi(2)).sum::<f64>();
            lap += (-gp2 + 16.0 * gp - 30.0 * g0 + 16.0 * gm - gm2) / (12.0 * h * h);
        }
        if grad2 == 0.0 {
            // Locally constant: |f|^p is harmonic there.
            outcome.tested += 1;
            outcome.worst = outcome.worst.min(0.0);
            continue;
        }
        if r < 50.0 * h * grad2.sqrt() {
            outcome.skipped += 1;
            continue;
        }
        let scale = r.powf(p - 2.0) * grad2;
        let ratio = lap / scale;
        outcome.tested += 1;
        outcome.worst = outcome.worst.min(ratio);
        if ratio < -1e-4 {
            outcome.failures += 1;
        }
    }
    Ok(outcome)
}

/// [`subharmonicity`] with `h = 1e-3` as a report.
pub fn subharmonicity_check(name: &str, f: &HyperFrac, p: f64, points: usize, seed: u64) -> Result<CheckReport> {
    let o = subharmonicity(f, p, points, 1e-3, seed)?;
    let worst = if o.worst.is_finite() { o.worst } else { 0.0 };
    Ok(CheckReport::with_deviation(
        format!("subharmonicity/{name}/p={p:.6}"),
        json!({"p": p, "points": points, "seed": seed, "h": 1e-3, "tested": o.tested, "skipped": o.skipped}),
        json!({"failures": o.failures, "worst_ratio": worst}),
        json!({"failures": 0}),
        (-worst).max(0.0),
        (-worst).max(0.0),
        1e-4,
        (o.tested * 33) as u64,
    ))
}
