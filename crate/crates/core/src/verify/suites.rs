//! Named groups of checks and a runner that executes them concurrently.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::decay::{kernel_axis_check, kernel_decay_check, kernel_scale_invariance_check};
use super::flambda::{closed_form_check, coefficient_system_check, parity_valid_specs, reproducing_check, TestFunctionSpec};
use super::octonion::{
    biquaternion_corpus, octonion_corpus, prop45_check, prop47, prop47_check, stein_weiss_check, subharmonicity_check,
};
use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::geometry::{action_compatibility, cayley, cayley_inv, GroupElement, GroupKind, SiegelPoint};
use crate::hypercomplex::{rat, Algebra, Hypercomplex, Rational};
use crate::kernel::{cauchy_kernel, szego_eval, complex_szego_closed_form_symbolic, szego_density, KernelOrder};
use crate::polyfrac::Side;
use crate::quadrature::gamma::{prop32_exact, SqrtPiSeries};
use crate::quadrature::spherical::{integrate_r3, prop31_sweep, DecayHint, R3Options};

/// A named group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Algebra,
    Kernel,
    Geometry,
    Props,
    Reproducing,
    Octonion,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "algebra", "kernel", "geometry", "props", "reproducing", "octonion"];

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Algebra,
                Suite::Kernel,
                Suite::Geometry,
                Suite::Props,
                Suite::Reproducing,
                Suite::Octonion,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "algebra" => Suite::Algebra,
            "kernel" => Suite::Kernel,
            "geometry" => Suite::Geometry,
            "props" => Suite::Props,
            "reproducing" => Suite::Reproducing,
            "octonion" => Suite::Octonion,
            other => {
                return Err(Error::Parse(format!("unknown suite `{other}` (expected one of {})", Self::NAMES.join(", "))))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::All,
            Suite::Algebra,
            Suite::Kernel,
            Suite::Geometry,
            Suite::Props,
            Suite::Reproducing,
            Suite::Octonion,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Self::NAMES[i])
    }
}

/// Parameters shared by the suites. `None` selects each check's default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Quaternionic dimension for the reproducing check.
    pub n: Option<usize>,
    /// Relative tolerance for the reproducing check.
    pub tol: Option<f64>,
    /// Evaluation budget for each boundary integral.
    pub budget: Option<u64>,
    pub seed: u64,
    /// Samples per shell for the kernel decay check.
    pub decay_samples: usize,
    /// Random points per function for the subharmonicity check.
    pub subharmonic_points: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: None, tol: None, budget: None, seed: 0, decay_samples: 100_000, subharmonic_points: 1000 }
    }
}

type Job = Box<dyn Fn() -> Result<Vec<CheckReport>> + Send + Sync>;

fn job(f: impl Fn() -> Result<Vec<CheckReport>> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn one(f: impl Fn() -> Result<CheckReport> + Send + Sync + 'static) -> Job {
    Box::new(move || f().map(|r| vec![r]))
}

fn error_report(name: &str, e: &Error) -> CheckReport {
    CheckReport::exact(format!("{name}/error"), json!({}), e.to_string(), "no error", false)
}

/// Runs every check of `suite` (concurrently) and returns the reports
/// sorted by name. A check that fails with an error yields a failing
/// report carrying the message.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let jobs: Vec<(String, Job)> = suite
        .members()
        .into_iter()
        .flat_map(|s| {
            jobs_for(s, cfg).into_iter().map(move |(name, j)| {
                let prefix = if name.is_empty() { s.to_string() } else { format!("{s}/{name}") };
                (prefix, j)
            })
        })
        .collect();
    let mut out: Vec<CheckReport> = jobs
        .par_iter()
        .flat_map_iter(|(name, j)| match j() {
            Ok(rs) => rs
                .into_iter()
                .map(|mut r| {
                    let (suite, _) = name.split_once('/').unwrap_or((name, ""));
                    let bare = r.name.strip_prefix(suite).and_then(|rest| rest.strip_prefix('/')).unwrap_or(&r.name);
                    r.name = format!("{name}/{bare}");
                    r
                })
                .collect(),
            Err(e) => vec![error_report(name, &e)],
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

fn jobs_for(suite: Suite, cfg: &SuiteConfig) -> Vec<(String, Job)> {
    let cfg = *cfg;
    let mut jobs: Vec<(String, Job)> = Vec::new();
    match suite {
        Suite::All => {}
        Suite::Algebra => {
            let seed = cfg.seed;
            jobs.push(("exact".into(), job(move || algebra_checks(seed, 200))));
        }
        Suite::Kernel => {
            for n in 1..=4 {
                jobs.push((format!("density/n={n}"), job(move || density_checks(n, cfg.seed))));
                jobs.push((format!("unified/n={n}"), one(move || unified_check(n))));
            }
            jobs.push(("values".into(), job(kernel_value_checks)));
            jobs.push(("invariance/n=1".into(), job(move || invariance_checks(cfg.seed, 200))));
            jobs.push((String::new(), one(move || kernel_decay_check(1, cfg.decay_samples, cfg.seed))));
            jobs.push((String::new(), one(move || kernel_scale_invariance_check(1, 1000, &[0.5, 2.0, 3.0, 7.5], cfg.seed))));
            jobs.push((String::new(), one(move || kernel_axis_check(1))));
        }
        Suite::Geometry => {
            for (kind, n) in [(GroupKind::Quaternionic, 1), (GroupKind::Quaternionic, 2), (GroupKind::Octonionic, 1)] {
                jobs.push((format!("group/{kind:?}/n={n}"), job(move || group_axiom_checks(kind, n, cfg.seed, 50))));
                jobs.push((format!("action/{kind:?}/n={n}"), one(move || action_check(kind, n, cfg.seed, 100))));
            }
            for (kind, n) in [(GroupKind::Quaternionic, 1), (GroupKind::Quaternionic, 2), (GroupKind::Octonionic, 1)] {
                jobs.push((format!("height/{kind:?}/n={n}"), one(move || height_check(kind, n, cfg.seed, 1000))));
            }
            jobs.push(("cayley".into(), one(move || cayley_check(cfg.seed, 10_000))));
        }
        Suite::Props => {
            jobs.push(("prop32".into(), job(move || prop32_checks(cfg.seed))));
            for x0 in [0.5, 1.0] {
                jobs.push((format!("prop31/x0={x0}"), job(move || prop31_checks(3, x0, 1e-6))));
            }
            for n in 1..=3 {
                jobs.push((format!("coefficients/n={n}"), one(move || coefficient_system_check(n))));
            }
            jobs.push((
                "closed_form".into(),
                job(|| parity_valid_specs(1, 6).iter().map(closed_form_check).collect()),
            ));
        }
        Suite::Reproducing => {
            let n = cfg.n.unwrap_or(1);
            let tol = cfg.tol.unwrap_or(1e-3);
            let budget = cfg.budget.unwrap_or(20_000_000);
            for t in [[2, 0, 0, 1], [3, 0, 0, 1]] {
                jobs.push((
                    String::new(),
                    one(move || reproducing_check(&TestFunctionSpec::new(n, t)?, tol, budget)),
                ));
            }
        }
        Suite::Octonion => {
            jobs.push(("prop47".into(), job(move || prop47_checks(cfg.seed))));
            jobs.push(("prop45".into(), job(move || prop45_checks(cfg.seed))));
            jobs.push(("subharmonic".into(), job(move || subharmonic_checks(cfg.seed, cfg.subharmonic_points))));
        }
    }
    jobs
}

fn random_element(rng: &mut ChaCha8Rng, algebra: Algebra) -> Hypercomplex<Rational> {
    Hypercomplex::new((0..algebra.dim()).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect())
        .expect("valid dimension")
}

fn random_nonzero(rng: &mut ChaCha8Rng, algebra: Algebra) -> Hypercomplex<Rational> {
    loop {
        let x = random_element(rng, algebra);
        if !x.is_zero() {
            return x;
        }
    }
}

fn count_check(name: &str, inputs: serde_json::Value, trials: usize, failures: usize) -> CheckReport {
    CheckReport::exact(name, inputs, json!({"failures": failures, "trials": trials}), json!({"failures": 0, "trials": trials}), failures == 0)
}

/// Exact algebra identities on seeded random rational elements.
fn algebra_checks(seed: u64, trials: usize) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for alg in [Algebra::Complex, Algebra::Quaternion, Algebra::Octonion] {
        let (mut norm, mut conj, mut inv, mut alt, mut moufang, mut assoc) = (0, 0, 0, 0, 0, 0);
        for _ in 0..trials {
            let x = random_nonzero(&mut rng, alg);
            let y = random_element(&mut rng, alg);
            let z = random_element(&mut rng, alg);
            let xy = x.try_mul(&y)?;
            norm += (xy.norm_sq() != x.norm_sq() * y.norm_sq()) as usize;
            conj += (xy.conj() != y.conj().try_mul(&x.conj())?) as usize;
            inv += (x.try_mul(&x.inverse()?)? != Hypercomplex::one(alg)) as usize;
            let left_alt = x.try_mul(&x)?.try_mul(&y)? != x.try_mul(&xy)?;
            let right_alt = y.try_mul(&x)?.try_mul(&x)? != y.try_mul(&x.try_mul(&x)?)?;
            alt += (left_alt || right_alt) as usize;
            // z(x(zy)) = ((zx)z)y
            let lhs = z.try_mul(&x.try_mul(&z.try_mul(&y)?)?)?;
            let rhs = z.try_mul(&x)?.try_mul(&z)?.try_mul(&y)?;
            moufang += (lhs != rhs) as usize;
            assoc += (!Hypercomplex::associator(&x, &y, &z)?.is_zero()) as usize;
        }
        let name = format!("{alg:?}").to_lowercase();
        let inputs = json!({"seed": seed, "trials": trials});
        out.push(count_check(&format!("{name}/norm_multiplicative"), inputs.clone(), trials, norm));
        out.push(count_check(&format!("{name}/conj_antiautomorphism"), inputs.clone(), trials, conj));
        out.push(count_check(&format!("{name}/inverse"), inputs.clone(), trials, inv));
        out.push(count_check(&format!("{name}/alternative"), inputs.clone(), trials, alt));
        out.push(count_check(&format!("{name}/moufang"), inputs.clone(), trials, moufang));
        if alg == Algebra::Octonion {
            // Random octonions essentially never associate.
            out.push(CheckReport::verdict(
                "octonion/non_associative",
                inputs,
                json!({"non_associative_triples": assoc}),
                assoc > trials / 2,
            ));
        } else {
            out.push(count_check(&format!("{name}/associative"), inputs, trials, assoc));
        }
    }
    let e = |i| Hypercomplex::<Rational>::basis(Algebra::Octonion, i).expect("basis");
    let a = Hypercomplex::associator(&e(1), &e(2), &e(4))?;
    out.push(CheckReport::verdict("octonion/associator_e1_e2_e4", json!({}), a.to_json(), !a.is_zero()));
    Ok(out)
}

/// `D s = 0` from both sides, homogeneity (symbolic and numeric).
fn density_checks(n: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let order = KernelOrder::quaternionic(n)?;
    let s = szego_density(order);
    let inputs = json!({"n": n, "m": 4});
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        let d = s.body.dirac(side, false)?;
        out.push(CheckReport::verdict(format!("dirac_{side:?}").to_lowercase(), inputs.clone(), json!(d.is_zero()), d.is_zero()));
    }
    let deg = s.body.homogeneity();
    out.push(CheckReport::exact(
        "homogeneity_symbolic",
        inputs.clone(),
        json!(deg),
        json!(order.homogeneity()),
        deg == Some(order.homogeneity()),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let mut worst: f64 = 0.0;
    let k = (2 * n + 3) as i32;
    for _ in 0..50 {
        let nu = Hypercomplex::quaternion(std::array::from_fn(|_| rng.gen_range(-2.0..2.0)));
        let base = s.eval(&nu)?;
        for t in [0.5, 2.0, 5.0] {
            let scaled = s.eval(&nu.scale(&t))?.scale(&t.powi(k));
            worst = worst.max(scaled.max_abs_diff(&base) / base.norm());
        }
    }
    out.push(CheckReport::with_deviation(
        "homogeneity_numeric",
        json!({"n": n, "t": [0.5, 2.0, 5.0], "points": 50}),
        json!(worst),
        json!(0.0),
        worst,
        worst,
        1e-12,
        200,
    ));
    Ok(out)
}

/// The `m = 2` density equals `2^{n-1} n! pi^{-(n+1)} nu^{-(n+1)}` exactly.
fn unified_check(n: usize) -> Result<CheckReport> {
    let s = szego_density(KernelOrder::new(n, 2)?);
    let closed = complex_szego_closed_form_symbolic(n)?;
    Ok(CheckReport::exact(
        "complex_closed_form",
        json!({"n": n, "m": 2}),
        s.to_json(),
        closed.to_json(),
        s.same_function(&closed),
    ))
}

fn kernel_value_checks() -> Result<Vec<CheckReport>> {
    let one = Hypercomplex::<f64>::one(Algebra::Quaternion);
    let s1 = szego_density(KernelOrder::quaternionic(1)?).eval(&one)?;
    let e1 = cauchy_kernel(4)?.eval(&one)?;
    let mut expect_s = vec![0.0; 4];
    expect_s[0] = 24.0 / PI.powi(4);
    let mut expect_e = vec![0.0; 4];
    expect_e[0] = 1.0 / (2.0 * PI * PI);
    Ok(vec![
        CheckReport::numeric("s_at_one/n=1", json!({"nu": [1, 0, 0, 0]}), s1.coeffs(), &expect_s, 1e-14, 1),
        CheckReport::numeric("cauchy_at_one/m=4", json!({"nu": [1, 0, 0, 0]}), e1.coeffs(), &expect_e, 1e-14, 1),
    ])
}

fn random_float_point(rng: &mut ChaCha8Rng, n: usize) -> Result<SiegelPoint<f64>> {
    let horizontal: Vec<_> =
        (0..n).map(|_| Hypercomplex::quaternion(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))).collect();
    let mut v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    v[0] = horizontal.iter().map(|h| h.norm_sq()).sum::<f64>() + rng.gen_range(0.1..2.0);
    SiegelPoint::new(horizontal, Hypercomplex::quaternion(v))
}

/// Dilation, rotation and translation invariance of `S`, and its Hermitian symmetry.
fn invariance_checks(seed: u64, trials: usize) -> Result<Vec<CheckReport>> {
    let order = KernelOrder::quaternionic(1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(271));
    let mut worst = [0.0f64; 4];
    for _ in 0..trials {
        let q = random_float_point(&mut rng, 1)?;
        let w = random_float_point(&mut rng, 1)?;
        let base = szego_eval(order, &q, &w)?;
        let rel = |x: Hypercomplex<f64>| x.max_abs_diff(&base) / base.norm();

        let delta = rng.gen_range(0.2..5.0f64);
        let dil = szego_eval(order, &q.dilate(&delta)?, &w.dilate(&delta)?)?.scale(&delta.powi(10));
        worst[0] = worst[0].max(rel(dil));

        let r = Hypercomplex::quaternion(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
        let r = r.scale(&(1.0 / r.norm()));
        let rot = szego_eval(order, &q.rotate(std::slice::from_ref(&r))?, &w.rotate(std::slice::from_ref(&r))?)?;
        worst[1] = worst[1].max(rel(rot));

        let h = GroupElement::new(
            GroupKind::Quaternionic,
            vec![Hypercomplex::quaternion(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))],
            (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        )?;
        let tr = szego_eval(order, &h.translate(&q)?, &h.translate(&w)?)?;
        worst[2] = worst[2].max(rel(tr));

        worst[3] = worst[3].max(rel(szego_eval(order, &w, &q)?.conj()));
    }
    let names = ["dilation", "rotation", "translation", "hermitian"];
    let tols = [1e-10, 1e-10, 1e-10, 1e-12];
    Ok((0..4)
        .map(|i| {
            CheckReport::with_deviation(
                names[i],
                json!({"n": 1, "seed": seed, "trials": trials}),
                json!(worst[i]),
                json!(0.0),
                worst[i],
                worst[i],
                tols[i],
                trials as u64,
            )
        })
        .collect())
}

fn random_group_element(rng: &mut ChaCha8Rng, kind: GroupKind, n: usize) -> Result<GroupElement<Rational>> {
    let omega = (0..n).map(|_| random_element(rng, kind.algebra())).collect();
    let t = (0..kind.center_dim()).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
    GroupElement::new(kind, omega, t)
}

fn random_domain_point(rng: &mut ChaCha8Rng, algebra: Algebra, n: usize) -> Result<SiegelPoint<Rational>> {
    let horizontal: Vec<_> = (0..n).map(|_| random_element(rng, algebra)).collect();
    let h2 = horizontal.iter().fold(Rational::zero(), |acc, h| acc + h.norm_sq());
    let mut vertical = random_element(rng, algebra).into_coeffs();
    vertical[0] = h2 + rat(rng.gen_range(1..=20), 4);
    SiegelPoint::new(horizontal, Hypercomplex::new(vertical)?)
}

/// Associativity, identity and inverse, exactly.
fn group_axiom_checks(kind: GroupKind, n: usize, seed: u64, trials: usize) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
    let e = GroupElement::<Rational>::identity(kind, n);
    let (mut assoc, mut ident, mut inv) = (0, 0, 0);
    for _ in 0..trials {
        let a = random_group_element(&mut rng, kind, n)?;
        let b = random_group_element(&mut rng, kind, n)?;
        let c = random_group_element(&mut rng, kind, n)?;
        assoc += (a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)?) as usize;
        ident += (a.mul(&e)? != a || e.mul(&a)? != a) as usize;
        inv += (a.mul(&a.inverse())? != e || a.inverse().mul(&a)? != e) as usize;
    }
    let inputs = json!({"kind": format!("{kind:?}"), "n": n, "seed": seed, "trials": trials});
    Ok(vec![
        count_check("associative", inputs.clone(), trials, assoc),
        count_check("identity", inputs.clone(), trials, ident),
        count_check("inverse", inputs, trials, inv),
    ])
}

/// Reports whether left translation by the printed law is a group action.
fn action_check(kind: GroupKind, n: usize, seed: u64, trials: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(17 + n as u64));
    let triples = (0..trials)
        .map(|_| {
            Ok((
                random_group_element(&mut rng, kind, n)?,
                random_group_element(&mut rng, kind, n)?,
                random_domain_point(&mut rng, kind.algebra(), n)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let r = action_compatibility(&triples, 0.0)?;
    Ok(CheckReport::verdict(
        "is_action",
        json!({"kind": format!("{kind:?}"), "n": n, "trials": r.trials}),
        json!({"failures": r.failures, "is_action": r.is_action()}),
        r.is_action(),
    ))
}

/// Translations preserve the height `Re q_{n+1} - |q'|^2`.
fn height_check(kind: GroupKind, n: usize, seed: u64, trials: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(31 + n as u64));
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let g = random_group_element(&mut rng, kind, n)?.to_f64();
        let p = random_domain_point(&mut rng, kind.algebra(), n)?.to_f64();
        let moved = g.translate(&p)?;
        let scale = 1.0 + moved.vertical.norm();
        worst = worst.max((moved.height() - p.height()).abs() / scale);
    }
    Ok(CheckReport::with_deviation(
        "translation_preserves_height",
        json!({"kind": format!("{kind:?}"), "n": n, "trials": trials}),
        json!(worst),
        json!(0.0),
        worst,
        worst,
        1e-12,
        trials as u64,
    ))
}

/// Cayley round trip on random interior points, image strictly inside the ball.
fn cayley_check(seed: u64, trials: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(101));
    let mut worst: f64 = 0.0;
    let mut outside = 0;
    for _ in 0..trials {
        let h: [f64; 8] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        let mut v: [f64; 8] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        v[0] = h.iter().map(|x| x * x).sum::<f64>() + rng.gen_range(1e-3..4.0);
        let tau = SiegelPoint::new(vec![Hypercomplex::octonion(h)], Hypercomplex::octonion(v))?;
        let sigma = cayley(&tau)?;
        outside += (!sigma.in_ball()) as usize;
        let back = cayley_inv(&sigma)?;
        let scale = 1.0 + tau.vertical.norm();
        let dev = back.horizontal[0].max_abs_diff(&tau.horizontal[0]).max(back.vertical.max_abs_diff(&tau.vertical));
        worst = worst.max(dev / scale);
    }
    let dev = if outside > 0 { f64::INFINITY } else { worst };
    Ok(CheckReport::with_deviation(
        "cayley_roundtrip",
        json!({"trials": trials}),
        json!({"max_deviation": worst, "outside_ball": outside}),
        json!({"max_deviation": 0.0, "outside_ball": 0}),
        dev,
        dev,
        1e-12,
        trials as u64,
    ))
}

/// `int_{R^3} |x|^{l0} x^l e^{-a|x|} dx` against the exact moment.
pub fn prop32_check(a: f64, l0: i32, l: [u32; 3], tol: f64) -> Result<CheckReport> {
    let exact = prop32_exact(l0, l)?;
    let numeric = integrate_r3(
        |x| {
            let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
            r.powi(l0) * x[0].powi(l[0] as i32) * x[1].powi(l[1] as i32) * x[2].powi(l[2] as i32) * (-a * r).exp()
        },
        DecayHint::Exponential { rate: a },
        R3Options::default(),
    )?;
    let inputs = json!({"a": a, "l0": l0, "l": l});
    let name = format!("prop32/a={a}/l0={l0}/l={l:?}");
    if exact.is_zero() {
        // Odd parity: compare against the size of the integrand.
        let total = l0 + l.iter().sum::<u32>() as i32;
        let scale = prop32_exact(total, [0, 0, 0])?.eval(a);
        let dev = numeric.value.abs() / scale;
        return Ok(CheckReport::with_deviation(name, inputs, json!(numeric.value), json!(0.0), numeric.value.abs(), dev, 1e-10, numeric.n_evals));
    }
    Ok(CheckReport::numeric(name, inputs, &[numeric.value], &[exact.eval(a)], tol, numeric.n_evals))
}

/// Every exponent pattern with `l0 + l1 + l2 + l3 <= 4` for `a in {1, 2, 4}`
/// and two seeded random rates, plus the exact instance `8 pi`.
fn prop32_checks(seed: u64) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(7));
    let mut rates = vec![1.0, 2.0, 4.0];
    rates.extend((0..2).map(|_| (rng.gen_range(0.5..5.0f64) * 1000.0).round() / 1000.0));
    let mut out = Vec::new();
    for &a in &rates {
        for l0 in 0..=4u32 {
            for l1 in 0..=4 - l0 {
                for l2 in 0..=4 - l0 - l1 {
                    for l3 in 0..=4 - l0 - l1 - l2 {
                        out.push(prop32_check(a, l0 as i32, [l1, l2, l3], 1e-6)?);
                    }
                }
            }
        }
    }
    let v = prop32_exact(0, [0, 0, 0])?.eval_rational(&Rational::one());
    out.push(CheckReport::exact("prop32/exact/a=1/l=0", json!({"a": 1, "l": 0}), v.to_string(), "8*pi^1", v == SqrtPiSeries::monomial(rat(8, 1), 2)));
    Ok(out)
}

fn prop31_checks(max_order: u32, x0: f64, tol: f64) -> Result<Vec<CheckReport>> {
    Ok(prop31_sweep(max_order, x0, tol)?
        .into_iter()
        .map(|r| {
            let dev = r.deviation();
            CheckReport::with_deviation(
                format!("prop31/p={:?}/q={:?}", r.p, r.q),
                json!({"p": r.p, "q": r.q, "x0": r.x0, "scale": r.scale, "error_estimate": r.error_estimate}),
                json!(r.lhs),
                json!(r.rhs),
                (r.lhs - r.rhs).abs(),
                dev,
                tol,
                r.n_evals,
            )
        })
        .collect())
}

fn prop47_checks(seed: u64) -> Result<Vec<CheckReport>> {
    let corpus = octonion_corpus(seed);
    let mut out = Vec::new();
    let (mut universal, mut not_universal, mut implication_failures) = (0, 0, 0);
    for e in &corpus {
        out.push(prop47_check(&e.name, &e.f, seed)?);
        let o = prop47(&e.f, 20, seed)?;
        if o.universal {
            universal += 1;
        } else {
            not_universal += 1;
        }
        if stein_weiss_check(&e.f)?.0 && !o.universal {
            implication_failures += 1;
        }
    }
    out.push(CheckReport::verdict(
        "corpus_classes",
        json!({"seed": seed, "size": corpus.len()}),
        json!({"universal": universal, "not_universal": not_universal}),
        corpus.len() >= 20 && universal > 0 && not_universal > 0,
    ));
    out.push(count_check("stein_weiss_implies_universal", json!({"seed": seed}), corpus.len(), implication_failures));
    Ok(out)
}

fn prop45_checks(seed: u64) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(45));
    let mut alphas = vec![
        Hypercomplex::<Rational>::basis(Algebra::Quaternion, 2)?,
        Hypercomplex::zero(Algebra::Quaternion),
    ];
    alphas.extend((0..3).map(|_| random_element(&mut rng, Algebra::Quaternion)));
    let mut out = Vec::new();
    for e in biquaternion_corpus() {
        let mut fails = 0;
        for a in &alphas {
            fails += (!prop45_check(&e.f, a)?) as usize;
        }
        out.push(count_check(&format!("prop45/{}", e.name), json!({"alphas": alphas.len(), "seed": seed}), alphas.len(), fails));
    }
    Ok(out)
}

fn subharmonic_checks(seed: u64, points: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for e in octonion_corpus(seed) {
        if !e.f.dirac(Side::Left, false)?.is_zero() {
            continue;
        }
        for p in [6.0 / 7.0, 1.0, 2.0] {
            out.push(subharmonicity_check(&e.name, &e.f, p, points, seed)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig { decay_samples: 500, subharmonic_points: 100, ..SuiteConfig::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn algebra_suite_passes() {
        let r = run_suite(Suite::Algebra, &quick());
        assert!(r.len() > 15);
        assert!(r.iter().all(|c| c.pass), "{:?}", r.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn geometry_suite_passes() {
        let r = run_suite(Suite::Geometry, &quick());
        assert!(r.iter().all(|c| c.pass), "{:?}", r.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn octonion_suite_passes_and_is_deterministic() {
        let a = run_suite(Suite::Octonion, &quick());
        assert!(a.iter().all(|c| c.pass), "{:?}", a.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        assert_eq!(a, run_suite(Suite::Octonion, &quick()));
    }

    #[test]
    fn kernel_suite_passes() {
        let r = run_suite(Suite::Kernel, &quick());
        assert!(r.iter().all(|c| c.pass), "{:?}", r.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn prop32_odd_cases_vanish() {
        let r = prop32_check(2.0, 1, [1, 0, 0], 1e-6).unwrap();
        assert!(r.pass, "{}", r.to_jsonl());
        let r = prop32_check(1.0, 0, [2, 2, 0], 1e-6).unwrap();
        assert!(r.pass, "{}", r.to_jsonl());
    }

    #[test]
    fn errors_become_failing_reports() {
        let r = error_report("x", &Error::NotPolynomial);
        assert!(!r.pass && r.name == "x/error");
    }
}
