//! Acceptance criteria 1 to 10. Runs without the libtest harness so that
//! the one-line `PASS`/`FAIL` verdicts are always printed; exits nonzero if
//! any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use szego::kernel::{complex_szego_closed_form_symbolic, szego_density, KernelOrder};
use szego::polyfrac::Side;
use szego::quadrature::gamma::prop32_exact;
use szego::quadrature::spherical::prop31_sweep;
use szego::verify::flambda::{base_point, closed_form_check, f_lambda, parity_valid_specs, solved_coefficients};
use szego::verify::{
    coefficient_system_check, f_lambda_closed_form, prop32_check, reproducing_check, run_suite, CheckReport, Suite,
    SuiteConfig, TestFunctionSpec,
};
use szego::{Algebra, Hypercomplex, Rational};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn summarize(reports: &[CheckReport]) -> (bool, String) {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    let worst = reports.iter().map(|r| r.rel_deviation).fold(0.0, f64::max);
    let mut detail = format!("{} checks, {} failed, worst rel deviation {worst:.2e}", reports.len(), failed.len());
    if let Some(first) = failed.first() {
        detail.push_str(&format!(", first failure {first}"));
    }
    (failed.is_empty() && !reports.is_empty(), detail)
}

fn within(start: Instant, limit: Duration, pass: bool, detail: String) -> Outcome {
    let t = start.elapsed();
    outcome(pass && t < limit, format!("{detail}; {:.1}s (limit {}s)", t.as_secs_f64(), limit.as_secs()))
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for n in 1..=4 {
        let order = KernelOrder::quaternionic(n).unwrap();
        let s = szego_density(order);
        for side in [Side::Left, Side::Right] {
            if !s.body.dirac(side, false).unwrap().is_zero() {
                return outcome(false, format!("D s != 0 ({side:?}) for n = {n}"));
            }
        }
        for _ in 0..100 {
            let nu = Hypercomplex::quaternion(std::array::from_fn(|_| rng.gen_range(-2.0..2.0)));
            let base = s.eval(&nu).unwrap();
            for t in [0.5f64, 2.0, 5.0] {
                let scaled = s.eval(&nu.scale(&t)).unwrap().scale(&t.powi(2 * n as i32 + 3));
                worst = worst.max(scaled.max_abs_diff(&base) / base.norm());
            }
        }
    }
    outcome(worst <= 1e-12, format!("D s = 0 exactly for n = 1..4; homogeneity worst rel {worst:.2e} (tol 1e-12)"))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for n in 1..=4usize {
        let s = szego_density(KernelOrder::new(n, 2).unwrap());
        if !s.same_function(&complex_szego_closed_form_symbolic(n).unwrap()) {
            return outcome(false, format!("symbolic mismatch for n = {n}"));
        }
        // n! / (4 pi^{n+1}) r^{-(n+1)} with r = nu / 2.
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        for _ in 0..100 {
            let z = Complex64::new(rng.gen_range(0.1..3.0), rng.gen_range(-3.0..3.0));
            let expect = fact / (4.0 * PI.powi(n as i32 + 1)) * (z / 2.0).powi(-(n as i32 + 1));
            let got = s.eval(&Hypercomplex::new(vec![z.re, z.im]).unwrap()).unwrap();
            let got = Complex64::new(got.coeffs()[0], got.coeffs()[1]);
            worst = worst.max((got - expect).norm() / expect.norm());
        }
    }
    outcome(worst < 1e-12, format!("symbolic identity for n = 1..4; complex-kernel oracle worst rel {worst:.2e}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for a in [1.0, 2.0, 4.0] {
        for l0 in 0..=4u32 {
            for l1 in 0..=4 - l0 {
                for l2 in 0..=4 - l0 - l1 {
                    for l3 in 0..=4 - l0 - l1 - l2 {
                        reports.push(prop32_check(a, l0 as i32, [l1, l2, l3], 1e-6).unwrap());
                    }
                }
            }
        }
    }
    let v = prop32_exact(0, [0, 0, 0]).unwrap().eval_rational(&Rational::from_integer(1.into()));
    let exact_ok = (v.to_f64() - 8.0 * PI).abs() < 1e-13 && v.as_monomial().map(|(c, k)| (c.to_string(), k)) == Some(("8".into(), 2));
    let (pass, detail) = summarize(&reports);
    within(start, Duration::from_secs(60), pass && exact_ok, format!("{detail}; a=1, l=0 gives {v} (8 pi exact: {exact_ok})"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut failed = 0;
    for x0 in [0.5, 1.0] {
        for r in prop31_sweep(3, x0, 1e-6).unwrap() {
            count += 1;
            worst = worst.max(r.deviation());
            failed += (!r.pass) as usize;
        }
    }
    within(
        start,
        Duration::from_secs(300),
        failed == 0 && count > 0,
        format!("{count} (alpha, gamma, x0) cases, {failed} failed, worst rel {worst:.2e} (tol 1e-6)"),
    )
}

fn criterion_5() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for n in 1..=3usize {
        let r = coefficient_system_check(n).unwrap();
        let c = solved_coefficients(n);
        // -2^{2n-2} / pi^{2n+2}, as (rational, power of sqrt(pi)).
        let c0 = c[&(2 * n as u32, 0, 0)][0].as_monomial();
        let expect = (Rational::from_integer(-(num_bigint::BigInt::from(4).pow(n as u32 - 1))), -(4 * n as i32 + 4));
        let others_zero = c.iter().all(|(k, v)| v.iter().enumerate().all(|(i, s)| (*k == (2 * n as u32, 0, 0) && i == 0) || s.is_zero()));
        let ok = r.pass && c0 == Some(expect) && others_zero;
        pass &= ok;
        details.push(format!("n={n}: {}", if ok { "exact" } else { "mismatch" }));
    }
    outcome(pass, format!("{} over the {{0,1,2}}^3 grid", details.join(", ")))
}

fn criterion_6() -> Outcome {
    let specs = parity_valid_specs(1, 6);
    let reports: Vec<CheckReport> = specs.iter().map(|s| closed_form_check(s).unwrap()).collect();
    let (pass, detail) = summarize(&reports);
    let spec = TestFunctionSpec::new(1, [2, 0, 0, 1]).unwrap();
    let direct = f_lambda::<Rational>(&spec, &base_point(1)).unwrap();
    let closed = f_lambda_closed_form(&spec).unwrap();
    let mut expect = Hypercomplex::<Rational>::zero(Algebra::Quaternion).into_coeffs();
    expect[3] = Rational::new(5.into(), 8.into());
    let expect = Hypercomplex::new(expect).unwrap();
    let hand = direct == expect && closed == expect;
    outcome(pass && hand, format!("{detail}; t=(2,0,0,1) gives {direct} and {closed}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let reports: Vec<CheckReport> = [[2, 0, 0, 1], [3, 0, 0, 1]]
        .iter()
        .map(|&t| reproducing_check(&TestFunctionSpec::new(1, t).unwrap(), 1e-3, 20_000_000).unwrap())
        .collect();
    let (pass, detail) = summarize(&reports);
    within(start, Duration::from_secs(900), pass, format!("{detail} (tol 1e-3, budget 2e7)"))
}

fn suite_outcome(suite: Suite) -> Outcome {
    let (pass, detail) = summarize(&run_suite(suite, &SuiteConfig::default()));
    outcome(pass, detail)
}

fn criterion_8() -> Outcome {
    let o = suite_outcome(Suite::Geometry);
    let actions: Vec<String> = run_suite(Suite::Geometry, &SuiteConfig::default())
        .into_iter()
        .filter(|r| r.name.contains("/action/"))
        .map(|r| format!("{}: is_action={}", r.name.trim_start_matches("geometry/action/").trim_end_matches("/is_action"), r.pass))
        .collect();
    outcome(o.pass, format!("{}; {}", o.detail, actions.join(", ")))
}

fn criterion_9() -> Outcome {
    suite_outcome(Suite::Octonion)
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let cfg = SuiteConfig::default();
    let reports: Vec<CheckReport> = run_suite(Suite::Kernel, &cfg)
        .into_iter()
        .filter(|r| ["kernel_decay", "kernel_scale_invariance", "kernel_axis"].iter().any(|k| r.name.contains(k)))
        .collect();
    let parts: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {:.3e} (tol {:.0e})", r.name.trim_start_matches("kernel/"), r.rel_deviation, r.tolerance))
        .collect();
    let pass = reports.len() == 3 && reports.iter().all(|r| r.pass);
    within(start, Duration::from_secs(120), pass, parts.join(", "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("kernel formula: D s = 0 and homogeneity", criterion_1),
        ("unified formula, m = 2", criterion_2),
        ("spherical moment closed form", criterion_3),
        ("Fourier identity sweep", criterion_4),
        ("coefficient system", criterion_5),
        ("F_lambda closed form", criterion_6),
        ("reproducing property", criterion_7),
        ("geometry and group suite", criterion_8),
        ("octonionic propositions", criterion_9),
        ("projection kernel estimates", criterion_10),
    ];
    let mut all = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!("criterion {:>2}: {} {title}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
