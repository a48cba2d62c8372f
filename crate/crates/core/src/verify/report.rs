use serde::Serialize;
use serde_json::Value;

/// Outcome of one check, serialised as a JSON line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub abs_deviation: f64,
    pub rel_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub n_evals: u64,
}

impl CheckReport {
    /// Compares two real vectors; passes when the relative deviation
    /// `max |lhs - rhs| / max(|rhs|, floor)` is within `tolerance`.
    pub fn numeric(name: impl Into<String>, inputs: Value, lhs: &[f64], rhs: &[f64], tolerance: f64, n_evals: u64) -> Self {
        let abs = if lhs.len() == rhs.len() {
            lhs.iter().zip(rhs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
        } else {
            f64::INFINITY
        };
        let scale = rhs.iter().map(|v| v * v).sum::<f64>().sqrt();
        let rel = if scale > 0.0 { abs / scale } else { abs };
        Self::with_deviation(name, inputs, Value::from(lhs.to_vec()), Value::from(rhs.to_vec()), abs, rel, tolerance, n_evals)
    }

    /// An exact comparison: deviation 0 when equal, 1 otherwise, tolerance 0.
    pub fn exact(name: impl Into<String>, inputs: Value, lhs: impl Into<Value>, rhs: impl Into<Value>, equal: bool) -> Self {
        let d = if equal { 0.0 } else { 1.0 };
        Self::with_deviation(name, inputs, lhs.into(), rhs.into(), d, d, 0.0, 0)
    }

    /// A yes/no verdict expected to be `true`.
    pub fn verdict(name: impl Into<String>, inputs: Value, observed: Value, ok: bool) -> Self {
        Self::exact(name, inputs, observed, Value::Bool(true), ok)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_deviation(
        name: impl Into<String>,
        inputs: Value,
        lhs: Value,
        rhs: Value,
        abs_deviation: f64,
        rel_deviation: f64,
        tolerance: f64,
        n_evals: u64,
    ) -> Self {
        CheckReport {
            name: name.into(),
            inputs,
            lhs,
            rhs,
            abs_deviation,
            rel_deviation,
            tolerance,
            pass: rel_deviation <= tolerance,
            n_evals,
        }
    }

    pub fn with_evals(mut self, n_evals: u64) -> Self {
        self.n_evals = n_evals;
        self
    }

    /// One JSON line.
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("reports contain plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn pass_iff_within_tolerance() {
        let r = CheckReport::numeric("a", json!({}), &[1.0, 2.0], &[1.0, 2.0 + 1e-9], 1e-6, 3);
        assert!(r.pass);
        let r = CheckReport::numeric("a", json!({}), &[1.0], &[2.0], 1e-6, 3);
        assert!(!r.pass && (r.rel_deviation - 0.5).abs() < 1e-15);
        assert!(!CheckReport::numeric("a", json!({}), &[1.0], &[1.0, 0.0], 1.0, 0).pass);
        assert!(CheckReport::exact("e", json!(null), "x", "x", true).pass);
        assert!(!CheckReport::verdict("v", json!(null), json!(false), false).pass);
    }

    #[test]
    fn serialises_to_one_line() {
        let r = CheckReport::exact("e", json!({"n": 1}), "1/2", "1/2", true);
        let line = r.to_jsonl();
        assert!(!line.contains('\n'));
        let v: Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["name"], "e");
        assert_eq!(v["pass"], true);
    }
}
