//! Run configuration: command-line flags layered over an optional
//! `key=value` file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("config line {line}: expected key=value, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("config key `{0}` is not recognised")]
    UnknownKey(String),
    #[error("invalid value for `{key}`: {value:?}")]
    Value { key: String, value: String },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected json or csv)")),
        }
    }
}

/// Settings shared by every subcommand. Unset values fall back to the
/// command's own defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub nu: Option<String>,
    pub q: Option<String>,
    pub omega: Option<String>,
    pub eps: Option<f64>,
    pub tol: Option<f64>,
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
}

const KEYS: [&str; 11] = ["n", "m", "nu", "q", "omega", "eps", "tol", "budget", "seed", "output", "format"];

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.parse().map_err(|_| ConfigError::Value { key: key.into(), value: value.into() })
}

impl RunConfig {
    /// Reads a file of `key=value` lines. Blank lines and lines starting
    /// with `#` are ignored.
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.into(), source })?;
        Self::from_str_pairs(&text)
    }

    pub fn from_str_pairs(text: &str) -> Result<Self, ConfigError> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax { line: i + 1, text: raw.into() })?;
            let k = k.trim();
            if !KEYS.contains(&k) {
                return Err(ConfigError::UnknownKey(k.into()));
            }
            map.insert(k.to_string(), v.trim().to_string());
        }
        let get = |k: &str| map.get(k).map(String::as_str);
        let mut c = RunConfig::default();
        if let Some(v) = get("n") {
            c.n = Some(parse_value("n", v)?);
        }
        if let Some(v) = get("m") {
            c.m = Some(parse_value("m", v)?);
        }
        c.nu = get("nu").map(str::to_string);
        c.q = get("q").map(str::to_string);
        c.omega = get("omega").map(str::to_string);
        if let Some(v) = get("eps") {
            c.eps = Some(parse_value("eps", v)?);
        }
        if let Some(v) = get("tol") {
            c.tol = Some(parse_value("tol", v)?);
        }
        if let Some(v) = get("budget") {
            c.budget = Some(parse_budget(v).map_err(|_| ConfigError::Value { key: "budget".into(), value: v.into() })?);
        }
        if let Some(v) = get("seed") {
            c.seed = Some(parse_value("seed", v)?);
        }
        c.output = get("output").map(PathBuf::from);
        if let Some(v) = get("format") {
            c.format = Some(parse_value("format", v)?);
        }
        Ok(c)
    }

    /// Values set in `self` take precedence over those in `base`.
    pub fn over(self, base: RunConfig) -> RunConfig {
        RunConfig {
            n: self.n.or(base.n),
            m: self.m.or(base.m),
            nu: self.nu.or(base.nu),
            q: self.q.or(base.q),
            omega: self.omega.or(base.omega),
            eps: self.eps.or(base.eps),
            tol: self.tol.or(base.tol),
            budget: self.budget.or(base.budget),
            seed: self.seed.or(base.seed),
            output: self.output.or(base.output),
            format: self.format.or(base.format),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(ConfigError::Invalid(format!("tolerance must be positive, got {t}")));
            }
        }
        if self.budget == Some(0) {
            return Err(ConfigError::Invalid("budget must be positive".into()));
        }
        if let Some(e) = self.eps {
            if !(e >= 0.0) {
                return Err(ConfigError::Invalid(format!("eps must be nonnegative, got {e}")));
            }
        }
        Ok(())
    }
}

/// Accepts integers as well as exponent notation such as `2e7`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(format!("`{s}` is not a nonnegative integer")),
    }
}

/// Parses a comma-separated list of reals.
pub fn parse_components(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|_| format!("`{}` is not a number", c.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_values_are_overridden_by_flags() {
        let file = RunConfig::from_str_pairs("# defaults\nn = 2\ntol=1e-4\nbudget=2e7\nformat=csv\n").unwrap();
        assert_eq!(file.budget, Some(20_000_000));
        let flags = RunConfig { n: Some(3), ..RunConfig::default() };
        let c = flags.over(file);
        assert_eq!(c.n, Some(3));
        assert_eq!(c.tol, Some(1e-4));
        assert_eq!(c.format, Some(Format::Csv));
    }

    #[test]
    fn bad_lines_are_rejected() {
        assert!(matches!(RunConfig::from_str_pairs("n"), Err(ConfigError::Syntax { line: 1, .. })));
        assert!(matches!(RunConfig::from_str_pairs("colour=red"), Err(ConfigError::UnknownKey(_))));
        assert!(matches!(RunConfig::from_str_pairs("n=two"), Err(ConfigError::Value { .. })));
    }

    #[test]
    fn validation() {
        assert!(RunConfig { tol: Some(0.0), ..Default::default() }.validate().is_err());
        assert!(RunConfig { budget: Some(0), ..Default::default() }.validate().is_err());
        assert!(RunConfig { tol: Some(1e-3), budget: Some(1), ..Default::default() }.validate().is_ok());
    }

    #[test]
    fn components_and_budgets() {
        assert_eq!(parse_components("1, 0,-2.5,3e-1").unwrap(), vec![1.0, 0.0, -2.5, 0.3]);
        assert!(parse_components("1,,2").is_err());
        assert_eq!(parse_budget("2e7").unwrap(), 20_000_000);
        assert!(parse_budget("1.5").is_err());
    }
}
