//! JSON encoding of exact fractions.
//!
//! A radial fraction is `{"dim", "k", "terms": [{"exp", "coef"}]}` with the
//! coefficient written as `"p/q"`; a hypercomplex fraction is
//! `{"dim", "components": [...]}`.

use serde_json::{json, Value};

use super::hyperfrac::HyperFrac;
use super::poly::RatPoly;
use super::radial::RadialFraction;
use crate::error::{Error, Result};
use crate::hypercomplex::{Rational, Scalar};

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("field `{key}` must be a non-negative integer")))
}

impl RadialFraction {
    pub fn to_json(&self) -> Value {
        let dim = self.dim();
        let terms: Vec<Value> = self
            .numerator()
            .terms()
            .map(|(m, c)| {
                let exp: Vec<u16> = (0..dim).map(|i| m.exp(i)).collect();
                json!({ "exp": exp, "coef": c.render() })
            })
            .collect();
        json!({ "dim": dim, "k": self.k(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dim = as_usize(v, "dim")?;
        let k = as_usize(v, "k")? as u32;
        let terms = field(v, "terms")?
            .as_array()
            .ok_or_else(|| Error::Parse("`terms` must be an array".into()))?;
        let mut parsed: Vec<(Vec<u16>, Rational)> = Vec::with_capacity(terms.len());
        for t in terms {
            let exp = field(t, "exp")?
                .as_array()
                .ok_or_else(|| Error::Parse("`exp` must be an array".into()))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|x| u16::try_from(x).ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent {e}")))
                })
                .collect::<Result<Vec<u16>>>()?;
            if exp.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: exp.len() });
            }
            parsed.push((exp, Rational::from_json(field(t, "coef")?)?));
        }
        let num = RatPoly::from_terms(dim, parsed.iter().map(|(e, c)| (e.as_slice(), c.clone())))?;
        Ok(RadialFraction::new(num, k))
    }
}

impl HyperFrac {
    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self.components().iter().map(RadialFraction::to_json).collect();
        json!({ "dim": self.algebra().dim(), "components": comps })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let dim = as_usize(v, "dim")?;
        let comps = field(v, "components")?
            .as_array()
            .ok_or_else(|| Error::Parse("`components` must be an array".into()))?
            .iter()
            .map(RadialFraction::from_json)
            .collect::<Result<Vec<_>>>()?;
        if comps.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: comps.len() });
        }
        HyperFrac::new(comps)
    }
}
