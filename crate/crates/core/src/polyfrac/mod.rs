//! Exact symbolic calculus on functions of the form `P(x) / |x|^{2k}`
//! and on hypercomplex-valued vectors of them.

mod hyperfrac;
mod json;
mod poly;
mod radial;

pub use hyperfrac::{CompiledHyperFrac, HyperFrac, Side};
pub use poly::{CompiledPoly, MonomialKey, RatPoly, MAX_VARS};
pub use radial::{CompiledRadial, RadialFraction};

#[cfg(test)]
mod props;
