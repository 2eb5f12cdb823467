//! Evaluation contexts and results.

use crate::error::{Error, Result};
use crate::real::{Real, RealCtx};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Controls for the numerical evaluators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrecisionContext {
    /// Binary working precision (guard bits are added internally).
    pub precision_bits: u32,
    /// Target absolute tolerance for reported values.
    pub target_tol: f64,
    /// Hard cap on series truncation lengths.
    pub max_terms: u32,
    /// Whether truncations may be doubled adaptively until the
    /// tolerance is met.
    pub adaptive: bool,
}

impl PrecisionContext {
    pub fn new(precision_bits: u32, target_tol: f64, max_terms: u32, adaptive: bool) -> Result<Self> {
        if precision_bits < 32 {
            return Err(Error::InvalidArgument("precision_bits must be >= 32".into()));
        }
        if !(target_tol > 0.0) {
            return Err(Error::InvalidArgument("target_tol must be positive".into()));
        }
        if max_terms < 1 {
            return Err(Error::InvalidArgument("max_terms must be >= 1".into()));
        }
        Ok(PrecisionContext {
            precision_bits,
            target_tol,
            max_terms,
            adaptive,
        })
    }

    pub fn real_ctx(&self) -> RealCtx {
        RealCtx::new(self.precision_bits)
    }

    /// Number of decimal digits to print: `floor(precision_bits * 0.3)`.
    pub fn decimal_digits(&self) -> u32 {
        (self.precision_bits as f64 * 0.3).floor() as u32
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            precision_bits: 192,
            target_tol: 1e-13,
            max_terms: 1 << 21,
            adaptive: true,
        }
    }
}

/// Result of one high-precision series evaluation.
#[derive(Debug, Clone)]
pub struct EvalResult {
    pub value: Real,
    pub error_estimate: f64,
    pub terms_used: u32,
    pub converged: bool,
}

impl EvalResult {
    pub fn value_decimal(&self, ctx: &PrecisionContext) -> String {
        self.value.to_decimal(ctx.decimal_digits())
    }
}

/// Which q-analogue model is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QModel {
    One,
    Two,
}

impl QModel {
    pub fn from_u8(v: u8) -> Result<Self> {
        match v {
            1 => Ok(QModel::One),
            2 => Ok(QModel::Two),
            _ => Err(Error::InvalidArgument(format!("model must be 1 or 2, got {v}"))),
        }
    }

    pub fn as_u8(&self) -> u8 {
        match self {
            QModel::One => 1,
            QModel::Two => 2,
        }
    }
}

/// Parameter context for the q-analogues: a rational `q` in `(0, 1)` and
/// the model selector.
#[derive(Debug, Clone, PartialEq)]
pub struct QContext {
    pub q: BigRational,
    pub model: QModel,
}

impl QContext {
    pub fn new(q: BigRational, model: QModel) -> Result<Self> {
        if !(q.is_positive() && q < BigRational::one()) {
            return Err(Error::InvalidArgument(format!("q must lie in (0,1), got {q}")));
        }
        Ok(QContext { q, model })
    }
}

/// Parse a number given as a decimal (`0.5`) or a fraction (`1/2`) into an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: num_bigint::BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
        let d: num_bigint::BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(BigRational::new(n, d));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("bad number `{s}`")));
    }
    let digits = format!("{}{}", if int_part.is_empty() { "0" } else { int_part }, frac_part);
    let n: num_bigint::BigInt = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad number `{s}`")))?;
    let d = num_bigint::BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(n * sign, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("0.5").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(
            parse_rational("1/3").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(3))
        );
        assert_eq!(
            parse_rational("-0.25").unwrap(),
            BigRational::new(BigInt::from(-1), BigInt::from(4))
        );
        assert_eq!(parse_rational("2").unwrap(), BigRational::from(BigInt::from(2)));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn qcontext_bounds() {
        let half = parse_rational("1/2").unwrap();
        assert!(QContext::new(half, QModel::One).is_ok());
        assert!(QContext::new(parse_rational("1").unwrap(), QModel::One).is_err());
        assert!(QContext::new(parse_rational("0").unwrap(), QModel::Two).is_err());
    }
}
