//! Fixed-point high-precision reals.
//!
//! A [`Real`] stores an integer mantissa `m` and represents `m * 2^(-shift)`.
//! Every value participating in one computation carries the same shift, so
//! addition is exact and multiplication/division round once to the shared
//! grid. The evaluators only need field operations, integer powers and
//! decimal rendering, which keeps this layer small and deterministic.
//!
//! The shift is the requested working precision plus guard bits; rounding
//! noise therefore sits far below every tolerance used by the harness.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Shared precision context: all reals it creates use the same shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealCtx {
    shift: u32,
}

/// Extra bits kept beyond the requested precision.
pub const GUARD_BITS: u32 = 64;

impl RealCtx {
    pub fn new(precision_bits: u32) -> Self {
        RealCtx {
            shift: precision_bits + GUARD_BITS,
        }
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn zero(&self) -> Real {
        Real {
            mant: BigInt::zero(),
            shift: self.shift,
        }
    }

    pub fn one(&self) -> Real {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Real {
        Real {
            mant: BigInt::from(v) << self.shift,
            shift: self.shift,
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Real {
        Real {
            mant: v.clone() << self.shift,
            shift: self.shift,
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Real {
        Real {
            mant: div_round(r.numer().clone() << self.shift, r.denom()),
            shift: self.shift,
        }
    }
}

/// High-precision real number on a fixed binary grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mant: BigInt,
    shift: u32,
}

/// Round `x / 2^n` to nearest (ties away from zero).
fn shr_round(x: &BigInt, n: u32) -> BigInt {
    if n == 0 {
        return x.clone();
    }
    let (sign, mag) = (x.sign(), x.magnitude());
    let half = BigUint::one() << (n - 1);
    let rounded = (mag + half) >> n;
    if rounded.is_zero() {
        BigInt::zero()
    } else {
        BigInt::from_biguint(if sign == Sign::Minus { Sign::Minus } else { Sign::Plus }, rounded)
    }
}

/// Round `a / b` to nearest (ties away from zero). `b` must be nonzero.
fn div_round(a: BigInt, b: &BigInt) -> BigInt {
    let sign_neg = a.is_negative() != b.is_negative();
    let (qa, ra) = a.magnitude().div_rem(b.magnitude());
    let qa = if &(ra << 1) >= b.magnitude() { qa + 1u32 } else { qa };
    if qa.is_zero() {
        BigInt::zero()
    } else {
        BigInt::from_biguint(if sign_neg { Sign::Minus } else { Sign::Plus }, qa)
    }
}

impl Real {
    fn assert_same(&self, other: &Real) {
        debug_assert_eq!(self.shift, other.shift, "mixed-precision arithmetic");
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn add(&self, other: &Real) -> Real {
        self.assert_same(other);
        Real {
            mant: &self.mant + &other.mant,
            shift: self.shift,
        }
    }

    pub fn add_assign(&mut self, other: &Real) {
        self.assert_same(other);
        self.mant += &other.mant;
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.assert_same(other);
        Real {
            mant: &self.mant - &other.mant,
            shift: self.shift,
        }
    }

    pub fn neg(&self) -> Real {
        Real {
            mant: -self.mant.clone(),
            shift: self.shift,
        }
    }

    pub fn abs(&self) -> Real {
        Real {
            mant: self.mant.abs(),
            shift: self.shift,
        }
    }

    pub fn mul(&self, other: &Real) -> Real {
        self.assert_same(other);
        Real {
            mant: shr_round(&(&self.mant * &other.mant), self.shift),
            shift: self.shift,
        }
    }

    pub fn div(&self, other: &Real) -> Real {
        self.assert_same(other);
        assert!(!other.is_zero(), "division by zero");
        Real {
            mant: div_round(self.mant.clone() << self.shift, &other.mant),
            shift: self.shift,
        }
    }

    /// Exact multiplication by a machine integer.
    pub fn mul_i64(&self, k: i64) -> Real {
        Real {
            mant: &self.mant * k,
            shift: self.shift,
        }
    }

    /// Rounded division by a machine integer.
    pub fn div_i64(&self, k: i64) -> Real {
        assert!(k != 0, "division by zero");
        Real {
            mant: div_round(self.mant.clone(), &BigInt::from(k)),
            shift: self.shift,
        }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Real {
        Real {
            mant: &self.mant * k,
            shift: self.shift,
        }
    }

    /// `self^n` by repeated squaring.
    pub fn powi(&self, n: u32) -> Real {
        let ctx = RealCtx { shift: self.shift };
        let mut base = self.clone();
        let mut acc = ctx.one();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn cmp_value(&self, other: &Real) -> Ordering {
        self.assert_same(other);
        self.mant.cmp(&other.mant)
    }

    pub fn max(&self, other: &Real) -> Real {
        if self.cmp_value(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Approximate value as `f64` (saturating; used only for estimates).
    pub fn to_f64(&self) -> f64 {
        let m = self.mant.to_f64().unwrap_or(if self.mant.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        m * 2f64.powi(-(self.shift as i32))
    }

    /// Decimal rendering with `digits` digits after the point,
    /// round-to-nearest.
    pub fn to_decimal(&self, digits: u32) -> String {
        let pow10 = BigInt::from(10u32).pow(digits);
        let scaled = shr_round(&(&self.mant * &pow10), self.shift);
        let neg = scaled.is_negative();
        let mag = scaled.magnitude();
        let (int_part, frac_part) = mag.div_rem(pow10.magnitude());
        let frac_str = frac_part.to_string();
        let pad = digits as usize - frac_str.len();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            out.push_str(&"0".repeat(pad));
            out.push_str(&frac_str);
        }
        out
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(30))
    }
}
