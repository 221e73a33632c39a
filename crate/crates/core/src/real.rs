//! Multiprecision reals with a running absolute error bound, and the
//! numeric configuration shared by every evaluator.

use std::fmt;

use rug::float::Round;
use rug::ops::PowAssign;
use rug::Float;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::RationalPolynomial;

/// Bits of working precision for `digits` significant decimal digits,
/// with guard bits for cancellation.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

/// Euler–Maclaurin and precision settings.
#[derive(Clone, Debug, PartialEq)]
pub struct EMConfig {
    /// First index handled by the tail formula (`N ≥ 2`). Grown automatically.
    pub truncation_start: u64,
    /// Number of Bernoulli corrections, `2J ≤ 40`, even.
    pub correction_order: u32,
    pub target_abs_err: f64,
    pub precision_bits: u32,
    /// Precision may be raised up to this many bits before giving up.
    pub max_precision_bits: u32,
}

impl EMConfig {
    /// Target `10^-digits` at roughly `digits` decimal digits of precision.
    pub fn with_digits(digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        EMConfig {
            truncation_start: 16,
            correction_order: 24,
            target_abs_err: 10f64.powi(-(digits as i32)),
            precision_bits: bits,
            max_precision_bits: 4 * bits,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.truncation_start < 2 {
            return Err(Error::Config(format!(
                "truncation_start must be ≥ 2 (got {})",
                self.truncation_start
            )));
        }
        if self.correction_order == 0 || !self.correction_order.is_multiple_of(2) || self.correction_order > 40 {
            return Err(Error::Config(format!(
                "correction_order must be even and in 2..=40 (got {})",
                self.correction_order
            )));
        }
        if !(self.target_abs_err > 0.0 && self.target_abs_err.is_finite()) {
            return Err(Error::Config(format!(
                "target_abs_err must be positive (got {})",
                self.target_abs_err
            )));
        }
        if self.precision_bits < 53 || self.max_precision_bits < self.precision_bits {
            return Err(Error::Config("precision_bits must be ≥ 53 and ≤ max_precision_bits".into()));
        }
        Ok(())
    }

    pub fn with_target(&self, target_abs_err: f64) -> Self {
        EMConfig {
            target_abs_err,
            ..self.clone()
        }
    }

    pub fn with_precision(&self, bits: u32) -> Self {
        EMConfig {
            precision_bits: bits,
            max_precision_bits: self.max_precision_bits.max(bits),
            ..self.clone()
        }
    }

    /// Relative size of one rounding at the working precision.
    pub fn unit_roundoff(&self) -> f64 {
        2f64.powi(1 - self.precision_bits as i32)
    }
}

impl Default for EMConfig {
    fn default() -> Self {
        Self::with_digits(30)
    }
}

/// A real argument that stays exact when it can.
#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Exact(Rational),
    Approx(Float),
}

impl Arg {
    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            Arg::Exact(q) => Float::with_val(prec, q),
            Arg::Approx(x) => Float::with_val(prec, x),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Arg::Exact(q) => q.to_f64(),
            Arg::Approx(x) => x.to_f64(),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Arg::Exact(q) => Some(q),
            Arg::Approx(_) => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Arg::Exact(q) => q.cmp0().is_gt(),
            Arg::Approx(x) => x.is_sign_positive() && !x.is_zero(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Arg::Exact(q) => *q.denom() == 1,
            Arg::Approx(x) => x.is_integer(),
        }
    }

    pub fn neg(&self) -> Arg {
        match self {
            Arg::Exact(q) => Arg::Exact(Rational::from(-q)),
            Arg::Approx(x) => Arg::Approx(Float::with_val(x.prec(), -x)),
        }
    }

    /// `self + c` for a rational shift.
    pub fn add_rational(&self, c: &Rational) -> Arg {
        match self {
            Arg::Exact(q) => Arg::Exact(Rational::from(q + c)),
            Arg::Approx(x) => Arg::Approx(Float::with_val(x.prec() + 16, x + c)),
        }
    }

    /// Evaluates an exact polynomial: exactly when the argument is exact,
    /// otherwise by Horner in floating point with an error bound.
    pub fn eval_poly(&self, p: &RationalPolynomial, prec: u32) -> Real {
        match self {
            Arg::Exact(q) => Real::from_rational(&p.eval(q), prec),
            Arg::Approx(x) => {
                let x = Float::with_val(prec, x);
                let value = p.eval_float(&x);
                let mag = p.abs_eval_float(&Float::with_val(prec, x.abs_ref()));
                let deg = p.degree().unwrap_or(0) as f64 + 1.0;
                let err = 2.0 * deg * mag.to_f64() * 2f64.powi(1 - prec as i32);
                Real::new(value, err)
            }
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Exact(q) => write!(f, "{q}"),
            Arg::Approx(x) => write!(f, "{}", x.to_f64()),
        }
    }
}

impl From<Rational> for Arg {
    fn from(q: Rational) -> Self {
        Arg::Exact(q)
    }
}

impl From<i64> for Arg {
    fn from(v: i64) -> Self {
        Arg::Exact(Rational::from(v))
    }
}

impl From<f64> for Arg {
    /// Binary floats are exactly representable rationals, so they are kept
    /// exact; this makes e.g. `0.5` and `1/2` behave identically.
    fn from(v: f64) -> Self {
        match Rational::from_f64(v) {
            Some(q) => Arg::Exact(q),
            None => Arg::Approx(Float::with_val(53, v)),
        }
    }
}

impl From<Float> for Arg {
    fn from(x: Float) -> Self {
        Arg::Approx(x)
    }
}

/// A floating value with an absolute error bound.
#[derive(Clone, Debug, PartialEq)]
pub struct Real {
    pub value: Float,
    pub err_bound: f64,
}

fn round_err(x: &Float) -> f64 {
    if x.is_zero() {
        0.0
    } else {
        x.to_f64().abs() * 2f64.powi(1 - x.prec() as i32)
    }
}

impl Real {
    pub fn new(value: Float, err_bound: f64) -> Self {
        Real { value, err_bound }
    }

    pub fn exact(value: Float) -> Self {
        Real { value, err_bound: 0.0 }
    }

    pub fn zero(prec: u32) -> Self {
        Real::exact(Float::new(prec))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let value = Float::with_val(prec, q);
        let err = round_err(&value);
        Real::new(value, err)
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        Real::exact(Float::with_val(prec, v))
    }

    pub fn prec(&self) -> u32 {
        self.value.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn add(&self, other: &Real) -> Real {
        let value = Float::with_val(self.prec(), &self.value + &other.value);
        let err = self.err_bound + other.err_bound + round_err(&value);
        Real::new(value, err)
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Real {
        Real::new(Float::with_val(self.prec(), -&self.value), self.err_bound)
    }

    pub fn mul(&self, other: &Real) -> Real {
        let value = Float::with_val(self.prec(), &self.value * &other.value);
        let a = self.value.to_f64().abs();
        let b = other.value.to_f64().abs();
        let err = a * other.err_bound + b * self.err_bound + self.err_bound * other.err_bound + round_err(&value);
        Real::new(value, err)
    }

    /// Multiplication by an exact rational.
    pub fn scale(&self, q: &Rational) -> Real {
        let value = Float::with_val(self.prec(), &self.value * q);
        let err = self.err_bound * q.to_f64().abs() + round_err(&value);
        Real::new(value, err)
    }

    pub fn div(&self, other: &Real) -> Result<Real> {
        let b = other.value.to_f64().abs();
        if b <= other.err_bound {
            return Err(Error::domain("division by a value indistinguishable from zero"));
        }
        let value = Float::with_val(self.prec(), &self.value / &other.value);
        let q = value.to_f64().abs();
        let err = (self.err_bound + q * other.err_bound) / (b - other.err_bound) + round_err(&value);
        Ok(Real::new(value, err))
    }

    pub fn ln(&self) -> Result<Real> {
        let a = self.value.to_f64();
        if a.is_nan() || a <= self.err_bound {
            return Err(Error::domain("logarithm of a non-positive value"));
        }
        let value = Float::with_val(self.prec(), self.value.ln_ref());
        let err = self.err_bound / (a - self.err_bound) + round_err(&value);
        Ok(Real::new(value, err))
    }

    pub fn exp(&self) -> Real {
        let value = Float::with_val(self.prec(), self.value.exp_ref());
        let err = value.to_f64().abs() * self.err_bound.exp_m1() + round_err(&value);
        Real::new(value, err)
    }

    /// `self^k` for a small non-negative integer power.
    pub fn powi(&self, k: u32) -> Real {
        let mut value = self.value.clone();
        value.pow_assign(k);
        let a = self.value.to_f64().abs();
        let err = if self.err_bound == 0.0 {
            0.0
        } else {
            (a + self.err_bound).powi(k as i32) - a.powi(k as i32)
        };
        let err = err + k as f64 * round_err(&value);
        Real::new(value, err)
    }

    /// Widens the bound by `extra`.
    pub fn with_extra_err(mut self, extra: f64) -> Real {
        self.err_bound += extra;
        self
    }

    /// `digits` significant decimal digits, plain notation for moderate
    /// exponents and scientific otherwise.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_float(&self.value, digits)
    }
}

/// Decimal rendering of `x` with `digits` significant digits.
pub fn format_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let (neg, mantissa, exp) = x.to_sign_string_exp_round(10, Some(digits), Round::Nearest);
    let exp = exp.unwrap_or(0);
    let sign = if neg { "-" } else { "" };
    // value = 0.mantissa × 10^exp
    if (-6..=21).contains(&exp) {
        let body = if exp <= 0 {
            format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
        } else if exp as usize >= mantissa.len() {
            format!("{}{}", mantissa, "0".repeat(exp as usize - mantissa.len()))
        } else {
            let (int, frac) = mantissa.split_at(exp as usize);
            format!("{int}.{frac}")
        };
        format!("{sign}{}", trim_fraction(&body))
    } else {
        let (lead, rest) = mantissa.split_at(1);
        let rest = rest.trim_end_matches('0');
        let rest = if rest.is_empty() { String::new() } else { format!(".{rest}") };
        format!("{sign}{lead}{rest}e{}", exp - 1)
    }
}

fn trim_fraction(body: &str) -> &str {
    if body.contains('.') {
        body.trim_end_matches('0').trim_end_matches('.')
    } else {
        body
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.1e}", self.to_decimal(f.precision().unwrap_or(20)), self.err_bound)
    }
}
