//! Extended-precision reals for the numeric verification mode.
//!
//! `Real` wraps a 256-bit-mantissa binary float. All operations round to
//! nearest-even at that precision, which leaves ample headroom over the
//! 128-bit floor required by the numeric mode.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{MixError, Result};

/// Mantissa precision in bits.
pub const PRECISION: usize = 256;

/// Significant digits emitted when a real is serialized.
pub const DECIMAL_DIGITS: usize = 50;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone)]
pub struct Real(BigFloat);

impl Real {
    pub fn from_i64(v: i64) -> Self {
        Real(BigFloat::from_i64(v, PRECISION))
    }

    pub fn from_f64(v: f64) -> Self {
        Real(BigFloat::from_f64(v, PRECISION))
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        if let Ok(small) = i64::try_from(v) {
            return Self::from_i64(small);
        }
        let s = v.to_string();
        Real(with_consts(|cc| BigFloat::parse(&s, Radix::Dec, PRECISION, RM, cc)))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::from_bigint(r.numer()) / Self::from_bigint(r.denom())
    }

    /// Parses a decimal literal such as `0.3765` or `-1.5e-3`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let well_formed = !t.is_empty()
            && t.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'))
            && t.chars().any(|c| c.is_ascii_digit());
        if !well_formed {
            return Err(MixError::InvalidProbability(s.to_string()));
        }
        let v = with_consts(|cc| BigFloat::parse(t, Radix::Dec, PRECISION, RM, cc));
        if v.is_nan() {
            return Err(MixError::InvalidProbability(s.to_string()));
        }
        Ok(Real(v))
    }

    /// π at working precision.
    pub fn pi() -> Self {
        Real(with_consts(|cc| cc.pi(PRECISION, RM)))
    }

    /// cos(2π·num/den).
    pub fn cos_turns(num: i64, den: i64) -> Self {
        let angle = Self::pi() * Self::from_i64(2 * num) / Self::from_i64(den);
        Real(with_consts(|cc| angle.0.cos(PRECISION, RM, cc)))
    }

    /// sin(2π·num/den).
    pub fn sin_turns(num: i64, den: i64) -> Self {
        let angle = Self::pi() * Self::from_i64(2 * num) / Self::from_i64(den);
        Real(with_consts(|cc| angle.0.sin(PRECISION, RM, cc)))
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(PRECISION, RM))
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        !self.0.is_zero() && self.0.is_negative()
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn scientific(&self) -> String {
        with_consts(|cc| self.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }

    pub fn to_f64(&self) -> f64 {
        self.scientific().parse().unwrap_or(f64::NAN)
    }

    /// Positional decimal rendering with `digits` significant digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let sci = self.scientific();
        let (negative, body) = match sci.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, sci.as_str()),
        };
        let (mant, exp) = match body.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
            None => (body, 0),
        };
        let mut ds: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        let mut exp = exp;
        round_digits(&mut ds, digits, &mut exp);
        while ds.len() > 1 && *ds.last().unwrap() == 0 {
            ds.pop();
        }
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        let digit_char = |d: u8| char::from(b'0' + d);
        if exp < 0 {
            out.push_str("0.");
            for _ in 0..(-exp - 1) {
                out.push('0');
            }
            out.extend(ds.iter().map(|&d| digit_char(d)));
        } else {
            let int_len = exp as usize + 1;
            for i in 0..int_len.max(ds.len()) {
                if i == int_len {
                    out.push('.');
                }
                out.push(digit_char(*ds.get(i).unwrap_or(&0)));
            }
        }
        out
    }
}

fn round_digits(ds: &mut Vec<u8>, digits: usize, exp: &mut i64) {
    if ds.len() <= digits {
        return;
    }
    let round_up = ds[digits] >= 5;
    ds.truncate(digits);
    if round_up {
        let mut i = digits;
        loop {
            if i == 0 {
                ds.insert(0, 1);
                ds.pop();
                *exp += 1;
                break;
            }
            i -= 1;
            if ds[i] == 9 {
                ds[i] = 0;
            } else {
                ds[i] += 1;
                break;
            }
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_decimal_string(24))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(DECIMAL_DIGITS))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real(self.0.$method(&rhs.0, PRECISION, RM))
            }
        }
        impl<'a> $tr<&'a Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: &'a Real) -> Real {
                Real(self.0.$method(&rhs.0, PRECISION, RM))
            }
        }
        impl<'a> $tr<&'a Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &'a Real) -> Real {
                Real(self.0.$method(&rhs.0, PRECISION, RM))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.neg())
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.clone().neg())
    }
}

impl Zero for Real {
    fn zero() -> Self {
        Real::from_i64(0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Real {
    fn one() -> Self {
        Real::from_i64(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_of_third_turn_is_minus_half() {
        let c = Real::cos_turns(1, 3);
        let err = (c + Real::from_f64(0.5)).abs();
        assert!(err < Real::parse("1e-70").unwrap());
    }

    #[test]
    fn decimal_rendering() {
        let third = Real::from_i64(1) / Real::from_i64(3);
        let s = third.to_decimal_string(40);
        assert_eq!(s, format!("0.{}", "3".repeat(40)));
        assert_eq!(Real::from_i64(-12).to_decimal_string(10), "-12");
        assert_eq!(Real::parse("0.00125").unwrap().to_decimal_string(10), "0.00125");
        let two_thirds = Real::from_i64(2) / Real::from_i64(3);
        assert!(two_thirds.to_decimal_string(5).ends_with('7'));
    }

    #[test]
    fn round_trip_through_decimal_is_tight() {
        let x = Real::sqrt(&Real::from_i64(2));
        let y = Real::parse(&x.to_string()).unwrap();
        assert!((x - y).abs() < Real::parse("1e-45").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(Real::parse("abc").is_err());
        assert!(Real::parse("").is_err());
    }

    #[test]
    fn ratio_conversion() {
        let r = BigRational::new(BigInt::from(7), BigInt::from(8));
        assert!((Real::from_ratio(&r).to_f64() - 0.875).abs() < 1e-15);
    }
}
