use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{MixError, Result};
use crate::real::{Real, DECIMAL_DIGITS};

/// Arithmetic used by a verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        })
    }
}

impl FromStr for Mode {
    type Err = MixError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "numeric" => Ok(Mode::Numeric),
            _ => Err(MixError::InvalidParameter(format!("unknown mode {s}"))),
        }
    }
}

/// A probability in `[0, 1]`: an exact rational or an extended-precision
/// decimal.
#[derive(Clone, Debug, PartialEq)]
pub enum Probability {
    Exact(BigRational),
    Decimal(Real),
}

impl Probability {
    pub fn exact(r: BigRational) -> Result<Self> {
        if r.is_negative() || r > BigRational::one() {
            return Err(MixError::InvalidProbability(r.to_string()));
        }
        Ok(Probability::Exact(r))
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(MixError::InvalidProbability(format!("{num}/{den}")));
        }
        Self::exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn half() -> Self {
        Probability::Exact(BigRational::new(1.into(), 2.into()))
    }

    pub fn decimal(r: Real) -> Result<Self> {
        if r.is_negative() || r > Real::one() {
            return Err(MixError::InvalidProbability(r.to_string()));
        }
        Ok(Probability::Decimal(r))
    }

    /// `"a/b"` or an integer parses as exact; anything with `.`/`e` as decimal.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || MixError::InvalidProbability(s.to_string());
        if t.contains(['.', 'e', 'E']) {
            return Self::decimal(Real::parse(t)?);
        }
        let r = match t.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(bad());
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Self::exact(r)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Probability::Exact(_) => Mode::Exact,
            Probability::Decimal(_) => Mode::Numeric,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Probability::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Probability::Exact(r) => Some(r),
            Probability::Decimal(_) => None,
        }
    }

    pub fn to_real(&self) -> Real {
        match self {
            Probability::Exact(r) => Real::from_ratio(r),
            Probability::Decimal(x) => x.clone(),
        }
    }

    /// `1 - p`.
    pub fn complement(&self) -> Self {
        match self {
            Probability::Exact(r) => Probability::Exact(BigRational::one() - r),
            Probability::Decimal(x) => Probability::Decimal(Real::one() - x),
        }
    }

    pub fn is_half(&self) -> bool {
        match self {
            Probability::Exact(r) => *r == BigRational::new(1.into(), 2.into()),
            Probability::Decimal(x) => *x == Real::from_f64(0.5),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_real().to_f64()
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Probability::Exact(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Probability::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Probability::Decimal(x) => f.write_str(&x.to_decimal_string(DECIMAL_DIGITS)),
        }
    }
}

impl Serialize for Probability {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Probability {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Probability::parse(&s).map_err(serde::de::Error::custom)
    }
}
