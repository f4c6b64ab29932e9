use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::probability::{Mode, Probability};
use crate::error::{MixError, Result};
use crate::real::Real;

/// Above this carrier size steps are evaluated in parallel.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 4096;

/// A probability mass function on `0..n` (indices into a carrier: group
/// elements or action points).
///
/// Exact masses are integers over one common denominator, so a step costs
/// two big-integer products per point and no gcd work.
#[derive(Clone, Debug)]
pub enum Distribution {
    Exact { num: Vec<BigInt>, den: BigInt },
    Numeric(Vec<Real>),
}

/// Outcome of a uniformity test.
#[derive(Clone, Debug, PartialEq)]
pub struct Uniformity {
    pub uniform: bool,
    /// `max_x |mu(x) - 1/n|`
    pub max_dev: Probability,
}

fn map_points<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    #[cfg(feature = "parallel")]
    if n >= PARALLEL_THRESHOLD {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

impl Distribution {
    /// Point mass at `at` on a carrier of size `n`.
    pub fn point(n: usize, at: usize, mode: Mode) -> Self {
        match mode {
            Mode::Exact => {
                let mut num = vec![BigInt::zero(); n];
                num[at] = BigInt::one();
                Distribution::Exact { num, den: BigInt::one() }
            }
            Mode::Numeric => {
                let mut v = vec![Real::zero(); n];
                v[at] = Real::one();
                Distribution::Numeric(v)
            }
        }
    }

    pub fn uniform(n: usize, mode: Mode) -> Self {
        match mode {
            Mode::Exact => Distribution::Exact { num: vec![BigInt::one(); n], den: BigInt::from(n) },
            Mode::Numeric => {
                let m = Real::one() / Real::from_i64(n as i64);
                Distribution::Numeric(vec![m; n])
            }
        }
    }

    pub fn from_rationals(masses: &[BigRational]) -> Self {
        let den = masses.iter().fold(BigInt::one(), |acc, m| acc.lcm(m.denom()));
        let num = masses.iter().map(|m| m.numer() * (&den / m.denom())).collect();
        Distribution::Exact { num, den }
    }

    pub fn len(&self) -> usize {
        match self {
            Distribution::Exact { num, .. } => num.len(),
            Distribution::Numeric(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mode(&self) -> Mode {
        match self {
            Distribution::Exact { .. } => Mode::Exact,
            Distribution::Numeric(_) => Mode::Numeric,
        }
    }

    pub fn mass(&self, i: usize) -> Probability {
        match self {
            Distribution::Exact { num, den } => Probability::Exact(BigRational::new(num[i].clone(), den.clone())),
            Distribution::Numeric(v) => Probability::Decimal(v[i].clone()),
        }
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        match self {
            Distribution::Exact { num, .. } => num[i].is_zero(),
            Distribution::Numeric(v) => v[i].is_zero(),
        }
    }

    /// Number of points with nonzero mass.
    pub fn support(&self) -> usize {
        (0..self.len()).filter(|&i| !self.is_zero_at(i)).count()
    }

    pub fn support_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_zero_at(i)).collect()
    }

    pub fn total(&self) -> Probability {
        match self {
            Distribution::Exact { num, den } => {
                let s: BigInt = num.iter().sum();
                Probability::Exact(BigRational::new(s, den.clone()))
            }
            Distribution::Numeric(v) => Probability::Decimal(v.iter().fold(Real::zero(), |a, x| a + x)),
        }
    }

    /// Largest single mass.
    pub fn max_mass(&self) -> Probability {
        match self {
            Distribution::Exact { num, den } => {
                let m = num.iter().max().cloned().unwrap_or_default();
                Probability::Exact(BigRational::new(m, den.clone()))
            }
            Distribution::Numeric(v) => Probability::Decimal(v.iter().cloned().fold(Real::zero(), |a, x| a.max(x))),
        }
    }

    /// One factor `g^eps`, `eps ~ Ber(p)`, in gather form:
    /// `mu'(x) = (1-p) mu(x) + p mu(source(x))`.
    ///
    /// For a group law `source(x) = x g^-1`; for an action law
    /// `source(y) = g^-1 y`.
    pub fn step(&self, p: &Probability, source: impl Fn(usize) -> usize + Sync + Send) -> Result<Self> {
        match self {
            Distribution::Exact { num, den } => {
                let r = p.as_rational().ok_or_else(|| {
                    MixError::ModeMismatch(format!("decimal probability {p} in an exact verification"))
                })?;
                if r.is_zero() {
                    return Ok(self.clone());
                }
                let (a, b) = (r.numer(), r.denom());
                let stay = b - a;
                let out = map_points(num.len(), |x| {
                    let from = &num[source(x)];
                    let here = &num[x];
                    match (here.is_zero(), from.is_zero()) {
                        (true, true) => BigInt::zero(),
                        (false, true) => here * &stay,
                        (true, false) => from * a,
                        (false, false) => here * &stay + from * a,
                    }
                });
                Ok(Distribution::Exact { num: out, den: den * b })
            }
            Distribution::Numeric(v) => {
                let pr = p.to_real();
                let q = Real::one() - &pr;
                let out = map_points(v.len(), |x| {
                    let from = &v[source(x)];
                    let here = &v[x];
                    match (here.is_zero(), from.is_zero()) {
                        (true, true) => Real::zero(),
                        (false, true) => here * &q,
                        (true, false) => from * &pr,
                        (false, false) => here * &q + from * &pr,
                    }
                });
                Ok(Distribution::Numeric(out))
            }
        }
    }

    /// Divides out the common factor of numerators and denominator.
    pub fn reduce(&mut self) {
        if let Distribution::Exact { num, den } = self {
            let g = num.iter().fold(den.clone(), |acc, x| acc.gcd(x));
            if !g.is_one() && !g.is_zero() {
                for x in num.iter_mut() {
                    *x = &*x / &g;
                }
                *den = &*den / &g;
            }
        }
    }

    /// Image under a map of carriers `0..n -> 0..m`.
    pub fn pushforward(&self, m: usize, f: impl Fn(usize) -> usize) -> Self {
        match self {
            Distribution::Exact { num, den } => {
                let mut out = vec![BigInt::zero(); m];
                for (i, x) in num.iter().enumerate() {
                    if !x.is_zero() {
                        out[f(i)] += x;
                    }
                }
                Distribution::Exact { num: out, den: den.clone() }
            }
            Distribution::Numeric(v) => {
                let mut out = vec![Real::zero(); m];
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let j = f(i);
                        out[j] = &out[j] + x;
                    }
                }
                Distribution::Numeric(out)
            }
        }
    }

    /// Exact equality of laws, or agreement within `tol` numerically.
    pub fn same_law(&self, other: &Self, tol: &Real) -> bool {
        if self.len() != other.len() {
            return false;
        }
        match (self, other) {
            (Distribution::Exact { num: a, den: da }, Distribution::Exact { num: b, den: db }) => {
                a.iter().zip(b).all(|(x, y)| x * db == y * da)
            }
            _ => (0..self.len()).all(|i| (self.mass(i).to_real() - other.mass(i).to_real()).abs() <= *tol),
        }
    }

    /// Compares against `1/n`. Missing points count with deviation `1/n`.
    pub fn uniformity(&self, tol: &Real) -> Uniformity {
        let n = self.len();
        match self {
            Distribution::Exact { num, den } => {
                let nb = BigInt::from(n);
                let worst = num.iter().map(|x| (x * &nb - den).abs()).max().unwrap_or_default();
                let dev = BigRational::new(worst, den * &nb);
                Uniformity { uniform: dev.is_zero(), max_dev: Probability::Exact(dev) }
            }
            Distribution::Numeric(v) => {
                let target = Real::one() / Real::from_i64(n.max(1) as i64);
                let dev = v.iter().fold(Real::zero(), |acc, x| acc.max((x - &target).abs()));
                Uniformity { uniform: dev <= *tol, max_dev: Probability::Decimal(dev) }
            }
        }
    }

    /// Masses as `f64`, for display and sampling comparisons.
    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Distribution::Exact { num, den } => {
                let d = BigRational::new(BigInt::one(), den.clone());
                num.iter().map(|x| (BigRational::from_integer(x.clone()) * &d).to_f64().unwrap_or(f64::NAN)).collect()
            }
            Distribution::Numeric(v) => v.iter().map(Real::to_f64).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Real {
        Real::parse("1e-9").unwrap()
    }

    #[test]
    fn z4_example() {
        // x -> x - g on Z/4
        let mut d = Distribution::point(4, 0, Mode::Exact);
        for g in [1usize, 2] {
            d = d.step(&Probability::half(), move |x| (x + 4 - g) % 4).unwrap();
        }
        let u = d.uniformity(&tol());
        assert!(u.uniform);
        assert_eq!(u.max_dev.to_string(), "0");
        assert_eq!(d.total(), Probability::ratio(1, 1).unwrap());
    }

    #[test]
    fn point_mass_deviation() {
        let d = Distribution::point(4, 0, Mode::Exact);
        let u = d.uniformity(&tol());
        assert!(!u.uniform);
        assert_eq!(u.max_dev, Probability::ratio(3, 4).unwrap());
    }

    #[test]
    fn identity_step_is_noop() {
        let d = Distribution::point(3, 1, Mode::Exact);
        let e = d.step(&Probability::ratio(1, 3).unwrap(), |x| x).unwrap();
        assert!(e.same_law(&d, &tol()));
        assert_eq!(e.support(), 1);
    }

    #[test]
    fn mode_mismatch() {
        let d = Distribution::point(2, 0, Mode::Exact);
        let p = Probability::parse("0.5").unwrap();
        assert!(matches!(d.step(&p, |x| 1 - x), Err(MixError::ModeMismatch(_))));
    }

    #[test]
    fn numeric_matches_exact() {
        let p = Probability::ratio(2, 3).unwrap();
        let mut a = Distribution::point(3, 0, Mode::Exact);
        let mut b = Distribution::point(3, 0, Mode::Numeric);
        for _ in 0..3 {
            a = a.step(&p, |x| (x + 2) % 3).unwrap();
            b = b.step(&p, |x| (x + 2) % 3).unwrap();
        }
        assert!(a.same_law(&b, &Real::parse("1e-60").unwrap()));
        let before = a.mass(0);
        a.reduce();
        assert_eq!(a.mass(0), before);
    }
}
