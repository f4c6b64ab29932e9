//! Arithmetic in `F_q`, `q = p^e`.
//!
//! Elements are encoded as integers `sum c_i p^i` over their coefficient
//! vectors (low to high) modulo the defining polynomial. The integer
//! encoding is also the canonical total order on field elements.

pub mod matrix;
pub mod projective;
pub mod status;

use serde_json::{json, Value};

use crate::error::{MixError, Result};

pub use matrix::{Family, MatrixGroup};
pub use projective::ProjectivePoint;
pub use status::{matrix_family_status, FamilyStatus};

/// Largest field order supported (log/exp tables are materialized).
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

#[derive(Debug)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    generator: u32,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// Field with the default modulus: `x` for `e = 1`, otherwise the monic
    /// primitive polynomial of least integer encoding.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        check_pe(p, e)?;
        let modulus = if e == 1 { vec![0, 1] } else { default_modulus(p, e) };
        Self::with_modulus(p, e, modulus)
    }

    pub fn with_modulus(p: u32, e: u32, modulus: Vec<u32>) -> Result<Self> {
        check_pe(p, e)?;
        if modulus.len() != e as usize + 1 || modulus[e as usize] != 1 {
            return Err(MixError::InvalidField(format!("modulus must be monic of degree {e}, given {modulus:?}")));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(MixError::InvalidField("modulus coefficients must be reduced mod p".into()));
        }
        if e > 12 {
            return Err(MixError::InvalidField("extension degree above 12 is not supported".into()));
        }
        if !is_irreducible(p, &modulus) {
            return Err(MixError::InvalidField(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        let q = p.pow(e);
        let mut field = Field { p, e, q, modulus, exp: Vec::new(), log: Vec::new(), generator: 1 };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        if q == 2 {
            self.generator = 1;
            self.exp = vec![1];
            self.log = vec![0, 0];
            return;
        }
        let order = q - 1;
        let gen = (2..q)
            .chain(std::iter::once(1))
            .find(|&g| self.slow_order(g) == order)
            .expect("multiplicative group is cyclic");
        self.generator = gen;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for k in 0..order {
            exp.push(x);
            log[x as usize] = k;
            x = self.slow_mul(x, gen);
        }
        self.exp = exp;
        self.log = log;
    }

    fn slow_order(&self, g: u32) -> u32 {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = self.slow_mul(x, g);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let pa = self.decode(a);
        let pb = self.decode(b);
        let prod = poly_mul(self.p, &pa, &pb);
        self.encode(&poly_rem(self.p, &prod, &self.modulus))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Least generator of the multiplicative group by encoding.
    pub fn primitive(&self) -> u32 {
        self.generator
    }

    pub fn decode(&self, x: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut r = x;
        for _ in 0..self.e {
            out.push(r % self.p);
            r /= self.p;
        }
        out
    }

    pub fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q as u64 - 1);
        self.exp[k as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(MixError::ZeroInverse);
        }
        let order = self.q - 1;
        Ok(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, k: i64) -> Result<u32> {
        if a == 0 {
            return match k.cmp(&0) {
                std::cmp::Ordering::Less => Err(MixError::ZeroInverse),
                std::cmp::Ordering::Equal => Ok(1),
                std::cmp::Ordering::Greater => Ok(0),
            };
        }
        let order = (self.q - 1) as i64;
        let idx = (self.log[a as usize] as i64 * k).rem_euclid(order);
        Ok(self.exp[idx as usize])
    }

    /// Power of the fixed primitive element.
    pub fn gen_pow(&self, k: i64) -> u32 {
        let order = (self.q - 1) as i64;
        self.exp[k.rem_euclid(order) as usize]
    }

    /// `mu_d(F_q) = { x : x^d = 1 }`, sorted by encoding.
    pub fn roots_of_unity(&self, d: u32) -> Vec<u32> {
        let mut out: Vec<u32> = (1..self.q).filter(|&x| matches!(self.pow(x, d as i64), Ok(1))).collect();
        out.sort_unstable();
        out
    }

    /// The element `x^i` of the polynomial basis.
    pub fn basis(&self, i: u32) -> u32 {
        self.p.pow(i)
    }

    pub fn check(&self, a: u32) -> Result<()> {
        if a < self.q {
            Ok(())
        } else {
            Err(MixError::InvalidElement(format!("{a} is not an element of F_{}", self.q)))
        }
    }

    pub fn spec_json(&self) -> Value {
        json!({"p": self.p, "e": self.e, "modulus": self.modulus})
    }

    pub fn from_spec(v: &Value) -> Result<Self> {
        let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| MixError::InvalidField("missing p".into()))?;
        let e = v.get("e").and_then(Value::as_u64).unwrap_or(1);
        let p = u32::try_from(p).map_err(|_| MixError::InvalidField("p too large".into()))?;
        let e = u32::try_from(e).map_err(|_| MixError::InvalidField("e too large".into()))?;
        match v.get("modulus") {
            Some(Value::Array(coeffs)) => {
                let m = coeffs
                    .iter()
                    .map(|c| c.as_u64().map(|c| c as u32))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| MixError::InvalidField("modulus must be an integer array".into()))?;
                Self::with_modulus(p, e, m)
            }
            Some(Value::Null) | None => Self::new(p, e),
            Some(other) => Err(MixError::InvalidField(format!("bad modulus {other}"))),
        }
    }

    /// Coefficient array, or a bare integer when `e = 1`.
    pub fn element_json(&self, a: u32) -> Value {
        if self.e == 1 {
            json!(a)
        } else {
            json!(self.decode(a))
        }
    }

    /// Accepts a coefficient array, or a bare integer naming a prime-field constant.
    pub fn parse_element(&self, v: &Value) -> Result<u32> {
        match v {
            Value::Number(n) => {
                let c = n.as_u64().ok_or_else(|| MixError::InvalidElement(format!("bad field element {v}")))?;
                if c >= self.p as u64 {
                    return Err(MixError::InvalidElement(format!("{c} is not reduced mod {}", self.p)));
                }
                Ok(c as u32)
            }
            Value::Array(cs) => {
                if cs.len() != self.e as usize {
                    return Err(MixError::InvalidElement(format!(
                        "field element needs {} coefficients, got {}",
                        self.e,
                        cs.len()
                    )));
                }
                let mut coeffs = Vec::with_capacity(cs.len());
                for c in cs {
                    let c = c.as_u64().ok_or_else(|| MixError::InvalidElement(format!("bad coefficient {c}")))?;
                    if c >= self.p as u64 {
                        return Err(MixError::InvalidElement(format!("coefficient {c} not reduced mod {}", self.p)));
                    }
                    coeffs.push(c as u32);
                }
                Ok(self.encode(&coeffs))
            }
            _ => Err(MixError::InvalidElement(format!("bad field element {v}"))),
        }
    }
}

fn check_pe(p: u32, e: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(MixError::InvalidField(format!("{p} is not prime")));
    }
    if e == 0 {
        return Err(MixError::InvalidField("extension degree must be at least 1".into()));
    }
    let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_FIELD_ORDER);
    if q.is_none() {
        return Err(MixError::InvalidField(format!("field order {p}^{e} is too large")));
    }
    Ok(())
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = (lead as u64 * c as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

/// Trial division by every monic polynomial of degree at most `deg / 2`.
pub fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let deg = m.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut r = low;
            for _ in 0..d {
                f.push((r % p as u64) as u32);
                r /= p as u64;
            }
            f.push(1);
            if poly_rem(p, m, &f).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Monic primitive polynomial of degree `e` with least encoding.
fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for low in 0..count {
        let mut m = Vec::with_capacity(e as usize + 1);
        let mut r = low;
        for _ in 0..e {
            m.push((r % p as u64) as u32);
            r /= p as u64;
        }
        m.push(1);
        if m[0] == 0 || !is_irreducible(p, &m) {
            continue;
        }
        let field = Field { p, e, q: p.pow(e), modulus: m.clone(), exp: Vec::new(), log: Vec::new(), generator: 1 };
        let x = p; // encoding of the polynomial x
        if field.slow_order(x) == field.q - 1 {
            return m;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_relation() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * (x + 1) = 1
        assert_eq!(f.mul(0b10, 0b11), 1);
    }

    #[test]
    fn f5_inverse() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(2).unwrap(), 3);
        assert!(matches!(f.inv(0), Err(MixError::ZeroInverse)));
    }

    #[test]
    fn f8_cube_of_x() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        let x = 2;
        assert_eq!(f.mul(f.mul(x, x), x), 0b011);
    }

    #[test]
    fn f9_axioms() {
        let f = Field::new(3, 2).unwrap();
        for a in 0..9 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..9 {
                assert_eq!(f.mul(a, b), f.slow_mul(a, b));
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(Field::with_modulus(2, 2, vec![1, 0, 1]).is_err());
        assert!(Field::with_modulus(3, 2, vec![1, 0, 1]).is_ok());
    }

    #[test]
    fn roots_of_unity_sizes() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.roots_of_unity(2), vec![1, 6]);
        assert_eq!(f.roots_of_unity(3).len(), 3);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(2), Some((2, 1)));
    }
}
