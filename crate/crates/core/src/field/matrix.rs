//! Matrix groups `GL_d`, `SL_d`, `PGL_d`, `PSL_d` over a finite field.
//!
//! Elements are row-major vectors of field encodings. Projective families
//! store the lexicographically least matrix of each scalar coset.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde_json::{json, Value};

use super::Field;
use crate::error::{MixError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GL,
    SL,
    PGL,
    PSL,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Family::GL),
            "SL" => Ok(Family::SL),
            "PGL" => Ok(Family::PGL),
            "PSL" => Ok(Family::PSL),
            other => Err(MixError::InvalidGroup(format!("unknown matrix family {other}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::GL => "GL",
            Family::SL => "SL",
            Family::PGL => "PGL",
            Family::PSL => "PSL",
        }
    }

    pub fn special(self) -> bool {
        matches!(self, Family::SL | Family::PSL)
    }

    pub fn projective(self) -> bool {
        matches!(self, Family::PGL | Family::PSL)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub family: Family,
    pub d: usize,
    pub field: Arc<Field>,
    scalars: Arc<Vec<u32>>,
}

impl PartialEq for MatrixGroup {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.d == other.d && self.field == other.field
    }
}

impl MatrixGroup {
    pub fn new(family: Family, d: usize, field: Arc<Field>) -> Result<Self> {
        if d == 0 {
            return Err(MixError::InvalidGroup("matrix dimension must be at least 1".into()));
        }
        let scalars = match family {
            Family::PSL => field.roots_of_unity(d as u32),
            Family::PGL => (1..field.q()).collect(),
            _ => vec![1],
        };
        Ok(MatrixGroup { family, d, field, scalars: Arc::new(scalars) })
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    /// Closed-form group order.
    pub fn order(&self) -> u128 {
        let q = self.q() as u128;
        let d = self.d as u32;
        let mut gl: u128 = 1;
        for i in 0..d {
            gl = gl.saturating_mul(q.pow(d).saturating_sub(q.pow(i)));
        }
        let sl = gl / (q - 1);
        match self.family {
            Family::GL => gl,
            Family::SL | Family::PGL => sl,
            Family::PSL => sl / ((q - 1) as u64).gcd(&(d as u64)) as u128,
        }
    }

    pub fn identity(&self) -> Vec<u32> {
        let mut m = vec![0; self.d * self.d];
        for i in 0..self.d {
            m[i * self.d + i] = 1;
        }
        m
    }

    pub fn raw_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = self.d;
        let f = &self.field;
        let mut out = vec![0; d * d];
        for i in 0..d {
            for k in 0..d {
                let aik = a[i * d + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..d {
                    let t = f.mul(aik, b[k * d + j]);
                    out[i * d + j] = f.add(out[i * d + j], t);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.raw_mul(a, b);
        self.canonical(&m)
    }

    pub fn scale(&self, lambda: u32, m: &[u32]) -> Vec<u32> {
        m.iter().map(|&x| self.field.mul(lambda, x)).collect()
    }

    /// Least representative of the scalar coset (identity map for GL/SL).
    pub fn canonical(&self, m: &[u32]) -> Vec<u32> {
        if !self.family.projective() {
            return m.to_vec();
        }
        self.scalars.iter().map(|&l| self.scale(l, m)).min().expect("scalar group is nonempty")
    }

    pub fn det(&self, m: &[u32]) -> u32 {
        let d = self.d;
        let f = &self.field;
        let mut a = m.to_vec();
        let mut det = 1;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * d + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("pivot is nonzero");
            for r in col + 1..d {
                let factor = f.mul(a[r * d + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..d {
                    let t = f.mul(factor, a[col * d + j]);
                    a[r * d + j] = f.sub(a[r * d + j], t);
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse.
    pub fn raw_inverse(&self, m: &[u32]) -> Result<Vec<u32>> {
        let d = self.d;
        let f = &self.field;
        let mut a = m.to_vec();
        let mut inv = self.identity();
        for col in 0..d {
            let piv = (col..d).find(|&r| a[r * d + col] != 0).ok_or(MixError::SingularMatrix)?;
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                    inv.swap(piv * d + j, col * d + j);
                }
            }
            let pinv = f.inv(a[col * d + col])?;
            for j in 0..d {
                a[col * d + j] = f.mul(a[col * d + j], pinv);
                inv[col * d + j] = f.mul(inv[col * d + j], pinv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = a[r * d + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..d {
                    let t = f.mul(factor, a[col * d + j]);
                    a[r * d + j] = f.sub(a[r * d + j], t);
                    let t = f.mul(factor, inv[col * d + j]);
                    inv[r * d + j] = f.sub(inv[r * d + j], t);
                }
            }
        }
        Ok(inv)
    }

    pub fn inverse(&self, m: &[u32]) -> Vec<u32> {
        let inv = self.raw_inverse(m).expect("group elements are invertible");
        self.canonical(&inv)
    }

    /// Validates entries, invertibility and the determinant condition, and
    /// returns the canonical representative.
    pub fn element(&self, entries: &[u32]) -> Result<Vec<u32>> {
        if entries.len() != self.d * self.d {
            return Err(MixError::InvalidElement(format!(
                "expected {} entries, got {}",
                self.d * self.d,
                entries.len()
            )));
        }
        for &x in entries {
            self.field.check(x)?;
        }
        let det = self.det(entries);
        if det == 0 {
            return Err(MixError::SingularMatrix);
        }
        if self.family.special() && det != 1 {
            return Err(MixError::WrongDeterminant);
        }
        Ok(self.canonical(entries))
    }

    pub fn validate(&self, m: &[u32]) -> Result<()> {
        let c = self.element(m)?;
        if c != m {
            return Err(MixError::InvalidElement("matrix is not the canonical coset representative".into()));
        }
        Ok(())
    }

    /// Elementary transvection `I + alpha E_{ij}`.
    pub fn transvection(&self, i: usize, j: usize, alpha: u32) -> Vec<u32> {
        let mut m = self.identity();
        m[i * self.d + j] = alpha;
        m
    }

    pub fn diagonal(&self, diag: &[u32]) -> Vec<u32> {
        let mut m = vec![0; self.d * self.d];
        for (i, &x) in diag.iter().enumerate() {
            m[i * self.d + i] = x;
        }
        m
    }

    /// Transvections over an `F_p`-basis, plus `diag(beta, 1, ..)` for GL-type.
    pub fn generators(&self) -> Vec<Vec<u32>> {
        let mut gens = Vec::new();
        for i in 0..self.d {
            for j in 0..self.d {
                if i == j {
                    continue;
                }
                for k in 0..self.field.e() {
                    gens.push(self.canonical(&self.transvection(i, j, self.field.basis(k))));
                }
            }
        }
        if !self.family.special() && self.field.q() > 2 {
            let mut diag = vec![1; self.d];
            diag[0] = self.field.primitive();
            gens.push(self.canonical(&self.diagonal(&diag)));
        }
        let id = self.identity();
        gens.retain(|g| *g != id);
        gens.dedup();
        gens
    }

    /// All elements sorted by row-major encoding.
    pub fn enumerate(&self) -> Vec<Vec<u32>> {
        let gens = self.generators();
        let id = self.identity();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    pub fn element_json(&self, m: &[u32]) -> Value {
        let rows: Vec<Value> = m
            .chunks(self.d)
            .map(|row| Value::Array(row.iter().map(|&x| self.field.element_json(x)).collect()))
            .collect();
        Value::Array(rows)
    }

    pub fn parse_element(&self, v: &Value) -> Result<Vec<u32>> {
        let rows =
            v.as_array().ok_or_else(|| MixError::InvalidElement(format!("matrix must be nested arrays: {v}")))?;
        if rows.len() != self.d {
            return Err(MixError::InvalidElement(format!("expected {} rows", self.d)));
        }
        let mut entries = Vec::with_capacity(self.d * self.d);
        for row in rows {
            let row = row.as_array().ok_or_else(|| MixError::InvalidElement("matrix row must be an array".into()))?;
            if row.len() != self.d {
                return Err(MixError::InvalidElement(format!("expected {} columns", self.d)));
            }
            for x in row {
                entries.push(self.field.parse_element(x)?);
            }
        }
        self.element(&entries)
    }

    pub fn spec_json(&self) -> Value {
        json!({"kind": "matrix", "family": self.family.name(), "d": self.d, "q": self.field.spec_json()})
    }

    /// Membership in the stabilizer of the line `F_q e_d` (last column is a
    /// multiple of `e_d`).
    pub fn stabilizes_last_line(&self, m: &[u32]) -> bool {
        let d = self.d;
        (0..d - 1).all(|i| m[i * d + d - 1] == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(family: Family, d: usize, p: u32, e: u32) -> MatrixGroup {
        MatrixGroup::new(family, d, Arc::new(Field::new(p, e).unwrap())).unwrap()
    }

    #[test]
    fn psl2_orders_by_enumeration() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let g = group(Family::PSL, 2, p, e);
            let q = p.pow(e) as u128;
            let expected = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
            assert_eq!(g.order(), expected);
            assert_eq!(g.enumerate().len() as u128, expected, "q={q}");
        }
    }

    #[test]
    fn gl_and_pgl_counts() {
        let g = group(Family::GL, 2, 3, 1);
        assert_eq!(g.enumerate().len(), 48);
        let g = group(Family::PGL, 2, 3, 1);
        assert_eq!(g.enumerate().len(), 24);
        let g = group(Family::SL, 2, 3, 1);
        assert_eq!(g.enumerate().len(), 24);
    }

    #[test]
    fn canonical_examples() {
        let sl = group(Family::SL, 2, 2, 1);
        assert_eq!(sl.element(&[1, 1, 0, 1]).unwrap(), vec![1, 1, 0, 1]);
        let psl = group(Family::PSL, 2, 5, 1);
        let m = [2, 0, 0, 3];
        let m4: Vec<u32> = m.iter().map(|&x| (x * 4) % 5).collect();
        assert_eq!(psl.element(&m).unwrap(), psl.element(&m4).unwrap());
        let pgl = group(Family::PGL, 2, 3, 1);
        assert_eq!(pgl.element(&[2, 0, 0, 2]).unwrap(), pgl.identity());
    }

    #[test]
    fn determinant_checks() {
        let sl = group(Family::SL, 2, 5, 1);
        assert!(matches!(sl.element(&[2, 0, 0, 2]), Err(MixError::WrongDeterminant)));
        assert!(matches!(sl.element(&[1, 2, 2, 4]), Err(MixError::SingularMatrix)));
    }

    #[test]
    fn inverse_round_trip() {
        let g = group(Family::GL, 3, 3, 1);
        let m = vec![1, 2, 0, 0, 1, 1, 2, 0, 1];
        let m = g.element(&m).unwrap();
        assert_eq!(g.mul(&m, &g.inverse(&m)), g.identity());
    }

    #[test]
    fn canonicalization_constant_on_scalar_orbits() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            for fam in [Family::PSL, Family::PGL] {
                let g = group(fam, 2, p, e);
                let scalars = if fam == Family::PSL { g.field.roots_of_unity(2) } else { (1..g.field.q()).collect() };
                for m in g.enumerate() {
                    assert_eq!(g.canonical(&m), m);
                    for &l in &scalars {
                        assert_eq!(g.canonical(&g.scale(l, &m)), m);
                    }
                }
            }
        }
    }
}
