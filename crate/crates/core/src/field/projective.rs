use serde_json::Value;

use super::{Field, MatrixGroup};
use crate::error::{MixError, Result};

/// Homogeneous coordinates normalized so the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub Vec<u32>);

impl ProjectivePoint {
    pub fn new(field: &Field, coords: Vec<u32>) -> Result<Self> {
        for &c in &coords {
            field.check(c)?;
        }
        normalize(field, coords).ok_or_else(|| MixError::InvalidElement("zero vector is not a projective point".into()))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn to_json(&self, field: &Field) -> Value {
        Value::Array(self.0.iter().map(|&x| field.element_json(x)).collect())
    }

    pub fn parse(field: &Field, d: usize, v: &Value) -> Result<Self> {
        let arr =
            v.as_array().ok_or_else(|| MixError::InvalidElement(format!("projective point must be an array: {v}")))?;
        if arr.len() != d {
            return Err(MixError::InvalidElement(format!("projective point needs {d} coordinates")));
        }
        let coords = arr.iter().map(|x| field.parse_element(x)).collect::<Result<Vec<_>>>()?;
        Self::new(field, coords)
    }
}

fn normalize(field: &Field, mut v: Vec<u32>) -> Option<ProjectivePoint> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = field.inv(lead).ok()?;
    for x in v.iter_mut() {
        *x = field.mul(*x, inv);
    }
    Some(ProjectivePoint(v))
}

/// `M v`, renormalized.
pub fn act(group: &MatrixGroup, m: &[u32], v: &ProjectivePoint) -> ProjectivePoint {
    let d = group.d;
    let f = &group.field;
    let mut out = vec![0; d];
    for (i, slot) in out.iter_mut().enumerate() {
        for j in 0..d {
            *slot = f.add(*slot, f.mul(m[i * d + j], v.0[j]));
        }
    }
    normalize(f, out).expect("invertible matrices preserve nonzero vectors")
}

/// All points of `P^{d-1}(F_q)` in lexicographic coordinate order.
pub fn all_points(field: &Field, d: usize) -> Vec<ProjectivePoint> {
    let q = field.q();
    let mut out = Vec::new();
    // first nonzero coordinate at position `lead`
    for lead in (0..d).rev() {
        let free = d - lead - 1;
        let count = (q as u64).pow(free as u32);
        for idx in 0..count {
            let mut v = vec![0; d];
            v[lead] = 1;
            let mut r = idx;
            for k in (lead + 1..d).rev() {
                v[k] = (r % q as u64) as u32;
                r /= q as u64;
            }
            out.push(ProjectivePoint(v));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Family;
    use std::sync::Arc;

    #[test]
    fn examples() {
        let f2 = Arc::new(Field::new(2, 1).unwrap());
        let g = MatrixGroup::new(Family::SL, 2, f2.clone()).unwrap();
        let inf = ProjectivePoint::new(&f2, vec![1, 0]).unwrap();
        assert_eq!(act(&g, &g.identity(), &inf), inf);
        assert_eq!(act(&g, &[0, 1, 1, 0], &inf).0, vec![0, 1]);

        let f4 = Arc::new(Field::new(2, 2).unwrap());
        let g = MatrixGroup::new(Family::SL, 2, f4.clone()).unwrap();
        let x = 2;
        let zero = ProjectivePoint::new(&f4, vec![0, 1]).unwrap();
        // [x : 1] normalizes to [1 : x^-1]
        let img = act(&g, &[1, x, 0, 1], &zero);
        assert_eq!(img, ProjectivePoint::new(&f4, vec![x, 1]).unwrap());
    }

    #[test]
    fn point_counts() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(all_points(&f, 2).len(), 4);
        assert_eq!(all_points(&f, 3).len(), 13);
    }

    #[test]
    fn action_is_homomorphic() {
        let f = Arc::new(Field::new(5, 1).unwrap());
        let g = MatrixGroup::new(Family::PSL, 2, f.clone()).unwrap();
        let els = g.enumerate();
        let pts = all_points(&f, 2);
        for (i, a) in els.iter().enumerate().step_by(7) {
            for b in els.iter().skip(i % 5).step_by(11) {
                let ab = g.mul(a, b);
                for v in &pts {
                    assert_eq!(act(&g, &ab, v), act(&g, a, &act(&g, b, v)));
                }
            }
        }
    }
}
