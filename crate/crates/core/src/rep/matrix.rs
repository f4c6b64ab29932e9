use num_traits::{One, Zero};

use super::complex::Complex;
use crate::real::Real;

pub type Vector = Vec<Complex>;

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    pub dim: usize,
    pub data: Vec<Complex>,
}

impl CMatrix {
    pub fn zero(dim: usize) -> Self {
        CMatrix { dim, data: vec![Complex::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex::one();
        }
        m
    }

    pub fn from_reals(dim: usize, entries: Vec<Real>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        CMatrix { dim, data: entries.into_iter().map(Complex::real).collect() }
    }

    pub fn from_f64(dim: usize, entries: &[f64]) -> Self {
        Self::from_reals(dim, entries.iter().map(|&x| Real::from_f64(x)).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex {
        &self.data[i * self.dim + j]
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let t = a * o.get(k, j);
                    out.data[i * d + j] = &out.data[i * d + j] + &t;
                }
            }
        }
        out
    }

    pub fn add(&self, o: &CMatrix) -> CMatrix {
        CMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &CMatrix) -> CMatrix {
        CMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Real) -> CMatrix {
        CMatrix { dim: self.dim, data: self.data.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn adjoint(&self) -> CMatrix {
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> Real {
        self.data.iter().fold(Real::zero(), |acc, a| acc + a.norm_sqr()).sqrt()
    }

    /// Largest entrywise modulus of `self - o`.
    pub fn distance(&self, o: &CMatrix) -> Real {
        self.data.iter().zip(&o.data).fold(Real::zero(), |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub fn apply(&self, v: &[Complex]) -> Vector {
        (0..self.dim).map(|i| (0..self.dim).fold(Complex::zero(), |acc, j| &acc + &(self.get(i, j) * &v[j]))).collect()
    }

    pub fn is_real(&self, tol: &Real) -> bool {
        self.data.iter().all(|a| a.im.abs() <= *tol)
    }

    /// Orthonormal basis of the null space; pivots below `tol` count as zero.
    pub fn kernel(&self, tol: &Real) -> Vec<Vector> {
        let d = self.dim;
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..d {
            if row == d {
                break;
            }
            let (best, size) = (row..d).map(|r| (r, m[r * d + col].abs())).fold((row, Real::from_i64(-1)), |acc, x| {
                if x.1 > acc.1 {
                    x
                } else {
                    acc
                }
            });
            if size <= *tol {
                continue;
            }
            for j in 0..d {
                m.swap(row * d + j, best * d + j);
            }
            let inv = m[row * d + col].recip();
            for j in 0..d {
                m[row * d + j] = &m[row * d + j] * &inv;
            }
            for r in 0..d {
                if r == row {
                    continue;
                }
                let f = m[r * d + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let t = &f * &m[row * d + j];
                    m[r * d + j] = &m[r * d + j] - &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vector> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Complex::zero(); d];
                v[f] = Complex::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&m[r * d + f];
                }
                v
            })
            .collect();
        gram_schmidt(&raw, tol)
    }

    pub fn rank(&self, tol: &Real) -> usize {
        self.dim - self.kernel(tol).len()
    }
}

/// `<u, v> = sum u_i conj(v_i)`.
pub fn inner(u: &[Complex], v: &[Complex]) -> Complex {
    u.iter().zip(v).fold(Complex::zero(), |acc, (a, b)| &acc + &(a * &b.conj()))
}

pub fn norm(v: &[Complex]) -> Real {
    inner(v, v).re.sqrt()
}

pub fn normalize(v: &[Complex]) -> Vector {
    let n = Real::one() / norm(v);
    v.iter().map(|a| a.scale(&n)).collect()
}

/// Orthonormalizes, dropping vectors dependent within `tol`.
pub fn gram_schmidt(vs: &[Vector], tol: &Real) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &out {
            let c = inner(&w, u);
            w = w.iter().zip(u).map(|(a, b)| a - &(&c * b)).collect();
        }
        if norm(&w) > *tol {
            out.push(normalize(&w));
        }
    }
    out
}

/// Real cross product of the real parts.
pub fn cross3(u: &[Complex], v: &[Complex]) -> Vector {
    let (a, b) = (|i: usize| &u[i].re, |i: usize| &v[i].re);
    vec![
        Complex::real(a(1) * b(2) - a(2) * b(1)),
        Complex::real(a(2) * b(0) - a(0) * b(2)),
        Complex::real(a(0) * b(1) - a(1) * b(0)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Real {
        Real::parse("1e-20").unwrap()
    }

    #[test]
    fn kernel_of_projection() {
        let m = CMatrix::from_f64(3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let k = m.kernel(&tol());
        assert_eq!(k.len(), 1);
        assert!((k[0][1].abs() - Real::one()).abs() < tol());
        assert_eq!(CMatrix::identity(4).rank(&tol()), 4);
        assert_eq!(CMatrix::zero(2).kernel(&tol()).len(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = CMatrix::from_f64(3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 1.0, 0.0, -1.0]);
        let k = m.kernel(&tol());
        assert_eq!(k.len(), 1);
        assert!(norm(&m.apply(&k[0])) < tol());
    }

    #[test]
    fn product_and_adjoint() {
        let a = CMatrix {
            dim: 2,
            data: vec![Complex::zero(), Complex::from_f64(0.0, 1.0), Complex::one(), Complex::zero()],
        };
        let p = a.mul(&a.adjoint());
        assert!(p.distance(&CMatrix::identity(2)) < tol());
        assert_eq!(CMatrix::identity(3).frobenius_norm(), Real::from_i64(3).sqrt());
    }
}
