use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::real::Real;

/// Complex number over [`Real`].
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Real) -> Self {
        Complex { re, im: Real::zero() }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Complex { re: Real::from_f64(re), im: Real::from_f64(im) }
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: &Real) -> Self {
        Complex { re: &self.re * s, im: &self.im * s }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Complex { re: &self.re / &n, im: -(&self.im / &n) }
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, o: &'a Complex) -> Complex {
        Complex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, o: &'a Complex) -> Complex {
        Complex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, o: &'a Complex) -> Complex {
        Complex { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}

impl Zero for Complex {
    fn zero() -> Self {
        Complex { re: Real::zero(), im: Real::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        &self + &o
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, o: Complex) -> Complex {
        &self * &o
    }
}

impl One for Complex {
    fn one() -> Self {
        Complex::real(Real::one())
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re.to_decimal_string(12), self.im.to_decimal_string(12))
    }
}
