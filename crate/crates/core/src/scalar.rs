//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The exact rational scalar type used throughout the crate.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational n/d. Panics if d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A complex number with rational real and imaginary parts.
///
/// This is the scalar field of the matrix realization; the enveloping-algebra
/// side of the crate only ever sees plain rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::new(Rat::zero(), Rat::one())
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRational::new(re, Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        GaussRational::new(&self.re * c, &self.im * c)
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im < Rat::zero() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_product() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, GaussRational::from_rat(rat(-1)));
        let z = GaussRational::new(rat(1), rat(2));
        let w = GaussRational::new(rat(3), rat(-1));
        assert_eq!(&z * &w, GaussRational::new(rat(5), rat(5)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRational::zero().to_string(), "0");
        assert_eq!(GaussRational::new(ratio(3, 2), rat(0)).to_string(), "3/2");
        assert_eq!(GaussRational::new(rat(0), rat(-1)).to_string(), "-1i");
        assert_eq!(GaussRational::new(rat(1), rat(1)).to_string(), "1+1i");
    }
}
