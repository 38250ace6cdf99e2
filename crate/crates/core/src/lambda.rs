//! Polynomials in the formal weight variables λ1, λ2, ... with exact
//! rational coefficients. Plain rationals embed as constants, so these are
//! the single coefficient type used by the enveloping-algebra layer.
//!
//! Exponent vectors are stored with trailing zeros trimmed, which makes a
//! constant the empty vector and lets polynomials in different variable
//! counts combine freely. A single shared λ (the scalar K-type case) is
//! variable 0.

use crate::scalar::{rat, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LambdaPoly {
    terms: BTreeMap<Vec<u32>, Rat>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly::default()
    }

    pub fn one() -> Self {
        LambdaPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = LambdaPoly::default();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        LambdaPoly::constant(rat(n))
    }

    /// The variable λ_{i+1} (0-based index; index 0 is the shared scalar λ).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0u32; i + 1];
        e[i] = 1;
        let mut p = LambdaPoly::default();
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Vec::new()))
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.get(&Vec::new()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn insert_add(&mut self, expo: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let expo = trim(expo);
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = LambdaPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Highest total degree, 0 for the zero polynomial.
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// True when only variable 0 (or no variable) appears.
    pub fn single_variable(&self) -> bool {
        self.terms.keys().all(|e| e.len() <= 1)
    }

    /// Coefficient of λ^d; requires a single-variable polynomial.
    pub fn coeff_of_power(&self, d: usize) -> Rat {
        assert!(self.single_variable(), "polynomial uses several variables");
        let key = if d == 0 { Vec::new() } else { vec![d as u32] };
        self.terms.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    /// Specialize all variables to the single shared λ.
    pub fn specialize_equal(&self) -> Self {
        let mut out = LambdaPoly::zero();
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            let key = if d == 0 { Vec::new() } else { vec![d] };
            out.insert_add(key, c.clone());
        }
        out
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let len = ea.len().max(eb.len());
                let mut e = vec![0u32; len];
                for (i, v) in ea.iter().enumerate() {
                    e[i] += v;
                }
                for (i, v) in eb.iter().enumerate() {
                    e[i] += v;
                }
                out.insert_add(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::lambda_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn arithmetic() {
        let l1 = LambdaPoly::var(0);
        let l2 = LambdaPoly::var(1);
        let p = &(&l1 * &l1) + &l2.scale(&rat(2));
        assert_eq!(p.total_degree(), 2);
        assert_eq!(&p - &p, LambdaPoly::zero());
        let q = &p * &LambdaPoly::constant(ratio(1, 2));
        assert_eq!(q.coeff_of_var_test(&[2]), ratio(1, 2));
    }

    impl LambdaPoly {
        fn coeff_of_var_test(&self, e: &[u32]) -> Rat {
            self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
        }
    }

    #[test]
    fn constants_and_specialization() {
        let c = LambdaPoly::from_int(3);
        assert!(c.is_constant());
        assert_eq!(c.as_rational(), Some(rat(3)));

        // λ1·λ2 + λ1 specializes to λ^2 + λ.
        let p = &(&LambdaPoly::var(0) * &LambdaPoly::var(1)) + &LambdaPoly::var(0);
        let s = p.specialize_equal();
        assert!(s.single_variable());
        assert_eq!(s.coeff_of_power(2), rat(1));
        assert_eq!(s.coeff_of_power(1), rat(1));
    }

    #[test]
    fn cancellation_prunes() {
        let l = LambdaPoly::var(0);
        let z = &l - &l;
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }
}
