//! Dense square matrices over Gaussian rationals.

use crate::scalar::{GaussRational, Rat};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct GaussMatrix {
    n: usize,
    data: Vec<GaussRational>,
}

impl GaussMatrix {
    pub fn zero(n: usize) -> Self {
        GaussMatrix {
            n,
            data: vec![GaussRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GaussMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, GaussRational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &GaussRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussRational) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &GaussRational) {
        let cur = self.at(i, j) + v;
        self.set(i, j, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        GaussMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        GaussMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> GaussMatrix {
        GaussMatrix {
            n: self.n,
            data: self.data.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = GaussMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &GaussMatrix) -> GaussMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> GaussMatrix {
        let n = self.n;
        let mut out = GaussMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> GaussRational {
        let mut t = GaussRational::zero();
        for i in 0..self.n {
            t = &t + self.at(i, i);
        }
        t
    }

    /// trace(self * rhs) without materializing the product.
    pub fn trace_of_product(&self, rhs: &GaussMatrix) -> GaussRational {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let mut t = GaussRational::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                t = &t + &(a * rhs.at(j, i));
            }
        }
        t
    }
}

impl fmt::Debug for GaussMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn product_and_trace() {
        let mut a = GaussMatrix::zero(2);
        a.set(0, 1, GaussRational::i());
        a.set(1, 0, GaussRational::i());
        let sq = a.mul(&a);
        assert_eq!(sq.at(0, 0), &GaussRational::from_rat(rat(-1)));
        assert_eq!(sq.trace(), GaussRational::from_rat(rat(-2)));
        assert_eq!(a.trace_of_product(&a), sq.trace());
    }
}
