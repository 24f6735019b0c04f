//! Truncated power series over the rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// A power series known modulo `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl PowerSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        PowerSeries { coeffs, order }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rational {
        assert!(k < self.order, "coefficient z^{k} is beyond the truncation order {}", self.order);
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out, order }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rat;

    #[test]
    fn binomial_series() {
        let s = PowerSeries::new(vec![rat(1, 1), rat(1, 1)], 5);
        let p = s.pow(4);
        let expected: Vec<Rational> = [1, 4, 6, 4, 1].iter().map(|&c| rat(c, 1)).collect();
        assert_eq!(p.coeffs(), &expected[..]);
        assert_eq!(s.pow(0), PowerSeries::one(5));
    }
}
