//! Moments of the normalized coefficient distribution of a Chow polynomial,
//! the Eulerian reference values, and the polynomials `E'_k(d)`.

mod bounds;
mod placement;
mod sweep;

pub use bounds::{
    binomial_bound, flag_inequality, flag_inequality_of_table, gamma_inequality, gamma_inequality_of, naive_lower_bound, normal_bound,
    power_sum_report, power_sums_of, verify_bounds, verify_distribution, BoundComparison, BoundKind,
    EqualityDiagnosis, InequalityValue, MomentReport, PowerSums,
};
pub use placement::{block_placement_count, eulerian_convolution_identity};
pub use sweep::{boolean_sweep, SweepOutcome, SweepPoint};

use num_traits::{One, Zero};

use crate::chow::chow_via_flags;
use crate::combinat::{binomial, double_factorial, eulerian_row, factorial, pow_rat, rat, rat_int};
use crate::matroid::Matroid;
use crate::poly::UniPoly;
use crate::series::PowerSeries;
use crate::Rational;

/// `Pr(X = p) = a_p / Σ a_i` for a polynomial with nonnegative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffDistribution {
    pub d: usize,
    pub weights: Vec<Rational>,
}

impl CoeffDistribution {
    pub fn from_poly(p: &UniPoly) -> Self {
        let total: Rational = p.coeffs().iter().sum();
        assert!(!total.is_zero(), "distribution of a polynomial with zero sum");
        CoeffDistribution {
            d: p.degree().unwrap_or(0),
            weights: p.coeffs().iter().map(|c| c / &total).collect(),
        }
    }

    pub fn of_matroid(m: &Matroid) -> Self {
        Self::from_poly(&chow_via_flags(m))
    }

    /// `X_d`: descents of a uniform permutation of `d + 1` letters.
    pub fn eulerian(d: usize) -> Self {
        Self::from_poly(&UniPoly::from_integers(eulerian_row(d + 1)))
    }

    pub fn mean(&self) -> Rational {
        self.raw_moment(1)
    }

    /// `E[X^k]`.
    pub fn raw_moment(&self, k: u32) -> Rational {
        self.expect(|p| pow_rat(&rat_int(p), k))
    }

    /// `E[(X - d/2)^k]`.
    pub fn central_moment(&self, k: u32) -> Rational {
        let center = rat(self.d as i64, 2);
        self.expect(|p| pow_rat(&(rat_int(p) - &center), k))
    }

    /// `E[binom(X, k)]`.
    pub fn factorial_moment(&self, k: u32) -> Rational {
        self.expect(|p| rat_int(binomial(p as i64, k as i64)))
    }

    fn expect(&self, f: impl Fn(usize) -> Rational) -> Rational {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(p, w)| f(p) * w)
            .sum()
    }
}

pub fn distribution(m: &Matroid) -> CoeffDistribution {
    CoeffDistribution::of_matroid(m)
}

pub fn central_moment(dist: &CoeffDistribution, k: u32) -> Rational {
    dist.central_moment(k)
}

pub fn factorial_moment(dist: &CoeffDistribution, k: u32) -> Rational {
    dist.factorial_moment(k)
}

/// Central moment of the Eulerian distribution `A(d+1, ·) / (d+1)!`.
pub fn eulerian_central_moment(d: usize, k: u32) -> Rational {
    CoeffDistribution::eulerian(d).central_moment(k)
}

/// `Σ_t z^{2t} / (4^t (2t+1)!)` modulo `z^order`.
fn half_sinh_ratio(order: usize) -> PowerSeries {
    let coeffs = (0..order)
        .map(|i| {
            if i % 2 == 1 {
                return Rational::zero();
            }
            let t = (i / 2) as u32;
            Rational::new(1.into(), num_traits::pow(crate::Integer::from(4), t as usize) * factorial(2 * t as u64 + 1))
        })
        .collect();
    PowerSeries::new(coeffs, order)
}

/// `E'_k(d) = k! [z^k] (Σ_t z^{2t} / (4^t (2t+1)!))^{d+2}`, a polynomial in
/// `d` of degree `k/2`, interpolated from `k/2 + 1` integer evaluations.
pub fn e_prime_poly(k: usize) -> UniPoly {
    if k % 2 == 1 {
        return UniPoly::zero();
    }
    let base = half_sinh_ratio(k + 1);
    let kf = rat_int(factorial(k as u64));
    let ys: Vec<Rational> = (0..=k / 2)
        .map(|d| base.pow(d as u64 + 2).coeff(k) * &kf)
        .collect();
    UniPoly::interpolate_at_naturals(&ys)
}

/// Special values of `E'_{2k}` at `d = -2, -1, 0` and its leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPrimeSpecialValues {
    pub at_minus_two: Rational,
    pub at_minus_one: Rational,
    pub at_zero: Rational,
    pub leading: Rational,
}

impl EPrimeSpecialValues {
    pub fn of(k: usize) -> Self {
        let p = e_prime_poly(2 * k);
        EPrimeSpecialValues {
            at_minus_two: p.eval_int(-2),
            at_minus_one: p.eval_int(-1),
            at_zero: p.eval_int(0),
            leading: p.leading(),
        }
    }

    /// `0^k`, `1/((2k+1)4^k)`, `1/((2k+1)(k+1))` and `(1/12)^k (2k-1)!!`.
    pub fn expected(k: usize) -> Self {
        let k64 = k as i64;
        EPrimeSpecialValues {
            at_minus_two: if k == 0 { Rational::one() } else { Rational::zero() },
            at_minus_one: Rational::new(1.into(), crate::Integer::from(2 * k64 + 1) * num_traits::pow(crate::Integer::from(4), k)),
            at_zero: rat(1, (2 * k64 + 1) * (k64 + 1)),
            leading: pow_rat(&rat(1, 12), k as u32) * rat_int(double_factorial(2 * k64 - 1)),
        }
    }
}

pub fn e_prime_special_values_check(k: usize) -> bool {
    EPrimeSpecialValues::of(k) == EPrimeSpecialValues::expected(k)
}
