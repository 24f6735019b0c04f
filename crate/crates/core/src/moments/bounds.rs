use std::collections::BTreeMap;

use num_traits::Zero;

use super::CoeffDistribution;
use crate::chow::{chow_via_flags, gamma_vector, GammaVector};
use crate::combinat::{binomial, double_factorial, pow_rat, rat, rat_int};
use crate::flags::FlagTable;
use crate::matroid::Matroid;
use crate::{Error, Integer, Rational, Result};

/// `((d+2)/12)^{k/2} (k-1)!!` for even `k`, zero for odd `k`.
pub fn normal_bound(d: usize, k: u32) -> Rational {
    if k % 2 == 1 {
        return Rational::zero();
    }
    pow_rat(&rat(d as i64 + 2, 12), k / 2) * rat_int(double_factorial(k as i64 - 1))
}

/// Central `k`-th moment of `Bin(d, 1/2)`.
pub fn binomial_bound(d: usize, k: u32) -> Rational {
    let center = rat(d as i64, 2);
    let sum: Rational = (0..=d)
        .map(|j| rat_int(binomial(d as i64, j as i64)) * pow_rat(&(rat_int(j) - &center), k))
        .sum();
    sum / rat_int(num_traits::pow(Integer::from(2), d))
}

/// 0 for even `d`, `2^{-k}` for odd `d`; defined for even `k > 0`.
pub fn naive_lower_bound(d: usize, k: u32) -> Result<Rational> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::InvalidMomentOrder { k, reason: "the naive bound needs an even positive order" });
    }
    Ok(if d.is_multiple_of(2) {
        Rational::zero()
    } else {
        Rational::new(1.into(), num_traits::pow(Integer::from(2), k as usize))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Naive,
    Normal,
    Binomial,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Naive => "naive",
            BoundKind::Normal => "normal",
            BoundKind::Binomial => "binomial",
        }
    }

    pub fn is_lower(self) -> bool {
        self == BoundKind::Naive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundComparison {
    pub kind: BoundKind,
    pub k: u32,
    pub value: Rational,
    pub holds: bool,
    pub equality: bool,
}

/// Which case of the variance bound a matroid falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EqualityDiagnosis {
    DEquals1,
    BooleanSimplification,
    Strict,
    NotApplicable,
}

impl EqualityDiagnosis {
    /// `d = 1` takes precedence over a Boolean simplification.
    pub fn predict(d: usize, simplification_is_boolean: bool) -> Self {
        match d {
            1 => EqualityDiagnosis::DEquals1,
            d if d > 0 && simplification_is_boolean => EqualityDiagnosis::BooleanSimplification,
            _ => EqualityDiagnosis::Strict,
        }
    }

    pub fn is_equality(self) -> bool {
        matches!(self, EqualityDiagnosis::DEquals1 | EqualityDiagnosis::BooleanSimplification)
    }

    pub fn name(self) -> &'static str {
        match self {
            EqualityDiagnosis::DEquals1 => "d_equals_1",
            EqualityDiagnosis::BooleanSimplification => "boolean_simplification",
            EqualityDiagnosis::Strict => "strict",
            EqualityDiagnosis::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub d: usize,
    pub central_moments: BTreeMap<u32, Rational>,
    pub factorial_moments: BTreeMap<u32, Rational>,
    pub bound_comparisons: Vec<BoundComparison>,
    pub equality_diagnosis: EqualityDiagnosis,
    /// Whether the exact variance comparison agrees with the diagnosis.
    pub diagnosis_consistent: bool,
}

impl MomentReport {
    pub fn all_hold(&self) -> bool {
        self.diagnosis_consistent && self.bound_comparisons.iter().all(|b| b.holds)
    }
}

pub fn verify_bounds(m: &Matroid, k_max: u32) -> MomentReport {
    verify_distribution(&CoeffDistribution::of_matroid(m), m.simplification_is_boolean(), k_max)
}

/// Checks `naive <= E[(X - d/2)^k] <= min(normal, binomial)` for even
/// `2 <= k <= k_max`.
pub fn verify_distribution(dist: &CoeffDistribution, simplification_is_boolean: bool, k_max: u32) -> MomentReport {
    let d = dist.d;
    let mut central_moments = BTreeMap::new();
    let mut factorial_moments = BTreeMap::new();
    let mut bound_comparisons = Vec::new();
    for k in 0..=k_max {
        let mu = dist.central_moment(k);
        factorial_moments.insert(k, dist.factorial_moment(k));
        if k >= 2 && k % 2 == 0 {
            let bounds = [
                (BoundKind::Naive, naive_lower_bound(d, k).expect("even positive order")),
                (BoundKind::Normal, normal_bound(d, k)),
                (BoundKind::Binomial, binomial_bound(d, k)),
            ];
            for (kind, value) in bounds {
                let holds = if kind.is_lower() { value <= mu } else { mu <= value };
                bound_comparisons.push(BoundComparison { kind, k, equality: value == mu, value, holds });
            }
        }
        central_moments.insert(k, mu);
    }
    let (equality_diagnosis, diagnosis_consistent) = if k_max >= 2 {
        let predicted = EqualityDiagnosis::predict(d, simplification_is_boolean);
        let observed = central_moments[&2] == normal_bound(d, 2);
        (predicted, predicted.is_equality() == observed)
    } else {
        (EqualityDiagnosis::NotApplicable, true)
    };
    MomentReport {
        d,
        central_moments,
        factorial_moments,
        bound_comparisons,
        equality_diagnosis,
        diagnosis_consistent,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityValue {
    pub value: Rational,
    pub holds: bool,
    pub equality: bool,
}

impl InequalityValue {
    fn nonpositive(value: Rational) -> Self {
        InequalityValue {
            holds: value <= Rational::zero(),
            equality: value.is_zero(),
            value,
        }
    }
}

/// `Σ_J Π(n_i - 1) (Σ n_i (n_i - 3)/2) N_J <= 0`.
pub fn flag_inequality(m: &Matroid) -> InequalityValue {
    flag_inequality_of_table(&FlagTable::of_matroid(m))
}

pub fn flag_inequality_of_table(table: &FlagTable) -> InequalityValue {
    let value: Integer = table
        .iter()
        .map(|(j, n)| {
            let b = j.block_sizes();
            b.weight() * b.shape() * n
        })
        .sum();
    InequalityValue::nonpositive(Rational::from_integer(value))
}

/// `Σ_t 4^{-t} (d - 3t - 1) γ_t <= 0`.
pub fn gamma_inequality(m: &Matroid) -> InequalityValue {
    let h = chow_via_flags(m);
    let d = m.d();
    gamma_inequality_of(&gamma_vector(&h, d).expect("Chow polynomials are palindromic"))
}

pub fn gamma_inequality_of(g: &GammaVector) -> InequalityValue {
    let d = g.d;
    let value = g
        .gamma
        .iter()
        .enumerate()
        .map(|(t, gt)| {
            let c = Rational::new(
                Integer::from(d as i64 - 3 * t as i64 - 1),
                num_traits::pow(Integer::from(4), t),
            );
            c * gt
        })
        .sum();
    InequalityValue::nonpositive(value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub w1: Rational,
    pub w2: Rational,
    pub w3: Rational,
    pub bounds_hold: bool,
}

/// `W_1 = d/2`, `W_2 = W_1 - Var`, `W_3 = (3 W_2 - W_1)/2`, with
/// `(5d-2)/12 <= W_2 <= d/2` and `(3d-2)/8 <= W_3 <= d/2`.
pub fn power_sum_report(m: &Matroid) -> PowerSums {
    power_sums_of(&CoeffDistribution::of_matroid(m))
}

pub fn power_sums_of(dist: &CoeffDistribution) -> PowerSums {
    let d = dist.d as i64;
    let w1 = rat(d, 2);
    let w2 = &w1 - dist.central_moment(2);
    let w3 = (rat_int(3) * &w2 - &w1) / rat_int(2);
    let bounds_hold = rat(5 * d - 2, 12) <= w2 && w2 <= w1 && rat(3 * d - 2, 8) <= w3 && w3 <= w1;
    PowerSums { w1, w2, w3, bounds_hold }
}
