//! Chern numbers of the tangent class of a matroid, expressed through flag
//! counts, and the intersection numbers of the permutahedral variety.

mod alpha;
mod permutahedron;

pub use alpha::{
    coeff_f, coeff_g, f_by_recurrence, g_by_recurrence, top_f, top_g, ChernAlphaTable,
};
pub use permutahedron::{
    c_d_coefficient_in_h, c_ks_coefficient, h4_permutahedron, h4_permutahedron_check,
    perm_c1k, perm_ck, perm_ck_alternative, perm_ck_primary, perm_pk,
};

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, factorial, rat, rat_int};
use crate::flags::{FlagTable, RankIndexSet};
use crate::matroid::Matroid;
use crate::moments::CoeffDistribution;
use crate::series::PowerSeries;
use crate::{Error, Integer, Rational, Result};

/// `Σ_J coeff(J) N_J`.
fn pair(table: &FlagTable, coeff: impl Fn(&RankIndexSet) -> Integer) -> Integer {
    table
        .iter()
        .filter(|(_, n)| !n.is_zero())
        .map(|(j, n)| coeff(&j) * n)
        .sum()
}

/// `c_k α^{d-k}`.
pub fn chern_alpha_of(table: &FlagTable, k: usize) -> Integer {
    pair(table, |j| coeff_f(k, j))
}

/// `c_1 c_{k-1} α^{d-k}`.
pub fn c1_ck1_alpha_of(table: &FlagTable, k: usize) -> Integer {
    pair(table, |j| coeff_g(k, j))
}

pub fn chern_alpha(m: &Matroid, k: usize) -> Result<Integer> {
    if k > m.d() {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds d = {}", m.d())));
    }
    Ok(chern_alpha_of(&FlagTable::of_matroid(m), k))
}

pub fn c1_ck1_alpha(m: &Matroid, k: usize) -> Result<Integer> {
    if k > m.d() {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds d = {}", m.d())));
    }
    Ok(c1_ck1_alpha_of(&FlagTable::of_matroid(m), k))
}

/// `c_d = Σ_J Π(n_i - 1) N_J`.
pub fn top_chern_of(table: &FlagTable) -> Integer {
    pair(table, top_f)
}

/// `c_1 c_{d-1} = Σ_J g_{d,J}(d) N_J`.
pub fn c1_cdminus1_of(table: &FlagTable) -> Integer {
    pair(table, top_g)
}

pub fn top_chern(m: &Matroid) -> Integer {
    top_chern_of(&FlagTable::of_matroid(m))
}

pub fn c1_cdminus1(m: &Matroid) -> Integer {
    c1_cdminus1_of(&FlagTable::of_matroid(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernInequality {
    /// `c_1 c_{d-1} - c_d`.
    pub lhs: Integer,
    pub holds: bool,
    pub equality: bool,
}

/// `c_1 c_{d-1} - c_d <= 0`.
pub fn verify_chern_inequality(m: &Matroid) -> ChernInequality {
    chern_inequality_of(&FlagTable::of_matroid(m))
}

pub fn chern_inequality_of(table: &FlagTable) -> ChernInequality {
    let lhs = c1_cdminus1_of(table) - top_chern_of(table);
    ChernInequality {
        holds: !lhs.is_positive(),
        equality: lhs.is_zero(),
        lhs,
    }
}

/// `(d+1)! / (d-k+1)!`, the value for `U_{d+1}`.
pub fn chern_alpha_lower_bound(d: usize, k: usize) -> Integer {
    factorial(d as u64 + 1) / factorial((d - k) as u64 + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiyaokaYau {
    /// `((d+2) c_2 - 2d c_1²) α^{d-2}` from the coefficient tables.
    pub value: Integer,
    /// `(3d+2)(N_2 - binom(d+1, 2))`.
    pub closed_form: Integer,
    pub holds: bool,
}

pub fn miyaoka_yau_alpha(m: &Matroid) -> Result<MiyaokaYau> {
    miyaoka_yau_of(&FlagTable::of_matroid(m))
}

pub fn miyaoka_yau_of(table: &FlagTable) -> Result<MiyaokaYau> {
    let d = table.d();
    if d < 2 {
        return Err(Error::RankTooSmall { rank: d + 1, required: 3 });
    }
    let di = d as i64;
    let value = Integer::from(di + 2) * chern_alpha_of(table, 2) - Integer::from(2 * di) * c1_ck1_alpha_of(table, 2);
    let closed_form = Integer::from(3 * di + 2) * (table.singleton(2) - binomial(di + 1, 2));
    Ok(MiyaokaYau {
        holds: !value.is_negative(),
        value,
        closed_form,
    })
}

/// `deg(α^{d-k} β^k) = (-1)^k Σ_{J ⊆ [k]} (-1)^{|J|} N_J`.
pub fn deg_alpha_beta(m: &Matroid, k: usize) -> Result<Integer> {
    if k > m.d() {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds d = {}", m.d())));
    }
    Ok(deg_alpha_beta_of(&FlagTable::of_matroid(m), k))
}

pub fn deg_alpha_beta_of(table: &FlagTable, k: usize) -> Integer {
    let sum: Integer = table
        .iter()
        .filter(|(j, _)| j.within(k))
        .map(|(j, n)| if j.len() % 2 == 0 { n.clone() } else { -n.clone() })
        .sum();
    if k.is_multiple_of(2) {
        sum
    } else {
        -sum
    }
}

/// `h_k = c_d E[(X - d/2)^k]`.
pub fn h_from_moments(m: &Matroid, k: u32) -> Rational {
    let table = FlagTable::of_matroid(m);
    let dist = CoeffDistribution::from_poly(&crate::chow::chow_from_flag_table(&table));
    rat_int(top_chern_of(&table)) * dist.central_moment(k)
}

/// `h_2 = (d/12) c_d + (1/6) c_1 c_{d-1}`.
pub fn h2_from_chern(d: usize, c_d: &Integer, c1_cd1: &Integer) -> Rational {
    rat(d as i64, 12) * rat_int(c_d.clone()) + rat(1, 6) * rat_int(c1_cd1.clone())
}

/// `[α^k] (L/α)^{d-k} / (1 - α)` with `L = -log(1 - α)`: the degree of
/// `α^{d-k} td_k`, independent of the matroid.
pub fn todd_alpha_expected(d: usize, k: usize) -> Rational {
    let order = k + 1;
    let l_over_alpha = PowerSeries::new((0..order).map(|i| rat(1, i as i64 + 1)).collect(), order);
    let geometric = PowerSeries::new(vec![Rational::one(); order], order);
    l_over_alpha.pow((d - k) as u64).mul(&geometric).coeff(k)
}

/// `α^{d-k} td_k` assembled from `td_1 = c_1/2`, `td_2 = (c_1² + c_2)/12`,
/// `td_3 = c_1 c_2/24`.
pub fn todd_alpha(table: &FlagTable, k: usize) -> Result<Rational> {
    let c = |k| rat_int(chern_alpha_of(table, k));
    let c1c = |k| rat_int(c1_ck1_alpha_of(table, k));
    match k {
        0 => Ok(c(0)),
        1 => Ok(c(1) / rat_int(2)),
        2 => Ok((c1c(2) + c(2)) / rat_int(12)),
        3 => Ok(c1c(3) / rat_int(24)),
        _ => Err(Error::UnsupportedToddDegree(k)),
    }
}

pub fn todd_alpha_check(m: &Matroid, k: usize) -> Result<bool> {
    if k > m.d() {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds d = {}", m.d())));
    }
    let lhs = todd_alpha(&FlagTable::of_matroid(m), k)?;
    Ok(lhs == todd_alpha_expected(m.d(), k))
}

/// With `m2` a rank-preserving weak-map image of `m1` (every basis of `m2` is
/// a basis of `m1`), `c_k α^{d-k}` can only drop.
pub fn weak_map_monotonicity_check(m1: &Matroid, m2: &Matroid, k: usize) -> Result<bool> {
    if m1.n() != m2.n() || m1.rank() != m2.rank() {
        return Err(Error::NotAWeakMap(format!(
            "ground sets or ranks differ: ({}, {}) vs ({}, {})",
            m1.n(),
            m1.rank(),
            m2.n(),
            m2.rank()
        )));
    }
    if let Some(b) = m2.bases().iter().find(|b| !m1.is_basis(**b)) {
        return Err(Error::NotAWeakMap(format!("{:?} is a basis of the image only", b.to_vec())));
    }
    Ok(chern_alpha(m1, k)? >= chern_alpha(m2, k)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaRow {
    pub k: usize,
    pub ck_alpha: Integer,
    pub c1ck1_alpha: Integer,
    pub lower_bound: Integer,
    pub todd_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernReport {
    pub d: usize,
    pub c_d: Integer,
    pub c1_cd1: Integer,
    pub chow_at_one: Integer,
    pub inequality: ChernInequality,
    /// `h_k` through the moments identity, for even `k <= 4`.
    pub h_values: BTreeMap<u32, Rational>,
    pub h2_matches_chern: bool,
    pub miyaoka_yau: Option<MiyaokaYau>,
    pub alpha_rows: Vec<AlphaRow>,
}

/// Chern data of `m` with α-rows for `k <= k_max` (capped at `d`).
pub fn chern_report(m: &Matroid, k_max: usize) -> ChernReport {
    let table = FlagTable::of_matroid(m);
    chern_report_of(&table, k_max)
}

pub fn chern_report_of(table: &FlagTable, k_max: usize) -> ChernReport {
    let d = table.d();
    let h = crate::chow::chow_from_flag_table(table);
    let chow_at_one = h.eval_int(1).to_integer();
    let c_d = top_chern_of(table);
    let c1_cd1 = c1_cdminus1_of(table);
    let dist = CoeffDistribution::from_poly(&h);
    let h_values: BTreeMap<u32, Rational> = [0, 2, 4]
        .into_iter()
        .map(|k| (k, rat_int(c_d.clone()) * dist.central_moment(k)))
        .collect();
    let h2_matches_chern = h_values[&2] == h2_from_chern(d, &c_d, &c1_cd1);
    let alpha_rows = (0..=k_max.min(d))
        .map(|k| AlphaRow {
            k,
            ck_alpha: chern_alpha_of(table, k),
            c1ck1_alpha: c1_ck1_alpha_of(table, k),
            lower_bound: chern_alpha_lower_bound(d, k),
            todd_holds: todd_alpha(table, k).ok().map(|v| v == todd_alpha_expected(d, k)),
        })
        .collect();
    ChernReport {
        d,
        inequality: chern_inequality_of(table),
        c_d,
        c1_cd1,
        chow_at_one,
        h_values,
        h2_matches_chern,
        miyaoka_yau: miyaoka_yau_of(table).ok(),
        alpha_rows,
    }
}
