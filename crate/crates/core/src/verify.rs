//! Every exact check that applies to a single matroid, in one report.

use std::sync::OnceLock;

use num_traits::Signed;

use crate::chern::{chern_report_of, ChernReport};
use crate::chow::{chow_from_flag_table, chow_via_recursion, gamma_vector, GammaVector};
use crate::cmfs::{build_cmfs, CmfsState};
use crate::flags::FlagTable;
use crate::matroid::Matroid;
use crate::moments::{
    flag_inequality_of_table, gamma_inequality_of, power_sums_of, verify_distribution, CoeffDistribution,
    EqualityDiagnosis, InequalityValue, MomentReport, PowerSums,
};
use crate::poly::UniPoly;
use crate::Rational;

/// Largest even moment order checked against the bound envelope.
pub const MOMENT_ORDER: u32 = 8;

/// Largest even order checked against the CMFS polynomials.
pub const CMFS_ORDER: u32 = 6;

fn cmfs() -> &'static CmfsState {
    static STATE: OnceLock<CmfsState> = OnceLock::new();
    STATE.get_or_init(|| build_cmfs(CMFS_ORDER).expect("order 6 is constructible"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmfsCheck {
    pub k: u32,
    pub moment: Rational,
    pub bound: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub n: usize,
    pub d: usize,
    pub chow: UniPoly,
    /// The flag formula and the recursion agree.
    pub chow_consistent: bool,
    pub simplification_is_boolean: bool,
    pub diagnosis: EqualityDiagnosis,
    pub moments: MomentReport,
    pub cmfs: Vec<CmfsCheck>,
    pub gamma: GammaVector,
    pub gamma_inequality: InequalityValue,
    pub flag_inequality: InequalityValue,
    pub power_sums: PowerSums,
    pub chern: ChernReport,
}

impl VerifyReport {
    /// Names of failed checks; empty when everything holds.
    pub fn failures(&self) -> Vec<&'static str> {
        let expect_eq = self.diagnosis.is_equality();
        let chern = &self.chern;
        let alpha_ok = chern.alpha_rows.iter().all(|r| {
            !r.ck_alpha.is_negative() && r.ck_alpha >= r.lower_bound && r.todd_holds != Some(false)
        });
        let my_ok = chern.miyaoka_yau.as_ref().is_none_or(|my| my.holds && my.value == my.closed_form);
        [
            ("chow_consistent", self.chow_consistent),
            ("moment_bounds", self.moments.all_hold()),
            ("cmfs_bounds", self.cmfs.iter().all(|c| c.holds)),
            ("gamma_nonnegative", self.gamma.is_nonnegative()),
            ("gamma_inequality", self.gamma_inequality.holds && self.gamma_inequality.equality == expect_eq),
            ("flag_inequality", self.flag_inequality.holds && self.flag_inequality.equality == expect_eq),
            ("power_sums", self.power_sums.bounds_hold),
            ("chern_inequality", chern.inequality.holds && chern.inequality.equality == expect_eq),
            ("chern_at_one", chern.c_d == chern.chow_at_one),
            ("h2_bridge", chern.h2_matches_chern),
            ("chern_alpha", alpha_ok),
            ("miyaoka_yau", my_ok),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

pub fn verify_all(name: &str, m: &Matroid) -> VerifyReport {
    let d = m.d();
    let table = FlagTable::of_matroid(m);
    let chow = chow_from_flag_table(&table);
    let chow_consistent = chow == chow_via_recursion(m);
    let sb = m.simplification_is_boolean();
    let dist = CoeffDistribution::from_poly(&chow);
    let moments = verify_distribution(&dist, sb, MOMENT_ORDER);
    let state = cmfs();
    let cmfs = (2..=CMFS_ORDER)
        .step_by(2)
        .map(|k| {
            let moment = moments.central_moments[&k].clone();
            let bound = state.f_polys[k as usize].eval(&Rational::from_integer((d as i64).into()));
            CmfsCheck { k, holds: moment <= bound, moment, bound }
        })
        .collect();
    let gamma = gamma_vector(&chow, d).expect("Chow polynomials are palindromic");
    VerifyReport {
        name: name.to_owned(),
        n: m.n(),
        d,
        chow_consistent,
        simplification_is_boolean: sb,
        diagnosis: EqualityDiagnosis::predict(d, sb),
        cmfs,
        gamma_inequality: gamma_inequality_of(&gamma),
        gamma,
        flag_inequality: flag_inequality_of_table(&table),
        power_sums: power_sums_of(&dist),
        chern: chern_report_of(&table, d),
        moments,
        chow,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matroids_pass() {
        for (name, m) in [
            ("boolean:4", Matroid::boolean(4).unwrap()),
            ("pg:2,2", Matroid::projective_geometry(2, 2).unwrap()),
            ("uniform:2,5", Matroid::uniform(2, 5).unwrap()),
            ("uniform:1,3", Matroid::uniform(1, 3).unwrap()),
        ] {
            let r = verify_all(name, &m);
            assert!(r.passed(), "{name}: {:?}", r.failures());
        }
        let r = verify_all("boolean:4", &Matroid::boolean(4).unwrap());
        assert_eq!(r.diagnosis, EqualityDiagnosis::BooleanSimplification);
        assert!(r.flag_inequality.equality && r.chern.inequality.equality);
    }
}
