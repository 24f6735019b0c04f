//! Certificates that the flag inequality is a nonnegative combination of the
//! monotonicity inequalities `N_J / U_J <= N_{J'} / U_{J'}`, `J ⊂ J'`.
//!
//! Vectors are indexed by the mask of `J ⊆ [d]`. Only covering pairs
//! `J' = J ∪ {j}` are used; longer chains are sums of covering steps.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::flags::{boolean_flag_count, FlagTable, RankIndexSet};
use crate::simplex::{phase1, EqualitySystem, Phase1};
use crate::{Error, Integer, Rational, Result};

pub const DEFAULT_MAX_D: usize = 14;

/// A covering pair `(J, J ∪ {j})` as masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoveringPair {
    pub lower: u64,
    pub upper: u64,
}

/// All covering pairs of subsets of `[d]`, ordered by `(lower, upper)`.
pub fn covering_pairs(d: usize) -> Vec<CoveringPair> {
    let mut out = Vec::with_capacity(d << d.saturating_sub(1));
    for lower in 0..1u64 << d {
        for j in 0..d {
            if lower >> j & 1 == 0 {
                out.push(CoveringPair { lower, upper: lower | 1 << j });
            }
        }
    }
    out
}

/// `U_J` for every mask.
pub fn boolean_counts(d: usize) -> Vec<Integer> {
    RankIndexSet::all(d).map(|j| boolean_flag_count(d, &j)).collect()
}

/// The generator of a covering pair: `+1/U_{J'}` at `J'`, `-1/U_J` at `J`.
pub fn generator(u: &[Integer], pair: CoveringPair) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); u.len()];
    v[pair.upper as usize] = Rational::new(1.into(), u[pair.upper as usize].clone());
    v[pair.lower as usize] = -Rational::new(1.into(), u[pair.lower as usize].clone());
    v
}

pub fn monotonicity_generators(d: usize) -> Vec<(CoveringPair, Vec<Rational>)> {
    let u = boolean_counts(d);
    covering_pairs(d).into_iter().map(|p| (p, generator(&u, p))).collect()
}

/// Entry at `J` is `-Π(n_i - 1) Σ n_i(n_i - 3)/2`, so `target · N >= 0` is the
/// flag inequality.
pub fn target_vector(d: usize) -> Vec<Rational> {
    RankIndexSet::all(d)
        .map(|j| {
            let b = j.block_sizes();
            Rational::from_integer(-(b.weight() * b.shape()))
        })
        .collect()
}

pub fn dot(v: &[Rational], table: &FlagTable) -> Rational {
    v.iter()
        .zip(table.counts())
        .map(|(a, n)| a * Rational::from_integer(n.clone()))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCertificate {
    pub d: usize,
    /// Nonzero multipliers only.
    pub multipliers: BTreeMap<CoveringPair, Rational>,
    /// `target - Σ λ v`, all zero for a valid certificate.
    pub residual: Vec<Rational>,
}

impl ConeCertificate {
    pub fn is_zero(&self) -> bool {
        self.multipliers.values().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeOutcome {
    Certified(ConeCertificate),
    /// Dual vector `y` with `y · v <= 0` for every generator and
    /// `y · target > 0`.
    Infeasible { d: usize, farkas: Vec<Rational> },
}

/// `target - Σ λ_p v_p`.
pub fn residual(d: usize, multipliers: &BTreeMap<CoveringPair, Rational>) -> Vec<Rational> {
    let u = boolean_counts(d);
    let mut r = target_vector(d);
    for (pair, lambda) in multipliers {
        r[pair.upper as usize] -= lambda / Rational::from_integer(u[pair.upper as usize].clone());
        r[pair.lower as usize] += lambda / Rational::from_integer(u[pair.lower as usize].clone());
    }
    r
}

/// Recomputes the combination from scratch; independent of the solver.
pub fn verify_certificate(cert: &ConeCertificate) -> bool {
    let pairs_ok = cert.multipliers.iter().all(|(p, l)| {
        !l.is_negative()
            && p.upper >> cert.d == 0
            && p.lower & p.upper == p.lower
            && (p.upper ^ p.lower).count_ones() == 1
    });
    pairs_ok && residual(cert.d, &cert.multipliers).iter().all(Zero::is_zero)
}

pub fn certify(d: usize) -> Result<ConeOutcome> {
    certify_capped(d, DEFAULT_MAX_D)
}

/// Row `J` of the system is scaled by `U_J`, which turns every generator
/// into a column with `+1` at `J'` and `-1` at `J`.
pub fn certify_capped(d: usize, cap: usize) -> Result<ConeOutcome> {
    if d == 0 {
        return Err(Error::InvalidParameters("cone certificates need d >= 1".into()));
    }
    if d > cap {
        return Err(Error::DimensionTooLarge { d, cap });
    }
    let u = boolean_counts(d);
    let target = target_vector(d);
    let pairs = covering_pairs(d);
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); 1 << d];
    for (c, p) in pairs.iter().enumerate() {
        rows[p.upper as usize].push((c, Rational::from_integer(1.into())));
        rows[p.lower as usize].push((c, Rational::from_integer((-1).into())));
    }
    let rhs = target
        .iter()
        .zip(&u)
        .map(|(t, uj)| t * Rational::from_integer(uj.clone()))
        .collect();
    let system = EqualitySystem::new(pairs.len(), rows, rhs);
    Ok(match phase1(&system) {
        Phase1::Feasible { x, .. } => {
            let multipliers: BTreeMap<_, _> = pairs
                .into_iter()
                .zip(x)
                .filter(|(_, l)| !l.is_zero())
                .collect();
            let residual = residual(d, &multipliers);
            ConeOutcome::Certified(ConeCertificate { d, multipliers, residual })
        }
        Phase1::Infeasible { farkas, .. } => {
            // undo the row scaling: y_J U_J pairs with the unscaled rows
            let farkas = farkas
                .into_iter()
                .zip(&u)
                .map(|(y, uj)| y * Rational::from_integer(uj.clone()))
                .collect();
            ConeOutcome::Infeasible { d, farkas }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{rat, rat_int};
    use crate::Matroid;

    fn certificate(d: usize) -> ConeCertificate {
        match certify(d).unwrap() {
            ConeOutcome::Certified(c) => c,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn generators_small() {
        let g = monotonicity_generators(1);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].1, vec![rat(-1, 1), rat(1, 2)]);
        assert_eq!(monotonicity_generators(2).len(), 4);
        assert_eq!(covering_pairs(3).len(), 12);
    }

    #[test]
    fn targets() {
        assert_eq!(target_vector(1), vec![rat(0, 1); 2]);
        assert_eq!(target_vector(2), vec![rat_int(-6), rat_int(0), rat_int(2), rat_int(0)]);
        for d in 1..=8 {
            let t = target_vector(d);
            let s: Rational = t.iter().zip(boolean_counts(d)).map(|(a, u)| a * Rational::from_integer(u)).sum();
            assert!(s.is_zero(), "d = {d}");
        }
    }

    #[test]
    fn certify_small() {
        let c = certificate(1);
        assert!(c.is_zero() && verify_certificate(&c));

        let c = certificate(2);
        assert!(verify_certificate(&c));
        let expected: BTreeMap<_, _> = [(CoveringPair { lower: 0, upper: 0b10 }, rat_int(6))].into();
        assert_eq!(c.multipliers, expected);

        let mut bad = c.clone();
        *bad.multipliers.values_mut().next().unwrap() += rat(1, 7);
        assert!(!verify_certificate(&bad));

        let zero = ConeCertificate { d: 2, multipliers: BTreeMap::new(), residual: vec![] };
        assert!(!verify_certificate(&zero));
    }

    #[test]
    fn certify_up_to_six() {
        for d in 1..=6 {
            assert!(verify_certificate(&certificate(d)), "d = {d}");
        }
    }

    #[test]
    fn cap() {
        assert_eq!(certify(15), Err(Error::DimensionTooLarge { d: 15, cap: 14 }));
        assert!(certify(0).is_err());
    }

    #[test]
    fn generators_hold_on_data() {
        for m in [Matroid::uniform(3, 5).unwrap(), Matroid::projective_geometry(2, 2).unwrap()] {
            let table = FlagTable::of_matroid(&m);
            for (_, g) in monotonicity_generators(m.d()) {
                assert!(!dot(&g, &table).is_negative());
            }
            assert!(!dot(&target_vector(m.d()), &table).is_negative());
        }
    }
}
