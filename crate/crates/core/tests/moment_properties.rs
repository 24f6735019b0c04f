//! Eulerian moments, the E' polynomials and the CMFS polynomials.

use chowlab::chow::{chow, eulerian_polynomial};
use chowlab::cmfs::{build_cmfs, fourth_moment_correction_floor};
use chowlab::combinat::{rat, rat_int};
use chowlab::moments::{
    binomial_bound, e_prime_poly, eulerian_central_moment, naive_lower_bound, normal_bound,
    CoeffDistribution,
};
use chowlab::{Matroid, Rational, UniPoly};
use proptest::prelude::*;

/// `E[(X_d - d/2)^k]` straight from the Eulerian numbers, by the
/// recurrence `A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1)`.
fn brute_eulerian_moment(d: usize, k: u32) -> Rational {
    let mut row = vec![1u128];
    for n in 2..=d + 1 {
        let mut next = vec![0u128; n];
        for (j, slot) in next.iter_mut().enumerate() {
            let keep = if j < row.len() { (j as u128 + 1) * row[j] } else { 0 };
            let shift = if j >= 1 { (n - j) as u128 * row[j - 1] } else { 0 };
            *slot = keep + shift;
        }
        row = next;
    }
    let total: u128 = row.iter().sum();
    let center = rat(d as i64, 2);
    row.iter()
        .enumerate()
        .map(|(j, &a)| {
            let dev = rat(j as i64, 1) - &center;
            Rational::new((a as i64).into(), (total as i64).into()) * num_traits::pow(dev, k as usize)
        })
        .sum()
}

#[test]
fn eulerian_moments_against_brute_force() {
    for d in 0..=14 {
        for k in 0..=8 {
            assert_eq!(eulerian_central_moment(d, k), brute_eulerian_moment(d, k), "d = {d}, k = {k}");
        }
    }
}

#[test]
fn e_prime_agrees_beyond_threshold() {
    for k in (2..=10).step_by(2) {
        let p = e_prime_poly(k);
        assert_eq!(p.degree(), Some(k / 2));
        for d in (k - 1)..=(k + 8) {
            assert_eq!(p.eval_int(d as i64), eulerian_central_moment(d, k as u32), "k = {k}, d = {d}");
        }
    }
}

#[test]
fn cmfs_polynomials() {
    let state = build_cmfs(6).unwrap();
    let x = UniPoly::x();
    let dp2 = &x + &UniPoly::from_integers([2]);
    assert_eq!(state.f_polys[2], dp2.scale(&rat(1, 12)));
    assert_eq!(state.f_polys[4], &e_prime_poly(4) + &dp2.scale(&rat(1, 120)));
    assert_eq!(state.f_polys[6], (&dp2 * &UniPoly::from_integers([6, 20, 5])).scale(&rat(1, 576)));
    assert!(state.expansion_consistent(12));
    for d in 0..=30usize {
        for k in [2u32, 4, 6] {
            let f = state.f_polys[k as usize].eval_int(d as i64);
            assert!(eulerian_central_moment(d, k) <= f, "d = {d}, k = {k}");
        }
    }
}

#[test]
fn correction_floor() {
    // the correction (d+2)/120 clears every floor, tightly only at d = 2
    for d in 0..=20 {
        let floor = fourth_moment_correction_floor(d);
        let correction = rat(d as i64 + 2, 120);
        assert!(floor <= correction, "d = {d}");
        assert_eq!(floor == correction, d == 2, "d = {d}");
    }
    let floors: Vec<_> = (0..4).map(fourth_moment_correction_floor).collect();
    assert_eq!(floors, vec![rat(-1, 15), rat(-1, 10), rat(1, 30), rat(0, 1)]);
    // the published constraints, with -1/16 in place of the exact -1/15
    let published = [rat(-1, 16), rat(-1, 10), rat(1, 30), rat(0, 1)];
    for (d, c) in published.iter().enumerate() {
        assert!(rat(d as i64 + 2, 120) >= *c);
    }
}

#[test]
fn binomial_beats_normal_eventually() {
    for d in 2..=6 {
        let k = 40;
        assert!(binomial_bound(d, k) < normal_bound(d, k), "d = {d}");
    }
    assert_eq!(normal_bound(2, 8), rat(35, 27));
    assert_eq!(binomial_bound(4, 4), rat(5, 2));
}

proptest! {
    #[test]
    fn uniform_chow_is_palindromic_and_bounded(r in 1usize..=5, extra in 0usize..=3, k in 1u32..=4) {
        let m = Matroid::uniform(r, r + extra).unwrap();
        let p = chow(&m).unwrap();
        prop_assert!(p.is_palindromic(m.d()));
        let dist = CoeffDistribution::from_poly(&p);
        let k = 2 * k;
        let mu = dist.central_moment(k);
        prop_assert!(mu <= normal_bound(m.d(), k));
        prop_assert!(mu <= binomial_bound(m.d(), k));
        prop_assert!(naive_lower_bound(m.d(), k).unwrap() <= mu);
        if extra == 0 {
            prop_assert_eq!(p, eulerian_polynomial(r));
        }
    }

    #[test]
    fn eulerian_mean_and_variance(d in 1usize..=10) {
        let dist = CoeffDistribution::eulerian(d);
        prop_assert_eq!(dist.central_moment(1), rat(0, 1));
        prop_assert_eq!(dist.mean(), rat(d as i64, 2));
        prop_assert_eq!(dist.central_moment(2), rat_int(d as i64 + 2) / rat_int(12));
    }
}
