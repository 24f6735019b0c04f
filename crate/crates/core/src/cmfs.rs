//! Inductive construction of central moment function sequences: polynomial
//! upper bounds `f_k(d)` on the central moments of every rank-`d+1` matroid,
//! generated by a power series `h(z)` through `h(z)^{x+2} = Σ f_i(x) z^i / i!`.

use num_traits::{Signed, Zero};

use crate::combinat::{binomial, ceil, factorial, rat_int};
use crate::moments::{e_prime_poly, eulerian_central_moment};
use crate::poly::UniPoly;
use crate::series::PowerSeries;
use crate::{Error, Rational, Result};

pub const MAX_ORDER: u32 = 12;

/// The constant chosen when extending from order `k` to `k + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmfsStep {
    pub from_order: u32,
    pub c: Rational,
    /// Every `d <= cutoff` was checked directly; beyond it the bound follows
    /// from the sign of `f - E'`.
    pub cutoff: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmfsState {
    pub k: u32,
    /// `h_0, .., h_k`.
    pub h_coeffs: Vec<Rational>,
    /// `f_0, .., f_k` as polynomials in `d`.
    pub f_polys: Vec<UniPoly>,
    pub steps: Vec<CmfsStep>,
}

impl CmfsState {
    pub fn initial() -> Self {
        CmfsState {
            k: 0,
            h_coeffs: vec![Rational::from_integer(1.into())],
            f_polys: vec![UniPoly::one()],
            steps: Vec::new(),
        }
    }

    /// `h` truncated modulo `z^order`.
    pub fn h_series(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.h_coeffs.clone(), order)
    }

    /// Whether `i! [z^i] h^{x+2} = f_i(x)` for all `i <= k`, `0 <= x <= grid`.
    pub fn expansion_consistent(&self, grid: u64) -> bool {
        let h = self.h_series(self.k as usize + 1);
        (0..=grid).all(|x| {
            let p = h.pow(x + 2);
            self.f_polys.iter().enumerate().all(|(i, f)| {
                p.coeff(i) * rat_int(factorial(i as u64)) == f.eval_int(x as i64)
            })
        })
    }
}

/// `g(x) = (k+2)! [z^{k+2}] h(z)^{x+2}`, interpolated from `k + 3` values.
pub fn extract_g(state: &CmfsState) -> UniPoly {
    let target = state.k as usize + 2;
    let h = state.h_series(target + 1);
    let scale = rat_int(factorial(target as u64));
    let ys: Vec<Rational> = (0..=target as u64)
        .map(|x| h.pow(x + 2).coeff(target) * &scale)
        .collect();
    UniPoly::interpolate_at_naturals(&ys)
}

/// The least `C` with `E[(X_d - d/2)^{k+2}] <= g(d) + C(d+2)` for all `d >= 0`.
///
/// `C` is maximized over `d <= D`. For `d >= k + 1` the Eulerian moment
/// equals `E'_{k+2}(d)`, so once `D` exceeds every real root of
/// `g + C(x+2) - E'_{k+2}` and that difference has positive leading
/// coefficient, no larger `d` can bind. `D` grows until this holds.
pub fn smallest_c(state: &CmfsState, g: &UniPoly) -> Result<(Rational, usize)> {
    let order = state.k + 2;
    let e_prime = e_prime_poly(order as usize);
    let x_plus_2 = UniPoly::from_integers([2, 1]);
    let ratio = |d: usize| (eulerian_central_moment(d, order) - g.eval_int(d as i64)) / rat_int(d + 2);
    let mut cutoff = order as usize;
    let mut c = (0..=cutoff).map(ratio).max().unwrap();
    loop {
        let diff = &(g + &x_plus_2.scale(&c)) - &e_prime;
        if diff.is_zero() {
            return Ok((c, cutoff));
        }
        if diff.leading().is_negative() {
            return Err(Error::NoFiniteC { k: order });
        }
        let bound = ceil(&diff.cauchy_root_bound().unwrap());
        let bound = usize::try_from(bound).map_err(|_| Error::NoFiniteC { k: order })?;
        if bound <= cutoff {
            return Ok((c, cutoff));
        }
        c = c.max((cutoff + 1..=bound).map(ratio).max().unwrap());
        cutoff = bound;
    }
}

/// Runs the construction up to the even `order`.
pub fn build_cmfs(order: u32) -> Result<CmfsState> {
    if order % 2 == 1 || order > MAX_ORDER {
        return Err(Error::InvalidCmfsOrder(order));
    }
    let mut state = CmfsState::initial();
    while state.k < order {
        let g = extract_g(&state);
        let (c, cutoff) = smallest_c(&state, &g)?;
        let next = state.k as usize + 2;
        let f = &g + &UniPoly::from_integers([2, 1]).scale(&c);
        state.f_polys.push(UniPoly::zero());
        state.f_polys.push(f);
        state.h_coeffs.push(Rational::zero());
        state.h_coeffs.push(&c / rat_int(factorial(next as u64)));
        state.steps.push(CmfsStep { from_order: state.k, c, cutoff });
        state.k += 2;
    }
    Ok(state)
}

/// Whether `f_k(a+b+2) >= Σ_i binom(k,i) f_i(a) f_{k-i}(b)` for every `k` and
/// `0 <= a, b <= grid`.
pub fn is_cmfs(f_polys: &[UniPoly], grid: i64) -> bool {
    convolution_gaps(f_polys, grid).all(|gap| !gap.is_negative())
}

/// As [`is_cmfs`] with equality everywhere.
pub fn is_nice_cmfs(f_polys: &[UniPoly], grid: i64) -> bool {
    convolution_gaps(f_polys, grid).all(|gap| gap.is_zero())
}

fn convolution_gaps(f: &[UniPoly], grid: i64) -> impl Iterator<Item = Rational> + '_ {
    (0..f.len()).flat_map(move |k| {
        (0..=grid).flat_map(move |a| {
            (0..=grid).map(move |b| {
                let rhs: Rational = (0..=k)
                    .map(|i| {
                        rat_int(binomial(k as i64, i as i64)) * f[i].eval_int(a) * f[k - i].eval_int(b)
                    })
                    .sum();
                f[k].eval_int(a + b + 2) - rhs
            })
        })
    })
}

/// `E[(X_d - d/2)^4] - E'_4(d)`: the least value a fourth-moment correction
/// term may take at `d`.
pub fn fourth_moment_correction_floor(d: usize) -> Rational {
    eulerian_central_moment(d, 4) - e_prime_poly(4).eval_int(d as i64)
}
