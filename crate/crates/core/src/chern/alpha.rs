//! Coefficients expressing `c_k α^{d-k}` and `c_1 c_{k-1} α^{d-k}` in flag
//! counts: `c_k α^{d-k} = Σ_J f_{k,J}(d) N_J` and likewise with `g`.

use num_traits::Zero;

use crate::combinat::binomial;
use crate::flags::RankIndexSet;
use crate::Integer;

/// `(A, B, D)` with `A = Π_{i<=m} (n_i - 1)`, `B = Σ_{i<=m} n_i (n_i - 3)/2`
/// over the blocks below `j_m`, and `D = d - j_m + 1`.
fn closed_form_parts(j: &RankIndexSet) -> (Integer, Integer, i64) {
    let blocks = j.block_sizes();
    let inner = &blocks.as_slice()[..blocks.as_slice().len() - 1];
    let a: Integer = inner.iter().map(|&n| Integer::from(n as i64 - 1)).product();
    let b: Integer = inner
        .iter()
        .map(|&n| Integer::from(n as i64 * (n as i64 - 3) / 2))
        .sum();
    (a, b, j.d() as i64 - j.top() as i64 + 1)
}

/// `f_{k,J}(d) = A binom(d - j_m + 1, k - j_m)`.
pub fn coeff_f(k: usize, j: &RankIndexSet) -> Integer {
    let (a, _, dd) = closed_form_parts(j);
    a * binomial(dd, k as i64 - j.top() as i64)
}

/// `g_{k,J}(d) = A (B binom(D, k - j_m) + D binom(D, k - j_m - 1))`.
pub fn coeff_g(k: usize, j: &RankIndexSet) -> Integer {
    let (a, b, dd) = closed_form_parts(j);
    let r = k as i64 - j.top() as i64;
    a * (b * binomial(dd, r) + Integer::from(dd) * binomial(dd, r - 1))
}

/// `f_{d,J}(d) = Π_{i<=m+1} (n_i - 1)`.
pub fn top_f(j: &RankIndexSet) -> Integer {
    j.block_sizes().weight()
}

/// `g_{d,J}(d) = f_{d,J}(d) (Σ_{i<=m+1} n_i (n_i - 3)/2 + 1)`.
pub fn top_g(j: &RankIndexSet) -> Integer {
    let blocks = j.block_sizes();
    blocks.weight() * (blocks.shape() + 1)
}

/// `J` as a subset of `[d - 1]`, if it fits.
fn lower(j: &RankIndexSet) -> Option<RankIndexSet> {
    (j.d() >= 1 && j.top() < j.d()).then(|| RankIndexSet::from_mask(j.d() - 1, j.mask()))
}

/// `f_{k,J}(d)` from the top-degree values and
/// `f_{k,J}(d+1) = f_{k,J}(d) + f_{k-1,J}(d)`.
pub fn f_by_recurrence(k: i64, j: &RankIndexSet) -> Integer {
    let d = j.d() as i64;
    if k < j.top() as i64 || k > d {
        return Integer::zero();
    }
    if k == d {
        return top_f(j);
    }
    let below = lower(j).expect("k < d forces j_m < d");
    f_by_recurrence(k, &below) + f_by_recurrence(k - 1, &below)
}

/// `g_{k,J}(d)` from the top-degree values and
/// `g_{k,J}(d+1) = g_{k,J}(d) + g_{k-1,J}(d) + f_{k-1,J}(d) + f_{k-2,J}(d)`.
pub fn g_by_recurrence(k: i64, j: &RankIndexSet) -> Integer {
    let d = j.d() as i64;
    if k < j.top() as i64 || k > d {
        return Integer::zero();
    }
    if k == d {
        return top_g(j);
    }
    let below = lower(j).expect("k < d forces j_m < d");
    g_by_recurrence(k, &below)
        + g_by_recurrence(k - 1, &below)
        + f_by_recurrence(k - 1, &below)
        + f_by_recurrence(k - 2, &below)
}

/// Closed-form `f` and `g` for every `k <= d` and `J ⊆ [d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernAlphaTable {
    pub d: usize,
    /// `f[k][mask]`.
    pub f: Vec<Vec<Integer>>,
    /// `g[k][mask]`.
    pub g: Vec<Vec<Integer>>,
}

impl ChernAlphaTable {
    pub fn new(d: usize) -> Self {
        let build = |coeff: fn(usize, &RankIndexSet) -> Integer| {
            (0..=d)
                .map(|k| RankIndexSet::all(d).map(|j| coeff(k, &j)).collect())
                .collect()
        };
        ChernAlphaTable { d, f: build(coeff_f), g: build(coeff_g) }
    }
}
