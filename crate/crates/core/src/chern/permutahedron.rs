//! Intersection numbers of the permutahedral variety of dimension `d`, where
//! `c_d = (d+1)!`.

use num_traits::Zero;

use crate::combinat::{binomial, eulerian_row, factorial, pow_rat, rat, rat_int};
use crate::moments::e_prime_poly;
use crate::{Integer, Rational};

fn c_d(d: usize) -> Rational {
    rat_int(factorial(d as u64 + 1))
}

fn binom_r(n: i64, k: i64) -> Rational {
    rat_int(binomial(n, k))
}

/// `c_1^k c_{d-k} = binom(2k+2, k+1) / (k+2)! · c_d`.
pub fn perm_c1k(d: usize, k: usize) -> Rational {
    let k = k as i64;
    binom_r(2 * k + 2, k + 1) / rat_int(factorial(k as u64 + 2)) * c_d(d)
}

/// `p_k c_{d-k}` for the `k`-th power sum `p_k` of the Chern roots.
pub fn perm_pk(d: usize, k: usize) -> Rational {
    let (d, k) = (d as i64, k as i64);
    let first = rat_int(d - k + 1) * binom_r(2 * k, k) / rat_int(factorial(k as u64 + 1));
    let second = rat_int(d - k) * binom_r(2 * k + 2, k + 1) / rat_int(factorial(k as u64 + 2));
    let sign = if k % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
    sign * (first - second) * c_d(d as usize)
}

/// `G_{a,b} = Σ_j binom(a-j+b, b) binom(a-j, j) (1/12)^j`.
fn g_ab(a: i64, b: i64) -> Rational {
    (0..=a / 2)
        .map(|j| binom_r(a - j + b, b) * binom_r(a - j, j) * pow_rat(&rat(1, 12), j as u32))
        .sum()
}

/// `c_k c_{d-k} = Σ_{2a+b=d} (-1)^a binom(b, k-a) G_{a,b} · c_d`.
pub fn perm_ck_primary(d: usize, k: usize) -> Rational {
    let (d, k) = (d as i64, k as i64);
    let sum: Rational = (0..=d / 2)
        .map(|a| {
            let b = d - 2 * a;
            let sign = if a % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            sign * binom_r(b, k - a) * g_ab(a, b)
        })
        .sum();
    sum * c_d(d as usize)
}

/// `c_k c_{d-k} = Σ_{2j <= min(k, d-k)} (1/12)^j binom(k-j, j) binom(d-k-j, j) · c_d`.
pub fn perm_ck_alternative(d: usize, k: usize) -> Rational {
    let (d, k) = (d as i64, k as i64);
    let sum: Rational = (0..=k.min(d - k) / 2)
        .map(|j| pow_rat(&rat(1, 12), j as u32) * binom_r(k - j, j) * binom_r(d - k - j, j))
        .sum();
    sum * c_d(d as usize)
}

/// Both formulas for `c_k c_{d-k}`, which must agree.
pub fn perm_ck(d: usize, k: usize) -> (Rational, Rational) {
    (perm_ck_primary(d, k), perm_ck_alternative(d, k))
}

/// `h_4` from its Chern-number expansion:
/// `d(5d-2)/240 c_d + (5d-2)/60 c_1c_{d-1} + (c_1² + 3c_2)c_{d-2}/30 - p_3 c_{d-3}/30`.
pub fn h4_permutahedron(d: usize) -> Rational {
    let di = d as i64;
    rat(di * (5 * di - 2), 240) * c_d(d)
        + rat(5 * di - 2, 60) * perm_c1k(d, 1)
        + (perm_c1k(d, 2) + rat_int(3) * perm_ck_primary(d, 2)) / rat_int(30)
        - perm_pk(d, 3) / rat_int(30)
}

/// Whether the expansion equals `E'_4(d) (d+1)!`.
pub fn h4_permutahedron_check(d: usize) -> bool {
    h4_permutahedron(d) == e_prime_poly(4).eval_int(d as i64) * c_d(d)
}

/// `c_{k,s} = Σ_m A(s, m) binom(s - m, k)`.
pub fn c_ks_coefficient(k: usize, s: usize) -> Integer {
    if s == 0 {
        return if k == 0 { Integer::from(1) } else { Integer::zero() };
    }
    eulerian_row(s)
        .iter()
        .enumerate()
        .map(|(m, a)| a * binomial((s - m) as i64, k as i64))
        .sum()
}

/// The coefficient of `c_d` in `h_k`, obtained from the factorial-moment
/// coefficients `c_{j,d-1} / (d-1)!` by the change of basis
/// `E[(P - d/2)^k] = Σ_i binom(k,i) (-d/2)^{k-i} Σ_j j! S(i,j) E[binom(P,j)]`.
/// Requires `1 <= k <= d - 1`.
pub fn c_d_coefficient_in_h(k: usize, d: usize) -> Rational {
    assert!(k >= 1 && k < d);
    let s = d - 1;
    let fact_s = rat_int(factorial(s as u64));
    let falling: Vec<Rational> = (0..=k)
        .map(|j| rat_int(c_ks_coefficient(j, s)) / &fact_s)
        .collect();
    // Stirling numbers of the second kind
    let mut stirling = vec![vec![Integer::zero(); k + 1]; k + 1];
    stirling[0][0] = Integer::from(1);
    for i in 1..=k {
        for j in 1..=i {
            stirling[i][j] = &stirling[i - 1][j - 1] + &stirling[i - 1][j] * j;
        }
    }
    let center = rat(-(d as i64), 2);
    (0..=k)
        .map(|i| {
            let raw: Rational = (0..=i)
                .map(|j| rat_int(factorial(j as u64) * &stirling[i][j]) * &falling[j])
                .sum();
            binom_r(k as i64, i as i64) * pow_rat(&center, (k - i) as u32) * raw
        })
        .sum()
}
