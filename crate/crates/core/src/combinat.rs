//! Exact integer and rational combinatorics.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::{Integer, Rational};

pub fn int(n: impl Into<BigInt>) -> Integer {
    n.into()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `n!!`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Integer {
    let mut acc = Integer::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// `binom(n, k)` for signed `n`, zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n >= 0 && k > n {
        return Integer::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut num = Integer::one();
    let mut den = Integer::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

pub fn binomial_u(n: usize, k: usize) -> Integer {
    binomial(n as i64, k as i64)
}

/// Eulerian numbers `A(n, m)` for `0 <= m < n`, rows `0..=n_max`.
///
/// Row 0 is `[1]` by convention so that `A(0, ·)` sums to `0! = 1`.
pub fn eulerian_table(n_max: usize) -> Vec<Vec<Integer>> {
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    if n_max >= 1 {
        rows.push(vec![Integer::one()]);
    }
    for n in 2..=n_max {
        let prev = &rows[n - 1];
        let at = |m: usize| prev.get(m).cloned().unwrap_or_default();
        let row = (0..n)
            .map(|m| {
                let left = if m == 0 { Integer::zero() } else { at(m - 1) * (n - m) };
                left + at(m) * (m + 1)
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn eulerian_row(n: usize) -> Vec<Integer> {
    eulerian_table(n).pop().unwrap()
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rational) -> Integer {
    r.ceil().to_integer()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn pow_rat(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// `gcd` of a list of integers (zero for an empty list).
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a Integer>) -> Integer {
    xs.into_iter().fold(Integer::zero(), |g, x| g.gcd(x))
}
