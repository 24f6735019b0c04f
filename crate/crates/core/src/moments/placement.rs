use crate::combinat::binomial;
use crate::moments::CoeffDistribution;
use crate::Rational;

/// Ways to place labelled contiguous blocks of sizes `blocks` on two
/// separate lines of `a` and `b` balls so that no two blocks overlap or touch.
pub fn block_placement_count(a: usize, b: usize, blocks: &[usize]) -> u64 {
    // one array with a wall cell at index `a` that no block may cover
    let mut used = vec![false; a + b + 1];
    place(&mut used, a, blocks)
}

fn place(used: &mut [bool], wall: usize, blocks: &[usize]) -> u64 {
    let Some((&t, rest)) = blocks.split_first() else {
        return 1;
    };
    let len = used.len();
    let mut total = 0;
    for start in 0..(len + 1).saturating_sub(t) {
        let end = start + t;
        if (start..end).contains(&wall) {
            continue;
        }
        if used[start.saturating_sub(1)..(end + 1).min(len)].iter().any(|&u| u) {
            continue;
        }
        used[start..end].fill(true);
        total += place(used, wall, rest);
        used[start..end].fill(false);
    }
    total
}

/// `E[X_d^k]` against `E[(1 + X_a + X_b)^k]` for independent Eulerian
/// variables and `d = a + b + 2`. Returns both sides.
pub fn eulerian_convolution_identity(a: usize, b: usize, k: u32) -> (Rational, Rational) {
    let xd = CoeffDistribution::eulerian(a + b + 2);
    let xa = CoeffDistribution::eulerian(a);
    let xb = CoeffDistribution::eulerian(b);
    let lhs = xd.raw_moment(k);
    // multinomial expansion of (1 + X_a + X_b)^k with independent factors
    let mut rhs = Rational::default();
    for i in 0..=k {
        for j in 0..=k - i {
            let coeff = binomial(k as i64, i as i64) * binomial((k - i) as i64, j as i64);
            rhs += Rational::from_integer(coeff) * xa.raw_moment(i) * xb.raw_moment(j);
        }
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placements() {
        assert_eq!(block_placement_count(3, 0, &[2]), 2);
        assert_eq!(block_placement_count(5, 4, &[]), 1);
        assert_eq!(block_placement_count(2, 2, &[1, 1]), 8);
        assert_eq!(block_placement_count(1, 3, &[1, 1]), 8);
        assert_eq!(block_placement_count(0, 0, &[1]), 0);
        assert_eq!(block_placement_count(4, 0, &[1, 1]), 6);
    }

    #[test]
    fn convolution() {
        let (l, r) = eulerian_convolution_identity(2, 3, 3);
        assert_eq!(l, r);
    }
}
