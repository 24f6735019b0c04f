use crate::combinat::{double_factorial, eulerian_table, factorial};
use crate::Integer;

/// One `(d, t)` pair of the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SweepPoint {
    pub d: usize,
    pub t: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub violations: Vec<SweepPoint>,
    pub equalities: Vec<SweepPoint>,
    pub checked: usize,
}

/// Compares `E[(X_d - d/2)^{2t}]` with `((d+2)/12)^t (2t-1)!!` for all
/// `d <= d_max`, `1 <= t <= t_max`, in integers.
///
/// With `S = Σ_j (2j - d)^{2t} A(d+1, j)` the comparison is
/// `12^t S <= 4^t (d+2)^t (2t-1)!! (d+1)!`.
pub fn boolean_sweep(d_max: usize, t_max: u32) -> SweepOutcome {
    let eulerian = eulerian_table(d_max + 1);
    let mut out = SweepOutcome::default();
    for d in 0..=d_max {
        let row = &eulerian[d + 1];
        let fact = factorial(d as u64 + 1);
        let squares: Vec<Integer> = (0..row.len())
            .map(|j| Integer::from((2 * j as i64 - d as i64).pow(2)))
            .collect();
        let mut powers: Vec<Integer> = vec![Integer::from(1); row.len()];
        let mut twelve = Integer::from(1);
        let mut rhs_scale = Integer::from(1);
        for t in 1..=t_max {
            for (p, s) in powers.iter_mut().zip(&squares) {
                *p *= s;
            }
            twelve *= 12;
            rhs_scale *= 4 * (d as i64 + 2);
            let s: Integer = powers.iter().zip(row).map(|(p, a)| p * a).sum();
            let lhs = s * &twelve;
            let rhs = &rhs_scale * double_factorial(2 * t as i64 - 1) * &fact;
            let point = SweepPoint { d, t };
            if lhs > rhs {
                out.violations.push(point);
            } else if lhs == rhs {
                out.equalities.push(point);
            }
            out.checked += 1;
        }
    }
    out
}
