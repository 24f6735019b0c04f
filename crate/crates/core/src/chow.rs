//! Chow polynomials, computed from flag counts and independently by the
//! semi-small recursion.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bitset::ElementSet;
use crate::combinat::eulerian_row;
use crate::flags::FlagTable;
use crate::matroid::Matroid;
use crate::poly::UniPoly;
use crate::{Error, Integer, Rational, Result};

type IntPoly = Vec<Integer>;

fn int_mul(a: &[Integer], b: &[Integer]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_add_assign(acc: &mut IntPoly, p: &[Integer], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, Integer::zero());
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

fn to_poly(p: IntPoly) -> UniPoly {
    UniPoly::from_integers(p)
}

/// `H = (1/x) Σ_J N_J Π_i (x + x² + .. + x^{n_i - 1})`.
pub fn chow_from_flag_table(table: &FlagTable) -> UniPoly {
    let mut acc: IntPoly = Vec::new();
    for (j, count) in table.iter() {
        if count.is_zero() {
            continue;
        }
        let blocks = j.block_sizes();
        if blocks.0.contains(&1) {
            continue;
        }
        // each factor is x(1 + .. + x^{n-2}); the leading x's cancel against 1/x
        // all but once, leaving x^m
        let mut term: IntPoly = vec![count.clone()];
        for &n in &blocks.0 {
            term = int_mul(&term, &vec![Integer::one(); n - 1]);
        }
        int_add_assign(&mut acc, &term, blocks.0.len() - 1);
    }
    to_poly(acc)
}

pub fn chow_via_flags(m: &Matroid) -> UniPoly {
    chow_from_flag_table(&FlagTable::of_matroid(m))
}

/// `Σ_k A(n, k) x^k`.
pub fn eulerian_polynomial(n: usize) -> UniPoly {
    assert!(n >= 1, "Eulerian polynomial needs n >= 1");
    to_poly(eulerian_row(n))
}

/// The flats `F` with `∅ ⊊ F ⊊ E - i` such that `F ∪ {i}` is also a flat.
pub fn semi_small_flats(m: &Matroid, i: usize) -> Vec<ElementSet> {
    let ground = m.ground_set();
    m.flats()
        .iter()
        .map(|(_, g)| g)
        .filter(|g| g.contains(i) && *g != ground)
        .map(|g| g.without(i))
        .filter(|f| !f.is_empty() && m.is_flat(*f))
        .collect()
}

/// Smallest element that is not a coloop.
pub fn first_non_coloop(m: &Matroid) -> Option<usize> {
    m.ground_set().difference(m.coloops()).first()
}

/// `H_M = H_{M - i} + x Σ_{F ∈ S_i} H_{M/(F ∪ i)} H_{M|F}`, with `i` the
/// smallest non-coloop. Rank one gives 1 and Boolean matroids give the
/// Eulerian polynomial.
pub fn chow_via_recursion(m: &Matroid) -> UniPoly {
    let mut memo = HashMap::new();
    to_poly(recurse(m, &mut memo))
}

fn recurse(m: &Matroid, memo: &mut HashMap<(usize, Vec<u64>), IntPoly>) -> IntPoly {
    if m.rank() == 1 {
        return vec![Integer::one()];
    }
    let Some(i) = first_non_coloop(m) else {
        return eulerian_row(m.rank());
    };
    let key = m.canonical_key();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let deleted = m.delete(i).expect("non-coloop deletion").matroid;
    let mut acc = recurse(&deleted, memo);
    for f in semi_small_flats(m, i) {
        let upper = m.contract(f.with(i)).expect("contraction by a flat").matroid;
        let lower = m.restrict(f).expect("restriction to a nonempty flat").matroid;
        let term = int_mul(&recurse(&upper, memo), &recurse(&lower, memo));
        int_add_assign(&mut acc, &term, 1);
    }
    memo.insert(key, acc.clone());
    acc
}

/// Both routes, which must agree.
pub fn chow(m: &Matroid) -> Result<UniPoly> {
    let flags = chow_via_flags(m);
    let recursion = chow_via_recursion(m);
    if flags != recursion {
        return Err(Error::ChowMismatch {
            flags: flags.to_string(),
            recursion: recursion.to_string(),
        });
    }
    Ok(flags)
}

/// Coefficients in the basis `x^t (1 + x)^{d - 2t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub d: usize,
    pub gamma: Vec<Rational>,
}

impl GammaVector {
    pub fn reconstruct(&self) -> UniPoly {
        let one_plus_x = UniPoly::from_integers([1, 1]);
        self.gamma
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (t, g)| {
                &acc + &(&UniPoly::monomial(g.clone(), t) * &one_plus_x.pow((self.d - 2 * t) as u32))
            })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gamma.iter().all(|g| *g >= Rational::zero())
    }
}

/// Peels off `γ_t x^t (1+x)^{d-2t}` from the lowest degree upward.
pub fn gamma_vector(p: &UniPoly, d: usize) -> Result<GammaVector> {
    if !p.is_palindromic(d) {
        return Err(Error::NotPalindromic { d });
    }
    let one_plus_x = UniPoly::from_integers([1, 1]);
    let mut rest = p.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for t in 0..=d / 2 {
        let g = rest.coeff(t);
        rest = &rest - &(&UniPoly::monomial(g.clone(), t) * &one_plus_x.pow((d - 2 * t) as u32));
        gamma.push(g);
    }
    assert!(rest.is_zero(), "palindromic remainder must vanish");
    Ok(GammaVector { d, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rat_int;

    fn ints(p: &UniPoly) -> Vec<i64> {
        p.to_integers().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_examples() {
        let u3 = Matroid::boolean(3).unwrap();
        let fano = Matroid::projective_geometry(2, 2).unwrap();
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(ints(&chow_via_flags(&u3)), vec![1, 4, 1]);
        assert_eq!(ints(&chow_via_flags(&fano)), vec![1, 8, 1]);
        assert_eq!(ints(&chow_via_flags(&u23)), vec![1, 1]);
        assert_eq!(ints(&chow_via_recursion(&u23)), vec![1, 1]);
        assert_eq!(ints(&chow_via_recursion(&fano)), vec![1, 8, 1]);
        assert_eq!(ints(&chow_via_recursion(&Matroid::boolean(4).unwrap())), vec![1, 11, 11, 1]);
        assert_eq!(ints(&chow_via_flags(&Matroid::uniform(1, 4).unwrap())), vec![1]);
    }

    #[test]
    fn eulerian() {
        assert_eq!(ints(&eulerian_polynomial(3)), vec![1, 4, 1]);
        assert_eq!(ints(&eulerian_polynomial(1)), vec![1]);
        assert_eq!(ints(&eulerian_polynomial(4)), vec![1, 11, 11, 1]);
    }

    #[test]
    fn gamma() {
        let g = gamma_vector(&UniPoly::from_integers([1, 4, 1]), 2).unwrap();
        assert_eq!(g.gamma, vec![rat_int(1), rat_int(2)]);
        let g = gamma_vector(&UniPoly::from_integers([1, 8, 1]), 2).unwrap();
        assert_eq!(g.gamma, vec![rat_int(1), rat_int(6)]);
        let g = gamma_vector(&UniPoly::from_integers([1, 3, 3, 1]), 3).unwrap();
        assert_eq!(g.gamma, vec![rat_int(1), rat_int(0)]);
        assert_eq!(
            gamma_vector(&UniPoly::from_integers([1, 2]), 1).map(|g| g.gamma.len()),
            Err(Error::NotPalindromic { d: 1 })
        );
    }

    #[test]
    fn semi_small_degrees_add_up() {
        let fano = Matroid::projective_geometry(2, 2).unwrap();
        // two points never form a flat of the Fano plane
        assert!(semi_small_flats(&fano, 0).is_empty());
        let u34 = Matroid::uniform(3, 4).unwrap();
        for f in semi_small_flats(&u34, 0) {
            let upper = u34.contract(f.with(0)).unwrap().matroid;
            let lower = u34.restrict(f).unwrap().matroid;
            assert_eq!(upper.d() + lower.d(), u34.d() - 2);
        }
        assert_eq!(semi_small_flats(&u34, 0).len(), 3);
    }
}
