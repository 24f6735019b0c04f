//! Loopless matroids stored by their basis family.

use std::collections::HashSet;

use crate::bitset::{k_subsets, ElementSet, MAX_ELEMENTS};
use crate::combinat::binomial_u;
use crate::finite_field::FiniteField;
use crate::lattice::FlatLattice;
use crate::{Error, Result};

/// Refuse to materialize basis families larger than this.
pub const MAX_BASES: usize = 4_000_000;

/// A loopless matroid on `{0, .., n-1}`.
///
/// The basis list is kept sorted by bit pattern, so two matroids with the same
/// labelled basis family compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<ElementSet>,
}

/// A minor together with the original label of each of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub matroid: Matroid,
    /// `labels[i]` is the element of the parent that became element `i`.
    pub labels: Vec<usize>,
}

impl Matroid {
    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::InvalidParameters(format!(
                "uniform matroid needs 0 < r <= n, got r = {r}, n = {n}"
            )));
        }
        check_size(n)?;
        let count = binomial_u(n, r);
        if count > MAX_BASES.into() {
            return Err(Error::InvalidParameters(format!(
                "U_{{{r},{n}}} has {count} bases, more than {MAX_BASES}"
            )));
        }
        Ok(Self::from_sorted(n, r, k_subsets(n, r).collect()))
    }

    /// The Boolean matroid `U_{n,n}`.
    pub fn boolean(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// `PG(d, q)`: the lines of `GF(q)^{d+1}`, with spanning `(d+1)`-sets as
    /// bases.
    pub fn projective_geometry(d: usize, q: u64) -> Result<Self> {
        let field = FiniteField::new(q)?;
        if d == 0 {
            return Err(Error::InvalidParameters("PG(d, q) needs d >= 1".into()));
        }
        let n = pg_point_count(d, q);
        if n > MAX_ELEMENTS as u128 {
            return Err(Error::TooManyElements { n: n as usize, max: MAX_ELEMENTS });
        }
        let points = field.projective_points(d + 1);
        let mut bases = Vec::new();
        let mut chosen = Vec::with_capacity(d + 1);
        spanning_sets(&field, &points, 0, d + 1, &mut chosen, ElementSet::EMPTY, &mut bases)?;
        Ok(Self::from_sorted(points.len(), d + 1, bases))
    }

    /// Validates an explicit basis family.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        check_size(n)?;
        let first = bases.first().ok_or(Error::EmptyBasisList)?;
        let rank = first.len();
        let mut sets = Vec::with_capacity(bases.len());
        for b in bases {
            if let Some(&e) = b.iter().find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            let s: ElementSet = b.iter().copied().collect();
            // repeated elements make the stated cardinality meaningless
            if b.len() != rank || s.len() != rank {
                return Err(Error::MixedBasisCardinality { expected: rank, found: s.len().min(b.len()) });
            }
            sets.push(s);
        }
        Self::from_basis_sets(n, sets)
    }

    /// Like [`Matroid::from_bases`] for bitset input.
    pub fn from_basis_sets(n: usize, mut sets: Vec<ElementSet>) -> Result<Self> {
        check_size(n)?;
        let rank = sets.first().ok_or(Error::EmptyBasisList)?.len();
        let ground = ElementSet::full(n);
        for s in &sets {
            if let Some(e) = s.difference(ground).first() {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if s.len() != rank {
                return Err(Error::MixedBasisCardinality { expected: rank, found: s.len() });
            }
        }
        if rank == 0 {
            return Err(Error::RankTooSmall { rank: 0, required: 1 });
        }
        sets.sort_unstable();
        sets.dedup();
        let covered = sets.iter().fold(ElementSet::EMPTY, |acc, b| acc.union(*b));
        if let Some(e) = ground.difference(covered).first() {
            return Err(Error::LoopDetected(e));
        }
        let m = Self::from_sorted(n, rank, sets);
        m.check_exchange()?;
        Ok(m)
    }

    fn from_sorted(n: usize, rank: usize, mut bases: Vec<ElementSet>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        Matroid { n, rank, bases }
    }

    /// For every basis `b1`, element `x` of `b1`, and basis `b2` avoiding `x`,
    /// some `y` in `b2 - b1` makes `b1 - x + y` a basis.
    fn check_exchange(&self) -> Result<()> {
        let ground = self.ground_set();
        for &b1 in &self.bases {
            for x in b1 {
                let rest = b1.without(x);
                let swaps: ElementSet = ground
                    .difference(b1)
                    .iter()
                    .filter(|&y| self.is_basis(rest.with(y)))
                    .collect();
                // a violating b2 avoids x and meets no valid swap outside b1
                let allowed = ground.difference(swaps).without(x);
                let by_scan = self.bases.len();
                let by_subsets = binomial_u(allowed.len(), self.rank);
                let witness = if by_subsets < by_scan.into() {
                    subsets_of(allowed, self.rank).find(|&s| self.is_basis(s))
                } else {
                    self.bases.iter().copied().find(|b2| b2.is_subset(allowed))
                };
                if let Some(b2) = witness {
                    return Err(Error::ExchangeAxiomViolation {
                        basis: b1.to_vec(),
                        other: b2.to_vec(),
                        removed: x,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the whole matroid, `d + 1`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `d = rank - 1`, the degree of the Chow polynomial.
    pub fn d(&self) -> usize {
        self.rank - 1
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Bases sorted by bit pattern.
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: ElementSet) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.bases.iter().any(|b| s.is_subset(*b))
    }

    /// `max |s ∩ B|` over bases `B`.
    pub fn rank_of(&self, s: ElementSet) -> usize {
        let mut best = 0;
        for b in &self.bases {
            best = best.max(b.intersection(s).len());
            if best == self.rank {
                break;
            }
        }
        best
    }

    /// `x` escapes the closure of `s` exactly when some basis meets `s` in
    /// `rank(s)` elements and contains `x`.
    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let r = self.rank_of(s);
        let mut outside = ElementSet::EMPTY;
        for b in &self.bases {
            if b.intersection(s).len() == r {
                outside = outside.union(b.difference(s));
            }
        }
        self.ground_set().difference(outside)
    }

    pub fn is_flat(&self, s: ElementSet) -> bool {
        self.closure(s) == s
    }

    /// An element lying in every basis.
    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b.contains(e))
    }

    pub fn coloops(&self) -> ElementSet {
        self.bases.iter().fold(self.ground_set(), |acc, b| acc.intersection(*b))
    }

    pub fn is_boolean(&self) -> bool {
        self.n == self.rank
    }

    pub fn flats(&self) -> FlatLattice {
        FlatLattice::new(self)
    }

    /// Distinct closures of singletons.
    pub fn rank_one_flats(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::EMPTY;
        let mut out = Vec::new();
        for e in 0..self.n {
            if !seen.contains(e) {
                let f = self.closure(ElementSet::singleton(e));
                seen = seen.union(f);
                out.push(f);
            }
        }
        out
    }

    /// Whether removing parallel copies leaves `U_{d+1}`.
    pub fn simplification_is_boolean(&self) -> bool {
        self.rank_one_flats().len() == self.rank
    }

    pub fn delete(&self, e: usize) -> Result<Minor> {
        self.check_element(e)?;
        if self.n == 1 {
            return Err(Error::EmptyMinor);
        }
        let kept: Vec<ElementSet> = self.bases.iter().copied().filter(|b| !b.contains(e)).collect();
        let (rank, raw) = if kept.is_empty() {
            (self.rank - 1, self.bases.iter().map(|b| b.without(e)).collect())
        } else {
            (self.rank, kept)
        };
        let labels: Vec<usize> = self.ground_set().without(e).to_vec();
        Ok(self.minor(rank, raw, labels))
    }

    pub fn contract(&self, s: ElementSet) -> Result<Minor> {
        self.check_subset(s)?;
        if !self.is_flat(s) {
            return Err(Error::ContractByNonFlat(s.to_vec()));
        }
        if s == self.ground_set() {
            return Err(Error::EmptyMinor);
        }
        let r = self.rank_of(s);
        let raw = self
            .bases
            .iter()
            .filter(|b| b.intersection(s).len() == r)
            .map(|b| b.difference(s))
            .collect();
        let labels = self.ground_set().difference(s).to_vec();
        Ok(self.minor(self.rank - r, raw, labels))
    }

    pub fn restrict(&self, s: ElementSet) -> Result<Minor> {
        self.check_subset(s)?;
        if s.is_empty() {
            return Err(Error::EmptyMinor);
        }
        let r = self.rank_of(s);
        let raw = self
            .bases
            .iter()
            .map(|b| b.intersection(s))
            .filter(|b| b.len() == r)
            .collect();
        Ok(self.minor(r, raw, s.to_vec()))
    }

    fn minor(&self, rank: usize, raw: Vec<ElementSet>, labels: Vec<usize>) -> Minor {
        let bases = raw.into_iter().map(|b| b.relabel(&labels)).collect();
        Minor {
            matroid: Self::from_sorted(labels.len(), rank, bases),
            labels,
        }
    }

    /// Independent sets of size `rank - 1` become the bases.
    pub fn truncation(&self) -> Result<Self> {
        if self.rank < 2 {
            return Err(Error::RankTooSmall { rank: self.rank, required: 2 });
        }
        let mut seen = HashSet::new();
        for b in &self.bases {
            for x in *b {
                seen.insert(b.without(x));
            }
        }
        Ok(Self::from_sorted(self.n, self.rank - 1, seen.into_iter().collect()))
    }

    /// Adds a new element `n` parallel to `e`.
    pub fn parallel_extension(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        check_size(self.n + 1)?;
        let mut bases = self.bases.clone();
        bases.extend(self.bases.iter().filter(|b| b.contains(e)).map(|b| b.without(e).with(self.n)));
        Ok(Self::from_sorted(self.n + 1, self.rank, bases))
    }

    /// Key identifying the labelled matroid: ground-set size and the sorted
    /// basis bit patterns.
    pub fn canonical_key(&self) -> (usize, Vec<u64>) {
        (self.n, self.bases.iter().map(|b| b.bits()).collect())
    }

    /// Bases as ascending element lists, in lexicographic order.
    pub fn canonical_bases(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.bases.iter().map(|b| b.to_vec()).collect();
        out.sort();
        out
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            return Err(Error::ElementOutOfRange { element: e, n: self.n });
        }
        Ok(())
    }

    fn check_subset(&self, s: ElementSet) -> Result<()> {
        match s.difference(self.ground_set()).first() {
            Some(e) => Err(Error::ElementOutOfRange { element: e, n: self.n }),
            None => Ok(()),
        }
    }
}

/// `(q^{d+1} - 1) / (q - 1)`.
/// Saturates at `u128::MAX`.
pub fn pg_point_count(d: usize, q: u64) -> u128 {
    let q = q as u128;
    let mut total = 0u128;
    let mut power = 1u128;
    for _ in 0..=d {
        total = total.saturating_add(power);
        power = power.saturating_mul(q);
    }
    total
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::TooManyElements { n, max: MAX_ELEMENTS });
    }
    Ok(())
}

fn subsets_of(s: ElementSet, k: usize) -> impl Iterator<Item = ElementSet> {
    let elems = s.to_vec();
    k_subsets(elems.len(), k).map(move |sub| sub.iter().map(|i| elems[i]).collect())
}

fn spanning_sets(
    field: &FiniteField,
    points: &[Vec<u8>],
    start: usize,
    target: usize,
    chosen: &mut Vec<Vec<u8>>,
    set: ElementSet,
    out: &mut Vec<ElementSet>,
) -> Result<()> {
    if chosen.len() == target {
        out.push(set);
        if out.len() > MAX_BASES {
            return Err(Error::InvalidParameters(format!("more than {MAX_BASES} bases")));
        }
        return Ok(());
    }
    let needed = target - chosen.len();
    for i in start..=points.len().saturating_sub(needed) {
        chosen.push(points[i].clone());
        if field.rank(chosen) == chosen.len() {
            spanning_sets(field, points, i + 1, target, chosen, set.with(i), out)?;
        }
        chosen.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(Matroid::uniform(3, 3).unwrap().bases().len(), 1);
        assert_eq!(Matroid::uniform(2, 3).unwrap().canonical_bases(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(matches!(Matroid::uniform(4, 3), Err(Error::InvalidParameters(_))));
        assert!(matches!(Matroid::uniform(0, 3), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn projective_geometry_examples() {
        let fano = Matroid::projective_geometry(2, 2).unwrap();
        assert_eq!((fano.n(), fano.rank(), fano.bases().len()), (7, 3, 28));
        for q in [2, 3, 4, 5] {
            let line = Matroid::projective_geometry(1, q).unwrap();
            assert_eq!(line, Matroid::uniform(2, q as usize + 1).unwrap());
        }
        assert_eq!(Matroid::projective_geometry(2, 6).unwrap_err(), Error::UnsupportedField { q: 6 });
        assert_eq!(Matroid::projective_geometry(3, 2).unwrap().n(), 15);
    }

    #[test]
    fn from_bases_examples() {
        let m = Matroid::from_bases(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
        assert!(matches!(
            Matroid::from_bases(3, &[vec![0, 1], vec![2]]),
            Err(Error::MixedBasisCardinality { .. })
        ));
        assert_eq!(Matroid::from_bases(2, &[vec![0]]).unwrap_err(), Error::LoopDetected(1));
        assert_eq!(Matroid::from_bases(2, &[]).unwrap_err(), Error::EmptyBasisList);
        assert!(matches!(
            Matroid::from_bases(4, &[vec![0, 1], vec![2, 3]]),
            Err(Error::ExchangeAxiomViolation { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(m.closure(set(&[0])), set(&[0]));
        assert_eq!(m.closure(set(&[0, 1])), set(&[0, 1, 2]));
        assert_eq!(m.closure(ElementSet::EMPTY), ElementSet::EMPTY);
    }

    #[test]
    fn minor_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.delete(2).unwrap().matroid, Matroid::boolean(2).unwrap());

        let fano = Matroid::projective_geometry(2, 2).unwrap();
        let c = fano.contract(set(&[0])).unwrap();
        assert_eq!((c.matroid.n(), c.matroid.rank()), (6, 2));
        assert_eq!(c.matroid.rank_one_flats().len(), 3);
        assert!(c.matroid.rank_one_flats().iter().all(|f| f.len() == 2));
        assert!(matches!(fano.contract(set(&[0, 1])), Err(Error::ContractByNonFlat(_))));

        let u3 = Matroid::boolean(3).unwrap();
        let r = u3.restrict(set(&[0, 1])).unwrap();
        assert_eq!(r.matroid, Matroid::boolean(2).unwrap());
        assert_eq!(r.labels, vec![0, 1]);
        assert_eq!(Matroid::boolean(1).unwrap().delete(0).unwrap_err(), Error::EmptyMinor);
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(Matroid::boolean(3).unwrap().truncation().unwrap(), Matroid::uniform(2, 3).unwrap());
        let fano = Matroid::projective_geometry(2, 2).unwrap();
        assert_eq!(fano.truncation().unwrap(), Matroid::uniform(2, 7).unwrap());
        assert_eq!(Matroid::uniform(2, 3).unwrap().truncation().unwrap(), Matroid::uniform(1, 3).unwrap());
        assert!(matches!(Matroid::uniform(1, 3).unwrap().truncation(), Err(Error::RankTooSmall { .. })));
    }

    #[test]
    fn boolean_simplification() {
        assert!(!Matroid::uniform(3, 4).unwrap().simplification_is_boolean());
        assert!(Matroid::boolean(4).unwrap().simplification_is_boolean());
        assert!(!Matroid::projective_geometry(2, 2).unwrap().simplification_is_boolean());
        let ext = Matroid::boolean(3).unwrap().parallel_extension(1).unwrap();
        assert!(ext.simplification_is_boolean());
        assert_eq!(ext.n(), 4);
    }
}
