//! Flags of flats: the counts `N_J` and their closed forms for Boolean and
//! projective-geometry matroids.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::factorial;
use crate::lattice::FlatLattice;
use crate::matroid::Matroid;
use crate::{Error, Integer, Rational, Result};

/// A subset `J = {j_1 < .. < j_m}` of `[d] = {1, .., d}`.
///
/// Encoded as a mask with bit `j - 1` set for each `j ∈ J`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankIndexSet {
    d: usize,
    mask: u64,
}

impl RankIndexSet {
    pub fn new(d: usize, elems: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        let mut prev = 0;
        for &j in elems {
            if j <= prev || j > d {
                return Err(Error::InvalidParameters(format!(
                    "rank indices must increase strictly within 1..={d}, got {elems:?}"
                )));
            }
            prev = j;
            mask |= 1 << (j - 1);
        }
        Ok(RankIndexSet { d, mask })
    }

    pub fn empty(d: usize) -> Self {
        RankIndexSet { d, mask: 0 }
    }

    pub fn full(d: usize) -> Self {
        RankIndexSet { d, mask: (1u64 << d) - 1 }
    }

    pub fn from_mask(d: usize, mask: u64) -> Self {
        assert!(d < 64 && mask >> d == 0, "mask {mask:#b} does not fit in [{d}]");
        RankIndexSet { d, mask }
    }

    /// Every subset of `[d]`, in mask order.
    pub fn all(d: usize) -> impl Iterator<Item = Self> {
        (0..1u64 << d).map(move |mask| RankIndexSet { d, mask })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j >= 1 && j <= self.d && self.mask >> (j - 1) & 1 == 1
    }

    pub fn elems(&self) -> Vec<usize> {
        (1..=self.d).filter(|&j| self.contains(j)).collect()
    }

    /// Largest element `j_m`, or 0 when empty.
    pub fn top(&self) -> usize {
        64 - self.mask.leading_zeros() as usize
    }

    /// Whether `J ⊆ [k]`.
    pub fn within(&self, k: usize) -> bool {
        self.top() <= k
    }

    pub fn with(&self, j: usize) -> Self {
        RankIndexSet::from_mask(self.d, self.mask | 1 << (j - 1))
    }

    pub fn block_sizes(&self) -> BlockSizes {
        let mut blocks = Vec::with_capacity(self.len() + 1);
        let mut prev = 0;
        for j in self.elems() {
            blocks.push(j - prev);
            prev = j;
        }
        blocks.push(self.d + 2 - prev);
        BlockSizes(blocks)
    }
}

impl fmt::Debug for RankIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J{:?}⊆[{}]", self.elems(), self.d)
    }
}

/// Gaps `(n_1, .., n_{m+1})` of a rank index set; they sum to `d + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockSizes(pub Vec<usize>);

impl BlockSizes {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `Π_{i <= m+1} (n_i - 1)`, the weight of `N_J` in `H(1)`.
    pub fn weight(&self) -> Integer {
        self.0.iter().map(|&n| Integer::from(n as i64 - 1)).product()
    }

    /// `Σ_{i <= m+1} n_i (n_i - 3) / 2`.
    pub fn shape(&self) -> Integer {
        self.0
            .iter()
            .map(|&n| {
                let n = n as i64;
                Integer::from(n * (n - 3) / 2)
            })
            .sum()
    }
}

/// Flag counts of chains of flats with ranks in `J`, by DP over the lattice.
pub fn flag_count(m: &Matroid, j: &RankIndexSet) -> Integer {
    assert_eq!(j.d(), m.d(), "index set ambient degree differs from the matroid's");
    let lattice = m.flats();
    let mut ranks = j.elems().into_iter();
    let Some(first) = ranks.next() else {
        return Integer::one();
    };
    let mut counts: Vec<Integer> = vec![Integer::one(); lattice.layer(first).len()];
    let mut lo = first;
    for hi in ranks {
        counts = lattice
            .containments(lo, hi)
            .iter()
            .map(|below| below.iter().map(|&i| &counts[i]).sum())
            .collect();
        lo = hi;
    }
    counts.into_iter().sum()
}

/// `U_J = n_{m+1} (d+1)! / Π n_i!`, the flag counts of `U_{d+1}`.
pub fn boolean_flag_count(d: usize, j: &RankIndexSet) -> Integer {
    let blocks = j.block_sizes();
    let last = *blocks.0.last().unwrap();
    let den: Integer = blocks.0.iter().map(|&n| factorial(n as u64)).product();
    factorial(d as u64 + 1) * last / den
}

/// The number of `r`-dimensional subspaces of `GF(q)^mm`.
pub fn gaussian_binomial(mm: u64, r: u64, q: u64) -> Integer {
    if r > mm {
        return Integer::zero();
    }
    let q = Integer::from(q);
    let mut num = Integer::one();
    let mut den = Integer::one();
    for i in 0..r {
        num *= num_traits::pow(q.clone(), (mm - i) as usize) - 1u32;
        den *= num_traits::pow(q.clone(), (i + 1) as usize) - 1u32;
    }
    num / den
}

/// `N_J(PG(d, q)) = Π gauss(d + 1 - j_{i-1}, j_i - j_{i-1}, q)`, `j_0 = 0`.
pub fn pg_flag_count(d: usize, q: u64, j: &RankIndexSet) -> Integer {
    let mut prev = 0u64;
    let mut out = Integer::one();
    for ji in j.elems() {
        let ji = ji as u64;
        out *= gaussian_binomial(d as u64 + 1 - prev, ji - prev, q);
        prev = ji;
    }
    out
}

/// Degree in `q` of [`pg_flag_count`]: `(d+1)²/2 - ½ Σ (j_i - j_{i-1})²` with
/// `j_{m+1} = d + 1`.
pub fn pg_flag_degree(d: usize, j: &RankIndexSet) -> Rational {
    let mut prev = 0i64;
    let mut sq = 0i64;
    for ji in j.elems().into_iter().map(|x| x as i64).chain([d as i64 + 1]) {
        sq += (ji - prev).pow(2);
        prev = ji;
    }
    let d1 = d as i64 + 1;
    let r = Rational::new((d1 * d1 - sq).into(), 2.into());
    assert!(r.is_integer());
    r
}

/// All `2^d` flag counts of one matroid, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagTable {
    d: usize,
    counts: Vec<Integer>,
}

/// Largest `d` for which a full table is materialized.
pub const MAX_TABLE_D: usize = 24;

impl FlagTable {
    pub fn new(d: usize, counts: Vec<Integer>) -> Self {
        assert_eq!(counts.len(), 1 << d);
        FlagTable { d, counts }
    }

    pub fn of_matroid(m: &Matroid) -> Self {
        Self::from_lattice(&m.flats())
    }

    /// One sweep over all masks: for `J` with top element `t`, the number of
    /// flags ending at each rank-`t` flat is summed from `J - {t}`.
    pub fn from_lattice(lattice: &FlatLattice) -> Self {
        let d = lattice.rank() - 1;
        assert!(d <= MAX_TABLE_D, "flag table for d = {d} is too large");
        let mut containment: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
        let mut per_flat: Vec<Vec<u128>> = Vec::with_capacity(1 << d);
        let mut counts = Vec::with_capacity(1 << d);
        per_flat.push(vec![1]);
        counts.push(Integer::one());
        for mask in 1u64..1 << d {
            let j = RankIndexSet::from_mask(d, mask);
            let t = j.top();
            let rest = mask & !(1 << (t - 1));
            let lo = RankIndexSet::from_mask(d, rest).top();
            let below = containment
                .entry((lo, t))
                .or_insert_with(|| lattice.containments(lo, t));
            let prev = &per_flat[rest as usize];
            let here: Vec<u128> = below
                .iter()
                .map(|ids| {
                    ids.iter()
                        .try_fold(0u128, |acc, &i| acc.checked_add(prev[i]))
                        .expect("flag count overflows u128")
                })
                .collect();
            let total = here
                .iter()
                .try_fold(0u128, |acc, &c| acc.checked_add(c))
                .expect("flag count overflows u128");
            counts.push(Integer::from(total));
            per_flat.push(here);
        }
        FlagTable { d, counts }
    }

    pub fn boolean(d: usize) -> Self {
        assert!(d <= MAX_TABLE_D);
        let counts = RankIndexSet::all(d).map(|j| boolean_flag_count(d, &j)).collect();
        FlagTable { d, counts }
    }

    pub fn projective(d: usize, q: u64) -> Self {
        assert!(d <= MAX_TABLE_D);
        let counts = RankIndexSet::all(d).map(|j| pg_flag_count(d, q, &j)).collect();
        FlagTable { d, counts }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, mask: u64) -> &Integer {
        &self.counts[mask as usize]
    }

    pub fn at(&self, j: &RankIndexSet) -> &Integer {
        assert_eq!(j.d(), self.d);
        &self.counts[j.mask() as usize]
    }

    pub fn counts(&self) -> &[Integer] {
        &self.counts
    }

    pub fn iter(&self) -> impl Iterator<Item = (RankIndexSet, &Integer)> {
        let d = self.d;
        self.counts
            .iter()
            .enumerate()
            .map(move |(mask, c)| (RankIndexSet::from_mask(d, mask as u64), c))
    }

    /// `N_{{k}}`, the number of rank-`k` flats.
    pub fn singleton(&self, k: usize) -> &Integer {
        &self.counts[1 << (k - 1)]
    }
}
