//! The lattice of flats, layered by rank.

use std::collections::HashMap;

use num_traits::Zero;

use crate::bitset::ElementSet;
use crate::matroid::Matroid;
use crate::Integer;

#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats_by_rank: Vec<Vec<ElementSet>>,
    /// `covers[k][i]` lists indices into rank `k + 1` of the flats covering
    /// flat `i` of rank `k`.
    covers: Vec<Vec<Vec<usize>>>,
}

impl FlatLattice {
    /// Generates covers breadth-first: the flats covering `F` partition the
    /// complement of `F`, so each is found from its least uncovered element.
    pub fn new(m: &Matroid) -> Self {
        let ground = m.ground_set();
        let mut flats_by_rank = vec![vec![ElementSet::EMPTY]];
        let mut covers: Vec<Vec<Vec<usize>>> = Vec::new();
        for _ in 0..m.rank() {
            let layer = flats_by_rank.last().unwrap();
            let mut next: Vec<ElementSet> = Vec::new();
            let mut index: HashMap<ElementSet, usize> = HashMap::new();
            let mut layer_covers = Vec::with_capacity(layer.len());
            for &f in layer {
                let mut up = Vec::new();
                let mut remaining = ground.difference(f);
                while let Some(e) = remaining.first() {
                    let g = m.closure(f.with(e));
                    remaining = remaining.difference(g);
                    let id = *index.entry(g).or_insert_with(|| {
                        next.push(g);
                        next.len() - 1
                    });
                    up.push(id);
                }
                layer_covers.push(up);
            }
            covers.push(layer_covers);
            flats_by_rank.push(next);
        }
        covers.push(vec![Vec::new()]);
        FlatLattice { flats_by_rank, covers }
    }

    /// `d + 1`.
    pub fn rank(&self) -> usize {
        self.flats_by_rank.len() - 1
    }

    pub fn flats_by_rank(&self) -> &[Vec<ElementSet>] {
        &self.flats_by_rank
    }

    pub fn layer(&self, k: usize) -> &[ElementSet] {
        &self.flats_by_rank[k]
    }

    pub fn covers(&self, k: usize, i: usize) -> &[usize] {
        &self.covers[k][i]
    }

    /// Number of flats of each rank.
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.flats_by_rank.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.flats_by_rank.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, ElementSet)> + '_ {
        self.flats_by_rank
            .iter()
            .enumerate()
            .flat_map(|(k, layer)| layer.iter().map(move |&f| (k, f)))
    }

    /// Maximal chains `∅ ⋖ F_1 ⋖ .. ⋖ E`, counted along cover edges.
    pub fn maximal_chain_count(&self) -> Integer {
        let mut paths = vec![Integer::from(1)];
        for k in 0..self.rank() {
            let mut next = vec![Integer::zero(); self.flats_by_rank[k + 1].len()];
            for (i, p) in paths.iter().enumerate() {
                for &j in &self.covers[k][i] {
                    next[j] += p;
                }
            }
            paths = next;
        }
        paths.into_iter().sum()
    }

    /// For each flat of rank `hi`, the indices of the rank-`lo` flats below it.
    pub fn containments(&self, lo: usize, hi: usize) -> Vec<Vec<usize>> {
        let lower = &self.flats_by_rank[lo];
        self.flats_by_rank[hi]
            .iter()
            .map(|g| {
                lower
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.is_subset(*g))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }
}
