//! The swap involutions generating the group: for each entry value `t` and
//! distance `a`, the permutation exchanging `t` with `t + 1` in every
//! tableau where the two entries occupy different rows and columns at
//! Manhattan distance `a`.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::permgroup::perm::{Parity, Permutation};
use crate::tableau::TableauSet;

/// One nontrivial swap involution, keyed by `(t, distance)`.
#[derive(Debug, Clone)]
pub struct SwapGenerator {
    pub t: u32,
    pub distance: u32,
    pub perm: Permutation,
}

/// All nontrivial swap involutions of one instance, in `(t, distance)` order.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    degree: usize,
    generators: Vec<SwapGenerator>,
}

impl GeneratorSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SwapGenerator> {
        self.generators.iter()
    }

    pub fn get(&self, i: usize) -> &SwapGenerator {
        &self.generators[i]
    }

    pub fn perms(&self) -> Vec<Permutation> {
        self.generators.iter().map(|g| g.perm.clone()).collect()
    }

    pub fn odd_count(&self) -> usize {
        self.generators
            .iter()
            .filter(|g| g.perm.parity() == Parity::Odd)
            .count()
    }
}

/// The permutation of canonical indices induced by exchanging entries `t`
/// and `t + 1` wherever they sit in different rows and columns at distance
/// `a`. Tableaux not meeting the condition are fixed.
pub fn swap_permutation(tabs: &TableauSet, t: u32, a: u32) -> Permutation {
    let diag = tabs.diagram();
    let images = tabs
        .iter()
        .enumerate()
        .map(|(i, tableau)| {
            let p = tableau.position_of(diag, t).expect("entry t present");
            let q = tableau.position_of(diag, t + 1).expect("entry t+1 present");
            if p.row != q.row && p.col != q.col && p.distance(q) == a {
                let swapped = tableau.with_swapped(t);
                debug_assert!(swapped.is_standard(diag));
                tabs.index_of(&swapped)
                    .expect("swapping entries in different rows and columns stays standard")
                    as u32
            } else {
                i as u32
            }
        })
        .collect();
    Permutation::from_images(images).expect("swap action is a bijection")
}

fn candidate_pairs(tabs: &TableauSet) -> Vec<(u32, u32)> {
    let g = tabs.diagram().box_count() as u32;
    if g < 2 || tabs.is_empty() {
        return Vec::new();
    }
    let max_distance = match tabs.diagram().stats() {
        Ok(s) => s.max_distance,
        Err(_) => return Vec::new(),
    };
    let mut pairs = Vec::new();
    for t in 1..g {
        for a in 1..=max_distance {
            pairs.push((t, a));
        }
    }
    pairs
}

fn collect_generators(tabs: &TableauSet, swaps: Vec<(u32, u32, Permutation)>) -> GeneratorSet {
    let generators = swaps
        .into_iter()
        .filter(|(_, _, perm)| !perm.is_identity())
        .map(|(t, distance, perm)| SwapGenerator { t, distance, perm })
        .collect();
    GeneratorSet {
        degree: tabs.len(),
        generators,
    }
}

/// Sequential construction over all `(t, a)` pairs.
pub fn all_generators_seq(tabs: &TableauSet) -> GeneratorSet {
    let swaps = candidate_pairs(tabs)
        .into_iter()
        .map(|(t, a)| (t, a, swap_permutation(tabs, t, a)))
        .collect();
    collect_generators(tabs, swaps)
}

/// Parallel construction over all `(t, a)` pairs; output order matches the
/// sequential path.
#[cfg(feature = "parallel")]
pub fn all_generators_par(tabs: &TableauSet) -> GeneratorSet {
    let swaps = candidate_pairs(tabs)
        .into_par_iter()
        .map(|(t, a)| (t, a, swap_permutation(tabs, t, a)))
        .collect();
    collect_generators(tabs, swaps)
}

/// All nontrivial swap involutions for `t` in `1..g` and distances up to the
/// diagram's maximum.
pub fn all_generators(tabs: &TableauSet) -> GeneratorSet {
    #[cfg(feature = "parallel")]
    {
        all_generators_par(tabs)
    }
    #[cfg(not(feature = "parallel"))]
    {
        all_generators_seq(tabs)
    }
}
