//! Deterministic base-and-strong-generating-set order computation.
//!
//! The chain keeps, per base point, every strong generator fixing the bases
//! above it, an append-only Schreier tree for its orbit, and a lazy queue of
//! (orbit point, generator) pairs still awaiting verification. Levels are
//! verified deepest-first; a residue that survives sifting joins every level
//! whose base prefix it fixes. Verified or not, the product of orbit sizes
//! is a lower bound on the group order, so the run can stop as soon as that
//! product reaches the only admissible upper bound (`n!`, or `n!/2` when
//! every generator is even); otherwise verification runs to completion and
//! the product is exact.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::permgroup::perm::{Parity, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BsgsError {
    #[error("degree {n} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { n: usize, bound: usize },
}

struct ArenaGen {
    fwd: Vec<u32>,
    inv: Vec<u32>,
}

#[derive(Debug, Clone, Copy)]
struct Region {
    cur_p: usize,
    p_end: usize,
    g_start: usize,
    cur_g: usize,
    g_end: usize,
}

struct Level {
    base: u32,
    /// Indices into the arena; every one fixes the bases of all higher levels.
    gens: Vec<u32>,
    /// Orbit of `base` in discovery order; append-only.
    orbit: Vec<u32>,
    /// Point -> position in `orbit`, or -1.
    pos: Vec<i32>,
    /// Point -> (parent point, arena generator) edge of the Schreier tree.
    parent: Vec<(u32, u32)>,
    /// Pending (orbit position, gens position) rectangles to verify.
    regions: VecDeque<Region>,
}

impl Level {
    fn new(base: u32, n: usize) -> Self {
        let mut pos = vec![-1; n];
        pos[base as usize] = 0;
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            pos,
            parent: vec![(0, 0); n],
            regions: VecDeque::new(),
        }
    }

    fn in_orbit(&self, point: u32) -> bool {
        self.pos[point as usize] >= 0
    }

    fn next_pair(&mut self) -> Option<(u32, u32)> {
        while let Some(region) = self.regions.front_mut() {
            if region.cur_p >= region.p_end {
                self.regions.pop_front();
                continue;
            }
            let point = self.orbit[region.cur_p];
            let gen = self.gens[region.cur_g];
            region.cur_g += 1;
            if region.cur_g >= region.g_end {
                region.cur_g = region.g_start;
                region.cur_p += 1;
            }
            return Some((point, gen));
        }
        None
    }
}

struct Chain {
    n: usize,
    arena: Vec<ArenaGen>,
    levels: Vec<Level>,
}

enum Sifted {
    Stripped,
    Stuck { level: usize, residue: Vec<u32> },
}

fn is_identity(v: &[u32]) -> bool {
    v.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

fn first_moved(v: &[u32]) -> Option<u32> {
    v.iter()
        .enumerate()
        .find(|&(i, &x)| i as u32 != x)
        .map(|(i, _)| i as u32)
}

impl Chain {
    fn new(n: usize) -> Self {
        Self {
            n,
            arena: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Left-multiplies `h` by the inverse coset representative of `h(base)`
    /// at `lvl`, walking the Schreier tree upward edge by edge.
    fn strip(&self, lvl: usize, h: &mut Vec<u32>, scratch: &mut Vec<u32>) {
        let level = &self.levels[lvl];
        let mut x = h[level.base as usize];
        while x != level.base {
            let (parent_point, gen_idx) = level.parent[x as usize];
            let inv = &self.arena[gen_idx as usize].inv;
            scratch.clear();
            scratch.extend(h.iter().map(|&i| inv[i as usize]));
            std::mem::swap(h, scratch);
            x = parent_point;
            debug_assert_eq!(h[level.base as usize], x);
        }
    }

    /// Coset representative mapping `base` to `point` at `lvl`.
    fn representative(&self, lvl: usize, point: u32) -> Vec<u32> {
        let level = &self.levels[lvl];
        let mut edges = Vec::new();
        let mut x = point;
        while x != level.base {
            let (parent_point, gen_idx) = level.parent[x as usize];
            edges.push(gen_idx);
            x = parent_point;
        }
        let mut rep: Vec<u32> = (0..self.n as u32).collect();
        for &gen_idx in edges.iter().rev() {
            let fwd = &self.arena[gen_idx as usize].fwd;
            for slot in rep.iter_mut() {
                *slot = fwd[*slot as usize];
            }
        }
        rep
    }

    /// Strips `h` through `levels[start..]`, leaving it where it sticks.
    fn sift(&mut self, start: usize, mut h: Vec<u32>, scratch: &mut Vec<u32>) -> Sifted {
        for lvl in start..self.levels.len() {
            if is_identity(&h) {
                return Sifted::Stripped;
            }
            let base = self.levels[lvl].base;
            let x = h[base as usize];
            if x == base {
                continue;
            }
            if self.levels[lvl].in_orbit(x) {
                self.strip(lvl, &mut h, scratch);
            } else {
                return Sifted::Stuck { level: lvl, residue: h };
            }
        }
        if is_identity(&h) {
            return Sifted::Stripped;
        }
        let base = first_moved(&h).expect("non-identity residue moves a point");
        self.levels.push(Level::new(base, self.n));
        Sifted::Stuck {
            level: self.levels.len() - 1,
            residue: h,
        }
    }

    /// Extends `lvl`'s orbit with a newly adjoined generator and queues the
    /// fresh verification pairs.
    fn adjoin_at_level(&mut self, lvl: usize, arena_idx: u32) {
        let old_orbit_len = self.levels[lvl].orbit.len();
        let g_pos = self.levels[lvl].gens.len();
        self.levels[lvl].gens.push(arena_idx);

        // Pass the new generator over the existing orbit, then close up the
        // newly reached points under the full generator list.
        let mut head = {
            let level = &mut self.levels[lvl];
            let fwd = &self.arena[arena_idx as usize].fwd;
            for i in 0..old_orbit_len {
                let p = level.orbit[i];
                let q = fwd[p as usize];
                if !level.in_orbit(q) {
                    level.pos[q as usize] = level.orbit.len() as i32;
                    level.parent[q as usize] = (p, arena_idx);
                    level.orbit.push(q);
                }
            }
            old_orbit_len
        };
        while head < self.levels[lvl].orbit.len() {
            let p = self.levels[lvl].orbit[head];
            head += 1;
            for gi in 0..self.levels[lvl].gens.len() {
                let gen_idx = self.levels[lvl].gens[gi];
                let q = self.arena[gen_idx as usize].fwd[p as usize];
                let level = &mut self.levels[lvl];
                if !level.in_orbit(q) {
                    level.pos[q as usize] = level.orbit.len() as i32;
                    level.parent[q as usize] = (p, gen_idx);
                    level.orbit.push(q);
                }
            }
        }

        let level = &mut self.levels[lvl];
        let new_orbit_len = level.orbit.len();
        level.regions.push_back(Region {
            cur_p: 0,
            p_end: old_orbit_len,
            g_start: g_pos,
            cur_g: g_pos,
            g_end: g_pos + 1,
        });
        if new_orbit_len > old_orbit_len {
            level.regions.push_back(Region {
                cur_p: old_orbit_len,
                p_end: new_orbit_len,
                g_start: 0,
                cur_g: 0,
                g_end: level.gens.len(),
            });
        }
    }

    /// Installs a surviving residue as a strong generator: it joins every
    /// level whose base prefix it fixes, i.e. levels `0..=stuck`.
    fn add_strong_generator(&mut self, stuck: usize, residue: Vec<u32>) {
        let mut inv = vec![0u32; self.n];
        for (i, &x) in residue.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        let arena_idx = self.arena.len() as u32;
        self.arena.push(ArenaGen { fwd: residue, inv });
        for lvl in 0..=stuck {
            debug_assert!(
                lvl == 0 || {
                    let b = self.levels[lvl - 1].base;
                    self.arena[arena_idx as usize].fwd[b as usize] == b
                }
            );
            self.adjoin_at_level(lvl, arena_idx);
        }
    }

    /// Orbit sizes match the full descending pattern certifying `target_len`
    /// levels of a symmetric/alternating tower.
    fn certifies(&self, needed_levels: usize) -> bool {
        self.levels.len() >= needed_levels
            && (0..needed_levels).all(|l| self.levels[l].orbit.len() == self.n - l)
            && (needed_levels..self.levels.len()).all(|l| self.levels[l].orbit.len() == 1)
    }

    fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for level in &self.levels {
            acc *= BigUint::from(level.orbit.len());
        }
        acc
    }
}

/// Exact order of the group generated by `gens` on `n` points.
pub fn group_order(gens: &[Permutation], n: usize, degree_bound: usize) -> Result<BigUint, BsgsError> {
    if n > degree_bound {
        return Err(BsgsError::DegreeBoundExceeded { n, bound: degree_bound });
    }
    let all_even = gens.iter().all(|g| g.parity() == Parity::Even);

    let mut chain = Chain::new(n);
    let mut scratch = Vec::with_capacity(n);
    for g in gens {
        if g.is_identity() {
            continue;
        }
        match chain.sift(0, g.images().to_vec(), &mut scratch) {
            Sifted::Stripped => {}
            Sifted::Stuck { level, residue } => chain.add_strong_generator(level, residue),
        }
    }

    // Upper bound from parity: n!/2 when every generator is even, else n!.
    // Reaching it early renders the remaining verification redundant.
    let needed_levels = if all_even {
        n.saturating_sub(2)
    } else {
        n.saturating_sub(1)
    };

    if !chain.levels.is_empty() {
        let mut lvl = chain.levels.len() - 1;
        loop {
            if chain.certifies(needed_levels) {
                break;
            }
            let Some((point, gen_idx)) = chain.levels[lvl].next_pair() else {
                if lvl == 0 {
                    break;
                }
                lvl -= 1;
                continue;
            };

            // Schreier generator u_{s(p)}^{-1} . s . u_p, stripped at this
            // level, then sifted through the levels below.
            let rep = chain.representative(lvl, point);
            let fwd = &chain.arena[gen_idx as usize].fwd;
            let mut word: Vec<u32> = rep.iter().map(|&i| fwd[i as usize]).collect();
            chain.strip(lvl, &mut word, &mut scratch);
            if is_identity(&word) {
                continue;
            }
            match chain.sift(lvl + 1, word, &mut scratch) {
                Sifted::Stripped => {}
                Sifted::Stuck { level, residue } => {
                    chain.add_strong_generator(level, residue);
                    lvl = level;
                }
            }
        }
    }

    Ok(chain.order())
}
