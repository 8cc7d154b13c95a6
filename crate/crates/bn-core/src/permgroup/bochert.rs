//! The classical few-mover criterion: a doubly transitive group containing a
//! nonidentity element moving fewer than `n/3 - 2*sqrt(n)/3` points is
//! alternating or symmetric. All comparisons here are exact integer
//! arithmetic; no floating point enters any decision.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::permgroup::generators::GeneratorSet;
use crate::permgroup::perm::Permutation;

/// Exact comparator against the bound `n/3 - 2*sqrt(n)/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoverThreshold {
    n: u64,
}

impl MoverThreshold {
    pub fn new(n: u64) -> Self {
        Self { n }
    }

    /// Exact test for `moved < n/3 - 2*sqrt(n)/3`:
    /// `3*moved < n - 2*sqrt(n)  <=>  n - 3*moved > 0  and  4n < (n - 3*moved)^2`.
    pub fn admits(&self, moved: u64) -> bool {
        let k = self.n as i128 - 3 * moved as i128;
        k > 0 && 4 * (self.n as i128) < k * k
    }

    /// Exact test for `n/3 - 2*sqrt(n)/3 > n/4`, which reduces to `n > 64`.
    pub fn exceeds_quarter(&self) -> bool {
        self.n > 64
    }

    /// Floor of the threshold in thousandths, for display only.
    pub fn approx_milli(&self) -> i64 {
        let scaled = self.n as i128 * 1_000_000; // (1000*sqrt(n))^2 = 10^6 * n
        let root = integer_sqrt(scaled as u128) as i128;
        ((1000 * self.n as i128 - 2 * root) / 3) as i64
    }
}

fn integer_sqrt(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    let mut x = (v as f64).sqrt() as u128;
    while x.saturating_mul(x) > v {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= v {
        x += 1;
    }
    x
}

/// A group element below the threshold, recorded as the generator word that
/// produced it (indices of `(t, distance)` pairs, applied right to left).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoverWitness {
    pub word: Vec<(u32, u32)>,
    pub moved: usize,
}

fn witness_from_word(gens: &GeneratorSet, word: &[usize], threshold: MoverThreshold) -> Option<MoverWitness> {
    let mut perm = gens.get(word[0]).perm.clone();
    for &i in &word[1..] {
        perm = perm.compose(&gens.get(i).perm);
    }
    let moved = perm.moved_count();
    (moved > 0 && threshold.admits(moved as u64)).then(|| MoverWitness {
        word: word.iter().map(|&i| {
            let g = gens.get(i);
            (g.t, g.distance)
        }).collect(),
        moved,
    })
}

fn search_depth(gens: &GeneratorSet, depth: u32, threshold: MoverThreshold) -> Option<MoverWitness> {
    let k = gens.len();
    let total: usize = (0..depth).fold(1usize, |acc, _| acc.saturating_mul(k));
    if k == 0 {
        return None;
    }
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut word = vec![0usize; depth as usize];
        for slot in (0..depth as usize).rev() {
            word[slot] = idx % k;
            idx /= k;
        }
        word
    };

    #[cfg(feature = "parallel")]
    {
        (0..total)
            .into_par_iter()
            .find_map_first(|idx| witness_from_word(gens, &decode(idx), threshold))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..total).find_map(|idx| witness_from_word(gens, &decode(idx), threshold))
    }
}

/// Deterministic search for a nonidentity element with
/// `0 < moved < n/3 - 2*sqrt(n)/3`, over all generator words of length up to
/// `max_depth`. Shorter words are exhausted before longer ones, so the first
/// hit is stable across runs.
pub fn find_witness(gens: &GeneratorSet, max_depth: u32) -> Option<MoverWitness> {
    let threshold = MoverThreshold::new(gens.degree() as u64);
    for depth in 1..=max_depth {
        if let Some(w) = search_depth(gens, depth, threshold) {
            return Some(w);
        }
    }
    None
}

/// Moved points of the permutation named by a witness word.
pub fn witness_permutation(gens: &GeneratorSet, witness: &MoverWitness) -> Permutation {
    let mut perm = Permutation::identity(gens.degree());
    for &(t, a) in &witness.word {
        let g = gens
            .iter()
            .find(|g| g.t == t && g.distance == a)
            .expect("witness word names stored generators");
        perm = perm.compose(&g.perm);
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_at_231() {
        // n = 231: threshold is about 66.87; 30 qualifies.
        let t = MoverThreshold::new(231);
        assert!(t.admits(30));
        assert!(!t.admits(67));
        assert_eq!(t.approx_milli() / 1000, 66);
    }

    #[test]
    fn threshold_at_perfect_square() {
        // n = 9: threshold is exactly 1, so nothing with >= 1 moved qualifies
        // strictly below it... moved must be < 1, impossible for moved > 0.
        let t = MoverThreshold::new(9);
        assert!(!t.admits(1));
        assert!(!t.admits(2));
        assert_eq!(t.approx_milli(), 1000);
    }

    #[test]
    fn threshold_rejects_30_at_100() {
        // n = 100: threshold is 80/3, and 30 >= 80/3.
        let t = MoverThreshold::new(100);
        assert!(!t.admits(30));
        assert!(t.admits(26));
        assert!(!t.admits(27)); // 27 > 80/3 = 26.67
    }

    #[test]
    fn quarter_comparison_boundary() {
        assert!(!MoverThreshold::new(64).exceeds_quarter());
        assert!(MoverThreshold::new(65).exceeds_quarter());
        for n in [231, 232, 1000, 10_000] {
            assert!(MoverThreshold::new(n).exceeds_quarter());
        }
    }

    #[test]
    fn integer_sqrt_is_exact() {
        for v in 0u128..2000 {
            let r = integer_sqrt(v);
            assert!(r * r <= v && (r + 1) * (r + 1) > v);
        }
        assert_eq!(integer_sqrt(231_000_000), 15198); // 15199^2 = 231009601 overshoots
    }
}
