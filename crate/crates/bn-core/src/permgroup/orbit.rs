//! Orbit closures under a generator list: point orbits for transitivity and
//! ordered-pair orbits for double transitivity.

use thiserror::Error;

use crate::permgroup::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("double transitivity is undefined for degree {n} < 2")]
    DegreeTooSmall { n: usize },
}

/// Breadth-first closure of `start` under the generators, in discovery order.
pub fn orbit(start: u32, gens: &[Permutation], n: usize) -> Vec<u32> {
    let mut seen = vec![false; n];
    let mut queue = vec![start];
    seen[start as usize] = true;
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                queue.push(y);
            }
        }
    }
    queue
}

/// True iff the orbit of index 0 covers all `n` points.
pub fn is_transitive(gens: &[Permutation], n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    orbit(0, gens, n) .len() == n
}

/// True iff the componentwise action on ordered pairs of distinct points is
/// transitive, decided by the orbit of `(0, 1)`.
pub fn is_doubly_transitive(gens: &[Permutation], n: usize) -> Result<bool, OrbitError> {
    if n < 2 {
        return Err(OrbitError::DegreeTooSmall { n });
    }
    let target = n * (n - 1);
    let mut seen = vec![false; n * n];
    let mut queue: Vec<(u32, u32)> = vec![(0, 1)];
    seen[1] = true; // encoded (x, y) = x * n + y
    let mut head = 0;
    while head < queue.len() {
        let (x, y) = queue[head];
        head += 1;
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let code = gx as usize * n + gy as usize;
            if !seen[code] {
                seen[code] = true;
                queue.push((gx, gy));
            }
        }
    }
    Ok(queue.len() == target)
}
