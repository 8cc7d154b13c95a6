//! Chains of Schubert indices and their bijection with standard fillings.
//!
//! A valid chain starts at `alpha`, ends at the dual of `beta`, and each of
//! its `g` steps fixes exactly one index while incrementing the rest. The
//! fixed index of step `k` names the row receiving entry `k`, which is the
//! whole correspondence.

use thiserror::Error;

use crate::diagram::SkewDiagram;
use crate::params::{BrillNoetherParams, SchubertIndex};
use crate::tableau::StandardTableau;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("chain has {got} steps, expected g + 1 = {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("chain does not start at alpha")]
    WrongStart,
    #[error("chain does not end at the dual of beta")]
    WrongEnd,
    #[error("steps {at} -> {} are not a valid single-fix increment", at + 1)]
    InvalidStep { at: usize },
    #[error("row {row} has no empty box left for entry {entry}")]
    RowFull { row: u32, entry: u32 },
    #[error("entry {entry} lies outside the diagram's rows")]
    BadRow { entry: u32 },
    #[error("step {at} leaves the valid index range")]
    IndexOutOfRange { at: usize },
}

/// The sequence `alpha^(1), ..., alpha^(g+1)` of Schubert indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertChain {
    steps: Vec<SchubertIndex>,
}

impl SchubertChain {
    pub fn new(steps: Vec<SchubertIndex>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[SchubertIndex] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// If `b` fixes exactly one index of `a` and increments every other by one,
/// while staying a valid index for degree `d`, returns that fixed index.
pub fn valid_step(a: &SchubertIndex, b: &SchubertIndex, d: u32) -> Option<usize> {
    if a.len() != b.len() {
        return None;
    }
    if b.validate_against(a.rank(), d).is_err() {
        return None;
    }
    let mut fixed = None;
    for i in 0..a.len() {
        if b.get(i) == a.get(i) {
            if fixed.is_some() {
                return None;
            }
            fixed = Some(i);
        } else if b.get(i) != a.get(i) + 1 {
            return None;
        }
    }
    fixed
}

/// Membership test for the chain set: correct length, endpoints `alpha` and
/// `beta` dual, and a valid single-fix increment at every step.
pub fn validate_chain(chain: &SchubertChain, params: &BrillNoetherParams) -> bool {
    let g = params.g() as usize;
    if chain.len() != g + 1 {
        return false;
    }
    if chain.steps[0] != *params.alpha() {
        return false;
    }
    if chain.steps[g] != params.beta_dual() {
        return false;
    }
    chain
        .steps
        .windows(2)
        .all(|w| valid_step(&w[0], &w[1], params.d()).is_some())
}

/// Builds the standard filling of a valid chain: entry `k` goes to the first
/// empty box of row `r - j + 1`, where `j` is the fixed index of step `k`.
pub fn tableau_from_chain(
    chain: &SchubertChain,
    diag: &SkewDiagram,
    params: &BrillNoetherParams,
) -> Result<StandardTableau, ChainError> {
    let g = params.g() as usize;
    if chain.len() != g + 1 {
        return Err(ChainError::WrongLength {
            expected: g + 1,
            got: chain.len(),
        });
    }
    if chain.steps[0] != *params.alpha() {
        return Err(ChainError::WrongStart);
    }
    if chain.steps[g] != params.beta_dual() {
        return Err(ChainError::WrongEnd);
    }

    let r = params.r();
    let mut row_entries: Vec<Vec<u32>> = vec![Vec::new(); diag.num_rows()];
    for k in 1..=g {
        let fixed = valid_step(&chain.steps[k - 1], &chain.steps[k], params.d())
            .ok_or(ChainError::InvalidStep { at: k - 1 })?;
        let row = r - fixed as u32 + 1;
        let interval = diag.row(row);
        if row_entries[row as usize - 1].len() as u32 >= interval.len {
            return Err(ChainError::RowFull {
                row,
                entry: k as u32,
            });
        }
        row_entries[row as usize - 1].push(k as u32);
    }

    let entries: Vec<u32> = row_entries.into_iter().flatten().collect();
    let tableau = StandardTableau::try_from_entries(diag, entries)
        .expect("a valid chain always yields a standard filling");
    Ok(tableau)
}

/// Reads the chain back off a standard filling: entry `k` in row `i` fixes
/// index `r + 1 - i` at step `k`.
pub fn chain_from_tableau(
    tableau: &StandardTableau,
    diag: &SkewDiagram,
    params: &BrillNoetherParams,
) -> Result<SchubertChain, ChainError> {
    let g = params.g();
    let r = params.r();
    let d = params.d();
    let mut steps = Vec::with_capacity(g as usize + 1);
    steps.push(params.alpha().clone());
    for k in 1..=g {
        let pos = tableau
            .position_of(diag, k)
            .ok_or(ChainError::BadRow { entry: k })?;
        let fixed = (r + 1 - pos.row) as usize;
        let prev = steps.last().unwrap();
        let next: Vec<u32> = prev
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &e)| if i == fixed { e } else { e + 1 })
            .collect();
        let next = SchubertIndex::new(next).map_err(|_| ChainError::IndexOutOfRange {
            at: k as usize - 1,
        })?;
        next.validate_against(r, d)
            .map_err(|_| ChainError::IndexOutOfRange { at: k as usize - 1 })?;
        steps.push(next);
    }
    if steps[g as usize] != params.beta_dual() {
        return Err(ChainError::WrongEnd);
    }
    Ok(SchubertChain::new(steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::RamificationSequence;
    use crate::tableau::TableauSet;

    fn seq(entries: &[u32]) -> SchubertIndex {
        RamificationSequence::new(entries.to_vec()).unwrap()
    }

    fn worked_example() -> (BrillNoetherParams, SkewDiagram) {
        let p = BrillNoetherParams::new(7, 1, 6, seq(&[1, 0]), seq(&[2, 0])).unwrap();
        let d = SkewDiagram::build(&p).unwrap();
        (p, d)
    }

    fn worked_example_chain() -> SchubertChain {
        SchubertChain::new(vec![
            seq(&[1, 0]),
            seq(&[2, 0]),
            seq(&[2, 1]),
            seq(&[3, 1]),
            seq(&[3, 2]),
            seq(&[3, 3]),
            seq(&[4, 3]),
            seq(&[5, 3]),
        ])
    }

    #[test]
    fn valid_step_examples() {
        assert_eq!(valid_step(&seq(&[1, 0]), &seq(&[2, 0]), 6), Some(1));
        assert_eq!(valid_step(&seq(&[2, 0]), &seq(&[2, 1]), 6), Some(0));
        assert_eq!(valid_step(&seq(&[1, 0]), &seq(&[1, 0]), 6), None);
        // Incrementing past d - r is not a valid index.
        assert_eq!(valid_step(&seq(&[5, 3]), &seq(&[6, 3]), 6), None);
        // Two fixed indices.
        assert_eq!(valid_step(&seq(&[2, 1]), &seq(&[2, 1]), 6), None);
        // A jump of two.
        assert_eq!(valid_step(&seq(&[1, 0]), &seq(&[3, 0]), 6), None);
    }

    #[test]
    fn chain_places_entries_like_the_worked_example() {
        let (p, diag) = worked_example();
        let chain = worked_example_chain();
        assert!(validate_chain(&chain, &p));
        let t = tableau_from_chain(&chain, &diag, &p).unwrap();
        assert_eq!(
            t.rows(&diag),
            vec![(2, &[1, 3, 6, 7][..]), (1, &[2, 4, 5][..])]
        );
    }

    #[test]
    fn chain_round_trips_through_tableau() {
        let (p, diag) = worked_example();
        let chain = worked_example_chain();
        let t = tableau_from_chain(&chain, &diag, &p).unwrap();
        let back = chain_from_tableau(&t, &diag, &p).unwrap();
        assert_eq!(back, chain);
    }

    #[test]
    fn every_tableau_round_trips() {
        let (p, diag) = worked_example();
        let set = TableauSet::enumerate(&diag, 1000).unwrap();
        for t in set.iter() {
            let chain = chain_from_tableau(t, &diag, &p).unwrap();
            assert!(validate_chain(&chain, &p));
            let t2 = tableau_from_chain(&chain, &diag, &p).unwrap();
            assert_eq!(&t2, t);
        }
    }

    #[test]
    fn invalid_chains_are_rejected() {
        let (p, _) = worked_example();
        let mut bad_end = worked_example_chain();
        bad_end.steps[7] = seq(&[4, 4]);
        assert!(!validate_chain(&bad_end, &p));

        let mut double_jump = worked_example_chain();
        double_jump.steps[1] = seq(&[3, 2]);
        assert!(!validate_chain(&double_jump, &p));

        let short = SchubertChain::new(vec![seq(&[1, 0])]);
        assert!(!validate_chain(&short, &p));
    }

    #[test]
    fn single_row_chain_fixes_the_only_index() {
        // For r = 0 every step fixes the single index, so the chain is
        // constant at alpha = dual(beta).
        let p = BrillNoetherParams::new(3, 0, 0, seq(&[0]), seq(&[0])).unwrap();
        let diag = SkewDiagram::build(&p).unwrap();
        let set = TableauSet::enumerate(&diag, 10).unwrap();
        let chain = chain_from_tableau(set.get(0), &diag, &p).unwrap();
        assert_eq!(chain.steps().len(), 4);
        for w in chain.steps().windows(2) {
            assert_eq!(valid_step(&w[0], &w[1], 0), Some(0));
        }
        assert_eq!(chain.steps()[3], seq(&[0]));
    }

    #[test]
    fn empty_instance_chain_is_the_single_endpoint() {
        let p = BrillNoetherParams::new(0, 0, 0, seq(&[0]), seq(&[0])).unwrap();
        let diag = SkewDiagram::build(&p).unwrap();
        let chain = SchubertChain::new(vec![seq(&[0])]);
        assert!(validate_chain(&chain, &p));
        let t = tableau_from_chain(&chain, &diag, &p).unwrap();
        assert!(t.entries().is_empty());
    }
}
