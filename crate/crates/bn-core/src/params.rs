//! Instance parameters: ramification sequences and the `(g, r, d, alpha, beta)`
//! tuple, together with the adjusted count `rho` and sequence duality.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A structural or bound violation in instance parameters.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("ramification sequence is empty")]
    EmptySequence,
    #[error("ramification sequence has {got} entries, expected r + 1 = {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("ramification sequence is not nonincreasing at index {index}")]
    NotNonincreasing { index: usize },
    #[error("leading entry {entry} exceeds d - r = {bound}")]
    LeadingEntryTooLarge { entry: i64, bound: i64 },
    #[error("g - d + r = {value} is negative")]
    NegativeWidth { value: i64 },
    #[error("cannot parse sequence entry {text:?}")]
    UnparsableEntry { text: String },
}

/// A nonincreasing sequence of nonnegative integers `(a_0, ..., a_r)`.
///
/// The same shape serves as a Schubert index; bounds against an ambient
/// `(r, d)` are checked separately with [`RamificationSequence::validate_against`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RamificationSequence {
    entries: Vec<u32>,
}

/// A Schubert index has exactly the shape and bounds of a ramification sequence.
pub type SchubertIndex = RamificationSequence;

impl RamificationSequence {
    /// Builds a sequence, rejecting empty or non-nonincreasing input.
    pub fn new(entries: Vec<u32>) -> Result<Self, ValidationError> {
        if entries.is_empty() {
            return Err(ValidationError::EmptySequence);
        }
        for i in 1..entries.len() {
            if entries[i] > entries[i - 1] {
                return Err(ValidationError::NotNonincreasing { index: i });
            }
        }
        Ok(Self { entries })
    }

    /// The all-zero sequence of length `r + 1`.
    pub fn zeros(r: u32) -> Self {
        Self {
            entries: vec![0; r as usize + 1],
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rank of the ambient space: the sequence has `r + 1` entries.
    pub fn rank(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries[i]
    }

    /// Sum of the entries, `|a|`.
    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|&e| e == self.entries[0])
    }

    /// Checks length and the bound `d - r >= a_0` against an ambient `(r, d)`.
    pub fn validate_against(&self, r: u32, d: u32) -> Result<(), ValidationError> {
        let expected = r as usize + 1;
        if self.entries.len() != expected {
            return Err(ValidationError::WrongLength {
                expected,
                got: self.entries.len(),
            });
        }
        let bound = i64::from(d) - i64::from(r);
        if i64::from(self.entries[0]) > bound {
            return Err(ValidationError::LeadingEntryTooLarge {
                entry: i64::from(self.entries[0]),
                bound,
            });
        }
        Ok(())
    }

    /// The dual sequence with entry `i` equal to `d - r - a_{r-i}`.
    ///
    /// Requires the sequence to be valid against `(rank, d)`; duality is an
    /// involution and preserves validity.
    pub fn dual(&self, d: u32) -> Self {
        let bound = d - self.rank();
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|&e| bound - e)
            .collect::<Vec<_>>();
        Self { entries }
    }

    /// The increasing vanishing-sequence view, `a_{r-i} = alpha_i + (r - i)`.
    pub fn vanishing_sequence(&self) -> Vec<u32> {
        let r = self.rank();
        (0..=r)
            .map(|i| self.entries[(r - i) as usize] + i)
            .collect()
    }
}

impl fmt::Display for RamificationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for RamificationSequence {
    type Err = ValidationError;

    /// Parses the comma-separated form, e.g. `"3,1,0"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let value = part
                .parse::<u32>()
                .map_err(|_| ValidationError::UnparsableEntry {
                    text: part.to_string(),
                })?;
            entries.push(value);
        }
        Self::new(entries)
    }
}

/// The validated tuple `(g, r, d, alpha, beta)`.
///
/// Construction enforces `g - d + r >= 0` and both sequences' shape and
/// bounds; the zero check on [`BrillNoetherParams::rho`] is deferred to
/// diagram construction so that `rho` itself stays total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrillNoetherParams {
    g: u32,
    r: u32,
    d: u32,
    alpha: RamificationSequence,
    beta: RamificationSequence,
}

impl BrillNoetherParams {
    pub fn new(
        g: u32,
        r: u32,
        d: u32,
        alpha: RamificationSequence,
        beta: RamificationSequence,
    ) -> Result<Self, ValidationError> {
        let width = i64::from(g) - i64::from(d) + i64::from(r);
        if width < 0 {
            return Err(ValidationError::NegativeWidth { value: width });
        }
        alpha.validate_against(r, d)?;
        beta.validate_against(r, d)?;
        Ok(Self { g, r, d, alpha, beta })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn alpha(&self) -> &RamificationSequence {
        &self.alpha
    }

    pub fn beta(&self) -> &RamificationSequence {
        &self.beta
    }

    /// `g - d + r`, the width of the unramified rectangle.
    pub fn width(&self) -> u32 {
        (i64::from(self.g) - i64::from(self.d) + i64::from(self.r)) as u32
    }

    /// The adjusted count `g - (r+1)(g-d+r) - |alpha| - |beta|`.
    pub fn rho(&self) -> i64 {
        i64::from(self.g)
            - i64::from(self.r + 1) * i64::from(self.width())
            - self.alpha.weight() as i64
            - self.beta.weight() as i64
    }

    /// The dual of `beta`, i.e. the final index of every valid chain.
    pub fn beta_dual(&self) -> RamificationSequence {
        self.beta.dual(self.d)
    }
}

impl fmt::Display for BrillNoetherParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(g={}, r={}, d={}, alpha={}, beta={})",
            self.g, self.r, self.d, self.alpha, self.beta
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[u32]) -> RamificationSequence {
        RamificationSequence::new(entries.to_vec()).unwrap()
    }

    fn params(g: u32, r: u32, d: u32, alpha: &[u32], beta: &[u32]) -> BrillNoetherParams {
        BrillNoetherParams::new(g, r, d, seq(alpha), seq(beta)).unwrap()
    }

    #[test]
    fn rho_worked_example() {
        assert_eq!(params(7, 1, 6, &[1, 0], &[2, 0]).rho(), 0);
    }

    #[test]
    fn rho_trivial_instance() {
        assert_eq!(params(0, 0, 0, &[0], &[0]).rho(), 0);
    }

    #[test]
    fn rho_constant_instance() {
        assert_eq!(params(12, 2, 12, &[1, 1, 1], &[1, 1, 1]).rho(), 0);
    }

    #[test]
    fn rho_can_be_nonzero() {
        // 8 - 2*(8-6+1) - 1 - 2 = -1
        assert_eq!(params(8, 1, 6, &[1, 0], &[2, 0]).rho(), -1);
    }

    #[test]
    fn sequence_rejects_increase() {
        assert_eq!(
            RamificationSequence::new(vec![1, 2]),
            Err(ValidationError::NotNonincreasing { index: 1 })
        );
    }

    #[test]
    fn sequence_rejects_wrong_length() {
        let s = seq(&[1, 0]);
        assert_eq!(
            s.validate_against(2, 6),
            Err(ValidationError::WrongLength { expected: 3, got: 2 })
        );
    }

    #[test]
    fn sequence_rejects_bound() {
        let s = seq(&[5, 0]);
        assert_eq!(
            s.validate_against(1, 5),
            Err(ValidationError::LeadingEntryTooLarge { entry: 5, bound: 4 })
        );
    }

    #[test]
    fn params_reject_negative_width() {
        assert_eq!(
            BrillNoetherParams::new(1, 0, 2, seq(&[0]), seq(&[0])),
            Err(ValidationError::NegativeWidth { value: -1 })
        );
    }

    #[test]
    fn dual_worked_example() {
        // beta = (2,0) with d = 6, r = 1 dualizes to (5,3).
        assert_eq!(seq(&[2, 0]).dual(6), seq(&[5, 3]));
    }

    #[test]
    fn dual_of_zero_is_constant() {
        assert_eq!(seq(&[0, 0, 0]).dual(7), seq(&[5, 5, 5]));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s: RamificationSequence = "3,1,0".parse().unwrap();
        assert_eq!(s.entries(), &[3, 1, 0]);
        assert_eq!(s.to_string(), "3,1,0");
        assert!("3,1,2".parse::<RamificationSequence>().is_err());
        assert!("a,b".parse::<RamificationSequence>().is_err());
    }

    #[test]
    fn vanishing_sequence_view() {
        // alpha_i = a_{r-i} - (r-i) inverted: (1,0) over r=1 -> a = (0, 2).
        assert_eq!(seq(&[1, 0]).vanishing_sequence(), vec![0, 2]);
        assert_eq!(seq(&[2, 0]).vanishing_sequence(), vec![0, 3]);
    }
}
