//! Verdict assembly: transitivity and pair-transitivity orbits, the
//! few-mover witness, generator parities, and (within the degree bound) the
//! exact order, combined into a classification with its supporting
//! certificates.

use num_bigint::BigUint;
use num_traits::One;

use crate::counting::factorial;
use crate::permgroup::bochert::{find_witness, MoverThreshold, MoverWitness};
use crate::permgroup::bsgs::group_order;
use crate::permgroup::generators::GeneratorSet;
use crate::permgroup::orbit::{is_doubly_transitive, is_transitive};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The trivial group (including the single-tableau instance).
    Trivial,
    Symmetric,
    Alternating,
    /// Contains the alternating group but parity information is missing.
    AtLeastAlternating,
    /// Settled exactly to something smaller.
    Other(BigUint),
    /// Certificates failed and the degree exceeds the order bound.
    Unknown,
}

#[derive(Debug, Clone)]
pub struct Certificates {
    pub transitive: bool,
    /// `None` when the degree made the pair orbit unreasonable or undefined.
    pub doubly_transitive: Option<bool>,
    pub mover_witness: Option<MoverWitness>,
    pub threshold_milli: i64,
    pub odd_generators: usize,
    pub even_generators: usize,
    pub order: Option<BigUint>,
}

#[derive(Debug, Clone)]
pub struct GroupClassification {
    pub verdict: Verdict,
    pub certificates: Certificates,
}

#[derive(Debug, Clone)]
pub struct ClassifyConfig {
    /// Degrees up to this run the exact order computation.
    pub degree_bound: usize,
    /// Witness search explores generator words up to this length.
    pub witness_depth: u32,
    /// Degrees up to this run the ordered-pair orbit.
    pub pair_orbit_bound: usize,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            degree_bound: 5_000,
            witness_depth: 3,
            pair_orbit_bound: 5_000,
        }
    }
}

/// Classifies the group generated by `gens` on `n` points.
///
/// The certificate chain mirrors the mathematical argument: transitivity,
/// then double transitivity, then a few-mover element below the exact
/// threshold, with generator parity deciding between the two large verdicts.
/// Within the degree bound the order computation settles everything exactly;
/// the two routes are cross-checked when both apply.
pub fn classify_group(gens: &GeneratorSet, n: usize, cfg: &ClassifyConfig) -> GroupClassification {
    let perms = gens.perms();
    let odd_generators = gens.odd_count();
    let even_generators = gens.len() - odd_generators;

    let transitive = is_transitive(&perms, n);
    let doubly_transitive = if n >= 2 && n <= cfg.pair_orbit_bound {
        is_doubly_transitive(&perms, n).ok()
    } else {
        None
    };
    let mover_witness = if doubly_transitive == Some(true) {
        find_witness(gens, cfg.witness_depth)
    } else {
        None
    };
    let order = if n <= cfg.degree_bound {
        Some(group_order(&perms, n, cfg.degree_bound).expect("degree within bound"))
    } else {
        None
    };

    let certificates = Certificates {
        transitive,
        doubly_transitive,
        mover_witness: mover_witness.clone(),
        threshold_milli: MoverThreshold::new(n as u64).approx_milli(),
        odd_generators,
        even_generators,
        order: order.clone(),
    };

    let certificate_verdict = if n <= 1 || gens.is_empty() {
        Some(Verdict::Trivial)
    } else if transitive && doubly_transitive == Some(true) && mover_witness.is_some() {
        if odd_generators > 0 {
            Some(Verdict::Symmetric)
        } else {
            Some(Verdict::Alternating)
        }
    } else {
        None
    };

    let verdict = if let Some(order) = order {
        let full = factorial(n as u64);
        let exact = if order.is_one() {
            Verdict::Trivial
        } else if order == full {
            Verdict::Symmetric
        } else if BigUint::from(2u32) * &order == full {
            Verdict::Alternating
        } else {
            Verdict::Other(order)
        };
        if let Some(by_certificates) = certificate_verdict {
            assert_eq!(
                by_certificates, exact,
                "certificate route and order route disagree"
            );
        }
        exact
    } else if let Some(by_certificates) = certificate_verdict {
        by_certificates
    } else {
        Verdict::Unknown
    };

    // Verdict-certificate consistency.
    match &verdict {
        Verdict::Symmetric if n >= 2 => assert!(odd_generators > 0),
        Verdict::Alternating => assert_eq!(odd_generators, 0),
        _ => {}
    }

    GroupClassification {
        verdict,
        certificates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::SkewDiagram;
    use crate::params::{BrillNoetherParams, RamificationSequence};
    use crate::permgroup::generators::all_generators_seq;
    use crate::tableau::TableauSet;

    fn generators(g: u32, r: u32, d: u32, alpha: &[u32], beta: &[u32]) -> (GeneratorSet, usize) {
        let p = BrillNoetherParams::new(
            g,
            r,
            d,
            RamificationSequence::new(alpha.to_vec()).unwrap(),
            RamificationSequence::new(beta.to_vec()).unwrap(),
        )
        .unwrap();
        let diag = SkewDiagram::build(&p).unwrap();
        let tabs = TableauSet::enumerate(&diag, 100_000).unwrap();
        let n = tabs.len();
        (all_generators_seq(&tabs), n)
    }

    #[test]
    fn trivial_instance() {
        let (gens, n) = generators(0, 0, 0, &[0], &[0]);
        let c = classify_group(&gens, n, &ClassifyConfig::default());
        assert_eq!(c.verdict, Verdict::Trivial);
    }

    #[test]
    fn two_by_two_is_symmetric() {
        let (gens, n) = generators(4, 1, 3, &[0, 0], &[0, 0]);
        assert_eq!(n, 2);
        let c = classify_group(&gens, n, &ClassifyConfig::default());
        assert_eq!(c.verdict, Verdict::Symmetric);
        assert_eq!(c.certificates.order, Some(2u32.into()));
        assert!(c.certificates.transitive);
    }

    #[test]
    fn worked_example_is_symmetric_of_order_28_factorial() {
        let (gens, n) = generators(7, 1, 6, &[1, 0], &[2, 0]);
        assert_eq!(n, 28);
        let c = classify_group(&gens, n, &ClassifyConfig::default());
        assert_eq!(c.verdict, Verdict::Symmetric);
        assert_eq!(c.certificates.order, Some(factorial(28)));
        assert_eq!(c.certificates.doubly_transitive, Some(true));
        assert!(c.certificates.mover_witness.is_some());
    }

    #[test]
    fn unknown_when_everything_is_out_of_bounds() {
        let (gens, n) = generators(7, 1, 6, &[1, 0], &[2, 0]);
        let cfg = ClassifyConfig {
            degree_bound: 4,
            pair_orbit_bound: 4,
            witness_depth: 3,
        };
        let c = classify_group(&gens, n, &cfg);
        assert_eq!(c.verdict, Verdict::Unknown);
        assert!(c.certificates.order.is_none());
        assert!(c.certificates.doubly_transitive.is_none());
    }
}
