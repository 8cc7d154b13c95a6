//! The permutation group generated by the swap involutions on canonically
//! indexed tableaux: generators, orbit machinery, parity and few-mover
//! certificates, exact order, and the final classification.

mod bochert;
mod bsgs;
mod classify;
mod generators;
mod orbit;
mod perm;

pub use bochert::{find_witness, witness_permutation, MoverThreshold, MoverWitness};
pub use bsgs::{group_order, BsgsError};
pub use classify::{classify_group, Certificates, ClassifyConfig, GroupClassification, Verdict};
pub use generators::{all_generators, all_generators_seq, swap_permutation, GeneratorSet, SwapGenerator};
#[cfg(feature = "parallel")]
pub use generators::all_generators_par;
pub use orbit::{is_doubly_transitive, is_transitive, orbit, OrbitError};
pub use perm::{Parity, Permutation};
