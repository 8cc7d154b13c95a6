//! Combinatorics of limit linear series with ramification at two marked
//! points, at the scale where everything can be checked exactly: the skew
//! diagram of an instance, its standard fillings, the chains of Schubert
//! indices they encode, the permutation group generated by entry-swap
//! involutions on the filling set, and the classification of that group
//! with machine-checkable certificates.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`params::BrillNoetherParams`] validates `(g, r, d, alpha, beta)` and
//!    computes the adjusted count `rho`;
//! 2. [`diagram::SkewDiagram`] realizes the `rho = 0` instance as a skew
//!    shape with `g` boxes;
//! 3. [`tableau::TableauSet`] enumerates its standard fillings, checked
//!    against the determinant count in [`counting`];
//! 4. [`schubert`] converts fillings to and from index chains;
//! 5. [`permgroup`] builds the swap involutions and classifies the group
//!    they generate;
//! 6. [`criteria`] evaluates the hypothesis sets under which the
//!    classification is predicted.
//!
//! With the default `parallel` feature, generator construction and witness
//! search distribute over threads; results are identical to the sequential
//! fallback.

pub mod counting;
pub mod criteria;
pub mod diagram;
pub mod params;
pub mod permgroup;
pub mod schubert;
pub mod tableau;

pub use diagram::{BoxCoord, DiagramError, DiagramStats, RowInterval, SkewDiagram};
pub use params::{BrillNoetherParams, RamificationSequence, SchubertIndex, ValidationError};
pub use schubert::{
    chain_from_tableau, tableau_from_chain, valid_step, validate_chain, ChainError, SchubertChain,
};
pub use tableau::{
    canonical_compare, max_tableau, min_tableau, StandardTableau, TableauError, TableauSet,
};
