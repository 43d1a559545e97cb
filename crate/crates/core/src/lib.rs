//! Symmetric submodular function minimization through alpha-orderings.
//!
//! A set function `f` on a ground set `V` is accessed only through an
//! evaluation oracle ([`setfn::SetFunctionOracle`]) that counts its calls.
//! For `alpha` in `[-1, 1]` the last two elements of an alpha-ordering
//! ([`ordering`]) form a contractible pair, and contracting such pairs until
//! two elements remain yields a nontrivial minimizer ([`minimize::opt_set`]).
//! The [`verify`] module checks the underlying pair properties and
//! inequalities by exhaustive enumeration, and [`instances`] supplies graphs,
//! random families and the counterexamples for `alpha` outside that range.

#![forbid(unsafe_code)]

pub mod error;
pub mod instances;
pub mod minimize;
pub mod ordering;
pub mod setfn;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use minimize::{opt_set, MinimizerResult};
pub use ordering::{build_alpha_ordering, AlphaOrdering};
pub use setfn::SetFunctionOracle;
pub use subset::{GroundSet, Subset};

/// Absolute slack for every inequality and equality check.
pub const EPS: f64 = 1e-9;
