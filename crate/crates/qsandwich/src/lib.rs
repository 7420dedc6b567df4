//! Entanglement witnesses from hyperplane sandwiches around the separable
//! states.
//!
//! For a reference entangled pure state in Schmidt form, every state `Q`
//! whose overlap `Tr(Q E)` with the reference projector `E` exceeds the
//! squared modulus of the largest Schmidt coefficient is entangled. The
//! geometry behind the inequality is a pair of parallel hyperplanes - a
//! sandwich - that contains every separable state, with the reference
//! projector strictly outside. This crate implements the witness, the
//! sandwich geometry, the closest-product-state distance, the partition
//! bound on the universal sandwich thickness, decoherence robustness of the
//! witness, and independent numerical oracles (alternating product-state
//! maximization, separable-mixture sampling, the partial-transpose check)
//! that verify each claim at desk scale.
//!
//! Entry points:
//!
//! - [`states::schmidt_state`] builds a reference state from Schmidt
//!   coefficients; [`states::maximally_entangled`] the uniform special case.
//! - [`witness::witness_check`] classifies a state against a reference.
//! - [`witness::build_sandwich`] exposes the plane geometry;
//!   [`witness::kappa`] the partition bound.
//! - [`channels::crossing_strength`] locates where decoherence defeats the
//!   witness.
//! - [`oracles`] holds the samplers and verification machinery.
//!
//! The `examples/` directory walks through each capability; the `qsandwich`
//! binary exposes the same operations as subcommands.

pub mod channels;
pub mod error;
pub mod linalg;
pub mod oracles;
pub mod states;
pub mod witness;

pub mod cli;
pub mod io;

pub use error::{Error, Result};
