//! Exact tools for the moment cones of compact contact toric manifolds.
//!
//! The crate validates rational polyhedral cones as moment cones, classifies
//! the underlying manifolds, and computes fundamental groups by independent
//! routes that are cross-checked against each other:
//!
//! * a gcd of facet-normal determinants read off at any ray of a good cone,
//! * the cokernel of the normal matrix (a lattice quotient in Smith form),
//! * gcds of lattice lengths of descending edges on an integral Delzant
//!   polytope obtained by slicing the cone at Reeb height one.
//!
//! All arithmetic is exact: arbitrary-precision integers throughout, with
//! rationals confined to the polytope layer.
//!
//! The `examples/` directory of this crate is the guided tour; each file is a
//! runnable walk through one capability (`cargo run --example lens_spaces`,
//! etc.). The thin `contact-pi1` binary exposes the same pipeline on JSON
//! documents for scripting.

pub mod cone;
pub mod error;
pub mod lattice;
pub mod pi1;
pub mod polytope;

pub mod cli;

pub use error::{Error, Result};
