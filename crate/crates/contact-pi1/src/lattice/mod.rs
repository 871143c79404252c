//! Exact integer linear algebra: vectors, matrices, Smith normal form and
//! finitely generated abelian groups in canonical form.
//!
//! Everything here is arbitrary precision. Determinants of near-singular
//! integer matrices and the invariant factors of lattice quotients are exactly
//! the quantities the rest of the crate turns into topological answers, so
//! there is no floating point anywhere in this module (or this crate).

mod group;
mod matrix;
mod smith;
mod vector;

pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use smith::{
    cokernel, complete_to_unimodular, kernel_basis, minor_gcd, smith_normal_form,
    SmithDecomposition,
};
pub use vector::{gcd_all, primitive_part, IntVector};
