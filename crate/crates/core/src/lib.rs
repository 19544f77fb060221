//! Finite-group computations at desk scale: element-order spectra, order
//! classes S_n, same-order types α(G), structural classification (nilpotent,
//! solvable, Schmidt, Frobenius, 2-Frobenius, Y_t), and an exhaustive sweep
//! harness over catalogs of small groups.
//!
//! Groups are canonical element-indexed multiplication tables; permutation
//! generators, Cayley tables, named families, direct products and quotients
//! are ingestion routes. Everything is exact integer arithmetic.

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod named;
pub mod perm;
pub mod spectra;
pub mod structure;
pub mod verify;

pub use error::{GroupError, Result};
pub use group::{Bounds, FiniteGroup, Subgroup};
pub use groupspec::GroupSpec;
pub use perm::Permutation;
