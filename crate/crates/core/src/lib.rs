//! Frobenius-distance similarity of graphs and symmetric matrices.
//!
//! Given symmetric `A`, `B` of equal order `n`, the distance is
//! `min_π ‖A^π − B‖_F` over all vertex permutations, where
//! `A^π[π(i)][π(j)] = A[i][j]`. The crate provides:
//!
//! - [`exact`]: brute-force oracles over permutations and ordered partitions.
//! - [`pathtree`]: a polynomial dynamic program for a path against a tree.
//! - [`qvp`]: the reduction from positive semidefinite inputs to a quadratic
//!   vector-partition instance, and the back-map to distances.
//! - [`geometry`]: exact orientation tests with symbolic perturbation.
//! - [`solver`]: hyperplane enumeration over partitions, and the end-to-end
//!   matrix pipeline.
//! - [`generators`]: reduction instances with planted certificates.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod exact;
pub mod generators;
pub mod geometry;
pub mod matrix;
pub mod pathtree;
pub mod qvp;
pub mod solver;

pub use error::{Error, Result};
pub use exact::SimResult;
pub use matrix::{Graph, Permutation, SymMatrix};
pub use qvp::{OrderedPartition, QvpInstance};
