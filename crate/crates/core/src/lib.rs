//! Exact solvers for bipartite unconstrained 0-1 quadratic programs:
//! maximize `xᵀQy + c·x + d·y + c0` over `x ∈ {0,1}^m`, `y ∈ {0,1}^n`.
//!
//! All arithmetic is exact ([`Rational`]). General instances are NP-hard;
//! the solvers here cover the polynomial special cases (rank one, fixed
//! rank, additive, nonnegative, few negative entries) and small `m`.

pub mod analysis;
pub mod bench;
pub mod dispatch;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod io;
pub mod matrix;
pub mod rational;
pub mod solver;
pub mod transform;

pub use error::{Error, Result};
pub use instance::{CutInstance, Instance, Solution};
pub use matrix::Matrix;
pub use rational::Rational;
