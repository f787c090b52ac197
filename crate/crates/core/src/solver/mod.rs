//! Exact solvers, one per tractable structure, plus the enumeration oracle.

pub mod additive;
pub mod cut;
pub mod enumerate;
pub mod fixed_rank;
pub mod flow;
pub mod rank_one;

pub use additive::solve_additive;
pub use cut::{build_cut_network, solve_nonnegative, solve_with_eliminator, ReducedInstance};
pub use enumerate::{best_y_for_x, solve_enumeration, solve_exhaustive};
pub use fixed_rank::{solve_fixed_rank, solve_fixed_rank_with, BasisStructure, FixedRankOptions};
pub use flow::{max_flow, FlowNetwork};
pub use rank_one::{breakpoint_table, pkp_breakpoints, solve_rank_one, solve_rank_one_zero_linear, ulp_breakpoints, ulp_initial_zero_set, BreakpointTrack, RankOneForm};
