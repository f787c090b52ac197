//! Fixed-rank solver: candidate counts against the `C(m, p)·2^p` bound, with
//! and without the dual-feasibility filter.
//!
//! ```text
//! cargo run --example fixed_rank
//! ```

use bqp::generate::{generate_instance, Kind};
use bqp::solver::enumerate::solve_exhaustive;
use bqp::solver::fixed_rank::{candidate_bound, solve_fixed_rank_with, FixedRankOptions};

fn main() {
    let filtered = FixedRankOptions::default();
    let superset = FixedRankOptions { dual_filter: false, ..filtered };
    println!("{:>2} {:>2} {:>2} {:>10} {:>10} {:>8} {:>8}", "m", "n", "p", "value", "candidates", "superset", "bound");
    for (m, n, p) in [(6, 8, 1), (6, 8, 2), (8, 8, 2), (8, 10, 3), (10, 10, 3)] {
        let inst = generate_instance(Kind::Rank(p), m, n, 11, 10).unwrap();
        let (s, stats) = solve_fixed_rank_with(&inst, &filtered).unwrap();
        let (wide, wide_stats) = solve_fixed_rank_with(&inst, &superset).unwrap();
        assert_eq!(s.value, wide.value);
        assert_eq!(s.value, solve_exhaustive(&inst, 24).unwrap().value);
        println!(
            "{m:>2} {n:>2} {p:>2} {:>10} {:>10} {:>8} {:>8}",
            s.value.to_string(),
            stats.candidates,
            wide_stats.candidates,
            candidate_bound(m, p)
        );
    }
}
