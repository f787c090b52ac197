//! Nonnegative instances by one max-flow, and instances with a few negative
//! entries by fixing a minimum eliminator first.
//!
//! ```text
//! cargo run --release --example min_cut
//! ```

use std::time::Instant;

use bqp::analysis::min_negative_eliminator;
use bqp::generate::{generate_instance, Kind};
use bqp::solver::cut::{build_cut_network, solve_nonnegative, solve_with_eliminator};
use bqp::solver::enumerate::solve_exhaustive;

fn main() {
    for size in [50, 100, 200] {
        let inst = generate_instance(Kind::Nonnegative, size, size, 1, 100).unwrap();
        let (net, offset) = build_cut_network(&inst).unwrap();
        let start = Instant::now();
        let s = solve_nonnegative(&inst).unwrap();
        println!(
            "nonnegative {size}x{size}: {} nodes, {} arcs, offset {offset}, value {}, {:.1} ms",
            net.nodes(),
            net.arcs().len(),
            s.value,
            start.elapsed().as_secs_f64() * 1e3
        );
    }

    for k in [1, 2, 4] {
        let inst = generate_instance(Kind::SparseNegative(k), 8, 10, 5, 10).unwrap();
        let elim = min_negative_eliminator(inst.q());
        let s = solve_with_eliminator(&inst, &elim, 25).unwrap();
        assert_eq!(s.value, solve_exhaustive(&inst, 24).unwrap().value);
        println!(
            "{k} negative entries: eliminator rows {:?} cols {:?}, value {}",
            elim.rows, elim.cols, s.value
        );
    }
}
