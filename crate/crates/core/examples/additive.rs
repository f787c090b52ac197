//! Additive cost matrices `q_ij = a_i + b_j`, solved from sorted prefix sums.
//!
//! ```text
//! cargo run --release --example additive -- 2000
//! ```

use std::time::Instant;

use bqp::analysis::detect_additive;
use bqp::fixtures;
use bqp::generate::{generate_instance, Kind};
use bqp::io::format_solution;
use bqp::solver::solve_additive;

fn main() {
    let small = fixtures::tadd();
    let dec = detect_additive(small.q()).expect("fixture is additive");
    println!("a = {:?}\nb = {:?}", dec.a.iter().map(ToString::to_string).collect::<Vec<_>>(), dec.b.iter().map(ToString::to_string).collect::<Vec<_>>());
    print!("{}", format_solution(&solve_additive(&small, &dec).unwrap()));

    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let inst = generate_instance(Kind::Additive, n, n, 3, 100).unwrap();
    let dec = detect_additive(inst.q()).unwrap();
    let start = Instant::now();
    let s = solve_additive(&inst, &dec).unwrap();
    println!(
        "{n}x{n}: value {}, |x| = {}, |y| = {}, {:.1} ms",
        s.value,
        s.x.iter().filter(|&&v| v).count(),
        s.y.iter().filter(|&&v| v).count(),
        start.elapsed().as_secs_f64() * 1e3
    );
}
