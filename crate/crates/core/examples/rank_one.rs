//! Rank-one instances with a hundred thousand variables per side, solved by
//! the merged breakpoint sweep without ever forming `Q`.
//!
//! ```text
//! cargo run --release --example rank_one -- 200000
//! ```

use std::time::Instant;

use bqp::generate::generate_rank_one_form;
use bqp::solver::rank_one::{pkp_breakpoints, solve_rank_one};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100_000);
    for size in [n / 4, n / 2, n] {
        let form = generate_rank_one_form(size, size, 7, 1000).expect("size is positive");
        let start = Instant::now();
        let s = solve_rank_one(&form);
        let elapsed = start.elapsed();
        assert_eq!(form.evaluate(&s.x, &s.y).unwrap(), s.value);
        println!(
            "m = n = {size:>7}: value {:>14}, {} h1 breakpoints, {:.1} ms",
            s.value.to_string(),
            pkp_breakpoints(&form).breakpoints().len(),
            elapsed.as_secs_f64() * 1e3
        );
    }
}
