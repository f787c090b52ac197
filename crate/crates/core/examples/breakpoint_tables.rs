//! Breakpoint tables of the 5×7 rank-one instance shipped in `fixtures/`.
//!
//! ```text
//! cargo run --example breakpoint_tables
//! ```

use bqp::fixtures;
use bqp::io::bits;
use bqp::solver::rank_one::{breakpoint_table, pkp_breakpoints, solve_rank_one, ulp_breakpoints};

fn main() {
    let form = fixtures::sample_form();
    print!("{}", breakpoint_table(&form));

    let pkp = pkp_breakpoints(&form);
    let ulp = ulp_breakpoints(&form);
    println!("# candidates h1(λ) + h2(λ)");
    for (lambda, h1) in pkp.breakpoints().iter().zip(pkp.values()) {
        let h2 = ulp.linear_value_at(lambda);
        println!("{lambda} {h1} + {h2} = {}", &h1 + &h2);
    }

    let s = solve_rank_one(&form);
    println!("optimum {} at x = {}, y = {}", s.value, bits(&s.x), bits(&s.y));
}
