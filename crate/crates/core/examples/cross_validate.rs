//! Every applicable solver on a batch of small instances; any disagreement
//! aborts with the differing values.
//!
//! ```text
//! cargo run --example cross_validate
//! ```

use bqp::bench::bench;
use bqp::dispatch::{Algorithm, SolveOptions};
use bqp::generate::{generate_instance, Kind};

fn main() {
    let opts = SolveOptions::default();
    let suites: [(Kind, &[Algorithm]); 5] = [
        (Kind::Rank(1), &[Algorithm::Oracle, Algorithm::Rank1, Algorithm::RankP, Algorithm::Enum]),
        (Kind::Rank(2), &[Algorithm::Oracle, Algorithm::RankP, Algorithm::Enum]),
        (Kind::Additive, &[Algorithm::Oracle, Algorithm::Additive, Algorithm::RankP]),
        (Kind::Nonnegative, &[Algorithm::Oracle, Algorithm::MinCut, Algorithm::Eliminator]),
        (Kind::SparseNegative(3), &[Algorithm::Oracle, Algorithm::Eliminator, Algorithm::Enum]),
    ];
    for (kind, algorithms) in suites {
        let instances: Vec<_> = (0..20)
            .map(|seed| (format!("{kind}-{seed}"), generate_instance(kind, 5, 6, seed, 10).unwrap()))
            .collect();
        let table = bench(&instances, algorithms, &opts).unwrap_or_else(|e| panic!("{e}"));
        println!("{kind}: {} instances, {} runs agree", instances.len(), table.rows.len());
    }
    let sample = bench(
        &[("rank2".into(), generate_instance(Kind::Rank(2), 6, 8, 1, 10).unwrap())],
        &[Algorithm::Oracle, Algorithm::Auto, Algorithm::Enum],
        &opts,
    )
    .unwrap();
    print!("{}", sample.to_text());
}
