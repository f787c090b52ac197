//! What the analyzer detects on each kind of generated instance, and which
//! solver `auto` picks for it.
//!
//! ```text
//! cargo run --example structure_analysis
//! ```

use bqp::analysis::analyze;
use bqp::dispatch::{choose, SolveOptions};
use bqp::generate::{generate_instance, Kind};

fn main() {
    let opts = SolveOptions::default();
    let kinds = [Kind::General, Kind::Rank(1), Kind::Rank(3), Kind::Additive, Kind::Nonnegative, Kind::SparseNegative(2)];
    for kind in kinds {
        let inst = generate_instance(kind, 30, 40, 2, 10).unwrap();
        let report = analyze(&inst);
        let solver = choose(&report, &opts).map_or("none within limits", |a| a.name());
        println!(
            "{:<17} rank {:>2}  additive {:<5}  nonnegative {:<5}  eliminator {:>2}  -> {solver}",
            kind.to_string(),
            report.rank,
            report.additive.is_some(),
            report.nonnegative,
            report.eliminator.size()
        );
    }
}
