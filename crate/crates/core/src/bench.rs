//! Cross-validation harness: every algorithm on every instance, with a hard
//! failure when any two disagree on the optimal value.

use std::fmt::Write as _;
use std::time::Duration;

use crate::dispatch::{dispatch_solve, Algorithm, SolveOptions};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: Algorithm,
    pub value: Rational,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn to_text(&self) -> String {
        let width = self.rows.iter().map(|r| r.instance.len()).max().unwrap_or(0).max(8);
        let mut s = format!("{:<width$}  {:<10}  {:>16}  {:>12}\n", "instance", "algorithm", "value", "time_ms");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<width$}  {:<10}  {:>16}  {:>12.3}",
                r.instance,
                r.algorithm.name(),
                r.value.to_string(),
                r.elapsed.as_secs_f64() * 1e3
            );
        }
        s
    }

    /// One line per row: `instance=.. algorithm=.. value=.. time_ms=..`.
    pub fn to_kv(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                format!(
                    "instance={} algorithm={} value={} time_ms={:.3}\n",
                    r.instance,
                    r.algorithm,
                    r.value,
                    r.elapsed.as_secs_f64() * 1e3
                )
            })
            .collect()
    }
}

/// Solves each instance with each algorithm. Any error aborts; differing
/// values for one instance give [`Error::Disagreement`].
pub fn bench(instances: &[(String, Instance)], algorithms: &[Algorithm], opts: &SolveOptions) -> Result<BenchTable> {
    bench_with(instances, algorithms, |inst, algorithm| {
        dispatch_solve(inst, algorithm, opts).map(|r| (r.solution.value, r.elapsed))
    })
}

/// [`bench`] with a caller-supplied solver.
pub fn bench_with(
    instances: &[(String, Instance)],
    algorithms: &[Algorithm],
    mut solve: impl FnMut(&Instance, Algorithm) -> Result<(Rational, Duration)>,
) -> Result<BenchTable> {
    let mut table = BenchTable::default();
    for (name, inst) in instances {
        let first = table.rows.len();
        for &algorithm in algorithms {
            let (value, elapsed) = solve(inst, algorithm)?;
            table.rows.push(BenchRow {
                instance: name.clone(),
                algorithm,
                value,
                elapsed,
            });
        }
        let rows = &table.rows[first..];
        if rows.iter().any(|r| r.value != rows[0].value) {
            let values: Vec<String> = rows.iter().map(|r| format!("{}={}", r.algorithm, r.value)).collect();
            return Err(Error::Disagreement(format!("{name}: {}", values.join(", "))));
        }
    }
    Ok(table)
}
