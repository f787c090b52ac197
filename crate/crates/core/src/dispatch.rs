//! Picks a solver from the detected structure, or runs a named one.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::analysis::{analyze, detect_additive, min_negative_eliminator, AnalysisReport};
use crate::error::{Error, Result};
use crate::instance::{normalize_orientation, Instance, Solution};
use crate::io::bits;
use crate::solver::cut::{solve_nonnegative, solve_with_eliminator, DEFAULT_ELIMINATOR_LIMIT};
use crate::solver::enumerate::{solve_enumeration, solve_exhaustive, DEFAULT_M_LIMIT, DEFAULT_ORACLE_LIMIT};
use crate::solver::fixed_rank::{solve_fixed_rank_with, FixedRankOptions, DEFAULT_P_LIMIT};
use crate::solver::rank_one::{solve_rank_one, RankOneForm};
use crate::solver::solve_additive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Auto,
    Oracle,
    Enum,
    Rank1,
    RankP,
    Additive,
    MinCut,
    Eliminator,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Auto,
        Algorithm::Oracle,
        Algorithm::Enum,
        Algorithm::Rank1,
        Algorithm::RankP,
        Algorithm::Additive,
        Algorithm::MinCut,
        Algorithm::Eliminator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Oracle => "oracle",
            Algorithm::Enum => "enum",
            Algorithm::Rank1 => "rank1",
            Algorithm::RankP => "rankp",
            Algorithm::Additive => "additive",
            Algorithm::MinCut => "mincut",
            Algorithm::Eliminator => "eliminator",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown algorithm '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub p_limit: usize,
    pub m_limit: usize,
    pub eliminator_limit: usize,
    pub oracle_limit: usize,
    pub dual_filter: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            p_limit: DEFAULT_P_LIMIT,
            m_limit: DEFAULT_M_LIMIT,
            eliminator_limit: DEFAULT_ELIMINATOR_LIMIT,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            dual_filter: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub analysis: AnalysisReport,
    /// The solver that actually ran (never `Auto`).
    pub algorithm: Algorithm,
    pub solution: Solution,
    pub elapsed: Duration,
}

impl Report {
    pub fn to_kv(&self) -> String {
        format!(
            "{}algorithm={}\nvalue={}\nvalue_decimal={:.6}\nx={}\ny={}\ntime_ms={:.3}\n",
            self.analysis.to_kv(),
            self.algorithm,
            self.solution.value,
            self.solution.value.to_f64(),
            bits(&self.solution.x),
            bits(&self.solution.y),
            self.elapsed.as_secs_f64() * 1e3
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.analysis)?;
        writeln!(f, "algorithm    {}", self.algorithm)?;
        write!(f, "time         {:.3} ms", self.elapsed.as_secs_f64() * 1e3)
    }
}

/// The solver `Auto` resolves to: nonnegative, additive, low rank, small
/// `m`, small eliminator, in that order.
pub fn choose(report: &AnalysisReport, opts: &SolveOptions) -> Result<Algorithm> {
    let m = report.m.min(report.n);
    if report.nonnegative {
        Ok(Algorithm::MinCut)
    } else if report.additive.is_some() {
        Ok(Algorithm::Additive)
    } else if report.rank <= 1 {
        Ok(Algorithm::Rank1)
    } else if report.rank <= opts.p_limit {
        Ok(Algorithm::RankP)
    } else if m <= opts.m_limit {
        Ok(Algorithm::Enum)
    } else if report.eliminator.size() <= opts.eliminator_limit {
        Ok(Algorithm::Eliminator)
    } else {
        Err(Error::NoSolver {
            report: report.to_string(),
        })
    }
}

/// Runs one named solver on an instance already oriented with `m ≤ n`.
fn run(inst: &Instance, algorithm: Algorithm, opts: &SolveOptions) -> Result<Solution> {
    match algorithm {
        Algorithm::Auto => unreachable!("resolved by the caller"),
        Algorithm::Oracle => solve_exhaustive(inst, opts.oracle_limit),
        Algorithm::Enum => solve_enumeration(inst, opts.m_limit),
        Algorithm::Rank1 => Ok(solve_rank_one(&RankOneForm::from_instance(inst)?)),
        Algorithm::RankP => {
            let fr = FixedRankOptions {
                p_limit: opts.p_limit,
                dual_filter: opts.dual_filter,
            };
            solve_fixed_rank_with(inst, &fr).map(|(s, _)| s)
        }
        Algorithm::Additive => {
            let dec = detect_additive(inst.q())
                .ok_or_else(|| Error::NotApplicable("Q is not additive".into()))?;
            solve_additive(inst, &dec)
        }
        Algorithm::MinCut => solve_nonnegative(inst),
        Algorithm::Eliminator => {
            solve_with_eliminator(inst, &min_negative_eliminator(inst.q()), opts.eliminator_limit)
        }
    }
}

/// Analyzes, picks or checks the solver, and solves. Instances with `m > n`
/// are transposed for solving and the solution is mapped back.
pub fn dispatch_solve(inst: &Instance, algorithm: Algorithm, opts: &SolveOptions) -> Result<Report> {
    let start = Instant::now();
    let analysis = analyze(inst);
    let chosen = match algorithm {
        Algorithm::Auto => choose(&analysis, opts)?,
        a => a,
    };
    let (oriented, flipped) = normalize_orientation(inst);
    let solution = run(&oriented, chosen, opts)?;
    let solution = if flipped { solution.transposed() } else { solution };
    Ok(Report {
        analysis,
        algorithm: chosen,
        solution,
        elapsed: start.elapsed(),
    })
}
