//! Structure detection on the cost matrix.

mod additive;
mod eliminator;
mod rank;

use std::fmt;

pub use additive::{detect_additive, AdditiveDecomposition};
pub use eliminator::{min_negative_eliminator, negativity_matching, Eliminator};
pub use rank::{rank, rank_factorize, rref, RankFactorization};

use crate::instance::Instance;
use crate::matrix::Matrix;

pub fn detect_nonnegative(q: &Matrix) -> bool {
    q.entries().all(|(_, _, v)| !v.is_negative())
}

/// Everything the dispatcher knows about an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub m: usize,
    pub n: usize,
    pub rank: usize,
    pub additive: Option<AdditiveDecomposition>,
    pub nonnegative: bool,
    pub eliminator: Eliminator,
}

pub fn analyze(inst: &Instance) -> AnalysisReport {
    let q = inst.q();
    AnalysisReport {
        m: inst.m(),
        n: inst.n(),
        rank: rank(q),
        additive: detect_additive(q),
        nonnegative: detect_nonnegative(q),
        eliminator: min_negative_eliminator(q),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn one_based(ix: &[usize]) -> String {
    ix.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

impl AnalysisReport {
    /// `key=value` lines.
    pub fn to_kv(&self) -> String {
        format!(
            "m={}\nn={}\nrank={}\nadditive={}\nnonnegative={}\neliminator_size={}\neliminator_rows={}\neliminator_cols={}\n",
            self.m,
            self.n,
            self.rank,
            yes_no(self.additive.is_some()),
            yes_no(self.nonnegative),
            self.eliminator.size(),
            one_based(&self.eliminator.rows),
            one_based(&self.eliminator.cols),
        )
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size         {} x {}", self.m, self.n)?;
        writeln!(f, "rank         {}", self.rank)?;
        writeln!(f, "additive     {}", yes_no(self.additive.is_some()))?;
        writeln!(f, "nonnegative  {}", yes_no(self.nonnegative))?;
        write!(
            f,
            "eliminator   {} (rows [{}], cols [{}])",
            self.eliminator.size(),
            one_based(&self.eliminator.rows),
            one_based(&self.eliminator.cols)
        )
    }
}
