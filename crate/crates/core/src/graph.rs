use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Weighted bipartite graph on `left + right` vertices, indices 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteWeightedGraph {
    left: usize,
    right: usize,
    edges: Vec<(usize, usize, Rational)>,
}

impl BipartiteWeightedGraph {
    pub fn new(left: usize, right: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        if left == 0 || right == 0 {
            return Err(Error::Dimension("both sides need at least one vertex".into()));
        }
        let mut seen = HashSet::new();
        for (i, j, _) in &edges {
            if *i >= left || *j >= right {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) out of range for a {left}x{right} graph"
                )));
            }
            if !seen.insert((*i, *j)) {
                return Err(Error::InvalidInput(format!("duplicate edge ({i}, {j})")));
            }
        }
        Ok(BipartiteWeightedGraph { left, right, edges })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    pub fn total_weight(&self) -> Rational {
        self.edges.iter().map(|(_, _, w)| w).sum()
    }

    /// Weight of the edges crossing the cut whose sides are given by the
    /// signs of `x` (left) and `y` (right).
    pub fn cut_value(&self, x: &[i8], y: &[i8]) -> Rational {
        self.edges
            .iter()
            .filter(|(i, j, _)| x[*i] != y[*j])
            .map(|(_, _, w)| w)
            .sum()
    }

    /// Weight of the biclique induced by the selected vertices, or `None`
    /// when some selected pair is not an edge.
    pub fn biclique_weight(&self, x: &[bool], y: &[bool]) -> Option<Rational> {
        let selected = x.iter().filter(|&&s| s).count() * y.iter().filter(|&&s| s).count();
        let inside: Vec<_> = self.edges.iter().filter(|(i, j, _)| x[*i] && y[*j]).collect();
        (inside.len() == selected).then(|| inside.iter().map(|(_, _, w)| w).sum())
    }
}
