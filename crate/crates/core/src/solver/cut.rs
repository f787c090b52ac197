//! Min-cut solver for nonnegative `Q`, and the eliminator wrapper that fixes
//! the covered rows and columns of a general `Q` first.
//!
//! For `Q ≥ 0`, label `x_i`, `y_j` by the side of a cut (source side = 1).
//! Profit `R_i = Σ_j q_ij` is credited to `x_i` up front and refunded
//! through arc `x_i → y_j` whenever `y_j` is not selected, as in the
//! provisioning (project selection) construction.

use crate::analysis::Eliminator;
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::solver::flow::{max_flow, FlowNetwork};

pub const DEFAULT_ELIMINATOR_LIMIT: usize = 25;

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

pub fn x_node(i: usize) -> usize {
    2 + i
}

pub fn y_node(m: usize, j: usize) -> usize {
    2 + m + j
}

fn require_nonnegative(inst: &Instance) -> Result<()> {
    if let Some((i, j, v)) = inst.q().entries().find(|(_, _, v)| v.is_negative()) {
        return Err(Error::NotApplicable(format!(
            "q[{}][{}] = {v} is negative",
            i + 1,
            j + 1
        )));
    }
    Ok(())
}

/// Network and offset with `f(x, y) = offset - cut(x, y)` for every labeling.
pub fn build_cut_network(inst: &Instance) -> Result<(FlowNetwork, Rational)> {
    require_nonnegative(inst)?;
    let (m, n) = (inst.m(), inst.n());
    let mut net = FlowNetwork::new(2 + m + n, SOURCE, SINK)?;
    let mut offset = inst.q().sum() + inst.c0();
    for (i, ci) in inst.c().iter().enumerate() {
        let r_i: Rational = inst.q().row(i).iter().sum();
        net.add_arc(SOURCE, x_node(i), r_i + ci.positive_part())?;
        if ci.is_negative() {
            net.add_arc(x_node(i), SINK, -ci)?;
        }
        offset += ci.positive_part();
    }
    for (i, j, q) in inst.q().entries() {
        if q.is_positive() {
            net.add_arc(x_node(i), y_node(m, j), q.clone())?;
        }
    }
    for (j, dj) in inst.d().iter().enumerate() {
        if dj.is_positive() {
            net.add_arc(SOURCE, y_node(m, j), dj.clone())?;
            offset += dj;
        } else if dj.is_negative() {
            net.add_arc(y_node(m, j), SINK, -dj)?;
        }
    }
    Ok((net, offset))
}

/// Source-side indicator for a labeling of the variables.
pub fn labeling(x: &[bool], y: &[bool]) -> Vec<bool> {
    [true, false].into_iter().chain(x.iter().copied()).chain(y.iter().copied()).collect()
}

/// Optimum of an instance with `Q ≥ 0`.
pub fn solve_nonnegative(inst: &Instance) -> Result<Solution> {
    let (net, offset) = build_cut_network(inst)?;
    let (cut, side) = max_flow(&net);
    let (m, n) = (inst.m(), inst.n());
    let x: Vec<bool> = (0..m).map(|i| side[x_node(i)]).collect();
    let y: Vec<bool> = (0..n).map(|j| side[y_node(m, j)]).collect();
    let value = offset - cut;
    debug_assert_eq!(inst.evaluate(&x, &y).ok().as_ref(), Some(&value));
    Ok(Solution { x, y, value })
}

/// An instance with some variables fixed, the fixings folded into the
/// linear and constant terms of the free part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub fixed_x: Vec<Option<bool>>,
    pub fixed_y: Vec<Option<bool>>,
    pub free_rows: Vec<usize>,
    pub free_cols: Vec<usize>,
    pub q: Matrix,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
    pub constant: Rational,
}

impl ReducedInstance {
    /// Fixed `x_i = 1` moves row `i` of `Q` into `d` and `c_i` into the
    /// constant; fixed `y_j = 1` moves column `j` into `c` and `d_j` into the
    /// constant; fixed zeros drop out.
    pub fn fold(inst: &Instance, fixed_x: Vec<Option<bool>>, fixed_y: Vec<Option<bool>>) -> Result<Self> {
        if fixed_x.len() != inst.m() || fixed_y.len() != inst.n() {
            return Err(Error::Dimension("fixing vectors must match the instance".into()));
        }
        let free_rows: Vec<usize> = (0..inst.m()).filter(|&i| fixed_x[i].is_none()).collect();
        let free_cols: Vec<usize> = (0..inst.n()).filter(|&j| fixed_y[j].is_none()).collect();
        let q = inst.q();
        let mut constant = inst.c0().clone();
        let mut c: Vec<Rational> = free_rows.iter().map(|&i| inst.c()[i].clone()).collect();
        let mut d: Vec<Rational> = free_cols.iter().map(|&j| inst.d()[j].clone()).collect();
        for i in (0..inst.m()).filter(|&i| fixed_x[i] == Some(true)) {
            constant += &inst.c()[i];
            for (dj, &j) in d.iter_mut().zip(&free_cols) {
                *dj += &q[(i, j)];
            }
            for j in (0..inst.n()).filter(|&j| fixed_y[j] == Some(true)) {
                constant += &q[(i, j)];
            }
        }
        for j in (0..inst.n()).filter(|&j| fixed_y[j] == Some(true)) {
            constant += &inst.d()[j];
            for (ci, &i) in c.iter_mut().zip(&free_rows) {
                *ci += &q[(i, j)];
            }
        }
        Ok(ReducedInstance {
            q: q.select(&free_rows, &free_cols),
            fixed_x,
            fixed_y,
            free_rows,
            free_cols,
            c,
            d,
            constant,
        })
    }

    /// Objective of the free part plus the folded constant.
    pub fn evaluate_free(&self, x: &[bool], y: &[bool]) -> Rational {
        let mut value = self.constant.clone();
        for (r, _) in x.iter().enumerate().filter(|(_, &xi)| xi) {
            value += &self.c[r];
            for (s, _) in y.iter().enumerate().filter(|(_, &yj)| yj) {
                value += &self.q[(r, s)];
            }
        }
        for (s, _) in y.iter().enumerate().filter(|(_, &yj)| yj) {
            value += &self.d[s];
        }
        value
    }

    /// Full-length assignment from values of the free variables.
    pub fn expand(&self, x_free: &[bool], y_free: &[bool]) -> (Vec<bool>, Vec<bool>) {
        let mut x: Vec<bool> = self.fixed_x.iter().map(|v| v.unwrap_or(false)).collect();
        let mut y: Vec<bool> = self.fixed_y.iter().map(|v| v.unwrap_or(false)).collect();
        for (&i, &v) in self.free_rows.iter().zip(x_free) {
            x[i] = v;
        }
        for (&j, &v) in self.free_cols.iter().zip(y_free) {
            y[j] = v;
        }
        (x, y)
    }

    /// Solves the free part, which must have a nonnegative matrix. When one
    /// side has no free variables the remainder is linear.
    pub fn solve(&self) -> Result<Solution> {
        let (x_free, y_free, value) = if self.free_rows.is_empty() || self.free_cols.is_empty() {
            let x: Vec<bool> = self.c.iter().map(Rational::is_positive).collect();
            let y: Vec<bool> = self.d.iter().map(Rational::is_positive).collect();
            let v = self.evaluate_free(&x, &y);
            (x, y, v)
        } else {
            let inst = Instance::new(self.q.clone(), self.c.clone(), self.d.clone(), self.constant.clone())?;
            let s = solve_nonnegative(&inst)?;
            (s.x, s.y, s.value)
        };
        let (x, y) = self.expand(&x_free, &y_free);
        Ok(Solution { x, y, value })
    }
}

/// Enumerates all `2^|S⁻|` fixings of the eliminator's rows and columns and
/// solves each nonnegative remainder by min-cut. The first best fixing in
/// binary counting order (rows first, then columns) wins.
pub fn solve_with_eliminator(inst: &Instance, elim: &Eliminator, size_limit: usize) -> Result<Solution> {
    if elim.size() > size_limit {
        return Err(Error::LimitExceeded {
            what: "negative eliminator size",
            measured: elim.size(),
            limit: size_limit,
        });
    }
    if !elim.covers(inst.q()) {
        return Err(Error::InvalidInput(
            "eliminator leaves a negative entry uncovered".into(),
        ));
    }
    let members: Vec<(bool, usize)> = elim
        .rows
        .iter()
        .map(|&i| (true, i))
        .chain(elim.cols.iter().map(|&j| (false, j)))
        .collect();
    let mut best: Option<Solution> = None;
    for mask in 0u64..1 << members.len() {
        let mut fixed_x = vec![None; inst.m()];
        let mut fixed_y = vec![None; inst.n()];
        for (bit, &(is_row, k)) in members.iter().enumerate() {
            let v = Some(mask >> bit & 1 == 1);
            if is_row {
                fixed_x[k] = v;
            } else {
                fixed_y[k] = v;
            }
        }
        let s = ReducedInstance::fold(inst, fixed_x, fixed_y)?.solve()?;
        if best.as_ref().is_none_or(|b| s.value > b.value) {
            best = Some(s);
        }
    }
    Ok(best.expect("at least one fixing"))
}
