//! Equivalent formulations and reductions between BQP01 and related
//! problems. Each function states the objective correspondence it
//! guarantees; the test suite checks those identities on every feasible
//! point of small random instances.

use crate::error::{Error, Result};
use crate::graph::BipartiteWeightedGraph;
use crate::instance::{CutInstance, Instance};
use crate::matrix::{select_sum, Matrix};
use crate::rational::{ratio, Rational};

/// Bordered homogeneous form `[[Q, cᵀ], [d, c0 + M]]` with `M` the big-M of
/// `inst`. Every optimum has `x_{m+1} = y_{n+1} = 1` and its value minus `M`
/// is the optimum of `inst`. Returns the instance and `M`.
pub fn to_homogeneous(inst: &Instance) -> (Instance, Rational) {
    let (m, n) = (inst.m(), inst.n());
    let big_m = inst.big_m();
    let corner = inst.c0() + &big_m;
    let q = Matrix::from_fn(m + 1, n + 1, |i, j| match (i < m, j < n) {
        (true, true) => inst.q()[(i, j)].clone(),
        (true, false) => inst.c()[i].clone(),
        (false, true) => inst.d()[j].clone(),
        (false, false) => corner.clone(),
    });
    (Instance::homogeneous(q).expect("bordered matrix is non-empty"), big_m)
}

/// Substitutes `x = (w + e)/2`, `y = (z + e)/2`: the returned cut instance
/// satisfies `φ(2x - e, 2y - e) = f(x, y)` for every binary `(x, y)`.
pub fn bqp01_to_cut(inst: &Instance) -> CutInstance {
    let quarter = ratio(1, 4);
    let half = ratio(1, 2);
    let q = inst.q();
    let row_sums = q.row_sums();
    let col_sums = q.column_sums();
    let c: Vec<Rational> = row_sums
        .iter()
        .zip(inst.c())
        .map(|(r, ci)| r * &quarter + ci * &half)
        .collect();
    let d: Vec<Rational> = col_sums
        .iter()
        .zip(inst.d())
        .map(|(s, dj)| s * &quarter + dj * &half)
        .collect();
    let c0 = q.sum() * &quarter
        + inst.c().iter().sum::<Rational>() * &half
        + inst.d().iter().sum::<Rational>() * &half
        + inst.c0();
    CutInstance::new(q.scale(&quarter), c, d, c0).expect("dimensions preserved")
}

/// Substitutes `x = 2w - e`, `y = 2z - e`: the returned BQP01 instance
/// satisfies `f(w, z) = φ(2w - e, 2z - e)`. Inverse of [`bqp01_to_cut`].
pub fn cut_to_bqp01(cut: &CutInstance) -> Instance {
    let data = cut.data();
    let q = data.q();
    let two = Rational::from(2);
    let c: Vec<Rational> = data
        .c()
        .iter()
        .zip(q.row_sums())
        .map(|(ci, r)| (ci - r) * &two)
        .collect();
    let d: Vec<Rational> = data
        .d()
        .iter()
        .zip(q.column_sums())
        .map(|(dj, s)| (dj - s) * &two)
        .collect();
    let c0 = q.sum() - data.c().iter().sum::<Rational>() - data.d().iter().sum::<Rational>()
        + data.c0();
    Instance::new(q.scale(&Rational::from(4)), c, d, c0).expect("dimensions preserved")
}

/// A QP01 instance: maximize `wᵀQw + c·w + c0` over `w ∈ {0,1}^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qp01 {
    pub q: Matrix,
    pub c: Vec<Rational>,
    pub c0: Rational,
}

impl Qp01 {
    pub fn new(q: Matrix, c: Vec<Rational>, c0: Rational) -> Result<Self> {
        if q.rows() != q.cols() || q.rows() != c.len() || q.rows() == 0 {
            return Err(Error::Dimension(format!(
                "QP01 needs a non-empty square matrix and matching vector, got {}x{} and {}",
                q.rows(),
                q.cols(),
                c.len()
            )));
        }
        Ok(Qp01 { q, c, c0 })
    }

    pub fn size(&self) -> usize {
        self.c.len()
    }

    pub fn evaluate(&self, w: &[bool]) -> Result<Rational> {
        if w.len() != self.size() {
            return Err(Error::Dimension(format!(
                "expected |w| = {}, got {}",
                self.size(),
                w.len()
            )));
        }
        let mut v = self.c0.clone() + select_sum(&self.c, w);
        for (i, _) in w.iter().enumerate().filter(|(_, &wi)| wi) {
            v += select_sum(self.q.row(i), w);
        }
        Ok(v)
    }
}

/// Embeds BQP01 into QP01 over `w = (x | y)` with the block matrix
/// `[[0, Q], [0, 0]]` and linear term `(c | d)`.
pub fn bqp01_to_qp01(inst: &Instance) -> Qp01 {
    let (m, n) = (inst.m(), inst.n());
    let q = Matrix::from_fn(m + n, m + n, |i, j| {
        if i < m && j >= m {
            inst.q()[(i, j - m)].clone()
        } else {
            Rational::zero()
        }
    });
    let c = inst.c().iter().chain(inst.d()).cloned().collect();
    Qp01 {
        q,
        c,
        c0: inst.c0().clone(),
    }
}

/// Embeds QP01 into BQP01 with `Q = Q' + 2MI`, `c = d = c'/2 - M`, using the
/// big-M `1 + Σ|q'| + Σ|c'| + |c0'|`. Returns the instance and `M`.
pub fn qp01_to_bqp01(qp: &Qp01) -> (Instance, Rational) {
    let big_m = qp.q.abs_sum()
        + qp.c.iter().map(Rational::abs).sum::<Rational>()
        + qp.c0.abs()
        + Rational::one();
    let inst = qp01_to_bqp01_with_penalty(qp, &big_m);
    (inst, big_m)
}

/// [`qp01_to_bqp01`] with an explicit penalty. Each index with `x_i != y_i`
/// costs exactly `M`, since `2M x_i y_i - M x_i - M y_i = -M [x_i != y_i]`.
pub fn qp01_to_bqp01_with_penalty(qp: &Qp01, big_m: &Rational) -> Instance {
    let two_m = big_m + big_m;
    let q = Matrix::from_fn(qp.size(), qp.size(), |i, j| {
        if i == j {
            &qp.q[(i, j)] + &two_m
        } else {
            qp.q[(i, j)].clone()
        }
    });
    let half = ratio(1, 2);
    let lin: Vec<Rational> = qp.c.iter().map(|ci| ci * &half - big_m).collect();
    Instance::new(q, lin.clone(), lin, qp.c0.clone()).expect("square input")
}

/// Homogeneous cut form to bipartite max-cut on `K_{m,n}` with edge weights
/// `-2 q_ij`: `φ(x, y) = Σ q_ij + cut(x, y)` for every sign vector.
pub fn bqp11h_to_bmaxcut(cut: &CutInstance) -> Result<BipartiteWeightedGraph> {
    if !cut.is_homogeneous() {
        return Err(Error::NotApplicable(
            "cut instance has linear or constant terms; homogenize first".into(),
        ));
    }
    let minus_two = Rational::from(-2);
    let edges = cut
        .data()
        .q()
        .entries()
        .map(|(i, j, q)| (i, j, q * &minus_two))
        .collect();
    BipartiteWeightedGraph::new(cut.m(), cut.n(), edges)
}

/// Bipartite max-cut to homogeneous cut form with `q_ij = -w_ij / 2`
/// (zero for absent edges): `cut(x, y) = Σ w_ij / 2 + φ(x, y)`.
pub fn bmaxcut_to_bqp11h(g: &BipartiteWeightedGraph) -> CutInstance {
    let mut q = Matrix::zeros(g.left(), g.right());
    let minus_half = ratio(-1, 2);
    for (i, j, w) in g.edges() {
        q[(*i, *j)] = w * &minus_half;
    }
    let inst = Instance::homogeneous(q).expect("graph sides are non-empty");
    let (q, c, d, c0) = inst.into_parts();
    CutInstance::new(q, c, d, c0).expect("dimensions preserved")
}

/// Maximum weight biclique: `q_ij = w_ij` on edges and `-M` elsewhere, with
/// `M = 1 + Σ w`. A non-edge inside the selection always makes the value
/// negative, so every optimum is a maximum weight biclique (possibly empty).
pub fn mwbp_to_bqp01(g: &BipartiteWeightedGraph) -> Result<(Instance, Rational)> {
    if let Some((i, j, w)) = g.edges().iter().find(|(_, _, w)| !w.is_positive()) {
        return Err(Error::InvalidInput(format!(
            "edge ({i}, {j}) has nonpositive weight {w}"
        )));
    }
    let big_m = g.total_weight() + Rational::one();
    let mut q = Matrix::from_fn(g.left(), g.right(), |_, _| -&big_m);
    for (i, j, w) in g.edges() {
        q[(*i, *j)] = w.clone();
    }
    Ok((Instance::homogeneous(q)?, big_m))
}

/// Best rank-one binary approximation `u vᵀ` of a 0-1 matrix `H` in squared
/// error. For binary entries `(h - uv)² = h + (1 - 2h) uv`, so the returned
/// instance uses `q_ij = 2h_ij - 1` and `c0 = -Σ h_ij`: its objective at
/// `(u, v)` is exactly minus the squared error, and its maximizers are the
/// best approximations.
pub fn rank1_binary_approx_to_bqp01(h: &Matrix) -> Result<Instance> {
    if let Some((i, j, v)) = h
        .entries()
        .find(|(_, _, v)| !v.is_zero() && **v != Rational::one())
    {
        return Err(Error::InvalidInput(format!(
            "entry ({i}, {j}) = {v} is not 0 or 1"
        )));
    }
    let one = Rational::one();
    let q = Matrix::from_fn(h.rows(), h.cols(), |i, j| &h[(i, j)] + &h[(i, j)] - &one);
    let (m, n) = (h.rows(), h.cols());
    Instance::new(q, vec![Rational::zero(); m], vec![Rational::zero(); n], -h.sum())
}

/// `Σ (h_ij - u_i v_j)²`.
pub fn squared_approximation_error(h: &Matrix, u: &[bool], v: &[bool]) -> Rational {
    h.entries()
        .map(|(i, j, hij)| {
            let diff = hij - Rational::from((u[i] && v[j]) as i64);
            &diff * &diff
        })
        .sum()
}
