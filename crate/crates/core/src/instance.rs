//! Problem data and exact objective evaluation.

use crate::error::{Error, Result};
use crate::matrix::{select_sum, Matrix};
use crate::rational::Rational;

/// A BQP01 instance: maximize `xᵀQy + c·x + d·y + c0` over
/// `x ∈ {0,1}^m`, `y ∈ {0,1}^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    q: Matrix,
    c: Vec<Rational>,
    d: Vec<Rational>,
    c0: Rational,
}

impl Instance {
    pub fn new(q: Matrix, c: Vec<Rational>, d: Vec<Rational>, c0: Rational) -> Result<Self> {
        if q.rows() == 0 || q.cols() == 0 {
            return Err(Error::Dimension(format!(
                "Q must be at least 1x1, got {}x{}",
                q.rows(),
                q.cols()
            )));
        }
        if c.len() != q.rows() {
            return Err(Error::Dimension(format!(
                "c has {} entries but Q has {} rows",
                c.len(),
                q.rows()
            )));
        }
        if d.len() != q.cols() {
            return Err(Error::Dimension(format!(
                "d has {} entries but Q has {} columns",
                d.len(),
                q.cols()
            )));
        }
        Ok(Instance { q, c, d, c0 })
    }

    /// Instance with zero linear and constant terms.
    pub fn homogeneous(q: Matrix) -> Result<Self> {
        let (m, n) = (q.rows(), q.cols());
        Self::new(q, vec![Rational::zero(); m], vec![Rational::zero(); n], Rational::zero())
    }

    /// Integer-data shorthand used throughout tests and examples.
    pub fn from_ints<R: AsRef<[i64]>>(q: &[R], c: &[i64], d: &[i64], c0: i64) -> Result<Self> {
        Self::new(
            Matrix::from_ints(q),
            crate::matrix::ints(c),
            crate::matrix::ints(d),
            Rational::from(c0),
        )
    }

    pub fn m(&self) -> usize {
        self.q.rows()
    }

    pub fn n(&self) -> usize {
        self.q.cols()
    }

    pub fn q(&self) -> &Matrix {
        &self.q
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    pub fn c0(&self) -> &Rational {
        &self.c0
    }

    pub fn into_parts(self) -> (Matrix, Vec<Rational>, Vec<Rational>, Rational) {
        (self.q, self.c, self.d, self.c0)
    }

    /// `Σ|q_ij| + Σ|c_i| + Σ|d_j| + |c0|`, a bound on the spread of the
    /// objective over all feasible points.
    pub fn magnitude(&self) -> Rational {
        self.q.abs_sum()
            + self.c.iter().map(Rational::abs).sum::<Rational>()
            + self.d.iter().map(Rational::abs).sum::<Rational>()
            + self.c0.abs()
    }

    /// `1 + magnitude()`: strictly exceeds any achievable objective spread.
    pub fn big_m(&self) -> Rational {
        self.magnitude() + Rational::one()
    }

    pub fn evaluate(&self, x: &[bool], y: &[bool]) -> Result<Rational> {
        evaluate_objective(self, x, y)
    }

    /// Column scores `Σ_i q_ij x_i + d_j` for a fixed `x`.
    pub fn column_scores(&self, x: &[bool]) -> Vec<Rational> {
        let mut s = self.d.clone();
        for (i, _) in x.iter().enumerate().filter(|(_, &xi)| xi) {
            for (sj, q) in s.iter_mut().zip(self.q.row(i)) {
                *sj += q;
            }
        }
        s
    }
}

/// `Σ q_ij x_i y_j + Σ c_i x_i + Σ d_j y_j + c0`, exactly.
pub fn evaluate_objective(inst: &Instance, x: &[bool], y: &[bool]) -> Result<Rational> {
    if x.len() != inst.m() || y.len() != inst.n() {
        return Err(Error::Dimension(format!(
            "expected |x| = {} and |y| = {}, got {} and {}",
            inst.m(),
            inst.n(),
            x.len(),
            y.len()
        )));
    }
    let mut value = inst.c0.clone() + select_sum(&inst.c, x) + select_sum(&inst.d, y);
    for (i, _) in x.iter().enumerate().filter(|(_, &xi)| xi) {
        value += select_sum(inst.q.row(i), y);
    }
    Ok(value)
}

/// Transposes instances with `m > n` so that `m ≤ n`; the flag reports
/// whether the roles of `x` and `y` were swapped.
pub fn normalize_orientation(inst: &Instance) -> (Instance, bool) {
    if inst.m() <= inst.n() {
        return (inst.clone(), false);
    }
    let swapped = Instance {
        q: inst.q.transpose(),
        c: inst.d.clone(),
        d: inst.c.clone(),
        c0: inst.c0.clone(),
    };
    (swapped, true)
}

/// A feasible point together with its exact objective value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vec<bool>,
    pub y: Vec<bool>,
    pub value: Rational,
}

impl Solution {
    /// Builds a solution, computing its value from the instance.
    pub fn evaluated(inst: &Instance, x: Vec<bool>, y: Vec<bool>) -> Result<Self> {
        let value = evaluate_objective(inst, &x, &y)?;
        Ok(Solution { x, y, value })
    }

    /// Swaps `x` and `y`, undoing [`normalize_orientation`].
    pub fn transposed(self) -> Self {
        Solution {
            x: self.y,
            y: self.x,
            value: self.value,
        }
    }
}

/// The cut form (BQP-11): the same data as [`Instance`], but the variables
/// range over `{-1, +1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutInstance(Instance);

impl CutInstance {
    pub fn new(q: Matrix, c: Vec<Rational>, d: Vec<Rational>, c0: Rational) -> Result<Self> {
        Instance::new(q, c, d, c0).map(CutInstance)
    }

    pub fn from_ints<R: AsRef<[i64]>>(q: &[R], c: &[i64], d: &[i64], c0: i64) -> Result<Self> {
        Instance::from_ints(q, c, d, c0).map(CutInstance)
    }

    /// Views the data as coefficients; not a change of variables.
    pub fn data(&self) -> &Instance {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.m()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.0.c.iter().all(Rational::is_zero)
            && self.0.d.iter().all(Rational::is_zero)
            && self.0.c0.is_zero()
    }

    /// Objective at a `±1` point.
    pub fn evaluate(&self, x: &[i8], y: &[i8]) -> Result<Rational> {
        let inst = &self.0;
        if x.len() != inst.m() || y.len() != inst.n() {
            return Err(Error::Dimension(format!(
                "expected |x| = {} and |y| = {}, got {} and {}",
                inst.m(),
                inst.n(),
                x.len(),
                y.len()
            )));
        }
        if let Some(bad) = x.iter().chain(y).find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput(format!("spin value {bad} is not ±1")));
        }
        let signed = |v: &Rational, s: i8| if s > 0 { v.clone() } else { -v };
        let mut value = inst.c0.clone();
        for (ci, &xi) in inst.c.iter().zip(x) {
            value += signed(ci, xi);
        }
        for (dj, &yj) in inst.d.iter().zip(y) {
            value += signed(dj, yj);
        }
        for (i, &xi) in x.iter().enumerate() {
            for (q, &yj) in inst.q.row(i).iter().zip(y) {
                value += signed(q, xi * yj);
            }
        }
        Ok(value)
    }
}
