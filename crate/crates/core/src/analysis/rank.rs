use crate::matrix::Matrix;
use crate::rational::Rational;

/// `Q = A·B` with `A` (m×p) made of the pivot columns of `Q` and `B` (p×n)
/// the nonzero rows of the reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFactorization {
    pub a: Matrix,
    pub b: Matrix,
}

impl RankFactorization {
    pub fn rank(&self) -> usize {
        self.a.cols()
    }

    /// Column `k` of `A`.
    pub fn a_column(&self, k: usize) -> Vec<Rational> {
        self.a.column(k).cloned().collect()
    }

    /// Row `k` of `B`.
    pub fn b_row(&self, k: usize) -> Vec<Rational> {
        self.b.row(k).to_vec()
    }
}

/// Reduced row echelon form and pivot columns. Pivots are the first nonzero
/// entry in column order; no numerical pivoting is needed with exact data.
pub fn rref(q: &Matrix) -> (Matrix, Vec<usize>) {
    let mut r = q.clone();
    let (rows, cols) = (r.rows(), r.cols());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows {
            break;
        }
        let Some(p) = (top..rows).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        if p != top {
            for j in col..cols {
                let tmp = r[(p, j)].clone();
                r[(p, j)] = r[(top, j)].clone();
                r[(top, j)] = tmp;
            }
        }
        let inv = r[(top, col)].recip();
        for j in col..cols {
            r[(top, j)] = &r[(top, j)] * &inv;
        }
        for i in (0..rows).filter(|&i| i != top) {
            let factor = r[(i, col)].clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..cols {
                let delta = &factor * &r[(top, j)];
                if !delta.is_zero() {
                    r[(i, j)] -= delta;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    (r, pivots)
}

pub fn rank_factorize(q: &Matrix) -> RankFactorization {
    let (r, pivots) = rref(q);
    let p = pivots.len();
    let a = Matrix::from_fn(q.rows(), p, |i, k| q[(i, pivots[k])].clone());
    let b = Matrix::from_fn(p, q.cols(), |k, j| r[(k, j)].clone());
    RankFactorization { a, b }
}

pub fn rank(q: &Matrix) -> usize {
    rref(q).1.len()
}
