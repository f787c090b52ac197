use crate::matrix::Matrix;
use crate::rational::Rational;

/// `q_ij = a_i + b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveDecomposition {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl AdditiveDecomposition {
    pub fn reconstructs(&self, q: &Matrix) -> bool {
        q.rows() == self.a.len()
            && q.cols() == self.b.len()
            && q.entries().all(|(i, j, v)| *v == &self.a[i] + &self.b[j])
    }

    /// `(a + t, b - t)`, the same matrix.
    pub fn shifted(&self, t: &Rational) -> Self {
        AdditiveDecomposition {
            a: self.a.iter().map(|v| v + t).collect(),
            b: self.b.iter().map(|v| v - t).collect(),
        }
    }
}

/// Returns `a_i = q_i1`, `b_j = q_1j - q_11` when every
/// `q_ij - q_i1 - q_1j + q_11` vanishes.
pub fn detect_additive(q: &Matrix) -> Option<AdditiveDecomposition> {
    if q.rows() == 0 || q.cols() == 0 {
        return None;
    }
    let a: Vec<Rational> = q.column(0).cloned().collect();
    let b: Vec<Rational> = q.row(0).iter().map(|v| v - &q[(0, 0)]).collect();
    q.entries()
        .all(|(i, j, v)| *v == &a[i] + &b[j])
        .then_some(AdditiveDecomposition { a, b })
}
