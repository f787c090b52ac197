//! Small canonical instances used across tests, examples and docs.
//!
//! The same data ships as text files under `fixtures/` in the crate root.

use crate::instance::Instance;
use crate::matrix::{ints, Matrix};
use crate::rational::Rational;
use crate::solver::rank_one::RankOneForm;

pub const SAMPLE_A: [i64; 5] = [2, 2, -3, 4, -2];
pub const SAMPLE_C: [i64; 5] = [4, 5, 6, 10, 5];
pub const SAMPLE_B: [i64; 7] = [1, 1, -4, 0, -1, -2, 1];
pub const SAMPLE_D: [i64; 7] = [5, -2, 3, 3, 4, 0, 2];

/// Rank-one 5x7 instance with `Q = aᵀb`; optimum 56.
pub fn sample() -> Instance {
    let q = Matrix::from_fn(5, 7, |i, j| Rational::from(SAMPLE_A[i] * SAMPLE_B[j]));
    Instance::new(q, ints(&SAMPLE_C), ints(&SAMPLE_D), Rational::zero()).unwrap()
}

/// [`sample`] in factored form.
pub fn sample_form() -> RankOneForm {
    RankOneForm::new(ints(&SAMPLE_A), ints(&SAMPLE_B), ints(&SAMPLE_C), ints(&SAMPLE_D), Rational::zero())
        .unwrap()
}

/// 2x2 with one negative entry; optimum 4.
pub fn t1() -> Instance {
    Instance::from_ints(&[[1, -2], [3, 0]], &[1, -1], &[0, 2], 0).unwrap()
}

/// Additive `q_ij = a_i + b_j` with `a = [3, 1]`, `b = [0, -5]`; optimum 4.
pub fn tadd() -> Instance {
    Instance::from_ints(&[[3, -2], [1, -4]], &[0, 0], &[0, 0], 0).unwrap()
}

/// Nonnegative 1x1; optimum 0.
pub fn tnn() -> Instance {
    Instance::from_ints(&[[1]], &[-2], &[0], 0).unwrap()
}
