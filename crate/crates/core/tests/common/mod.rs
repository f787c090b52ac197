//! Brute-force reference implementations shared by the integration tests.
//! They work in `BigRational` straight from the definitions and never call
//! the library's evaluators or solvers.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use bqp::generate::Generator;
use bqp::{Instance, Matrix, Rational};

pub fn big(r: &Rational) -> BigRational {
    r.into()
}

pub fn big_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn bits(mask: u64, len: usize) -> Vec<bool> {
    (0..len).map(|i| mask >> i & 1 == 1).collect()
}

pub fn spins(mask: u64, len: usize) -> Vec<i8> {
    (0..len).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect()
}

/// Every `(x, y)` in `{0,1}^m × {0,1}^n`.
pub fn all_points(m: usize, n: usize) -> impl Iterator<Item = (Vec<bool>, Vec<bool>)> {
    (0u64..1 << (m + n)).map(move |mask| (bits(mask, m), bits(mask >> m, n)))
}

/// Every `(x, y)` in `{-1,1}^m × {-1,1}^n`.
pub fn all_spin_points(m: usize, n: usize) -> impl Iterator<Item = (Vec<i8>, Vec<i8>)> {
    (0u64..1 << (m + n)).map(move |mask| (spins(mask, m), spins(mask >> m, n)))
}

/// An instance's data converted once to `BigRational`.
pub struct Dense {
    pub q: Vec<Vec<BigRational>>,
    pub c: Vec<BigRational>,
    pub d: Vec<BigRational>,
    pub c0: BigRational,
}

impl Dense {
    pub fn new(inst: &Instance) -> Self {
        Dense {
            q: (0..inst.m()).map(|i| inst.q().row(i).iter().map(big).collect()).collect(),
            c: inst.c().iter().map(big).collect(),
            d: inst.d().iter().map(big).collect(),
            c0: big(inst.c0()),
        }
    }

    /// `Σ q_ij x_i y_j + Σ c_i x_i + Σ d_j y_j + c0` over any numeric
    /// encoding of the variables.
    pub fn objective_with(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut total = self.c0.clone();
        for (i, row) in self.q.iter().enumerate() {
            total += &self.c[i] * &x[i];
            for (j, q) in row.iter().enumerate() {
                total += q * &x[i] * &y[j];
            }
        }
        for (j, dj) in self.d.iter().enumerate() {
            total += dj * &y[j];
        }
        total
    }

    /// Binary point; only selected terms are summed.
    pub fn objective(&self, x: &[bool], y: &[bool]) -> BigRational {
        let mut total = self.c0.clone();
        for (i, row) in self.q.iter().enumerate().filter(|(i, _)| x[*i]) {
            total += &self.c[i];
            for (_, q) in row.iter().enumerate().filter(|(j, _)| y[*j]) {
                total += q;
            }
        }
        for (_, dj) in self.d.iter().enumerate().filter(|(j, _)| y[*j]) {
            total += dj;
        }
        total
    }

    pub fn optimum(&self) -> BigRational {
        all_points(self.c.len(), self.d.len())
            .map(|(x, y)| self.objective(&x, &y))
            .max()
            .expect("at least one point")
    }
}

pub fn objective(inst: &Instance, x: &[bool], y: &[bool]) -> BigRational {
    Dense::new(inst).objective(x, y)
}

pub fn spin_objective(inst: &Instance, x: &[i8], y: &[i8]) -> BigRational {
    let enc = |v: &[i8]| v.iter().map(|&s| big_int(s as i64)).collect::<Vec<_>>();
    Dense::new(inst).objective_with(&enc(x), &enc(y))
}

/// Maximum over all `2^(m+n)` points.
pub fn oracle_optimum(inst: &Instance) -> BigRational {
    Dense::new(inst).optimum()
}

fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    // cofactor expansion along the first row
    let k = a.len();
    if k == 0 {
        return BigRational::one();
    }
    if k == 1 {
        return a.remove(0).remove(0);
    }
    let mut det = BigRational::zero();
    for col in 0..k {
        if a[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &a[0][col] * determinant(minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest `k` with a nonzero `k×k` minor.
pub fn oracle_rank(q: &Matrix) -> usize {
    (1..=q.rows().min(q.cols()))
        .rev()
        .find(|&k| {
            subsets(q.rows(), k).iter().any(|rows| {
                subsets(q.cols(), k).iter().any(|cols| {
                    let sub = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| big(&q[(i, j)])).collect())
                        .collect();
                    !determinant(sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

/// Smallest set of rows and columns touching every negative entry.
pub fn oracle_min_cover(q: &Matrix) -> usize {
    let (m, n) = (q.rows(), q.cols());
    (0u64..1 << (m + n))
        .filter(|mask| {
            q.entries()
                .filter(|(_, _, v)| v.is_negative())
                .all(|(i, j, _)| mask >> i & 1 == 1 || mask >> (m + j) & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("all rows is a cover")
}

pub fn small_rational(rng: &mut Generator) -> Rational {
    let num: i64 = rng.random_range(-9..=9);
    let den: i64 = [1, 1, 1, 2, 3, 4][rng.random_range(0..6)];
    Rational::new(num, den)
}

/// Instance with small fractional entries.
pub fn rational_instance(rng: &mut Generator, m: usize, n: usize) -> Instance {
    let q = Matrix::from_fn(m, n, |_, _| small_rational(rng));
    let c = (0..m).map(|_| small_rational(rng)).collect();
    let d = (0..n).map(|_| small_rational(rng)).collect();
    Instance::new(q, c, d, small_rational(rng)).unwrap()
}
