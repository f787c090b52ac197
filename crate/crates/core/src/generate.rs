//! Seeded random instances for each structural class.
//!
//! The generator is xoshiro256++ seeded through splitmix64, so a given
//! `(kind, m, n, seed, range)` always produces the same instance.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::analysis::rank;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::solver::rank_one::RankOneForm;

pub type Generator = Xoshiro256PlusPlus;

pub fn generator(seed: u64) -> Generator {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Independent entries.
    General,
    /// `Q = AB` with integer factors and rank exactly `p` (when `p ≤ min(m, n)`).
    Rank(usize),
    /// `q_ij = a_i + b_j`.
    Additive,
    /// `Q ≥ 0`.
    Nonnegative,
    /// `Q ≥ 0` except for at most `k` entries, so some eliminator has at
    /// most `k` members.
    SparseNegative(usize),
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::General => write!(f, "general"),
            Kind::Rank(p) => write!(f, "rank{p}"),
            Kind::Additive => write!(f, "additive"),
            Kind::Nonnegative => write!(f, "nonnegative"),
            Kind::SparseNegative(k) => write!(f, "sparse-negative{k}"),
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let suffix = |prefix: &str| -> Option<Result<usize>> {
            s.strip_prefix(prefix).map(|rest| {
                rest.parse()
                    .map_err(|_| Error::InvalidInput(format!("bad parameter in kind '{s}'")))
            })
        };
        match s {
            "general" => Ok(Kind::General),
            "additive" => Ok(Kind::Additive),
            "nonnegative" => Ok(Kind::Nonnegative),
            _ => {
                if let Some(k) = suffix("sparse-negative") {
                    return k.map(Kind::SparseNegative);
                }
                if let Some(p) = suffix("rank") {
                    return p.map(Kind::Rank);
                }
                Err(Error::InvalidInput(format!(
                    "unknown kind '{s}' (expected general, rank<p>, additive, nonnegative, sparse-negative<k>)"
                )))
            }
        }
    }
}

fn draw(rng: &mut Generator, lo: i64, hi: i64) -> Rational {
    Rational::from(rng.random_range(lo..=hi))
}

fn draw_vec(rng: &mut Generator, len: usize, lo: i64, hi: i64) -> Vec<Rational> {
    (0..len).map(|_| draw(rng, lo, hi)).collect()
}

/// Random instance of `kind`; entries are integers in `[-range, range]`
/// (`[0, range]` for nonnegative parts). Linear terms are mixed-sign.
pub fn generate_instance(kind: Kind, m: usize, n: usize, seed: u64, range: i64) -> Result<Instance> {
    if m == 0 || n == 0 {
        return Err(Error::Dimension(format!("sizes must be at least 1, got {m}x{n}")));
    }
    if range < 1 {
        return Err(Error::InvalidInput(format!("range must be positive, got {range}")));
    }
    let mut rng = generator(seed);
    let r = range;
    let q = match kind {
        Kind::General => Matrix::from_fn(m, n, |_, _| draw(&mut rng, -r, r)),
        Kind::Rank(p) => {
            if p > m.min(n) {
                return Err(Error::InvalidInput(format!("rank {p} impossible for {m}x{n}")));
            }
            loop {
                let a = Matrix::from_fn(m, p, |_, _| draw(&mut rng, -r, r));
                let b = Matrix::from_fn(p, n, |_, _| draw(&mut rng, -r, r));
                let q = a.mul(&b)?;
                if rank(&q) == p {
                    break q;
                }
            }
        }
        Kind::Additive => {
            let a = draw_vec(&mut rng, m, -r, r);
            let b = draw_vec(&mut rng, n, -r, r);
            Matrix::from_fn(m, n, |i, j| &a[i] + &b[j])
        }
        Kind::Nonnegative => Matrix::from_fn(m, n, |_, _| draw(&mut rng, 0, r)),
        Kind::SparseNegative(k) => {
            let mut q = Matrix::from_fn(m, n, |_, _| draw(&mut rng, 0, r));
            let k = k.min(m * n);
            let mut cells: Vec<usize> = (0..m * n).collect();
            for t in 0..k {
                let pick = rng.random_range(t..cells.len());
                cells.swap(t, pick);
                let (i, j) = (cells[t] / n, cells[t] % n);
                q[(i, j)] = draw(&mut rng, -r, -1);
            }
            q
        }
    };
    let c = draw_vec(&mut rng, m, -r, r);
    let d = draw_vec(&mut rng, n, -r, r);
    let c0 = draw(&mut rng, -r, r);
    Instance::new(q, c, d, c0)
}

/// Random rank-one form that never materializes `Q`; for large sizes.
pub fn generate_rank_one_form(m: usize, n: usize, seed: u64, range: i64) -> Result<RankOneForm> {
    let mut rng = generator(seed);
    let (lo, hi) = (-range, range);
    let a = draw_vec(&mut rng, m, lo, hi);
    let b = draw_vec(&mut rng, n, lo, hi);
    let c = draw_vec(&mut rng, m, lo, hi);
    let d = draw_vec(&mut rng, n, lo, hi);
    RankOneForm::new(a, b, c, d, Rational::zero())
}
