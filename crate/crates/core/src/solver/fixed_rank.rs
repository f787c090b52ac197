//! Fixed-rank solver.
//!
//! With `Q = AB` (`A` is `m×p`, `B` is `p×n`) and `λ = Aᵀx`, the best `x`
//! for a given `λ` solves the multiparametric LP
//! `max{c·x : Aᵀx = λ, 0 ≤ x ≤ 1}`. Each dual feasible basis structure
//! `(𝓑, 𝓛, 𝓤)` is optimal on a region of `λ`-space whose vertices are
//! reached by `x_𝓑 = τ ∈ {0,1}^p`, `x_𝓛 = 0`, `x_𝓤 = 1`. The objective is
//! convex along each region, so those `2^p` binary vectors per structure,
//! completed with their best `y`, contain an optimum. There are at most
//! `C(m, p)` structures.

use std::cmp::Ordering;

use crate::analysis::{rank, rank_factorize};
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};
use crate::matrix::Matrix;
use crate::rational::Rational;

pub const DEFAULT_P_LIMIT: usize = 6;

/// Largest nonbasic count accepted when the dual filter is off.
pub const SUPERSET_NONBASIC_LIMIT: usize = 20;

/// A basis with its nonbasic indices split into lower (`x = 0`) and upper
/// (`x = 1`) bounds, and the inverse of the basis matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisStructure {
    pub basic: Vec<usize>,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub binv: Matrix,
}

impl BasisStructure {
    pub fn m(&self) -> usize {
        self.basic.len() + self.lower.len() + self.upper.len()
    }
}

/// Reduced cost under the perturbation `c_i → c_i + ε^i`: a base value plus
/// coefficients of `ε^i`, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCostSign {
    pub base: Rational,
    pub perturbation: Vec<(usize, Rational)>,
}

impl ReducedCostSign {
    /// Sign of the first nonzero among the base and the coefficients.
    pub fn sign(&self) -> Ordering {
        std::iter::once(&self.base)
            .chain(self.perturbation.iter().map(|(_, v)| v))
            .map(Rational::signum)
            .find(|s| *s != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn invert(mat: &Matrix) -> Option<Matrix> {
    let p = mat.rows();
    let mut a = mat.clone();
    let mut inv = Matrix::identity(p);
    for col in 0..p {
        let pivot = (col..p).find(|&r| !a[(r, col)].is_zero())?;
        a.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        let scale = a[(col, col)].recip();
        for k in 0..p {
            a[(col, k)] = &a[(col, k)] * &scale;
            inv[(col, k)] = &inv[(col, k)] * &scale;
        }
        for r in (0..p).filter(|&r| r != col) {
            let f = a[(r, col)].clone();
            if f.is_zero() {
                continue;
            }
            for k in 0..p {
                let (av, iv) = (&f * &a[(col, k)], &f * &inv[(col, k)]);
                a[(r, k)] -= av;
                inv[(r, k)] -= iv;
            }
        }
    }
    Some(inv)
}

/// Matrix whose column `k` is row `basic[k]` of `a`.
fn basis_matrix(a: &Matrix, basic: &[usize]) -> Matrix {
    Matrix::from_fn(a.cols(), basic.len(), |r, k| a[(basic[k], r)].clone())
}

/// Reduced cost `c_𝓑 B⁻¹ A_j - c_j` of nonbasic `j`, where the constraint
/// column `A_j` is row `j` of `a`.
pub fn reduced_cost(a: &Matrix, c: &[Rational], basic: &[usize], binv: &Matrix, j: usize) -> ReducedCostSign {
    let w: Vec<Rational> = (0..basic.len())
        .map(|k| (0..a.cols()).map(|r| &binv[(k, r)] * &a[(j, r)]).sum())
        .collect();
    let base = basic.iter().zip(&w).map(|(&i, wk)| &c[i] * wk).sum::<Rational>() - &c[j];
    let mut perturbation: Vec<(usize, Rational)> = basic.iter().copied().zip(w).collect();
    perturbation.push((j, -Rational::one()));
    perturbation.sort_by_key(|(i, _)| *i);
    ReducedCostSign { base, perturbation }
}

/// Calls `visit` with every `k`-subset of `0..m` in lexicographic order.
fn for_each_subset(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        visit(&s);
        let Some(pos) = (0..k).rev().find(|&t| s[t] < m - k + t) else {
            return;
        };
        s[pos] += 1;
        for t in pos + 1..k {
            s[t] = s[t - 1] + 1;
        }
    }
}

fn check_full_column_rank(a: &Matrix) -> Result<()> {
    let r = rank(a);
    if r != a.cols() {
        return Err(Error::InvalidInput(format!(
            "factor has {} columns but rank {r}",
            a.cols()
        )));
    }
    Ok(())
}

/// Nonsingular bases in lexicographic order, each with its inverse.
fn nonsingular_bases(a: &Matrix) -> Vec<(Vec<usize>, Matrix)> {
    let mut out = Vec::new();
    for_each_subset(a.rows(), a.cols(), |basic| {
        if let Some(binv) = invert(&basis_matrix(a, basic)) {
            out.push((basic.to_vec(), binv));
        }
    });
    out
}

/// One structure per nonsingular basis: nonbasic `j` goes to `𝓛` when its
/// perturbed reduced cost is positive and to `𝓤` when negative.
pub fn enumerate_dual_feasible_bases(a: &Matrix, c: &[Rational]) -> Result<Vec<BasisStructure>> {
    check_full_column_rank(a)?;
    if c.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "c has {} entries, factor has {} rows",
            c.len(),
            a.rows()
        )));
    }
    Ok(nonsingular_bases(a)
        .into_iter()
        .map(|(basic, binv)| {
            let (mut lower, mut upper) = (Vec::new(), Vec::new());
            for j in (0..a.rows()).filter(|j| !basic.contains(j)) {
                match reduced_cost(a, c, &basic, &binv, j).sign() {
                    Ordering::Less => upper.push(j),
                    _ => lower.push(j),
                }
            }
            BasisStructure { basic, lower, upper, binv }
        })
        .collect())
}

/// Every nonsingular basis with every split of its nonbasics. Used to check
/// that the dual filter loses nothing.
pub fn enumerate_all_structures(a: &Matrix) -> Result<Vec<BasisStructure>> {
    check_full_column_rank(a)?;
    let free = a.rows() - a.cols();
    if free > SUPERSET_NONBASIC_LIMIT {
        return Err(Error::LimitExceeded {
            what: "nonbasic count without the dual filter",
            measured: free,
            limit: SUPERSET_NONBASIC_LIMIT,
        });
    }
    let mut out = Vec::new();
    for (basic, binv) in nonsingular_bases(a) {
        let nonbasic: Vec<usize> = (0..a.rows()).filter(|j| !basic.contains(j)).collect();
        for mask in 0u64..1 << nonbasic.len() {
            let (mut upper, mut lower) = (Vec::new(), Vec::new());
            for (t, &j) in nonbasic.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    upper.push(j);
                } else {
                    lower.push(j);
                }
            }
            out.push(BasisStructure {
                basic: basic.clone(),
                lower,
                upper,
                binv: binv.clone(),
            });
        }
    }
    Ok(out)
}

/// The `2^p` vectors `x_𝓑 = τ`, `x_𝓛 = 0`, `x_𝓤 = 1`, with `τ` in binary
/// counting order.
pub fn candidates_from_basis(bs: &BasisStructure) -> Vec<Vec<bool>> {
    let mut base = vec![false; bs.m()];
    for &j in &bs.upper {
        base[j] = true;
    }
    (0u64..1 << bs.basic.len())
        .map(|tau| {
            let mut x = base.clone();
            for (k, &i) in bs.basic.iter().enumerate() {
                x[i] = tau >> k & 1 == 1;
            }
            x
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedRankOptions {
    pub p_limit: usize,
    /// When false, every split of every nonsingular basis is tried.
    pub dual_filter: bool,
}

impl Default for FixedRankOptions {
    fn default() -> Self {
        FixedRankOptions {
            p_limit: DEFAULT_P_LIMIT,
            dual_filter: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FixedRankStats {
    pub rank: usize,
    pub structures: usize,
    pub candidates: usize,
}

/// `C(m, p) · 2^p`, saturating.
pub fn candidate_bound(m: usize, p: usize) -> u128 {
    if p > m {
        return 0;
    }
    let binom = (0..p as u128).fold(1u128, |acc, t| acc * (m as u128 - t) / (t + 1));
    binom.saturating_mul(1u128.checked_shl(p as u32).unwrap_or(u128::MAX))
}

/// Scores `x` through the factored form: `λ = Aᵀx`, then
/// `y_j = [d_j + Σ_k B_kj λ_k > 0]`.
fn complete(inst: &Instance, a: &Matrix, b: &Matrix, x: &[bool]) -> (Vec<bool>, Rational) {
    let p = a.cols();
    let mut lambda = vec![Rational::zero(); p];
    let mut value = inst.c0().clone();
    for (i, _) in x.iter().enumerate().filter(|(_, &xi)| xi) {
        value += &inst.c()[i];
        for (l, v) in lambda.iter_mut().zip(a.row(i)) {
            *l += v;
        }
    }
    let y: Vec<bool> = (0..inst.n())
        .map(|j| {
            let score = &inst.d()[j] + (0..p).map(|k| &b[(k, j)] * &lambda[k]).sum::<Rational>();
            let take = score.is_positive();
            if take {
                value += score;
            }
            take
        })
        .collect();
    (y, value)
}

pub fn solve_fixed_rank(inst: &Instance, p_limit: usize) -> Result<Solution> {
    let opts = FixedRankOptions {
        p_limit,
        ..FixedRankOptions::default()
    };
    solve_fixed_rank_with(inst, &opts).map(|(s, _)| s)
}

/// Best candidate over all structures. Among equal values the
/// lexicographically smallest `x` wins.
pub fn solve_fixed_rank_with(inst: &Instance, opts: &FixedRankOptions) -> Result<(Solution, FixedRankStats)> {
    let f = rank_factorize(inst.q());
    let p = f.rank();
    if p > opts.p_limit {
        return Err(Error::LimitExceeded {
            what: "rank of Q",
            measured: p,
            limit: opts.p_limit,
        });
    }
    let structures = if opts.dual_filter {
        enumerate_dual_feasible_bases(&f.a, inst.c())?
    } else {
        enumerate_all_structures(&f.a)?
    };
    let mut stats = FixedRankStats {
        rank: p,
        structures: structures.len(),
        candidates: 0,
    };
    let mut best: Option<Solution> = None;
    for bs in &structures {
        for x in candidates_from_basis(bs) {
            stats.candidates += 1;
            let (y, value) = complete(inst, &f.a, &f.b, &x);
            let better = match &best {
                None => true,
                Some(b) => value > b.value || (value == b.value && x < b.x),
            };
            if better {
                best = Some(Solution { x, y, value });
            }
        }
    }
    let best = best.expect("a full-column-rank factor has a nonsingular basis");
    debug_assert_eq!(inst.evaluate(&best.x, &best.y).ok().as_ref(), Some(&best.value));
    Ok((best, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::ints;
    use crate::rational::int;

    fn column(v: &[i64]) -> Matrix {
        Matrix::from_fn(v.len(), 1, |i, _| int(v[i]))
    }

    #[test]
    fn sample_first_basis() {
        let a = column(&fixtures::SAMPLE_A);
        let c = ints(&fixtures::SAMPLE_C);
        let bases = enumerate_dual_feasible_bases(&a, &c).unwrap();
        assert_eq!(bases.len(), 5);
        let first = &bases[0];
        assert_eq!((first.basic.clone(), first.lower.clone(), first.upper.clone()), (vec![0], vec![], vec![1, 2, 3, 4]));
        let bases_costs: Vec<Rational> =
            (1..5).map(|j| reduced_cost(&a, &c, &first.basic, &first.binv, j).base).collect();
        assert_eq!(bases_costs, ints(&[-1, -12, -2, -9]));
        let bits = |v: &[u8]| v.iter().map(|&b| b == 1).collect::<Vec<_>>();
        assert_eq!(candidates_from_basis(first), vec![bits(&[0, 1, 1, 1, 1]), bits(&[1, 1, 1, 1, 1])]);
    }

    #[test]
    fn singular_bases_are_skipped() {
        let bases = enumerate_dual_feasible_bases(&column(&[1, 0]), &ints(&[0, 0])).unwrap();
        assert_eq!(bases.len(), 1);
        assert_eq!(bases[0].basic, vec![0]);
    }

    #[test]
    fn rank_two_counts() {
        let a = Matrix::from_ints(&[[1, 0], [0, 1], [1, 1], [2, -1]]);
        let bases = enumerate_dual_feasible_bases(&a, &ints(&[1, 2, 3, 4])).unwrap();
        assert!(bases.len() <= 6);
        assert!(bases.iter().all(|b| candidates_from_basis(b).len() == 4));
        assert!(enumerate_dual_feasible_bases(&Matrix::from_ints(&[[1, 1], [2, 2]]), &ints(&[0, 0])).is_err());
    }

    #[test]
    fn zero_rank() {
        let inst = Instance::from_ints(&[[0, 0], [0, 0]], &[1, -1], &[-1, 1], 0).unwrap();
        let (s, stats) = solve_fixed_rank_with(&inst, &FixedRankOptions::default()).unwrap();
        assert_eq!(s.value, int(2));
        assert_eq!((stats.rank, stats.structures, stats.candidates), (0, 1, 1));
    }

    #[test]
    fn fixtures_solve() {
        let (s, stats) = solve_fixed_rank_with(&fixtures::sample(), &FixedRankOptions::default()).unwrap();
        assert_eq!(s.value, int(56));
        assert!(stats.candidates as u128 <= candidate_bound(5, 1));
        assert_eq!(solve_fixed_rank(&fixtures::tadd(), 6).unwrap().value, int(4));
        assert_eq!(solve_fixed_rank(&fixtures::t1(), 6).unwrap().value, int(4));
        let superset = FixedRankOptions { dual_filter: false, ..Default::default() };
        assert_eq!(solve_fixed_rank_with(&fixtures::sample(), &superset).unwrap().0.value, int(56));
    }

    #[test]
    fn rank_limit_refuses() {
        let err = solve_fixed_rank(&fixtures::t1(), 1).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { measured: 2, limit: 1, .. }));
    }

    #[test]
    fn perturbation_breaks_zero_base() {
        let s = ReducedCostSign {
            base: int(0),
            perturbation: vec![(0, int(0)), (2, int(3)), (4, int(-1))],
        };
        assert_eq!(s.sign(), Ordering::Greater);
        assert_eq!(candidate_bound(6, 2), 60);
        assert_eq!(candidate_bound(3, 0), 1);
    }
}
