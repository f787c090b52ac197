//! Enumeration over `x`. For fixed `x` the objective is linear in `y`, so
//! `y_j = [Σ_i q_ij x_i + d_j > 0]` is optimal and only the `2^m` choices of
//! `x` remain.

use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};
use crate::matrix::select_sum;
use crate::rational::Rational;

pub const DEFAULT_M_LIMIT: usize = 25;

/// Size guard for [`solve_exhaustive`], in total variables.
pub const DEFAULT_ORACLE_LIMIT: usize = 24;

/// Best response in `y`. Ties (`score == 0`) leave `y_j = 0`.
pub fn best_y_for_x(inst: &Instance, x: &[bool]) -> Result<(Vec<bool>, Rational)> {
    if x.len() != inst.m() {
        return Err(Error::Dimension(format!(
            "expected |x| = {}, got {}",
            inst.m(),
            x.len()
        )));
    }
    let y: Vec<bool> = inst.column_scores(x).iter().map(Rational::is_positive).collect();
    let value = inst.evaluate(x, &y)?;
    Ok((y, value))
}

fn mask_to_vec(mask: u64, len: usize) -> Vec<bool> {
    (0..len).map(|i| mask >> i & 1 == 1).collect()
}

/// Lexicographic order on `(x_1, ..., x_m)` as an integer key.
fn lex_key(mask: u64) -> u64 {
    mask.reverse_bits()
}

/// Calls `visit(mask, value)` for every `x`, where `value` is the optimum
/// over `y`. Walks `x` in Gray-code order so each step flips one `x_i` and
/// updates the column scores in `O(n)`.
fn for_each_x(inst: &Instance, mut visit: impl FnMut(u64, &Rational)) {
    let m = inst.m();
    let mut scores = inst.d().to_vec();
    let mut linear = inst.c0().clone();
    let mut mask = 0u64;
    let positive_sum = |s: &[Rational]| s.iter().filter(|v| v.is_positive()).sum::<Rational>();

    visit(mask, &(&linear + positive_sum(&scores)));
    for k in 1u64..(1u64 << m) {
        let i = k.trailing_zeros() as usize;
        mask ^= 1 << i;
        let row = inst.q().row(i);
        if mask >> i & 1 == 1 {
            linear += &inst.c()[i];
            scores.iter_mut().zip(row).for_each(|(s, q)| *s += q);
        } else {
            linear -= &inst.c()[i];
            scores.iter_mut().zip(row).for_each(|(s, q)| *s -= q);
        }
        visit(mask, &(&linear + positive_sum(&scores)));
    }
}

/// Optimal solution by enumerating all `2^m` choices of `x`; among optimal
/// `x` the lexicographically smallest is returned.
pub fn solve_enumeration(inst: &Instance, m_limit: usize) -> Result<Solution> {
    let limit = m_limit.min(63);
    if inst.m() > limit {
        return Err(Error::LimitExceeded {
            what: "row count m",
            measured: inst.m(),
            limit,
        });
    }
    let mut best: Option<(Rational, u64)> = None;
    for_each_x(inst, |mask, value| {
        let better = match &best {
            None => true,
            Some((v, b)) => value > v || (value == v && lex_key(mask) < lex_key(*b)),
        };
        if better {
            best = Some((value.clone(), mask));
        }
    });
    let (_, mask) = best.expect("at least one x");
    let x = mask_to_vec(mask, inst.m());
    let (y, value) = best_y_for_x(inst, &x)?;
    Ok(Solution { x, y, value })
}

/// Brute-force oracle: scores every one of the `2^(m+n)` points. Used to
/// validate the structured solvers; refuses above `var_limit` variables.
pub fn solve_exhaustive(inst: &Instance, var_limit: usize) -> Result<Solution> {
    let (m, n) = (inst.m(), inst.n());
    let limit = var_limit.min(40);
    if m + n > limit {
        return Err(Error::LimitExceeded {
            what: "variable count m+n",
            measured: m + n,
            limit,
        });
    }
    let mut best: Option<(Rational, u64, u64)> = None;
    for xm in 0u64..(1 << m) {
        let x = mask_to_vec(xm, m);
        let base = inst.c0() + select_sum(inst.c(), &x);
        let mut scores = inst.d().to_vec();
        for i in (0..m).filter(|&i| x[i]) {
            for (s, q) in scores.iter_mut().zip(inst.q().row(i)) {
                *s += q;
            }
        }
        for ym in 0u64..(1 << n) {
            let value = (0..n)
                .filter(|&j| ym >> j & 1 == 1)
                .fold(base.clone(), |acc, j| acc + &scores[j]);
            if best.as_ref().is_none_or(|(v, _, _)| value > *v) {
                best = Some((value, xm, ym));
            }
        }
    }
    let (value, xm, ym) = best.expect("at least one point");
    Ok(Solution {
        x: mask_to_vec(xm, m),
        y: mask_to_vec(ym, n),
        value,
    })
}
