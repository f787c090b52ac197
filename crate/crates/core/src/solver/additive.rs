//! Solver for additive matrices `q_ij = a_i + b_j`.
//!
//! With `K = Σ y_j` and `L = Σ x_i` the objective splits as
//! `Σ_i (K a_i + c_i) x_i + Σ_j (L b_j + d_j) y_j + c0`. For fixed `(K, L)`
//! each half is maximized by taking the `L` (resp. `K`) largest keys, so one
//! sort per `K` and per `L` plus prefix sums cover all `(m+1)(n+1)` pairs.

use crate::analysis::AdditiveDecomposition;
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};
use crate::rational::Rational;

/// `scale · weight_i + offset_i`.
pub fn keys(scale: usize, weight: &[Rational], offset: &[Rational]) -> Vec<Rational> {
    let s = Rational::from(scale as i64);
    weight.iter().zip(offset).map(|(w, o)| &s * w + o).collect()
}

/// Indices sorted by key, largest first; ties by smaller index.
pub fn descending_order(keys: &[Rational]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&i, &j| keys[j].cmp(&keys[i]).then(i.cmp(&j)));
    idx
}

/// `prefix[t]` is the sum of the `t` largest keys.
pub fn prefix_sums(keys: &[Rational], order: &[usize]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order.len() + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for &i in order {
        acc += &keys[i];
        out.push(acc.clone());
    }
    out
}

/// Indicator of the first `count` entries of `order`.
pub fn top_selection(order: &[usize], count: usize) -> Vec<bool> {
    let mut v = vec![false; order.len()];
    for &i in &order[..count] {
        v[i] = true;
    }
    v
}

/// Optimal solution when `dec` reproduces `inst.q()`. Among equal values
/// the smallest `K`, then the smallest `L`, wins.
pub fn solve_additive(inst: &Instance, dec: &AdditiveDecomposition) -> Result<Solution> {
    if !dec.reconstructs(inst.q()) {
        return Err(Error::InvalidInput(
            "additive decomposition does not reproduce Q".into(),
        ));
    }
    let (m, n) = (inst.m(), inst.n());

    // f2[L][K]: best y-part with L ones in x and K ones in y
    let f2: Vec<Vec<Rational>> = (0..=m)
        .map(|l| {
            let k = keys(l, &dec.b, inst.d());
            prefix_sums(&k, &descending_order(&k))
        })
        .collect();

    let mut best: Option<(Rational, usize, usize)> = None;
    for k in 0..=n {
        let kx = keys(k, &dec.a, inst.c());
        let f1 = prefix_sums(&kx, &descending_order(&kx));
        for (l, (f1_l, f2_l)) in f1.iter().zip(&f2).enumerate() {
            let value = f1_l + &f2_l[k];
            if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
                best = Some((value, k, l));
            }
        }
    }
    let (value, k, l) = best.expect("K = L = 0 is always scored");
    let x = top_selection(&descending_order(&keys(k, &dec.a, inst.c())), l);
    let y = top_selection(&descending_order(&keys(l, &dec.b, inst.d())), k);
    let value = value + inst.c0();
    debug_assert_eq!(inst.evaluate(&x, &y).ok().as_ref(), Some(&value));
    Ok(Solution { x, y, value })
}
