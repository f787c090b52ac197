//! Rank-one solver.
//!
//! With `Q = aᵀb` the objective is `(a·x)(b·y) + c·x + d·y + c0`. Writing
//! `λ = a·x`, the best `x` for a given `λ` solves a parametric continuous
//! knapsack `h₁(λ) = max{c·x : a·x = λ, x ∈ [0,1]^m}` (concave, piecewise
//! linear), and the best `y` solves `h₂(μ) = max{d·y + μ b·y : y ∈ [0,1]^n}`
//! (convex, piecewise linear). Their sum is convex between consecutive
//! breakpoints of `h₁`, so it suffices to score `h₁(λ_k) + h₂(λ_k)` at the
//! at most `m + 1` breakpoints of `h₁`, where the knapsack optimum is a 0-1
//! vector. Both breakpoint sets are built by a ratio sort and scanned in one
//! merged ascending sweep, `O(n log n)` overall.

use std::cmp::Ordering;

use crate::analysis::rank_factorize;
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};
use crate::matrix::{select_sum, Matrix};
use crate::rational::Rational;

/// `Q = aᵀb` in factored form, plus the linear and constant terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneForm {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
    pub c0: Rational,
}

impl RankOneForm {
    pub fn new(
        a: Vec<Rational>,
        b: Vec<Rational>,
        c: Vec<Rational>,
        d: Vec<Rational>,
        c0: Rational,
    ) -> Result<Self> {
        if a.is_empty() || b.is_empty() || a.len() != c.len() || b.len() != d.len() {
            return Err(Error::Dimension(format!(
                "rank-one form needs |a| = |c| >= 1 and |b| = |d| >= 1, got {}, {}, {}, {}",
                a.len(),
                c.len(),
                b.len(),
                d.len()
            )));
        }
        Ok(RankOneForm { a, b, c, d, c0 })
    }

    /// Factors `inst.q()`; fails unless its rank is at most one.
    pub fn from_instance(inst: &Instance) -> Result<Self> {
        let f = rank_factorize(inst.q());
        let (a, b) = match f.rank() {
            0 => (vec![Rational::zero(); inst.m()], vec![Rational::zero(); inst.n()]),
            1 => (f.a_column(0), f.b_row(0)),
            p => {
                return Err(Error::NotApplicable(format!(
                    "cost matrix has rank {p}, not one"
                )))
            }
        };
        Self::new(a, b, inst.c().to_vec(), inst.d().to_vec(), inst.c0().clone())
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Smallest value of `a·x` over the box: the sum of negative `a_i`.
    pub fn lambda_low(&self) -> Rational {
        self.a.iter().filter(|v| v.is_negative()).sum()
    }

    /// Largest value of `a·x` over the box: the sum of positive `a_i`.
    pub fn lambda_high(&self) -> Rational {
        self.a.iter().filter(|v| v.is_positive()).sum()
    }

    pub fn evaluate(&self, x: &[bool], y: &[bool]) -> Result<Rational> {
        if x.len() != self.m() || y.len() != self.n() {
            return Err(Error::Dimension(format!(
                "expected |x| = {} and |y| = {}, got {} and {}",
                self.m(),
                self.n(),
                x.len(),
                y.len()
            )));
        }
        let ax = select_sum(&self.a, x);
        let by = select_sum(&self.b, y);
        Ok(ax * by + select_sum(&self.c, x) + select_sum(&self.d, y) + &self.c0)
    }

    /// Materializes `Q = aᵀb`. Quadratic in size; meant for small forms.
    pub fn to_instance(&self) -> Instance {
        let q = Matrix::from_fn(self.m(), self.n(), |i, j| &self.a[i] * &self.b[j]);
        Instance::new(q, self.c.clone(), self.d.clone(), self.c0.clone())
            .expect("validated dimensions")
    }
}

/// Which parametric problem a [`BreakpointTrack`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrackKind {
    /// `h₁(λ) = max{c·x : a·x = λ}`; the selected set has `a·x = λ`.
    Knapsack,
    /// `h₂(μ) = max{d·y + μ b·y}`; the value is `level + μ·weight`.
    Linear,
}

/// State of a parametric optimum right after arriving at a breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoint {
    pub at: Rational,
    /// Indices whose 0-1 value changes on arriving here.
    pub flips: Vec<usize>,
    /// Linear coefficients summed over the selected set (`c·x` or `d·y`).
    pub level: Rational,
    /// Parametric coefficients summed over the selected set (`a·x` or `b·y`).
    pub weight: Rational,
}

/// Ordered breakpoints of `h₁` or `h₂` with incremental solution state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakpointTrack {
    pub kind: TrackKind,
    /// The left end `λ̲` of the parameter range.
    pub origin: Rational,
    /// Optimal 0-1 vector at the origin (for `h₂`, on the piece just right
    /// of it).
    pub initial: Vec<bool>,
    pub initial_level: Rational,
    pub initial_weight: Rational,
    /// Breakpoints strictly to the right of the origin, ascending.
    pub points: Vec<Breakpoint>,
}

impl BreakpointTrack {
    fn value_of(&self, at: &Rational, level: &Rational, weight: &Rational) -> Rational {
        match self.kind {
            TrackKind::Knapsack => level.clone(),
            TrackKind::Linear => level + at * weight,
        }
    }

    /// Breakpoint parameters. For `h₁` the origin `λ̲ = λ₁` is included.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let head = (self.kind == TrackKind::Knapsack).then(|| self.origin.clone());
        head.into_iter()
            .chain(self.points.iter().map(|p| p.at.clone()))
            .collect()
    }

    /// Parametric optimum at each entry of [`breakpoints`](Self::breakpoints).
    pub fn values(&self) -> Vec<Rational> {
        let head = (self.kind == TrackKind::Knapsack).then(|| self.initial_level.clone());
        head.into_iter()
            .chain(self.points.iter().map(|p| self.value_of(&p.at, &p.level, &p.weight)))
            .collect()
    }

    /// Parametric optimum at the origin.
    pub fn origin_value(&self) -> Rational {
        self.value_of(&self.origin, &self.initial_level, &self.initial_weight)
    }

    /// Value of `h₂` anywhere at or right of the origin. Only meaningful for
    /// [`TrackKind::Linear`].
    pub fn linear_value_at(&self, mu: &Rational) -> Rational {
        let passed = self.points.partition_point(|p| p.at <= *mu);
        match passed {
            0 => &self.initial_level + mu * &self.initial_weight,
            k => &self.points[k - 1].level + mu * &self.points[k - 1].weight,
        }
    }

    /// Solution after applying the flips of the first `count` points.
    pub fn solution_after(&self, count: usize, a_signs: Option<&[Rational]>) -> Vec<bool> {
        let mut v = self.initial.clone();
        for p in &self.points[..count] {
            for &i in &p.flips {
                v[i] = match a_signs {
                    Some(a) => a[i].is_positive(),
                    None => !v[i],
                };
            }
        }
        v
    }
}

/// `num_i / den_i` vs `num_j / den_j` for nonzero denominators, by
/// cross-multiplication.
fn cmp_ratios(num_i: &Rational, den_i: &Rational, num_j: &Rational, den_j: &Rational) -> Ordering {
    let ord = (num_i * den_j).cmp(&(num_j * den_i));
    if den_i.is_negative() != den_j.is_negative() {
        ord.reverse()
    } else {
        ord
    }
}

/// `(p, q, i)` with `p / q = num_i / den_i` and `q > 0` for each `i` in
/// `idx`, when every ratio fits in `i64`.
fn small_ratios(idx: &[usize], num: &[Rational], den: &[Rational]) -> Option<Vec<(i64, i64, usize)>> {
    idx.iter()
        .map(|&i| {
            let (a, b) = num[i].to_small()?;
            let (c, d) = den[i].to_small()?;
            // (a/b) / (c/d) = (a d) / (b c)
            let (p, q) = (a.checked_mul(d)?, b.checked_mul(c)?);
            if q < 0 {
                Some((p.checked_neg()?, q.checked_neg()?, i))
            } else {
                Some((p, q, i))
            }
        })
        .collect()
}

fn cmp_small(x: &(i64, i64, usize), y: &(i64, i64, usize)) -> Ordering {
    (x.0 as i128 * y.1 as i128).cmp(&(y.0 as i128 * x.1 as i128))
}

/// Sorts `idx` by `num/den` (descending if `descending`), ties by index,
/// and groups equal ratios.
fn ratio_groups(
    mut idx: Vec<usize>,
    num: &[Rational],
    den: &[Rational],
    descending: bool,
) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    if let Some(mut keyed) = small_ratios(&idx, num, den) {
        keyed.sort_unstable_by(|x, y| {
            let ord = cmp_small(x, y);
            (if descending { ord.reverse() } else { ord }).then(x.2.cmp(&y.2))
        });
        for (k, key) in keyed.iter().enumerate() {
            match groups.last_mut() {
                Some(g) if cmp_small(&keyed[k - 1], key) == Ordering::Equal => g.push(key.2),
                _ => groups.push(vec![key.2]),
            }
        }
        return groups;
    }
    idx.sort_unstable_by(|&i, &j| {
        let ord = cmp_ratios(&num[i], &den[i], &num[j], &den[j]);
        (if descending { ord.reverse() } else { ord }).then(i.cmp(&j))
    });
    for i in idx {
        match groups.last_mut() {
            Some(g) if cmp_ratios(&num[g[0]], &den[g[0]], &num[i], &den[i]) == Ordering::Equal => {
                g.push(i)
            }
            _ => groups.push(vec![i]),
        }
    }
    groups
}

/// Breakpoints of `h₁(λ)` on `[λ̲, λ̄]`.
///
/// Starts from `x¹` (`x_i = 1` iff `a_i < 0`, or `a_i = 0` and `c_i > 0`)
/// and visits the groups of equal ratio `c_i / a_i` in descending order.
/// Each group `T` moves `λ` right by `Σ_T |a_i|`, switching on its members
/// with `a_i > 0` and off those with `a_i < 0`. Indices with `a_i = 0` never
/// move. At most `m + 1` breakpoints result.
pub fn pkp_breakpoints(form: &RankOneForm) -> BreakpointTrack {
    let (a, c) = (&form.a, &form.c);
    let initial: Vec<bool> = a
        .iter()
        .zip(c)
        .map(|(ai, ci)| ai.is_negative() || (ai.is_zero() && ci.is_positive()))
        .collect();
    let mut level = select_sum(c, &initial);
    let mut weight = form.lambda_low();
    let origin = weight.clone();
    let (initial_level, initial_weight) = (level.clone(), weight.clone());

    let movable: Vec<usize> = (0..form.m()).filter(|&i| !a[i].is_zero()).collect();
    let points = ratio_groups(movable, c, a, true)
        .into_iter()
        .map(|group| {
            for &i in &group {
                if a[i].is_positive() {
                    level += &c[i];
                    weight += &a[i];
                } else {
                    level -= &c[i];
                    weight -= &a[i];
                }
            }
            Breakpoint {
                at: weight.clone(),
                flips: group,
                level: level.clone(),
                weight: weight.clone(),
            }
        })
        .collect();

    BreakpointTrack {
        kind: TrackKind::Knapsack,
        origin,
        initial,
        initial_level,
        initial_weight,
        points,
    }
}

/// Breakpoints of `h₂(μ)` for `μ > λ̲`.
///
/// `y⁰` is optimal just right of `λ̲`: `y_j = 1` iff `d_j + λ̲ b_j > 0`, or
/// it is zero and `b_j ≥ 0`. The breakpoints are the distinct values
/// `-d_j / b_j > λ̲` in ascending order; at each one every index of the tie
/// group flips. `level`/`weight` carry `D = d·y` and `B = b·y`, so
/// `h₂(μ_ℓ) = D^ℓ + μ_ℓ B^ℓ`. Breakpoints beyond `λ̄` are kept.
pub fn ulp_breakpoints(form: &RankOneForm) -> BreakpointTrack {
    let (b, d) = (&form.b, &form.d);
    let origin = form.lambda_low();
    let score: Vec<Rational> = b.iter().zip(d).map(|(bj, dj)| dj + &origin * bj).collect();
    let initial: Vec<bool> = score
        .iter()
        .zip(b)
        .map(|(s, bj)| s.is_positive() || (s.is_zero() && !bj.is_negative()))
        .collect();
    let mut level = select_sum(d, &initial);
    let mut weight = select_sum(b, &initial);
    let (initial_level, initial_weight) = (level.clone(), weight.clone());

    // -d_j/b_j > λ̲ exactly when the score at λ̲ and b_j have opposite signs
    let crossing: Vec<usize> = (0..form.n())
        .filter(|&j| !b[j].is_zero() && !score[j].is_zero())
        .filter(|&j| score[j].is_negative() != b[j].is_negative())
        .collect();
    let neg_d: Vec<Rational> = d.iter().map(|v| -v).collect();
    let mut state = initial.clone();
    let points = ratio_groups(crossing, &neg_d, b, false)
        .into_iter()
        .map(|group| {
            let at = &neg_d[group[0]] / &b[group[0]];
            for &j in &group {
                if state[j] {
                    level -= &d[j];
                    weight -= &b[j];
                } else {
                    level += &d[j];
                    weight += &b[j];
                }
                state[j] = !state[j];
            }
            Breakpoint {
                at,
                flips: group,
                level: level.clone(),
                weight: weight.clone(),
            }
        })
        .collect();

    BreakpointTrack {
        kind: TrackKind::Linear,
        origin,
        initial,
        initial_level,
        initial_weight,
        points,
    }
}

/// Indices with `y⁰_j = 0`, i.e. `d_j + λ̲ b_j < 0` or that value is zero
/// and `b_j < 0`.
pub fn ulp_initial_zero_set(form: &RankOneForm) -> Vec<usize> {
    let low = form.lambda_low();
    (0..form.n())
        .filter(|&j| {
            let s = &form.d[j] + &low * &form.b[j];
            s.is_negative() || (s.is_zero() && form.b[j].is_negative())
        })
        .collect()
}

/// `(parameter, value)` rows of `h₁` and `h₂` over `[λ̲, λ̄]`, two-column
/// text blocks headed by `# h1` and `# h2`. The `h₂` block includes both
/// ends of the range.
pub fn breakpoint_table(form: &RankOneForm) -> String {
    let pkp = pkp_breakpoints(form);
    let ulp = ulp_breakpoints(form);
    let high = form.lambda_high();
    let mut out = String::from("# h1\n");
    for (l, h) in pkp.breakpoints().iter().zip(pkp.values()) {
        out += &format!("{l} {h}\n");
    }
    out += "# h2\n";
    let mut rows = vec![(ulp.origin.clone(), ulp.origin_value())];
    rows.extend(
        ulp.breakpoints()
            .into_iter()
            .zip(ulp.values())
            .filter(|(mu, _)| *mu <= high),
    );
    if rows.last().is_some_and(|(mu, _)| *mu < high) {
        rows.push((high.clone(), ulp.linear_value_at(&high)));
    }
    for (mu, h) in rows {
        out += &format!("{mu} {h}\n");
    }
    out
}

/// One scored candidate of the merged sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCandidate {
    pub lambda: Rational,
    pub h1: Rational,
    pub h2: Rational,
    pub value: Rational,
}

/// Scores `h₁(λ_k) + h₂(λ_k) + c0` at every breakpoint of `h₁`. All `h₂`
/// breakpoints at or below `λ_k` are absorbed before scoring; a flip at
/// `μ = λ_k` is value-neutral there. Returns the candidates and, for each,
/// how many `h₂` breakpoints had been absorbed.
pub fn sweep(form: &RankOneForm, pkp: &BreakpointTrack, ulp: &BreakpointTrack) -> Vec<(SweepCandidate, usize)> {
    let mut level = ulp.initial_level.clone();
    let mut weight = ulp.initial_weight.clone();
    let mut absorbed = 0;
    let lambdas = pkp.breakpoints();
    let h1s = pkp.values();
    let mut out = Vec::with_capacity(lambdas.len());
    for (lambda, h1) in lambdas.into_iter().zip(h1s) {
        while absorbed < ulp.points.len() && ulp.points[absorbed].at <= lambda {
            level = ulp.points[absorbed].level.clone();
            weight = ulp.points[absorbed].weight.clone();
            absorbed += 1;
        }
        let h2 = &level + &lambda * &weight;
        let value = &h1 + &h2 + &form.c0;
        out.push((SweepCandidate { lambda, h1, h2, value }, absorbed));
    }
    out
}

/// Optimal solution of a rank-one instance by the merged breakpoint sweep.
/// Among equal values the smallest `λ` wins.
pub fn solve_rank_one(form: &RankOneForm) -> Solution {
    let pkp = pkp_breakpoints(form);
    let ulp = ulp_breakpoints(form);
    // same scan as `sweep`, keeping only the first maximum
    let knapsack = std::iter::once((&pkp.origin, &pkp.initial_level))
        .chain(pkp.points.iter().map(|p| (&p.at, &p.level)));
    let mut absorbed = 0;
    let mut best: Option<(Rational, usize, usize)> = None;
    for (k, (lambda, h1)) in knapsack.enumerate() {
        while absorbed < ulp.points.len() && ulp.points[absorbed].at <= *lambda {
            absorbed += 1;
        }
        let (level, weight) = match absorbed {
            0 => (&ulp.initial_level, &ulp.initial_weight),
            a => (&ulp.points[a - 1].level, &ulp.points[a - 1].weight),
        };
        let value = h1 + &(level + &(lambda * weight));
        if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
            best = Some((value, k, absorbed));
        }
    }
    let (value, k, absorbed) = best.expect("the origin is always a candidate");
    let value = value + &form.c0;
    let x = pkp.solution_after(k, Some(&form.a));
    let y = ulp.solution_after(absorbed, None);
    debug_assert_eq!(form.evaluate(&x, &y).ok().as_ref(), Some(&value));
    Solution { x, y, value }
}

/// Maximizes `(a0 + a·x)(b0 + b·y) + c·x + d·y` when `c = 0` or `d = 0`, in
/// linear time.
///
/// With `d = 0`, fixing `λ = b0 + b·y` leaves `L(λ) = max_x (a0 + a·x)λ + c·x`,
/// a maximum of linear functions and hence convex; its maximum over the
/// reachable interval sits at an end, i.e. at the `y` maximizing or the `y`
/// minimizing `b0 + b·y`. The case `c = 0` is symmetric.
pub fn solve_rank_one_zero_linear(
    a0: &Rational,
    a: &[Rational],
    b0: &Rational,
    b: &[Rational],
    c: &[Rational],
    d: &[Rational],
) -> Result<Solution> {
    if a.len() != c.len() || b.len() != d.len() {
        return Err(Error::Dimension(format!(
            "expected |a| = |c| and |b| = |d|, got {}, {}, {}, {}",
            a.len(),
            c.len(),
            b.len(),
            d.len()
        )));
    }
    let c_zero = c.iter().all(Rational::is_zero);
    let d_zero = d.iter().all(Rational::is_zero);
    if !c_zero && !d_zero {
        return Err(Error::NotApplicable(
            "both linear terms are nonzero; use solve_rank_one".into(),
        ));
    }

    // Solve with the free side on y: fixed side (u0, u), free side (v0, v, w).
    fn extremes(
        u0: &Rational,
        u: &[Rational],
        v0: &Rational,
        v: &[Rational],
        w: &[Rational],
    ) -> (Vec<bool>, Vec<bool>) {
        let best = [
            u.iter().map(Rational::is_positive).collect::<Vec<_>>(),
            u.iter().map(Rational::is_negative).collect::<Vec<_>>(),
        ]
        .into_iter()
        .map(|fixed| {
            let lambda = u0 + select_sum(u, &fixed);
            let free: Vec<bool> = v
                .iter()
                .zip(w)
                .map(|(vi, wi)| (&lambda * vi + wi).is_positive())
                .collect();
            let value = &lambda * (v0 + select_sum(v, &free)) + select_sum(w, &free);
            (value, fixed, free)
        })
        .reduce(|best, cand| if cand.0 > best.0 { cand } else { best })
        .expect("two candidates");
        (best.1, best.2)
    }

    let (x, y) = if d_zero {
        // free side x with coefficients (a, c), fixed side y
        let (y, x) = extremes(b0, b, a0, a, c);
        (x, y)
    } else {
        extremes(a0, a, b0, b, d)
    };
    let value = (a0 + select_sum(a, &x)) * (b0 + select_sum(b, &y))
        + select_sum(c, &x)
        + select_sum(d, &y);
    Ok(Solution { x, y, value })
}
