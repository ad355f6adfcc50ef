//! The balance function `B(r)` and the thresholds derived from it.
//!
//! `B(r)` is the probability that a randomly chosen positive item outscores a
//! randomly chosen *labelled-positive* item (any item scoring strictly above
//! `r`), with score ties counted as one half. It starts at
//! `(P/2 + N*A) / (P + N)` for thresholds below every score, decreases to
//! zero as the threshold rises, and the threshold where it crosses one half
//! is the point at which the labelled set is statistically indistinguishable
//! from the positive class under pairwise comparison.
//!
//! Two evaluators are provided. [`balance_exact`] sums the pairwise
//! probability directly from counts (both draws independent, so the same
//! item can be picked twice and then ties with itself). [`balance_monte_carlo`]
//! estimates the same quantity by sampling, but never compares an item with
//! itself: when both draws land on the same underlying item the labelled
//! pick is redrawn. The two agree as the class and labelled sets grow; on
//! tiny datasets the sampling protocol can differ visibly from the exact
//! value (see the module tests for a worked four-item example).

use crate::dataset::ScoredDataset;
use crate::logistic::LogisticModel;
use crate::metrics::{auc_rank, McEstimate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BalanceError {
    #[error("no items are labelled positive at this threshold")]
    EmptyLabelSet,
    #[error("no valid pairs: the labelled set is the single positive item itself")]
    NoValidPairs,
    #[error("balance target must lie strictly between 0 and 1, got {0}")]
    InvalidTarget(f64),
    #[error("band targets must satisfy low < mid < high")]
    InvalidBand,
    #[error("B(r) never crosses the target: its largest value is {limit}")]
    NoBalancedThreshold { limit: f64 },
}

/// Target value for solving `B(r) = target`; defaults to one half.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BalanceTarget(f64);

impl BalanceTarget {
    pub fn new(target: f64) -> Result<Self, BalanceError> {
        if target > 0.0 && target < 1.0 {
            Ok(BalanceTarget(target))
        } else {
            Err(BalanceError::InvalidTarget(target))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for BalanceTarget {
    fn default() -> Self {
        BalanceTarget(0.5)
    }
}

/// `B(r)` split into the contribution from truly-positive labelled items
/// (`b_plus`) and from negative labelled items (`b_minus`).
///
/// `b = b_plus + b_minus` holds exactly by construction, and
/// `b_plus = v(r) * C(r) / 2` up to float rounding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BalanceValue {
    pub r: f64,
    pub b: f64,
    pub b_plus: f64,
    pub b_minus: f64,
}

/// Exact balance value at threshold `r`.
///
/// With `k` positives and `m` negatives above `r`, the pairwise sum over all
/// `P * (k + m)` independent draws is `k^2/2` for positive-positive
/// comparisons plus, for each labelled negative, its half-tie comparison
/// weight against the positives. All terms are half-integers, so the result
/// is a single exact division.
pub fn balance_exact(ds: &ScoredDataset, r: f64) -> Result<BalanceValue, BalanceError> {
    let k = ds.pos_above(r);
    let m = ds.neg_above(r);
    if k + m == 0 {
        return Err(BalanceError::EmptyLabelSet);
    }
    // sum over labelled negatives of (#pos above + #pos tied / 2)
    let neg = ds.neg_scores();
    let mut neg_weight = 0.0f64;
    for &s in &neg[neg.len() - m..] {
        neg_weight += ds.pos_above(s) as f64 + 0.5 * ds.pos_at(s) as f64;
    }
    Ok(assemble(r, k, m, neg_weight, ds.num_pos()))
}

fn assemble(r: f64, k: usize, m: usize, neg_weight: f64, num_pos: usize) -> BalanceValue {
    let kf = k as f64;
    let denominator = ((k + m) * num_pos) as f64;
    let pos_term = 0.5 * kf * kf;
    let b = (pos_term + neg_weight) / denominator;
    let b_plus = pos_term / denominator;
    BalanceValue {
        r,
        b,
        b_plus,
        b_minus: b - b_plus,
    }
}

/// Limiting value of `B` as the threshold drops below every score:
/// `(P/2 + N*A) / (P + N)` with `A` the rank AUC.
pub fn balance_limit(ds: &ScoredDataset) -> f64 {
    let p = ds.num_pos() as f64;
    let n = ds.num_neg() as f64;
    (p / 2.0 + n * auc_rank(ds).value) / (n + p)
}

/// Monte Carlo balance estimate at threshold `r`.
///
/// Each round draws one positive uniformly, then one labelled item uniformly
/// from the labelled set with that same underlying item excluded; rounds
/// whose exclusion pool is empty are redrawn. Score ties between distinct
/// items count one half. Deterministic for a given seed.
pub fn balance_monte_carlo(
    ds: &ScoredDataset,
    r: f64,
    n_samples: u64,
    seed: u64,
) -> Result<McEstimate, BalanceError> {
    assert!(n_samples >= 1, "n_samples must be >= 1");
    let pos = ds.pos_scores();
    let neg = ds.neg_scores();
    let p = pos.len();
    let k = ds.pos_above(r); // labelled positives: pos[p - k ..]
    let m = ds.neg_above(r); // labelled negatives: neg[neg.len() - m ..]
    if k + m == 0 {
        return Err(BalanceError::EmptyLabelSet);
    }
    if k + m == 1 && k == 1 && p == 1 {
        return Err(BalanceError::NoValidPairs);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0.0f64;
    for _ in 0..n_samples {
        // redraw the whole round while the drawn positive is the entire
        // labelled set; p >= 2 or m >= 1 ensures this terminates
        let (i, pool) = loop {
            let i = rng.random_range(0..p);
            let in_labelled = i >= p - k;
            let pool = k + m - usize::from(in_labelled);
            if pool > 0 {
                break (i, pool);
            }
        };
        let mut j = rng.random_range(0..pool);
        // skip the excluded self-slot among the labelled positives
        if i >= p - k && j >= i - (p - k) {
            j += 1;
        }
        let other = if j < k {
            pos[p - k + j]
        } else {
            neg[neg.len() - m + (j - k)]
        };
        let s = pos[i];
        total += if s > other {
            1.0
        } else if s == other {
            0.5
        } else {
            0.0
        };
    }
    let value = total / n_samples as f64;
    Ok(McEstimate {
        value,
        std_error: (value * (1.0 - value) / n_samples as f64).sqrt(),
        n_samples,
    })
}

/// The score-space threshold interpreted as "predicted probability one half"
/// under the log-probability score definition: `ln(1/2)`, independent of the
/// fitted coefficients. Kept as a model method argument so reports can
/// contrast it with the balance-based threshold only when a model exists.
pub fn naive_threshold(_model: &LogisticModel) -> f64 {
    0.5f64.ln()
}

/// Result of solving `B(r) = target`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BalanceThreshold {
    /// Threshold linearly interpolated between the bracketing grid points.
    pub r: f64,
    /// The grid point on the low-balance side of the bracket; headline
    /// metrics are evaluated here so they depend only on score ranks.
    pub grid_r: f64,
    /// Bracketing grid thresholds `(r_lo, r_hi)` with `B(r_lo) > target >= B(r_hi)`.
    pub bracket_r: (f64, f64),
    /// Balance values at the bracket endpoints.
    pub bracket_b: (f64, f64),
    /// True when `B` crossed the target more than once; the first (smallest
    /// threshold) crossing is reported.
    pub multiple_crossings: bool,
}

/// `B` evaluated on the full threshold grid: one point one unit below the
/// minimum score, one per midpoint between consecutive distinct scores, and
/// one one unit above the maximum score (where the labelled set is empty and
/// `B` is taken at its limit, zero).
#[derive(Debug, Clone, PartialEq)]
pub struct BalanceCurve {
    points: Vec<BalanceValue>,
}

impl BalanceCurve {
    pub fn evaluate(ds: &ScoredDataset) -> BalanceCurve {
        let distinct = ds.distinct_scores();
        let mut thresholds = Vec::with_capacity(distinct.len() + 1);
        thresholds.push(distinct[0] - 1.0);
        for w in distinct.windows(2) {
            thresholds.push((w[0] + w[1]) / 2.0);
        }

        // per-negative comparison weights, summed from the top score down;
        // all values are half-integers so the suffix sums are exact
        let neg = ds.neg_scores();
        let mut suffix = vec![0.0f64; neg.len() + 1];
        for idx in (0..neg.len()).rev() {
            let w = ds.pos_above(neg[idx]) as f64 + 0.5 * ds.pos_at(neg[idx]) as f64;
            suffix[idx] = suffix[idx + 1] + w;
        }

        let mut points: Vec<BalanceValue> = thresholds
            .into_iter()
            .map(|r| {
                let k = ds.pos_above(r);
                let m = ds.neg_above(r);
                let neg_weight = suffix[neg.len() - m];
                assemble(r, k, m, neg_weight, ds.num_pos())
            })
            .collect();
        points.push(BalanceValue {
            r: distinct[distinct.len() - 1] + 1.0,
            b: 0.0,
            b_plus: 0.0,
            b_minus: 0.0,
        });
        BalanceCurve { points }
    }

    pub fn points(&self) -> &[BalanceValue] {
        &self.points
    }

    /// Largest grid value of `B`, attained below the minimum score; equals
    /// [`balance_limit`] up to float rounding.
    pub fn limit(&self) -> f64 {
        self.points[0].b
    }

    /// Solves `B(r) = target` by scanning for the first bracket where `B`
    /// falls from above the target to at-or-below it, then interpolating
    /// linearly inside the bracket.
    pub fn solve(&self, target: BalanceTarget) -> Result<BalanceThreshold, BalanceError> {
        let t = target.value();
        if !(self.limit() > t) {
            return Err(BalanceError::NoBalancedThreshold { limit: self.limit() });
        }
        let pairs: Vec<(f64, f64)> = self.points.iter().map(|p| (p.r, p.b)).collect();
        scan_for_crossing(&pairs, t)
            .ok_or(BalanceError::NoBalancedThreshold { limit: self.limit() })
    }
}

fn scan_for_crossing(points: &[(f64, f64)], target: f64) -> Option<BalanceThreshold> {
    let mut first: Option<usize> = None;
    let mut crossings = 0usize;
    for i in 0..points.len() - 1 {
        if points[i].1 > target && points[i + 1].1 <= target {
            crossings += 1;
            if first.is_none() {
                first = Some(i);
            }
        }
    }
    let i = first?;
    let (r_lo, b_lo) = points[i];
    let (r_hi, b_hi) = points[i + 1];
    let fraction = (b_lo - target) / (b_lo - b_hi);
    Some(BalanceThreshold {
        r: r_lo + fraction * (r_hi - r_lo),
        grid_r: r_hi,
        bracket_r: (r_lo, r_hi),
        bracket_b: (b_lo, b_hi),
        multiple_crossings: crossings > 1,
    })
}

/// Convenience wrapper: evaluate the curve and solve a single target.
pub fn solve_balance_threshold(
    ds: &ScoredDataset,
    target: BalanceTarget,
) -> Result<BalanceThreshold, BalanceError> {
    BalanceCurve::evaluate(ds).solve(target)
}

/// One row of the balance-versus-operating-point sweep: `B` paired with the
/// precision and the two rates at the same threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TradeoffPoint {
    pub r: f64,
    pub b: f64,
    pub precision: f64,
    pub v: f64,
    pub u: f64,
}

/// The balance grid with `C`, `v` and `u` attached, excluding the
/// empty-labelled-set sentinel so every precision is well defined.
pub fn tradeoff_curve(ds: &ScoredDataset) -> Vec<TradeoffPoint> {
    let curve = BalanceCurve::evaluate(ds);
    let p = ds.num_pos() as f64;
    let n = ds.num_neg() as f64;
    curve
        .points()
        .iter()
        .take_while(|pt| ds.pos_above(pt.r) + ds.neg_above(pt.r) > 0)
        .map(|pt| {
            let tp = ds.pos_above(pt.r);
            let fp = ds.neg_above(pt.r);
            TradeoffPoint {
                r: pt.r,
                b: pt.b,
                precision: tp as f64 / (tp + fp) as f64,
                v: tp as f64 / p,
                u: fp as f64 / n,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t1() -> ScoredDataset {
        ScoredDataset::new(vec![2.0, 4.0], vec![1.0, 3.0]).unwrap()
    }

    fn t2() -> ScoredDataset {
        ScoredDataset::new(vec![3.0, 4.0], vec![1.0, 2.0]).unwrap()
    }

    /// Direct pair enumeration over independent draws (self-ties allowed).
    fn balance_brute(ds: &ScoredDataset, r: f64) -> Option<f64> {
        let labelled: Vec<f64> = ds
            .pos_scores()
            .iter()
            .chain(ds.neg_scores())
            .copied()
            .filter(|&s| s > r)
            .collect();
        if labelled.is_empty() {
            return None;
        }
        let mut total = 0.0;
        for &p in ds.pos_scores() {
            for &l in &labelled {
                total += if p > l {
                    1.0
                } else if p == l {
                    0.5
                } else {
                    0.0
                };
            }
        }
        Some(total / (ds.num_pos() * labelled.len()) as f64)
    }

    #[test]
    fn worked_examples_on_t1() {
        assert_eq!(balance_exact(&t1(), 0.5).unwrap().b, 0.625);
        assert_eq!(balance_exact(&t1(), 1.5).unwrap().b, 0.5);
        assert_eq!(balance_exact(&t1(), 2.5).unwrap().b, 0.375);
        assert_eq!(
            balance_exact(&t1(), 9.0),
            Err(BalanceError::EmptyLabelSet)
        );
    }

    #[test]
    fn labelled_set_equal_to_positive_set_is_balanced() {
        // at r = 2.5 the labelled set of T2 is exactly the positive set
        assert_eq!(balance_exact(&t2(), 2.5).unwrap().b, 0.5);
    }

    #[test]
    fn exact_matches_brute_force_on_fixtures() {
        for ds in [t1(), t2()] {
            for r in [-1.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5] {
                match balance_brute(&ds, r) {
                    Some(expected) => {
                        assert_eq!(balance_exact(&ds, r).unwrap().b, expected, "r = {r}")
                    }
                    None => assert!(balance_exact(&ds, r).is_err()),
                }
            }
        }
    }

    #[test]
    fn below_minimum_equals_the_limit() {
        for ds in [t1(), t2()] {
            let below = balance_exact(&ds, ds.min_score() - 1.0).unwrap().b;
            assert!((below - balance_limit(&ds)).abs() < 1e-12);
        }
        assert_eq!(balance_limit(&t1()), 0.625);
        assert_eq!(balance_limit(&t2()), 0.75);
        // P = N with a chance-level classifier sits exactly at one half
        let chance = ScoredDataset::new(vec![1.0, 2.0], vec![1.0, 2.0]).unwrap();
        assert_eq!(balance_limit(&chance), 0.5);
    }

    #[test]
    fn decomposition_is_exact_and_matches_precision_form() {
        let ds = t1();
        for r in [0.5, 1.5, 2.5, 3.5] {
            let bv = balance_exact(&ds, r).unwrap();
            assert_eq!(bv.b_plus + bv.b_minus, bv.b);
            let rates = crate::metrics::rates_at(&ds, r);
            let c = crate::metrics::precision_at(&ds, r).unwrap();
            assert!((bv.b_plus - 0.5 * rates.v * c).abs() < 1e-12);
        }
    }

    #[test]
    fn curve_grid_agrees_with_pointwise_evaluation() {
        let ds = ScoredDataset::new(vec![0.5, 1.0, 1.0, 2.5], vec![0.5, 0.75, 2.0]).unwrap();
        let curve = BalanceCurve::evaluate(&ds);
        for pt in curve.points().iter().take(curve.points().len() - 1) {
            let direct = balance_exact(&ds, pt.r).unwrap();
            assert_eq!(pt.b, direct.b);
            assert_eq!(pt.b_plus, direct.b_plus);
        }
        assert_eq!(curve.points().last().unwrap().b, 0.0);
        assert!((curve.limit() - balance_limit(&ds)).abs() < 1e-12);
    }

    #[test]
    fn solver_finds_the_documented_brackets() {
        let rb = solve_balance_threshold(&t1(), BalanceTarget::default()).unwrap();
        assert!(rb.r > 1.0 && rb.r < 2.0, "r = {}", rb.r);
        assert_eq!(rb.grid_r, 1.5);
        assert_eq!(balance_exact(&t1(), rb.grid_r).unwrap().b, 0.5);
        assert!(!rb.multiple_crossings);

        let rb2 = solve_balance_threshold(&t2(), BalanceTarget::default()).unwrap();
        assert!(rb2.r > 2.0 && rb2.r < 3.0);
        assert_eq!(crate::metrics::precision_at(&t2(), rb2.grid_r).unwrap(), 1.0);
    }

    #[test]
    fn anti_separated_data_has_no_balanced_threshold() {
        let ds = ScoredDataset::new(vec![1.0, 2.0], vec![3.0, 4.0]).unwrap();
        match solve_balance_threshold(&ds, BalanceTarget::default()) {
            Err(BalanceError::NoBalancedThreshold { limit }) => assert_eq!(limit, 0.25),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn band_thresholds_are_ordered() {
        let ds = t1();
        let r60 = solve_balance_threshold(&ds, BalanceTarget::new(0.6).unwrap()).unwrap();
        let rb = solve_balance_threshold(&ds, BalanceTarget::default()).unwrap();
        let r40 = solve_balance_threshold(&ds, BalanceTarget::new(0.4).unwrap()).unwrap();
        assert!(r60.r < rb.r && rb.r < r40.r, "{} {} {}", r60.r, rb.r, r40.r);
    }

    #[test]
    fn scan_reports_multiple_crossings() {
        // synthetic non-monotone step sequence; the evaluator itself never
        // produces one, so the guard is exercised directly
        let pts = [(0.0, 0.8), (1.0, 0.45), (2.0, 0.7), (3.0, 0.3), (4.0, 0.0)];
        let hit = scan_for_crossing(&pts, 0.5).unwrap();
        assert!(hit.multiple_crossings);
        assert_eq!(hit.bracket_r, (0.0, 1.0));
        assert_eq!(hit.grid_r, 1.0);
        let exact_hit = scan_for_crossing(&[(0.0, 0.8), (1.0, 0.5), (2.0, 0.1)], 0.5).unwrap();
        assert_eq!(exact_hit.r, 1.0); // lands on the endpoint when B equals the target
        assert!(!exact_hit.multiple_crossings);
    }

    #[test]
    fn invalid_targets_are_rejected() {
        assert!(BalanceTarget::new(0.0).is_err());
        assert!(BalanceTarget::new(1.0).is_err());
        assert!(BalanceTarget::new(f64::NAN).is_err());
        assert_eq!(BalanceTarget::default().value(), 0.5);
    }

    /// Expected value of the sampling protocol, by conditional enumeration
    /// with the same-item exclusion.
    fn mc_expectation(ds: &ScoredDataset, r: f64) -> f64 {
        let pos = ds.pos_scores();
        let labelled: Vec<(bool, usize)> = (0..pos.len())
            .map(|i| (true, i))
            .filter(|&(_, i)| pos[i] > r)
            .chain(
                (0..ds.num_neg())
                    .map(|j| (false, j))
                    .filter(|&(_, j)| ds.neg_scores()[j] > r),
            )
            .collect();
        let mut per_positive = Vec::new();
        for i in 0..pos.len() {
            let pool: Vec<f64> = labelled
                .iter()
                .filter(|&&(is_pos, idx)| !(is_pos && idx == i))
                .map(|&(is_pos, idx)| {
                    if is_pos {
                        pos[idx]
                    } else {
                        ds.neg_scores()[idx]
                    }
                })
                .collect();
            if pool.is_empty() {
                continue;
            }
            let mean: f64 = pool
                .iter()
                .map(|&s| {
                    if pos[i] > s {
                        1.0
                    } else if pos[i] == s {
                        0.5
                    } else {
                        0.0
                    }
                })
                .sum::<f64>()
                / pool.len() as f64;
            per_positive.push(mean);
        }
        per_positive.iter().sum::<f64>() / per_positive.len() as f64
    }

    #[test]
    fn monte_carlo_matches_its_enumerated_expectation() {
        // at r = 1.5 the exclusion happens to preserve the exact value (1/2);
        // at r = 2.5 it does not: the estimator converges to 1/2 while the
        // independent-draw value is 0.375
        for (r, expected) in [(1.5, 0.5), (2.5, 0.5)] {
            assert_eq!(mc_expectation(&t1(), r), expected);
            let est = balance_monte_carlo(&t1(), r, 200_000, 77).unwrap();
            assert!(
                (est.value - expected).abs() < 4.0 * est.std_error + 0.005,
                "r = {r}: {} vs {expected}",
                est.value
            );
        }
        assert_eq!(balance_exact(&t1(), 2.5).unwrap().b, 0.375);
    }

    #[test]
    fn monte_carlo_is_seed_deterministic() {
        let a = balance_monte_carlo(&t1(), 1.5, 10_000, 5).unwrap();
        let b = balance_monte_carlo(&t1(), 1.5, 10_000, 5).unwrap();
        assert_eq!(a, b);
        let c = balance_monte_carlo(&t1(), 1.5, 10_000, 6).unwrap();
        assert_ne!(a.value, c.value);
    }

    #[test]
    fn monte_carlo_error_cases() {
        let single = ScoredDataset::new(vec![2.0], vec![1.0]).unwrap();
        // labelled set = the only positive item
        assert_eq!(
            balance_monte_carlo(&single, 1.5, 10, 0),
            Err(BalanceError::NoValidPairs)
        );
        assert_eq!(
            balance_monte_carlo(&single, 2.5, 10, 0),
            Err(BalanceError::EmptyLabelSet)
        );
        // a single labelled *negative* is fine
        let ds = ScoredDataset::new(vec![1.0], vec![2.0]).unwrap();
        let est = balance_monte_carlo(&ds, 1.5, 100, 0).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn naive_threshold_is_log_half() {
        let model = LogisticModel {
            beta0: -3.0,
            beta1: 1.7,
            converged: true,
            iterations: 5,
        };
        let r = naive_threshold(&model);
        assert!((r - (-0.6931471805599453)).abs() < 1e-15);
    }

    #[test]
    fn tradeoff_rows_pair_balance_with_operating_points() {
        let ds = t1();
        let rows = tradeoff_curve(&ds);
        // grid: below-min sentinel + 3 midpoints; the empty sentinel is dropped
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].b, 0.625);
        assert_eq!(rows[0].precision, 0.5);
        assert_eq!(rows[0].v, 1.0);
        assert!(rows.windows(2).all(|w| w[0].b >= w[1].b));
    }

    proptest! {
        #[test]
        fn exact_equals_brute_force_everywhere(
            pos in prop::collection::vec(0i32..10, 1..20),
            neg in prop::collection::vec(0i32..10, 1..20),
        ) {
            let ds = ScoredDataset::new(
                pos.iter().map(|&v| v as f64).collect(),
                neg.iter().map(|&v| v as f64).collect(),
            ).unwrap();
            let curve = BalanceCurve::evaluate(&ds);
            for pt in curve.points().iter().take(curve.points().len() - 1) {
                prop_assert_eq!(balance_brute(&ds, pt.r).unwrap(), pt.b);
            }
        }

        #[test]
        fn half_target_solvable_iff_auc_above_half(
            pos in prop::collection::vec(0i32..8, 1..15),
            neg in prop::collection::vec(0i32..8, 1..15),
        ) {
            let ds = ScoredDataset::new(
                pos.iter().map(|&v| v as f64).collect(),
                neg.iter().map(|&v| v as f64).collect(),
            ).unwrap();
            let solvable = solve_balance_threshold(&ds, BalanceTarget::default()).is_ok();
            prop_assert_eq!(solvable, auc_rank(&ds).value > 0.5);
        }

        #[test]
        fn grid_balance_never_increases(
            pos in prop::collection::vec(0i32..10, 1..15),
            neg in prop::collection::vec(0i32..10, 1..15),
        ) {
            let ds = ScoredDataset::new(
                pos.iter().map(|&v| v as f64).collect(),
                neg.iter().map(|&v| v as f64).collect(),
            ).unwrap();
            let curve = BalanceCurve::evaluate(&ds);
            for w in curve.points().windows(2) {
                prop_assert!(w[1].b <= w[0].b + 1e-15);
            }
        }
    }
}
