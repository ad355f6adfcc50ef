//! Empirical distribution functions, classification rates, AUC estimators,
//! precision, F1, and ROC / precision-recall curves.
//!
//! Conventions used throughout:
//!
//! * an item is *labelled positive* at threshold `r` when its score is
//!   **strictly** greater than `r`;
//! * pairwise score comparisons count ties as one half, which makes the
//!   rank-based AUC and the trapezoidal area under the ROC curve coincide
//!   exactly rather than approximately.

use crate::dataset::{ClassLabel, ScoredDataset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MetricError {
    #[error("no items are labelled positive at this threshold")]
    EmptyLabelSet,
    #[error("undefined value: precision and recall are both zero")]
    UndefinedValue,
}

/// True/false positive rates at a threshold, plus their tie-adjusted
/// variants (ties counted as half) used inside pairwise probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rates {
    /// True positive rate `v(r)`: fraction of positives scoring strictly above `r`.
    pub v: f64,
    /// False positive rate `u(r)`: fraction of negatives scoring strictly above `r`.
    pub u: f64,
    /// Tie-adjusted comparison rate against positives: `(#above + #ties/2) / P`.
    pub v_tie: f64,
    /// Tie-adjusted comparison rate against negatives.
    pub u_tie: f64,
}

/// An AUC value together with its sampling error (zero for exact methods)
/// and the number of pairs it rests on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AucEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n_pairs: u64,
}

/// A Monte Carlo estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n_samples: u64,
}

/// Empirical CDF of one class at `r`: the fraction of that class scoring
/// strictly below `r`.
pub fn empirical_cdf(ds: &ScoredDataset, class: ClassLabel, r: f64) -> f64 {
    match class {
        ClassLabel::Positive => ds.pos_below(r) as f64 / ds.num_pos() as f64,
        ClassLabel::Negative => ds.neg_below(r) as f64 / ds.num_neg() as f64,
    }
}

/// Rates at threshold `r`.
pub fn rates_at(ds: &ScoredDataset, r: f64) -> Rates {
    let p = ds.num_pos() as f64;
    let n = ds.num_neg() as f64;
    let pos_above = ds.pos_above(r) as f64;
    let neg_above = ds.neg_above(r) as f64;
    Rates {
        v: pos_above / p,
        u: neg_above / n,
        v_tie: (pos_above + 0.5 * ds.pos_at(r) as f64) / p,
        u_tie: (neg_above + 0.5 * ds.neg_at(r) as f64) / n,
    }
}

/// Exact AUC: the probability that a random positive outscores a random
/// negative, ties counted half. Computed from merged ranks in
/// `O((P+N) log (P+N))`.
pub fn auc_rank(ds: &ScoredDataset) -> AucEstimate {
    let p = ds.num_pos();
    let n = ds.num_neg();
    let mut all: Vec<(f64, bool)> = Vec::with_capacity(p + n);
    all.extend(ds.pos_scores().iter().map(|&s| (s, true)));
    all.extend(ds.neg_scores().iter().map(|&s| (s, false)));
    all.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));

    // average rank within each tie group; rank sums stay half-integers, so
    // the arithmetic below is exact in f64
    let mut rank_sum_pos = 0.0f64;
    let mut i = 0;
    while i < all.len() {
        let mut j = i;
        while j < all.len() && all[j].0 == all[i].0 {
            j += 1;
        }
        let avg_rank = (i + 1 + j) as f64 / 2.0;
        for item in &all[i..j] {
            if item.1 {
                rank_sum_pos += avg_rank;
            }
        }
        i = j;
    }
    let pf = p as f64;
    let u_statistic = rank_sum_pos - pf * (pf + 1.0) / 2.0;
    AucEstimate {
        value: u_statistic / (pf * n as f64),
        std_error: 0.0,
        n_pairs: (p as u64) * (n as u64),
    }
}

fn compare_half(a: f64, b: f64) -> f64 {
    if a > b {
        1.0
    } else if a == b {
        0.5
    } else {
        0.0
    }
}

/// Monte Carlo AUC: `n_samples` independent positive/negative pairs drawn
/// uniformly with replacement, ties counted half. Deterministic for a given
/// seed.
pub fn auc_pairwise_mc(ds: &ScoredDataset, n_samples: u64, seed: u64) -> AucEstimate {
    assert!(n_samples >= 1, "n_samples must be >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pos = ds.pos_scores();
    let neg = ds.neg_scores();
    let mut total = 0.0f64;
    for _ in 0..n_samples {
        let s_p = pos[rng.random_range(0..pos.len())];
        let s_n = neg[rng.random_range(0..neg.len())];
        total += compare_half(s_p, s_n);
    }
    let value = total / n_samples as f64;
    AucEstimate {
        value,
        std_error: (value * (1.0 - value) / n_samples as f64).sqrt(),
        n_pairs: n_samples,
    }
}

/// Precision at threshold `r`: the fraction of labelled-positive items that
/// are truly positive, `C(r) = P v(r) / (P v(r) + N u(r))`.
///
/// Computed from raw counts, so the value is exact and depends only on the
/// ranks of the scores.
pub fn precision_at(ds: &ScoredDataset, r: f64) -> Result<f64, MetricError> {
    let tp = ds.pos_above(r);
    let fp = ds.neg_above(r);
    if tp + fp == 0 {
        return Err(MetricError::EmptyLabelSet);
    }
    Ok(tp as f64 / (tp + fp) as f64)
}

/// F1 score at threshold `r`: harmonic mean of precision and recall.
pub fn f1_at(ds: &ScoredDataset, r: f64) -> Result<f64, MetricError> {
    let c = precision_at(ds, r)?;
    let v = ds.pos_above(r) as f64 / ds.num_pos() as f64;
    if c + v == 0.0 {
        return Err(MetricError::UndefinedValue);
    }
    Ok(2.0 * c * v / (c + v))
}

/// Which curve a [`Curve`] represents; the points carry the same columns
/// either way, the kind records the intended plotting axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CurveKind {
    /// Plot `v` against `u` (sweeping the threshold downward traces the curve
    /// from (0,0) to (1,1)).
    Roc,
    /// Plot `precision` against recall `v`.
    PrecisionRecall,
}

/// One sample of the threshold sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    /// Threshold; the first and last points are the `-inf` / `+inf` sentinels.
    pub r: f64,
    pub u: f64,
    pub v: f64,
    pub precision: f64,
    pub f1: f64,
}

/// A threshold sweep over every distinct score plus infinite sentinels,
/// ordered by strictly increasing threshold (`u` and `v` are then
/// non-increasing).
///
/// At thresholds where nothing is labelled positive the precision column is
/// set to 1.0 by convention (and F1 is then 0); this is the usual endpoint
/// convention for precision-recall curves.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curve {
    pub kind: CurveKind,
    pub points: Vec<CurvePoint>,
}

fn sweep_points(ds: &ScoredDataset) -> Vec<CurvePoint> {
    let mut thresholds = Vec::with_capacity(ds.distinct_scores().len() + 2);
    thresholds.push(f64::NEG_INFINITY);
    thresholds.extend(ds.distinct_scores());
    thresholds.push(f64::INFINITY);
    let p = ds.num_pos() as f64;
    let n = ds.num_neg() as f64;
    thresholds
        .into_iter()
        .map(|r| {
            let tp = ds.pos_above(r);
            let fp = ds.neg_above(r);
            let v = tp as f64 / p;
            let u = fp as f64 / n;
            let precision = if tp + fp == 0 {
                1.0
            } else {
                tp as f64 / (tp + fp) as f64
            };
            let f1 = if precision + v == 0.0 {
                0.0
            } else {
                2.0 * precision * v / (precision + v)
            };
            CurvePoint { r, u, v, precision, f1 }
        })
        .collect()
}

/// ROC sweep of the dataset: one point per distinct score plus sentinels.
pub fn roc_curve(ds: &ScoredDataset) -> Curve {
    Curve {
        kind: CurveKind::Roc,
        points: sweep_points(ds),
    }
}

/// Precision-recall sweep of the dataset, on the same threshold grid as
/// [`roc_curve`].
pub fn pr_curve(ds: &ScoredDataset) -> Curve {
    Curve {
        kind: CurveKind::PrecisionRecall,
        points: sweep_points(ds),
    }
}

/// Trapezoidal area under the ROC curve, integrating `v` over `u`. With the
/// half-tie convention this equals [`auc_rank`] up to float rounding.
pub fn auc_trapezoid(curve: &Curve) -> AucEstimate {
    let pts = &curve.points;
    let mut area = 0.0;
    for w in pts.windows(2) {
        // thresholds ascend, so u descends
        area += (w[0].u - w[1].u) * (w[0].v + w[1].v) / 2.0;
    }
    AucEstimate {
        value: area,
        std_error: 0.0,
        n_pairs: 0,
    }
}

/// Trapezoidal area under the precision-recall curve, linear in recall
/// between achieved points.
pub fn auprc(curve: &Curve) -> f64 {
    let pts = &curve.points;
    let mut area = 0.0;
    for w in pts.windows(2) {
        area += (w[0].v - w[1].v) * (w[0].precision + w[1].precision) / 2.0;
    }
    area
}
