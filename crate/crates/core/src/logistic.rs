//! One-dimensional logistic regression fitted by Newton iterations (IRLS),
//! and the scoring step that turns raw features into log-probability scores.

use crate::dataset::{ClassLabel, DataError, RawDataset, ScoredDataset};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default iteration cap for [`fit_logistic_1d`].
pub const DEFAULT_MAX_ITER: usize = 100;
/// Default convergence tolerance on the coefficient update.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Coefficient magnitude beyond which the likelihood is treated as unbounded.
pub const COEFFICIENT_CAP: f64 = 1e8;

#[derive(Debug, Error, PartialEq)]
pub enum FitError {
    #[error("dataset must contain both classes")]
    MissingClass,
    #[error("perfect separation detected: the likelihood has no finite maximizer")]
    SeparationDetected,
    #[error("did not converge within {iterations} iterations")]
    NotConverged { iterations: usize },
    #[error("degenerate design: normal equations are singular")]
    DegenerateDesign,
}

/// Fitted intercept and slope of `p(x) = sigmoid(beta0 + beta1 * x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogisticModel {
    pub beta0: f64,
    pub beta1: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl LogisticModel {
    /// Linear predictor `beta0 + beta1 * x`.
    pub fn linear(&self, x: f64) -> f64 {
        self.beta0 + self.beta1 * x
    }

    /// Predicted probability of the positive class.
    pub fn prob_positive(&self, x: f64) -> f64 {
        sigmoid(self.linear(x))
    }

    /// Log predicted probability of the positive class; this is the score
    /// assigned to a record. Monotone in `x` whenever `beta1 > 0`, so every
    /// rank-based metric is unaffected by the choice of log scale.
    pub fn score(&self, x: f64) -> f64 {
        log_sigmoid(self.linear(x))
    }
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// `ln(sigmoid(z))` without underflowing to `-inf` for any finite `z`.
fn log_sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        -(-z).exp().ln_1p()
    } else {
        z - z.exp().ln_1p()
    }
}

/// Mean Bernoulli log-likelihood of the labels given the features, at the
/// supplied coefficients. This is the objective maximized by
/// [`fit_logistic_1d`] (scaled by 1/n).
pub fn mean_log_likelihood(data: &RawDataset, beta0: f64, beta1: f64) -> f64 {
    let mut total = 0.0;
    for r in data.records() {
        let z = beta0 + beta1 * r.x;
        total += match r.label {
            ClassLabel::Positive => log_sigmoid(z),
            ClassLabel::Negative => log_sigmoid(-z),
        };
    }
    total / data.len() as f64
}

/// Fits `p(y = +1 | x) = sigmoid(beta0 + beta1 x)` by Newton/IRLS steps.
///
/// Converges when the largest coefficient update drops below `tol`. Complete
/// separation (the class feature ranges do not overlap) is detected up front,
/// and a runaway coefficient norm above [`COEFFICIENT_CAP`] is treated the
/// same way.
pub fn fit_logistic_1d(
    data: &RawDataset,
    max_iter: usize,
    tol: f64,
) -> Result<LogisticModel, FitError> {
    if !data.has_both_classes() {
        return Err(FitError::MissingClass);
    }
    if completely_separated(data) {
        return Err(FitError::SeparationDetected);
    }

    let mut beta0 = 0.0f64;
    let mut beta1 = 0.0f64;
    for iteration in 1..=max_iter {
        let mut g0 = 0.0;
        let mut g1 = 0.0;
        let mut h00 = 0.0;
        let mut h01 = 0.0;
        let mut h11 = 0.0;
        for r in data.records() {
            let p = sigmoid(beta0 + beta1 * r.x);
            let y = match r.label {
                ClassLabel::Positive => 1.0,
                ClassLabel::Negative => 0.0,
            };
            let w = p * (1.0 - p);
            g0 += y - p;
            g1 += r.x * (y - p);
            h00 += w;
            h01 += w * r.x;
            h11 += w * r.x * r.x;
        }
        let det = h00 * h11 - h01 * h01;
        if !det.is_finite() || det <= 0.0 {
            return Err(FitError::DegenerateDesign);
        }
        let d0 = (h11 * g0 - h01 * g1) / det;
        let d1 = (h00 * g1 - h01 * g0) / det;
        beta0 += d0;
        beta1 += d1;
        if !beta0.is_finite()
            || !beta1.is_finite()
            || beta0.abs() > COEFFICIENT_CAP
            || beta1.abs() > COEFFICIENT_CAP
        {
            return Err(FitError::SeparationDetected);
        }
        if d0.abs().max(d1.abs()) < tol {
            return Ok(LogisticModel {
                beta0,
                beta1,
                converged: true,
                iterations: iteration,
            });
        }
    }
    Err(FitError::NotConverged {
        iterations: max_iter,
    })
}

/// In one dimension the likelihood is unbounded exactly when the class
/// feature intervals are disjoint.
fn completely_separated(data: &RawDataset) -> bool {
    let mut min_pos = f64::INFINITY;
    let mut max_pos = f64::NEG_INFINITY;
    let mut min_neg = f64::INFINITY;
    let mut max_neg = f64::NEG_INFINITY;
    for r in data.records() {
        match r.label {
            ClassLabel::Positive => {
                min_pos = min_pos.min(r.x);
                max_pos = max_pos.max(r.x);
            }
            ClassLabel::Negative => {
                min_neg = min_neg.min(r.x);
                max_neg = max_neg.max(r.x);
            }
        }
    }
    max_neg < min_pos || max_pos < min_neg
}

/// Scores every record with `log p(y = +1 | x)` and partitions the scores by
/// true label.
pub fn score_dataset(
    model: &LogisticModel,
    data: &RawDataset,
) -> Result<ScoredDataset, ScoreError> {
    if !model.converged {
        return Err(ScoreError::ModelNotConverged);
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in data.records() {
        let s = model.score(r.x);
        match r.label {
            ClassLabel::Positive => pos.push(s),
            ClassLabel::Negative => neg.push(s),
        }
    }
    ScoredDataset::new(pos, neg).map_err(ScoreError::Data)
}

#[derive(Debug, Error, PartialEq)]
pub enum ScoreError {
    #[error("model has not converged")]
    ModelNotConverged,
    #[error(transparent)]
    Data(DataError),
}
