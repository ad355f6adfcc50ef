//! Headline evaluation report and the nine-dataset replication pipeline.
//!
//! [`IndistReport`] gathers the rank AUC, the balance limit, the solved
//! balance thresholds with precision / F1 / rates evaluated at them, and the
//! naive probability-one-half threshold for contrast. Absent thresholds stay
//! absent with a reason string; nothing is fabricated.

use crate::balance::{
    naive_threshold, BalanceCurve, BalanceError, BalanceTarget, BalanceThreshold,
};
use crate::dataset::{benchmark_grid, generate_synthetic, DatasetSpec, RawDataset, ScoredDataset};
use crate::logistic::{fit_logistic_1d, score_dataset, LogisticModel, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::metrics::{auc_rank, f1_at, precision_at, rates_at};
use serde::Serialize;
use thiserror::Error;

/// The three balance targets a report solves: `low` and `high` frame the
/// tolerated band around the `mid` (indistinguishability) target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BandTargets {
    pub low: f64,
    pub mid: f64,
    pub high: f64,
}

impl Default for BandTargets {
    fn default() -> Self {
        BandTargets {
            low: 0.4,
            mid: 0.5,
            high: 0.6,
        }
    }
}

/// Full evaluation report; serializes to a flat JSON object with explicit
/// nulls and `_reason` companions for absent thresholds.
///
/// The `r_40` slot is the threshold solving `B(r) = low` (more permissive
/// labelling), `r_60` solves `B(r) = high`; with the default band the
/// thresholds satisfy `r_60 < r_b < r_40` whenever all three exist. The
/// metrics attached to each threshold are evaluated at the bracketing grid
/// point on the low-balance side, so they depend only on score ranks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndistReport {
    pub auc: f64,
    pub b_neg_inf: f64,
    pub target_r40: f64,
    pub target_rb: f64,
    pub target_r60: f64,
    pub r_b: Option<f64>,
    pub r_b_reason: Option<String>,
    pub c_at_rb: Option<f64>,
    pub f1_at_rb: Option<f64>,
    pub v_at_rb: Option<f64>,
    pub u_at_rb: Option<f64>,
    pub r_40: Option<f64>,
    pub r_40_reason: Option<String>,
    pub c_at_r40: Option<f64>,
    pub r_60: Option<f64>,
    pub r_60_reason: Option<String>,
    pub c_at_r60: Option<f64>,
    pub naive_r: Option<f64>,
    pub c_at_naive: Option<f64>,
    pub c_at_naive_reason: Option<String>,
    pub multiple_crossings: bool,
}

struct Slot {
    r: Option<f64>,
    reason: Option<String>,
    c: Option<f64>,
    solved: Option<BalanceThreshold>,
}

fn solve_slot(curve: &BalanceCurve, ds: &ScoredDataset, target: f64) -> Slot {
    let target = match BalanceTarget::new(target) {
        Ok(t) => t,
        Err(e) => {
            return Slot {
                r: None,
                reason: Some(e.to_string()),
                c: None,
                solved: None,
            }
        }
    };
    match curve.solve(target) {
        Ok(hit) => match precision_at(ds, hit.grid_r) {
            Ok(c) => Slot {
                r: Some(hit.r),
                reason: None,
                c: Some(c),
                solved: Some(hit),
            },
            Err(_) => Slot {
                r: None,
                reason: Some(
                    "threshold solves above the top score; nothing is labelled positive there"
                        .to_string(),
                ),
                c: None,
                solved: None,
            },
        },
        Err(BalanceError::NoBalancedThreshold { limit }) => {
            let reason = if target.value() == 0.5 {
                format!("A <= 1/2: balance limit {limit:.6} never exceeds 0.5")
            } else {
                format!(
                    "balance limit {limit:.6} never exceeds target {}",
                    target.value()
                )
            };
            Slot {
                r: None,
                reason: Some(reason),
                c: None,
                solved: None,
            }
        }
        Err(e) => Slot {
            r: None,
            reason: Some(e.to_string()),
            c: None,
            solved: None,
        },
    }
}

impl IndistReport {
    /// Evaluates the report with the default 0.4 / 0.5 / 0.6 band.
    pub fn compute(ds: &ScoredDataset, model: Option<&LogisticModel>) -> IndistReport {
        Self::compute_with_targets(ds, model, BandTargets::default())
            .expect("default band is valid")
    }

    /// Evaluates the report with a custom band; targets must satisfy
    /// `0 < low < mid < high < 1`.
    pub fn compute_with_targets(
        ds: &ScoredDataset,
        model: Option<&LogisticModel>,
        band: BandTargets,
    ) -> Result<IndistReport, BalanceError> {
        for t in [band.low, band.mid, band.high] {
            BalanceTarget::new(t)?;
        }
        if !(band.low < band.mid && band.mid < band.high) {
            return Err(BalanceError::InvalidBand);
        }

        let curve = BalanceCurve::evaluate(ds);
        let mid = solve_slot(&curve, ds, band.mid);
        let low = solve_slot(&curve, ds, band.low);
        let high = solve_slot(&curve, ds, band.high);

        let (f1_at_rb, v_at_rb, u_at_rb) = match &mid.solved {
            Some(hit) => {
                let rates = rates_at(ds, hit.grid_r);
                (f1_at(ds, hit.grid_r).ok(), Some(rates.v), Some(rates.u))
            }
            None => (None, None, None),
        };

        let (naive_r, c_at_naive, c_at_naive_reason) = match model {
            Some(m) => {
                let r = naive_threshold(m);
                match precision_at(ds, r) {
                    Ok(c) => (Some(r), Some(c), None),
                    Err(e) => (Some(r), None, Some(e.to_string())),
                }
            }
            None => (None, None, Some("no model supplied".to_string())),
        };

        let multiple_crossings = [&mid.solved, &low.solved, &high.solved]
            .iter()
            .any(|s| s.as_ref().is_some_and(|hit| hit.multiple_crossings));

        Ok(IndistReport {
            auc: auc_rank(ds).value,
            b_neg_inf: curve.limit(),
            target_r40: band.low,
            target_rb: band.mid,
            target_r60: band.high,
            r_b: mid.r,
            r_b_reason: mid.reason,
            c_at_rb: mid.c,
            f1_at_rb,
            v_at_rb,
            u_at_rb,
            r_40: low.r,
            r_40_reason: low.reason,
            c_at_r40: low.c,
            r_60: high.r,
            r_60_reason: high.reason,
            c_at_r60: high.c,
            naive_r,
            c_at_naive,
            c_at_naive_reason,
            multiple_crossings,
        })
    }
}

#[derive(Debug, Error)]
#[error("dataset {dataset}, stage {stage}: {message}")]
pub struct PipelineError {
    pub dataset: char,
    pub stage: &'static str,
    pub message: String,
}

/// Everything produced for one benchmark dataset: the raw draw, the fitted
/// scorer, the scores, and the report.
#[derive(Debug, Clone)]
pub struct DatasetRun {
    pub letter: char,
    pub spec: DatasetSpec,
    pub raw: RawDataset,
    pub model: LogisticModel,
    pub scored: ScoredDataset,
    pub report: IndistReport,
}

/// Generate, fit, score and evaluate a single dataset.
pub fn run_dataset(letter: char, spec: &DatasetSpec) -> Result<DatasetRun, PipelineError> {
    let fail = |stage: &'static str, message: String| PipelineError {
        dataset: letter,
        stage,
        message,
    };
    let raw = generate_synthetic(spec).map_err(|e| fail("generate", e.to_string()))?;
    let model = fit_logistic_1d(&raw, DEFAULT_MAX_ITER, DEFAULT_TOL)
        .map_err(|e| fail("fit", e.to_string()))?;
    let scored = score_dataset(&model, &raw).map_err(|e| fail("score", e.to_string()))?;
    let report = IndistReport::compute(&scored, Some(&model));
    Ok(DatasetRun {
        letter,
        spec: *spec,
        raw,
        model,
        scored,
        report,
    })
}

/// Runs the whole nine-dataset grid from one master seed.
pub fn replicate(master_seed: u64) -> Result<Vec<DatasetRun>, PipelineError> {
    benchmark_grid(master_seed)
        .iter()
        .map(|(letter, spec)| run_dataset(*letter, spec))
        .collect()
}

/// One row of the replication summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplicationRow {
    pub dataset: char,
    pub auc: f64,
    pub r_b: Option<f64>,
    pub c_at_rb: Option<f64>,
    pub c_at_r40: Option<f64>,
    pub c_at_r60: Option<f64>,
    pub f1_at_rb: Option<f64>,
    pub b_neg_inf: f64,
}

/// The nine-row summary of a replication run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplicationTable {
    pub master_seed: u64,
    pub rows: Vec<ReplicationRow>,
}

impl ReplicationTable {
    pub fn from_runs(master_seed: u64, runs: &[DatasetRun]) -> ReplicationTable {
        let rows = runs
            .iter()
            .map(|run| ReplicationRow {
                dataset: run.letter,
                auc: run.report.auc,
                r_b: run.report.r_b,
                c_at_rb: run.report.c_at_rb,
                c_at_r40: run.report.c_at_r40,
                c_at_r60: run.report.c_at_r60,
                f1_at_rb: run.report.f1_at_rb,
                b_neg_inf: run.report.b_neg_inf,
            })
            .collect();
        ReplicationTable { master_seed, rows }
    }

    pub fn row(&self, dataset: char) -> Option<&ReplicationRow> {
        self.rows.iter().find(|r| r.dataset == dataset)
    }
}
