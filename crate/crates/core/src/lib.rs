//! Binary-classification evaluation built around one question: at which
//! decision threshold does the set of items a classifier labels positive
//! become statistically indistinguishable from the truly positive items, and
//! how precise is the classifier there?
//!
//! The crate computes the balance function `B(r)` (the probability that a
//! random positive outscores a random labelled-positive item), solves
//! `B(r) = 1/2` for the indistinguishability threshold `r_b`, and reports the
//! precision `C(r_b)` at that threshold alongside the usual suspects: rank
//! AUC, ROC and precision-recall curves, and F1. A synthetic Gaussian
//! benchmark grid plus a 1-D logistic scorer make the whole pipeline
//! reproducible from a single seed.
//!
//! ```
//! use indist_core::dataset::ScoredDataset;
//! use indist_core::report::IndistReport;
//!
//! let scores = ScoredDataset::new(vec![2.0, 4.0], vec![1.0, 3.0])?;
//! let report = IndistReport::compute(&scores, None);
//! assert_eq!(report.auc, 0.75);
//! assert_eq!(report.c_at_rb, Some(2.0 / 3.0));
//! # Ok::<(), indist_core::dataset::DataError>(())
//! ```
//!
//! The accompanying guide in `book/` walks through the concepts chapter by
//! chapter; its code snippets compile and run as part of `cargo test --doc`.

pub mod balance;
pub mod dataset;
pub mod io;
pub mod logistic;
pub mod metrics;
pub mod report;

pub use balance::{
    balance_exact, balance_limit, balance_monte_carlo, naive_threshold, solve_balance_threshold,
    tradeoff_curve, BalanceCurve, BalanceError, BalanceTarget, BalanceThreshold, BalanceValue,
};
pub use dataset::{
    benchmark_grid, generate_synthetic, ClassLabel, DataError, DatasetSpec, RawDataset, RawRecord,
    ScoredDataset,
};
pub use logistic::{fit_logistic_1d, score_dataset, FitError, LogisticModel};
pub use metrics::{
    auc_pairwise_mc, auc_rank, auc_trapezoid, auprc, empirical_cdf, f1_at, pr_curve, precision_at,
    rates_at, roc_curve, AucEstimate, Curve, CurveKind, CurvePoint, McEstimate, MetricError, Rates,
};
pub use report::{
    replicate, run_dataset, BandTargets, DatasetRun, IndistReport, PipelineError, ReplicationRow,
    ReplicationTable,
};

// The guide's code blocks double as doctests so the book can never drift
// from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(scores_and_rates, "../../../book/src/scores-and-rates.md");
    chapter!(auc, "../../../book/src/auc.md");
    chapter!(balance_function, "../../../book/src/balance-function.md");
    chapter!(threshold_selection, "../../../book/src/threshold-selection.md");
    chapter!(synthetic_data, "../../../book/src/synthetic-data.md");
    chapter!(cli, "../../../book/src/cli.md");
}
