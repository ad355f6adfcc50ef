//! Raw and scored datasets, plus the synthetic Gaussian benchmark generator.
//!
//! A [`RawDataset`] holds `(x, label)` records before scoring. A
//! [`ScoredDataset`] holds the two score multisets a classifier produced for
//! the positive and negative class; every metric in this crate is a function
//! of those two sorted lists. [`generate_synthetic`] draws class-conditional
//! Gaussian features, and [`benchmark_grid`] instantiates the standard
//! nine-dataset grid used by the replication command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Validation errors for dataset construction and generation.
#[derive(Debug, Error, PartialEq)]
pub enum DataError {
    #[error("invalid dataset spec: {0}")]
    InvalidSpec(String),
    #[error("record {index}: feature value is not finite")]
    NonFiniteFeature { index: usize },
    #[error("score at position {index} is not finite")]
    NonFiniteScore { index: usize },
    #[error("dataset has no {class} records")]
    EmptyClass { class: &'static str },
}

/// Ground-truth class of a record, serialized as `+1` / `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassLabel {
    Positive,
    Negative,
}

impl ClassLabel {
    pub fn as_i8(self) -> i8 {
        match self {
            ClassLabel::Positive => 1,
            ClassLabel::Negative => -1,
        }
    }

    /// Parses the `{-1, +1}` encoding; anything else is rejected.
    pub fn from_int(value: i64) -> Option<Self> {
        match value {
            1 => Some(ClassLabel::Positive),
            -1 => Some(ClassLabel::Negative),
            _ => None,
        }
    }
}

/// One labelled observation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawRecord {
    pub x: f64,
    pub label: ClassLabel,
}

/// Feature/label pairs prior to scoring.
#[derive(Debug, Clone, PartialEq)]
pub struct RawDataset {
    records: Vec<RawRecord>,
}

impl RawDataset {
    /// Builds a dataset, rejecting non-finite features.
    pub fn new(records: Vec<RawRecord>) -> Result<Self, DataError> {
        for (index, r) in records.iter().enumerate() {
            if !r.x.is_finite() {
                return Err(DataError::NonFiniteFeature { index });
            }
        }
        Ok(RawDataset { records })
    }

    pub fn records(&self) -> &[RawRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn count(&self, label: ClassLabel) -> usize {
        self.records.iter().filter(|r| r.label == label).count()
    }

    pub fn has_both_classes(&self) -> bool {
        self.count(ClassLabel::Positive) > 0 && self.count(ClassLabel::Negative) > 0
    }
}

/// Parameters of one synthetic dataset: Gaussian positives, a "difficult"
/// negative component overlapping them, and an "easy" negative component far
/// below.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DatasetSpec {
    pub n_pos: usize,
    pub m_p: f64,
    pub sigma_p: f64,
    pub n_diff: usize,
    pub m_n: f64,
    pub sigma_n: f64,
    pub n_easy: usize,
    pub m_easy: f64,
    pub sigma_easy: f64,
    pub seed: u64,
}

impl DatasetSpec {
    pub fn validate(&self) -> Result<(), DataError> {
        if self.n_pos < 1 {
            return Err(DataError::InvalidSpec("n_pos must be >= 1".into()));
        }
        if self.n_diff + self.n_easy < 1 {
            return Err(DataError::InvalidSpec(
                "need at least one negative (n_diff + n_easy >= 1)".into(),
            ));
        }
        for (name, sd) in [
            ("sigma_p", self.sigma_p),
            ("sigma_n", self.sigma_n),
            ("sigma_easy", self.sigma_easy),
        ] {
            if !(sd > 0.0) || !sd.is_finite() {
                return Err(DataError::InvalidSpec(format!("{name} must be > 0")));
            }
        }
        for (name, m) in [
            ("m_p", self.m_p),
            ("m_n", self.m_n),
            ("m_easy", self.m_easy),
        ] {
            if !m.is_finite() {
                return Err(DataError::InvalidSpec(format!("{name} must be finite")));
            }
        }
        Ok(())
    }
}

/// Standard normal draws via the Box-Muller transform over a seeded ChaCha8
/// stream. Draws come in a fixed order, so a given seed always reproduces the
/// same sequence.
struct NormalSource {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl NormalSource {
    fn new(seed: u64) -> Self {
        NormalSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    fn next(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 - U keeps the argument of ln strictly positive.
        let u1: f64 = 1.0 - self.rng.random::<f64>();
        let u2: f64 = self.rng.random::<f64>();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }
}

/// Draws the synthetic dataset described by `spec`.
///
/// Sampling order is fixed (positives, difficult negatives, easy negatives),
/// so the output is a pure function of the spec including its seed.
pub fn generate_synthetic(spec: &DatasetSpec) -> Result<RawDataset, DataError> {
    spec.validate()?;
    let mut source = NormalSource::new(spec.seed);
    let mut records = Vec::with_capacity(spec.n_pos + spec.n_diff + spec.n_easy);
    let mut draw = |n: usize, mean: f64, sd: f64, label: ClassLabel, out: &mut Vec<RawRecord>| {
        for _ in 0..n {
            out.push(RawRecord {
                x: mean + sd * source.next(),
                label,
            });
        }
    };
    draw(spec.n_pos, spec.m_p, spec.sigma_p, ClassLabel::Positive, &mut records);
    draw(spec.n_diff, spec.m_n, spec.sigma_n, ClassLabel::Negative, &mut records);
    draw(spec.n_easy, spec.m_easy, spec.sigma_easy, ClassLabel::Negative, &mut records);
    RawDataset::new(records)
}

/// SplitMix64 mixing step; used to derive independent per-dataset seeds from
/// one master seed.
fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the `index`-th dataset derived from a master seed.
pub fn derive_seed(master_seed: u64, index: u64) -> u64 {
    splitmix64(master_seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Letters naming the nine benchmark datasets.
pub const BENCHMARK_LETTERS: [char; 9] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i'];

/// The nine-dataset benchmark grid.
///
/// Columns vary the difficult-negative mean (`a,d,g` -> 5; `b,e,h` -> 7;
/// `c,f,i` -> 9), i.e. how much the classes overlap. Rows vary the easy-negative
/// count (`a,b,c` -> 10000; `d,e,f` -> 1000; `g,h,i` -> 100). Everything else is
/// shared: 1000 positives at mean 10, 1000 difficult negatives, easy negatives
/// at mean 2, all standard deviations 2. Per-dataset seeds are derived from the
/// master seed with [`derive_seed`].
pub fn benchmark_grid(master_seed: u64) -> [(char, DatasetSpec); 9] {
    let m_n_by_column = [5.0, 7.0, 9.0];
    let n_easy_by_row = [10_000, 1_000, 100];
    let mut out = Vec::with_capacity(9);
    for (index, letter) in BENCHMARK_LETTERS.iter().enumerate() {
        out.push((
            *letter,
            DatasetSpec {
                n_pos: 1000,
                m_p: 10.0,
                sigma_p: 2.0,
                n_diff: 1000,
                m_n: m_n_by_column[index % 3],
                sigma_n: 2.0,
                n_easy: n_easy_by_row[index / 3],
                m_easy: 2.0,
                sigma_easy: 2.0,
                seed: derive_seed(master_seed, index as u64),
            },
        ));
    }
    out.try_into().expect("nine datasets")
}

/// Score multisets of the two classes, each kept sorted ascending.
///
/// This is the input type for every metric: `P` positives with scores
/// `pos_scores`, `N` negatives with scores `neg_scores`. Immutable after
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredDataset {
    pos: Vec<f64>,
    neg: Vec<f64>,
}

impl ScoredDataset {
    /// Builds a scored dataset from the two score lists (any order); both
    /// classes must be non-empty and all scores finite.
    pub fn new(mut pos: Vec<f64>, mut neg: Vec<f64>) -> Result<Self, DataError> {
        if pos.is_empty() {
            return Err(DataError::EmptyClass { class: "positive" });
        }
        if neg.is_empty() {
            return Err(DataError::EmptyClass { class: "negative" });
        }
        for (index, s) in pos.iter().chain(neg.iter()).enumerate() {
            if !s.is_finite() {
                return Err(DataError::NonFiniteScore { index });
            }
        }
        pos.sort_unstable_by(f64::total_cmp);
        neg.sort_unstable_by(f64::total_cmp);
        Ok(ScoredDataset { pos, neg })
    }

    /// Positive-class scores, ascending.
    pub fn pos_scores(&self) -> &[f64] {
        &self.pos
    }

    /// Negative-class scores, ascending.
    pub fn neg_scores(&self) -> &[f64] {
        &self.neg
    }

    /// Number of positives, `P`.
    pub fn num_pos(&self) -> usize {
        self.pos.len()
    }

    /// Number of negatives, `N`.
    pub fn num_neg(&self) -> usize {
        self.neg.len()
    }

    pub fn min_score(&self) -> f64 {
        self.pos[0].min(self.neg[0])
    }

    pub fn max_score(&self) -> f64 {
        self.pos[self.pos.len() - 1].max(self.neg[self.neg.len() - 1])
    }

    /// All distinct score values across both classes, ascending.
    pub fn distinct_scores(&self) -> Vec<f64> {
        let mut all = Vec::with_capacity(self.pos.len() + self.neg.len());
        all.extend_from_slice(&self.pos);
        all.extend_from_slice(&self.neg);
        all.sort_unstable_by(f64::total_cmp);
        all.dedup();
        all
    }

    pub(crate) fn pos_below(&self, r: f64) -> usize {
        count_below(&self.pos, r)
    }

    pub(crate) fn neg_below(&self, r: f64) -> usize {
        count_below(&self.neg, r)
    }

    pub(crate) fn pos_above(&self, r: f64) -> usize {
        count_above(&self.pos, r)
    }

    pub(crate) fn neg_above(&self, r: f64) -> usize {
        count_above(&self.neg, r)
    }

    pub(crate) fn pos_at(&self, r: f64) -> usize {
        count_at(&self.pos, r)
    }

    pub(crate) fn neg_at(&self, r: f64) -> usize {
        count_at(&self.neg, r)
    }
}

fn count_below(sorted: &[f64], r: f64) -> usize {
    sorted.partition_point(|&s| s < r)
}

fn count_above(sorted: &[f64], r: f64) -> usize {
    sorted.len() - sorted.partition_point(|&s| s <= r)
}

fn count_at(sorted: &[f64], r: f64) -> usize {
    sorted.partition_point(|&s| s <= r) - sorted.partition_point(|&s| s < r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_a(seed: u64) -> DatasetSpec {
        DatasetSpec {
            n_pos: 1000,
            m_p: 10.0,
            sigma_p: 2.0,
            n_diff: 1000,
            m_n: 5.0,
            sigma_n: 2.0,
            n_easy: 10_000,
            m_easy: 2.0,
            sigma_easy: 2.0,
            seed,
        }
    }

    #[test]
    fn generates_expected_counts_in_fixed_order() {
        let data = generate_synthetic(&spec_a(7)).unwrap();
        assert_eq!(data.len(), 12_000);
        assert_eq!(data.count(ClassLabel::Positive), 1000);
        assert_eq!(data.count(ClassLabel::Negative), 11_000);
        // draw order: positives first
        assert!(data.records()[..1000]
            .iter()
            .all(|r| r.label == ClassLabel::Positive));
        assert!(data.records()[1000..]
            .iter()
            .all(|r| r.label == ClassLabel::Negative));
    }

    #[test]
    fn same_seed_reproduces_the_sequence() {
        let a = generate_synthetic(&spec_a(42)).unwrap();
        let b = generate_synthetic(&spec_a(42)).unwrap();
        assert_eq!(a, b);
        let c = generate_synthetic(&spec_a(43)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn positive_sample_mean_is_near_m_p() {
        // dataset (e) with a few seeds; 3 sigma / sqrt(n) standard-error bound
        for seed in [1u64, 99, 1234] {
            let spec = DatasetSpec {
                m_n: 7.0,
                n_easy: 1000,
                seed,
                ..spec_a(0)
            };
            let data = generate_synthetic(&spec).unwrap();
            let mean: f64 = data
                .records()
                .iter()
                .filter(|r| r.label == ClassLabel::Positive)
                .map(|r| r.x)
                .sum::<f64>()
                / 1000.0;
            let bound = 3.0 * 2.0 / (1000f64).sqrt();
            assert!(
                (mean - 10.0).abs() < bound,
                "seed {seed}: mean {mean} outside {bound}"
            );
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let mut s = spec_a(0);
        s.n_pos = 0;
        assert!(matches!(generate_synthetic(&s), Err(DataError::InvalidSpec(_))));
        let mut s = spec_a(0);
        s.n_diff = 0;
        s.n_easy = 0;
        assert!(generate_synthetic(&s).is_err());
        let mut s = spec_a(0);
        s.sigma_n = 0.0;
        assert!(generate_synthetic(&s).is_err());
        let mut s = spec_a(0);
        s.m_p = f64::NAN;
        assert!(generate_synthetic(&s).is_err());
    }

    #[test]
    fn grid_parameters_match_the_layout() {
        let grid = benchmark_grid(0);
        let by_letter = |c: char| grid.iter().find(|(l, _)| *l == c).unwrap().1;
        assert_eq!(by_letter('a').n_pos, 1000);
        assert_eq!(by_letter('a').m_n, 5.0);
        assert_eq!(by_letter('a').n_easy, 10_000);
        assert_eq!(by_letter('e').m_n, 7.0);
        assert_eq!(by_letter('e').n_easy, 1000);
        assert_eq!(by_letter('g').n_easy, 100);
        assert_eq!(by_letter('i').m_n, 9.0);
        // distinct per-dataset seeds derived from one master seed
        let seeds: Vec<u64> = grid.iter().map(|(_, s)| s.seed).collect();
        let mut dedup = seeds.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), 9);
        assert_eq!(benchmark_grid(0).map(|(_, s)| s.seed).to_vec(), seeds);
    }

    #[test]
    fn scored_dataset_sorts_and_validates() {
        let ds = ScoredDataset::new(vec![4.0, 2.0], vec![3.0, 1.0]).unwrap();
        assert_eq!(ds.pos_scores(), &[2.0, 4.0]);
        assert_eq!(ds.neg_scores(), &[1.0, 3.0]);
        assert_eq!(ds.distinct_scores(), vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(ds.min_score(), 1.0);
        assert_eq!(ds.max_score(), 4.0);
        assert!(matches!(
            ScoredDataset::new(vec![], vec![1.0]),
            Err(DataError::EmptyClass { class: "positive" })
        ));
        assert!(ScoredDataset::new(vec![1.0], vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn count_helpers_use_strict_comparisons() {
        let ds = ScoredDataset::new(vec![2.0, 4.0], vec![1.0, 3.0]).unwrap();
        assert_eq!(ds.pos_below(3.0), 1);
        assert_eq!(ds.pos_above(2.0), 1);
        assert_eq!(ds.pos_at(2.0), 1);
        assert_eq!(ds.neg_above(3.0), 0);
        assert_eq!(ds.neg_at(0.5), 0);
    }
}
