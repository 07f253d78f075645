//! Threshold formulas and the Monte Carlo sweep harness.

mod emit;
mod sweep;
mod thresholds;

pub use emit::{
    aggregate_header, aggregate_path, aggregates_csv, emit, parse_rows_csv, row_header, rows_csv,
    Format,
};
pub use sweep::{
    pattern_k, run_sweep, run_trial, trial_seed, Aggregate, SweepConfig, SweepOutput, SweepRow,
    TrialOptions, TrialStatus, DEFAULT_FACE_BUDGET,
};
pub use thresholds::{theorem_thresholds, ThresholdReport};
