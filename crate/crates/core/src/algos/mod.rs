//! Reference circuits and Shor post-processing for N = 15.

mod circuits;
mod shor;

pub use circuits::{build_bell, build_shor15};
pub use shor::{
    estimate_period, extract_factors, extract_measured_values, run_shor15_pipeline, BaseAttempt,
    FactorReport, PeriodTrial, ShorConfig,
};
