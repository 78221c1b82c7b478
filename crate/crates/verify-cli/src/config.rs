//! Run configuration: which class, which functionals, how many samples,
//! and where the report goes.
//!
//! A [`RunConfig`] is a complete, replayable description of one
//! verification run — two runs with equal configs produce byte-identical
//! reports apart from the timestamp line. Validation happens once, up
//! front, in [`RunConfig::validate`]; everything downstream may assume a
//! valid config.

use std::fmt;
use std::path::PathBuf;

use bounds::BoundsError;
use caratheodory::CaratheodoryError;
use class_maps::{ClassMapError, ClassTag};
use functionals::FunctionalError;
use num_complex::Complex64;
use thiserror::Error;

/// Truncation order used for every series in the pipeline. Eight
/// coefficients cover all polynomial functionals (they need `a₂..a₅`) and
/// the conjecture probe up to `γ₇` (which needs order `n + 1`).
pub const SERIES_ORDER: usize = 8;

/// Empirical values may exceed a claimed bound by at most this much
/// before the report is flagged; pure floating-point noise on an exact
/// attainment sits ~1e-15, so anything past 1e-9 is a genuine violation.
pub const CONSISTENCY_TOL: f64 = 1e-9;

/// A designated witness must land within this distance of the claimed
/// bound for the verdict to upgrade to sharpness-attained. Witness values
/// are algebraically exact, so the slack only absorbs series round-off.
pub const SHARPNESS_TOL: f64 = 1e-7;

/// Everything that can go wrong while configuring, sampling, or writing.
#[derive(Debug, Error)]
pub enum VerifyError {
    /// The requested run is self-contradictory or out of range.
    #[error("config error: {0}")]
    Config(String),
    /// The report file could not be written.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    /// A series truncation is too short for the requested coefficient.
    #[error("truncation too low: need order >= {needed}, member has {got}")]
    TruncationTooLow { needed: usize, got: usize },
    #[error(transparent)]
    Caratheodory(#[from] CaratheodoryError),
    #[error(transparent)]
    ClassMap(#[from] ClassMapError),
    #[error(transparent)]
    Functional(#[from] FunctionalError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// Which family of statements a run checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionalSelector {
    /// A single logarithmic-coefficient bound, n = 1..4.
    Gamma(u32),
    /// The two-sided Toeplitz bound.
    T21,
    /// The `|a₂a₃ − a₄|` bound.
    Zalcman,
    /// The Fekete–Szegő bounds (both directions, per (λ, μ) pair).
    FeketeSzego,
    /// The whole suite.
    All,
}

impl fmt::Display for FunctionalSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionalSelector::Gamma(n) => write!(f, "gamma{n}"),
            FunctionalSelector::T21 => write!(f, "t21"),
            FunctionalSelector::Zalcman => write!(f, "zalcman"),
            FunctionalSelector::FeketeSzego => write!(f, "fekete-szego"),
            FunctionalSelector::All => write!(f, "all"),
        }
    }
}

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl OutputFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "md",
        }
    }
}

/// One complete verification run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Which class the members are drawn from.
    pub class_tag: ClassTag,
    /// Which statements to check.
    pub selector: FunctionalSelector,
    /// Number of random Schwarz-function draws. The extremal catalog and
    /// the τ grid are always in the pool on top of these, so the draw
    /// budget controls only the stochastic part.
    pub sample_count: usize,
    /// Maximum Blaschke degree of the random draws; draw `i` uses degree
    /// `i mod (schwarz_degree + 1)`, so every degree up to the cap
    /// appears.
    pub schwarz_degree: u32,
    /// Angular density of the deterministic τ grid (points per circle).
    pub tau_grid_density: usize,
    /// Root seed; draw `i` reads RNG stream `i` of this seed, which makes
    /// the sample stream a prefix-extension in `sample_count`.
    pub seed: u64,
    /// Rounds of derivative-free local refinement applied to the best
    /// replayable sample (0 = none).
    pub refine_iterations: u32,
    /// Explicit Fekete–Szegő parameter pair. `None` selects the built-in
    /// branch-coverage grid (selector `fekete-szego`) or the single
    /// default pair (1, 1) (selector `all`).
    pub fs_pair: Option<(Complex64, f64)>,
    /// Optional conjectured-coefficient probe index, 5..=7 (starlike
    /// only).
    pub conjecture_n: Option<u32>,
    /// Report format.
    pub output_format: OutputFormat,
    /// Report destination; `None` writes to stdout.
    pub output_path: Option<PathBuf>,
    /// Exit successfully even when discrepancies are flagged.
    pub allow_flags: bool,
}

impl RunConfig {
    /// A baseline config for the given class and selector: 10⁴ draws up
    /// to degree 4, seed 42, grid density 6, JSON to stdout.
    pub fn baseline(class_tag: ClassTag, selector: FunctionalSelector) -> Self {
        RunConfig {
            class_tag,
            selector,
            sample_count: 10_000,
            schwarz_degree: 4,
            tau_grid_density: 6,
            seed: 42,
            refine_iterations: 0,
            fs_pair: None,
            conjecture_n: None,
            output_format: OutputFormat::Json,
            output_path: None,
            allow_flags: false,
        }
    }

    /// Rejects self-contradictory or out-of-range runs. Called once at
    /// the top of `run_report`; the error text is user-facing.
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.sample_count == 0 {
            return Err(VerifyError::Config(
                "sample count must be at least 1".into(),
            ));
        }
        if let FunctionalSelector::Gamma(n) = self.selector {
            if !(1..=4).contains(&n) {
                return Err(VerifyError::Config(format!(
                    "gamma selector covers n = 1..=4 (got {n}); indices 5..=7 \
                     are reached through the conjecture probe"
                )));
            }
        }
        if self.schwarz_degree > 4 {
            return Err(VerifyError::Config(format!(
                "schwarz degree must be 0..=4, got {}",
                self.schwarz_degree
            )));
        }
        if !(2..=16).contains(&self.tau_grid_density) {
            return Err(VerifyError::Config(format!(
                "tau grid density must be 2..=16, got {}",
                self.tau_grid_density
            )));
        }
        if let Some((_, mu)) = self.fs_pair {
            if !(mu > 0.0) || !mu.is_finite() {
                return Err(VerifyError::Config(format!(
                    "mu must be positive and finite, got {mu}"
                )));
            }
        }
        if let Some(n) = self.conjecture_n {
            if !(5..=7).contains(&n) {
                return Err(VerifyError::Config(format!(
                    "conjecture probe index must be 5..=7, got {n}"
                )));
            }
            if self.class_tag != ClassTag::StarlikeE {
                return Err(VerifyError::Config(
                    "the conjectured coefficient bound is stated for star_e only; \
                     drop --conjecture or switch --class"
                        .into(),
                ));
            }
        }
        Ok(())
    }

    /// The Fekete–Szegő pairs this run evaluates.
    ///
    /// An explicit pair wins. Otherwise the `fekete-szego` selector walks
    /// a small branch-coverage grid — λ over real values 0..2 plus the
    /// conjugate pair 1 ± i/2, μ over four decades' worth of magnitudes —
    /// chosen so every branch of both the upper and the lower bound fires
    /// somewhere for both classes. The `all` selector keeps the suite at
    /// one report per direction by using the single pair (1, 1).
    pub fn fs_pairs(&self) -> Vec<(Complex64, f64)> {
        if let Some(pair) = self.fs_pair {
            return vec![pair];
        }
        match self.selector {
            FunctionalSelector::FeketeSzego => {
                let lambdas = [
                    Complex64::new(0.0, 0.0),
                    Complex64::new(0.5, 0.0),
                    Complex64::new(1.0, 0.0),
                    Complex64::new(1.5, 0.0),
                    Complex64::new(2.0, 0.0),
                    Complex64::new(1.0, 0.5),
                    Complex64::new(1.0, -0.5),
                ];
                let mus = [0.1, 0.5, 1.0, 2.0, 4.0];
                let mut pairs = Vec::with_capacity(lambdas.len() * mus.len());
                for &lambda in &lambdas {
                    for &mu in &mus {
                        pairs.push((lambda, mu));
                    }
                }
                pairs
            }
            _ => vec![(Complex64::new(1.0, 0.0), 1.0)],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_bad_runs() {
        let mut cfg = RunConfig::baseline(ClassTag::StarlikeE, FunctionalSelector::All);
        assert!(cfg.validate().is_ok());

        cfg.sample_count = 0;
        assert!(cfg.validate().is_err());
        cfg.sample_count = 10;

        cfg.conjecture_n = Some(4);
        assert!(cfg.validate().is_err());
        cfg.conjecture_n = Some(5);
        assert!(cfg.validate().is_ok());

        cfg.class_tag = ClassTag::ConvexE;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn fs_pair_selection() {
        let mut cfg = RunConfig::baseline(ClassTag::StarlikeE, FunctionalSelector::All);
        assert_eq!(cfg.fs_pairs().len(), 1);

        cfg.selector = FunctionalSelector::FeketeSzego;
        assert_eq!(cfg.fs_pairs().len(), 35);

        cfg.fs_pair = Some((Complex64::new(2.0, 0.0), 0.25));
        assert_eq!(cfg.fs_pairs(), vec![(Complex64::new(2.0, 0.0), 0.25)]);
    }
}
