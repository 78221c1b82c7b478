//! The four coefficient functionals under verification, evaluated on class
//! members.
//!
//! For a normalized `f(z) = z + a₂z² + …` the *logarithmic coefficients*
//! `γₙ` are defined by `log(f(z)/z) = 2 Σ γₙ zⁿ`; expanding the logarithm
//! gives polynomial expressions
//!
//! ```text
//! γ₁ = a₂/2
//! γ₂ = (a₃ − a₂²/2)/2
//! γ₃ = (a₄ − a₂a₃ + a₂³/3)/2
//! γ₄ = (a₅ − a₂a₄ + a₂²a₃ − a₃²/2 − a₂⁴/4)/2
//! ```
//!
//! ([`log_coeffs`]; [`log_coeffs_via_series`] recomputes them — to any
//! index — through the series logarithm, serving both as cross-check and
//! as the evaluator for indices beyond 4.)
//!
//! On top of the `γₙ` sit the four studied quantities:
//!
//! * `|γₙ|` — the logarithmic coefficient moduli themselves;
//! * `T₂,₁ = γ₁² − |γ₂|²` — the second-order Hermitian–Toeplitz
//!   determinant of the logarithmic coefficients ([`toeplitz_t21`]),
//!   which for real `a₂` collapses to
//!   `(1/16)(−a₂⁴ + 4a₂² + 4a₂²·Re a₃ − 4|a₃|²)`;
//! * `|a₂a₃ − a₄|` — the (2,3) case of the generalized Zalcman
//!   expression ([`zalcman_23`]; [`zalcman_general`] evaluates other index
//!   pairs but carries no bound claims);
//! * `F_{λ,μ} = |a₃ − λa₂²| − μ|a₂|` — the generalized Fekete–Szegő
//!   functional ([`fekete_szego`]), `λ` complex, `μ > 0`.
//!
//! # Rotation normalization
//!
//! Both classes are rotation-closed: `f ↦ e^{−iθ} f(e^{iθ} z)` maps members
//! to members, sending `aₙ ↦ aₙ e^{i(n−1)θ}`. The determinant formula above
//! presumes the rotation with `a₂ ≥ 0` real, so [`toeplitz_t21`] *requires*
//! a normalized member (apply [`rotate_normalize`] first) instead of
//! silently taking real parts. The moduli `|γₙ|`, `|a₂a₃ − a₄|`, and the
//! Fekete–Szegő value for real λ are rotation-invariant, which the tests
//! verify directly.

use class_maps::{ClassMember, Provenance};
use num_complex::Complex64;
use series_core::{PowerSeries, SeriesError};
use thiserror::Error;

/// Errors from functional evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FunctionalError {
    /// The Toeplitz determinant formula needs a rotation-normalized member.
    #[error("a2 must be real (|Im a2| = {imag:.3e}); apply rotate_normalize first")]
    NonRealA2 { imag: f64 },
    /// The Fekete–Szegő functional is studied for μ > 0 only.
    #[error("mu must be positive, got {mu}")]
    NonPositiveMu { mu: f64 },
    /// Polynomial log-coefficient expressions stop at γ₄; higher indices
    /// go through the series route.
    #[error("no closed-form log coefficient at index {n}; use log_coeffs_via_series")]
    UnsupportedGammaIndex { n: u32 },
    /// Underlying series failure (series-route log coefficients).
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The logarithmic coefficients γ₁..γ₄ of a member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogCoeffs {
    gamma: [Complex64; 4],
}

impl LogCoeffs {
    /// γₙ, 1-indexed.
    ///
    /// # Panics
    /// If `n` is outside 1..=4.
    pub fn gamma(&self, n: usize) -> Complex64 {
        assert!((1..=4).contains(&n), "stored log coefficients are γ1..γ4");
        self.gamma[n - 1]
    }
}

/// Which functional a [`FunctionalValue`] carries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionalName {
    /// `|γₙ|`, n = 1..4.
    Gamma(u32),
    /// `T₂,₁ = γ₁² − |γ₂|²` on the rotation-normalized member.
    T21,
    /// `|a₂a₃ − a₄|`.
    Zalcman23,
    /// `F_{λ,μ} = |a₃ − λa₂²| − μ|a₂|`.
    FeketeSzego { lambda: Complex64, mu: f64 },
}

/// A functional evaluated on one member: the real value plus a copy of the
/// member's provenance, so extrema found while sampling stay replayable.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalValue {
    pub name: FunctionalName,
    pub value: f64,
    pub member_ref: Provenance,
}

/// γ₁..γ₄ by the closed polynomial expressions (see crate docs).
///
/// # Panics
/// If the member does not carry `a₂..a₅`.
pub fn log_coeffs(m: &ClassMember) -> LogCoeffs {
    let (a2, a3, a4, a5) = (m.a(2), m.a(3), m.a(4), m.a(5));
    let g1 = a2 / 2.0;
    let g2 = (a3 - a2 * a2 / 2.0) / 2.0;
    let g3 = (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0;
    let g4 = (a5 - a2 * a4 + a2 * a2 * a3 - a3 * a3 / 2.0 - a2 * a2 * a2 * a2 / 4.0) / 2.0;
    LogCoeffs {
        gamma: [g1, g2, g3, g4],
    }
}

/// γ₁..γ_upto through the series logarithm: `log(f/z)/2` coefficient by
/// coefficient. `f` must be a normalized member series of truncation order
/// ≥ `upto + 1`; this is the evaluator for indices beyond the polynomial
/// range and the cross-check below it.
pub fn log_coeffs_via_series(
    f: &PowerSeries,
    upto: usize,
) -> Result<Vec<Complex64>, FunctionalError> {
    let h = f.log_ratio()?; // log(f/z), truncation order f.order() − 1
    Ok((1..=upto).map(|n| h.coeff(n) / 2.0).collect())
}

/// The rotation `aₙ ↦ aₙ e^{i(n−1)θ}` with θ chosen so that `a₂ ≥ 0` is
/// real; when `a₂ = 0`, so that `a₃ ≥ 0` is real; when both vanish, the
/// identity. Provenance is preserved — the result is the same member seen
/// through a class-preserving rotation.
pub fn rotate_normalize(m: &ClassMember) -> ClassMember {
    let a2 = m.a(2);
    let a3 = m.a(3);
    let theta = if a2.norm() > 0.0 {
        -a2.arg()
    } else if a3.norm() > 0.0 {
        -a3.arg() / 2.0
    } else {
        return m.clone();
    };
    let rotated: Vec<Complex64> = m
        .coeffs_from_a2()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            // index i stores a_{i+2}, which picks up the angle (n−1)θ = (i+1)θ.
            a * Complex64::from_polar(1.0, (i + 1) as f64 * theta)
        })
        .collect();
    ClassMember::from_coefficients(m.class_tag(), rotated).with_provenance(m.provenance().clone())
}

/// `T₂,₁ = γ₁² − |γ₂|²` via the real-`a₂` determinant formula
/// `(1/16)(−a₂⁴ + 4a₂² + 4a₂²·Re a₃ − 4|a₃|²)`.
///
/// Requires `|Im a₂| ≤ 1e-10`: the formula presumes the canonical
/// rotation, and a complex `a₂` silently fed through it would produce a
/// value belonging to no member.
pub fn toeplitz_t21(m: &ClassMember) -> Result<f64, FunctionalError> {
    let a2 = m.a(2);
    if a2.im.abs() > 1e-10 {
        return Err(FunctionalError::NonRealA2 { imag: a2.im.abs() });
    }
    let x = a2.re;
    let a3 = m.a(3);
    Ok((-x.powi(4) + 4.0 * x * x + 4.0 * x * x * a3.re - 4.0 * a3.norm_sqr()) / 16.0)
}

/// `|a₂a₃ − a₄|`.
pub fn zalcman_23(m: &ClassMember) -> f64 {
    (m.a(2) * m.a(3) - m.a(4)).norm()
}

/// The general Zalcman-type expression `|aⱼaₖ − a_{j+k−1}|`.
///
/// Exposed for exploration only — no sharp bound is claimed or verified
/// for index pairs other than (2, 3).
///
/// # Panics
/// If the member does not carry `a_{j+k−1}`.
pub fn zalcman_general(m: &ClassMember, j: usize, k: usize) -> f64 {
    (m.a(j) * m.a(k) - m.a(j + k - 1)).norm()
}

/// `F_{λ,μ} = |a₃ − λa₂²| − μ|a₂|` for complex λ and μ > 0.
pub fn fekete_szego(m: &ClassMember, lambda: Complex64, mu: f64) -> Result<f64, FunctionalError> {
    if mu <= 0.0 {
        return Err(FunctionalError::NonPositiveMu { mu });
    }
    let a2 = m.a(2);
    Ok((m.a(3) - lambda * a2 * a2).norm() - mu * a2.norm())
}

/// Evaluates one named functional on a member, packaging the value with
/// the member's provenance. `Gamma(n)` is served by the polynomial
/// expressions and therefore supports n = 1..4; `T21` rotation-normalizes
/// internally.
pub fn evaluate(name: FunctionalName, m: &ClassMember) -> Result<FunctionalValue, FunctionalError> {
    let value = match name {
        FunctionalName::Gamma(n) => {
            if !(1..=4).contains(&n) {
                return Err(FunctionalError::UnsupportedGammaIndex { n });
            }
            log_coeffs(m).gamma(n as usize).norm()
        }
        FunctionalName::T21 => toeplitz_t21(&rotate_normalize(m))?,
        FunctionalName::Zalcman23 => zalcman_23(m),
        FunctionalName::FeketeSzego { lambda, mu } => fekete_szego(m, lambda, mu)?,
    };
    Ok(FunctionalValue {
        name,
        value,
        member_ref: m.provenance().clone(),
    })
}
