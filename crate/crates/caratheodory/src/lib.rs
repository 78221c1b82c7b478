//! Members of the positive-real-part (Carathéodory) class `P` and the
//! Schwarz functions that generate them.
//!
//! A function `p(z) = 1 + c₁z + c₂z² + …`, analytic on the unit disk with
//! `Re p > 0`, corresponds bijectively to a Schwarz function `w` (analytic,
//! `w(0) = 0`, `|w| < 1`) through `p = (1 + w)/(1 − w)`. Everything the
//! verification pipeline feeds into the coefficient maps is a `p` built
//! here, by one of three routes:
//!
//! 1. **Blaschke products** ([`SchwarzSpec`] → [`schwarz_series`]):
//!    `w(z) = e^{iθ} · z · ∏ₖ (aₖ − z)/(1 − āₖ z)` with up to four zeros.
//!    These Schwarz functions have unimodular boundary values — exactly the
//!    shape of every extremal candidate — and sweep the first four
//!    coefficients densely as the zeros roam the disk.
//! 2. **The τ-parametrization** ([`TauParams`] → [`tau_to_c`]): closed
//!    forms for `(c₁, c₂, c₃)` in terms of three contraction parameters.
//!    Every admissible `(c₁, c₂, c₃)` arises this way, which is what makes
//!    grid sweeps over `(τ₁, τ₂, τ₃)` exhaustive rather than heuristic.
//! 3. **Boundary rational forms** ([`boundary_p_from_tau`]): when the last
//!    relevant τ sits on the unit circle the representing measure is
//!    finitely atomic and `p` collapses to an explicit rational function of
//!    degree ≤ 3. The sharpness witnesses in the verified theorems are all
//!    of this shape.
//!
//! [`schur_schwarz_series`] splices routes 2 and 1 together: a ladder of
//! Möbius steps
//!
//! ```text
//! φ₃ ≡ τ₄,   φₖ(z) = (τₖ₊₁ + z·φₖ₊₁(z)) / (1 + τ̄ₖ₊₁·z·φₖ₊₁(z)),   k = 2, 1, 0
//! ```
//!
//! yields a Schwarz function `w = z·φ₀` whose `p` reproduces the
//! τ-parametrized `(c₁, c₂, c₃)` *exactly* while the extra parameter τ₄
//! sweeps the full conditional range of `c₄`. Sampling τ₄ on the unit
//! circle therefore extends a three-coefficient grid point to boundary
//! candidates in the fourth coefficient — needed by every functional that
//! reads `a₅`.
//!
//! # Conventions
//!
//! Coefficients of `p` are indexed from 1 (`c₁` multiplies `z`); the
//! leading 1 is implicit. τ₁ is kept *real* in `[−1, 1]`: the closed forms
//! contain `(1 − τ₁²)` rather than `(1 − |τ₁|²)`, so they are
//! class-preserving only for real τ₁, and full generality is recovered by
//! the rotation `f ↦ e^{−iθ} f(e^{iθ} z)`, which both geometric classes
//! admit. Canonical use keeps τ₁ ∈ [0, 1].

use num_complex::Complex64;
use series_core::{PowerSeries, SeriesError};
use thiserror::Error;

/// Slack over the sharp coefficient bound `|cₙ| ≤ 2`: rounding headroom for
/// coefficients assembled through series division, far below any gap the
/// verification layer cares about.
pub const COEFF_BOUND_TOL: f64 = 1e-10;

/// Slack for membership of a τ in the closed unit disk. Parameters arrive
/// either exactly (grids) or from unit-circle formulas, so anything beyond
/// rounding distance outside the disk is a caller bug.
pub const TAU_DISK_TOL: f64 = 1e-12;

/// Blaschke zeros must keep this margin from the unit circle: a zero *on*
/// the circle cancels against the denominator and silently drops the
/// factor's degree, so it is rejected instead.
pub const ZERO_BOUNDARY_MARGIN: f64 = 1e-9;

/// Tolerance for "this τ lies on the unit circle" in the boundary rational
/// forms.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// Errors from the constructors and coefficient maps in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CaratheodoryError {
    /// A coefficient broke the sharp class bound `|cₙ| ≤ 2` by more than
    /// [`COEFF_BOUND_TOL`] — the input was not a class member.
    #[error("coefficient c[{index}] has modulus {modulus:.12} exceeding the class bound 2")]
    CoefficientTooLarge { index: usize, modulus: f64 },
    /// A τ parameter lies outside the closed unit disk (beyond
    /// [`TAU_DISK_TOL`]).
    #[error("tau[{index}] has modulus {modulus:.12} outside the closed unit disk")]
    TauOutOfDisk { index: usize, modulus: f64 },
    /// A Blaschke zero is on (or numerically indistinguishable from) the
    /// unit circle.
    #[error("Blaschke zero {index} has modulus {modulus:.12}, within {margin:.1e} of the unit circle", margin = ZERO_BOUNDARY_MARGIN)]
    ZeroOnBoundary { index: usize, modulus: f64 },
    /// More Blaschke zeros than the supported degree-4 maximum.
    #[error("Blaschke degree {degree} exceeds the supported maximum of 4")]
    DegreeTooHigh { degree: usize },
    /// A series claimed as a Schwarz function does not vanish at the
    /// origin.
    #[error("not a Schwarz function: |w(0)| = {modulus:.3e}")]
    NotSchwarz { modulus: f64 },
    /// A series claimed as a class member does not have constant term 1.
    #[error("not a normalized class member: |p(0) − 1| = {deviation:.3e}")]
    NotUnitConstantTerm { deviation: f64 },
    /// The requested boundary case's modulus preconditions fail for these
    /// parameters.
    #[error("boundary case mismatch: {0}")]
    CaseMismatch(String),
    /// Underlying series arithmetic failure.
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The coefficients `c₁, c₂, …` of a positive-real-part function
/// `p(z) = 1 + Σ cₙ zⁿ`, validated against the sharp bound `|cₙ| ≤ 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodoryCoeffs {
    c: Vec<Complex64>,
}

impl CaratheodoryCoeffs {
    /// Wraps `[c₁, c₂, …]`, rejecting any entry with
    /// `|cₙ| > 2 +` [`COEFF_BOUND_TOL`].
    pub fn new(c: Vec<Complex64>) -> Result<Self, CaratheodoryError> {
        for (i, v) in c.iter().enumerate() {
            let modulus = v.norm();
            if modulus > 2.0 + COEFF_BOUND_TOL {
                return Err(CaratheodoryError::CoefficientTooLarge {
                    index: i + 1,
                    modulus,
                });
            }
        }
        Ok(Self { c })
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.c.len()
    }

    /// True when no coefficients are stored (`p ≡ 1` to the given order).
    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// `cₙ`, 1-indexed to match the defining expansion.
    ///
    /// # Panics
    /// If `n` is 0 or exceeds the stored length — there is no "implicit
    /// zero" reading for class coefficients; asking past the data is a bug.
    pub fn c(&self, n: usize) -> Complex64 {
        assert!(n >= 1, "class coefficients are indexed from 1");
        self.c[n - 1]
    }

    /// The coefficients `[c₁, c₂, …]` as a slice.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.c
    }
}

/// The contraction parameters (τ₁, τ₂, τ₃) of the three-coefficient
/// parametrization. τ₁ is real (see the crate docs for why); τ₂, τ₃ roam
/// the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauParams {
    tau1: f64,
    tau2: Complex64,
    tau3: Complex64,
}

impl TauParams {
    /// Validates `|τₖ| ≤ 1 +` [`TAU_DISK_TOL`] for each parameter.
    pub fn new(tau1: f64, tau2: Complex64, tau3: Complex64) -> Result<Self, CaratheodoryError> {
        for (index, modulus) in [(1, tau1.abs()), (2, tau2.norm()), (3, tau3.norm())] {
            if modulus > 1.0 + TAU_DISK_TOL {
                return Err(CaratheodoryError::TauOutOfDisk { index, modulus });
            }
        }
        Ok(Self { tau1, tau2, tau3 })
    }

    /// τ₁ (real).
    pub fn tau1(&self) -> f64 {
        self.tau1
    }

    /// τ₂.
    pub fn tau2(&self) -> Complex64 {
        self.tau2
    }

    /// τ₃.
    pub fn tau3(&self) -> Complex64 {
        self.tau3
    }
}

/// A Schwarz function given as phase times a Blaschke product:
/// `w(z) = e^{i·phase} · z · ∏ₖ (zeros[k] − z)/(1 − conj(zeros[k])·z)`.
///
/// The empty product (`zeros = []`) is the rotation `w = e^{iθ} z`. Fields
/// are plain data; [`schwarz_series`] validates them at the point of use.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzSpec {
    /// Rotation angle θ, canonically in `[0, 2π)`.
    pub phase: f64,
    /// Blaschke zeros, each strictly inside the unit disk; at most four.
    pub zeros: Vec<Complex64>,
}

/// The three-coefficient closed forms
///
/// ```text
/// c₁ = 2τ₁
/// c₂ = 2τ₁² + 2(1 − τ₁²)τ₂
/// c₃ = 2τ₁³ + 4(1 − τ₁²)τ₁τ₂ − 2(1 − τ₁²)τ₁τ₂² + 2(1 − τ₁²)(1 − |τ₂|²)τ₃
/// ```
///
/// These sweep the exact coefficient body: every positive-real-part
/// function has its `(c₁, c₂, c₃)` of this form with all `|τₖ| ≤ 1`, and
/// conversely. Canonical use has τ₁ ∈ [0, 1] (rotation normalizes c₁ ≥ 0);
/// the polynomials remain valid for τ₁ ∈ [−1, 0).
pub fn tau_to_c(t: &TauParams) -> CaratheodoryCoeffs {
    let t1 = Complex64::new(t.tau1, 0.0);
    let (t2, t3) = (t.tau2, t.tau3);
    let gap = 1.0 - t.tau1 * t.tau1; // 1 − τ₁², real by the τ₁ convention
    let c1 = 2.0 * t1;
    let c2 = 2.0 * t1 * t1 + 2.0 * gap * t2;
    let c3 = 2.0 * t1 * t1 * t1 + 4.0 * gap * t1 * t2 - 2.0 * gap * t1 * t2 * t2
        + 2.0 * gap * (1.0 - t2.norm_sqr()) * t3;
    CaratheodoryCoeffs::new(vec![c1, c2, c3])
        .expect("in-disk tau parameters always produce in-class coefficients")
}

/// Expands the [`SchwarzSpec`] Blaschke product to a series of truncation
/// order `n`.
///
/// Each factor is inserted as an exact series quotient
/// `(aₖ − z)/(1 − āₖ z)`, so the result carries the product's Taylor
/// coefficients to full double precision — no pointwise sampling involved.
pub fn schwarz_series(s: &SchwarzSpec, n: usize) -> Result<PowerSeries, CaratheodoryError> {
    if s.zeros.len() > 4 {
        return Err(CaratheodoryError::DegreeTooHigh {
            degree: s.zeros.len(),
        });
    }
    for (index, a) in s.zeros.iter().enumerate() {
        let modulus = a.norm();
        if modulus > 1.0 - ZERO_BOUNDARY_MARGIN {
            return Err(CaratheodoryError::ZeroOnBoundary { index, modulus });
        }
    }
    let linear = |c0: Complex64, c1: Complex64| {
        let mut coeffs = vec![Complex64::ZERO; n.max(1) + 1];
        coeffs[0] = c0;
        coeffs[1] = c1;
        PowerSeries::new(coeffs).expect("finite literals")
    };
    let phase = Complex64::from_polar(1.0, s.phase);
    let mut w = PowerSeries::identity(n).scale(phase);
    for a in &s.zeros {
        // One factor (a − z)/(1 − ā z), inserted as an exact quotient.
        let num = linear(*a, -Complex64::ONE);
        let den = linear(Complex64::ONE, -a.conj());
        w = w.mul(&num).div(&den)?;
    }
    Ok(w)
}

/// Full positive-real-part series `p = (1 + w)/(1 − w)` from a Schwarz
/// series `w`, at `w`'s truncation order.
pub fn p_from_schwarz(w: &PowerSeries) -> Result<PowerSeries, CaratheodoryError> {
    let w0 = w.coeff(0).norm();
    if w0 > 1e-14 {
        return Err(CaratheodoryError::NotSchwarz { modulus: w0 });
    }
    let one = PowerSeries::constant(Complex64::ONE, w.order());
    Ok(one.add(w).div(&one.sub(w))?)
}

/// Coefficients `c₁..c_N` of `p = (1 + w)/(1 − w)` for a Schwarz series
/// `w` of truncation order `N`.
pub fn schwarz_to_p(w: &PowerSeries) -> Result<CaratheodoryCoeffs, CaratheodoryError> {
    let p = p_from_schwarz(w)?;
    CaratheodoryCoeffs::new(p.coeffs()[1..].to_vec())
}

/// Coefficients `c₁..c_N` read off an explicit `p` series (constant term
/// must be 1 to rounding accuracy).
pub fn p_to_coeffs(p: &PowerSeries) -> Result<CaratheodoryCoeffs, CaratheodoryError> {
    let deviation = (p.coeff(0) - Complex64::ONE).norm();
    if deviation > 1e-12 {
        return Err(CaratheodoryError::NotUnitConstantTerm { deviation });
    }
    CaratheodoryCoeffs::new(p.coeffs()[1..].to_vec())
}

/// Which τ sits on the unit circle in [`boundary_p_from_tau`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCase {
    /// `|τ₁| = 1`: single-atom measure, `p = (1 + τ₁z)/(1 − τ₁z)`.
    T1Unimodular,
    /// `|τ₂| = 1`, τ₁ interior: two-atom measure, degree-2 rational `p`.
    T2Unimodular,
    /// `|τ₃| = 1`, τ₁, τ₂ interior: three-atom measure, degree-3 rational.
    T3Unimodular,
}

fn require_unimodular(name: &str, modulus: f64) -> Result<(), CaratheodoryError> {
    if (modulus - 1.0).abs() > UNIMODULAR_TOL {
        return Err(CaratheodoryError::CaseMismatch(format!(
            "{name} must be unimodular, got modulus {modulus:.12}"
        )));
    }
    Ok(())
}

fn require_interior(name: &str, modulus: f64) -> Result<(), CaratheodoryError> {
    if modulus >= 1.0 {
        return Err(CaratheodoryError::CaseMismatch(format!(
            "{name} must lie in the open unit disk, got modulus {modulus:.12}"
        )));
    }
    Ok(())
}

/// The unique positive-real-part function attached to τ parameters whose
/// last relevant entry is unimodular, expanded to truncation order `n`.
///
/// These are the rational forms taken by every sharpness witness: once
/// `|τₖ| = 1` the remaining parameters are immaterial and `p` is the
/// quotient of two explicit polynomials of degree `k`:
///
/// ```text
/// T1:  (1 + τ₁z) / (1 − τ₁z)
/// T2:  (1 + (τ̄₁τ₂ + τ₁)z + τ₂z²) / (1 + (τ̄₁τ₂ − τ₁)z − τ₂z²)
/// T3:  (1 + (τ̄₂τ₃ + τ̄₁τ₂ + τ₁)z + (τ̄₁τ₃ + τ₁τ̄₂τ₃ + τ₂)z² + τ₃z³)
///       / (1 + (τ̄₂τ₃ + τ̄₁τ₂ − τ₁)z + (τ̄₁τ₃ − τ₁τ̄₂τ₃ − τ₂)z² − τ₃z³)
/// ```
///
/// (τ₁ real, so τ̄₁ = τ₁.) Fails with `CaseMismatch` unless the designated
/// τ is unimodular within [`UNIMODULAR_TOL`] and the lower-index τ's are
/// strictly interior.
pub fn boundary_p_from_tau(
    t: &TauParams,
    case: BoundaryCase,
    n: usize,
) -> Result<PowerSeries, CaratheodoryError> {
    let t1 = Complex64::new(t.tau1, 0.0);
    let (t2, t3) = (t.tau2, t.tau3);
    let one = Complex64::ONE;
    let (num, den): (Vec<Complex64>, Vec<Complex64>) = match case {
        BoundaryCase::T1Unimodular => {
            require_unimodular("tau1", t.tau1.abs())?;
            (vec![one, t1], vec![one, -t1])
        }
        BoundaryCase::T2Unimodular => {
            require_unimodular("tau2", t2.norm())?;
            require_interior("tau1", t.tau1.abs())?;
            (
                vec![one, t1 * t2 + t1, t2],
                vec![one, t1 * t2 - t1, -t2],
            )
        }
        BoundaryCase::T3Unimodular => {
            require_unimodular("tau3", t3.norm())?;
            require_interior("tau1", t.tau1.abs())?;
            require_interior("tau2", t2.norm())?;
            let t2c = t2.conj();
            (
                vec![
                    one,
                    t2c * t3 + t1 * t2 + t1,
                    t1 * t3 + t1 * t2c * t3 + t2,
                    t3,
                ],
                vec![
                    one,
                    t2c * t3 + t1 * t2 - t1,
                    t1 * t3 - t1 * t2c * t3 - t2,
                    -t3,
                ],
            )
        }
    };
    let pad = |mut v: Vec<Complex64>| -> PowerSeries {
        v.resize(n.max(v.len() - 1).max(1) + 1, Complex64::ZERO);
        PowerSeries::new(v).expect("finite rational coefficients")
    };
    Ok(pad(num).div(&pad(den))?.truncated(n))
}

/// Evaluates a truncated `p` on the circle `|z| = radius` at `gridpoints`
/// equally spaced angles (Horner) and reports the minimum real part along
/// with whether it clears `−1e-9`.
///
/// This is a diagnostic spot check against construction bugs, not a
/// membership proof: the constructions in this crate are Schwarz-exact by
/// design, so a negative dip beyond the truncation tail always means a
/// wiring error. The caller owns the tail budget: class members satisfy
/// `|cₙ| ≤ 2`, so the discarded tail is at most `2·r^{N+1}/(1 − r)` on the
/// circle of radius `r`. Boundary members have non-decaying coefficients,
/// which makes the check decisive at radius 0.9 only from order ≈ 60 up;
/// at the pipeline's default order 8, radius ≤ 0.5 keeps the tail below
/// every genuine minimum. Requires `0 < radius < 1`.
pub fn validate_positive_real_part(
    p: &PowerSeries,
    radius: f64,
    gridpoints: usize,
) -> (bool, f64) {
    debug_assert!(radius > 0.0 && radius < 1.0, "radius must be inside the disk");
    let mut min_re = f64::INFINITY;
    for j in 0..gridpoints.max(1) {
        let angle = 2.0 * std::f64::consts::PI * (j as f64) / (gridpoints.max(1) as f64);
        let z = Complex64::from_polar(radius, angle);
        let mut value = Complex64::ZERO;
        for &c in p.coeffs().iter().rev() {
            value = value * z + c;
        }
        min_re = min_re.min(value.re);
    }
    (min_re > -1e-9, min_re)
}

/// Schwarz function with the `(c₁, c₂, c₃)` of [`tau_to_c`] and a fourth
/// contraction parameter τ₄ controlling `c₄`, expanded to order `n`.
///
/// Implements the Möbius ladder from the crate docs: starting from the
/// constant inner function `φ₃ ≡ τ₄`, each step
/// `φₖ = (τₖ₊₁ + z·φₖ₊₁)/(1 + τ̄ₖ₊₁·z·φₖ₊₁)` wraps one more parameter, and
/// `w = z·φ₀`. Each step maps disk-valued data to disk-valued data, so `w`
/// is a genuine Schwarz function for any parameters in the closed disk;
/// taking `|τ₄| = 1` lands on boundary candidates for the fourth
/// coefficient.
pub fn schur_schwarz_series(
    t: &TauParams,
    tau4: Complex64,
    n: usize,
) -> Result<PowerSeries, CaratheodoryError> {
    let modulus = tau4.norm();
    if modulus > 1.0 + TAU_DISK_TOL {
        return Err(CaratheodoryError::TauOutOfDisk { index: 4, modulus });
    }
    let mut phi = PowerSeries::constant(tau4, n);
    for tau in [t.tau3, t.tau2, Complex64::new(t.tau1, 0.0)] {
        let shifted = phi.shift_up(); // z·φ
        let num = PowerSeries::constant(tau, n).add(&shifted);
        let den = PowerSeries::constant(Complex64::ONE, n).add(&shifted.scale(tau.conj()));
        phi = num.div(&den)?;
    }
    Ok(phi.shift_up())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tau_to_c_boundary_point_gives_all_twos() {
        let t = TauParams::new(1.0, Complex64::ZERO, Complex64::ZERO).unwrap();
        let c = tau_to_c(&t);
        for n in 1..=3 {
            assert!((c.c(n) - c64(2.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn tau_to_c_degenerate_first_parameter() {
        let t = TauParams::new(0.0, Complex64::ONE, c64(0.3, 0.0)).unwrap();
        let c = tau_to_c(&t);
        assert_eq!(c.c(1), Complex64::ZERO);
        assert!((c.c(2) - c64(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(c.c(3), Complex64::ZERO);
    }

    #[test]
    fn tau_params_rejects_outside_disk() {
        let err = TauParams::new(0.5, c64(1.1, 0.0), Complex64::ZERO).unwrap_err();
        assert!(matches!(err, CaratheodoryError::TauOutOfDisk { index: 2, .. }));
    }

    #[test]
    fn schur_ladder_matches_tau_closed_forms() {
        let t = TauParams::new(0.4, c64(0.2, -0.5), c64(-0.1, 0.6)).unwrap();
        let w = schur_schwarz_series(&t, c64(0.3, 0.4), 8).unwrap();
        let from_ladder = schwarz_to_p(&w).unwrap();
        let closed = tau_to_c(&t);
        for n in 1..=3 {
            assert!(
                (from_ladder.c(n) - closed.c(n)).norm() < 1e-13,
                "c{n} mismatch between ladder and closed forms"
            );
        }
    }

    #[test]
    fn coeffs_reject_out_of_class_values() {
        let err = CaratheodoryCoeffs::new(vec![c64(2.5, 0.0)]).unwrap_err();
        assert!(matches!(
            err,
            CaratheodoryError::CoefficientTooLarge { index: 1, .. }
        ));
    }
}
