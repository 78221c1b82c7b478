//! Truncated formal power series over complex coefficients.
//!
//! A [`PowerSeries`] stores the coefficients `c[0..=N]` of
//! `Σ c[k] z^k + O(z^{N+1})` for a fixed truncation order `N ≥ 1`. All
//! arithmetic is double-precision and exact-arithmetic-free: the series is a
//! *carrier of coefficients*, never a function to be summed outside the
//! coefficient domain.
//!
//! # Operations
//!
//! | Operation | Method | Recursion |
//! |-----------|--------|-----------|
//! | sum / difference | [`PowerSeries::add`], [`PowerSeries::sub`] | termwise |
//! | Cauchy product | [`PowerSeries::mul`] | convolution, truncated |
//! | quotient | [`PowerSeries::div`] | forward substitution on `q·b = a` |
//! | exponential | [`PowerSeries::exp_series`] | `(e^a)' = a'·e^a` |
//! | normalized logarithm | [`PowerSeries::log_ratio`] | `(log g)' = g'/g` on `g = f/z` |
//! | derivative | [`PowerSeries::derivative`] | termwise |
//! | composition | [`PowerSeries::compose`] | Horner on the inner series |
//!
//! `exp_series` and `log_ratio` use the derivative-based recursions rather
//! than repeated multiplication: both are O(N²) and numerically stable for
//! the O(1)-sized coefficients this crate is used with.
//!
//! # Truncation discipline
//!
//! Every binary operation truncates at the *minimum* of the operands'
//! orders, so a result never pretends to more resolution than its inputs
//! carried. `derivative` lowers the order by one, as does `log_ratio`
//! (which divides out one power of `z` first).
//!
//! # Numerical contract
//!
//! All coefficients are finite (`NaN`/`∞` are rejected at construction and
//! cannot be produced by the guarded operations). Algebraic identities —
//! commutativity, `div∘mul` round-trips, the chain rule — hold to `1e-12`
//! relative error for inputs with coefficients of magnitude ≲ 10; the
//! integration tests pin these tolerances down.

use num_complex::Complex64;
use thiserror::Error;

/// Errors from series operations whose preconditions can fail.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    /// Quotient denominator has (numerically) vanishing constant term, so
    /// the forward-substitution recursion would divide by ~0.
    #[error("division by a series with vanishing constant term (|b[0]| = {modulus:.3e})")]
    DivisionByZeroConstantTerm {
        /// Modulus of the offending constant term.
        modulus: f64,
    },
    /// `log_ratio` requires the normalization `f(0) = 0`, `f'(0) = 1`.
    #[error("series is not normalized to f(0) = 0, f'(0) = 1")]
    NotNormalized,
    /// Composition requires the inner series to vanish at the origin;
    /// otherwise infinitely many terms of the outer series would
    /// contribute to every output coefficient.
    #[error("inner series of a composition must vanish at the origin (|inner[0]| = {modulus:.3e})")]
    InnerNotVanishing {
        /// Modulus of the offending constant term.
        modulus: f64,
    },
    /// Constructor rejected a non-finite coefficient.
    #[error("coefficient {index} is not finite")]
    NonFiniteCoefficient {
        /// Index of the offending coefficient.
        index: usize,
    },
    /// Constructor rejected a coefficient list shorter than two entries
    /// (the truncation order must be at least 1).
    #[error("a series needs at least two coefficients (constant and linear term)")]
    TooShort,
}

/// Modulus below which a constant term counts as zero for division.
///
/// Chosen near the smallest positive normal `f64` so that any constant term
/// a well-posed computation can produce passes, while a structural zero
/// (exact or rounded to ~0) is caught instead of poisoning the quotient
/// with overflow.
pub const DIV_CONSTANT_TERM_MIN: f64 = 1e-300;

/// Modulus above which the constant term of a composition's inner series
/// counts as nonzero.  `1e-14` admits rounding residue from series
/// arithmetic on O(1) inputs but rejects genuinely non-vanishing terms.
pub const COMPOSE_INNER_MAX: f64 = 1e-14;

/// A truncated power series `Σ_{k=0}^{N} c[k] z^k`.
///
/// The truncation order `N` equals `coeffs().len() - 1` and is always at
/// least 1. Instances are immutable values: every operation returns a new
/// series, so sharing across threads is unrestricted.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Wraps a coefficient vector `c[0..=N]`.
    ///
    /// Fails if fewer than two coefficients are supplied or any entry is
    /// non-finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, SeriesError> {
        if coeffs.len() < 2 {
            return Err(SeriesError::TooShort);
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(SeriesError::NonFiniteCoefficient { index });
            }
        }
        Ok(Self { coeffs })
    }

    /// The zero series at truncation order `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![Complex64::ZERO; n.max(1) + 1],
        }
    }

    /// The constant series `v + 0·z + …` at truncation order `n`.
    pub fn constant(v: Complex64, n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = v;
        s
    }

    /// The monomial `z^k` at truncation order `n ≥ k`.
    pub fn monomial(k: usize, n: usize) -> Self {
        let mut s = Self::zero(n.max(k));
        s.coeffs[k] = Complex64::ONE;
        s
    }

    /// The identity series `z` at truncation order `n`.
    pub fn identity(n: usize) -> Self {
        Self::monomial(1, n)
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient slice `c[0..=N]`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, or zero when `k` exceeds the truncation order.
    ///
    /// Reading past the order is *not* an error — the stored prefix of a
    /// truncated series simply has nothing there — but callers that need
    /// `z^k` resolution should construct their inputs with order ≥ `k`.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    /// Copy truncated (or zero-extended) to order `n`.
    pub fn truncated(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n.max(1) + 1, Complex64::ZERO);
        Self { coeffs }
    }

    /// Termwise sum, truncated at the minimum of the operands' orders.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect();
        Self { coeffs }
    }

    /// Termwise difference, truncated at the minimum of the operands' orders.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| self.coeffs[k] - other.coeffs[k]).collect();
        Self { coeffs }
    }

    /// Series scaled by a complex constant.
    pub fn scale(&self, v: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * v).collect(),
        }
    }

    /// Cauchy product, truncated at the minimum of the operands' orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        for i in 0..=n.min(self.order()) {
            if self.coeffs[i] == Complex64::ZERO {
                continue;
            }
            for j in 0..=(n - i).min(other.order()) {
                coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        Self { coeffs }
    }

    /// Multiplication by `z`: shifts coefficients up one slot, keeping the
    /// truncation order (the top coefficient falls off the end).
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        coeffs[1..=n].copy_from_slice(&self.coeffs[..n]);
        Self { coeffs }
    }

    /// Quotient `q` with `q·b = a` up to truncation, by forward
    /// substitution: `q[k] = (a[k] − Σ_{j<k} q[j]·b[k−j]) / b[0]`.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let b0 = other.coeffs[0];
        if b0.norm() < DIV_CONSTANT_TERM_MIN {
            return Err(SeriesError::DivisionByZeroConstantTerm { modulus: b0.norm() });
        }
        let n = self.order().min(other.order());
        let mut q = vec![Complex64::ZERO; n + 1];
        for k in 0..=n {
            let mut s = self.coeffs[k];
            for j in 0..k {
                s -= q[j] * other.coeffs[k - j];
            }
            q[k] = s / b0;
        }
        Ok(Self { coeffs: q })
    }

    /// Exponential `e^a` via the derivative recursion `(e^a)' = a'·e^a`:
    /// `b[0] = exp(a[0])`, then `k·b[k] = Σ_{j=1}^{k} j·a[j]·b[k−j]`.
    ///
    /// A nonzero constant term is allowed; the typical inputs here vanish
    /// at the origin.
    pub fn exp_series(&self) -> Self {
        let n = self.order();
        let mut b = vec![Complex64::ZERO; n + 1];
        b[0] = self.coeffs[0].exp();
        for k in 1..=n {
            let mut s = Complex64::ZERO;
            for j in 1..=k {
                s += (j as f64) * self.coeffs[j] * b[k - j];
            }
            b[k] = s / (k as f64);
        }
        Self { coeffs: b }
    }

    /// Logarithm of the unit-normalized ratio: for `f = z + a₂z² + …`
    /// returns `log(f(z)/z)` with the convention `log 1 = 0`.
    ///
    /// Writing `g = f/z` (so `g(0) = 1`), the recursion comes from
    /// `(log g)' = g'/g`:
    /// `h[k] = g[k] − (1/k)·Σ_{j=1}^{k−1} j·h[j]·g[k−j]`, `h[0] = 0`.
    ///
    /// The result has truncation order `N − 1` (one power of `z` is divided
    /// out). Fails with [`SeriesError::NotNormalized`] unless `f[0] = 0`
    /// and `f[1] = 1` exactly to `1e-12`.
    pub fn log_ratio(&self) -> Result<Self, SeriesError> {
        let f0 = self.coeffs[0];
        let f1 = self.coeffs[1];
        if f0.norm() > 1e-12 || (f1 - Complex64::ONE).norm() > 1e-12 {
            return Err(SeriesError::NotNormalized);
        }
        let n = self.order() - 1;
        // g = f/z, with the normalization pinned exactly.
        let mut g = vec![Complex64::ZERO; n + 1];
        g[0] = Complex64::ONE;
        g[1..=n].copy_from_slice(&self.coeffs[2..=n + 1]);
        let mut h = vec![Complex64::ZERO; (n + 1).max(2)];
        for k in 1..=n {
            let mut s = Complex64::ZERO;
            for j in 1..k {
                s += (j as f64) * h[j] * g[k - j];
            }
            h[k] = g[k] - s / (k as f64);
        }
        Ok(Self { coeffs: h })
    }

    /// Termwise derivative; the truncation order drops by one.
    ///
    /// At the minimum order (`N = 1`) only the constant term of the
    /// derivative is determined; it is returned padded with a zero linear
    /// slot so the `order ≥ 1` invariant holds.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<Complex64> =
            (1..=n).map(|k| (k as f64) * self.coeffs[k]).collect();
        if coeffs.len() < 2 {
            coeffs.push(Complex64::ZERO);
        }
        Self { coeffs }
    }

    /// Composition `outer(inner(z))`, truncated at the minimum of the two
    /// orders, evaluated Horner-style on the inner series.
    ///
    /// Fails with [`SeriesError::InnerNotVanishing`] when the inner series
    /// has a constant term of modulus above [`COMPOSE_INNER_MAX`].
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let i0 = inner.coeffs[0].norm();
        if i0 > COMPOSE_INNER_MAX {
            return Err(SeriesError::InnerNotVanishing { modulus: i0 });
        }
        let n = self.order().min(inner.order());
        let inner_t = inner.truncated(n);
        let mut acc = Self::constant(self.coeff(self.order()), n);
        for k in (0..self.order()).rev() {
            acc = acc.mul(&inner_t);
            acc.coeffs[0] += self.coeffs[k];
        }
        Self::new(acc.coeffs)
    }

    /// Largest coefficient modulus — a cheap magnitude diagnostic used by
    /// tests and tolerance checks.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}
