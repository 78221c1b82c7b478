//! Taylor coefficients of the exponentially starlike and exponentially
//! convex function classes, computed two independent ways.
//!
//! The classes are defined by subordination to `e^z`: a normalized
//! analytic `f(z) = z + a₂z² + …` on the unit disk is *exponentially
//! starlike* when `zf′(z)/f(z) = e^{w(z)}` and *exponentially convex* when
//! `1 + zf″(z)/f′(z) = e^{w(z)}`, in both cases for some Schwarz function
//! `w`. Writing `p = (1 + w)/(1 − w)` with coefficients `cₙ` links every
//! member to positive-real-part data, and the first four Taylor
//! coefficients have closed forms in the `cₙ`:
//!
//! ```text
//! starlike:  a₂ = c₁/2            convex:  a₂ = c₁/4
//!            a₃ = c₁²/16 + c₂/4            a₃ = c₁²/48 + c₂/12
//!            a₄ = c₁c₂/24 − c₁³/288 + c₃/6
//!                                          a₄ = c₁c₂/96 − c₁³/1152 + c₃/24
//!            a₅ = c₁⁴/1152 − c₂c₁²/96 + c₁c₃/48 + c₄/8
//!                                          a₅ = c₁⁴/5760 − c₁²c₂/480 + c₁c₃/240 + c₄/40
//! ```
//!
//! ([`star_coeffs`], [`convex_coeffs`].) Independently, [`coeffs_via_ode`]
//! solves the defining differential relation term by term from `w` alone:
//! for the starlike class the recursion
//! `aₙ = (1/(n−1)) Σ_{m=1}^{n−1} aₘ·eₙ₋ₘ` with `e = exp(w)`, and for the
//! convex class the same recursion run on `g = f′` followed by termwise
//! integration. The two routes agreeing to twelve digits over random
//! Schwarz inputs is the workspace's central cross-validation of the
//! closed forms.
//!
//! The crate also hosts the catalog of extremal members: the monomial-type
//! witnesses generated by `p(z) = (1 + zⁿ)/(1 − zⁿ)` (these attain the
//! sharp logarithmic-coefficient and determinant bounds) and the
//! two-parameter family generated by
//! `p(z) = (1 + (t₁t₂ + t₁)z + t₂z²)/(1 + (t₁t₂ − t₁)z − t₂z²)`,
//! which realizes equality in the piecewise Fekete–Szegő bounds at
//! branch-specific values of `(t₁, t₂)`.
//!
//! # Conventions
//!
//! Member coefficients are indexed mathematically: `a(2)` is the first
//! stored coefficient (the `z²` one), `a₁ = 1` is implicit. Truncation
//! order `M` means coefficients `a₂..a_M` are stored; the workspace default
//! is `M = 8`, enough for every functional (`a₅`) plus the
//! logarithmic-coefficient probe at indices 5–7.

use caratheodory::{CaratheodoryCoeffs, CaratheodoryError, SchwarzSpec, TauParams};
use num_complex::Complex64;
use series_core::{PowerSeries, SeriesError};
use thiserror::Error;

/// Workspace default truncation: coefficients `a₂..a₈`.
pub const DEFAULT_TRUNCATION: usize = 8;

/// Errors from coefficient maps and catalog construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassMapError {
    /// The closed forms need `c₁..c₄`; fewer were supplied.
    #[error("need at least {needed} positive-real-part coefficients, got {got}")]
    InsufficientCoeffs { needed: usize, got: usize },
    /// A Schwarz series fed to the coefficient recursion does not vanish
    /// at the origin.
    #[error("Schwarz input must vanish at the origin: |w(0)| = {modulus:.3e}")]
    SchwarzConstantTerm { modulus: f64 },
    /// An extremal generator's parameters violate their stated domain.
    #[error("invalid extremal generator: {0}")]
    InvalidGenerator(String),
    /// Underlying series arithmetic failure.
    #[error(transparent)]
    Series(#[from] SeriesError),
    /// Underlying positive-real-part construction failure.
    #[error(transparent)]
    Caratheodory(#[from] CaratheodoryError),
}

/// Which of the two exponential classes a member belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    /// `zf′/f` subordinate to `e^z`.
    StarlikeE,
    /// `1 + zf″/f′` subordinate to `e^z`.
    ConvexE,
}

impl ClassTag {
    /// Stable lowercase name used in CLI arguments and report output.
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassTag::StarlikeE => "star_e",
            ClassTag::ConvexE => "convex_e",
        }
    }
}

/// How a member was constructed — kept alongside the coefficients so every
/// extremum found by sampling can be replayed and refined.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    /// Built from the τ-parametrization; `tail` is the optional fourth
    /// contraction parameter of the Möbius-ladder completion (present for
    /// samples that extend the τ grid into the fourth coefficient).
    FromTau {
        params: TauParams,
        tail: Option<Complex64>,
    },
    /// Built from a Blaschke-product Schwarz function.
    FromSchwarz(SchwarzSpec),
    /// A catalog extremal member, by id.
    Extremal(String),
    /// Built directly from explicit coefficient data.
    Direct,
}

/// A member of one of the two classes: its Taylor coefficients `a₂..a_M`
/// plus the construction provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    class_tag: ClassTag,
    a: Vec<Complex64>,
    provenance: Provenance,
}

impl ClassMember {
    fn new(class_tag: ClassTag, a: Vec<Complex64>, provenance: Provenance) -> Self {
        debug_assert!(a.iter().all(|v| v.re.is_finite() && v.im.is_finite()));
        Self {
            class_tag,
            a,
            provenance,
        }
    }

    /// Wraps explicit coefficient data `[a₂, a₃, …]` as a member view with
    /// [`Provenance::Direct`].
    ///
    /// No class membership is verified — this is the carrier used for
    /// rotations of existing members and for evaluating coefficient
    /// functionals on reference sequences, not a constructor of certified
    /// class members.
    pub fn from_coefficients(class_tag: ClassTag, a: Vec<Complex64>) -> Self {
        Self::new(class_tag, a, Provenance::Direct)
    }

    /// The class this member belongs to.
    pub fn class_tag(&self) -> ClassTag {
        self.class_tag
    }

    /// Construction provenance.
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Replaces the provenance (constructors default to [`Provenance::Direct`];
    /// samplers stamp the parameters they actually drew).
    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Taylor coefficient `aₙ`, mathematically indexed: `a(2)` is the
    /// first stored entry and `a(1)` returns the implicit 1.
    ///
    /// # Panics
    /// If `n < 1` or `n` exceeds the stored truncation.
    pub fn a(&self, n: usize) -> Complex64 {
        assert!(n >= 1, "Taylor coefficients start at a1 = 1");
        if n == 1 {
            return Complex64::ONE;
        }
        self.a[n - 2]
    }

    /// Largest stored coefficient index `M`.
    pub fn max_index(&self) -> usize {
        self.a.len() + 1
    }

    /// The stored coefficients `[a₂, a₃, …, a_M]`.
    pub fn coeffs_from_a2(&self) -> &[Complex64] {
        &self.a
    }

    /// The member as a normalized series `z + a₂z² + … + a_M z^M`.
    pub fn to_series(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.a.len() + 2);
        coeffs.push(Complex64::ZERO);
        coeffs.push(Complex64::ONE);
        coeffs.extend_from_slice(&self.a);
        PowerSeries::new(coeffs).expect("member coefficients are finite")
    }
}

/// The positive-real-part generator behind an extremal member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// `p(z) = (1 + zⁿ)/(1 − zⁿ)`, the single-frequency boundary member.
    MonomialP { n: u32 },
    /// `p(z) = (1 + (t₁t₂ + t₁)z + t₂z²)/(1 + (t₁t₂ − t₁)z − t₂z²)` with
    /// `t₁ ∈ [0, 1]` and `|t₂| = 1` — the two-atom boundary family.
    TwoParamP { t1: f64, t2: Complex64 },
}

/// A named extremal member: its id, class, and generator.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalSpec {
    /// Stable identifier (`f1`..`f7`, `f4_star`/`f4_convex`, or the
    /// two-parameter witness ids ending in `_fs`).
    pub id: String,
    /// Which class the witness lives in.
    pub class_tag: ClassTag,
    /// The generating positive-real-part function.
    pub generator: Generator,
}

fn require_len(c: &CaratheodoryCoeffs, needed: usize) -> Result<(), ClassMapError> {
    if c.len() < needed {
        return Err(ClassMapError::InsufficientCoeffs {
            needed,
            got: c.len(),
        });
    }
    Ok(())
}

/// Closed-form `a₂..a₅` of the exponentially starlike member attached to
/// the coefficients `c₁..c₄` (see the crate docs for the four formulas).
pub fn star_coeffs(c: &CaratheodoryCoeffs) -> Result<ClassMember, ClassMapError> {
    require_len(c, 4)?;
    let (c1, c2, c3, c4) = (c.c(1), c.c(2), c.c(3), c.c(4));
    let a2 = c1 / 2.0;
    let a3 = c1 * c1 / 16.0 + c2 / 4.0;
    let a4 = c1 * c2 / 24.0 - c1 * c1 * c1 / 288.0 + c3 / 6.0;
    let a5 = c1 * c1 * c1 * c1 / 1152.0 - c2 * c1 * c1 / 96.0 + c1 * c3 / 48.0 + c4 / 8.0;
    Ok(ClassMember::new(
        ClassTag::StarlikeE,
        vec![a2, a3, a4, a5],
        Provenance::Direct,
    ))
}

/// Closed-form `a₂..a₅` of the exponentially convex member attached to the
/// coefficients `c₁..c₄`.
pub fn convex_coeffs(c: &CaratheodoryCoeffs) -> Result<ClassMember, ClassMapError> {
    require_len(c, 4)?;
    let (c1, c2, c3, c4) = (c.c(1), c.c(2), c.c(3), c.c(4));
    let a2 = c1 / 4.0;
    let a3 = c2 / 12.0 + c1 * c1 / 48.0;
    let a4 = c1 * c2 / 96.0 - c1 * c1 * c1 / 1152.0 + c3 / 24.0;
    let a5 = c1 * c1 * c1 * c1 / 5760.0 - c1 * c1 * c2 / 480.0 + c1 * c3 / 240.0 + c4 / 40.0;
    Ok(ClassMember::new(
        ClassTag::ConvexE,
        vec![a2, a3, a4, a5],
        Provenance::Direct,
    ))
}

/// The member's full series `f = z + a₂z² + …` solved term by term from
/// the defining differential relation, at `w`'s truncation order.
///
/// Starlike: `zf′ = f·e^w` gives the triangular recursion
/// `aₙ = (1/(n−1)) Σ_{m=1}^{n−1} aₘ·eₙ₋ₘ`. Convex: the same relation for
/// `g = f′` reads `zg′ = g·(e^w − 1)`, solved by
/// `bₖ = (1/k) Σ_{m=0}^{k−1} bₘ·eₖ₋ₘ` and integrated via `aₙ = bₙ₋₁/n` —
/// running on `f′` keeps the recursion triangular with no division by
/// series data.
pub fn f_series_from_schwarz(
    w: &PowerSeries,
    class_tag: ClassTag,
) -> Result<PowerSeries, ClassMapError> {
    let w0 = w.coeff(0).norm();
    if w0 > 1e-14 {
        return Err(ClassMapError::SchwarzConstantTerm { modulus: w0 });
    }
    let n = w.order();
    let e = w.exp_series();
    let mut f = vec![Complex64::ZERO; n + 1];
    f[1] = Complex64::ONE;
    match class_tag {
        ClassTag::StarlikeE => {
            for k in 2..=n {
                let mut s = Complex64::ZERO;
                for m in 1..k {
                    s += f[m] * e.coeff(k - m);
                }
                f[k] = s / ((k - 1) as f64);
            }
        }
        ClassTag::ConvexE => {
            // b = coefficients of f′; b₀ = 1.
            let mut b = vec![Complex64::ZERO; n];
            b[0] = Complex64::ONE;
            for k in 1..n {
                let mut s = Complex64::ZERO;
                for m in 0..k {
                    s += b[m] * e.coeff(k - m);
                }
                b[k] = s / (k as f64);
            }
            for k in 1..n {
                f[k + 1] = b[k] / ((k + 1) as f64);
            }
        }
    }
    Ok(PowerSeries::new(f)?)
}

/// Coefficients `a₂..a_M` (`M` = `w`'s truncation order) solved from the
/// defining differential relation. Provenance is [`Provenance::Direct`];
/// samplers stamp the real one.
pub fn coeffs_via_ode(w: &PowerSeries, class_tag: ClassTag) -> Result<ClassMember, ClassMapError> {
    let f = f_series_from_schwarz(w, class_tag)?;
    Ok(ClassMember::new(
        class_tag,
        f.coeffs()[2..].to_vec(),
        Provenance::Direct,
    ))
}

/// The generator's positive-real-part function as a series of truncation
/// order `m`.
pub fn generator_p_series(generator: &Generator, m: usize) -> Result<PowerSeries, ClassMapError> {
    let poly = |coeffs: Vec<Complex64>| -> PowerSeries {
        let mut v = coeffs;
        v.resize(v.len().max(m + 1).max(2), Complex64::ZERO);
        PowerSeries::new(v).expect("finite generator coefficients")
    };
    let p = match generator {
        Generator::MonomialP { n } => {
            if *n == 0 {
                return Err(ClassMapError::InvalidGenerator(
                    "monomial power must be at least 1".into(),
                ));
            }
            let mut num = vec![Complex64::ZERO; (*n as usize) + 1];
            let mut den = num.clone();
            num[0] = Complex64::ONE;
            den[0] = Complex64::ONE;
            num[*n as usize] = Complex64::ONE;
            den[*n as usize] = -Complex64::ONE;
            poly(num).div(&poly(den))?
        }
        Generator::TwoParamP { t1, t2 } => {
            if !(-1e-12..=1.0 + 1e-12).contains(t1) {
                return Err(ClassMapError::InvalidGenerator(format!(
                    "t1 = {t1} outside [0, 1]"
                )));
            }
            if (t2.norm() - 1.0).abs() > 1e-9 {
                return Err(ClassMapError::InvalidGenerator(format!(
                    "t2 must be unimodular, got modulus {}",
                    t2.norm()
                )));
            }
            let t1c = Complex64::new(*t1, 0.0);
            let num = vec![Complex64::ONE, t1c * t2 + t1c, *t2];
            let den = vec![Complex64::ONE, t1c * t2 - t1c, -t2];
            poly(num).div(&poly(den))?
        }
    };
    Ok(p.truncated(m))
}

/// Builds the extremal member: expands the generator's `p`, converts to a
/// Schwarz function `w = (p − 1)/(p + 1)`, and solves the class relation.
/// Returns both the coefficient view (`a₂..a_m`, provenance stamped with
/// the id) and the full series of `f`.
pub fn extremal_member(
    spec: &ExtremalSpec,
    m: usize,
) -> Result<(ClassMember, PowerSeries), ClassMapError> {
    let p = generator_p_series(&spec.generator, m)?;
    let one = PowerSeries::constant(Complex64::ONE, m);
    let w = p.sub(&one).div(&p.add(&one))?;
    let f = f_series_from_schwarz(&w, spec.class_tag)?;
    let member = ClassMember::new(
        spec.class_tag,
        f.coeffs()[2..].to_vec(),
        Provenance::Extremal(spec.id.clone()),
    );
    Ok((member, f))
}

/// The per-class catalog of monomial-generated extremal members.
///
/// Starlike: `f1..f3` plus `f4_star`; convex: `f5..f7` plus `f4_convex`.
/// The witness generated by `p = (1 + z⁴)/(1 − z⁴)` is stored once per
/// class under disambiguated ids because the same name is attached to both
/// classes' fourth-coefficient witnesses in the source material while the
/// two members differ.
pub fn catalog(class_tag: ClassTag) -> Vec<ExtremalSpec> {
    let entry = |id: &str, n: u32| ExtremalSpec {
        id: id.to_string(),
        class_tag,
        generator: Generator::MonomialP { n },
    };
    match class_tag {
        ClassTag::StarlikeE => vec![
            entry("f1", 1),
            entry("f2", 2),
            entry("f3", 3),
            entry("f4_star", 4),
        ],
        ClassTag::ConvexE => vec![
            entry("f5", 1),
            entry("f6", 2),
            entry("f7", 3),
            entry("f4_convex", 4),
        ],
    }
}

/// The starlike member conjectured extremal for the n-th
/// logarithmic coefficient, `n ≥ 5`: generated by `p = (1 + zⁿ)/(1 − zⁿ)`.
pub fn conjecture_extremal(n: u32) -> ExtremalSpec {
    ExtremalSpec {
        id: format!("conjecture_n{n}"),
        class_tag: ClassTag::StarlikeE,
        generator: Generator::MonomialP { n },
    }
}

fn fmt_complex_pair(v: Complex64) -> String {
    format!("[{:.16e}, {:.16e}]", v.re, v.im)
}

/// The full two-class catalog as a JSON array of
/// `{id, class, p, a}` objects, coefficients `a₂..a_m` as `[re, im]`
/// pairs.
pub fn catalog_json(m: usize) -> Result<String, ClassMapError> {
    let mut rows = Vec::new();
    for class_tag in [ClassTag::StarlikeE, ClassTag::ConvexE] {
        for spec in catalog(class_tag) {
            let (member, _) = extremal_member(&spec, m)?;
            let p_desc = match spec.generator {
                Generator::MonomialP { n } => format!("(1+z^{n})/(1-z^{n})"),
                Generator::TwoParamP { t1, t2 } => {
                    format!("two-atom form with t1={t1}, t2={t2}")
                }
            };
            let coeffs: Vec<String> = member
                .coeffs_from_a2()
                .iter()
                .map(|&v| fmt_complex_pair(v))
                .collect();
            rows.push(format!(
                "  {{\"id\": \"{}\", \"class\": \"{}\", \"p\": \"{}\", \"a\": [{}]}}",
                spec.id,
                class_tag.as_str(),
                p_desc,
                coeffs.join(", ")
            ));
        }
    }
    Ok(format!("[\n{}\n]", rows.join(",\n")))
}
