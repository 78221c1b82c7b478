//! Closed-form sharp bounds and the proof-internal auxiliary functions,
//! each paired with an independent numerical oracle.
//!
//! Three families of results live here:
//!
//! 1. **Coefficient-lemma machinery** operating on positive-real-part
//!    coefficients: the disk maximum
//!    `Y(A,B,C) = max_{|z|≤1} (|A + Bz + Cz²| + 1 − |z|²)` in closed
//!    piecewise form ([`y_closed_form`]) with a grid-plus-refinement
//!    oracle ([`y_bruteforce`]); the piecewise bound for `|c₂ − v·c₁²|`
//!    ([`fs_caratheodory_bound`]); the premise checks under which
//!    `|c₃ − 2B·c₁c₂ + D·c₁³| ≤ 2` ([`lemma_c3_premises`]) and
//!    `|γ·c₁⁴ + λ·c₂² + 2α·c₁c₃ − (3/2)β·c₁²c₂ − c₄| ≤ 2`
//!    ([`lemma_c4_premise_value`]) hold.
//! 2. **The two-coefficient piecewise bounds** for
//!    `Φ(c₁, c₂) = |K·c₁² + L·c₂| − J·|c₁|` over the class
//!    ([`simthomas_upper`], [`simthomas_lower`]), parametrized by
//!    [`SimThomasArgs`] with the derived scale `M = |4K + 2L|`. The
//!    generalized Fekete–Szegő functional of both exponential classes
//!    reduces to `Φ` by an affine substitution ([`fs_args`]), which is how
//!    every Fekete–Szegő branch below is computed — the piecewise
//!    conditions are *derived* from this reduction rather than
//!    transcribed, so branch conditions, values, and witnesses stay
//!    mutually consistent (see the per-branch notes on [`theorem_bound`]).
//! 3. **Theorem constants and proof surfaces**: [`theorem_bound`] returns
//!    the claimed sharp bound (with branch label) for every verified
//!    statement; [`proof_surface`] and [`proof_univariate`] evaluate the
//!    two-variable and one-variable reductions appearing inside the
//!    determinant and Zalcman proofs, whose grid extrema the test suite
//!    pins against the claimed constants.
//!
//! Everything is pure double-precision arithmetic on O(1) quantities;
//! piecewise ties resolve to the first listed branch, and the tests assert
//! the competing branches agree at the ties.

use class_maps::ClassTag;
use num_complex::Complex64;
use thiserror::Error;

/// Errors from domain checks and bound lookups.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    /// An argument lies outside the domain on which the formula is stated.
    #[error("argument outside domain: {0}")]
    DomainError(String),
    /// No bound is known for the requested statement/class combination.
    #[error("no bound known for {0}")]
    UnknownTheorem(String),
    /// The linear-term weight in a two-coefficient bound must be ≥ 0.
    #[error("J must be nonnegative, got {j}")]
    NegativeJ { j: f64 },
}

// ---------------------------------------------------------------------------
// The disk maximum Y(A, B, C)
// ---------------------------------------------------------------------------

/// Real arguments of the disk maximum
/// `Y(A,B,C) = max_{|z|≤1} (|A + Bz + Cz²| + 1 − |z|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Which case of the piecewise closed form of `Y` fired.
///
/// The split is by the sign of `A·C`; the opposite-sign side has two
/// direct cases plus a residual `R(A,B,C)` with three sub-cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YBranch {
    /// `AC ≥ 0`, `|B| ≥ 2(1−|C|)`: maximum on the circle, `|A|+|B|+|C|`.
    SameSignCircle,
    /// `AC ≥ 0`, `|B| < 2(1−|C|)`: interior max `1+|A|+B²/(4(1−|C|))`.
    SameSignInterior,
    /// `AC < 0`, interior case `1−|A|+B²/(4(1−|C|))`.
    OppositeInterior,
    /// `AC < 0`, small-`B` case `1+|A|+B²/(4(1+|C|))`.
    OppositeSmallB,
    /// Residual case, first sub-branch `|A|+|B|−|C|`.
    ResidualCircleFar,
    /// Residual case, second sub-branch `−|A|+|B|+|C|`.
    ResidualCircleNear,
    /// Residual case, radical sub-branch `(|C|+|A|)√(1−B²/(4AC))`.
    ResidualRadical,
}

impl YBranch {
    /// Stable label for reports and branch-coverage assertions.
    pub fn as_str(&self) -> &'static str {
        match self {
            YBranch::SameSignCircle => "same_sign_circle",
            YBranch::SameSignInterior => "same_sign_interior",
            YBranch::OppositeInterior => "opposite_interior",
            YBranch::OppositeSmallB => "opposite_small_b",
            YBranch::ResidualCircleFar => "residual_circle_far",
            YBranch::ResidualCircleNear => "residual_circle_near",
            YBranch::ResidualRadical => "residual_radical",
        }
    }
}

/// Closed form of `Y(A,B,C)` together with the branch that fired.
///
/// Branch structure (ties go to the first listed case; the values agree at
/// every tie, which the tests assert):
///
/// ```text
/// AC ≥ 0:  |A|+|B|+|C|                       if |B| ≥ 2(1−|C|)
///          1+|A|+B²/(4(1−|C|))               otherwise
/// AC < 0:  1−|A|+B²/(4(1−|C|))               if −4AC(C⁻²−1) ≤ B² and |B| < 2(1−|C|)
///          1+|A|+B²/(4(1+|C|))               if B² < min{4(1+|C|)², −4AC(C⁻²−1)}
///          R(A,B,C)                          otherwise, where
///            R = |A|+|B|−|C|                 if |C|(|B|+4|A|) ≤ |AB|
///                −|A|+|B|+|C|                if |AB| ≤ |C|(|B|−4|A|)
///                (|C|+|A|)√(1−B²/(4AC))      otherwise
/// ```
///
/// Every denominator is guarded by its branch condition: `|C| = 1` forces
/// the circle case on the same-sign side, `AC < 0` implies `C ≠ 0`, and
/// the radical's argument is ≥ 1 because `AC < 0`.
pub fn y_closed_form_with_branch(args: &YArgs) -> (f64, YBranch) {
    let (a, b, c) = (args.a, args.b, args.c);
    let (abs_a, abs_b, abs_c) = (a.abs(), b.abs(), c.abs());
    if a * c >= 0.0 {
        if abs_b >= 2.0 * (1.0 - abs_c) {
            (abs_a + abs_b + abs_c, YBranch::SameSignCircle)
        } else {
            (
                1.0 + abs_a + b * b / (4.0 * (1.0 - abs_c)),
                YBranch::SameSignInterior,
            )
        }
    } else {
        // −4AC(C⁻² − 1) > 0 here since AC < 0 and |C| ≤ 1 in all uses;
        // for |C| > 1 it flips sign, which only widens the residual case.
        let threshold = -4.0 * a * c * (1.0 / (c * c) - 1.0);
        if threshold <= b * b && abs_b < 2.0 * (1.0 - abs_c) {
            (
                1.0 - abs_a + b * b / (4.0 * (1.0 - abs_c)),
                YBranch::OppositeInterior,
            )
        } else if b * b < (4.0 * (1.0 + abs_c).powi(2)).min(threshold) {
            (
                1.0 + abs_a + b * b / (4.0 * (1.0 + abs_c)),
                YBranch::OppositeSmallB,
            )
        } else if abs_c * (abs_b + 4.0 * abs_a) <= (a * b).abs() {
            (abs_a + abs_b - abs_c, YBranch::ResidualCircleFar)
        } else if (a * b).abs() <= abs_c * (abs_b - 4.0 * abs_a) {
            (-abs_a + abs_b + abs_c, YBranch::ResidualCircleNear)
        } else {
            (
                (abs_c + abs_a) * (1.0 - b * b / (4.0 * a * c)).sqrt(),
                YBranch::ResidualRadical,
            )
        }
    }
}

/// Closed form of `Y(A,B,C)` (value only).
pub fn y_closed_form(args: &YArgs) -> f64 {
    y_closed_form_with_branch(args).0
}

/// The objective `|A + Bz + Cz²| + 1 − |z|²` at one point.
pub fn y_objective(args: &YArgs, z: Complex64) -> f64 {
    let poly = Complex64::new(args.a, 0.0) + Complex64::new(args.b, 0.0) * z
        + Complex64::new(args.c, 0.0) * z * z;
    poly.norm() + 1.0 - z.norm_sqr()
}

/// Exact maximum of the objective over the circle of radius `r`: with
/// real coefficients, `|A + Bz + Cz²|²` on `|z| = r` is a quadratic in
/// `u = cos θ`,
///
/// ```text
/// q(u) = (A² + B²r² + C²r⁴ − 2ACr²) + 2r(AB + BCr²)·u + 4ACr²·u²,
/// ```
///
/// so the angular maximization reduces to comparing `u = ±1` with the
/// vertex when it falls inside `[−1, 1]`.
fn y_circle_max(args: &YArgs, r: f64) -> f64 {
    let (a, b, c) = (args.a, args.b, args.c);
    let r2 = r * r;
    let alpha = a * a + b * b * r2 + c * c * r2 * r2 - 2.0 * a * c * r2;
    let beta = 2.0 * r * (a * b + b * c * r2);
    let gamma = 4.0 * a * c * r2;
    let q = |u: f64| alpha + beta * u + gamma * u * u;
    let mut best = q(1.0).max(q(-1.0));
    if gamma != 0.0 {
        let vertex = -beta / (2.0 * gamma);
        if vertex.abs() <= 1.0 {
            best = best.max(q(vertex));
        }
    }
    // q is a squared modulus; clip the tiny negative values floating-point
    // cancellation can produce before the square root.
    best.max(0.0).sqrt() + 1.0 - r2
}

/// Brute-force oracle for [`y_closed_form`]: maximum of the objective over
/// a polar grid on the closed disk, with the angular direction maximized
/// exactly per radius (see [`y_circle_max`]) and the resulting radial
/// profile refined locally around every local maximum.
///
/// A pure `(r, θ)` cell scan with refinement around the best cells is not
/// trustworthy here: the objective can pair a nearly flat ridge with a
/// narrow basin whose true peak is higher even though the ridge out-scores
/// it on every coarse cell, and at some grid sizes no cell inside the
/// narrow basin is even a grid-local maximum. Solving the angular
/// quadratic exactly removes that failure mode — what remains is a
/// one-variable profile whose basins span several grid steps at
/// `grid ≥ 100`, so seeding a shrinking-window search from every radial
/// local maximum (plus the endpoints) pins the global maximum to ~1e-10,
/// far below the 1e-6 agreement the tests demand.
///
/// # Panics
/// If `grid < 100` — coarser grids cannot be trusted to resolve basins.
pub fn y_bruteforce(args: &YArgs, grid: usize) -> f64 {
    assert!(grid >= 100, "oracle grid must be at least 100, got {grid}");
    let profile: Vec<f64> = (0..=grid)
        .map(|i| y_circle_max(args, i as f64 / grid as f64))
        .collect();

    // Seed a local search at every radial local maximum (one-sided at the
    // origin and the disk edge).
    let mut seeds: Vec<usize> = Vec::new();
    for (i, &v) in profile.iter().enumerate() {
        let left_ok = i == 0 || v >= profile[i - 1];
        let right_ok = i == grid || v >= profile[i + 1];
        if left_ok && right_ok {
            seeds.push(i);
        }
    }

    let mut max = f64::NEG_INFINITY;
    for &i in &seeds {
        let mut r0 = i as f64 / grid as f64;
        let mut width = 1.5 / grid as f64;
        for _ in 0..22 {
            let (mut local, mut best_r) = (f64::NEG_INFINITY, r0);
            for k in 0..=12 {
                let r = (r0 - width + 2.0 * width * k as f64 / 12.0).clamp(0.0, 1.0);
                let v = y_circle_max(args, r);
                if v > local {
                    (local, best_r) = (v, r);
                }
            }
            r0 = best_r;
            max = max.max(local);
            width /= 3.0;
        }
    }
    max
}

// ---------------------------------------------------------------------------
// The c₂, c₃, c₄ lemma family
// ---------------------------------------------------------------------------

/// Sharp bound for `|c₂ − v·c₁²|` over the positive-real-part class:
///
/// ```text
/// −4v + 2   for v < 0
/// 2         for 0 ≤ v ≤ 1
/// 4v − 2    for v > 1
/// ```
///
/// Extremal members: the half-plane map `(1+z)/(1−z)` outside `[0,1]`, the
/// two-atom map `(1+z²)/(1−z²)` inside.
pub fn fs_caratheodory_bound(v: f64) -> f64 {
    if v < 0.0 {
        -4.0 * v + 2.0
    } else if v <= 1.0 {
        2.0
    } else {
        4.0 * v - 2.0
    }
}

/// Premise of the cubic-coefficient lemma: true iff `0 ≤ B ≤ 1` and
/// `B(2B − 1) ≤ D ≤ B`, in which case `|c₃ − 2B·c₁c₂ + D·c₁³| ≤ 2` holds
/// over the class.
pub fn lemma_c3_premises(b: f64, d: f64) -> bool {
    (0.0..=1.0).contains(&b) && b * (2.0 * b - 1.0) <= d && d <= b
}

/// Premise margin of the quartic-coefficient lemma: returns `LHS − RHS` of
///
/// ```text
/// 8λ(1−λ)[(αβ − 2γ)² + (α(λ+α) − β)²] + α(1−α)(β − 2λα)²
///     ≤ 4α²(1−α)²·λ(1−λ)
/// ```
///
/// so the premise holds iff the result is ≤ 0, in which case
/// `|γ·c₁⁴ + λ·c₂² + 2α·c₁c₃ − (3/2)β·c₁²c₂ − c₄| ≤ 2` over the class.
/// Stated for `0 < α < 1`, `0 < λ < 1` only.
pub fn lemma_c4_premise_value(
    alpha: f64,
    beta: f64,
    gamma: f64,
    lambda: f64,
) -> Result<f64, BoundsError> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(BoundsError::DomainError(format!(
            "alpha must lie in (0,1), got {alpha}"
        )));
    }
    if !(0.0 < lambda && lambda < 1.0) {
        return Err(BoundsError::DomainError(format!(
            "lambda must lie in (0,1), got {lambda}"
        )));
    }
    let lhs = 8.0 * lambda * (1.0 - lambda)
        * ((alpha * beta - 2.0 * gamma).powi(2) + (alpha * (lambda + alpha) - beta).powi(2))
        + alpha * (1.0 - alpha) * (beta - 2.0 * lambda * alpha).powi(2);
    let rhs = 4.0 * alpha.powi(2) * (1.0 - alpha).powi(2) * lambda * (1.0 - lambda);
    Ok(lhs - rhs)
}

/// The `(α, β, γ, λ)` weights under which the quartic-coefficient lemma
/// would bound each class's fourth logarithmic coefficient; obtained by
/// matching `16·γ₄` (starlike) resp. `80·γ₄` (convex) — written in
/// positive-real-part coefficients — against the lemma's quartic pattern.
///
/// The starlike weights satisfy the premise (margin `−45/2048`); the
/// convex weights do **not** (margin ≈ `+9.3e-5`), which is exactly the
/// gap the verification reports surface around the conflicting printed
/// fourth-coefficient claim.
pub fn gamma4_premise_constants(class_tag: ClassTag) -> (f64, f64, f64, f64) {
    match class_tag {
        ClassTag::StarlikeE => (0.25, 1.0 / 12.0, -1.0 / 192.0, 0.25),
        ClassTag::ConvexE => (0.125, -7.0 / 216.0, -23.0 / 1152.0, 5.0 / 36.0),
    }
}

// ---------------------------------------------------------------------------
// Piecewise bounds for Φ(c₁, c₂) = |K c₁² + L c₂| − J |c₁|
// ---------------------------------------------------------------------------

/// Parameters of the two-coefficient expression
/// `Φ(c₁, c₂) = |K·c₁² + L·c₂| − J·|c₁|` with `J ≥ 0`, `K` complex, `L`
/// real. The derived scale `M = |4K + 2L|` is always recomputed from
/// `(K, L)` — never stored — so it cannot go stale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimThomasArgs {
    j: f64,
    k: Complex64,
    l: f64,
}

impl SimThomasArgs {
    /// Validates `J ≥ 0`.
    pub fn new(j: f64, k: Complex64, l: f64) -> Result<Self, BoundsError> {
        if j < 0.0 {
            return Err(BoundsError::NegativeJ { j });
        }
        Ok(Self { j, k, l })
    }

    pub fn j(&self) -> f64 {
        self.j
    }

    pub fn k(&self) -> Complex64 {
        self.k
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// The derived scale `M = |4K + 2L|`.
    pub fn m(&self) -> f64 {
        (4.0 * self.k + Complex64::new(2.0 * self.l, 0.0)).norm()
    }

    /// `Φ(c₁, c₂)` itself — the expression the piecewise bounds dominate.
    pub fn phi(&self, c1: Complex64, c2: Complex64) -> f64 {
        (self.k * c1 * c1 + Complex64::new(self.l, 0.0) * c2).norm() - self.j * c1.norm()
    }
}

/// Branch labels shared by the piecewise Φ bounds and the Fekete–Szegő
/// bounds derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiBranch {
    /// Upper bound `M − 2J` (fires when `|2K + L| ≥ |L| + J`).
    UpperDifference,
    /// Upper bound `2|L|` (otherwise).
    UpperFlat,
    /// Lower-side value `2J − M` (fires when `J ≥ M + 2|L|`).
    LowerLinear,
    /// Lower-side value `2J·√(2|L|/(M + 2|L|))` (fires when
    /// `J² ≤ 2|L|(M + 2|L|)`).
    LowerRadical,
    /// Lower-side value `2|L| + J²/(M + 2|L|)` (otherwise).
    LowerRational,
}

impl PhiBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            PhiBranch::UpperDifference => "upper_difference",
            PhiBranch::UpperFlat => "upper_flat",
            PhiBranch::LowerLinear => "lower_linear",
            PhiBranch::LowerRadical => "lower_radical",
            PhiBranch::LowerRational => "lower_rational",
        }
    }
}

/// Sharp upper bound for `Φ` over the class, with branch:
///
/// ```text
/// M − 2J    if |2K + L| ≥ |L| + J
/// 2|L|      otherwise
/// ```
pub fn simthomas_upper_with_branch(s: &SimThomasArgs) -> (f64, PhiBranch) {
    let two_k_plus_l = (2.0 * s.k + Complex64::new(s.l, 0.0)).norm();
    if two_k_plus_l >= s.l.abs() + s.j {
        (s.m() - 2.0 * s.j, PhiBranch::UpperDifference)
    } else {
        (2.0 * s.l.abs(), PhiBranch::UpperFlat)
    }
}

/// Sharp upper bound for `Φ` (value only).
pub fn simthomas_upper(s: &SimThomasArgs) -> f64 {
    simthomas_upper_with_branch(s).0
}

/// Sharp bound for the negative side: `−Φ ≤` the returned value, with
/// branch:
///
/// ```text
/// 2J − M                     if J ≥ M + 2|L|
/// 2J·√(2|L|/(M + 2|L|))      if J² ≤ 2|L|(M + 2|L|)
/// 2|L| + J²/(M + 2|L|)       otherwise
/// ```
///
/// The radical's coefficient pattern is fixed by requiring the bound to
/// reproduce the Fekete–Szegő middle branches it specializes to. When
/// `M + 2|L| = 0` the first condition `J ≥ 0` necessarily fires, so the
/// later divisions are always guarded.
pub fn simthomas_lower_with_branch(s: &SimThomasArgs) -> (f64, PhiBranch) {
    let m = s.m();
    let two_l = 2.0 * s.l.abs();
    if s.j >= m + two_l {
        (2.0 * s.j - m, PhiBranch::LowerLinear)
    } else if s.j * s.j <= two_l * (m + two_l) {
        (2.0 * s.j * (two_l / (m + two_l)).sqrt(), PhiBranch::LowerRadical)
    } else {
        (two_l + s.j * s.j / (m + two_l), PhiBranch::LowerRational)
    }
}

/// Sharp bound for `−Φ` (value only).
pub fn simthomas_lower(s: &SimThomasArgs) -> f64 {
    simthomas_lower_with_branch(s).0
}

/// Reduction of the generalized Fekete–Szegő functional to `Φ`: returns
/// the `(J, K, L)` arguments and the overall scale `s` with
/// `F_{λ,μ} = Φ(c₁, c₂)/s` on the given class.
///
/// Starlike: `a₃ − λa₂² = ((1−4λ)c₁² + 4c₂)/16`, so `K = 1−4λ`, `L = 4`,
/// `J = 8μ`, `s = 16`. Convex: `a₃ − λa₂² = ((1−3λ)c₁² + 4c₂)/48`, so
/// `K = 1−3λ`, `L = 4`, `J = 12μ`, `s = 48`.
pub fn fs_args(
    class_tag: ClassTag,
    lambda: Complex64,
    mu: f64,
) -> Result<(SimThomasArgs, f64), BoundsError> {
    if mu <= 0.0 {
        return Err(BoundsError::DomainError(format!(
            "mu must be positive, got {mu}"
        )));
    }
    let one = Complex64::ONE;
    match class_tag {
        ClassTag::StarlikeE => Ok((SimThomasArgs::new(8.0 * mu, one - 4.0 * lambda, 4.0)?, 16.0)),
        ClassTag::ConvexE => Ok((SimThomasArgs::new(12.0 * mu, one - 3.0 * lambda, 4.0)?, 48.0)),
    }
}

/// The two-atom generator parameters realizing equality in the
/// Fekete–Szegő lower branches.
///
/// `t1_radical` saturates the radical branch, `t1_rational` the rational
/// branch; `t2` is shared. At `M = 0` (where the generic `t₂` direction is
/// undefined) the fallback `t₂ = −1` together with `t₁ = 1` degenerates
/// the two-atom generator to the half-plane map, which is the correct
/// witness there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FsWitnessParams {
    pub t1_radical: f64,
    pub t1_rational: f64,
    pub t2: Complex64,
}

/// Witness parameters for the Fekete–Szegő lower branches (see
/// [`FsWitnessParams`]): `t₁ = √(2|L|/(M+2|L|))` resp. `J/(M+2|L|)`, and
/// `t₂ = −sign(L)·(4K+2L)/|4K+2L|`.
pub fn fs_witness_params(
    class_tag: ClassTag,
    lambda: Complex64,
    mu: f64,
) -> Result<FsWitnessParams, BoundsError> {
    let (args, _) = fs_args(class_tag, lambda, mu)?;
    let m = args.m();
    let two_l = 2.0 * args.l().abs();
    let denom = m + two_l;
    let (t1_radical, t1_rational) = if denom > 0.0 {
        ((two_l / denom).sqrt(), (args.j() / denom).min(1.0))
    } else {
        (1.0, 1.0)
    };
    let direction = 4.0 * args.k() + Complex64::new(2.0 * args.l(), 0.0);
    let t2 = if direction.norm() > 1e-12 {
        -args.l().signum() * direction / direction.norm()
    } else {
        Complex64::new(-1.0, 0.0)
    };
    Ok(FsWitnessParams {
        t1_radical,
        t1_rational,
        t2,
    })
}

// ---------------------------------------------------------------------------
// Theorem constants
// ---------------------------------------------------------------------------

/// A claimed bound: one- or two-sided value plus the branch that produced
/// it.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseBound {
    /// Which statement the bound belongs to (stable snake_case name).
    pub name: String,
    /// Label of the piecewise branch that fired (`"stated"` for
    /// single-piece bounds).
    pub branch_taken: String,
    /// Claimed lower bound, if the statement has one.
    pub lower: Option<f64>,
    /// Claimed upper bound, if the statement has one.
    pub upper: Option<f64>,
}

/// The statements whose bounds the verification pipeline checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Theorem {
    /// `|γₙ| ≤ 1/(2n)` (starlike, n = 1..4) or `1/(2n(n+1))` (convex,
    /// n = 1..3; the printed n = 4 claim is 1/8).
    Gamma { n: u32 },
    /// The conjectured `|γₙ| ≤ 1/(2n)` for starlike members, n ≥ 5.
    ConjectureGamma { n: u32 },
    /// Two-sided bound on `T₂,₁ = γ₁² − |γ₂|²`.
    T21,
    /// Upper bound on `|a₂a₃ − a₄|`.
    Zalcman,
    /// Upper piecewise bound on `F_{λ,μ}`.
    FeketeSzegoUpper { lambda: Complex64, mu: f64 },
    /// Lower piecewise bound on `F_{λ,μ}`.
    FeketeSzegoLower { lambda: Complex64, mu: f64 },
}

/// The claimed (sharp) bound for a statement on a class, with branch
/// label.
///
/// Single-piece bounds are returned as printed. The Fekete–Szegő branches
/// are *derived* — condition, value, and branch label all come from the
/// `Φ` reduction via [`fs_args`] — because the printed branch conditions
/// contain several transcription slips (upper convex threshold, both
/// starlike lower thresholds, the starlike rational-branch value) that
/// would otherwise contradict the printed witnesses; the derived form is
/// the unique one consistent with those witnesses.
pub fn theorem_bound(theorem: &Theorem, class_tag: ClassTag) -> Result<PiecewiseBound, BoundsError> {
    let named = |name: &str, branch: &str, lower: Option<f64>, upper: Option<f64>| PiecewiseBound {
        name: name.to_string(),
        branch_taken: branch.to_string(),
        lower,
        upper,
    };
    match *theorem {
        Theorem::Gamma { n } => {
            let value = match (class_tag, n) {
                (ClassTag::StarlikeE, 1..=4) => 1.0 / (2.0 * n as f64),
                (ClassTag::ConvexE, 1..=3) => 1.0 / (2.0 * n as f64 * (n as f64 + 1.0)),
                // The printed fourth-coefficient claim for the convex
                // class; its own witness evaluates to 1/40, which the
                // verification layer surfaces as a discrepancy.
                (ClassTag::ConvexE, 4) => 0.125,
                _ => {
                    return Err(BoundsError::UnknownTheorem(format!(
                        "log-coefficient bound, index {n}, class {}",
                        class_tag.as_str()
                    )))
                }
            };
            Ok(named("log_coefficient", "stated", None, Some(value)))
        }
        Theorem::ConjectureGamma { n } => {
            if class_tag != ClassTag::StarlikeE || n < 5 {
                return Err(BoundsError::UnknownTheorem(format!(
                    "conjectured log-coefficient bound, index {n}, class {}",
                    class_tag.as_str()
                )));
            }
            Ok(named(
                "log_coefficient_conjecture",
                "conjectured",
                None,
                Some(1.0 / (2.0 * n as f64)),
            ))
        }
        Theorem::T21 => {
            let (lower, upper) = match class_tag {
                ClassTag::StarlikeE => (-1.0 / 16.0, 15.0 / 64.0),
                ClassTag::ConvexE => (-1.0 / 144.0, 15.0 / 256.0),
            };
            Ok(named("toeplitz_t21", "stated", Some(lower), Some(upper)))
        }
        Theorem::Zalcman => {
            let value = match class_tag {
                ClassTag::StarlikeE => 8.0 / (9.0 * 7.0_f64.sqrt()),
                ClassTag::ConvexE => 1.0 / 12.0,
            };
            Ok(named("zalcman_23", "stated", None, Some(value)))
        }
        Theorem::FeketeSzegoUpper { lambda, mu } => {
            let (args, scale) = fs_args(class_tag, lambda, mu)?;
            let (value, branch) = simthomas_upper_with_branch(&args);
            Ok(named(
                "fekete_szego_upper",
                branch.as_str(),
                None,
                Some(value / scale),
            ))
        }
        Theorem::FeketeSzegoLower { lambda, mu } => {
            let (args, scale) = fs_args(class_tag, lambda, mu)?;
            let (value, branch) = simthomas_lower_with_branch(&args);
            Ok(named(
                "fekete_szego_lower",
                branch.as_str(),
                Some(-value / scale),
                None,
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// Proof-internal surfaces and univariate reductions
// ---------------------------------------------------------------------------

/// The four quadratic-in-`y` surfaces from the determinant-bound proofs,
/// on `(x, y) ∈ [0,4] × [0,1]` (`x = |c₁|²-like variable, `y` a normalized
/// real part).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceName {
    /// `−x² + 64x + 4x(4−x)y − 4(4−x)²y²` (starlike, maximum side).
    F,
    /// `−x² + 64x − 4x(4−x)y − 4(4−x)²y²` (starlike, minimum side).
    G,
    /// `−9x² + 576x + 24x(4−x)y − 16(4−x)²y²` (convex, maximum side).
    Phi,
    /// `−9x² + 576x − 24x(4−x)y − 16(4−x)²y²` (convex, minimum side).
    Psi,
}

/// Evaluates a proof surface; errors outside `[0,4] × [0,1]`.
pub fn proof_surface(name: SurfaceName, x: f64, y: f64) -> Result<f64, BoundsError> {
    if !(0.0..=4.0).contains(&x) || !(0.0..=1.0).contains(&y) {
        return Err(BoundsError::DomainError(format!(
            "surface arguments ({x}, {y}) outside [0,4]x[0,1]"
        )));
    }
    let gap = 4.0 - x;
    Ok(match name {
        SurfaceName::F => -x * x + 64.0 * x + 4.0 * x * gap * y - 4.0 * gap * gap * y * y,
        SurfaceName::G => -x * x + 64.0 * x - 4.0 * x * gap * y - 4.0 * gap * gap * y * y,
        SurfaceName::Phi => {
            -9.0 * x * x + 576.0 * x + 24.0 * x * gap * y - 16.0 * gap * gap * y * y
        }
        SurfaceName::Psi => {
            -9.0 * x * x + 576.0 * x - 24.0 * x * gap * y - 16.0 * gap * gap * y * y
        }
    })
}

/// The univariate reductions appearing in the Zalcman-bound proofs, each
/// with its stated domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnivariateName {
    /// `12t − 7t³` on `[2/3, 1)`.
    Psi1,
    /// `12 − 9t² + 13t³` on `(0, 2/3)`.
    Psi2,
    /// `30t − 29t³` on `[4/7, 1)`.
    Psi3,
    /// `192 − 84t² + 124t³` on `(0, 4/7)`.
    Psi4,
}

/// Evaluates a univariate proof function on its stated domain.
pub fn proof_univariate(name: UnivariateName, t: f64) -> Result<f64, BoundsError> {
    let (lo, hi, closed_lo) = match name {
        UnivariateName::Psi1 => (2.0 / 3.0, 1.0, true),
        UnivariateName::Psi2 => (0.0, 2.0 / 3.0, false),
        UnivariateName::Psi3 => (4.0 / 7.0, 1.0, true),
        UnivariateName::Psi4 => (0.0, 4.0 / 7.0, false),
    };
    let inside = if closed_lo {
        t >= lo && t < hi
    } else {
        t > lo && t < hi
    };
    if !inside {
        return Err(BoundsError::DomainError(format!(
            "argument {t} outside {}{lo}, {hi})",
            if closed_lo { "[" } else { "(" }
        )));
    }
    Ok(match name {
        UnivariateName::Psi1 => 12.0 * t - 7.0 * t.powi(3),
        UnivariateName::Psi2 => 12.0 - 9.0 * t * t + 13.0 * t.powi(3),
        UnivariateName::Psi3 => 30.0 * t - 29.0 * t.powi(3),
        UnivariateName::Psi4 => 192.0 - 84.0 * t * t + 124.0 * t.powi(3),
    })
}
