//! Deterministic sample-pool construction.
//!
//! A pool has three layers, in a fixed order:
//!
//! 1. the extremal catalog of the class (always present, not counted
//!    against the draw budget — the sharp members must be in every pool,
//!    however small),
//! 2. a deterministic τ-parameter grid pushed through the Möbius-ladder
//!    completion, so the exact coefficient body `(c₁, c₂, c₃)` is covered
//!    systematically and `c₄` rides on a unimodular fourth contraction,
//! 3. `sample_count` random Blaschke-product Schwarz draws.
//!
//! Draw `i` reads its own counter-mode RNG stream derived from the root
//! seed, so the stream is a *prefix extension*: growing `sample_count`
//! appends draws without disturbing earlier ones, and disjoint index
//! ranges can be generated on different threads with no coordination.

use std::f64::consts::TAU;

use caratheodory::{schur_schwarz_series, schwarz_series, SchwarzSpec, TauParams};
use class_maps::{
    catalog, coeffs_via_ode, extremal_member, ClassMember, ClassTag, ExtremalSpec, Generator,
    Provenance,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{RunConfig, VerifyError, SERIES_ORDER};

/// Zeros are drawn inside radius `1 − 1e-6`: strictly interior (the
/// series builder rejects boundary zeros) while still reaching far enough
/// out that boundary-dominated behavior shows up in the samples.
const ZERO_RADIUS_CAP: f64 = 1.0 - 1e-6;

/// The i-th random Schwarz draw for a root seed: an independent RNG
/// stream per index, degree cycling through `0..=max_degree`, rotation
/// phase uniform on the circle, zeros area-uniform in the capped disk.
pub fn draw_schwarz_spec(seed: u64, index: usize, max_degree: u32) -> SchwarzSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let degree = index % (max_degree as usize + 1);
    let phase = rng.gen::<f64>() * TAU;
    let zeros = (0..degree)
        .map(|_| {
            // √u makes the radius draw area-uniform rather than clustering
            // at the center.
            let r = ZERO_RADIUS_CAP * rng.gen::<f64>().sqrt();
            let theta = rng.gen::<f64>() * TAU;
            Complex64::from_polar(r, theta)
        })
        .collect();
    SchwarzSpec { phase, zeros }
}

/// Builds the class member driven by a Blaschke-product Schwarz function,
/// provenance stamped with the spec so the sample can be replayed.
pub fn member_from_schwarz(
    class_tag: ClassTag,
    spec: &SchwarzSpec,
) -> Result<ClassMember, VerifyError> {
    let w = schwarz_series(spec, SERIES_ORDER)?;
    let member = coeffs_via_ode(&w, class_tag)?;
    Ok(member.with_provenance(Provenance::FromSchwarz(spec.clone())))
}

/// Builds the class member for a τ-grid point: the Möbius ladder turns
/// `(τ₁, τ₂, τ₃, τ₄)` into a Schwarz function whose first four
/// coefficients realize the corresponding point of the coefficient body.
pub fn member_from_tau(
    class_tag: ClassTag,
    params: &TauParams,
    tail: Complex64,
) -> Result<ClassMember, VerifyError> {
    let w = schur_schwarz_series(params, tail, SERIES_ORDER)?;
    let member = coeffs_via_ode(&w, class_tag)?;
    Ok(member.with_provenance(Provenance::FromTau {
        params: *params,
        tail: Some(tail),
    }))
}

/// The deterministic τ grid at angular density `d`:
/// `τ₁` sweeps `[0, 1]` linearly (rotation puts the first coefficient on
/// the nonnegative axis, so only the radius matters there), `τ₂` takes the
/// origin plus two circles of radius ½ and 1, `τ₃` the origin plus the
/// unit circle, and the tail `τ₄` the unit circle — boundary tails land on
/// fourth-coefficient extreme points.
fn tau_grid(density: usize) -> Result<Vec<(TauParams, Complex64)>, VerifyError> {
    let d = density;
    let circle = |k: usize| Complex64::from_polar(1.0, TAU * k as f64 / d as f64);
    let t1s: Vec<f64> = (0..d).map(|j| j as f64 / (d - 1) as f64).collect();
    let mut t2s = vec![Complex64::new(0.0, 0.0)];
    for k in 0..d {
        t2s.push(0.5 * circle(k));
        t2s.push(circle(k));
    }
    let mut t3s = vec![Complex64::new(0.0, 0.0)];
    t3s.extend((0..d).map(circle));
    let t4s: Vec<Complex64> = (0..d).map(circle).collect();

    let mut grid = Vec::with_capacity(t1s.len() * t2s.len() * t3s.len() * t4s.len());
    for &t1 in &t1s {
        for &t2 in &t2s {
            for &t3 in &t3s {
                let params = TauParams::new(t1, t2, t3)?;
                for &t4 in &t4s {
                    grid.push((params, t4));
                }
            }
        }
    }
    Ok(grid)
}

/// The full sample pool for a run: catalog, τ grid, then the random
/// draws, in that order. Random draws are generated in parallel over
/// disjoint index ranges and concatenated in index order, so the result
/// is identical to the sequential construction.
pub fn sample_members(cfg: &RunConfig) -> Result<Vec<ClassMember>, VerifyError> {
    cfg.validate()?;
    let mut pool = Vec::with_capacity(cfg.sample_count + 4096);

    for spec in catalog(cfg.class_tag) {
        let (member, _) = extremal_member(&spec, SERIES_ORDER)?;
        pool.push(member);
    }

    for (params, tail) in tau_grid(cfg.tau_grid_density)? {
        pool.push(member_from_tau(cfg.class_tag, &params, tail)?);
    }

    pool.extend(draw_members(cfg)?);
    Ok(pool)
}

/// The random-draw layer alone, index order 0..sample_count.
fn draw_members(cfg: &RunConfig) -> Result<Vec<ClassMember>, VerifyError> {
    let n = cfg.sample_count;
    let workers = std::thread::available_parallelism()
        .map(usize::from)
        .unwrap_or(1)
        .min(8);
    if n < 1024 || workers < 2 {
        return (0..n)
            .map(|i| {
                member_from_schwarz(
                    cfg.class_tag,
                    &draw_schwarz_spec(cfg.seed, i, cfg.schwarz_degree),
                )
            })
            .collect();
    }

    let chunk = n.div_ceil(workers);
    let mut out: Vec<Result<Vec<ClassMember>, VerifyError>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(n);
                scope.spawn(move || {
                    (lo..hi)
                        .map(|i| {
                            member_from_schwarz(
                                cfg.class_tag,
                                &draw_schwarz_spec(cfg.seed, i, cfg.schwarz_degree),
                            )
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        for handle in handles {
            out.push(handle.join().expect("sampler worker panicked"));
        }
    });

    let mut members = Vec::with_capacity(n);
    for part in out {
        members.extend(part?);
    }
    Ok(members)
}

/// The two-parameter members saturating the Fekete–Szegő lower branches
/// at a given (λ, μ): one for the radical branch, one for the rational
/// branch. Ids continue the catalog numbering (`f7`/`f8` starlike,
/// `f9`/`f10` convex, `_fs`-suffixed to keep them distinct from the
/// monomial catalog ids).
pub fn fs_witness_members(
    class_tag: ClassTag,
    lambda: Complex64,
    mu: f64,
) -> Result<Vec<ClassMember>, VerifyError> {
    let params = bounds::fs_witness_params(class_tag, lambda, mu)?;
    let (radical_id, rational_id) = match class_tag {
        ClassTag::StarlikeE => ("f7_fs", "f8_fs"),
        ClassTag::ConvexE => ("f9_fs", "f10_fs"),
    };
    let mut members = Vec::with_capacity(2);
    for (id, t1) in [
        (radical_id, params.t1_radical),
        (rational_id, params.t1_rational),
    ] {
        let spec = ExtremalSpec {
            id: id.to_string(),
            class_tag,
            generator: Generator::TwoParamP { t1, t2: params.t2 },
        };
        let (member, _) = extremal_member(&spec, SERIES_ORDER)?;
        members.push(member);
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::FunctionalSelector;

    #[test]
    fn draws_replay_and_cycle_degrees() {
        let a = draw_schwarz_spec(7, 12, 4);
        let b = draw_schwarz_spec(7, 12, 4);
        assert_eq!(a, b);
        assert_eq!(a.zeros.len(), 12 % 5);
        // A different index gives a different draw.
        assert_ne!(a, draw_schwarz_spec(7, 13, 4));
    }

    #[test]
    fn pool_layers_and_prefix_extension() {
        let mut cfg = RunConfig::baseline(ClassTag::StarlikeE, FunctionalSelector::All);
        cfg.sample_count = 6;
        cfg.tau_grid_density = 2;
        let small = sample_members(&cfg).unwrap();
        // 4 catalog + 2·5·3·2 grid + 6 draws.
        assert_eq!(small.len(), 4 + 60 + 6);
        assert!(matches!(small[0].provenance(), Provenance::Extremal(_)));

        cfg.sample_count = 9;
        let grown = sample_members(&cfg).unwrap();
        assert_eq!(grown.len(), small.len() + 3);
        // Growing the budget only appends: the common prefix is identical.
        assert_eq!(&grown[..small.len()], &small[..]);
    }
}
