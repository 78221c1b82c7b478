//! Empirical extrema of a functional over a sample pool, with optional
//! derivative-free local refinement.
//!
//! The scan itself is an exact running min/max in pool order (ties keep
//! the first hit, so results are deterministic). Refinement then perturbs
//! the incumbent's *construction parameters* — Blaschke phase and zeros,
//! or τ-ladder contractions — one coordinate at a time with a halving
//! step, keeping only admissible moves that improve the objective. Both
//! passes are deterministic: refinement uses no randomness, and a refined
//! extremum carries the perturbed construction in its provenance so it
//! replays exactly.

use class_maps::{ClassMember, ClassTag, Provenance};
use num_complex::Complex64;

use crate::config::VerifyError;
use crate::sampler::{member_from_schwarz, member_from_tau};

/// Initial refinement step in parameter space; each refinement round
/// halves it, so `k` rounds probe scales `1e-4 .. 1e-4/2^{k-1}`.
const REFINE_STEP: f64 = 1e-4;

/// One located extremum: the value and the replayable construction that
/// produced it.
#[derive(Debug, Clone)]
pub struct Extremum {
    pub value: f64,
    pub provenance: Provenance,
}

/// Running minimum and maximum of one functional over one pool.
#[derive(Debug, Clone)]
pub struct ExtremaResult {
    pub min: Extremum,
    pub max: Extremum,
}

/// Scans `pool` then `extras` (extra members join the stream after the
/// pool so pool prefixes stay stable), then refines each incumbent for
/// `refine_iterations` rounds.
///
/// Evaluation errors during the scan abort — a member the functional
/// cannot digest means the run is misconfigured. During refinement they
/// merely reject the move, since a perturbation may legitimately step
/// outside a construction's domain.
pub fn empirical_extrema(
    pool: &[ClassMember],
    extras: &[ClassMember],
    class_tag: ClassTag,
    refine_iterations: u32,
    eval: &dyn Fn(&ClassMember) -> Result<f64, VerifyError>,
) -> Result<ExtremaResult, VerifyError> {
    let mut best_min: Option<(f64, &ClassMember)> = None;
    let mut best_max: Option<(f64, &ClassMember)> = None;
    for member in pool.iter().chain(extras.iter()) {
        let value = eval(member)?;
        if best_min.is_none_or(|(v, _)| value < v) {
            best_min = Some((value, member));
        }
        if best_max.is_none_or(|(v, _)| value > v) {
            best_max = Some((value, member));
        }
    }
    let (min_v, min_m) = best_min.ok_or_else(|| VerifyError::Config("empty sample pool".into()))?;
    let (max_v, max_m) = best_max.expect("nonempty pool has a maximum");

    let min = refine(class_tag, min_v, min_m, false, refine_iterations, eval);
    let max = refine(class_tag, max_v, max_m, true, refine_iterations, eval);
    Ok(ExtremaResult { min, max })
}

/// Coordinate view of a replayable construction. Catalog extremals and
/// direct coefficient data have no free parameters and are returned
/// as-is.
fn coords_of(provenance: &Provenance) -> Option<Vec<f64>> {
    match provenance {
        Provenance::FromSchwarz(spec) => {
            let mut coords = vec![spec.phase];
            for z in &spec.zeros {
                coords.push(z.re);
                coords.push(z.im);
            }
            Some(coords)
        }
        Provenance::FromTau { params, tail } => {
            let t4 = tail.unwrap_or(Complex64::new(0.0, 0.0));
            Some(vec![
                params.tau1(),
                params.tau2().re,
                params.tau2().im,
                params.tau3().re,
                params.tau3().im,
                t4.re,
                t4.im,
            ])
        }
        Provenance::Extremal(_) | Provenance::Direct => None,
    }
}

/// Rebuilds a member from perturbed coordinates, using the original
/// provenance only to know which construction to drive. Returns `None`
/// when the move leaves the construction's domain (zero out of the disk,
/// contraction out of range) — the caller treats that as "no
/// improvement".
fn member_at(
    class_tag: ClassTag,
    template: &Provenance,
    coords: &[f64],
) -> Option<ClassMember> {
    match template {
        Provenance::FromSchwarz(spec) => {
            let mut perturbed = spec.clone();
            perturbed.phase = coords[0];
            for (zero, pair) in perturbed.zeros.iter_mut().zip(coords[1..].chunks_exact(2)) {
                let candidate = Complex64::new(pair[0], pair[1]);
                if candidate.norm() >= 1.0 - 1e-6 {
                    return None;
                }
                *zero = candidate;
            }
            member_from_schwarz(class_tag, &perturbed).ok()
        }
        Provenance::FromTau { .. } => {
            let t1 = coords[0];
            if !(0.0..=1.0).contains(&t1) {
                return None;
            }
            let t2 = Complex64::new(coords[1], coords[2]);
            let t3 = Complex64::new(coords[3], coords[4]);
            let t4 = Complex64::new(coords[5], coords[6]);
            if t2.norm() > 1.0 || t3.norm() > 1.0 || t4.norm() > 1.0 {
                return None;
            }
            let params = caratheodory::TauParams::new(t1, t2, t3).ok()?;
            member_from_tau(class_tag, &params, t4).ok()
        }
        Provenance::Extremal(_) | Provenance::Direct => None,
    }
}

/// Coordinate-wise hill climb from one incumbent. `maximize` flips the
/// comparison; everything else is direction-agnostic.
fn refine(
    class_tag: ClassTag,
    value: f64,
    member: &ClassMember,
    maximize: bool,
    iterations: u32,
    eval: &dyn Fn(&ClassMember) -> Result<f64, VerifyError>,
) -> Extremum {
    let sign = if maximize { 1.0 } else { -1.0 };
    let mut best_value = value;
    let mut best_provenance = member.provenance().clone();
    let Some(mut coords) = coords_of(&best_provenance) else {
        return Extremum {
            value: best_value,
            provenance: best_provenance,
        };
    };
    let template = best_provenance.clone();

    let mut step = REFINE_STEP;
    for _ in 0..iterations {
        for idx in 0..coords.len() {
            for delta in [step, -step] {
                let mut candidate = coords.clone();
                candidate[idx] += delta;
                let Some(moved) = member_at(class_tag, &template, &candidate) else {
                    continue;
                };
                let Ok(moved_value) = eval(&moved) else {
                    continue;
                };
                if sign * moved_value > sign * best_value {
                    best_value = moved_value;
                    best_provenance = moved.provenance().clone();
                    coords = candidate;
                }
            }
        }
        step *= 0.5;
    }
    Extremum {
        value: best_value,
        provenance: best_provenance,
    }
}
