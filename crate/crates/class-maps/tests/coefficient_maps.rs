//! Oracle and cross-validation tests for the class coefficient maps.
//!
//! Oracles: the catalog members have hand-computable expansions (their
//! generators are geometric series), pinned here to machine precision.
//! Cross-validation: the closed forms and the term-by-term differential
//! recursion must agree on random Schwarz inputs, and the two classes must
//! satisfy the classical derivative relation `g convex ⟺ zg′ starlike`.

use caratheodory::{schwarz_series, schwarz_to_p, SchwarzSpec};
use class_maps::{
    catalog, catalog_json, coeffs_via_ode, convex_coeffs, extremal_member, star_coeffs,
    ClassMapError, ClassTag, ExtremalSpec, Generator, DEFAULT_TRUNCATION,
};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use series_core::PowerSeries;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn coeffs(values: &[f64]) -> caratheodory::CaratheodoryCoeffs {
    caratheodory::CaratheodoryCoeffs::new(values.iter().map(|&v| re(v)).collect()).unwrap()
}

fn assert_close(actual: Complex64, expect: f64, label: &str) {
    assert!(
        (actual - re(expect)).norm() < 1e-13,
        "{label}: got {actual}, expected {expect}"
    );
}

#[test]
fn starlike_closed_forms_on_oracle_inputs() {
    // All-twos input: the half-plane witness z + z² + (3/4)z³ + (17/36)z⁴ + (19/72)z⁵.
    let m = star_coeffs(&coeffs(&[2.0, 2.0, 2.0, 2.0])).unwrap();
    assert_close(m.a(2), 1.0, "a2");
    assert_close(m.a(3), 0.75, "a3");
    assert_close(m.a(4), 17.0 / 36.0, "a4");
    assert_close(m.a(5), 19.0 / 72.0, "a5");

    // Zero input: the identity map.
    let m = star_coeffs(&coeffs(&[0.0, 0.0, 0.0, 0.0])).unwrap();
    for n in 2..=5 {
        assert_eq!(m.a(n), Complex64::ZERO);
    }

    // Alternating input: the odd witness z + (1/2)z³ + (1/4)z⁵.
    let m = star_coeffs(&coeffs(&[0.0, 2.0, 0.0, 2.0])).unwrap();
    assert_close(m.a(2), 0.0, "a2");
    assert_close(m.a(3), 0.5, "a3");
    assert_close(m.a(4), 0.0, "a4");
    assert_close(m.a(5), 0.25, "a5");
}

#[test]
fn convex_closed_forms_on_oracle_inputs() {
    let m = convex_coeffs(&coeffs(&[2.0, 2.0, 2.0, 2.0])).unwrap();
    assert_close(m.a(2), 0.5, "a2");
    assert_close(m.a(3), 0.25, "a3");
    assert_close(m.a(4), 17.0 / 144.0, "a4");
    assert_close(m.a(5), 19.0 / 360.0, "a5");

    let m = convex_coeffs(&coeffs(&[0.0, 2.0, 0.0, 2.0])).unwrap();
    assert_close(m.a(2), 0.0, "a2");
    assert_close(m.a(3), 1.0 / 6.0, "a3");
    assert_close(m.a(4), 0.0, "a4");
    assert_close(m.a(5), 0.05, "a5");

    let m = convex_coeffs(&coeffs(&[0.0, 0.0, 2.0, 0.0])).unwrap();
    assert_close(m.a(4), 1.0 / 12.0, "a4");
}

#[test]
fn ode_route_on_oracle_schwarz_inputs() {
    // w = z, starlike: the half-plane witness again.
    let m = coeffs_via_ode(&PowerSeries::identity(8), ClassTag::StarlikeE).unwrap();
    assert_close(m.a(2), 1.0, "a2");
    assert_close(m.a(3), 0.75, "a3");

    // w = 0: identity member in both classes.
    for class_tag in [ClassTag::StarlikeE, ClassTag::ConvexE] {
        let m = coeffs_via_ode(&PowerSeries::zero(8), class_tag).unwrap();
        for n in 2..=8 {
            assert_eq!(m.a(n), Complex64::ZERO, "a{n}");
        }
    }

    // w = z⁴, convex: a₅ = c₄/40 with c₄ = 2.
    let m = coeffs_via_ode(&PowerSeries::monomial(4, 8), ClassTag::ConvexE).unwrap();
    assert_close(m.a(5), 0.05, "a5");

    // w = z³, starlike: a₄ = 1/3.
    let m = coeffs_via_ode(&PowerSeries::monomial(3, 8), ClassTag::StarlikeE).unwrap();
    assert_close(m.a(4), 1.0 / 3.0, "a4");
}

#[test]
fn catalog_expansions_match_printed_coefficients() {
    let expect: &[(&str, ClassTag, &[(usize, f64)])] = &[
        ("f1", ClassTag::StarlikeE, &[(2, 1.0), (3, 0.75), (4, 17.0 / 36.0), (5, 19.0 / 72.0)]),
        ("f2", ClassTag::StarlikeE, &[(2, 0.0), (3, 0.5), (4, 0.0)]),
        ("f3", ClassTag::StarlikeE, &[(2, 0.0), (3, 0.0), (4, 1.0 / 3.0)]),
        ("f4_star", ClassTag::StarlikeE, &[(4, 0.0), (5, 0.25)]),
        ("f5", ClassTag::ConvexE, &[(2, 0.5), (3, 0.25), (4, 17.0 / 144.0), (5, 19.0 / 360.0)]),
        ("f6", ClassTag::ConvexE, &[(2, 0.0), (3, 1.0 / 6.0), (4, 0.0)]),
        ("f7", ClassTag::ConvexE, &[(2, 0.0), (3, 0.0), (4, 1.0 / 12.0)]),
        ("f4_convex", ClassTag::ConvexE, &[(4, 0.0), (5, 0.05)]),
    ];
    for (id, class_tag, pins) in expect {
        let spec = catalog(*class_tag)
            .into_iter()
            .find(|s| s.id == *id)
            .unwrap_or_else(|| panic!("{id} missing from catalog"));
        let (member, f) = extremal_member(&spec, DEFAULT_TRUNCATION).unwrap();
        for &(n, value) in *pins {
            assert_close(member.a(n), value, &format!("{id} a{n}"));
            assert_close(f.coeff(n), value, &format!("{id} series z^{n}"));
        }
    }
}

#[test]
fn two_parameter_generator_degenerates_to_half_plane_at_unit_t1() {
    // t₁ = 1, t₂ = −1: numerator 1 − z², denominator (1 − z)², hence
    // p = (1 + z)/(1 − z) and the member coincides with the n = 1 witness.
    let spec = ExtremalSpec {
        id: "degenerate".into(),
        class_tag: ClassTag::ConvexE,
        generator: Generator::TwoParamP {
            t1: 1.0,
            t2: re(-1.0),
        },
    };
    let (member, _) = extremal_member(&spec, DEFAULT_TRUNCATION).unwrap();
    let (f5, _) = extremal_member(&catalog(ClassTag::ConvexE)[0], DEFAULT_TRUNCATION).unwrap();
    for n in 2..=8 {
        assert!((member.a(n) - f5.a(n)).norm() < 1e-13, "a{n}");
    }
}

#[test]
fn generator_domains_are_enforced() {
    let bad_t2 = ExtremalSpec {
        id: "bad".into(),
        class_tag: ClassTag::StarlikeE,
        generator: Generator::TwoParamP {
            t1: 0.5,
            t2: re(0.5),
        },
    };
    assert!(matches!(
        extremal_member(&bad_t2, 8).unwrap_err(),
        ClassMapError::InvalidGenerator(_)
    ));
    let bad_n = ExtremalSpec {
        id: "bad".into(),
        class_tag: ClassTag::StarlikeE,
        generator: Generator::MonomialP { n: 0 },
    };
    assert!(matches!(
        extremal_member(&bad_n, 8).unwrap_err(),
        ClassMapError::InvalidGenerator(_)
    ));
}

fn draw_disk(rng: &mut ChaCha8Rng, max_radius: f64) -> Complex64 {
    let r = max_radius * rng.gen::<f64>().sqrt();
    let angle = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
    Complex64::from_polar(r, angle)
}

fn random_schwarz(rng: &mut ChaCha8Rng) -> PowerSeries {
    let degree = rng.gen_range(0..=4);
    let spec = SchwarzSpec {
        phase: rng.gen::<f64>() * 2.0 * std::f64::consts::PI,
        zeros: (0..degree).map(|_| draw_disk(rng, 0.999)).collect(),
    };
    schwarz_series(&spec, DEFAULT_TRUNCATION).unwrap()
}

#[test]
fn closed_forms_agree_with_ode_route_on_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xab12);
    for _ in 0..10_000 {
        let w = random_schwarz(&mut rng);
        let c = schwarz_to_p(&w).unwrap();
        let star_closed = star_coeffs(&c).unwrap();
        let star_ode = coeffs_via_ode(&w, ClassTag::StarlikeE).unwrap();
        let convex_closed = convex_coeffs(&c).unwrap();
        let convex_ode = coeffs_via_ode(&w, ClassTag::ConvexE).unwrap();
        for n in 2..=5 {
            assert!(
                (star_closed.a(n) - star_ode.a(n)).norm() < 1e-12,
                "starlike a{n}"
            );
            assert!(
                (convex_closed.a(n) - convex_ode.a(n)).norm() < 1e-12,
                "convex a{n}"
            );
        }
    }
}

#[test]
fn derivative_relation_links_the_two_classes() {
    // If g solves the convex relation for w, then z·g′ solves the
    // starlike relation for the same w: coefficientwise n·aₙ(g) = aₙ(star).
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3d);
    for _ in 0..2_000 {
        let w = random_schwarz(&mut rng);
        let convex = coeffs_via_ode(&w, ClassTag::ConvexE).unwrap();
        let star = coeffs_via_ode(&w, ClassTag::StarlikeE).unwrap();
        for n in 2..=8 {
            let scaled = convex.a(n) * (n as f64);
            assert!((scaled - star.a(n)).norm() < 1e-12, "a{n}");
        }
    }
}

#[test]
fn catalog_json_lists_all_eight_members() {
    let json = catalog_json(DEFAULT_TRUNCATION).unwrap();
    assert!(json.starts_with('['));
    assert!(json.ends_with(']'));
    for id in ["f1", "f2", "f3", "f4_star", "f5", "f6", "f7", "f4_convex"] {
        assert!(json.contains(&format!("\"id\": \"{id}\"")), "{id} missing");
    }
    assert_eq!(json.matches("\"class\": \"star_e\"").count(), 4);
    assert_eq!(json.matches("\"class\": \"convex_e\"").count(), 4);
}
