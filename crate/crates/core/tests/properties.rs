// Copyright 2026 The diskcyl authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Property tests for the invariants of every module.

use std::f64::consts::{FRAC_PI_2, PI};

use diskcyl::disk_cylinder::{aux_variables, coefficients};
use diskcyl::geometry::{closest_point_on_line, unilateral_projection};
use diskcyl::potential::{
    phi_point_pair, pot_point_cylinder_series, pot_point_halfspace, SeriesTerms,
};
use diskcyl::quadrature::gauss_segment_integrate;
use diskcyl::{
    disk_cylinder_potential, extract_config, DiskCylinderConfig, Error, LawOption, MaterialPair,
    PowerLaw, QuadratureSpec, Vec3,
};
use proptest::prelude::*;

fn unit_vec() -> impl Strategy<Value = Vec3> {
    (-1.0f64..=1.0, 0.0..2.0 * PI).prop_map(|(z, phi)| {
        let r = (1.0 - z * z).max(0.0).sqrt();
        Vec3::new(r * phi.cos(), r * phi.sin(), z)
    })
}

fn point(span: f64) -> impl Strategy<Value = Vec3> {
    (-span..span, -span..span, -span..span).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.ln()..hi.ln()).prop_map(f64::exp)
}

/// Rotation of `v` about unit `axis` by `angle`.
fn rotate(v: Vec3, axis: Vec3, angle: f64) -> Vec3 {
    let (s, c) = angle.sin_cos();
    v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c))
}

/// Disk and cylinder with a guaranteed positive gap.
#[derive(Debug, Clone)]
struct Scene {
    center: Vec3,
    t1: Vec3,
    origin: Vec3,
    t2: Vec3,
    r1: f64,
    r2: f64,
}

fn scene() -> impl Strategy<Value = Scene> {
    (
        unit_vec(),
        unit_vec(),
        unit_vec(),
        point(2.0),
        -3.0f64..3.0,
        log_uniform(1e-4, 1.0),
        0.5f64..2.0,
        0.5f64..2.0,
    )
        .prop_filter_map(
            "offset parallel to axis",
            |(t1, t2, w, origin, s, g, r1, r2)| {
                let n = t2.cross(w).normalized()?;
                Some(Scene {
                    center: origin + t2 * s + n * (r1 + r2 + g),
                    t1,
                    origin,
                    t2,
                    r1,
                    r2,
                })
            },
        )
}

fn config_of(s: &Scene) -> DiskCylinderConfig {
    extract_config(s.center, s.t1, s.r1, s.origin, s.t2, s.r2).unwrap()
}

/// Vector-form coefficients; `u1` is the bilateral normal (option A, oriented
/// toward the disk) or the in-plane projection of the unilateral normal (B).
fn vector_coefficients(s: &Scene, option: LawOption) -> [f64; 6] {
    let foot_s = (s.center - s.origin).dot(s.t2);
    let offset = s.center - (s.origin + s.t2 * foot_s);
    let d = offset.norm();
    let n_ul = offset * (1.0 / d);
    let u1 = match option {
        LawOption::A => {
            let n = s.t1.cross(s.t2).normalized().unwrap();
            if n.dot(n_ul) < 0.0 {
                -n
            } else {
                n
            }
        }
        _ => (n_ul - s.t1 * s.t1.dot(n_ul)).normalized().unwrap(),
    };
    let p = u1.dot(s.t2);
    let q = s.t1.dot(u1.cross(s.t2));
    [
        1.0 - p * p,
        1.0 - q * q,
        -2.0 * p * q,
        2.0 * d * n_ul.dot(u1),
        2.0 * d * s.t1.dot(u1.cross(n_ul)),
        d * d,
    ]
}

fn unit_materials() -> MaterialPair {
    MaterialPair::densities(1.0, 1.0).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn projection_residual_is_orthogonal(p in point(50.0), o in point(50.0), dir in unit_vec()) {
        let (foot, dist) = closest_point_on_line(p, o, dir).unwrap();
        let r = p - foot;
        prop_assert!((r.norm() - dist).abs() <= 1e-12 * dist.max(1.0));
        let bound = if dist < 1.0 { 1e-12 } else { 1e-12 * dist };
        prop_assert!(r.dot(dir).abs() < bound);
    }

    #[test]
    fn extraction_is_invariant_under_rigid_motion(s in scene(), axis in unit_vec(), angle in 0.0..2.0 * PI, shift in point(10.0)) {
        let c0 = config_of(&s);
        let moved = Scene {
            center: rotate(s.center, axis, angle) + shift,
            t1: rotate(s.t1, axis, angle),
            origin: rotate(s.origin, axis, angle) + shift,
            t2: rotate(s.t2, axis, angle),
            ..s.clone()
        };
        let c1 = config_of(&moved);
        prop_assert!((c0.d_ul() - c1.d_ul()).abs() < 1e-10);
        prop_assert!((c0.alpha() - c1.alpha()).abs() < 1e-10);
        prop_assert!((c0.theta() - c1.theta()).abs() < 1e-10);
    }

    #[test]
    fn extraction_under_sign_flips(s in scene()) {
        let c0 = config_of(&s);
        let flipped_t1 = config_of(&Scene { t1: -s.t1, ..s.clone() });
        let flipped_t2 = config_of(&Scene { t2: -s.t2, ..s.clone() });
        prop_assert!((c0.alpha() - flipped_t1.alpha()).abs() < 1e-12);
        prop_assert!((c0.alpha() - flipped_t2.alpha()).abs() < 1e-12);
        prop_assert!((PI - c0.theta() - flipped_t1.theta()).abs() < 1e-12);
        prop_assert!((c0.theta() - flipped_t2.theta()).abs() < 1e-12);
    }

    #[test]
    fn theta_identity_with_bilateral_angle(s in scene()) {
        let c = config_of(&s);
        prop_assume!(c.alpha().sin() > 1e-6);
        let n_bl = s.t1.cross(s.t2).normalized().unwrap();
        let n_ul = unilateral_projection(s.center, s.origin, s.t2).unwrap().normal;
        let vartheta = n_bl.dot(n_ul).clamp(-1.0, 1.0).acos();
        let (lhs, rhs) = (c.theta().cos().abs(), c.alpha().sin() * vartheta.sin());
        prop_assert!((lhs - rhs).abs() < 1e-10, "|cos theta| = {lhs}, sin alpha sin vartheta = {rhs}, vartheta = {vartheta}");
        prop_assert!(lhs <= c.alpha().sin() + 1e-12);
    }

    #[test]
    fn angle_form_coefficients_match_vector_form(s in scene()) {
        let c = config_of(&s);
        for option in [LawOption::A, LawOption::B] {
            let Ok(p) = coefficients(&c, option) else { continue };
            let v = vector_coefficients(&s, option);
            let sb = 2.0 * c.d_ul();
            prop_assert!((p.a_y - v[0]).abs() < 1e-10, "a_y {} vs {}", p.a_y, v[0]);
            prop_assert!((p.a_z - v[1]).abs() < 1e-10, "a_z {} vs {}", p.a_z, v[1]);
            prop_assert!((p.a_yz.abs() - v[2].abs()).abs() < 1e-10, "a_yz {} vs {}", p.a_yz, v[2]);
            prop_assert!((p.b_y - v[3]).abs() / sb < 1e-10, "b_y {} vs {}", p.b_y, v[3]);
            prop_assert!((p.b_z.abs() - v[4].abs()).abs() / sb < 1e-10, "b_z {} vs {}", p.b_z, v[4]);
            prop_assert!(((p.c - v[5]) / v[5]).abs() < 1e-12);
        }
    }

    #[test]
    fn options_agree_at_right_angle_theta(
        g in log_uniform(1e-4, 1.0), alpha in 1e-6..=FRAC_PI_2, r1 in 0.5f64..2.0, r2 in 0.5f64..2.0, m in 6u32..=14
    ) {
        let law = PowerLaw::new(m, -1.0).unwrap();
        let c = DiskCylinderConfig::from_gap(g, alpha, FRAC_PI_2, r1, r2).unwrap();
        let vc = disk_cylinder_potential(&c, LawOption::C, law, &unit_materials()).unwrap();
        for option in [LawOption::A, LawOption::B] {
            let v = disk_cylinder_potential(&c, option, law, &unit_materials()).unwrap();
            prop_assert!(((v - vc) / vc).abs() < 1e-10);
        }
    }

    #[test]
    fn discriminant_positive_for_options_b_and_c(
        g in log_uniform(1e-4, 1.0), alpha in 0.0..=FRAC_PI_2, vartheta in 0.0..=PI
    ) {
        let theta = (alpha.sin() * vartheta.sin()).acos();
        let c = DiskCylinderConfig::from_gap(g, alpha, theta, 1.0, 1.0).unwrap();
        for option in [LawOption::B, LawOption::C, LawOption::CSimplified] {
            match aux_variables(&c, option) {
                Ok(aux) => prop_assert!(aux.delta > 0.0),
                Err(Error::NonPositiveDiscriminant { delta }) => prop_assert!(false, "option {option}: Delta = {delta}"),
                Err(_) => {}
            }
        }
    }

    #[test]
    fn simplified_law_scales_exactly_with_gap(
        g in log_uniform(1e-5, 1.0), scale in log_uniform(0.1, 10.0), alpha in 0.0..=FRAC_PI_2, m in 6u32..=14
    ) {
        let law = PowerLaw::new(m, -1.0).unwrap();
        let at = |g: f64| {
            let c = DiskCylinderConfig::from_gap(g, alpha, FRAC_PI_2, 1.0, 0.8).unwrap();
            disk_cylinder_potential(&c, LawOption::CSimplified, law, &unit_materials()).unwrap()
        };
        let slope = (at(g * scale) / at(g)).ln() / scale.ln();
        prop_assume!(scale.ln().abs() > 1e-3);
        prop_assert!((slope - (4.5 - m as f64)).abs() < 1e-10);
    }

    #[test]
    fn simplified_law_grows_with_angle(g in log_uniform(1e-4, 1.0), a in 0.0..=FRAC_PI_2, b in 0.0..=FRAC_PI_2) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let law = PowerLaw::vdw(-1.0).unwrap();
        let at = |alpha| {
            let c = DiskCylinderConfig::from_gap(g, alpha, FRAC_PI_2, 1.0, 1.0).unwrap();
            disk_cylinder_potential(&c, LawOption::CSimplified, law, &unit_materials()).unwrap().abs()
        };
        prop_assert!(at(hi) >= at(lo) * (1.0 - 1e-14));
    }

    #[test]
    fn disk_law_is_linear_in_prefactor_and_densities(
        g in log_uniform(1e-4, 1.0), alpha in 0.05..=FRAC_PI_2, f in 0.1f64..10.0, m in 6u32..=12
    ) {
        let c = DiskCylinderConfig::from_gap(g, alpha, FRAC_PI_2, 1.0, 1.0).unwrap();
        let law = PowerLaw::new(m, -1.0).unwrap();
        for option in LawOption::ALL {
            let base = disk_cylinder_potential(&c, option, law, &unit_materials()).unwrap();
            let k = disk_cylinder_potential(&c, option, law.scaled(f).unwrap(), &unit_materials()).unwrap();
            let r1 = disk_cylinder_potential(&c, option, law, &MaterialPair::densities(f, 1.0).unwrap()).unwrap();
            let r2 = disk_cylinder_potential(&c, option, law, &MaterialPair::densities(1.0, f).unwrap()).unwrap();
            for v in [k, r1, r2] {
                prop_assert!((v / base - f).abs() < 1e-12 * f);
            }
        }
    }

    #[test]
    fn halfspace_is_homogeneous(g in log_uniform(1e-4, 10.0), s in log_uniform(0.01, 100.0), m in 6u32..=16) {
        let law = PowerLaw::new(m, 1.0).unwrap();
        let lhs = pot_point_halfspace(s * g, law, 1.0).unwrap();
        let rhs = s.powi(3 - m as i32) * pot_point_halfspace(g, law, 1.0).unwrap();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-13);
    }

    #[test]
    fn point_potentials_carry_sign_of_k(k in -5.0f64..5.0, g in log_uniform(1e-4, 10.0), rho in 0.1f64..5.0) {
        prop_assume!(k != 0.0);
        for m in [6, 12] {
            let law = PowerLaw::new(m, k).unwrap();
            prop_assert_eq!(phi_point_pair(g, law).unwrap().signum(), k.signum());
            prop_assert_eq!(pot_point_halfspace(g, law, rho).unwrap().signum(), k.signum());
            prop_assert_eq!(
                pot_point_cylinder_series(g, 1.0, law, rho, SeriesTerms::Leading).unwrap().signum(),
                k.signum()
            );
        }
    }

    #[test]
    fn two_term_series_stays_close_to_leading_term(g in log_uniform(1e-4, 10.0), r in 0.1f64..10.0) {
        let law = PowerLaw::vdw(1.0).unwrap();
        let lead = pot_point_cylinder_series(g, r, law, 1.0, SeriesTerms::Leading).unwrap();
        let two = pot_point_cylinder_series(g, r, law, 1.0, SeriesTerms::TwoTerm).unwrap();
        prop_assert!(two <= lead);
        // the difference cancels, so allow a few ulps of the leading term
        prop_assert!((lead - two) / lead <= (g / (g + 2.0 * r)).powi(3) + 1e-15);
    }

    #[test]
    fn gauss_rule_is_exact_for_low_degree_polynomials(
        p in 1usize..=12, n in 1usize..=6, ratio in 1.0f64..2.0,
        coeffs in proptest::collection::vec(-1.0f64..1.0, 24), a in -2.0f64..0.0, len in 0.1f64..3.0
    ) {
        let degree = 2 * p - 1;
        let c = &coeffs[..=degree];
        let b = a + len;
        let spec = QuadratureSpec::new(n, p, ratio, a).unwrap();
        let poly = |x: f64| c.iter().rev().fold(0.0, |acc, ci| acc * x + ci);
        let anti = |x: f64| c.iter().enumerate().map(|(i, ci)| ci * x.powi(i as i32 + 1) / (i + 1) as f64).sum::<f64>();
        let exact = anti(b) - anti(a);
        let scale: f64 = c.iter().map(|ci| ci.abs()).sum::<f64>() * 3f64.powi(degree as i32 + 1);
        let got = gauss_segment_integrate(poly, a, b, &spec).unwrap();
        prop_assert!((got - exact).abs() <= 1e-13 * scale, "{} vs {}", got, exact);
    }
}
