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

//! Two straight cylinders: the disk-cylinder law integrated along the slave
//! axis, and the closed-form references it is checked against.

use rayon::prelude::*;

use crate::disk_cylinder::{disk_cylinder_potential, prefactor_k_hat, LawOption};
use crate::error::{Error, Result};
use crate::geometry::{CylinderPairScene, PARALLEL_SIN_THRESHOLD};
use crate::potential::{MaterialPair, PowerLaw};
use crate::quadrature::{ratio_for_finest_width, QuadratureSpec};

/// Segments and points of the default axial rule.
pub const AXIAL_SEGMENTS: usize = 40;
pub const AXIAL_POINTS: usize = 5;

/// One quadrature point along the slave axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxialSample {
    pub s1: f64,
    pub weight: f64,
    /// Disk-cylinder potential per unit length at `s1`.
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoCylinderResult {
    pub total_potential: f64,
    pub samples: Vec<AxialSample>,
    pub option: LawOption,
}

/// Axial rule for `scene`: 40 segments of 5 points focused at the closest
/// point, graded at least with the default ratio and finer when the gap is
/// small, so that the finest segment resolves the decay length
/// `~ sqrt(R1 g) / sin(alpha)` of the integrand.
pub fn default_axial(scene: &CylinderPairScene) -> QuadratureSpec {
    axial_rule(scene, 1.0)
}

/// As [`default_axial`] with the target widths divided by `resolution`.
pub fn axial_rule(scene: &CylinderPairScene, resolution: f64) -> QuadratureSpec {
    let half = 0.5 * scene.slave_length();
    let sin_a = scene.alpha().sin().max(PARALLEL_SIN_THRESHOLD);
    let target = 0.5 * (scene.r1() * scene.g_bl()).sqrt() / sin_a / resolution;
    let n = ((AXIAL_SEGMENTS as f64 * resolution).round() as usize).max(2);
    let ratio =
        ratio_for_finest_width(half, n / 2, target).max(QuadratureSpec::DEFAULT_GRADING_RATIO);
    QuadratureSpec::new(n, AXIAL_POINTS, ratio, 0.0).expect("valid axial rule")
}

/// Integrates the disk-cylinder law over the slave axis `s1 in [-L/2, L/2]`.
///
/// The focus of `axial` is measured from the bilateral closest point. Errors
/// carry the offending `s1`.
pub fn two_cylinder_potential(
    scene: &CylinderPairScene,
    option: LawOption,
    law: PowerLaw,
    materials: &MaterialPair,
    axial: &QuadratureSpec,
) -> Result<TwoCylinderResult> {
    let half = 0.5 * scene.slave_length();
    let nodes = axial.nodes(-half, half)?;
    let densities: Vec<Result<f64>> = nodes
        .par_iter()
        .map(|&(s1, _)| {
            scene
                .disk_config(s1)
                .and_then(|c| disk_cylinder_potential(&c, option, law, materials))
                .map_err(|e| e.at_sample(s1))
        })
        .collect();
    let mut samples = Vec::with_capacity(nodes.len());
    let mut total = 0.0;
    for (&(s1, weight), density) in nodes.iter().zip(densities) {
        let density = density?;
        total += weight * density;
        samples.push(AxialSample {
            s1,
            weight,
            density,
        });
    }
    Ok(TwoCylinderResult {
        total_potential: total,
        samples,
        option,
    })
}

/// Parallel cylinders, potential per unit length:
/// `K^_m rho1 sqrt(2 R1 R2 / (R1 + R2)) g^(9/2-m)`.
pub fn analytic_reference_parallel(
    g: f64,
    r1: f64,
    r2: f64,
    law: PowerLaw,
    materials: &MaterialPair,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    let radial = (2.0 * r1 * r2 / (r1 + r2)).sqrt();
    Ok(prefactor_k_hat(law, materials.rho2())
        * materials.rho1()
        * radial
        * g.powf(4.5 - law.exponent() as f64))
}

/// Skew cylinders with van der Waals attraction: `-(A / 6) sqrt(R1 R2) / (g sin(alpha))`.
pub fn analytic_reference_skew_vdw(
    g: f64,
    alpha: f64,
    r1: f64,
    r2: f64,
    hamaker: f64,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    let sin_a = alpha.sin();
    if !(sin_a >= PARALLEL_SIN_THRESHOLD) || alpha > std::f64::consts::FRAC_PI_2 {
        return Err(Error::Domain(format!(
            "skew law needs alpha in (0, pi/2], got {alpha}"
        )));
    }
    Ok(-hamaker / 6.0 * (r1 * r2).sqrt() / (g * sin_a))
}

/// Closed-form reference for the whole scene: the parallel law times `L` for
/// parallel axes, the skew law (`m = 6` only) otherwise.
pub fn analytic_reference_total(
    scene: &CylinderPairScene,
    law: PowerLaw,
    materials: &MaterialPair,
) -> Result<f64> {
    let (g, r1, r2) = (scene.g_bl(), scene.r1(), scene.r2());
    if scene.alpha().sin() < PARALLEL_SIN_THRESHOLD {
        return Ok(scene.slave_length() * analytic_reference_parallel(g, r1, r2, law, materials)?);
    }
    if law.exponent() != 6 {
        return Err(Error::Unsupported(format!(
            "skew-cylinder reference exists for m = 6 only, got m = {}",
            law.exponent()
        )));
    }
    let hamaker =
        crate::potential::hamaker_constant(law.prefactor(), materials.rho1(), materials.rho2());
    analytic_reference_skew_vdw(g, scene.alpha(), r1, r2, hamaker)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn unit() -> MaterialPair {
        MaterialPair::densities(1.0, 1.0).unwrap()
    }

    #[test]
    fn parallel_reference_value() {
        let v = analytic_reference_parallel(1e-2, 1.0, 1.0, PowerLaw::vdw(-1.0).unwrap(), &unit())
            .unwrap();
        assert_relative_eq!(v, -PI * PI / 24.0 * 1e3, max_relative = 1e-13);
        assert_relative_eq!(v, -411.234, max_relative = 1e-5);
        let r = 2.5;
        let w =
            analytic_reference_parallel(1e-2, r, r, PowerLaw::vdw(-1.0).unwrap(), &unit()).unwrap();
        assert_relative_eq!(w / v, r.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn skew_reference_value() {
        let v = analytic_reference_skew_vdw(0.01, FRAC_PI_2, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(v, -100.0 / 6.0, max_relative = 1e-14);
        let a = 0.3f64;
        let half = (0.5 * a.sin()).asin();
        let ratio = analytic_reference_skew_vdw(0.01, half, 1.0, 1.0, 1.0).unwrap()
            / analytic_reference_skew_vdw(0.01, a, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-12);
        let tenfold = analytic_reference_skew_vdw(0.1, a, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(
            tenfold,
            0.1 * analytic_reference_skew_vdw(0.01, a, 1.0, 1.0, 1.0).unwrap(),
            max_relative = 1e-14
        );
        assert!(analytic_reference_skew_vdw(0.01, 0.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn total_is_weighted_sum_and_profile_is_symmetric() {
        let scene = CylinderPairScene::new(1e-2, 0.6, 1.0, 1.0, 20.0).unwrap();
        let law = PowerLaw::vdw(-1.0).unwrap();
        let res =
            two_cylinder_potential(&scene, LawOption::B, law, &unit(), &default_axial(&scene))
                .unwrap();
        let sum: f64 = res.samples.iter().map(|s| s.weight * s.density).sum();
        assert_eq!(sum, res.total_potential);
        let n = res.samples.len();
        for i in 0..n / 2 {
            let (a, b) = (res.samples[i], res.samples[n - 1 - i]);
            assert_relative_eq!(a.s1, -b.s1, max_relative = 1e-12);
            assert_relative_eq!(a.density, b.density, max_relative = 1e-10);
        }
    }

    #[test]
    fn option_a_parallel_reports_sample() {
        let scene = CylinderPairScene::new(1e-2, 0.0, 1.0, 1.0, 20.0).unwrap();
        let law = PowerLaw::vdw(-1.0).unwrap();
        let err =
            two_cylinder_potential(&scene, LawOption::A, law, &unit(), &default_axial(&scene))
                .unwrap_err();
        assert!(matches!(err, Error::AtSample { .. }));
        assert_eq!(err.code(), "parallel_singularity");
    }

    #[test]
    fn skew_reference_needs_vdw() {
        let scene = CylinderPairScene::new(1e-2, 0.6, 1.0, 1.0, 20.0).unwrap();
        let err = analytic_reference_total(&scene, PowerLaw::repulsive(1.0).unwrap(), &unit())
            .unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }
}
