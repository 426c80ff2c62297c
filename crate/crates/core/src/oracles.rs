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

//! Numerical reference solutions for the closed-form laws.
//!
//! - [`ref_pot_two_cylinders_3d`]: the point-half-space law integrated over
//!   the full slave volume (axial x disk), master cylinder infinite.
//! - [`brute_force_point_cylinder`]: the point-pair law integrated over the
//!   volume of an infinite cylinder.
//! - [`loglog_slope`]: least-squares exponent of a power law.
//!
//! Both integrators grade their segments toward the closest point. With
//! `adaptive` set, each rule's grading ratio is raised where needed so that
//! the finest segment resolves the local gap; `resolution` scales those target
//! widths down, and [`ReferenceScheme::refined`] doubles it along with the
//! segment counts.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{CylinderPairScene, Vec3, PARALLEL_SIN_THRESHOLD};
use crate::potential::{halfspace_prefactor, MaterialPair, PowerLaw};
use crate::quadrature::{ratio_for_finest_width, try_gauss_segment_integrate, QuadratureSpec};

/// Rim samples used to bracket the closest rim point before refinement.
const RIM_SAMPLES: usize = 64;

/// Quadrature rules of the two-cylinder volume reference.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceScheme {
    /// Along the slave axis on `[-L/2, L/2]`; focus measured from the closest point.
    pub axial: QuadratureSpec,
    /// Across each disk along the expansion direction; the focus is always
    /// placed at the chord point closest to the master axis.
    pub cross_y: QuadratureSpec,
    /// Across each disk perpendicular to it; the focus is always the closest rim point.
    pub cross_z: QuadratureSpec,
    pub adaptive: bool,
    pub resolution: f64,
}

impl Default for ReferenceScheme {
    /// 40 x 5 axial, 16 x 5 and 12 x 5 across the disk, adaptive grading.
    fn default() -> Self {
        let r = QuadratureSpec::DEFAULT_GRADING_RATIO;
        Self {
            axial: QuadratureSpec::new(40, 5, r, 0.0).expect("valid rule"),
            cross_y: QuadratureSpec::new(16, 5, r, 0.0).expect("valid rule"),
            cross_z: QuadratureSpec::new(12, 5, r, 0.0).expect("valid rule"),
            adaptive: true,
            resolution: 1.0,
        }
    }
}

impl ReferenceScheme {
    pub fn refined(&self) -> Self {
        Self {
            axial: self.axial.refined(),
            cross_y: self.cross_y.refined(),
            cross_z: self.cross_z.refined(),
            adaptive: self.adaptive,
            resolution: 2.0 * self.resolution,
        }
    }
}

/// Quadrature rules of the point-cylinder volume integral in cylindrical
/// coordinates `(x, r, phi)` around the cylinder axis.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceScheme {
    pub x: QuadratureSpec,
    pub r: QuadratureSpec,
    pub phi: QuadratureSpec,
    pub adaptive: bool,
    pub resolution: f64,
    /// Stop doubling the axial extent once a shell adds less than this, relatively.
    pub tail_tolerance: f64,
    pub max_doublings: usize,
}

impl Default for BruteForceScheme {
    fn default() -> Self {
        let ratio = QuadratureSpec::DEFAULT_GRADING_RATIO;
        Self {
            x: QuadratureSpec::new(40, 5, ratio, 0.0).expect("valid rule"),
            r: QuadratureSpec::new(16, 5, ratio, 0.0).expect("valid rule"),
            phi: QuadratureSpec::new(24, 5, ratio, 0.0).expect("valid rule"),
            adaptive: true,
            resolution: 1.0,
            tail_tolerance: 1e-6,
            max_doublings: 60,
        }
    }
}

impl BruteForceScheme {
    pub fn refined(&self) -> Self {
        Self {
            x: self.x.refined(),
            r: self.r.refined(),
            phi: self.phi.refined(),
            resolution: 2.0 * self.resolution,
            ..self.clone()
        }
    }
}

/// `spec` with its ratio raised so that the finest of `n_side` segments on
/// `side_length` is at most `target` wide.
fn graded_to(
    spec: &QuadratureSpec,
    adaptive: bool,
    side_length: f64,
    n_side: usize,
    target: f64,
) -> QuadratureSpec {
    if !adaptive {
        return spec.clone();
    }
    let ratio =
        ratio_for_finest_width(side_length, n_side.max(1), target).max(spec.grading_ratio());
    QuadratureSpec::new(
        spec.n_segments(),
        spec.points_per_segment(),
        ratio,
        spec.focus(),
    )
    .expect("ratio >= 1")
}

/// Point-half-space law integrated over the slave cylinder volume.
///
/// Every point of the slave cylinder contributes `rho1 K_{m,pt-hs} g_pt^(3-m)`
/// with `g_pt` its exact distance to the master axis minus `R2`.
pub fn ref_pot_two_cylinders_3d(
    scene: &CylinderPairScene,
    law: PowerLaw,
    materials: &MaterialPair,
    scheme: &ReferenceScheme,
) -> Result<f64> {
    let half = 0.5 * scene.slave_length();
    let sin_a = scene.alpha().sin().max(PARALLEL_SIN_THRESHOLD);
    let axial_target = 0.5 * (scene.r1() * scene.g_bl()).sqrt() / sin_a / scheme.resolution;
    let axial = graded_to(
        &scheme.axial,
        scheme.adaptive,
        half,
        scheme.axial.n_segments() / 2,
        axial_target,
    );
    let nodes = axial.nodes(-half, half)?;
    let prefactor = materials.rho1() * halfspace_prefactor(law, materials.rho2());
    let disks: Vec<Result<f64>> = nodes
        .par_iter()
        .map(|&(s1, _)| disk_integral(scene, s1, law, scheme).map_err(|e| e.at_sample(s1)))
        .collect();
    let mut total = 0.0;
    for (&(_, w), disk) in nodes.iter().zip(disks) {
        total += w * disk?;
    }
    Ok(prefactor * total)
}

/// `integral over the disk at s1 of g_pt^(3-m)`.
fn disk_integral(
    scene: &CylinderPairScene,
    s1: f64,
    law: PowerLaw,
    scheme: &ReferenceScheme,
) -> Result<f64> {
    let (r1, r2) = (scene.r1(), scene.r2());
    let center = scene.slave_point(s1);
    let t1 = scene.slave_axis();
    let e1 = t1.any_perpendicular();
    let e2 = t1.cross(e1);
    let rim = |phi: f64| center + (e1 * phi.cos() + e2 * phi.sin()) * r1;
    let phi = closest_rim_angle(|phi| axis_distance_squared(rim(phi)));
    let closest = rim(phi);
    let disk_gap = axis_distance_squared(closest).sqrt() - r2;
    if !(disk_gap > 0.0) {
        return Err(Error::Penetration { gap: disk_gap });
    }
    let u1 = (center - closest) * (1.0 / r1);
    let v1 = t1.cross(u1);
    let power = 3 - law.exponent() as i32;

    let z_target = 0.25 * (r1 * disk_gap).sqrt() / scheme.resolution;
    let z_rule = graded_to(
        &scheme.cross_z.with_focus(0.0),
        scheme.adaptive,
        r1,
        scheme.cross_z.n_segments() / 2,
        z_target,
    );
    try_gauss_segment_integrate(
        |z| {
            let w = (r1 * r1 - z * z).max(0.0).sqrt();
            if w == 0.0 {
                return Ok(0.0);
            }
            let p0 = center + v1 * z;
            // chord point closest to the master axis
            let (a, b) = (u1.y * u1.y + u1.z * u1.z, p0.y * u1.y + p0.z * u1.z);
            let y_star = if a > 0.0 { (-b / a).clamp(-w, w) } else { -w };
            let low_gap = axis_distance_squared(p0 + u1 * y_star).sqrt() - r2;
            let y_target = 0.25 * low_gap / scheme.resolution;
            let n_side = if y_star > -w && y_star < w {
                scheme.cross_y.n_segments() / 2
            } else {
                scheme.cross_y.n_segments()
            };
            let y_rule = graded_to(
                &scheme.cross_y.with_focus(y_star),
                scheme.adaptive,
                2.0 * w,
                n_side,
                y_target,
            );
            try_gauss_segment_integrate(
                |y| {
                    let gap = axis_distance_squared(p0 + u1 * y).sqrt() - r2;
                    if !(gap > 0.0) {
                        return Err(Error::Penetration { gap });
                    }
                    Ok(gap.powi(power))
                },
                -w,
                w,
                &y_rule,
            )
        },
        -r1,
        r1,
        &z_rule,
    )
}

/// Squared distance to the master axis (the x-axis).
fn axis_distance_squared(p: Vec3) -> f64 {
    p.y * p.y + p.z * p.z
}

/// Angle minimizing `f` on the circle: coarse sampling, then golden-section search.
fn closest_rim_angle(f: impl Fn(f64) -> f64) -> f64 {
    let step = TAU / RIM_SAMPLES as f64;
    let best = (0..RIM_SAMPLES)
        .map(|i| i as f64 * step)
        .min_by(|a, b| f(*a).total_cmp(&f(*b)))
        .expect("non-empty");
    let (mut lo, mut hi) = (best - step, best + step);
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Point-pair law integrated over an infinite cylinder of radius `radius`,
/// for a point at surface gap `g`.
///
/// The axial extent starts at `10 (g + 2R)` and is doubled until the last
/// shell contributes less than `scheme.tail_tolerance` relatively.
pub fn brute_force_point_cylinder(
    g: f64,
    radius: f64,
    law: PowerLaw,
    rho: f64,
    scheme: &BruteForceScheme,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    if !(radius > 0.0) {
        return Err(Error::Domain(format!(
            "cylinder radius {radius} must be positive"
        )));
    }
    let res = scheme.resolution;
    let h = radius + g;
    let m = law.exponent() as i32;
    let r_rule = graded_to(
        &scheme.r.with_focus(radius),
        scheme.adaptive,
        radius,
        scheme.r.n_segments(),
        0.25 * g / res,
    );
    let phi_rule = graded_to(
        &scheme.phi.with_focus(0.0),
        scheme.adaptive,
        PI,
        scheme.phi.n_segments(),
        0.25 * g / radius / res,
    );
    let r_nodes = r_rule.nodes(0.0, radius)?;
    let phi_nodes = phi_rule.nodes(0.0, PI)?;
    // the cross-section integral at axial offset x; factor 2 for phi in [-pi, 0]
    let section = |x: f64| -> f64 {
        let mut sum = 0.0;
        for &(phi, wp) in &phi_nodes {
            let (s, c) = phi.sin_cos();
            let mut inner = 0.0;
            for &(r, wr) in &r_nodes {
                let d2 = x * x + (r * s) * (r * s) + (h - r * c) * (h - r * c);
                inner += wr * r * d2.sqrt().powi(-m);
            }
            sum += wp * inner;
        }
        2.0 * sum
    };
    let slab = |a: f64, b: f64, spec: &QuadratureSpec| -> Result<f64> {
        let nodes = spec.nodes(a, b)?;
        let values: Vec<f64> = nodes.par_iter().map(|&(x, _)| section(x)).collect();
        let mut sum = 0.0;
        for (&(x, w), v) in nodes.iter().zip(values) {
            if !v.is_finite() {
                return Err(Error::NonFinite { at: x, value: v });
            }
            sum += w * v;
        }
        Ok(sum)
    };

    let mut extent = 10.0 * (g + 2.0 * radius);
    let x_rule = graded_to(
        &scheme.x.with_focus(0.0),
        scheme.adaptive,
        extent,
        scheme.x.n_segments(),
        0.25 * g / res,
    );
    let mut total = slab(0.0, extent, &x_rule)?;
    let mut tail = f64::INFINITY;
    for _ in 0..scheme.max_doublings {
        let shell = slab(extent, 2.0 * extent, &scheme.x.with_focus(extent))?;
        total += shell;
        extent *= 2.0;
        tail = (shell / total).abs();
        if tail < scheme.tail_tolerance {
            // both half-lines of the axis
            return Ok(2.0 * rho * law.prefactor() * total);
        }
    }
    Err(Error::TruncationNotConverged { tail })
}

/// Least-squares fit of `log|y| = intercept + slope log x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeEstimate {
    pub slope: f64,
    pub intercept: f64,
    /// Largest absolute residual, in natural-log units.
    pub max_residual: f64,
}

pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<SlopeEstimate> {
    if xs.len() != ys.len() {
        return Err(Error::Input(format!(
            "{} abscissae but {} values",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 3 {
        return Err(Error::Input(format!(
            "slope fit needs at least 3 points, got {}",
            xs.len()
        )));
    }
    if let Some(x) = xs.iter().find(|x| !(**x > 0.0 && x.is_finite())) {
        return Err(Error::Domain(format!(
            "abscissa {x} is not positive and finite"
        )));
    }
    let sign = ys[0].signum();
    if ys
        .iter()
        .any(|y| *y == 0.0 || !y.is_finite() || y.signum() != sign)
    {
        return Err(Error::Domain(
            "values must be finite, nonzero and of one sign".into(),
        ));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("abscissae must not all be equal".into()));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let max_residual = lx
        .iter()
        .zip(&ly)
        .map(|(x, y)| (y - intercept - slope * x).abs())
        .fold(0.0, f64::max);
    Ok(SlopeEstimate {
        slope,
        intercept,
        max_residual,
    })
}

/// `n` log-spaced values from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                (a + (b - a) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_power_laws() {
        let xs = log_grid(1e-3, 10.0, 9);
        let ys: Vec<f64> = xs.iter().map(|x| x.powf(-1.5)).collect();
        let est = loglog_slope(&xs, &ys).unwrap();
        assert_relative_eq!(est.slope, -1.5, max_relative = 1e-12);
        assert!(est.max_residual < 1e-12);
        let ys: Vec<f64> = xs.iter().map(|x| -4.0 / x).collect();
        let est = loglog_slope(&xs, &ys).unwrap();
        assert_relative_eq!(est.slope, -1.0, max_relative = 1e-12);
        assert_relative_eq!(est.intercept, 4f64.ln(), max_relative = 1e-12);
    }

    #[test]
    fn slope_input_errors() {
        assert!(loglog_slope(&[1.0, 2.0], &[1.0, 2.0]).is_err());
        assert!(loglog_slope(&[1.0, 2.0, 3.0], &[1.0, -2.0, 3.0]).is_err());
        assert!(loglog_slope(&[1.0, 2.0, 3.0], &[1.0, 0.0, 3.0]).is_err());
        assert!(loglog_slope(&[1.0, 2.0, 3.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn rim_search_finds_minimum() {
        let phi = closest_rim_angle(|p| -(p - 2.0).cos());
        assert_relative_eq!(phi, 2.0, epsilon = 1e-6);
    }

    #[test]
    fn log_grid_endpoints() {
        let g = log_grid(1e-4, 1e-2, 11);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 1e-4);
        assert_eq!(g[10], 1e-2);
        assert_relative_eq!(g[5], 1e-3, max_relative = 1e-12);
    }
}
