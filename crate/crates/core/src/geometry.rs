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

//! Vector primitives, closest-point projection onto a line and the scalar
//! relative configuration `(d_ul, alpha, theta)` of a disk and a cylinder.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance on `| |t| - 1 |` for direction vectors.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Configurations with `sin(alpha)` below this value count as parallel.
pub const PARALLEL_SIN_THRESHOLD: f64 = 1e-9;

/// A point or direction in 3D space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Some unit vector perpendicular to `self` (which must be nonzero).
    pub fn any_perpendicular(self) -> Vec3 {
        // cross with the coordinate axis least aligned with self
        let a = self.x.abs();
        let b = self.y.abs();
        let c = self.z.abs();
        let axis = if a <= b && a <= c {
            Vec3::X
        } else if b <= c {
            Vec3::Y
        } else {
            Vec3::Z
        };
        self.cross(axis).normalized().expect("nonzero input vector")
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

fn check_unit(v: Vec3) -> Result<()> {
    let norm = v.norm();
    if !v.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if !(value > 0.0 && value.is_finite()) {
        return Err(Error::Domain(format!(
            "{name} must be positive and finite, got {value}"
        )));
    }
    Ok(())
}

/// Orthogonal projection of `point` onto the line `origin + s * dir`.
///
/// Returns the foot point and the distance between `point` and the foot.
pub fn closest_point_on_line(
    point: Vec3,
    line_origin: Vec3,
    line_dir: Vec3,
) -> Result<(Vec3, f64)> {
    check_unit(line_dir)?;
    let s = (point - line_origin).dot(line_dir);
    let foot = line_origin + line_dir * s;
    // the residual is orthogonalized once more so that it is perpendicular to
    // the direction to working precision even for large |s|
    let mut residual = point - foot;
    residual = residual - line_dir * residual.dot(line_dir);
    Ok((point - residual, residual.norm()))
}

/// Result of the unilateral closest-point projection of a disk center onto
/// the cylinder axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnilateralProjection {
    /// Closest point on the cylinder axis.
    pub foot: Vec3,
    /// Unit vector from `foot` to the disk center.
    pub normal: Vec3,
    /// Distance between disk center and axis.
    pub distance: f64,
}

/// Projects `disk_center` onto the axis `(cyl_origin, cyl_axis)`.
pub fn unilateral_projection(
    disk_center: Vec3,
    cyl_origin: Vec3,
    cyl_axis: Vec3,
) -> Result<UnilateralProjection> {
    let (foot, distance) = closest_point_on_line(disk_center, cyl_origin, cyl_axis)?;
    let offset = disk_center - foot;
    if distance <= f64::EPSILON * (disk_center.norm() + cyl_origin.norm()).max(1.0) {
        return Err(Error::DegenerateNormal);
    }
    let normal = offset.normalized().ok_or(Error::DegenerateNormal)?;
    Ok(UnilateralProjection {
        foot,
        normal,
        distance,
    })
}

/// Minimal relative configuration of a disk (slave cross-section) and an
/// infinite cylinder (master).
///
/// `alpha` is the mutual angle with `cos(alpha) = |t1 . t2|`, `theta` the angle
/// between the disk normal and the unilateral normal with `cos(theta) = t1 . n_ul`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskCylinderConfig {
    d_ul: f64,
    g_ul: f64,
    alpha: f64,
    theta: f64,
    r1: f64,
    r2: f64,
}

impl DiskCylinderConfig {
    /// Builds a configuration from the unilateral axis distance `d_ul`.
    pub fn new(d_ul: f64, alpha: f64, theta: f64, r1: f64, r2: f64) -> Result<Self> {
        Self::build(d_ul, d_ul - r1 - r2, alpha, theta, r1, r2)
    }

    /// Builds a configuration from the unilateral surface gap `g_ul = d_ul - R1 - R2`.
    ///
    /// The gap is stored as given, so small gaps keep full relative precision.
    pub fn from_gap(g_ul: f64, alpha: f64, theta: f64, r1: f64, r2: f64) -> Result<Self> {
        Self::build(g_ul + r1 + r2, g_ul, alpha, theta, r1, r2)
    }

    fn build(d_ul: f64, g_ul: f64, alpha: f64, theta: f64, r1: f64, r2: f64) -> Result<Self> {
        check_positive("R1", r1)?;
        check_positive("R2", r2)?;
        if !d_ul.is_finite() {
            return Err(Error::Domain(format!("d_ul must be finite, got {d_ul}")));
        }
        if !(0.0..=FRAC_PI_2).contains(&alpha) {
            return Err(Error::Domain(format!("alpha = {alpha} outside [0, pi/2]")));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("theta = {theta} outside [0, pi]")));
        }
        if !(g_ul > 0.0) {
            return Err(Error::Penetration { gap: g_ul });
        }
        Ok(Self {
            d_ul,
            g_ul,
            alpha,
            theta,
            r1,
            r2,
        })
    }

    pub fn d_ul(&self) -> f64 {
        self.d_ul
    }

    /// Unilateral surface gap `d_ul - R1 - R2`.
    pub fn g_ul(&self) -> f64 {
        self.g_ul
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    /// True when the axes count as parallel (`sin(alpha)` below [`PARALLEL_SIN_THRESHOLD`]).
    pub fn is_parallel(&self) -> bool {
        self.alpha.sin() < PARALLEL_SIN_THRESHOLD
    }
}

/// Extracts `(d_ul, alpha, theta)` from a disk (center, unit normal `t1`,
/// radius) and a cylinder (axis point, unit axis `t2`, radius).
pub fn extract_config(
    disk_center: Vec3,
    disk_normal: Vec3,
    r1: f64,
    cyl_origin: Vec3,
    cyl_axis: Vec3,
    r2: f64,
) -> Result<DiskCylinderConfig> {
    check_unit(disk_normal)?;
    let proj = unilateral_projection(disk_center, cyl_origin, cyl_axis)?;
    // atan2 keeps full precision near alpha = 0 and theta = pi/2, where acos
    // of a rounded cosine would not
    let sin_alpha = disk_normal.cross(cyl_axis).norm();
    let cos_alpha = disk_normal.dot(cyl_axis).abs();
    let alpha = sin_alpha.atan2(cos_alpha).clamp(0.0, FRAC_PI_2);
    let sin_theta = disk_normal.cross(proj.normal).norm();
    let cos_theta = disk_normal.dot(proj.normal);
    let theta = sin_theta.atan2(cos_theta).clamp(0.0, PI);
    DiskCylinderConfig::new(proj.distance, alpha, theta, r1, r2)
}

/// Two straight cylinders at bilateral surface gap `g_bl` and mutual angle
/// `alpha`; the slave cylinder (radius `R1`) is truncated to `slave_length`,
/// the master cylinder (radius `R2`) is infinite.
///
/// The master axis runs through the origin along `+x`; the slave axis passes
/// through `(0, 0, d_bl)` along `(cos(alpha), sin(alpha), 0)`, so the bilateral
/// closest points sit at slave arc length `s1 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderPairScene {
    g_bl: f64,
    alpha: f64,
    r1: f64,
    r2: f64,
    slave_length: f64,
}

impl CylinderPairScene {
    pub fn new(g_bl: f64, alpha: f64, r1: f64, r2: f64, slave_length: f64) -> Result<Self> {
        check_positive("R1", r1)?;
        check_positive("R2", r2)?;
        check_positive("L", slave_length)?;
        if !(0.0..=FRAC_PI_2).contains(&alpha) {
            return Err(Error::Domain(format!("alpha = {alpha} outside [0, pi/2]")));
        }
        if !(g_bl > 0.0 && g_bl.is_finite()) {
            return Err(Error::Penetration { gap: g_bl });
        }
        Ok(Self {
            g_bl,
            alpha,
            r1,
            r2,
            slave_length,
        })
    }

    pub fn g_bl(&self) -> f64 {
        self.g_bl
    }

    /// Bilateral inter-axis distance `g_bl + R1 + R2`.
    pub fn d_bl(&self) -> f64 {
        self.g_bl + self.r1 + self.r2
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    pub fn slave_length(&self) -> f64 {
        self.slave_length
    }

    /// `L / R1`.
    pub fn slenderness(&self) -> f64 {
        self.slave_length / self.r1
    }

    /// Same scene with the two radii exchanged.
    pub fn with_swapped_radii(&self) -> Self {
        Self {
            r1: self.r2,
            r2: self.r1,
            ..*self
        }
    }

    pub fn with_gap(&self, g_bl: f64) -> Result<Self> {
        Self::new(g_bl, self.alpha, self.r1, self.r2, self.slave_length)
    }

    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(self.g_bl, alpha, self.r1, self.r2, self.slave_length)
    }

    pub fn master_origin(&self) -> Vec3 {
        Vec3::ZERO
    }

    pub fn master_axis(&self) -> Vec3 {
        Vec3::X
    }

    pub fn slave_axis(&self) -> Vec3 {
        Vec3::new(self.alpha.cos(), self.alpha.sin(), 0.0)
    }

    /// Slave centerline point at arc length `s1` from the bilateral closest point.
    pub fn slave_point(&self, s1: f64) -> Vec3 {
        Vec3::new(0.0, 0.0, self.d_bl()) + self.slave_axis() * s1
    }

    /// Disk-cylinder configuration of the slave cross-section at arc length `s1`.
    pub fn disk_config(&self, s1: f64) -> Result<DiskCylinderConfig> {
        extract_config(
            self.slave_point(s1),
            self.slave_axis(),
            self.r1,
            self.master_origin(),
            self.master_axis(),
            self.r2,
        )
    }
}
