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

//! Closed-form disk-cylinder potential per unit slave length.
//!
//! The squared distance from a disk point `(y1, z1)` (in-plane frame
//! `u1, v1 = t1 x u1`) to the cylinder axis is a quadratic polynomial in the
//! disk coordinates. Expanding the gap around the disk rim point
//! `(y1, z1) = (-R1, 0)` and integrating the point-cylinder law over the disk
//! gives a law of the form
//!
//! ```text
//! pi = rho1 K_m b_y~^-1 a_z~^(m-5) Delta^(9/2-m)
//! ```
//!
//! The options differ in the choice of `u1`:
//!
//! | option | `u1`                                          |
//! |--------|-----------------------------------------------|
//! | A      | bilateral normal `t1 x t2 / |t1 x t2|`        |
//! | B      | unilateral normal projected into the disk     |
//! | C      | unilateral normal as is (exact at `theta = pi/2` only) |
//!
//! `CSimplified` additionally uses `d_ul - R1 ~ R2` and is the compact form
//! `K^_m rho1 sqrt(2 R1 R2 / (R1 cos^2 alpha + R2)) g^(9/2-m)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{DiskCylinderConfig, PARALLEL_SIN_THRESHOLD};
use crate::potential::{halfspace_prefactor, MaterialPair, PowerLaw};

/// Absolute slack on `cos^2(theta) <= sin^2(alpha)`.
pub const CONSISTENCY_SLACK: f64 = 1e-12;

/// Choice of the in-plane expansion direction, see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum LawOption {
    A,
    B,
    C,
    #[default]
    CSimplified,
}

impl LawOption {
    pub const ALL: [LawOption; 4] = [
        LawOption::A,
        LawOption::B,
        LawOption::C,
        LawOption::CSimplified,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawOption::A => "A",
            LawOption::B => "B",
            LawOption::C => "C",
            LawOption::CSimplified => "Csimp",
        }
    }
}

impl fmt::Display for LawOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for LawOption {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LawOption::A),
            "B" | "b" => Ok(LawOption::B),
            "C" | "c" => Ok(LawOption::C),
            "Csimp" | "csimp" | "C_simplified" | "c_simplified" => Ok(LawOption::CSimplified),
            other => Err(Error::Input(format!(
                "unknown option '{other}' (expected A, B, C or Csimp)"
            ))),
        }
    }
}

/// Coefficients of `d_pt-cyl^2 = a_y y^2 + a_z z^2 + a_yz y z + b_y y + b_z z + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolynomialCoefficients {
    pub a_y: f64,
    pub a_z: f64,
    pub a_yz: f64,
    pub b_y: f64,
    pub b_z: f64,
    pub c: f64,
}

/// Auxiliary variables of the expanded gap around the disk rim point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxVariables {
    pub beta: f64,
    pub b_y_t: f64,
    pub b_z_t: f64,
    pub a_z_t: f64,
    pub c_t: f64,
    pub delta: f64,
}

struct Trig {
    sin_a: f64,
    cos_a: f64,
    sin_t: f64,
    cos_t: f64,
}

impl Trig {
    fn of(config: &DiskCylinderConfig) -> Self {
        let (sin_a, cos_a) = config.alpha().sin_cos();
        let (sin_t, cos_t) = config.theta().sin_cos();
        Self {
            sin_a,
            cos_a,
            sin_t,
            cos_t,
        }
    }

    /// `sin^2(alpha) - cos^2(theta)`, clamped to zero within the slack.
    fn consistency_margin(&self) -> Result<f64> {
        let sin2_alpha = self.sin_a * self.sin_a;
        let cos2_theta = self.cos_t * self.cos_t;
        let margin = sin2_alpha - cos2_theta;
        if margin < -CONSISTENCY_SLACK {
            return Err(Error::InconsistentConfiguration {
                cos2_theta,
                sin2_alpha,
            });
        }
        Ok(margin.max(0.0))
    }
}

fn check_option_a(trig: &Trig) -> Result<f64> {
    if trig.sin_a < PARALLEL_SIN_THRESHOLD {
        return Err(Error::ParallelSingularity {
            sin_alpha: trig.sin_a,
        });
    }
    trig.consistency_margin()
}

fn check_option_b(trig: &Trig) -> Result<f64> {
    if trig.sin_t < PARALLEL_SIN_THRESHOLD {
        return Err(Error::ProjectionSingularity {
            sin_theta: trig.sin_t,
        });
    }
    trig.consistency_margin()
}

/// Polynomial coefficients for options A and B.
pub fn coefficients(
    config: &DiskCylinderConfig,
    option: LawOption,
) -> Result<PolynomialCoefficients> {
    let t = Trig::of(config);
    let d = config.d_ul();
    match option {
        LawOption::A => {
            let margin = check_option_a(&t)?;
            Ok(PolynomialCoefficients {
                a_y: 1.0,
                a_z: t.cos_a * t.cos_a,
                a_yz: 0.0,
                b_y: 2.0 * d * margin.sqrt() / t.sin_a,
                b_z: 2.0 * d * t.cos_t * t.cos_a / t.sin_a,
                c: d * d,
            })
        }
        LawOption::B => {
            let margin = check_option_b(&t)?;
            let sin2_t = t.sin_t * t.sin_t;
            Ok(PolynomialCoefficients {
                a_y: 1.0 - t.cos_a * t.cos_a * t.cos_t * t.cos_t / sin2_t,
                a_z: t.cos_a * t.cos_a / sin2_t,
                a_yz: -2.0 * t.cos_a * t.cos_t * margin.sqrt() / sin2_t,
                b_y: 2.0 * d * t.sin_t,
                b_z: 0.0,
                c: d * d,
            })
        }
        other => Err(Error::Unsupported(format!(
            "polynomial coefficients are defined for options A and B, not {other}"
        ))),
    }
}

/// Auxiliary variables of the chosen option.
///
/// `c~ = beta - R2` is evaluated as `(beta^2 - R2^2) / (beta + R2)` with the
/// numerator expanded around the gap, which keeps full relative precision for
/// `g_ul << R`.
pub fn aux_variables(config: &DiskCylinderConfig, option: LawOption) -> Result<AuxVariables> {
    let t = Trig::of(config);
    let (d, r1, r2, g) = (config.d_ul(), config.r1(), config.r2(), config.g_ul());
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    let aux = match option {
        LawOption::A => {
            let margin = check_option_a(&t)?;
            let s = margin.sqrt() / t.sin_a;
            // 1 - s = (cos^2 theta / sin^2 alpha) / (1 + s)
            let one_minus_s = (t.cos_t * t.cos_t / (t.sin_a * t.sin_a)) / (1.0 + s);
            let excess = g * (g + 2.0 * r2) + 2.0 * r1 * d * one_minus_s;
            let beta = (excess + r2 * r2).sqrt();
            let b_y_t = (d * s - r1) / beta;
            let b_z_t = d * t.cos_t * t.cos_a / (t.sin_a * beta);
            let a_z_t = b_y_t / (2.0 * r1) + t.cos_a * t.cos_a / (2.0 * beta)
                - b_z_t * b_z_t / (2.0 * beta);
            finish(beta, b_y_t, b_z_t, a_z_t, excess / (beta + r2))
        }
        LawOption::B => {
            let margin = check_option_b(&t)?;
            let sin2_t = t.sin_t * t.sin_t;
            let cos2_t = t.cos_t * t.cos_t;
            let cos2_a = t.cos_a * t.cos_a;
            let q = 1.0 - cos2_a * cos2_t / sin2_t;
            // 1 - sin theta = cos^2 theta / (1 + sin theta)
            let excess = g * (g + 2.0 * r2) + 2.0 * r1 * d * cos2_t / (1.0 + t.sin_t)
                - r1 * r1 * cos2_a * cos2_t / sin2_t;
            if !(excess + r2 * r2 > 0.0) {
                return Err(Error::Domain(format!(
                    "beta^2 = {} is not positive",
                    excess + r2 * r2
                )));
            }
            let beta = (excess + r2 * r2).sqrt();
            let b_y_t = (d * t.sin_t - q * r1) / beta;
            let b_z_t = t.cos_a * t.cos_t / sin2_t * margin.sqrt() * r1 / beta;
            let a_z_t =
                b_y_t / (2.0 * r1) + cos2_a / (2.0 * beta * sin2_t) - b_z_t * b_z_t / (2.0 * beta);
            finish(beta, b_y_t, b_z_t, a_z_t, excess / (beta + r2))
        }
        LawOption::C => {
            let beta = d - r1;
            let a_z_t = 1.0 / (2.0 * r1) + t.cos_a * t.cos_a / (2.0 * beta);
            finish(beta, 1.0, 0.0, a_z_t, g)
        }
        LawOption::CSimplified => {
            let a_z_t = 1.0 / (2.0 * r1) + t.cos_a * t.cos_a / (2.0 * r2);
            finish(r2, 1.0, 0.0, a_z_t, g)
        }
    }?;
    Ok(aux)
}

fn finish(beta: f64, b_y_t: f64, b_z_t: f64, a_z_t: f64, c_t: f64) -> Result<AuxVariables> {
    if !(b_y_t > 0.0) {
        return Err(Error::DivergentIntegral { b_y: b_y_t });
    }
    let delta = 4.0 * a_z_t * c_t - b_z_t * b_z_t;
    if !(delta > 0.0) {
        return Err(Error::NonPositiveDiscriminant { delta });
    }
    Ok(AuxVariables {
        beta,
        b_y_t,
        b_z_t,
        a_z_t,
        c_t,
        delta,
    })
}

/// `pi prod_{j=1}^{n} (j - 1/2) / j`, i.e. `sqrt(pi) Gamma(n + 1/2) / Gamma(n + 1)`.
fn half_gamma_ratio(n: u32) -> f64 {
    (1..=n).fold(PI, |acc, j| acc * (j as f64 - 0.5) / j as f64)
}

/// Prefactor `K_m` of the general law, in units of `k_m rho2`.
///
/// `K_m = K_{m,pt-hs} / (m-4) sqrt(pi) Gamma(m-9/2) / Gamma(m-4) 2^(2m-9)`;
/// for `m = 6` and `m = 12` this is `pi^2 k rho2 / 3` and `286 pi^2 k rho2 / 15`.
pub fn prefactor_k(law: PowerLaw, rho2: f64) -> f64 {
    let k = law.prefactor();
    match law.exponent() {
        6 => PI * PI * k * rho2 / 3.0,
        12 => 286.0 * PI * PI * k * rho2 / 15.0,
        m => generic_prefactor_k(m, k, rho2),
    }
}

pub(crate) fn generic_prefactor_k(m: u32, k: f64, rho2: f64) -> f64 {
    let law = PowerLaw::new(m, k).expect("m >= 6 checked by PowerLaw");
    let mf = m as f64;
    halfspace_prefactor(law, rho2) / (mf - 4.0)
        * half_gamma_ratio(m - 5)
        * 2f64.powi(2 * m as i32 - 9)
}

/// `K^_m = 4^(9/2 - m) K_m`; `pi^2 k rho2 / 24` for `m = 6`.
pub fn prefactor_k_hat(law: PowerLaw, rho2: f64) -> f64 {
    2f64.powi(9 - 2 * law.exponent() as i32) * prefactor_k(law, rho2)
}

/// Disk-cylinder potential per unit slave length for one power law.
pub fn disk_cylinder_potential(
    config: &DiskCylinderConfig,
    option: LawOption,
    law: PowerLaw,
    materials: &MaterialPair,
) -> Result<f64> {
    let g = config.g_ul();
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    let m = law.exponent() as i32;
    let exp = 4.5 - law.exponent() as f64;
    let rho1 = materials.rho1();
    let value = match option {
        LawOption::CSimplified => {
            let (r1, r2) = (config.r1(), config.r2());
            let cos2_a = config.alpha().cos().powi(2);
            prefactor_k_hat(law, materials.rho2())
                * rho1
                * (2.0 * r1 * r2 / (r1 * cos2_a + r2)).sqrt()
                * g.powf(exp)
        }
        LawOption::C => {
            let aux = aux_variables(config, option)?;
            rho1 * prefactor_k(law, materials.rho2()) / aux.a_z_t.sqrt() * (4.0 * g).powf(exp)
        }
        LawOption::A | LawOption::B => {
            let aux = aux_variables(config, option)?;
            rho1 * prefactor_k(law, materials.rho2()) / aux.b_y_t
                * aux.a_z_t.powi(m - 5)
                * aux.delta.powf(exp)
        }
    };
    Ok(value)
}

/// Sum of [`disk_cylinder_potential`] over all laws of `materials`.
pub fn disk_cylinder_potential_total(
    config: &DiskCylinderConfig,
    option: LawOption,
    materials: &MaterialPair,
) -> Result<f64> {
    materials.laws().iter().try_fold(0.0, |acc, &law| {
        Ok(acc + disk_cylinder_potential(config, option, law, materials)?)
    })
}
