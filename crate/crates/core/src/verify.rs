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

//! Acceptance criteria as runnable checks.
//!
//! Every criterion produces one or more [`Check`]s, each a measured number
//! against a pinned expectation. The `tight` profile divides every tolerance
//! by 100 (ranges shrink about their midpoint).

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use rand::rngs::ChaCha8Rng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;

use crate::disk_cylinder::{
    aux_variables, coefficients, disk_cylinder_potential, generic_prefactor_k, prefactor_k,
    prefactor_k_hat, LawOption, PolynomialCoefficients,
};
use crate::error::{Error, Result};
use crate::geometry::{
    extract_config, unilateral_projection, CylinderPairScene, DiskCylinderConfig, Vec3,
};
use crate::oracles::{
    brute_force_point_cylinder, log_grid, loglog_slope, ref_pot_two_cylinders_3d, BruteForceScheme,
    ReferenceScheme,
};
use crate::potential::{
    hamaker_constant, pot_point_cylinder_series, pot_point_halfspace,
    prefactor_ratio_cylinder_vs_halfspace, MaterialPair, PowerLaw, SeriesTerms,
};
use crate::sbip::{
    analytic_reference_parallel, analytic_reference_skew_vdw, axial_rule, default_axial,
    two_cylinder_potential,
};
use crate::sweep::{sweep_to_csv, References, SweepMode, SweepRequest};

/// Pinned tolerances of the default profile.
pub mod tolerances {
    pub const PREFACTOR_REL: f64 = 1e-12;
    pub const PARALLEL_IDENTITY_REL: f64 = 1e-12;
    pub const SLOPE_PARALLEL: (f64, f64) = (-1.5, 0.02);
    pub const SLOPE_SKEW: (f64, f64) = (-1.0, 0.03);
    pub const ANGLE_SPREAD: f64 = 0.05;
    pub const ANGLE_SLOPE: (f64, f64) = (-1.0, 0.05);
    pub const ASYMPTOTE_REL: f64 = 0.03;
    pub const OPTION_C_RATIO: (f64, f64) = (1.35, 1.65);
    pub const OPTION_C_SPREAD: f64 = 0.03;
    pub const PARALLEL_ERR_SMALL: (f64, f64) = (0.015, 0.035);
    pub const PARALLEL_ERR_LARGE: (f64, f64) = (0.30, 0.48);
    pub const ORACLE_HALFSPACE_REL: f64 = 0.02;
    pub const ORACLE_SERIES_FACTOR: (f64, f64) = (2.2, 2.5);
    pub const PROPERTY_REL: f64 = 1e-10;
    pub const CONVERGENCE_REL: f64 = 1e-3;
}

use tolerances as tol;

/// Tolerance preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    #[default]
    Default,
    /// Every tolerance divided by 100.
    Tight,
}

impl Profile {
    fn divisor(self) -> f64 {
        match self {
            Profile::Default => 1.0,
            Profile::Tight => 100.0,
        }
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Profile::Default),
            "tight" => Ok(Profile::Tight),
            other => Err(Error::Input(format!(
                "unknown profile '{other}' (expected default or tight)"
            ))),
        }
    }
}

/// What a measured value must satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expect {
    AtMost(f64),
    Range(f64, f64),
    Near(f64, f64),
    /// Exact boolean outcome, measured as 1 (true) or 0 (false).
    True,
}

impl Expect {
    fn scaled(self, divisor: f64) -> Self {
        match self {
            Expect::AtMost(x) => Expect::AtMost(x / divisor),
            Expect::Range(lo, hi) => {
                let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo) / divisor);
                Expect::Range(mid - half, mid + half)
            }
            Expect::Near(c, t) => Expect::Near(c, t / divisor),
            Expect::True => Expect::True,
        }
    }

    fn holds(self, v: f64) -> bool {
        match self {
            Expect::AtMost(x) => v <= x,
            Expect::Range(lo, hi) => (lo..=hi).contains(&v),
            Expect::Near(c, t) => (v - c).abs() <= t,
            Expect::True => v == 1.0,
        }
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::AtMost(x) => write!(f, "<= {x:.3e}"),
            Expect::Range(lo, hi) => write!(f, "in [{lo:.6}, {hi:.6}]"),
            Expect::Near(c, t) => write!(f, "{c} +/- {t:.3e}"),
            Expect::True => write!(f, "true"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub measured: f64,
    pub expect: Expect,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<Check>,
    /// Set when the criterion could not be evaluated at all.
    pub error: Option<String>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {} {status}: {}", self.id, self.title)?;
        if let Some(e) = &self.error {
            write!(f, "\n    error: {e}")?;
        }
        for c in &self.checks {
            let s = if c.passed { "ok  " } else { "FAIL" };
            write!(
                f,
                "\n    {s} {}: measured {:.6e}, expected {}",
                c.label, c.measured, c.expect
            )?;
        }
        Ok(())
    }
}

/// Criterion ids and titles.
pub const CRITERIA: [(u32, &str); 9] = [
    (1, "prefactor identities"),
    (2, "parallel identity"),
    (3, "separation scaling"),
    (4, "angle scaling"),
    (5, "asymptote match of options A and B"),
    (6, "option C offset"),
    (7, "parallel-case error vs 3D numerical reference"),
    (8, "oracle consistency"),
    (9, "property suites"),
];

struct Recorder {
    divisor: f64,
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, label: impl Into<String>, measured: f64, expect: Expect) {
        let expect = expect.scaled(self.divisor);
        let passed = measured.is_finite() && expect.holds(measured);
        self.checks.push(Check {
            label: label.into(),
            measured,
            expect,
            passed,
        });
    }
}

/// Runs criterion `id` (1 to 9).
pub fn run_criterion(id: u32, profile: Profile) -> Result<CriterionReport> {
    let title = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Input(format!("no criterion {id}; valid ids are 1 to 9")))?;
    let mut rec = Recorder {
        divisor: profile.divisor(),
        checks: Vec::new(),
    };
    let outcome = match id {
        1 => prefactor_identities(&mut rec),
        2 => parallel_identity(&mut rec),
        3 => separation_scaling(&mut rec),
        4 => angle_scaling(&mut rec),
        5 => asymptote_match(&mut rec),
        6 => option_c_offset(&mut rec),
        7 => parallel_error(&mut rec),
        8 => oracle_consistency(&mut rec),
        _ => property_suites(&mut rec),
    };
    Ok(CriterionReport {
        id,
        title,
        checks: rec.checks,
        error: outcome.err().map(|e| e.to_string()),
    })
}

/// Runs all criteria in order.
pub fn run_all(profile: Profile) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|(id, _)| run_criterion(*id, profile).expect("registered id"))
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn unit_materials() -> MaterialPair {
    MaterialPair::densities(1.0, 1.0).expect("valid densities")
}

fn vdw() -> PowerLaw {
    PowerLaw::vdw(-1.0).expect("valid law")
}

/// Reference scenario: unit radii, slave length 20.
fn scene(g: f64, alpha: f64) -> Result<CylinderPairScene> {
    CylinderPairScene::new(g, alpha, 1.0, 1.0, 20.0)
}

fn total(g: f64, alpha: f64, option: LawOption) -> Result<f64> {
    let s = scene(g, alpha)?;
    Ok(
        two_cylinder_potential(&s, option, vdw(), &unit_materials(), &default_axial(&s))?
            .total_potential,
    )
}

fn skew_reference(g: f64, alpha: f64) -> Result<f64> {
    analytic_reference_skew_vdw(g, alpha, 1.0, 1.0, hamaker_constant(-1.0, 1.0, 1.0))
}

fn prefactor_identities(rec: &mut Recorder) -> Result<()> {
    let at = |m| PowerLaw::new(m, 1.0);
    let pi2 = PI * PI;
    let cases = [
        ("K_6", prefactor_k(at(6)?, 1.0), pi2 / 3.0),
        ("K_12", prefactor_k(at(12)?, 1.0), 286.0 * pi2 / 15.0),
        (
            "K_6 generic form",
            generic_prefactor_k(6, 1.0, 1.0),
            pi2 / 3.0,
        ),
        (
            "K_12 generic form",
            generic_prefactor_k(12, 1.0, 1.0),
            286.0 * pi2 / 15.0,
        ),
        ("K^_6", prefactor_k_hat(at(6)?, 1.0), pi2 / 24.0),
        (
            "K^_12",
            prefactor_k_hat(at(12)?, 1.0),
            143.0 * pi2 / (15.0 * 16384.0),
        ),
        (
            "K_6,pt-cyl / K_6,pt-hs",
            prefactor_ratio_cylinder_vs_halfspace(6)?,
            0.75 * PI,
        ),
    ];
    for (label, value, expected) in cases {
        rec.check(
            format!("{label} relative error"),
            rel(value, expected),
            Expect::AtMost(tol::PREFACTOR_REL),
        );
    }
    Ok(())
}

fn parallel_identity(rec: &mut Recorder) -> Result<()> {
    let materials = unit_materials();
    for m in [6, 12] {
        let law = PowerLaw::new(m, -1.0)?;
        for (r1, r2) in [(1.0, 1.0), (0.5, 2.0)] {
            let mut worst: f64 = 0.0;
            for g in log_grid(1e-4, 1.0, 20) {
                let config = DiskCylinderConfig::from_gap(g, 0.0, FRAC_PI_2, r1, r2)?;
                let simplified =
                    disk_cylinder_potential(&config, LawOption::CSimplified, law, &materials)?;
                let reference = analytic_reference_parallel(g, r1, r2, law, &materials)?;
                worst = worst.max(rel(simplified, reference));
            }
            rec.check(
                format!("m = {m}, R1 = {r1}, R2 = {r2}: max relative difference"),
                worst,
                Expect::AtMost(tol::PARALLEL_IDENTITY_REL),
            );
        }
    }
    Ok(())
}

fn slope_of(alpha: f64, option: LawOption, grid: &[f64]) -> Result<f64> {
    let values: Vec<f64> = grid
        .par_iter()
        .map(|&g| total(g, alpha, option))
        .collect::<Result<_>>()?;
    Ok(loglog_slope(grid, &values)?.slope)
}

const SKEW_ANGLES: [(&str, f64); 5] = [
    ("pi/64", PI / 64.0),
    ("pi/16", PI / 16.0),
    ("pi/8", PI / 8.0),
    ("pi/4", PI / 4.0),
    ("pi/2", FRAC_PI_2),
];

fn separation_scaling(rec: &mut Recorder) -> Result<()> {
    let grid = log_grid(1e-4, 1e-2, 11);
    for option in [LawOption::B, LawOption::C, LawOption::CSimplified] {
        let (target, t) = tol::SLOPE_PARALLEL;
        rec.check(
            format!("alpha = 0, option {option}: slope"),
            slope_of(0.0, option, &grid)?,
            Expect::Near(target, t),
        );
    }
    for (name, alpha) in SKEW_ANGLES {
        for option in LawOption::ALL {
            let (target, t) = tol::SLOPE_SKEW;
            rec.check(
                format!("alpha = {name}, option {option}: slope"),
                slope_of(alpha, option, &grid)?,
                Expect::Near(target, t),
            );
        }
    }
    Ok(())
}

fn angle_scaling(rec: &mut Recorder) -> Result<()> {
    let sines = log_grid((PI / 16.0).sin(), 1.0, 9);
    let alphas: Vec<f64> = sines.iter().map(|s| s.min(1.0).asin()).collect();
    for option in [LawOption::A, LawOption::B] {
        let values: Vec<f64> = alphas
            .par_iter()
            .map(|&a| total(1e-3, a, option))
            .collect::<Result<_>>()?;
        let scaled: Vec<f64> = values
            .iter()
            .zip(&sines)
            .map(|(v, s)| v.abs() * s)
            .collect();
        let max = scaled.iter().cloned().fold(f64::MIN, f64::max);
        let min = scaled.iter().cloned().fold(f64::MAX, f64::min);
        rec.check(
            format!("option {option}: spread of |Pi| sin(alpha)"),
            max / min - 1.0,
            Expect::AtMost(tol::ANGLE_SPREAD),
        );
        let (target, t) = tol::ANGLE_SLOPE;
        rec.check(
            format!("option {option}: slope of log|Pi| vs log sin(alpha)"),
            loglog_slope(&sines, &values)?.slope,
            Expect::Near(target, t),
        );
    }
    Ok(())
}

fn asymptote_match(rec: &mut Recorder) -> Result<()> {
    for option in [LawOption::A, LawOption::B] {
        for (name, alpha) in &SKEW_ANGLES[1..] {
            let value = total(1e-3, *alpha, option)?;
            rec.check(
                format!("option {option}, alpha = {name}: relative deviation"),
                rel(value, skew_reference(1e-3, *alpha)?),
                Expect::AtMost(tol::ASYMPTOTE_REL),
            );
        }
    }
    Ok(())
}

fn option_c_offset(rec: &mut Recorder) -> Result<()> {
    let grid = log_grid(1e-4, 1e-3, 5);
    let mut ratios = Vec::new();
    for &g in &grid {
        let ratio = skew_reference(g, FRAC_PI_2)?.abs()
            / total(g, FRAC_PI_2, LawOption::CSimplified)?.abs();
        let (lo, hi) = tol::OPTION_C_RATIO;
        rec.check(
            format!("g/R = {g:.1e}: |skew law| / |option Csimp|"),
            ratio,
            Expect::Range(lo, hi),
        );
        ratios.push(ratio);
    }
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    rec.check(
        "ratio spread over the range",
        max / min - 1.0,
        Expect::AtMost(tol::OPTION_C_SPREAD),
    );
    Ok(())
}

fn parallel_error(rec: &mut Recorder) -> Result<()> {
    let bands = [
        (0.1, tol::PARALLEL_ERR_SMALL),
        (1.0, tol::PARALLEL_ERR_LARGE),
    ];
    for (g, (lo, hi)) in bands {
        let s = scene(g, 0.0)?;
        let numeric =
            ref_pot_two_cylinders_3d(&s, vdw(), &unit_materials(), &ReferenceScheme::default())?;
        let value = total(g, 0.0, LawOption::CSimplified)?;
        rec.check(
            format!("g/R = {g}: relative error of option Csimp"),
            rel(value, numeric),
            Expect::Range(lo, hi),
        );
    }
    Ok(())
}

fn oracle_consistency(rec: &mut Recorder) -> Result<()> {
    let law = PowerLaw::vdw(1.0)?;
    let g = 1e-3;
    let brute = brute_force_point_cylinder(g, 1.0, law, 1.0, &BruteForceScheme::default())?;
    let halfspace = pot_point_halfspace(g, law, 1.0)?;
    let series = pot_point_cylinder_series(g, 1.0, law, 1.0, SeriesTerms::Leading)?;
    rec.check(
        "brute force vs point-half-space: relative deviation",
        rel(brute, halfspace),
        Expect::AtMost(tol::ORACLE_HALFSPACE_REL),
    );
    let (lo, hi) = tol::ORACLE_SERIES_FACTOR;
    rec.check(
        "series leading term / brute force",
        series / brute,
        Expect::Range(lo, hi),
    );
    Ok(())
}

fn property_suites(rec: &mut Recorder) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let worst = coefficient_equivalence(&mut rng, 1000)?;
    rec.check(
        "coefficients vs vector form (1000 configs): max deviation",
        worst,
        Expect::AtMost(tol::PROPERTY_REL),
    );
    let worst = right_angle_equivalence(&mut rng, 1000)?;
    rec.check(
        "options A, B, C at theta = pi/2 (1000 configs): max relative difference",
        worst,
        Expect::AtMost(tol::PROPERTY_REL),
    );
    for (option, failures, valid) in discriminant_positivity(&mut rng, 10_000)? {
        rec.check(
            format!(
                "Delta <= 0 for option {option} ({valid} configs with preconditions and b_y > 0)"
            ),
            failures as f64,
            Expect::AtMost(0.0),
        );
    }
    rec.check(
        "quadrature refinement doubling: max relative change",
        quadrature_convergence()?,
        Expect::AtMost(tol::CONVERGENCE_REL),
    );
    let identical = csv_determinism()?;
    rec.check(
        "CSV reruns byte-identical",
        if identical { 1.0 } else { 0.0 },
        Expect::True,
    );
    Ok(())
}

fn random_unit(rng: &mut ChaCha8Rng) -> Vec3 {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    Vec3::new(r * phi.cos(), r * phi.sin(), z)
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..=hi.ln()).exp()
}

/// Coefficients evaluated directly from the vector definitions, for the
/// in-plane direction `u1` of option A or B.
pub fn coefficients_from_vectors(
    disk_center: Vec3,
    t1: Vec3,
    cyl_origin: Vec3,
    t2: Vec3,
    option: LawOption,
) -> Result<PolynomialCoefficients> {
    let proj = unilateral_projection(disk_center, cyl_origin, t2)?;
    let n_ul = proj.normal;
    let d = proj.distance;
    let u1 = match option {
        LawOption::A => {
            let n_bl = t1
                .cross(t2)
                .normalized()
                .ok_or(Error::ParallelSingularity { sin_alpha: 0.0 })?;
            if n_bl.dot(n_ul) < 0.0 {
                -n_bl
            } else {
                n_bl
            }
        }
        LawOption::B => (n_ul - t1 * t1.dot(n_ul))
            .normalized()
            .ok_or(Error::ProjectionSingularity { sin_theta: 0.0 })?,
        other => {
            return Err(Error::Unsupported(format!(
                "vector coefficients for option {other}"
            )))
        }
    };
    let u_t2 = u1.dot(t2);
    let t1_u_t2 = t1.dot(u1.cross(t2));
    Ok(PolynomialCoefficients {
        a_y: 1.0 - u_t2 * u_t2,
        a_z: 1.0 - t1_u_t2 * t1_u_t2,
        a_yz: -2.0 * u_t2 * t1_u_t2,
        b_y: 2.0 * d * n_ul.dot(u1),
        b_z: 2.0 * d * t1.dot(u1.cross(n_ul)),
        c: d * d,
    })
}

/// Largest scaled deviation between angle-form and vector-form coefficients.
/// `a_yz` and `b_z` enter the potential squared and are compared up to sign.
fn coefficient_equivalence(rng: &mut ChaCha8Rng, samples: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < samples {
        let (r1, r2) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
        let t1 = random_unit(rng);
        let t2 = random_unit(rng);
        let origin = Vec3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let normal = t2.cross(random_unit(rng)).normalized();
        let Some(normal) = normal else { continue };
        let d = r1 + r2 + log_uniform(rng, 1e-4, 1.0);
        let center = origin + t2 * rng.random_range(-3.0..3.0) + normal * d;
        let config = extract_config(center, t1, r1, origin, t2, r2)?;
        for option in [LawOption::A, LawOption::B] {
            let Ok(angle_form) = coefficients(&config, option) else {
                continue;
            };
            let vector_form = coefficients_from_vectors(center, t1, origin, t2, option)?;
            let scale_b = 2.0 * config.d_ul();
            let devs = [
                (angle_form.a_y - vector_form.a_y).abs(),
                (angle_form.a_z - vector_form.a_z).abs(),
                (angle_form.a_yz.abs() - vector_form.a_yz.abs()).abs(),
                (angle_form.b_y - vector_form.b_y).abs() / scale_b,
                (angle_form.b_z.abs() - vector_form.b_z.abs()).abs() / scale_b,
                rel(angle_form.c, vector_form.c),
            ];
            worst = devs.into_iter().fold(worst, f64::max);
        }
        done += 1;
    }
    Ok(worst)
}

fn right_angle_equivalence(rng: &mut ChaCha8Rng, samples: usize) -> Result<f64> {
    let materials = unit_materials();
    let mut worst: f64 = 0.0;
    for i in 0..samples {
        let law = PowerLaw::new(if i % 2 == 0 { 6 } else { 12 }, -1.0)?;
        let alpha = rng.random_range(1e-6..=FRAC_PI_2);
        let g = log_uniform(rng, 1e-4, 1.0);
        let (r1, r2) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
        let config = DiskCylinderConfig::from_gap(g, alpha, FRAC_PI_2, r1, r2)?;
        let c = disk_cylinder_potential(&config, LawOption::C, law, &materials)?;
        for option in [LawOption::A, LawOption::B] {
            match disk_cylinder_potential(&config, option, law, &materials) {
                Ok(v) => worst = worst.max(rel(v, c)),
                Err(Error::ParallelSingularity { .. } | Error::ProjectionSingularity { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(worst)
}

/// Per option: `(option, configs with Delta <= 0, configs evaluated)`, over
/// random gaps, mutual angles and consistent `theta`. Configurations outside
/// an option's angle domain or with a non-positive `b_y` are not counted.
fn discriminant_positivity(
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<Vec<(LawOption, usize, usize)>> {
    let mut counts: Vec<(LawOption, usize, usize)> =
        LawOption::ALL.iter().map(|&o| (o, 0, 0)).collect();
    for _ in 0..samples {
        let g = log_uniform(rng, 1e-4, 1.0);
        let alpha = rng.random_range(0.0..=FRAC_PI_2);
        let vartheta = rng.random_range(0.0..=PI);
        let theta = (alpha.sin() * vartheta.sin()).clamp(-1.0, 1.0).acos();
        let config = DiskCylinderConfig::from_gap(g, alpha, theta, 1.0, 1.0)?;
        for entry in counts.iter_mut() {
            match aux_variables(&config, entry.0) {
                Ok(_) => entry.2 += 1,
                Err(Error::NonPositiveDiscriminant { .. }) => {
                    entry.1 += 1;
                    entry.2 += 1;
                }
                Err(
                    Error::ParallelSingularity { .. }
                    | Error::ProjectionSingularity { .. }
                    | Error::InconsistentConfiguration { .. }
                    | Error::DivergentIntegral { .. },
                ) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(counts)
}

/// Largest relative change of the numerical integrals when every rule is refined.
fn quadrature_convergence() -> Result<f64> {
    let materials = unit_materials();
    let mut worst: f64 = 0.0;
    for (alpha, options) in [
        (0.0, &[LawOption::B, LawOption::CSimplified][..]),
        (PI / 16.0, &LawOption::ALL[..]),
        (FRAC_PI_2, &LawOption::ALL[..]),
    ] {
        for g in [1e-4, 1e-3, 1e-2] {
            let s = scene(g, alpha)?;
            for &option in options {
                let coarse =
                    two_cylinder_potential(&s, option, vdw(), &materials, &axial_rule(&s, 1.0))?;
                let fine =
                    two_cylinder_potential(&s, option, vdw(), &materials, &axial_rule(&s, 2.0))?;
                worst = worst.max(rel(coarse.total_potential, fine.total_potential));
            }
        }
    }
    let scheme = ReferenceScheme::default();
    for (g, alpha) in [(0.1, 0.0), (1.0, 0.0), (1e-3, FRAC_PI_2)] {
        let s = scene(g, alpha)?;
        let coarse = ref_pot_two_cylinders_3d(&s, vdw(), &materials, &scheme)?;
        let fine = ref_pot_two_cylinders_3d(&s, vdw(), &materials, &scheme.refined())?;
        worst = worst.max(rel(coarse, fine));
    }
    let brute = BruteForceScheme::default();
    let law = PowerLaw::vdw(1.0)?;
    let coarse = brute_force_point_cylinder(1e-3, 1.0, law, 1.0, &brute)?;
    let fine = brute_force_point_cylinder(1e-3, 1.0, law, 1.0, &brute.refined())?;
    Ok(worst.max(rel(coarse, fine)))
}

fn csv_determinism() -> Result<bool> {
    let request = SweepRequest {
        mode: SweepMode::Separation,
        fixed_value: PI / 4.0,
        grid: vec![1e-2, 1e-1, 1.0],
        options: LawOption::ALL.to_vec(),
        law: vdw(),
        materials: unit_materials(),
        scene: scene(1e-3, 0.0)?,
        references: References {
            analytic: true,
            numeric3d: true,
        },
        reference_scheme: ReferenceScheme::default(),
    };
    Ok(sweep_to_csv(&request)? == sweep_to_csv(&request)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_profile_shrinks_ranges_about_midpoint() {
        assert_eq!(
            Expect::Range(1.0, 3.0).scaled(100.0),
            Expect::Range(1.99, 2.01)
        );
        assert_eq!(Expect::AtMost(0.05).scaled(100.0), Expect::AtMost(0.0005));
        assert_eq!(
            Expect::Near(-1.5, 0.02).scaled(100.0),
            Expect::Near(-1.5, 0.0002)
        );
    }

    #[test]
    fn unknown_criterion_is_input_error() {
        assert!(matches!(
            run_criterion(10, Profile::Default),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn cheap_criteria_pass() {
        for id in [1, 2] {
            let report = run_criterion(id, Profile::Default).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}
