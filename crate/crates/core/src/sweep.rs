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

//! Parameter sweeps over separation or angle, written as CSV.
//!
//! Per-point failures do not abort a sweep: the affected cells stay empty and
//! the `error_code` column names the reason. A reference that is unavailable
//! at a point is reported as `<reference>:<code>`; codes are joined with `;`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;

use rayon::prelude::*;

use crate::disk_cylinder::LawOption;
use crate::error::{Error, Result};
use crate::geometry::CylinderPairScene;
use crate::oracles::{log_grid, ref_pot_two_cylinders_3d, ReferenceScheme};
use crate::potential::{MaterialPair, PowerLaw};
use crate::sbip::{analytic_reference_total, default_axial, two_cylinder_potential};

pub const CSV_HEADER: [&str; 10] = [
    "sweep_value",
    "option",
    "g_over_R",
    "alpha_rad",
    "potential",
    "ref_numeric3d",
    "ref_analytic",
    "rel_err_numeric",
    "rel_err_analytic",
    "error_code",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Grid over `g_bl / R1` at fixed `alpha`.
    Separation,
    /// Grid over `alpha` at fixed `g_bl / R1`.
    Angle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct References {
    pub analytic: bool,
    pub numeric3d: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRequest {
    pub mode: SweepMode,
    /// `alpha` for separation sweeps, `g_bl / R1` for angle sweeps.
    pub fixed_value: f64,
    pub grid: Vec<f64>,
    pub options: Vec<LawOption>,
    pub law: PowerLaw,
    pub materials: MaterialPair,
    /// Radii and slave length are taken from here; gap and angle come from the grid.
    pub scene: CylinderPairScene,
    pub references: References,
    pub reference_scheme: ReferenceScheme,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub sweep_value: f64,
    pub option: LawOption,
    pub g_over_r: f64,
    pub alpha: f64,
    pub potential: Option<f64>,
    pub ref_numeric3d: Option<f64>,
    pub ref_analytic: Option<f64>,
    pub rel_err_numeric: Option<f64>,
    pub rel_err_analytic: Option<f64>,
    pub error_code: String,
}

/// Separations `1e-4 ... 1e1`, 25 log-spaced points.
pub fn default_separation_grid() -> Vec<f64> {
    log_grid(1e-4, 1e1, 25)
}

/// `{0, pi/64, pi/16, pi/8, pi/4, pi/2}` merged with 32 angles whose sines are
/// log-spaced from `sin(pi/64)` to 1.
pub fn default_angle_grid() -> Vec<f64> {
    let mut grid = vec![0.0, PI / 64.0, PI / 16.0, PI / 8.0, PI / 4.0, FRAC_PI_2];
    grid.extend(
        log_grid((PI / 64.0).sin(), 1.0, 32)
            .into_iter()
            .map(|s| s.min(1.0).asin()),
    );
    grid.sort_by(f64::total_cmp);
    grid.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    grid
}

impl SweepRequest {
    fn validate(&self) -> Result<()> {
        match self.mode {
            SweepMode::Separation => {
                if self.grid.iter().any(|g| !(*g > 0.0 && g.is_finite())) {
                    return Err(Error::Input(
                        "separation grid values must be positive".into(),
                    ));
                }
                if self.grid.windows(2).any(|w| !(w[0] < w[1])) {
                    return Err(Error::Input(
                        "separation grid must be strictly increasing".into(),
                    ));
                }
                if !(0.0..=FRAC_PI_2).contains(&self.fixed_value) {
                    return Err(Error::Input(format!(
                        "alpha = {} outside [0, pi/2]",
                        self.fixed_value
                    )));
                }
            }
            SweepMode::Angle => {
                if self.grid.iter().any(|a| !(0.0..=FRAC_PI_2).contains(a)) {
                    return Err(Error::Input(
                        "angle grid values must lie in [0, pi/2]".into(),
                    ));
                }
                if !(self.fixed_value > 0.0 && self.fixed_value.is_finite()) {
                    return Err(Error::Input(format!(
                        "g/R = {} must be positive",
                        self.fixed_value
                    )));
                }
            }
        }
        Ok(())
    }

    /// `(g_bl / R1, alpha)` at a grid value.
    fn point(&self, value: f64) -> (f64, f64) {
        match self.mode {
            SweepMode::Separation => (value, self.fixed_value),
            SweepMode::Angle => (self.fixed_value, value),
        }
    }
}

fn relative_error(value: Option<f64>, reference: Option<f64>) -> Option<f64> {
    match (value, reference) {
        (Some(v), Some(r)) if r != 0.0 => Some(((v - r) / r).abs()),
        _ => None,
    }
}

/// Evaluates the sweep; rows come in grid order, options in request order.
pub fn run_sweep(request: &SweepRequest) -> Result<Vec<SweepRow>> {
    request.validate()?;
    if request.options.is_empty() {
        return Ok(Vec::new());
    }
    let per_point: Vec<Vec<SweepRow>> = request
        .grid
        .par_iter()
        .map(|&value| sweep_point(request, value))
        .collect();
    Ok(per_point.into_iter().flatten().collect())
}

fn sweep_point(request: &SweepRequest, value: f64) -> Vec<SweepRow> {
    let (g_over_r, alpha) = request.point(value);
    let t = &request.scene;
    let scene = CylinderPairScene::new(g_over_r * t.r1(), alpha, t.r1(), t.r2(), t.slave_length());
    let mut ref_codes = Vec::new();
    let mut reference =
        |enabled: bool, name: &str, f: &dyn Fn(&CylinderPairScene) -> Result<f64>| {
            if !enabled {
                return None;
            }
            match scene.as_ref().map_err(Clone::clone).and_then(f) {
                Ok(v) => Some(v),
                Err(e) => {
                    ref_codes.push(format!("{name}:{}", e.code()));
                    None
                }
            }
        };
    let ref_numeric3d = reference(request.references.numeric3d, "ref_numeric3d", &|s| {
        ref_pot_two_cylinders_3d(
            s,
            request.law,
            &request.materials,
            &request.reference_scheme,
        )
    });
    let ref_analytic = reference(request.references.analytic, "ref_analytic", &|s| {
        analytic_reference_total(s, request.law, &request.materials)
    });

    request
        .options
        .iter()
        .map(|&option| {
            let potential = scene.clone().and_then(|s| {
                two_cylinder_potential(
                    &s,
                    option,
                    request.law,
                    &request.materials,
                    &default_axial(&s),
                )
                .map(|r| r.total_potential)
            });
            let mut codes = Vec::new();
            let potential = match potential {
                Ok(v) => Some(v),
                Err(e) => {
                    codes.push(e.code().to_string());
                    None
                }
            };
            codes.extend(ref_codes.iter().cloned());
            SweepRow {
                sweep_value: value,
                option,
                g_over_r,
                alpha,
                potential,
                ref_numeric3d,
                ref_analytic,
                rel_err_numeric: relative_error(potential, ref_numeric3d),
                rel_err_analytic: relative_error(potential, ref_analytic),
                error_code: codes.join(";"),
            }
        })
        .collect()
}

/// Scientific notation with 12 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.11e}")
}

fn cell(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

/// Writes the header and `rows` as CSV.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Input(format!("writing CSV: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            format_float(r.sweep_value),
            r.option.to_string(),
            format_float(r.g_over_r),
            format_float(r.alpha),
            cell(r.potential),
            cell(r.ref_numeric3d),
            cell(r.ref_analytic),
            cell(r.rel_err_numeric),
            cell(r.rel_err_analytic),
            r.error_code.clone(),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Input(format!("writing CSV: {e}")))?;
    Ok(())
}

/// [`run_sweep`] followed by [`write_csv`] into a byte buffer.
pub fn sweep_to_csv(request: &SweepRequest) -> Result<Vec<u8>> {
    let rows = run_sweep(request)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    Ok(buf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request(
        mode: SweepMode,
        fixed: f64,
        grid: Vec<f64>,
        options: Vec<LawOption>,
    ) -> SweepRequest {
        SweepRequest {
            mode,
            fixed_value: fixed,
            grid,
            options,
            law: PowerLaw::vdw(-1.0).unwrap(),
            materials: MaterialPair::densities(1.0, 1.0).unwrap(),
            scene: CylinderPairScene::new(1e-3, 0.0, 1.0, 1.0, 20.0).unwrap(),
            references: References {
                analytic: true,
                numeric3d: false,
            },
            reference_scheme: ReferenceScheme::default(),
        }
    }

    #[test]
    fn empty_option_list_gives_header_only() {
        let csv = sweep_to_csv(&request(
            SweepMode::Separation,
            0.0,
            vec![1e-3, 1e-2],
            vec![],
        ))
        .unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), CSV_HEADER.join(",") + "\n");
    }

    #[test]
    fn domain_errors_become_codes() {
        let rows = run_sweep(&request(
            SweepMode::Separation,
            0.0,
            vec![1e-3],
            vec![LawOption::A, LawOption::B],
        ))
        .unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].potential, None);
        assert_eq!(rows[0].error_code, "parallel_singularity");
        assert!(rows[1].potential.is_some());
        assert!(rows[1].error_code.is_empty());
        let mut req = request(SweepMode::Separation, 0.5, vec![1e-3], vec![LawOption::B]);
        req.law = PowerLaw::repulsive(1.0).unwrap();
        let rows = run_sweep(&req).unwrap();
        assert_eq!(rows[0].ref_analytic, None);
        assert_eq!(rows[0].error_code, "ref_analytic:unsupported");
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(run_sweep(&request(
            SweepMode::Separation,
            0.0,
            vec![1e-2, 1e-3],
            vec![LawOption::B]
        ))
        .is_err());
        assert!(run_sweep(&request(
            SweepMode::Separation,
            0.0,
            vec![0.0],
            vec![LawOption::B]
        ))
        .is_err());
        assert!(run_sweep(&request(
            SweepMode::Angle,
            1e-3,
            vec![2.0],
            vec![LawOption::B]
        ))
        .is_err());
    }

    #[test]
    fn default_grids() {
        let s = default_separation_grid();
        assert_eq!(s.len(), 25);
        assert_eq!((s[0], s[24]), (1e-4, 1e1));
        let a = default_angle_grid();
        assert_eq!(a[0], 0.0);
        assert_eq!(*a.last().unwrap(), FRAC_PI_2);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert!(a.len() >= 32);
    }

    #[test]
    fn float_format() {
        assert_eq!(format_float(-411.2335172), "-4.11233517200e2");
    }
}
