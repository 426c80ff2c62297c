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

//! Command-line driver: single evaluations, sweeps and self-verification.

use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use diskcyl::config::ScenarioConfig;
use diskcyl::oracles::{log_grid, ReferenceScheme};
use diskcyl::sbip::{default_axial, two_cylinder_potential};
use diskcyl::sweep::{
    default_angle_grid, default_separation_grid, run_sweep, write_csv, References, SweepMode,
    SweepRequest,
};
use diskcyl::verify::{run_all, run_criterion, Profile};
use diskcyl::{disk_cylinder_potential, DiskCylinderConfig, Error, LawOption};

#[derive(Parser)]
#[command(
    name = "diskcyl",
    version,
    about = "Disk-cylinder interaction potentials"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Exponent of the point-pair law.
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Signed prefactor of the point-pair law (negative attracts).
    #[arg(long, global = true, allow_hyphen_values = true)]
    k: Option<f64>,
    #[arg(long, global = true)]
    rho1: Option<f64>,
    #[arg(long, global = true)]
    rho2: Option<f64>,
    /// Slave (disk) radius.
    #[arg(long = "R1", global = true)]
    r1: Option<f64>,
    /// Master cylinder radius.
    #[arg(long = "R2", global = true)]
    r2: Option<f64>,
    /// Slave cylinder length.
    #[arg(long = "L", global = true)]
    length: Option<f64>,
    /// Law option, repeatable: A, B, C or Csimp.
    #[arg(long = "option", global = true)]
    options: Vec<LawOption>,
    #[arg(long, global = true)]
    with_numeric_ref: bool,
    #[arg(long, global = true)]
    with_analytic_ref: bool,
    /// Scenario file with `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// CSV output path (standard output when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one disk-cylinder configuration or one cylinder pair.
    Eval(EvalArgs),
    /// Sweep the bilateral gap at fixed mutual angle.
    SweepSeparation(SeparationArgs),
    /// Sweep the mutual angle at fixed bilateral gap.
    SweepAngle(AngleArgs),
    /// All options and references at one configuration, as CSV.
    CompareOptions(PointArgs),
    /// Run the acceptance criteria.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Evaluate the two-cylinder total instead of the disk-cylinder law.
    #[arg(long)]
    pair: bool,
    /// Surface gap: unilateral for a disk, bilateral for a pair.
    #[arg(long)]
    gap: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    /// Disk angle theta (disk mode only).
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta: f64,
}

#[derive(Args)]
struct SeparationArgs {
    #[arg(long)]
    alpha: Option<f64>,
    /// Smallest g/R of a log-spaced grid (default grid when absent).
    #[arg(long, requires_all = ["to", "points"])]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Args)]
struct AngleArgs {
    #[arg(long = "g-over-R")]
    g_over_r: Option<f64>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long = "g-over-R")]
    g_over_r: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// default or tight (tolerances divided by 100).
    #[arg(long, default_value = "default")]
    profile: Profile,
    /// Run only this criterion.
    #[arg(long)]
    criterion: Option<u32>,
}

enum Failure {
    Input(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn scenario(common: &Common) -> Result<ScenarioConfig, Error> {
    let mut cfg = match &common.config {
        Some(path) => ScenarioConfig::from_file(path)?,
        None => ScenarioConfig::default(),
    };
    macro_rules! apply {
        ($($flag:ident => $field:ident),*) => {
            $(if let Some(v) = common.$flag { cfg.$field = v; })*
        };
    }
    apply!(m => m, k => k, rho1 => rho1, rho2 => rho2, r1 => r1, r2 => r2, length => slave_length);
    if !common.options.is_empty() {
        cfg.options = common.options.clone();
    }
    Ok(cfg)
}

fn emit_csv(common: &Common, request: &SweepRequest) -> Result<(), Error> {
    let rows = run_sweep(request)?;
    match &common.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Error::Input(format!("cannot create {}: {e}", path.display())))?;
            write_csv(&rows, file)
        }
        None => write_csv(&rows, io::stdout().lock()),
    }
}

fn request(
    common: &Common,
    cfg: &ScenarioConfig,
    mode: SweepMode,
    fixed: f64,
    grid: Vec<f64>,
) -> Result<SweepRequest, Error> {
    Ok(SweepRequest {
        mode,
        fixed_value: fixed,
        grid,
        options: cfg.options.clone(),
        law: cfg.law()?,
        materials: cfg.materials()?,
        scene: cfg.scene()?,
        references: References {
            analytic: common.with_analytic_ref,
            numeric3d: common.with_numeric_ref,
        },
        reference_scheme: ReferenceScheme::default(),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = &cli.common;
    let mut cfg = scenario(common)?;
    match cli.command {
        Command::Eval(args) => {
            if cfg.options.len() != 1 {
                return Err(Error::Input("eval takes exactly one --option".into()).into());
            }
            let option = cfg.options[0];
            let alpha = args.alpha.unwrap_or(cfg.alpha);
            let value = if args.pair {
                cfg.alpha = alpha;
                if let Some(g) = args.gap {
                    cfg.g_over_r = g / cfg.r1;
                }
                let scene = cfg.scene()?;
                two_cylinder_potential(
                    &scene,
                    option,
                    cfg.law()?,
                    &cfg.materials()?,
                    &default_axial(&scene),
                )?
                .total_potential
            } else {
                let gap = args.gap.unwrap_or(cfg.g_over_r * cfg.r1);
                let config = DiskCylinderConfig::from_gap(gap, alpha, args.theta, cfg.r1, cfg.r2)?;
                disk_cylinder_potential(&config, option, cfg.law()?, &cfg.materials()?)?
            };
            println!("{value:.11e}");
        }
        Command::SweepSeparation(args) => {
            let grid = match (args.from, args.to, args.points) {
                (Some(a), Some(b), Some(n)) => log_grid(a, b, n),
                _ => default_separation_grid(),
            };
            let alpha = args.alpha.unwrap_or(cfg.alpha);
            emit_csv(
                common,
                &request(common, &cfg, SweepMode::Separation, alpha, grid)?,
            )?;
        }
        Command::SweepAngle(args) => {
            let g = args.g_over_r.unwrap_or(cfg.g_over_r);
            emit_csv(
                common,
                &request(common, &cfg, SweepMode::Angle, g, default_angle_grid())?,
            )?;
        }
        Command::CompareOptions(args) => {
            if common.options.is_empty() {
                cfg.options = LawOption::ALL.to_vec();
            }
            let alpha = args.alpha.unwrap_or(cfg.alpha);
            let g = args.g_over_r.unwrap_or(cfg.g_over_r);
            emit_csv(
                common,
                &request(common, &cfg, SweepMode::Separation, alpha, vec![g])?,
            )?;
        }
        Command::Verify(args) => {
            let reports = match args.criterion {
                Some(id) => vec![run_criterion(id, args.profile)?],
                None => run_all(args.profile),
            };
            let mut out = io::stdout().lock();
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
