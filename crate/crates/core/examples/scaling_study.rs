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

// Log-log slopes of the two-cylinder potential in gap and angle.

use std::f64::consts::{FRAC_PI_2, PI};

use diskcyl::oracles::{log_grid, loglog_slope};
use diskcyl::sbip::{default_axial, two_cylinder_potential};
use diskcyl::{CylinderPairScene, LawOption, MaterialPair, PowerLaw};

fn total(g: f64, alpha: f64, option: LawOption) -> diskcyl::Result<f64> {
    let law = PowerLaw::vdw(-1.0)?;
    let materials = MaterialPair::densities(1.0, 1.0)?;
    let scene = CylinderPairScene::new(g, alpha, 1.0, 1.0, 20.0)?;
    Ok(
        two_cylinder_potential(&scene, option, law, &materials, &default_axial(&scene))?
            .total_potential
            .abs(),
    )
}

pub fn run() -> diskcyl::Result<()> {
    let gaps = log_grid(1e-4, 1e-2, 9);
    for (alpha, option) in [
        (0.0, LawOption::B),
        (FRAC_PI_2, LawOption::B),
        (FRAC_PI_2, LawOption::CSimplified),
    ] {
        let values = gaps
            .iter()
            .map(|&g| total(g, alpha, option))
            .collect::<diskcyl::Result<Vec<_>>>()?;
        let fit = loglog_slope(&gaps, &values)?;
        println!(
            "alpha = {alpha:.3}, option {option}: slope in g {:.4}",
            fit.slope
        );
    }

    let sines = log_grid((PI / 16.0).sin(), 1.0, 7);
    let values = sines
        .iter()
        .map(|&s| total(1e-3, s.asin(), LawOption::B))
        .collect::<diskcyl::Result<Vec<_>>>()?;
    println!(
        "g = 1e-3, option B: slope in sin(alpha) {:.4}",
        loglog_slope(&sines, &values)?.slope
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
