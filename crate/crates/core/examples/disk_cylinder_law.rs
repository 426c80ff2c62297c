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

// The disk-cylinder law for all four options, including the way option A
// breaks down away from theta = pi/2.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use diskcyl::disk_cylinder::aux_variables;
use diskcyl::{disk_cylinder_potential, DiskCylinderConfig, LawOption, MaterialPair, PowerLaw};

pub fn run() -> diskcyl::Result<()> {
    let law = PowerLaw::vdw(-1.0)?;
    let materials = MaterialPair::densities(1.0, 1.0)?;
    for theta in [FRAC_PI_2, 1.4, 1.0] {
        let config = DiskCylinderConfig::from_gap(1e-2, FRAC_PI_4, theta, 1.0, 1.0)?;
        println!("theta = {theta:.3}");
        for option in LawOption::ALL {
            match disk_cylinder_potential(&config, option, law, &materials) {
                Ok(v) => {
                    let delta = aux_variables(&config, option)
                        .map(|a| a.delta)
                        .unwrap_or(f64::NAN);
                    println!("  {option:<6} {v:>14.6e}  (Delta {delta:.4e})");
                }
                Err(e) => println!("  {option:<6} {:>14}  {e}", e.code()),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
