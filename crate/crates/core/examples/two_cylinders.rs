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

// Two cylinders: integrate the disk-cylinder law along the slave axis and
// compare with the closed-form references.

use std::f64::consts::FRAC_PI_2;

use diskcyl::sbip::{analytic_reference_total, default_axial, two_cylinder_potential};
use diskcyl::{CylinderPairScene, LawOption, MaterialPair, PowerLaw};

pub fn run() -> diskcyl::Result<()> {
    let law = PowerLaw::vdw(-1.0)?;
    let materials = MaterialPair::densities(1.0, 1.0)?;
    for alpha in [0.0, 0.2, FRAC_PI_2] {
        let scene = CylinderPairScene::new(1e-3, alpha, 1.0, 1.0, 20.0)?;
        let reference = analytic_reference_total(&scene, law, &materials)?;
        println!("alpha = {alpha:.3}, closed form {reference:.6e}");
        for option in LawOption::ALL {
            match two_cylinder_potential(&scene, option, law, &materials, &default_axial(&scene)) {
                Ok(r) => println!(
                    "  {option:<6} {:>14.6e}  ratio {:.4}  ({} samples)",
                    r.total_potential,
                    r.total_potential / reference,
                    r.samples.len()
                ),
                Err(e) => println!("  {option:<6} {e}"),
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
