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

// Lennard-Jones cylinders: attraction and repulsion summed per law, and the
// gap where the disk-cylinder force vanishes.

use std::f64::consts::FRAC_PI_2;

use diskcyl::{disk_cylinder_potential_total, DiskCylinderConfig, LawOption, MaterialPair};

pub fn run() -> diskcyl::Result<()> {
    // k12 chosen so that the point-pair equilibrium sits at r = 1
    let (k6, k12) = (-1.0, 0.5);
    let materials = MaterialPair::lennard_jones(1.0, 1.0, k6, k12)?;
    println!(
        "Hamaker constant {:.6}",
        materials.hamaker_constant().unwrap_or(f64::NAN)
    );

    let energy = |g: f64| -> diskcyl::Result<f64> {
        let c = DiskCylinderConfig::from_gap(g, FRAC_PI_2, FRAC_PI_2, 5.0, 5.0)?;
        disk_cylinder_potential_total(&c, LawOption::CSimplified, &materials)
    };
    for g in [0.5, 0.8, 1.0, 1.5, 3.0] {
        println!("g = {g:<4} potential {:>12.6e}", energy(g)?);
    }

    // bisection on the sign of the central difference
    let force = |g: f64| -> diskcyl::Result<f64> {
        Ok((energy(g * 1.0001)? - energy(g * 0.9999)?) / (2e-4 * g))
    };
    let (mut lo, mut hi) = (0.3, 3.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if force(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    println!("equilibrium gap {:.6}", 0.5 * (lo + hi));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
