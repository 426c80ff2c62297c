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

// From a disk and a cylinder axis in space to the reduced configuration
// (gap, mutual angle, disk tilt).

use diskcyl::geometry::unilateral_projection;
use diskcyl::{extract_config, CylinderPairScene, Vec3};

pub fn run() -> diskcyl::Result<()> {
    let center = Vec3::new(0.3, 2.6, -0.4);
    let normal = Vec3::new(1.0, 1.0, 0.5).normalized().expect("nonzero");
    let origin = Vec3::new(0.0, 0.0, 0.0);
    let axis = Vec3::new(0.0, 0.0, 1.0);

    let proj = unilateral_projection(center, origin, axis)?;
    println!("foot {:?}, distance {:.6}", proj.foot, proj.distance);
    let config = extract_config(center, normal, 1.0, origin, axis, 1.5)?;
    println!(
        "gap {:.6}, alpha {:.6}, theta {:.6}, parallel: {}",
        config.g_ul(),
        config.alpha(),
        config.theta(),
        config.is_parallel()
    );

    // along a slave cylinder crossing at 60 degrees, theta drifts away from
    // pi/2 with distance from the closest point
    let scene = CylinderPairScene::new(1e-2, std::f64::consts::FRAC_PI_3, 1.0, 1.0, 10.0)?;
    for s1 in [0.0, 0.5, 2.0, 5.0] {
        let c = scene.disk_config(s1)?;
        println!("s1 = {s1:>3}: gap {:.6e}, theta {:.6}", c.g_ul(), c.theta());
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
