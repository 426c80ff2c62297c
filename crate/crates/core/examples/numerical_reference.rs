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

// The 3D numerical reference for parallel cylinders and its convergence
// under refinement, against the reduced law.

use diskcyl::oracles::{ref_pot_two_cylinders_3d, ReferenceScheme};
use diskcyl::sbip::{default_axial, two_cylinder_potential};
use diskcyl::{CylinderPairScene, LawOption, MaterialPair, PowerLaw};

pub fn run() -> diskcyl::Result<()> {
    let law = PowerLaw::vdw(-1.0)?;
    let materials = MaterialPair::densities(1.0, 1.0)?;
    for g in [1e-2, 1e-1, 1.0] {
        let scene = CylinderPairScene::new(g, 0.0, 1.0, 1.0, 20.0)?;
        let coarse = ReferenceScheme::default();
        let numeric = ref_pot_two_cylinders_3d(&scene, law, &materials, &coarse)?;
        let finer = ref_pot_two_cylinders_3d(&scene, law, &materials, &coarse.refined())?;
        let law_value = two_cylinder_potential(
            &scene,
            LawOption::CSimplified,
            law,
            &materials,
            &default_axial(&scene),
        )?
        .total_potential;
        println!(
            "g = {g:<5} reference {numeric:.6e} (refined change {:.1e}), Csimp error {:.2}%",
            (finer / numeric - 1.0).abs(),
            100.0 * (law_value / numeric - 1.0).abs()
        );
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
