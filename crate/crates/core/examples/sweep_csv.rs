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

// An angle sweep written as CSV, with both references attached.

use diskcyl::oracles::ReferenceScheme;
use diskcyl::sweep::{run_sweep, write_csv, References, SweepMode, SweepRequest};
use diskcyl::{CylinderPairScene, LawOption, MaterialPair, PowerLaw};

pub fn run() -> diskcyl::Result<()> {
    let request = SweepRequest {
        mode: SweepMode::Angle,
        fixed_value: 1e-3,
        grid: vec![0.0, 0.2, 0.5, 1.0, std::f64::consts::FRAC_PI_2],
        options: vec![LawOption::A, LawOption::CSimplified],
        law: PowerLaw::vdw(-1.0)?,
        materials: MaterialPair::densities(1.0, 1.0)?,
        scene: CylinderPairScene::new(1e-3, 0.0, 1.0, 1.0, 20.0)?,
        references: References {
            analytic: true,
            numeric3d: true,
        },
        reference_scheme: ReferenceScheme::default(),
    };
    let rows = run_sweep(&request)?;
    // failures stay in the table as error codes, the sweep itself goes on
    write_csv(&rows, std::io::stdout().lock())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
