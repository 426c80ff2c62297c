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

// Point-pair, point-half-space and point-cylinder laws for van der Waals
// attraction, with the brute-force volume integral as a cross-check.

use diskcyl::oracles::{brute_force_point_cylinder, BruteForceScheme};
use diskcyl::potential::{
    phi_point_pair, pot_point_cylinder_series, pot_point_halfspace,
    prefactor_ratio_cylinder_vs_halfspace, SeriesTerms,
};
use diskcyl::PowerLaw;

pub fn run() -> diskcyl::Result<()> {
    let law = PowerLaw::vdw(-1.0)?;
    let (radius, rho) = (1.0, 1.0);
    println!("pair at r = 1.5: {:.6e}", phi_point_pair(1.5, law)?);
    println!(
        "cylinder/half-space prefactor ratio: {:.6}",
        prefactor_ratio_cylinder_vs_halfspace(6)?
    );
    println!(
        "{:>8} {:>14} {:>14} {:>14} {:>14}",
        "g", "half-space", "series", "two-term", "brute force"
    );
    for g in [1e-3, 1e-2, 1e-1, 1.0] {
        println!(
            "{g:>8.0e} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e}",
            pot_point_halfspace(g, law, rho)?,
            pot_point_cylinder_series(g, radius, law, rho, SeriesTerms::Leading)?,
            pot_point_cylinder_series(g, radius, law, rho, SeriesTerms::TwoTerm)?,
            brute_force_point_cylinder(g, radius, law, rho, &BruteForceScheme::default())?,
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
