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

//! Inverse-power point-pair law and closed-form point-body potentials.
//!
//! The point-pair law is `phi(r) = k_m r^-m` with a signed prefactor
//! (`k_m < 0` attracts). Two approximations of the potential between a point
//! and an infinite cylinder at surface gap `g` are provided:
//!
//! - the point-half-space law `K_{m,pt-hs} g^{3-m}` with
//!   `K_{m,pt-hs} = 2 pi k_m rho / ((m-2)(m-3))`, exact for a half space;
//! - the leading term of the series for a cylinder, `K_{m,pt-cyl} g^{3-m}`,
//!   whose prefactor is known for `m = 6` and `m = 12`.
//!
//! For `g << R` the half-space law is the consistent one; the cylinder-series
//! leading term overestimates it by `3 pi / 4` at `m = 6`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Point-pair inverse power law `k_m r^-m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLaw {
    m: u32,
    k: f64,
}

impl PowerLaw {
    /// Smallest exponent for which the disk-cylinder integrals converge.
    pub const MIN_EXPONENT: u32 = 6;

    pub fn new(m: u32, k: f64) -> Result<Self> {
        if m < Self::MIN_EXPONENT {
            return Err(Error::Domain(format!(
                "exponent m = {m} must be at least 6"
            )));
        }
        if !k.is_finite() {
            return Err(Error::Domain(format!("prefactor k_m = {k} must be finite")));
        }
        Ok(Self { m, k })
    }

    /// Attractive van der Waals part, `m = 6`.
    pub fn vdw(k6: f64) -> Result<Self> {
        Self::new(6, k6)
    }

    /// Repulsive part of Lennard-Jones, `m = 12`.
    pub fn repulsive(k12: f64) -> Result<Self> {
        Self::new(12, k12)
    }

    pub fn exponent(&self) -> u32 {
        self.m
    }

    pub fn prefactor(&self) -> f64 {
        self.k
    }

    /// Same exponent, prefactor multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.m, self.k * factor)
    }
}

/// Point densities of the two bodies and the power laws acting between them.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialPair {
    rho1: f64,
    rho2: f64,
    laws: Vec<PowerLaw>,
}

impl MaterialPair {
    pub fn new(rho1: f64, rho2: f64, laws: Vec<PowerLaw>) -> Result<Self> {
        for (name, rho) in [("rho1", rho1), ("rho2", rho2)] {
            if !(rho > 0.0 && rho.is_finite()) {
                return Err(Error::Domain(format!(
                    "{name} must be positive and finite, got {rho}"
                )));
            }
        }
        Ok(Self { rho1, rho2, laws })
    }

    /// Densities only, no laws attached.
    pub fn densities(rho1: f64, rho2: f64) -> Result<Self> {
        Self::new(rho1, rho2, Vec::new())
    }

    /// Lennard-Jones pair: attractive `m = 6` plus repulsive `m = 12` part.
    pub fn lennard_jones(rho1: f64, rho2: f64, k6: f64, k12: f64) -> Result<Self> {
        Self::new(
            rho1,
            rho2,
            vec![PowerLaw::vdw(k6)?, PowerLaw::repulsive(k12)?],
        )
    }

    pub fn rho1(&self) -> f64 {
        self.rho1
    }

    pub fn rho2(&self) -> f64 {
        self.rho2
    }

    pub fn laws(&self) -> &[PowerLaw] {
        &self.laws
    }

    /// Hamaker constant `A = -pi^2 k_6 rho1 rho2` of the `m = 6` law, if present.
    ///
    /// With an attractive `k_6 < 0` this gives the usual positive constant.
    pub fn hamaker_constant(&self) -> Option<f64> {
        self.laws
            .iter()
            .find(|law| law.exponent() == 6)
            .map(|law| hamaker_constant(law.prefactor(), self.rho1, self.rho2))
    }
}

/// `A = -pi^2 k_6 rho1 rho2`.
pub fn hamaker_constant(k6: f64, rho1: f64, rho2: f64) -> f64 {
    -PI * PI * k6 * rho1 * rho2
}

/// Number of terms of the point-cylinder series to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesTerms {
    Leading,
    TwoTerm,
}

/// `k_m r^-m`.
pub fn phi_point_pair(r: f64, law: PowerLaw) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!(
            "pair distance r = {r} must be positive"
        )));
    }
    Ok(law.prefactor() * r.powi(-(law.exponent() as i32)))
}

/// `K_{m,pt-hs} = 2 pi k_m rho / ((m-2)(m-3))`.
pub fn halfspace_prefactor(law: PowerLaw, rho: f64) -> f64 {
    let m = law.exponent() as f64;
    2.0 * PI * law.prefactor() * rho / ((m - 2.0) * (m - 3.0))
}

/// Exact potential between a point and a half space at gap `g`.
pub fn pot_point_halfspace(g: f64, law: PowerLaw, rho: f64) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    Ok(halfspace_prefactor(law, rho) * g.powi(3 - law.exponent() as i32))
}

/// Leading-term prefactor `K_{m,pt-cyl}` of the point-cylinder series; only
/// `m = 6` and `m = 12` are known in closed form.
pub fn cylinder_series_prefactor(law: PowerLaw, rho: f64) -> Result<f64> {
    let base = PI * PI * law.prefactor() * rho;
    match law.exponent() {
        6 => Ok(base / 8.0),
        12 => Ok(7.0 * base / 256.0),
        m => Err(Error::Unsupported(format!(
            "point-cylinder series prefactor for m = {m}; use pot_point_halfspace"
        ))),
    }
}

/// Point-cylinder potential from the series form, at gap `g` to a cylinder of radius `radius`.
///
/// The two-term form `K (g^-3 - (g + 2R)^-3)` exists for `m = 6` only.
pub fn pot_point_cylinder_series(
    g: f64,
    radius: f64,
    law: PowerLaw,
    rho: f64,
    terms: SeriesTerms,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Penetration { gap: g });
    }
    if !(radius > 0.0) {
        return Err(Error::Domain(format!(
            "cylinder radius {radius} must be positive"
        )));
    }
    let prefactor = cylinder_series_prefactor(law, rho)?;
    let power = 3 - law.exponent() as i32;
    match terms {
        SeriesTerms::Leading => Ok(prefactor * g.powi(power)),
        SeriesTerms::TwoTerm if law.exponent() == 6 => {
            Ok(prefactor * (g.powi(-3) - (g + 2.0 * radius).powi(-3)))
        }
        SeriesTerms::TwoTerm => Err(Error::Unsupported(format!(
            "two-term point-cylinder series for m = {}",
            law.exponent()
        ))),
    }
}

/// `K_{m,pt-cyl} / K_{m,pt-hs}`, independent of `k_m` and `rho`.
pub fn prefactor_ratio_cylinder_vs_halfspace(m: u32) -> Result<f64> {
    let law = PowerLaw::new(m, 1.0)?;
    Ok(cylinder_series_prefactor(law, 1.0)? / halfspace_prefactor(law, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn law(m: u32, k: f64) -> PowerLaw {
        PowerLaw::new(m, k).unwrap()
    }

    #[test]
    fn pair_law_values() {
        assert_eq!(phi_point_pair(1.0, law(6, -1.0)).unwrap(), -1.0);
        assert_eq!(phi_point_pair(2.0, law(6, -1.0)).unwrap(), -0.015625);
        assert_relative_eq!(
            phi_point_pair(2.0, law(12, 1.0)).unwrap(),
            2.44141e-4,
            max_relative = 1e-5
        );
        assert!(phi_point_pair(0.0, law(6, 1.0)).is_err());
        assert!(phi_point_pair(-1.0, law(6, 1.0)).is_err());
    }

    #[test]
    fn exponent_below_six_is_rejected() {
        assert!(PowerLaw::new(5, 1.0).is_err());
        assert!(PowerLaw::new(3, 1.0).is_err());
    }

    #[test]
    #[allow(clippy::approx_constant)] // printed decimals, checked on purpose
    fn halfspace_values() {
        assert_relative_eq!(
            pot_point_halfspace(1.0, law(6, 1.0), 1.0).unwrap(),
            PI / 6.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            pot_point_halfspace(1.0, law(6, 1.0), 1.0).unwrap(),
            0.523599,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            pot_point_halfspace(1.0, law(12, 1.0), 1.0).unwrap(),
            PI / 45.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            pot_point_halfspace(1.0, law(12, 1.0), 1.0).unwrap(),
            0.0698132,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            pot_point_halfspace(2.0, law(6, 1.0), 1.0).unwrap(),
            0.0654498,
            max_relative = 1e-6
        );
        assert!(matches!(
            pot_point_halfspace(0.0, law(6, 1.0), 1.0),
            Err(Error::Penetration { .. })
        ));
    }

    #[test]
    fn cylinder_series_values() {
        let v6 =
            pot_point_cylinder_series(1.0, 1.0, law(6, 1.0), 1.0, SeriesTerms::Leading).unwrap();
        assert_relative_eq!(v6, PI * PI / 8.0, max_relative = 1e-15);
        assert_relative_eq!(v6, 1.23370, max_relative = 1e-5);
        let v12 =
            pot_point_cylinder_series(1.0, 1.0, law(12, 1.0), 1.0, SeriesTerms::Leading).unwrap();
        assert_relative_eq!(v12, 7.0 * PI * PI / 256.0, max_relative = 1e-15);
        assert_relative_eq!(v12, 0.269872, max_relative = 1e-5);
    }

    #[test]
    fn two_term_series_at_small_gap() {
        let (g, r) = (0.01, 1.0);
        let lead = pot_point_cylinder_series(g, r, law(6, 1.0), 1.0, SeriesTerms::Leading).unwrap();
        let two = pot_point_cylinder_series(g, r, law(6, 1.0), 1.0, SeriesTerms::TwoTerm).unwrap();
        let rel = (lead - two) / lead;
        assert_relative_eq!(rel, (g / (g + 2.0 * r)).powi(3), max_relative = 1e-9);
        assert_relative_eq!(rel, 1.23e-7, max_relative = 5e-3);
    }

    #[test]
    fn unsupported_series_requests() {
        assert!(matches!(
            pot_point_cylinder_series(0.1, 1.0, law(12, 1.0), 1.0, SeriesTerms::TwoTerm),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            pot_point_cylinder_series(0.1, 1.0, law(8, 1.0), 1.0, SeriesTerms::Leading),
            Err(Error::Unsupported(_))
        ));
        assert!(prefactor_ratio_cylinder_vs_halfspace(7).is_err());
    }

    #[test]
    fn prefactor_ratios() {
        assert_relative_eq!(
            prefactor_ratio_cylinder_vs_halfspace(6).unwrap(),
            0.75 * PI,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            prefactor_ratio_cylinder_vs_halfspace(6).unwrap(),
            2.35619,
            max_relative = 1e-5
        );
        assert_relative_eq!(
            prefactor_ratio_cylinder_vs_halfspace(12).unwrap(),
            315.0 * PI / 256.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            prefactor_ratio_cylinder_vs_halfspace(12).unwrap(),
            3.86563,
            max_relative = 1e-5
        );
        // k cancels
        let l = law(6, 10.0);
        let r = cylinder_series_prefactor(l, 1.0).unwrap() / halfspace_prefactor(l, 1.0);
        assert_relative_eq!(r, 0.75 * PI, max_relative = 1e-15);
    }

    #[test]
    fn hamaker_sign_convention() {
        let mat = MaterialPair::lennard_jones(2.0, 3.0, -1.5, 0.5).unwrap();
        assert_relative_eq!(mat.hamaker_constant().unwrap(), PI * PI * 1.5 * 6.0);
        assert!(MaterialPair::densities(1.0, 1.0)
            .unwrap()
            .hamaker_constant()
            .is_none());
        assert!(MaterialPair::densities(0.0, 1.0).is_err());
    }
}
