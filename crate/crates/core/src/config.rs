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

//! Scenario files: UTF-8 text with one `key = value` per line and `#`
//! comments. All keys are optional; the defaults describe two unit-radius
//! cylinders with slave length 20 under attractive van der Waals (`m = 6`,
//! `k = -1`, unit densities).
//!
//! ```text
//! # perpendicular fibers, small gap
//! m = 6
//! k = -1
//! alpha = 1.5707963267948966
//! g_over_R = 1e-3
//! option = A, B, Csimp
//! ```

use std::fs;
use std::path::Path;

use crate::disk_cylinder::LawOption;
use crate::error::{Error, Result};
use crate::geometry::CylinderPairScene;
use crate::potential::{MaterialPair, PowerLaw};

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub m: u32,
    pub k: f64,
    pub rho1: f64,
    pub rho2: f64,
    pub r1: f64,
    pub r2: f64,
    pub slave_length: f64,
    pub alpha: f64,
    /// Bilateral gap relative to `R1`.
    pub g_over_r: f64,
    pub options: Vec<LawOption>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            m: 6,
            k: -1.0,
            rho1: 1.0,
            rho2: 1.0,
            r1: 1.0,
            r2: 1.0,
            slave_length: 20.0,
            alpha: 0.0,
            g_over_r: 1e-3,
            options: vec![LawOption::CSimplified],
        }
    }
}

fn number<T: std::str::FromStr>(key: &str, value: &str, line: usize) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Input(format!("line {line}: cannot parse {key} = '{value}'")))
}

impl ScenarioConfig {
    /// Parses scenario text on top of the defaults. Unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Input(format!(
                    "line {line_no}: expected 'key = value', got '{line}'"
                ))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "m" => cfg.m = number(key, value, line_no)?,
                "k" => cfg.k = number(key, value, line_no)?,
                "rho1" => cfg.rho1 = number(key, value, line_no)?,
                "rho2" => cfg.rho2 = number(key, value, line_no)?,
                "R1" => cfg.r1 = number(key, value, line_no)?,
                "R2" => cfg.r2 = number(key, value, line_no)?,
                "R" => {
                    cfg.r1 = number(key, value, line_no)?;
                    cfg.r2 = cfg.r1;
                }
                "L" => cfg.slave_length = number(key, value, line_no)?,
                "alpha" => cfg.alpha = number(key, value, line_no)?,
                "g_over_R" => cfg.g_over_r = number(key, value, line_no)?,
                "option" | "options" => {
                    cfg.options = value
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?;
                }
                other => {
                    return Err(Error::Input(format!(
                        "line {line_no}: unknown key '{other}'"
                    )))
                }
            }
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn law(&self) -> Result<PowerLaw> {
        PowerLaw::new(self.m, self.k)
    }

    pub fn materials(&self) -> Result<MaterialPair> {
        MaterialPair::new(self.rho1, self.rho2, vec![self.law()?])
    }

    pub fn scene(&self) -> Result<CylinderPairScene> {
        CylinderPairScene::new(
            self.g_over_r * self.r1,
            self.alpha,
            self.r1,
            self.r2,
            self.slave_length,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        assert_eq!(
            ScenarioConfig::parse("").unwrap(),
            ScenarioConfig::default()
        );
        assert_eq!(
            ScenarioConfig::parse("# nothing\n\n").unwrap(),
            ScenarioConfig::default()
        );
    }

    #[test]
    fn parses_keys() {
        let cfg = ScenarioConfig::parse(
            "m = 12\nk=2.5 # repulsive\nR = 0.5\nL = 10\noption = A, B,Csimp\n",
        )
        .unwrap();
        assert_eq!(cfg.m, 12);
        assert_eq!(cfg.k, 2.5);
        assert_eq!((cfg.r1, cfg.r2), (0.5, 0.5));
        assert_eq!(cfg.slave_length, 10.0);
        assert_eq!(
            cfg.options,
            vec![LawOption::A, LawOption::B, LawOption::CSimplified]
        );
        assert_eq!(cfg.scene().unwrap().g_bl(), 0.5e-3);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(ScenarioConfig::parse("m 6").is_err());
        assert!(ScenarioConfig::parse("radius = 1").is_err());
        assert!(ScenarioConfig::parse("k = minus one").is_err());
        assert!(ScenarioConfig::parse("option = D").is_err());
    }
}
