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

//! Closed-form interaction potentials between a circular disk and an infinite
//! cylinder for inverse-power point-pair laws `k_m r^-m`, plus the numerical
//! machinery used to check them on pairs of straight cylinders.
//!
//! The disk-cylinder law gives the potential per unit length of a slave
//! fiber whose cross-section (the disk) interacts with an entire master
//! fiber (the cylinder). Integrating it along the slave axis
//! ([`sbip::two_cylinder_potential`]) yields the fiber-fiber potential, which
//! [`oracles`] cross-checks against direct volume integration.
//!
//! ```
//! use diskcyl::{disk_cylinder_potential, DiskCylinderConfig, LawOption, MaterialPair, PowerLaw};
//!
//! let law = PowerLaw::vdw(-1.0)?;
//! let materials = MaterialPair::densities(1.0, 1.0)?;
//! let config = DiskCylinderConfig::from_gap(0.01, 0.0, std::f64::consts::FRAC_PI_2, 1.0, 1.0)?;
//! let pi = disk_cylinder_potential(&config, LawOption::CSimplified, law, &materials)?;
//! assert!((pi + 411.233517).abs() < 1e-5);
//! # Ok::<(), diskcyl::Error>(())
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod disk_cylinder;
pub mod error;
pub mod geometry;
pub mod oracles;
pub mod potential;
pub mod quadrature;
pub mod sbip;
pub mod sweep;
pub mod verify;

pub use disk_cylinder::{
    aux_variables, coefficients, disk_cylinder_potential, disk_cylinder_potential_total,
    prefactor_k, prefactor_k_hat, AuxVariables, LawOption, PolynomialCoefficients,
};
pub use error::{Error, Result};
pub use geometry::{extract_config, CylinderPairScene, DiskCylinderConfig, Vec3};
pub use potential::{MaterialPair, PowerLaw};
pub use quadrature::QuadratureSpec;
