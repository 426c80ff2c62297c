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

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by geometry extraction, potential laws and quadrature.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A direction vector that must be unit length is not.
    #[error("direction vector is not normalized (|t| = {norm})")]
    NotNormalized { norm: f64 },

    /// The bodies overlap, i.e. the relevant surface gap is not positive.
    #[error("penetration: surface gap {gap} is not positive")]
    Penetration { gap: f64 },

    /// The disk center lies on the cylinder axis, so the unilateral normal is undefined.
    #[error("disk center lies on the cylinder axis; unilateral normal is undefined")]
    DegenerateNormal,

    /// Option A uses the bilateral normal, which is undefined for parallel axes.
    #[error("option A undefined for parallel configuration (sin(alpha) = {sin_alpha:e})")]
    ParallelSingularity { sin_alpha: f64 },

    /// Option B projects the unilateral normal into the disk plane, undefined for sin(theta) = 0.
    #[error("option B undefined for sin(theta) = {sin_theta:e}")]
    ProjectionSingularity { sin_theta: f64 },

    /// The angles violate cos^2(theta) <= sin^2(alpha).
    #[error("inconsistent configuration: cos^2(theta) = {cos2_theta} exceeds sin^2(alpha) = {sin2_alpha}")]
    InconsistentConfiguration { cos2_theta: f64, sin2_alpha: f64 },

    /// The negative discriminant of the quadratic gap approximation is not positive.
    #[error("invalid configuration: discriminant Delta = {delta} is not positive")]
    NonPositiveDiscriminant { delta: f64 },

    /// The linear gap coefficient along the expansion direction is not positive,
    /// so the integral over the disk diverges.
    #[error("divergent integral: linear gap coefficient b_y = {b_y} is not positive")]
    DivergentIntegral { b_y: f64 },

    /// A scalar argument is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested combination is not provided by the implementation.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An integrand returned NaN or an infinity.
    #[error("non-finite integrand value {value} at abscissa {at}")]
    NonFinite { at: f64, value: f64 },

    /// The adaptive truncation of an infinite domain did not converge.
    #[error("truncation did not converge: last tail contribution {tail:e} relative")]
    TruncationNotConverged { tail: f64 },

    /// An invalid input parameter (quadrature spec, sweep grid, config file...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Error at a particular slave-axis sample of a two-cylinder integration.
    #[error("at slave arc length s1 = {s1}: {source}")]
    AtSample { s1: f64, source: Box<Error> },
}

impl Error {
    /// Short machine-readable code, used in the `error_code` column of sweep output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotNormalized { .. } => "not_normalized",
            Error::Penetration { .. } => "penetration",
            Error::DegenerateNormal => "degenerate_normal",
            Error::ParallelSingularity { .. } => "parallel_singularity",
            Error::ProjectionSingularity { .. } => "projection_singularity",
            Error::InconsistentConfiguration { .. } => "inconsistent_configuration",
            Error::NonPositiveDiscriminant { .. } => "invalid_configuration",
            Error::DivergentIntegral { .. } => "divergent_integral",
            Error::Domain(_) => "domain",
            Error::Unsupported(_) => "unsupported",
            Error::NonFinite { .. } => "non_finite",
            Error::TruncationNotConverged { .. } => "truncation_not_converged",
            Error::Input(_) => "input",
            Error::AtSample { source, .. } => source.code(),
        }
    }

    pub(crate) fn at_sample(self, s1: f64) -> Self {
        Error::AtSample {
            s1,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
