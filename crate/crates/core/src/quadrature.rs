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

//! Composite Gauss-Legendre quadrature on geometrically graded segments.
//!
//! Segment widths grow by `grading_ratio` away from `focus`. A focus inside
//! `(a, b)` splits the segments evenly between both sides; a focus at or
//! beyond an end grades toward that end. Abscissae are returned in ascending
//! order and sums are taken in that order, so results are reproducible bit for
//! bit regardless of how integrand values were computed.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;

use crate::error::{Error, Result};

/// Description of a graded composite Gauss-Legendre rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    n_segments: usize,
    points_per_segment: usize,
    grading_ratio: f64,
    focus: f64,
    // reference rule on [-1, 1]
    rule: Vec<(f64, f64)>,
}

impl QuadratureSpec {
    pub const DEFAULT_GRADING_RATIO: f64 = 1.3;
    pub const MAX_POINTS_PER_SEGMENT: usize = 64;

    pub fn new(
        n_segments: usize,
        points_per_segment: usize,
        grading_ratio: f64,
        focus: f64,
    ) -> Result<Self> {
        if n_segments == 0 {
            return Err(Error::Input("quadrature needs at least one segment".into()));
        }
        if !(1..=Self::MAX_POINTS_PER_SEGMENT).contains(&points_per_segment) {
            return Err(Error::Input(format!(
                "points per segment must be in [1, 64], got {points_per_segment}"
            )));
        }
        if !(grading_ratio >= 1.0 && grading_ratio.is_finite()) {
            return Err(Error::Input(format!(
                "grading ratio must be >= 1, got {grading_ratio}"
            )));
        }
        if !focus.is_finite() {
            return Err(Error::Input(format!("focus must be finite, got {focus}")));
        }
        let degree = NonZeroUsize::new(points_per_segment).expect("checked above");
        let rule = GaussLegendre::new(degree).as_node_weight_pairs().to_vec();
        Ok(Self {
            n_segments,
            points_per_segment,
            grading_ratio,
            focus,
            rule,
        })
    }

    /// Equal-width segments.
    pub fn uniform(n_segments: usize, points_per_segment: usize) -> Result<Self> {
        Self::new(n_segments, points_per_segment, 1.0, 0.0)
    }

    /// Graded rule whose finest segment on an interval of length `length` is
    /// about `finest` wide. Falls back to uniform when that is already fine enough.
    pub fn with_finest_width(
        n_segments: usize,
        points_per_segment: usize,
        focus: f64,
        length: f64,
        finest: f64,
    ) -> Result<Self> {
        let ratio = ratio_for_finest_width(length, n_segments, finest);
        Self::new(n_segments, points_per_segment, ratio, focus)
    }

    pub fn n_segments(&self) -> usize {
        self.n_segments
    }

    pub fn points_per_segment(&self) -> usize {
        self.points_per_segment
    }

    pub fn grading_ratio(&self) -> f64 {
        self.grading_ratio
    }

    pub fn focus(&self) -> f64 {
        self.focus
    }

    pub fn total_points(&self) -> usize {
        self.n_segments * self.points_per_segment
    }

    pub fn with_focus(&self, focus: f64) -> Self {
        Self {
            focus,
            ..self.clone()
        }
    }

    /// Twice the segments; the grading ratio is replaced by its square root so
    /// that the graded region keeps its extent.
    pub fn refined(&self) -> Self {
        Self {
            n_segments: 2 * self.n_segments,
            grading_ratio: self.grading_ratio.sqrt(),
            ..self.clone()
        }
    }

    /// Segment boundaries on `[a, b]`, ascending.
    pub fn breakpoints(&self, a: f64, b: f64) -> Result<Vec<f64>> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Input(format!(
                "integration interval [{a}, {b}] is empty or not finite"
            )));
        }
        let n = self.n_segments;
        let r = self.grading_ratio;
        let mut points = Vec::with_capacity(n + 1);
        if self.focus <= a {
            points.extend(graded(a, b, n, r));
        } else if self.focus >= b {
            let mut rev = graded(b, a, n, r);
            rev.reverse();
            points.extend(rev);
        } else if n == 1 {
            points.extend([a, b]);
        } else {
            let f = self.focus;
            let n_left = n / 2;
            let n_right = n - n_left;
            let mut left = graded(f, a, n_left, r);
            left.reverse();
            points.extend(left);
            points.pop();
            points.extend(graded(f, b, n_right, r));
        }
        Ok(points)
    }

    /// Abscissa-weight pairs of the composite rule on `[a, b]`, ascending in abscissa.
    pub fn nodes(&self, a: f64, b: f64) -> Result<Vec<(f64, f64)>> {
        let bps = self.breakpoints(a, b)?;
        let mut out = Vec::with_capacity(self.total_points());
        for w in bps.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            out.extend(self.rule.iter().map(|&(x, wt)| (mid + half * x, half * wt)));
        }
        Ok(out)
    }
}

/// Segment boundaries from `start` (finest end) to `end`, in that order.
fn graded(start: f64, end: f64, n: usize, ratio: f64) -> Vec<f64> {
    let len = end - start;
    let mut pts = Vec::with_capacity(n + 1);
    pts.push(start);
    if ratio == 1.0 {
        pts.extend((1..n).map(|i| start + len * i as f64 / n as f64));
    } else {
        // widths w0 r^i with sum len
        let w0 = len * (ratio - 1.0) / (ratio.powi(n as i32) - 1.0);
        let mut acc = 0.0;
        let mut w = w0;
        for _ in 1..n {
            acc += w;
            pts.push(start + acc);
            w *= ratio;
        }
    }
    pts.push(end);
    pts
}

/// Grading ratio `r >= 1` for which `n` geometric segments on `length` start
/// with width `finest`; `1` if uniform segments are already that fine.
pub fn ratio_for_finest_width(length: f64, n: usize, finest: f64) -> f64 {
    if n <= 1 || !(finest > 0.0) || finest * n as f64 >= length {
        return 1.0;
    }
    let first_width = |r: f64| length * (r - 1.0) / (r.powi(n as i32) - 1.0);
    let (mut lo, mut hi) = (1.0 + 1e-12, 2.0);
    while first_width(hi) > finest {
        hi *= 2.0;
        if hi > 1e6 {
            return hi;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if first_width(mid) > finest {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Integrates `f` over `[a, b]` with the composite rule.
pub fn gauss_segment_integrate<F>(mut f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    try_gauss_segment_integrate(|x| Ok(f(x)), a, b, spec)
}

/// As [`gauss_segment_integrate`] for a fallible integrand; the first error aborts.
pub fn try_gauss_segment_integrate<F>(
    mut f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut sum = 0.0;
    for (x, w) in spec.nodes(a, b)? {
        let v = f(x)?;
        if !v.is_finite() {
            return Err(Error::NonFinite { at: x, value: v });
        }
        sum += w * v;
    }
    Ok(sum)
}
