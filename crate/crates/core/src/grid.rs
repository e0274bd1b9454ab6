//! Sample point sets and the domains they live in.

use serde::Serialize;

use crate::error::{Error, Result};

/// Region on which a field is defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Domain {
    Plane,
    /// Everything outside (and on) a hole of the given radius centred at the origin.
    Exterior {
        radius: f64,
    },
}

impl Domain {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        match *self {
            Domain::Plane => true,
            Domain::Exterior { radius } => x.hypot(y) >= radius,
        }
    }

    /// Distance from `(x, y)` to the domain boundary (infinite for the plane).
    pub fn clearance(&self, x: f64, y: f64) -> f64 {
        match *self {
            Domain::Plane => f64::INFINITY,
            Domain::Exterior { radius } => x.hypot(y) - radius,
        }
    }
}

/// An ordered list of points plus the domain they must stay inside.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<(f64, f64)>,
    domain: Domain,
}

impl Grid {
    pub fn from_points(points: Vec<(f64, f64)>, domain: Domain) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("grid has no points".into()));
        }
        if let Some(&(x, y)) = points.iter().find(|(x, y)| !domain.contains(*x, *y)) {
            return Err(Error::Domain(format!(
                "grid point ({x}, {y}) lies outside the domain"
            )));
        }
        Ok(Self { points, domain })
    }

    /// Polar grid in r-major order.
    pub fn polar(spec: &PolarGridSpec, domain: Domain) -> Result<Self> {
        let points = spec
            .nodes()?
            .into_iter()
            .map(|(r, t)| {
                let (s, c) = t.sin_cos();
                (r * c, r * s)
            })
            .collect();
        Self::from_points(points, domain)
    }

    /// Tensor-product grid over a box, rows of constant `y`.
    pub fn cartesian(
        x_range: (f64, f64),
        nx: usize,
        y_range: (f64, f64),
        ny: usize,
        domain: Domain,
    ) -> Result<Self> {
        let xs = linspace(x_range.0, x_range.1, nx)?;
        let ys = linspace(y_range.0, y_range.1, ny)?;
        let points = ys
            .iter()
            .flat_map(|&y| xs.iter().map(move |&x| (x, y)))
            .collect();
        Self::from_points(points, domain)
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Smallest distance from any point to the domain boundary.
    pub fn min_clearance(&self) -> f64 {
        self.points
            .iter()
            .map(|&(x, y)| self.domain.clearance(x, y))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Radii `r_min..=r_max` (inclusive) and angles `theta_start + k·Δ`,
/// `k < n_theta`, with `Δ = (theta_end − theta_start)/n_theta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarGridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub n_r: usize,
    pub theta_start: f64,
    pub theta_end: f64,
    pub n_theta: usize,
}

impl PolarGridSpec {
    /// Full circle, `θ ∈ [0, 2π)`.
    pub fn full(r_min: f64, r_max: f64, n_r: usize, n_theta: usize) -> Self {
        Self {
            r_min,
            r_max,
            n_r,
            theta_start: 0.0,
            theta_end: std::f64::consts::TAU,
            n_theta,
        }
    }

    pub fn radii(&self) -> Result<Vec<f64>> {
        let ordered = self.r_min > 0.0 && self.r_max >= self.r_min;
        if !ordered || !self.r_max.is_finite() {
            return Err(Error::InvalidInput(format!(
                "radial range [{}, {}] must satisfy 0 < r_min <= r_max",
                self.r_min, self.r_max
            )));
        }
        linspace(self.r_min, self.r_max, self.n_r)
    }

    pub fn angles(&self) -> Result<Vec<f64>> {
        if self.n_theta == 0 {
            return Err(Error::InvalidInput("n_theta must be at least 1".into()));
        }
        if !(self.theta_start.is_finite() && self.theta_end.is_finite()) {
            return Err(Error::InvalidInput("angular range must be finite".into()));
        }
        let step = (self.theta_end - self.theta_start) / self.n_theta as f64;
        Ok((0..self.n_theta)
            .map(|k| self.theta_start + k as f64 * step)
            .collect())
    }

    /// `(r, θ)` pairs in r-major order.
    pub fn nodes(&self) -> Result<Vec<(f64, f64)>> {
        let radii = self.radii()?;
        let angles = self.angles()?;
        Ok(radii
            .iter()
            .flat_map(|&r| angles.iter().map(move |&t| (r, t)))
            .collect())
    }

    pub fn len(&self) -> usize {
        self.n_r * self.n_theta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `n` evenly spaced values from `a` to `b` inclusive; `n = 1` yields `[a]`.
pub fn linspace(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    match n {
        0 => Err(Error::InvalidInput("need at least one sample".into())),
        1 => Ok(vec![a]),
        _ => {
            let step = (b - a) / (n - 1) as f64;
            let mut out: Vec<f64> = (0..n).map(|i| a + i as f64 * step).collect();
            out[n - 1] = b;
            Ok(out)
        }
    }
}

/// `n` log-spaced values from `a` to `b` inclusive (both positive).
pub fn logspace(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidInput(
            "log-spaced bounds must be positive".into(),
        ));
    }
    let mut out: Vec<f64> = linspace(a.log10(), b.log10(), n)?
        .into_iter()
        .map(|e| 10f64.powf(e))
        .collect();
    out[0] = a;
    if n > 1 {
        out[n - 1] = b;
    }
    Ok(out)
}
