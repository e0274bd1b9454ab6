//! Infinite plate with a traction-free circular hole of radius `R` under
//! remote uniaxial tension `p` along `x`.
//!
//! Stresses are moduli-independent. Displacements come from the complex
//! potentials
//!
//! ```text
//! φ(z) =  (p/4) (z + 2R²/z)
//! ψ(z) = −(p/2) (z + R²/z − R⁴/z³)
//! ```
//!
//! pushed through the asymmetric displacement formula, and are also
//! available in closed form.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::constitutive::Moduli;
use crate::error::{Error, Result};
use crate::grid::{Domain, PolarGridSpec};
use crate::laurent::LaurentPotential;
use crate::potentials::{FieldSample, PotentialPair};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarStress {
    pub srr: f64,
    pub stt: f64,
    pub srt: f64,
}

/// Radial and tangential displacement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarDisplacement {
    pub ur: f64,
    pub utheta: f64,
}

impl From<Complex64> for PolarDisplacement {
    fn from(w: Complex64) -> Self {
        Self {
            ur: w.re,
            utheta: w.im,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KirschProblem {
    p: f64,
    radius: f64,
    moduli: Moduli,
}

impl KirschProblem {
    pub fn new(p: f64, radius: f64, moduli: Moduli) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::InvalidInput(format!("load p = {p} must be finite")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "hole radius R = {radius} must be positive"
            )));
        }
        Ok(Self { p, radius, moduli })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn moduli(&self) -> &Moduli {
        &self.moduli
    }

    pub fn domain(&self) -> Domain {
        Domain::Exterior {
            radius: self.radius,
        }
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        if r < self.radius || !r.is_finite() {
            return Err(Error::Domain(format!(
                "r = {r} lies inside the hole (R = {})",
                self.radius
            )));
        }
        Ok(())
    }

    pub fn potentials(&self) -> PotentialPair {
        let (p, r2) = (self.p, self.radius * self.radius);
        let re = |x: f64| Complex64::new(x, 0.0);
        let phi = LaurentPotential::from_terms([(1, re(p / 4.0)), (-1, re(p * r2 / 2.0))]);
        let psi = LaurentPotential::from_terms([
            (1, re(-p / 2.0)),
            (-1, re(-p * r2 / 2.0)),
            (-3, re(p * r2 * r2 / 2.0)),
        ]);
        PotentialPair::new(phi, psi).expect("hole potentials carry no logarithm")
    }

    /// Closed-form polar stresses for `r ≥ R`.
    pub fn stresses_polar(&self, r: f64, theta: f64) -> Result<PolarStress> {
        self.check_radius(r)?;
        let half = 0.5 * self.p;
        let rho2 = (self.radius * self.radius) / (r * r);
        let rho4 = rho2 * rho2;
        let (s2, c2) = (2.0 * theta).sin_cos();
        Ok(PolarStress {
            srr: half * (1.0 - rho2) + half * (1.0 - 4.0 * rho2 + 3.0 * rho4) * c2,
            stt: half * (1.0 + rho2) - half * (1.0 + 3.0 * rho4) * c2,
            srt: -half * (1.0 + 2.0 * rho2 - 3.0 * rho4) * s2,
        })
    }

    /// Displacements from the potentials.
    pub fn displacements(&self, r: f64, theta: f64) -> Result<PolarDisplacement> {
        self.check_radius(r)?;
        Ok(self
            .potentials()
            .displacement_polar(&self.moduli, r, theta)?
            .into())
    }

    /// Closed-form displacements, including the `μ0` corrections.
    pub fn displacements_closed_form(&self, r: f64, theta: f64) -> Result<PolarDisplacement> {
        self.check_radius(r)?;
        let m = &self.moduli;
        let a2 = m.ae_norm2();
        let (shear, asym, inv_l0) = (m.mu() / a2, m.mu0() / a2, 1.0 / m.lambda0());
        let q = 0.25 * self.p * self.radius;
        let t = r / self.radius;
        let s = self.radius / r;
        let s3 = s * s * s;
        let (s2, c2) = (2.0 * theta).sin_cos();

        let ur = q * (inv_l0 * t + shear * s)
            + q * asym * (t - 2.0 * s + s3) * s2
            + q * (2.0 * inv_l0 * s + shear * (t + 2.0 * s - s3)) * c2;
        let utheta = q * asym * (s - t) + q * asym * (t - s3) * c2
            - q * (2.0 * inv_l0 * s + shear * (t + s3)) * s2;
        Ok(PolarDisplacement { ur, utheta })
    }

    /// Classical (`μ0 = 0`) displacements; `μ0` of the problem is ignored.
    pub fn classical_displacements(&self, r: f64, theta: f64) -> Result<PolarDisplacement> {
        self.check_radius(r)?;
        let m = &self.moduli;
        if m.mu() <= 0.0 {
            return Err(Error::InvalidModuli(
                "classical displacements require mu > 0".into(),
            ));
        }
        let (inv_mu, inv_l0) = (1.0 / m.mu(), 1.0 / m.lambda0());
        let q = 0.25 * self.p * self.radius;
        let t = r / self.radius;
        let s = self.radius / r;
        let s3 = s * s * s;
        let (s2, c2) = (2.0 * theta).sin_cos();
        Ok(PolarDisplacement {
            ur: q * (inv_l0 * t + inv_mu * s)
                + q * (2.0 * inv_l0 * s + inv_mu * (t + 2.0 * s - s3)) * c2,
            utheta: -q * (2.0 * inv_l0 * s + inv_mu * (t + s3)) * s2,
        })
    }

    /// `pR(μ0² + 2μ² + λμ) / (4(λ + μ)(μ0² + μ²))`, the amplitude of
    /// `u_r` on the hole boundary.
    pub fn boundary_coefficient(&self) -> f64 {
        let m = &self.moduli;
        let (mu, mu0, lambda) = (m.mu(), m.mu0(), m.lambda());
        self.p * self.radius * (mu0 * mu0 + 2.0 * mu * mu + lambda * mu)
            / (4.0 * m.lambda0() * m.ae_norm2())
    }

    /// `pR(λ + 2μ) / (4μ(λ + μ))`, the classical boundary amplitude.
    pub fn classical_boundary_coefficient(&self) -> Result<f64> {
        let m = &self.moduli;
        if m.mu() <= 0.0 {
            return Err(Error::InvalidModuli(
                "classical boundary values require mu > 0".into(),
            ));
        }
        Ok(self.p * self.radius * (m.lambda() + 2.0 * m.mu()) / (4.0 * m.mu() * m.lambda0()))
    }

    /// Displacements on `r = R`.
    pub fn boundary_displacements(&self, theta: f64) -> PolarDisplacement {
        let k = self.boundary_coefficient();
        let (s2, c2) = (2.0 * theta).sin_cos();
        PolarDisplacement {
            ur: k * (1.0 + 2.0 * c2),
            utheta: -2.0 * k * s2,
        }
    }

    /// Every field quantity at `(r, θ)`: polar stresses from the closed
    /// form, everything else from the potentials.
    pub fn sample(&self, r: f64, theta: f64) -> Result<FieldSample> {
        self.sample_with(&self.potentials(), r, theta)
    }

    fn sample_with(&self, pair: &PotentialPair, r: f64, theta: f64) -> Result<FieldSample> {
        self.check_radius(r)?;
        let z = Complex64::from_polar(r, theta);
        let polar = self.stresses_polar(r, theta)?;
        let cart = pair.stresses(z)?;
        let disp = pair.displacement(&self.moduli, z)?;
        let dpol = Complex64::from_polar(1.0, -theta) * disp;
        Ok(FieldSample {
            x: z.re,
            y: z.im,
            r,
            theta,
            s11: cart.s11,
            s12: cart.s12,
            s22: cart.s22,
            srr: polar.srr,
            stt: polar.stt,
            srt: polar.srt,
            u: disp.re,
            v: disp.im,
            ur: dpol.re,
            utheta: dpol.im,
            airy: pair.airy(z)?,
            trace: cart.s11 + cart.s22,
        })
    }

    /// Samples a polar grid; rows come back in r-major order.
    pub fn sample_grid(&self, spec: &PolarGridSpec) -> Result<Vec<FieldSample>> {
        let nodes = spec.nodes()?;
        if let Some(&(r, _)) = nodes.iter().find(|(r, _)| *r < self.radius) {
            return Err(Error::Domain(format!(
                "grid radius {r} lies inside the hole (R = {})",
                self.radius
            )));
        }
        let pair = self.potentials();
        nodes
            .par_iter()
            .map(|&(r, t)| self.sample_with(&pair, r, t))
            .collect()
    }
}

/// Boundary displacements in the limit `μ → 0` (any `μ0 ≠ 0`).
pub fn boundary_limit_mu_to_zero(
    p: f64,
    radius: f64,
    lambda: f64,
    theta: f64,
) -> Result<PolarDisplacement> {
    if lambda.is_nan() || lambda <= 0.0 {
        return Err(Error::InvalidModuli(format!(
            "lambda = {lambda} must be positive"
        )));
    }
    let (s2, c2) = (2.0 * theta).sin_cos();
    Ok(PolarDisplacement {
        ur: p * radius / (4.0 * lambda) * (1.0 + 2.0 * c2),
        utheta: -p * radius / (2.0 * lambda) * s2,
    })
}
