//! Field evaluation from a pair of complex potentials `φ`, `ψ`.
//!
//! Airy function `U = Re[z̄ φ(z) + χ(z)]` with `χ′ = ψ`, stresses from the
//! Kolosov relations
//!
//! ```text
//! s11 + s22           = 4 Re φ′(z)
//! s22 − s11 + 2i s12  = 2 [z̄ φ″(z) + ψ′(z)]
//! ```
//!
//! and displacements for the asymmetric law
//!
//! ```text
//! u + iv = (1/λ0 + μ/|æ|²) φ(z) − æ/(2|æ|²) [φ(z) + z·conj(φ′(z)) + conj(ψ(z))]
//! ```
//!
//! which reduces to `2μ(u + iv) = κ0 φ − z·conj(φ′) − conj(ψ)` when `μ0 = 0`.

use num_complex::Complex64;
use serde::Serialize;

use crate::constitutive::{Moduli, Stress2};
use crate::error::{Error, Result};
use crate::laurent::LaurentPotential;

/// `φ` and `ψ` with their derivatives and `χ = ∫ψ` precomputed.
#[derive(Debug, Clone)]
pub struct PotentialPair {
    phi: LaurentPotential,
    psi: LaurentPotential,
    dphi: LaurentPotential,
    ddphi: LaurentPotential,
    dpsi: LaurentPotential,
    chi: LaurentPotential,
}

impl PotentialPair {
    /// Fails when `ψ` carries a logarithm (no Laurent antiderivative).
    pub fn new(phi: LaurentPotential, psi: LaurentPotential) -> Result<Self> {
        let chi = psi.antiderivative()?;
        let dphi = phi.derivative();
        let ddphi = dphi.derivative();
        let dpsi = psi.derivative();
        Ok(Self {
            phi,
            psi,
            dphi,
            ddphi,
            dpsi,
            chi,
        })
    }

    pub fn zero() -> Self {
        Self::new(LaurentPotential::zero(), LaurentPotential::zero())
            .expect("zero series has an antiderivative")
    }

    pub fn phi(&self) -> &LaurentPotential {
        &self.phi
    }

    pub fn psi(&self) -> &LaurentPotential {
        &self.psi
    }

    /// `χ` with zero integration constant.
    pub fn chi(&self) -> &LaurentPotential {
        &self.chi
    }

    /// `U = Re(z̄ φ(z) + χ(z))`.
    ///
    /// A complex `ln z` coefficient in `χ` makes `U` multivalued; the
    /// principal branch is used, so such pairs are discontinuous across the
    /// negative real axis.
    pub fn airy(&self, z: Complex64) -> Result<f64> {
        Ok((z.conj() * self.phi.eval(z)? + self.chi.eval(z)?).re)
    }

    /// `U_x + i U_y = φ(z) + z·conj(φ′(z)) + conj(ψ(z))`.
    pub fn airy_gradient(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.phi.eval(z)? + z * self.dphi.eval(z)?.conj() + self.psi.eval(z)?.conj())
    }

    pub fn stresses(&self, z: Complex64) -> Result<Stress2> {
        let sum = 4.0 * self.dphi.eval(z)?.re;
        let w = 2.0 * (z.conj() * self.ddphi.eval(z)? + self.dpsi.eval(z)?);
        // w = s22 − s11 + 2i s12
        Ok(Stress2 {
            s11: 0.5 * (sum - w.re),
            s12: 0.5 * w.im,
            s22: 0.5 * (sum + w.re),
        })
    }

    /// Complex displacement `u + iv`, rigid motion gauged to zero.
    pub fn displacement(&self, m: &Moduli, z: Complex64) -> Result<Complex64> {
        let a2 = m.ae_norm2();
        let phi = self.phi.eval(z)?;
        let grad = self.airy_gradient(z)?;
        let k = 1.0 / m.lambda0() + m.mu() / a2;
        Ok(k * phi - m.ae() / (2.0 * a2) * grad)
    }

    /// `u_r + i u_θ = e^{−iθ}(u + iv)` at `z = r e^{iθ}`.
    pub fn displacement_polar(&self, m: &Moduli, r: f64, theta: f64) -> Result<Complex64> {
        if r.is_nan() || r <= 0.0 {
            return Err(Error::Domain(format!("radius r = {r} must be positive")));
        }
        let z = Complex64::from_polar(r, theta);
        Ok(Complex64::from_polar(1.0, -theta) * self.displacement(m, z)?)
    }

    /// The classical (`μ0 = 0`) displacement `(κ0 φ − z·conj(φ′) − conj(ψ)) / 2μ`.
    /// `μ0` is ignored.
    pub fn classical_displacement(&self, m: &Moduli, z: Complex64) -> Result<Complex64> {
        let kappa0 = m.kappa0()?;
        let phi = self.phi.eval(z)?;
        let rest = z * self.dphi.eval(z)?.conj() + self.psi.eval(z)?.conj();
        Ok((kappa0 * phi - rest) / (2.0 * m.mu()))
    }

    /// Every field quantity at one point.
    pub fn sample(&self, m: &Moduli, z: Complex64) -> Result<FieldSample> {
        let stress = self.stresses(z)?;
        let disp = self.displacement(m, z)?;
        let theta = z.arg();
        let (srr, stt, srt) = stress.to_polar(theta);
        let polar = Complex64::from_polar(1.0, -theta) * disp;
        Ok(FieldSample {
            x: z.re,
            y: z.im,
            r: z.norm(),
            theta,
            s11: stress.s11,
            s12: stress.s12,
            s22: stress.s22,
            srr,
            stt,
            srt,
            u: disp.re,
            v: disp.im,
            ur: polar.re,
            utheta: polar.im,
            airy: self.airy(z)?,
            trace: 4.0 * self.dphi.eval(z)?.re,
        })
    }
}

/// Real and imaginary parts of `φ` and of `f = 4φ′ = Q + iR`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HarmonicComponents {
    pub p: f64,
    pub q: f64,
    pub trace: f64,
    pub conjugate: f64,
}

/// `p + iq = φ(z)` and `Q + iR = 4φ′(z)`; `Q` is the stress trace.
pub fn harmonic_components(phi: &LaurentPotential, z: Complex64) -> Result<HarmonicComponents> {
    let val = phi.eval(z)?;
    let f = 4.0 * phi.derivative().eval(z)?;
    Ok(HarmonicComponents {
        p: val.re,
        q: val.im,
        trace: f.re,
        conjugate: f.im,
    })
}

/// All field quantities at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldSample {
    pub x: f64,
    pub y: f64,
    pub r: f64,
    pub theta: f64,
    pub s11: f64,
    pub s12: f64,
    pub s22: f64,
    pub srr: f64,
    pub stt: f64,
    pub srt: f64,
    pub u: f64,
    pub v: f64,
    pub ur: f64,
    pub utheta: f64,
    pub airy: f64,
    pub trace: f64,
}

/// Rigid in-plane motion: translation plus infinitesimal rotation.
///
/// Displacements computed from potentials carry none of this; add it
/// explicitly when a boundary condition pins the body differently.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct RigidMotion {
    pub tx: f64,
    pub ty: f64,
    pub rotation: f64,
}

impl RigidMotion {
    /// Displacement of the rigid motion at `z`.
    pub fn at(&self, z: Complex64) -> Complex64 {
        Complex64::new(self.tx, self.ty) + Complex64::new(0.0, self.rotation) * z
    }

    pub fn apply(&self, z: Complex64, displacement: Complex64) -> Complex64 {
        displacement + self.at(z)
    }
}
