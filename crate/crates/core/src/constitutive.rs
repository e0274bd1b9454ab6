//! Moduli, plane strain/stress tensors and the asymmetric constitutive law.
//!
//! Stress is the sum of a dilatational part `θ·λ0·I` and a deviatoric part
//! `M·ε⁰` where `M = [[μ, μ0], [−μ0, μ]]` and
//! `ε⁰ = [[u_x − v_y, u_y + v_x], [u_y + v_x, v_y − u_x]]`.
//! In components (e12 stored once, e21 ≡ e12):
//!
//! ```text
//! s11 = (μ + λ0) e11 + 2 μ0 e12 + (λ0 − μ) e22
//! s12 =     −μ0 e11 + 2 μ  e12 +        μ0 e22
//! s22 = (λ0 − μ) e11 − 2 μ0 e12 + (λ0 + μ) e22
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Mat3 = [[f64; 3]; 3];

/// Elastic constants `λ0 = λ + μ`, shear modulus `μ` and asymmetric modulus `μ0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moduli {
    lambda0: f64,
    mu: f64,
    mu0: f64,
}

impl Moduli {
    /// Builds moduli from `λ0`. Requires `λ0 > 0`, `μ ≥ 0` and `μ0² + μ² > 0`.
    pub fn new(lambda0: f64, mu: f64, mu0: f64) -> Result<Self> {
        if !(lambda0.is_finite() && mu.is_finite() && mu0.is_finite()) {
            return Err(Error::InvalidModuli("moduli must be finite".into()));
        }
        if lambda0 <= 0.0 {
            return Err(Error::InvalidModuli(format!(
                "lambda0 = {lambda0} must be positive"
            )));
        }
        if mu < 0.0 {
            return Err(Error::InvalidModuli(format!(
                "mu = {mu} must be non-negative"
            )));
        }
        if mu0 * mu0 + mu * mu <= 0.0 {
            return Err(Error::InvalidModuli(
                "mu and mu0 cannot both vanish (complex modulus would be zero)".into(),
            ));
        }
        Ok(Self { lambda0, mu, mu0 })
    }

    /// Builds moduli from the Lamé-style `λ`, deriving `λ0 = λ + μ`.
    pub fn from_lambda(lambda: f64, mu: f64, mu0: f64) -> Result<Self> {
        Self::new(lambda + mu, mu, mu0)
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn mu0(&self) -> f64 {
        self.mu0
    }

    pub fn lambda(&self) -> f64 {
        self.lambda0 - self.mu
    }

    /// Complex modulus `æ = μ + iμ0`.
    pub fn ae(&self) -> Complex64 {
        Complex64::new(self.mu, self.mu0)
    }

    /// `|æ|² = μ0² + μ²`.
    pub fn ae_norm2(&self) -> f64 {
        self.mu0 * self.mu0 + self.mu * self.mu
    }

    /// `κ0 = (λ + 3μ)/(λ + μ)`, the classical displacement constant.
    /// Only meaningful on the classical path, so `μ = 0` is rejected.
    pub fn kappa0(&self) -> Result<f64> {
        if self.mu <= 0.0 {
            return Err(Error::InvalidModuli("kappa0 requires mu > 0".into()));
        }
        Ok((self.lambda() + 3.0 * self.mu) / self.lambda0)
    }

    /// The same moduli with `μ0` replaced.
    pub fn with_mu0(&self, mu0: f64) -> Result<Self> {
        Self::new(self.lambda0, self.mu, mu0)
    }

    /// The 2×2 matrix `M` multiplying `ε⁰`.
    pub fn polar_factor(&self) -> [[f64; 2]; 2] {
        [[self.mu, self.mu0], [-self.mu0, self.mu]]
    }
}

/// Symmetric plane strain.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Strain2 {
    pub e11: f64,
    pub e12: f64,
    pub e22: f64,
}

impl Strain2 {
    pub fn new(e11: f64, e12: f64, e22: f64) -> Self {
        Self { e11, e12, e22 }
    }

    /// Dilatation `θ = e11 + e22 = div u`.
    pub fn trace(&self) -> f64 {
        self.e11 + self.e22
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.e11, self.e12, self.e22]
    }
}

/// Symmetric plane stress.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Stress2 {
    pub s11: f64,
    pub s12: f64,
    pub s22: f64,
}

impl Stress2 {
    pub fn new(s11: f64, s12: f64, s22: f64) -> Self {
        Self { s11, s12, s22 }
    }

    pub fn trace(&self) -> f64 {
        self.s11 + self.s22
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.s11, self.s12, self.s22]
    }

    /// Rotates into polar components `(srr, stt, srt)` at angle `theta`.
    pub fn to_polar(&self, theta: f64) -> (f64, f64, f64) {
        let half_sum = 0.5 * (self.s11 + self.s22);
        let half_diff = 0.5 * (self.s11 - self.s22);
        let (s2, c2) = (2.0 * theta).sin_cos();
        let srr = half_sum + half_diff * c2 + self.s12 * s2;
        let stt = half_sum - half_diff * c2 - self.s12 * s2;
        let srt = -half_diff * s2 + self.s12 * c2;
        (srr, stt, srt)
    }

    /// Inverse of [`Stress2::to_polar`].
    pub fn from_polar(srr: f64, stt: f64, srt: f64, theta: f64) -> Self {
        let half_sum = 0.5 * (srr + stt);
        let half_diff = 0.5 * (srr - stt);
        let (s2, c2) = (2.0 * theta).sin_cos();
        Self {
            s11: half_sum + half_diff * c2 - srt * s2,
            s12: half_diff * s2 + srt * c2,
            s22: half_sum - half_diff * c2 + srt * s2,
        }
    }
}

impl std::ops::Add for Stress2 {
    type Output = Stress2;

    fn add(self, rhs: Stress2) -> Stress2 {
        Stress2::new(self.s11 + rhs.s11, self.s12 + rhs.s12, self.s22 + rhs.s22)
    }
}

/// Partial derivatives of the displacement `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DisplacementGradient {
    pub ux: f64,
    pub uy: f64,
    pub vx: f64,
    pub vy: f64,
}

impl DisplacementGradient {
    pub fn new(ux: f64, uy: f64, vx: f64, vy: f64) -> Self {
        Self { ux, uy, vx, vy }
    }

    pub fn strain(&self) -> Strain2 {
        Strain2::new(self.ux, 0.5 * (self.uy + self.vx), self.vy)
    }

    pub fn dilatation(&self) -> f64 {
        self.ux + self.vy
    }
}

pub fn stress_from_strain(m: &Moduli, e: &Strain2) -> Stress2 {
    let (l0, mu, mu0) = (m.lambda0, m.mu, m.mu0);
    Stress2 {
        s11: (mu + l0) * e.e11 + 2.0 * mu0 * e.e12 + (l0 - mu) * e.e22,
        s12: -mu0 * e.e11 + 2.0 * mu * e.e12 + mu0 * e.e22,
        s22: (l0 - mu) * e.e11 - 2.0 * mu0 * e.e12 + (l0 + mu) * e.e22,
    }
}

/// Inverse of [`stress_from_strain`], using `det A = 8 λ0 |æ|²`.
pub fn strain_from_stress(m: &Moduli, s: &Stress2) -> Strain2 {
    let (l0, mu, mu0) = (m.lambda0, m.mu, m.mu0);
    let a2 = m.ae_norm2();
    let scale = 2.0 / (8.0 * l0 * a2);
    Strain2 {
        e11: scale * ((a2 + l0 * mu) * s.s11 - 2.0 * mu0 * l0 * s.s12 + (a2 - l0 * mu) * s.s22),
        e12: scale * (l0 * mu0 * s.s11 + 2.0 * mu * l0 * s.s12 - l0 * mu0 * s.s22),
        e22: scale * ((a2 - l0 * mu) * s.s11 + 2.0 * mu0 * l0 * s.s12 + (a2 + l0 * mu) * s.s22),
    }
}

/// Matrix `A` of the constitutive system acting on `(e11, e12, e22)`.
pub fn constitutive_matrix(m: &Moduli) -> Mat3 {
    let (l0, mu, mu0) = (m.lambda0, m.mu, m.mu0);
    [
        [mu + l0, 2.0 * mu0, l0 - mu],
        [-mu0, 2.0 * mu, mu0],
        [l0 - mu, -2.0 * mu0, l0 + mu],
    ]
}

/// Closed-form `A⁻¹`.
pub fn inverse_constitutive_matrix(m: &Moduli) -> Mat3 {
    let (l0, mu, mu0) = (m.lambda0, m.mu, m.mu0);
    let a2 = m.ae_norm2();
    let k = 1.0 / (4.0 * l0 * a2);
    [
        [k * (a2 + l0 * mu), -k * 2.0 * mu0 * l0, k * (a2 - l0 * mu)],
        [k * mu0 * l0, k * 2.0 * mu * l0, -k * mu0 * l0],
        [k * (a2 - l0 * mu), k * 2.0 * mu0 * l0, k * (a2 + l0 * mu)],
    ]
}

/// `det A = 8 λ0 (μ0² + μ²)`.
pub fn constitutive_determinant(m: &Moduli) -> f64 {
    8.0 * m.lambda0 * m.ae_norm2()
}

/// Splits the stress into `θλ0·I` and `M·ε⁰`.
pub fn decompose_stress(m: &Moduli, g: &DisplacementGradient) -> (Stress2, Stress2) {
    let theta = g.dilatation();
    let trace_part = Stress2::new(theta * m.lambda0, 0.0, theta * m.lambda0);

    let d = g.ux - g.vy;
    let shear = g.uy + g.vx;
    let eps0 = [[d, shear], [shear, -d]];
    let mm = m.polar_factor();
    let prod = mat2_mul(&mm, &eps0);
    // M·ε⁰ is symmetric for any gradient
    let deviator_part = Stress2::new(prod[0][0], prod[0][1], prod[1][1]);
    (trace_part, deviator_part)
}

/// Max-norm of `M·Mᵀ − |æ|²·I`.
///
/// `M/|æ|` is orthogonal, so this vanishes up to rounding for every valid
/// set of moduli.
pub fn check_polar_factor(m: &Moduli) -> f64 {
    let mm = m.polar_factor();
    let mt = [[mm[0][0], mm[1][0]], [mm[0][1], mm[1][1]]];
    let prod = mat2_mul(&mm, &mt);
    let a2 = m.ae_norm2();
    let mut worst = 0.0_f64;
    for (i, row) in prod.iter().enumerate() {
        for (j, &val) in row.iter().enumerate() {
            let target = if i == j { a2 } else { 0.0 };
            worst = worst.max((val - target).abs());
        }
    }
    worst
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat3_vec(a: &Mat3, v: &[f64; 3]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (o, row) in out.iter_mut().zip(a) {
        *o = row.iter().zip(v).map(|(x, y)| x * y).sum();
    }
    out
}

pub fn mat3_det(a: &Mat3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

fn mat2_mul(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}
