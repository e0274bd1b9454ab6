//! Two-dimensional plane-stress elasticity with an asymmetric modulus `μ0`.
//!
//! * [`constitutive`]: moduli, strain/stress tensors and the forward and
//!   inverse constitutive law.
//! * [`laurent`] and [`potentials`]: complex potentials `φ`, `ψ` as finite
//!   Laurent series and the fields they generate.
//! * [`kirsch`]: the circular hole under uniaxial tension.
//! * [`verify`]: finite-difference residual checks of the governing identities.

pub mod constitutive;
pub mod error;
pub mod grid;
pub mod kirsch;
pub mod laurent;
pub mod potentials;
pub mod verify;

pub use constitutive::{
    check_polar_factor, constitutive_determinant, constitutive_matrix, decompose_stress,
    inverse_constitutive_matrix, strain_from_stress, stress_from_strain, DisplacementGradient,
    Mat3, Moduli, Strain2, Stress2,
};
pub use error::{Error, Result};
pub use grid::{Domain, Grid, PolarGridSpec};
pub use kirsch::{boundary_limit_mu_to_zero, KirschProblem, PolarDisplacement, PolarStress};
pub use laurent::LaurentPotential;
pub use num_complex::Complex64;
pub use potentials::{
    harmonic_components, FieldSample, HarmonicComponents, PotentialPair, RigidMotion,
};
pub use verify::{ResidualReport, StencilConfig, SuiteConfig, SuiteReport};
