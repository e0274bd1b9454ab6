//! Finite Laurent series `Σ c_n zⁿ + c_log·ln z` on the punctured plane.

use std::fmt;
use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Coefficients `c_n` for `n = n_min ..= n_max`, plus an optional `ln z` term.
///
/// The logarithm uses the principal branch. It only arises as the
/// antiderivative of a `1/z` term.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPotential {
    n_min: i32,
    coeffs: Vec<Complex64>,
    log_coeff: Complex64,
}

impl LaurentPotential {
    pub fn zero() -> Self {
        Self {
            n_min: 0,
            coeffs: Vec::new(),
            log_coeff: ZERO,
        }
    }

    /// Series with coefficients starting at exponent `n_min`.
    pub fn new(n_min: i32, coeffs: Vec<Complex64>) -> Self {
        Self {
            n_min,
            coeffs,
            log_coeff: ZERO,
        }
    }

    /// Series from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, Complex64)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![ZERO; (hi - lo + 1) as usize];
        for (n, c) in terms {
            coeffs[(n - lo) as usize] += c;
        }
        Self::new(lo, coeffs)
    }

    /// Single term `c·zⁿ`.
    pub fn monomial(n: i32, c: Complex64) -> Self {
        Self::new(n, vec![c])
    }

    pub fn with_log(mut self, log_coeff: Complex64) -> Self {
        self.log_coeff = log_coeff;
        self
    }

    pub fn n_min(&self) -> i32 {
        self.n_min
    }

    /// Largest stored exponent; `n_min − 1` when no coefficients are stored.
    pub fn n_max(&self) -> i32 {
        self.n_min + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn log_coeff(&self) -> Complex64 {
        self.log_coeff
    }

    /// Coefficient of `zⁿ` (zero outside the stored range).
    pub fn coeff(&self, n: i32) -> Complex64 {
        let idx = n - self.n_min;
        if idx < 0 {
            return ZERO;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(ZERO)
    }

    pub fn has_log(&self) -> bool {
        self.log_coeff != ZERO
    }

    /// True when the series is singular at the origin.
    pub fn singular_at_origin(&self) -> bool {
        self.has_log() || self.terms().any(|(n, c)| n < 0 && c != ZERO)
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(move |(i, c)| (self.n_min + i as i32, *c))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z == ZERO && self.singular_at_origin() {
            return Err(Error::Domain("Laurent series evaluated at z = 0".into()));
        }
        let mut sum = ZERO;
        // Horner in z for n ≥ 0, in 1/z for n < 0
        let hi = self.n_max();
        if hi >= 0 {
            let lo = self.n_min.max(0);
            let mut acc = ZERO;
            for n in (lo..=hi).rev() {
                acc = acc * z + self.coeff(n);
            }
            if lo > 0 {
                acc *= z.powi(lo);
            }
            sum += acc;
        }
        if self.n_min < 0 {
            let w = z.inv();
            let top = hi.min(-1);
            let mut acc = ZERO;
            for n in self.n_min..=top {
                acc = acc * w + self.coeff(n);
            }
            // acc = Σ c_n w^(top − n)
            acc *= w.powi(-top);
            sum += acc;
        }
        if self.has_log() {
            sum += self.log_coeff * z.ln();
        }
        Ok(sum)
    }

    pub fn derivative(&self) -> Self {
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * f64::from(self.n_min + i as i32))
            .collect();
        let base = Self::new(self.n_min - 1, coeffs);
        if self.has_log() {
            // d/dz (c ln z) = c z⁻¹
            &base + &Self::monomial(-1, self.log_coeff)
        } else {
            base
        }
    }

    /// Term-wise antiderivative with zero integration constant.
    ///
    /// A `c/z` term becomes `c·ln z`. A series that already carries a
    /// logarithm has no antiderivative in this representation.
    pub fn antiderivative(&self) -> Result<Self> {
        if self.has_log() {
            return Err(Error::InvalidInput(
                "antiderivative of ln z is not a Laurent series".into(),
            ));
        }
        let mut log_coeff = ZERO;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let n = self.n_min + i as i32;
                if n == -1 {
                    log_coeff = *c;
                    ZERO
                } else {
                    c / f64::from(n + 1)
                }
            })
            .collect();
        Ok(Self {
            n_min: self.n_min + 1,
            coeffs,
            log_coeff,
        })
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            n_min: self.n_min,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            log_coeff: self.log_coeff * k,
        }
    }

    /// Maximum coefficient difference over the union of both exponent ranges.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let lo = self.n_min.min(other.n_min);
        let hi = self.n_max().max(other.n_max());
        let terms = (lo..=hi).map(|n| (self.coeff(n) - other.coeff(n)).norm());
        terms
            .chain(std::iter::once((self.log_coeff - other.log_coeff).norm()))
            .fold(0.0, f64::max)
    }
}

impl Default for LaurentPotential {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &LaurentPotential {
    type Output = LaurentPotential;

    fn add(self, rhs: &LaurentPotential) -> LaurentPotential {
        let lo = self.n_min.min(rhs.n_min);
        let hi = self.n_max().max(rhs.n_max());
        let mut out = if hi < lo {
            LaurentPotential::zero()
        } else {
            LaurentPotential::new(
                lo,
                (lo..=hi).map(|n| self.coeff(n) + rhs.coeff(n)).collect(),
            )
        };
        out.log_coeff = self.log_coeff + rhs.log_coeff;
        out
    }
}

impl Mul<f64> for &LaurentPotential {
    type Output = LaurentPotential;

    fn mul(self, k: f64) -> LaurentPotential {
        self.scale(Complex64::new(k, 0.0))
    }
}

impl fmt::Display for LaurentPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})·z^{n}")?;
            first = false;
        }
        if self.has_log() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})·ln z", self.log_coeff)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
