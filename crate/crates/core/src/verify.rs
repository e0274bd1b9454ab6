//! Finite-difference residual checks for the governing identities.
//!
//! Every check takes fields as point-evaluation closures and differentiates
//! them numerically with second-order central stencils, so it shares no
//! calculus with the series code it is checking. Each check runs at steps
//! `h, h/2, h/4, …` and reports the max-norm residual per step together with
//! the observed convergence order.
//!
//! Residuals are normalized by the magnitude of the individual terms of the
//! identity (e.g. `|∂s11/∂x| + |∂s12/∂y|` for equilibrium), so an O(1) defect
//! gives a normalized residual near one regardless of the field amplitude.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::constitutive::{strain_from_stress, Moduli, Strain2, Stress2};
use crate::error::{Error, Result};
use crate::grid::{Domain, Grid, PolarGridSpec};
use crate::kirsch::KirschProblem;
use crate::potentials::{harmonic_components, HarmonicComponents, PotentialPair};

/// Residuals below `NOISE_FACTOR · field_scale / h^k` are treated as rounding,
/// where `k` is the derivative order of the identity.
///
/// 64 is the sum of the absolute stencil weights of the 13-point
/// bilaplacian, the widest stencil used here.
pub const NOISE_FACTOR: f64 = 64.0 * f64::EPSILON;

/// Step size and pass criteria for one check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StencilConfig {
    /// Coarsest step.
    pub h: f64,
    /// Number of halvings of `h` used for the order estimate (at least 2).
    pub richardson_levels: usize,
    /// Length scale used to non-dimensionalize `h`.
    pub length_scale: f64,
    /// Bound on the normalized residual at the finest step.
    pub tolerance: f64,
    /// Admissible observed order.
    pub order_band: (f64, f64),
}

impl Default for StencilConfig {
    fn default() -> Self {
        Self {
            h: 1e-3,
            richardson_levels: 3,
            length_scale: 1.0,
            tolerance: 1e-3,
            order_band: (1.8, 2.2),
        }
    }
}

impl StencilConfig {
    /// Default configuration with `h` relative to `length_scale`.
    pub fn scaled(relative_h: f64, length_scale: f64) -> Self {
        Self {
            h: relative_h * length_scale,
            length_scale,
            ..Self::default()
        }
    }

    pub fn steps(&self) -> Vec<f64> {
        (0..self.richardson_levels)
            .map(|i| self.h / f64::powi(2.0, i as i32))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if !(self.h > 0.0 && self.h.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "step h = {} must be positive",
                self.h
            )));
        }
        if self.richardson_levels < 2 {
            return Err(Error::InvalidInput(
                "richardson_levels must be at least 2".into(),
            ));
        }
        if self.length_scale.is_nan() || self.length_scale <= 0.0 {
            return Err(Error::InvalidInput("length_scale must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of one residual check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub check: String,
    pub derivative_order: u32,
    pub points: usize,
    pub steps: Vec<f64>,
    /// Max-norm residual per step.
    pub residuals: Vec<f64>,
    /// Root-mean-square residual over the grid per step; orders are
    /// estimated from these, which keeps isolated rounding spikes of the
    /// max-norm out of the estimate.
    pub rms_residuals: Vec<f64>,
    /// Max-norm of the summed term magnitudes per step.
    pub term_scales: Vec<f64>,
    /// Max magnitude of the sampled field values.
    pub field_scale: f64,
    pub noise_floors: Vec<f64>,
    /// Observed order between consecutive steps; `None` where a residual is at rounding level.
    pub orders: Vec<Option<f64>>,
    /// Order from the finest pair of steps with both RMS residuals above noise.
    pub order: Option<f64>,
    /// Finest residual divided by the finest term scale (zero at rounding level).
    pub normalized_residual: f64,
    pub tolerance: f64,
    pub order_band: (f64, f64),
    pub passed: bool,
}

impl ResidualReport {
    pub fn order_in_band(&self) -> bool {
        self.order
            .is_some_and(|q| q >= self.order_band.0 && q <= self.order_band.1)
    }
}

/// A batch of reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<ResidualReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(reports: Vec<ResidualReport>) -> Self {
        let passed = reports.iter().all(|r| r.passed);
        Self { reports, passed }
    }

    pub fn get(&self, check: &str) -> Option<&ResidualReport> {
        self.reports.iter().find(|r| r.check == check)
    }
}

/// Residual, term magnitude and field magnitude at one point for one step.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct PointResidual {
    residual: f64,
    sum_sq: f64,
    count: usize,
    terms: f64,
    value: f64,
}

impl PointResidual {
    fn merge(self, other: Self) -> Self {
        Self {
            residual: self.residual.max(other.residual),
            sum_sq: self.sum_sq + other.sum_sq,
            count: self.count + other.count,
            terms: self.terms.max(other.terms),
            value: self.value.max(other.value),
        }
    }

    /// Adds one equation `Σ terms = 0`.
    fn equation(mut self, terms: &[f64]) -> Self {
        let sum: f64 = terms.iter().sum();
        let mag: f64 = terms.iter().map(|t| t.abs()).sum();
        self.residual = self.residual.max(sum.abs());
        self.terms = self.terms.max(mag);
        self
    }

    fn values(mut self, vals: &[f64]) -> Self {
        for v in vals {
            self.value = self.value.max(v.abs());
        }
        self
    }

    /// Closes the point: its residual enters the grid RMS once.
    fn finish(mut self) -> Self {
        self.sum_sq = self.residual * self.residual;
        self.count = 1;
        self
    }
}

fn run_check<F>(
    name: &str,
    derivative_order: u32,
    reach: f64,
    grid: &Grid,
    cfg: &StencilConfig,
    point: F,
) -> Result<ResidualReport>
where
    F: Fn(f64, f64, f64) -> Result<PointResidual> + Sync,
{
    cfg.validate()?;
    let needed = reach * cfg.h;
    let clearance = grid.min_clearance();
    if clearance < needed * (1.0 - 1e-12) {
        return Err(Error::Domain(format!(
            "{name}: stencil reach {needed} exceeds grid clearance {clearance} from the domain boundary"
        )));
    }

    let steps = cfg.steps();
    let mut per_step = Vec::with_capacity(steps.len());
    for &h in &steps {
        let agg = grid
            .points()
            .par_iter()
            .map(|&(x, y)| point(x, y, h).map(PointResidual::finish))
            .try_reduce(PointResidual::default, |a, b| Ok(a.merge(b)))?;
        per_step.push(agg);
    }

    let residuals: Vec<f64> = per_step.iter().map(|p| p.residual).collect();
    let rms_residuals: Vec<f64> = per_step
        .iter()
        .map(|p| (p.sum_sq / p.count.max(1) as f64).sqrt())
        .collect();
    let term_scales: Vec<f64> = per_step.iter().map(|p| p.terms).collect();
    let field_scale = per_step.iter().map(|p| p.value).fold(0.0, f64::max);
    let noise_floors: Vec<f64> = steps
        .iter()
        .map(|h| NOISE_FACTOR * field_scale / h.powi(derivative_order as i32))
        .collect();
    let above: Vec<bool> = rms_residuals
        .iter()
        .zip(&noise_floors)
        .map(|(r, f)| r > f)
        .collect();
    let orders: Vec<Option<f64>> = (0..steps.len() - 1)
        .map(|i| {
            (above[i] && above[i + 1]).then(|| {
                (rms_residuals[i] / rms_residuals[i + 1]).ln() / (steps[i] / steps[i + 1]).ln()
            })
        })
        .collect();
    let order = orders.iter().rev().find_map(|o| *o);

    let last = steps.len() - 1;
    let normalized_residual = if residuals[last] > noise_floors[last] {
        residuals[last] / term_scales[last].max(f64::MIN_POSITIVE)
    } else {
        0.0
    };
    let order_ok = order.is_none_or(|q| q >= cfg.order_band.0 && q <= cfg.order_band.1);
    let passed = normalized_residual <= cfg.tolerance && order_ok;

    Ok(ResidualReport {
        check: name.to_string(),
        derivative_order,
        points: grid.len(),
        steps,
        residuals,
        rms_residuals,
        term_scales,
        field_scale,
        noise_floors,
        orders,
        order,
        normalized_residual,
        tolerance: cfg.tolerance,
        order_band: cfg.order_band,
        passed,
    })
}

/// Values of a field on the five-point cross `(c, E, W, N, S)`.
struct Cross<T> {
    c: T,
    e: T,
    w: T,
    n: T,
    s: T,
}

impl<T> Cross<T> {
    fn sample<F: Fn(f64, f64) -> Result<T>>(f: &F, x: f64, y: f64, h: f64) -> Result<Self> {
        Ok(Self {
            c: f(x, y)?,
            e: f(x + h, y)?,
            w: f(x - h, y)?,
            n: f(x, y + h)?,
            s: f(x, y - h)?,
        })
    }
}

/// Diagonal neighbours `(NE, NW, SE, SW)`.
struct Corners<T> {
    ne: T,
    nw: T,
    se: T,
    sw: T,
}

impl<T> Corners<T> {
    fn sample<F: Fn(f64, f64) -> Result<T>>(f: &F, x: f64, y: f64, h: f64) -> Result<Self> {
        Ok(Self {
            ne: f(x + h, y + h)?,
            nw: f(x - h, y + h)?,
            se: f(x + h, y - h)?,
            sw: f(x - h, y - h)?,
        })
    }
}

fn dx<T, G: Fn(&T) -> f64>(v: &Cross<T>, h: f64, g: G) -> f64 {
    (g(&v.e) - g(&v.w)) / (2.0 * h)
}

fn dy<T, G: Fn(&T) -> f64>(v: &Cross<T>, h: f64, g: G) -> f64 {
    (g(&v.n) - g(&v.s)) / (2.0 * h)
}

fn dxx<T, G: Fn(&T) -> f64>(v: &Cross<T>, h: f64, g: G) -> f64 {
    (g(&v.e) - 2.0 * g(&v.c) + g(&v.w)) / (h * h)
}

fn dyy<T, G: Fn(&T) -> f64>(v: &Cross<T>, h: f64, g: G) -> f64 {
    (g(&v.n) - 2.0 * g(&v.c) + g(&v.s)) / (h * h)
}

fn dxy<T, G: Fn(&T) -> f64>(v: &Corners<T>, h: f64, g: G) -> f64 {
    (g(&v.ne) - g(&v.nw) - g(&v.se) + g(&v.sw)) / (4.0 * h * h)
}

const DIAGONAL: f64 = std::f64::consts::SQRT_2;

/// `∂s11/∂x + ∂s12/∂y = 0`, `∂s12/∂x + ∂s22/∂y = 0`.
pub fn check_equilibrium<F>(stress: F, grid: &Grid, cfg: &StencilConfig) -> Result<ResidualReport>
where
    F: Fn(f64, f64) -> Result<Stress2> + Sync,
{
    run_check("equilibrium", 1, 1.0, grid, cfg, |x, y, h| {
        let v = Cross::sample(&stress, x, y, h)?;
        Ok(PointResidual::default()
            .equation(&[dx(&v, h, |s| s.s11), dy(&v, h, |s| s.s12)])
            .equation(&[dx(&v, h, |s| s.s12), dy(&v, h, |s| s.s22)])
            .values(&v.c.as_array()))
    })
}

/// `e11_yy + e22_xx = 2 e12_xy`.
pub fn check_compatibility<F>(strain: F, grid: &Grid, cfg: &StencilConfig) -> Result<ResidualReport>
where
    F: Fn(f64, f64) -> Result<Strain2> + Sync,
{
    run_check("compatibility", 2, DIAGONAL, grid, cfg, |x, y, h| {
        let v = Cross::sample(&strain, x, y, h)?;
        let d = Corners::sample(&strain, x, y, h)?;
        Ok(PointResidual::default()
            .equation(&[
                dyy(&v, h, |e| e.e11),
                dxx(&v, h, |e| e.e22),
                -2.0 * dxy(&d, h, |e| e.e12),
            ])
            .values(&v.c.as_array()))
    })
}

/// `Δ(s11 + s22) = 0`, given the trace as a scalar field.
pub fn check_laplace_trace<F>(trace: F, grid: &Grid, cfg: &StencilConfig) -> Result<ResidualReport>
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
{
    run_check("laplace_trace", 2, 1.0, grid, cfg, |x, y, h| {
        let v = Cross::sample(&trace, x, y, h)?;
        Ok(PointResidual::default()
            .equation(&[dxx(&v, h, |q| *q), dyy(&v, h, |q| *q)])
            .values(&[v.c]))
    })
}

/// `ΔΔU = 0` on the 13-point stencil, split as `U_xxxx + 2U_xxyy + U_yyyy`.
pub fn check_biharmonic<F>(airy: F, grid: &Grid, cfg: &StencilConfig) -> Result<ResidualReport>
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
{
    run_check("biharmonic", 4, 2.0, grid, cfg, |x, y, h| {
        let v = Cross::sample(&airy, x, y, h)?;
        let d = Corners::sample(&airy, x, y, h)?;
        let ee = airy(x + 2.0 * h, y)?;
        let ww = airy(x - 2.0 * h, y)?;
        let nn = airy(x, y + 2.0 * h)?;
        let ss = airy(x, y - 2.0 * h)?;
        let h4 = h * h * h * h;
        let uxxxx = (ww - 4.0 * v.w + 6.0 * v.c - 4.0 * v.e + ee) / h4;
        let uyyyy = (ss - 4.0 * v.s + 6.0 * v.c - 4.0 * v.n + nn) / h4;
        let uxxyy = (d.ne + d.nw + d.se + d.sw - 2.0 * (v.e + v.w + v.n + v.s) + 4.0 * v.c) / h4;
        Ok(PointResidual::default()
            .equation(&[uxxxx, 2.0 * uxxyy, uyyyy])
            .values(&[v.c]))
    })
}

/// Cauchy–Riemann for `φ = p + iq` and for `4φ′ = Q + iR`, plus `Q = 4 ∂p/∂x`.
pub fn check_cauchy_riemann<F>(
    harmonic: F,
    grid: &Grid,
    cfg: &StencilConfig,
) -> Result<ResidualReport>
where
    F: Fn(f64, f64) -> Result<HarmonicComponents> + Sync,
{
    run_check("cauchy_riemann", 1, 1.0, grid, cfg, |x, y, h| {
        let v = Cross::sample(&harmonic, x, y, h)?;
        let px = dx(&v, h, |c| c.p);
        Ok(PointResidual::default()
            .equation(&[px, -dy(&v, h, |c| c.q)])
            .equation(&[dy(&v, h, |c| c.p), dx(&v, h, |c| c.q)])
            .equation(&[v.c.trace, -4.0 * px])
            .equation(&[dx(&v, h, |c| c.trace), -dy(&v, h, |c| c.conjugate)])
            .equation(&[dy(&v, h, |c| c.trace), dx(&v, h, |c| c.conjugate)])
            .values(&[v.c.p, v.c.q, v.c.trace, v.c.conjugate]))
    })
}

/// Strains from differentiated displacements against strains from the constitutive law.
pub fn check_displacement_consistency<D, S>(
    displacement: D,
    strain: S,
    grid: &Grid,
    cfg: &StencilConfig,
) -> Result<ResidualReport>
where
    D: Fn(f64, f64) -> Result<Complex64> + Sync,
    S: Fn(f64, f64) -> Result<Strain2> + Sync,
{
    run_check("displacement_consistency", 1, 1.0, grid, cfg, |x, y, h| {
        let w = Cross::sample(&displacement, x, y, h)?;
        let e = strain(x, y)?;
        let ux = dx(&w, h, |w| w.re);
        let uy = dy(&w, h, |w| w.re);
        let vx = dx(&w, h, |w| w.im);
        let vy = dy(&w, h, |w| w.im);
        Ok(PointResidual::default()
            .equation(&[ux, -e.e11])
            .equation(&[0.5 * uy, 0.5 * vx, -e.e12])
            .equation(&[vy, -e.e22])
            .values(&[w.c.re, w.c.im]))
    })
}

/// `s11 = U_yy`, `s12 = −U_xy`, `s22 = U_xx`.
pub fn check_airy_stress<A, S>(
    airy: A,
    stress: S,
    grid: &Grid,
    cfg: &StencilConfig,
) -> Result<ResidualReport>
where
    A: Fn(f64, f64) -> Result<f64> + Sync,
    S: Fn(f64, f64) -> Result<Stress2> + Sync,
{
    run_check("airy_stress", 2, DIAGONAL, grid, cfg, |x, y, h| {
        let v = Cross::sample(&airy, x, y, h)?;
        let d = Corners::sample(&airy, x, y, h)?;
        let s = stress(x, y)?;
        Ok(PointResidual::default()
            .equation(&[dyy(&v, h, |u| *u), -s.s11])
            .equation(&[-dxy(&d, h, |u| *u), -s.s12])
            .equation(&[dxx(&v, h, |u| *u), -s.s22])
            .values(&[v.c]))
    })
}

/// `U_x + iU_y` against a gradient provider.
pub fn check_airy_gradient<A, G>(
    airy: A,
    gradient: G,
    grid: &Grid,
    cfg: &StencilConfig,
) -> Result<ResidualReport>
where
    A: Fn(f64, f64) -> Result<f64> + Sync,
    G: Fn(f64, f64) -> Result<Complex64> + Sync,
{
    run_check("airy_gradient", 1, 1.0, grid, cfg, |x, y, h| {
        let v = Cross::sample(&airy, x, y, h)?;
        let g = gradient(x, y)?;
        Ok(PointResidual::default()
            .equation(&[dx(&v, h, |u| *u), -g.re])
            .equation(&[dy(&v, h, |u| *u), -g.im])
            .values(&[v.c]))
    })
}

/// O(1) defects that can be planted into a suite's fields to prove each
/// check is able to fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Corruption {
    /// `s12 += x` (breaks equilibrium and the Airy–stress identity).
    Stress12,
    /// `Q += x²` in the trace field.
    Trace,
    /// `U += x⁴ / 24` in the Airy function.
    Airy,
    /// `e11 += y²` in the strain field.
    Strain11,
    /// `q += x` in the harmonic components.
    Harmonic,
    /// `u += y` in the displacement field.
    Displacement,
}

impl Corruption {
    pub const ALL: [Corruption; 6] = [
        Corruption::Stress12,
        Corruption::Trace,
        Corruption::Airy,
        Corruption::Strain11,
        Corruption::Harmonic,
        Corruption::Displacement,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Corruption::Stress12 => "s12",
            Corruption::Trace => "trace",
            Corruption::Airy => "airy",
            Corruption::Strain11 => "e11",
            Corruption::Harmonic => "harmonic",
            Corruption::Displacement => "displacement",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Name of the check this defect must trip.
    pub fn target_check(&self) -> &'static str {
        match self {
            Corruption::Stress12 => "equilibrium",
            Corruption::Trace => "laplace_trace",
            Corruption::Airy => "biharmonic",
            Corruption::Strain11 => "compatibility",
            Corruption::Harmonic => "cauchy_riemann",
            Corruption::Displacement => "displacement_consistency",
        }
    }
}

/// Grids and step configurations for a suite.
///
/// The biharmonic check gets its own step and grid: its stencil divides by
/// `h⁴`, so it needs a coarser step than the first- and second-order checks
/// to stay above rounding.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub grid: Grid,
    pub stencil: StencilConfig,
    pub biharmonic_grid: Grid,
    pub biharmonic_stencil: StencilConfig,
    pub corruption: Option<Corruption>,
}

impl SuiteConfig {
    /// Polar grids around a hole of radius `R` sized to the steps `h` and
    /// `h_biharmonic` (both absolute): `r ∈ [R + 5h, R + 100h]` for the
    /// low-order checks and `r ∈ [R + 2.5h_b, R + 20h_b]` for the biharmonic
    /// check, where the Airy function has enough curvature to stay above
    /// rounding.
    pub fn around_hole(radius: f64, h: f64, h_biharmonic: f64, n_theta: usize) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "radius {radius} must be positive"
            )));
        }
        let domain = Domain::Exterior { radius };
        let stencil = StencilConfig::scaled(h / radius, radius);
        let biharmonic_stencil = StencilConfig::scaled(h_biharmonic / radius, radius);
        stencil.validate()?;
        biharmonic_stencil.validate()?;
        let spec = PolarGridSpec::full(radius + 5.0 * h, radius + 100.0 * h, 12, n_theta);
        let bi_spec = PolarGridSpec::full(
            radius + 2.5 * h_biharmonic,
            radius + 20.0 * h_biharmonic,
            10,
            n_theta,
        );
        Ok(Self {
            grid: Grid::polar(&spec, domain)?,
            stencil,
            biharmonic_grid: Grid::polar(&bi_spec, domain)?,
            biharmonic_stencil,
            corruption: None,
        })
    }
}

fn corrupt_stress(c: Option<Corruption>, x: f64, mut s: Stress2) -> Stress2 {
    if c == Some(Corruption::Stress12) {
        s.s12 += x;
    }
    s
}

/// All residual checks for the fields generated by a potential pair.
pub fn potential_suite(pair: &PotentialPair, m: &Moduli, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let bad = cfg.corruption;
    let z = |x: f64, y: f64| Complex64::new(x, y);
    let stress = |x: f64, y: f64| Ok(corrupt_stress(bad, x, pair.stresses(z(x, y))?));
    let strain = |x: f64, y: f64| {
        let mut e = strain_from_stress(m, &pair.stresses(z(x, y))?);
        if bad == Some(Corruption::Strain11) {
            e.e11 += y * y;
        }
        Ok(e)
    };
    let trace = |x: f64, y: f64| {
        let q = pair.stresses(z(x, y))?.trace();
        Ok(if bad == Some(Corruption::Trace) {
            q + x * x
        } else {
            q
        })
    };
    let airy = |x: f64, y: f64| {
        let u = pair.airy(z(x, y))?;
        Ok(if bad == Some(Corruption::Airy) {
            u + x.powi(4) / 24.0
        } else {
            u
        })
    };
    let harmonic = |x: f64, y: f64| {
        let mut hc = harmonic_components(pair.phi(), z(x, y))?;
        if bad == Some(Corruption::Harmonic) {
            hc.q += x;
        }
        Ok(hc)
    };
    let displacement = |x: f64, y: f64| {
        let w = pair.displacement(m, z(x, y))?;
        Ok(if bad == Some(Corruption::Displacement) {
            w + y
        } else {
            w
        })
    };
    let gradient = |x: f64, y: f64| pair.airy_gradient(z(x, y));
    let clean_stress = |x: f64, y: f64| pair.stresses(z(x, y));

    let (g, s) = (&cfg.grid, &cfg.stencil);
    Ok(SuiteReport::new(vec![
        check_equilibrium(stress, g, s)?,
        check_compatibility(strain, g, s)?,
        check_laplace_trace(trace, g, s)?,
        check_biharmonic(airy, &cfg.biharmonic_grid, &cfg.biharmonic_stencil)?,
        check_cauchy_riemann(harmonic, g, s)?,
        check_displacement_consistency(displacement, strain, g, s)?,
        check_airy_stress(airy, clean_stress, g, s)?,
        check_airy_gradient(airy, gradient, g, s)?,
    ]))
}

/// [`potential_suite`] on the hole potentials plus checks on the closed-form
/// stresses and displacements.
pub fn kirsch_suite(prob: &KirschProblem, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut reports = potential_suite(&prob.potentials(), prob.moduli(), cfg)?.reports;
    let bad = cfg.corruption;
    let polar = |x: f64, y: f64| (x.hypot(y), y.atan2(x));
    let stress = |x: f64, y: f64| {
        let (r, t) = polar(x, y);
        let ps = prob.stresses_polar(r, t)?;
        Ok(corrupt_stress(
            bad,
            x,
            Stress2::from_polar(ps.srr, ps.stt, ps.srt, t),
        ))
    };
    let displacement = |x: f64, y: f64| {
        let (r, t) = polar(x, y);
        let d = prob.displacements_closed_form(r, t)?;
        let w = Complex64::from_polar(1.0, t) * Complex64::new(d.ur, d.utheta);
        Ok(if bad == Some(Corruption::Displacement) {
            w + y
        } else {
            w
        })
    };
    let strain = |x: f64, y: f64| {
        let (r, t) = polar(x, y);
        let ps = prob.stresses_polar(r, t)?;
        Ok(strain_from_stress(
            prob.moduli(),
            &Stress2::from_polar(ps.srr, ps.stt, ps.srt, t),
        ))
    };

    let mut eq = check_equilibrium(stress, &cfg.grid, &cfg.stencil)?;
    eq.check = "equilibrium_closed_form".into();
    let mut dc = check_displacement_consistency(displacement, strain, &cfg.grid, &cfg.stencil)?;
    dc.check = "displacement_consistency_closed_form".into();
    reports.push(eq);
    reports.push(dc);
    Ok(SuiteReport::new(reports))
}
