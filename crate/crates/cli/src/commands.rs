use std::f64::consts::TAU;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use asym_plane::grid::logspace;
use asym_plane::verify::{kirsch_suite, potential_suite, Corruption, SuiteConfig};
use asym_plane::{
    boundary_limit_mu_to_zero, constitutive_determinant, constitutive_matrix,
    inverse_constitutive_matrix, strain_from_stress, stress_from_strain, Complex64, Domain,
    FieldSample, KirschProblem, Moduli, PolarGridSpec, PotentialPair, ResidualReport, Strain2,
    Stress2,
};
use serde::Serialize;

use crate::args::{
    ConstitutiveArgs, KirschArgs, LimitsArgs, ModuliArgs, ProblemArgs, SweepParam, VerifyArgs,
};
use crate::{potentials_file, Failure};

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::create(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        _ => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

impl ModuliArgs {
    pub fn build(&self) -> Result<Moduli, Failure> {
        let mu = self
            .mu
            .ok_or_else(|| Failure::Input("--mu is required".into()))?;
        let m = match (self.lambda, self.lambda0) {
            (Some(l), None) => Moduli::from_lambda(l, mu, self.mu0)?,
            (None, Some(l0)) => Moduli::new(l0, mu, self.mu0)?,
            _ => {
                return Err(Failure::Input(
                    "give exactly one of --lambda and --lambda0".into(),
                ))
            }
        };
        Ok(m)
    }

    /// Same moduli with `mu` or `mu0` replaced, holding whichever of
    /// `lambda`/`lambda0` was given fixed.
    fn with(&self, param: SweepParam, value: f64) -> Result<Moduli, Failure> {
        let mut a = self.clone();
        match param {
            SweepParam::Mu => a.mu = Some(value),
            SweepParam::Mu0 => a.mu0 = value,
        }
        a.build()
    }
}

/// The field source selected on the command line.
enum Source {
    Hole(KirschProblem),
    Pair {
        pair: Box<PotentialPair>,
        moduli: Moduli,
        domain: Domain,
    },
}

impl ProblemArgs {
    fn angle(&self, value: f64) -> f64 {
        if self.degrees {
            value.to_radians()
        } else {
            value
        }
    }

    fn source(&self) -> Result<Source, Failure> {
        let moduli = self.moduli.build()?;
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Failure::Input(format!(
                "radius {} must be positive",
                self.radius
            )));
        }
        match &self.potentials {
            None => Ok(Source::Hole(KirschProblem::new(
                self.p,
                self.radius,
                moduli,
            )?)),
            Some(path) => {
                let pair = potentials_file::load(path)?;
                let domain = if pair.phi().singular_at_origin() || pair.psi().singular_at_origin() {
                    Domain::Exterior {
                        radius: self.radius,
                    }
                } else {
                    Domain::Plane
                };
                Ok(Source::Pair {
                    pair: Box::new(pair),
                    moduli,
                    domain,
                })
            }
        }
    }
}

#[derive(Serialize)]
struct FieldRow {
    x: f64,
    y: f64,
    r: f64,
    theta: f64,
    srr: f64,
    stt: f64,
    srt: f64,
    s11: f64,
    s12: f64,
    s22: f64,
    ur: f64,
    utheta: f64,
    u: f64,
    v: f64,
    #[serde(rename = "U")]
    airy: f64,
    #[serde(rename = "Q")]
    trace: f64,
}

impl From<&FieldSample> for FieldRow {
    fn from(s: &FieldSample) -> Self {
        Self {
            x: s.x,
            y: s.y,
            r: s.r,
            theta: s.theta,
            srr: s.srr,
            stt: s.stt,
            srt: s.srt,
            s11: s.s11,
            s12: s.s12,
            s22: s.s22,
            ur: s.ur,
            utheta: s.utheta,
            u: s.u,
            v: s.v,
            airy: s.airy,
            trace: s.trace,
        }
    }
}

pub fn kirsch(a: &KirschArgs) -> Result<(), Failure> {
    let pr = &a.problem;
    let source = pr.source()?;
    let start = pr.angle(a.theta_start);
    let spec = PolarGridSpec {
        r_min: a.rmin.unwrap_or(pr.radius),
        r_max: a.rmax.unwrap_or(5.0 * pr.radius),
        n_r: a.nr,
        theta_start: start,
        theta_end: a.theta_end.map_or(start + TAU, |t| pr.angle(t)),
        n_theta: a.ntheta,
    };
    let nodes = spec.nodes()?;
    let rows = match &source {
        Source::Hole(prob) => prob.sample_grid(&spec)?,
        Source::Pair {
            pair,
            moduli,
            domain,
        } => nodes
            .iter()
            .map(|&(r, t)| {
                let z = Complex64::from_polar(r, t);
                if !domain.contains(z.re, z.im) {
                    return Err(Failure::Domain(format!(
                        "grid radius {r} lies inside the excluded disc"
                    )));
                }
                let mut s = pair.sample(moduli, z)?;
                s.r = r;
                s.theta = t;
                Ok(s)
            })
            .collect::<Result<Vec<_>, Failure>>()?,
    };

    let mut w = csv::Writer::from_writer(open_output(&a.output)?);
    for s in &rows {
        w.serialize(FieldRow::from(s))?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ModuliEcho {
    lambda: f64,
    lambda0: f64,
    mu: f64,
    mu0: f64,
}

impl From<&Moduli> for ModuliEcho {
    fn from(m: &Moduli) -> Self {
        Self {
            lambda: m.lambda(),
            lambda0: m.lambda0(),
            mu: m.mu(),
            mu0: m.mu0(),
        }
    }
}

#[derive(Serialize)]
struct VerifyScenario {
    problem: &'static str,
    p: Option<f64>,
    radius: f64,
    moduli: ModuliEcho,
    h: f64,
    h_biharmonic: f64,
    n_theta: usize,
    tolerance: f64,
    corruption: Option<&'static str>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    scenario: VerifyScenario,
    passed: bool,
    checks: &'a [ResidualReport],
}

pub fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let pr = &a.problem;
    let source = pr.source()?;
    let corruption = match &a.corrupt {
        None => None,
        Some(name) => Some(Corruption::from_name(name).ok_or_else(|| {
            let known: Vec<_> = Corruption::ALL.iter().map(|c| c.name()).collect();
            Failure::Input(format!(
                "unknown defect '{name}' (expected one of {})",
                known.join(", ")
            ))
        })?),
    };
    if !(a.h > 0.0 && a.tol > 0.0) {
        return Err(Failure::Input("--h and --tol must be positive".into()));
    }
    let hb = a.h_biharmonic.unwrap_or(a.h.max(1e-2));
    let r = pr.radius;
    let mut cfg = SuiteConfig::around_hole(r, a.h * r, hb * r, a.ntheta)?;
    cfg.stencil.tolerance = a.tol;
    cfg.biharmonic_stencil.tolerance = a.tol;
    cfg.corruption = corruption;

    let (suite, moduli, kind, p) = match &source {
        Source::Hole(prob) => (
            kirsch_suite(prob, &cfg)?,
            *prob.moduli(),
            "kirsch",
            Some(pr.p),
        ),
        Source::Pair { pair, moduli, .. } => (
            potential_suite(pair, moduli, &cfg)?,
            *moduli,
            "potentials",
            None,
        ),
    };
    let report = VerifyReport {
        scenario: VerifyScenario {
            problem: kind,
            p,
            radius: r,
            moduli: ModuliEcho::from(&moduli),
            h: a.h,
            h_biharmonic: hb,
            n_theta: a.ntheta,
            tolerance: a.tol,
            corruption: corruption.map(|c| c.name()),
        },
        passed: suite.passed,
        checks: &suite.reports,
    };
    let mut out = open_output(&a.output)?;
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    out.flush()?;
    if suite.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct LimitRow {
    sweep: &'static str,
    value: f64,
    lambda: f64,
    lambda0: f64,
    mu: f64,
    mu0: f64,
    coefficient: f64,
    ur: f64,
    utheta: f64,
    classical_coefficient: Option<f64>,
    classical_ur: Option<f64>,
    classical_utheta: Option<f64>,
    limit_ur: Option<f64>,
    limit_utheta: Option<f64>,
}

pub fn limits(a: &LimitsArgs) -> Result<(), Failure> {
    let pr = &a.problem;
    if pr.potentials.is_some() {
        return Err(Failure::Input(
            "limits only applies to the hole problem".into(),
        ));
    }
    let values = match (&a.values, a.from, a.to, a.count) {
        (Some(v), ..) => v.clone(),
        (None, Some(from), Some(to), Some(count)) => logspace(from, to, count)?,
        _ => Vec::new(),
    };
    if values.is_empty() {
        return Err(Failure::Input(
            "empty sweep: give --values or --from/--to/--count".into(),
        ));
    }
    let theta = pr.angle(a.theta);
    let (s2, c2) = (2.0 * theta).sin_cos();
    let name = match a.sweep {
        SweepParam::Mu => "mu",
        SweepParam::Mu0 => "mu0",
    };

    let mut rows = Vec::with_capacity(values.len());
    for &value in &values {
        let m = pr.moduli.with(a.sweep, value)?;
        let prob = KirschProblem::new(pr.p, pr.radius, m)?;
        let k = prob.boundary_coefficient();
        let classical = prob.classical_boundary_coefficient().ok();
        let limit = boundary_limit_mu_to_zero(pr.p, pr.radius, m.lambda(), theta).ok();
        rows.push(LimitRow {
            sweep: name,
            value,
            lambda: m.lambda(),
            lambda0: m.lambda0(),
            mu: m.mu(),
            mu0: m.mu0(),
            coefficient: k,
            ur: k * (1.0 + 2.0 * c2),
            utheta: -2.0 * k * s2,
            classical_coefficient: classical,
            classical_ur: classical.map(|kc| kc * (1.0 + 2.0 * c2)),
            classical_utheta: classical.map(|kc| -2.0 * kc * s2),
            limit_ur: limit.map(|d| d.ur),
            limit_utheta: limit.map(|d| d.utheta),
        });
    }

    let mut w = csv::Writer::from_writer(open_output(&a.output)?);
    for row in &rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ConstitutiveReport {
    moduli: ModuliEcho,
    ae_norm2: f64,
    matrix: [[f64; 3]; 3],
    determinant: f64,
    inverse: [[f64; 3]; 3],
    input: &'static str,
    strain: Strain2,
    stress: Stress2,
    stress_trace: f64,
    dilatation: f64,
}

pub fn constitutive(a: &ConstitutiveArgs) -> Result<(), Failure> {
    let m = a.moduli.build()?;
    let comps = |v: &[f64]| -> Result<[f64; 3], Failure> {
        match *v {
            [x, y, z] if v.iter().all(|c| c.is_finite()) => Ok([x, y, z]),
            _ => Err(Failure::Input("expected three finite components".into())),
        }
    };
    let (input, strain, stress) = match (&a.strain, &a.stress) {
        (Some(e), None) => {
            let [e11, e12, e22] = comps(e)?;
            let e = Strain2::new(e11, e12, e22);
            ("strain", e, stress_from_strain(&m, &e))
        }
        (None, Some(s)) => {
            let [s11, s12, s22] = comps(s)?;
            let s = Stress2::new(s11, s12, s22);
            ("stress", strain_from_stress(&m, &s), s)
        }
        _ => {
            return Err(Failure::Input(
                "give exactly one of --strain and --stress".into(),
            ))
        }
    };
    let report = ConstitutiveReport {
        moduli: ModuliEcho::from(&m),
        ae_norm2: m.ae_norm2(),
        matrix: constitutive_matrix(&m),
        determinant: constitutive_determinant(&m),
        inverse: inverse_constitutive_matrix(&m),
        input,
        strain,
        stress,
        stress_trace: stress.trace(),
        dilatation: strain.trace(),
    };
    let mut out = open_output(&a.output)?;
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}
