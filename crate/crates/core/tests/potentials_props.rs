use asym_plane::verify::{self, potential_suite, SuiteConfig};
use asym_plane::*;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| c(a, b)), n)
}

/// Laurent series with powers in `[-3, 3]`, so everything is smooth off a
/// unit disc.
fn laurent() -> impl Strategy<Value = LaurentPotential> {
    coeffs(7).prop_map(|cs| LaurentPotential::new(-3, cs))
}

/// Like [`laurent`] but with a real `z⁻¹` coefficient, so the Airy function
/// `Re(z̄φ + ∫ψ)` is single-valued.
fn stress_function_psi() -> impl Strategy<Value = LaurentPotential> {
    coeffs(7).prop_map(|mut cs| {
        cs[2].im = 0.0;
        LaurentPotential::new(-3, cs)
    })
}

fn moduli() -> impl Strategy<Value = Moduli> {
    (0.1..10.0f64, 0.1..10.0f64, -10.0..10.0f64)
        .prop_map(|(l0, mu, mu0)| Moduli::new(l0, mu, mu0).unwrap())
}

fn exterior_point() -> impl Strategy<Value = Complex64> {
    (1.2..4.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #[test]
    fn derivative_undoes_antiderivative(f in laurent(), z in exterior_point()) {
        let g = f.antiderivative().unwrap().derivative();
        let (a, b) = (f.eval(z).unwrap(), g.eval(z).unwrap());
        prop_assert!((a - b).norm() < 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn trace_is_four_re_phi_prime(phi in laurent(), psi in laurent(), z in exterior_point()) {
        let pair = PotentialPair::new(phi.clone(), psi).unwrap();
        let s = pair.stresses(z).unwrap();
        let q = 4.0 * phi.derivative().eval(z).unwrap().re;
        prop_assert!((s.trace() - q).abs() < 1e-12 * (1.0 + q.abs()));
    }

    #[test]
    fn symmetric_moduli_reduce_to_classical(
        phi in laurent(),
        psi in laurent(),
        l in 0.1..10.0f64,
        mu in 0.1..10.0f64,
        z in exterior_point(),
    ) {
        let m = Moduli::from_lambda(l, mu, 0.0).unwrap();
        let pair = PotentialPair::new(phi, psi).unwrap();
        let w = pair.displacement(&m, z).unwrap();
        let wc = pair.classical_displacement(&m, z).unwrap();
        prop_assert!((w - wc).norm() <= 1e-12 * (1.0 + wc.norm()), "{w} vs {wc}");
    }

    #[test]
    fn stresses_do_not_depend_on_moduli(
        phi in laurent(),
        psi in laurent(),
        m in moduli(),
        z in exterior_point(),
    ) {
        let pair = PotentialPair::new(phi, psi).unwrap();
        let a = pair.sample(&m, z).unwrap();
        let b = pair.sample(&m.with_mu0(m.mu0() + 1.0).unwrap(), z).unwrap();
        prop_assert_eq!((a.s11, a.s12, a.s22), (b.s11, b.s12, b.s22));
    }

    #[test]
    fn imaginary_linear_phi_is_rigid_rotation(
        phi in laurent(),
        psi in laurent(),
        m in moduli(),
        k in -1.0..1.0f64,
    ) {
        // φ → φ + i k z leaves stresses and strains unchanged and only adds
        // a rigid rotation to the displacement.
        let base = PotentialPair::new(phi.clone(), psi.clone()).unwrap();
        let shifted = PotentialPair::new(&phi + &LaurentPotential::monomial(1, c(0.0, k)), psi).unwrap();
        let grid = Grid::polar(&PolarGridSpec::full(1.5, 3.0, 4, 8), Domain::Exterior { radius: 1.0 }).unwrap();
        let h = 1e-5;
        let mut rotation = None;
        for &(x, y) in grid.points() {
            let z = c(x, y);
            let (s0, s1) = (base.stresses(z).unwrap(), shifted.stresses(z).unwrap());
            for (a, b) in s0.as_array().iter().zip(s1.as_array()) {
                prop_assert!((a - b).abs() < 1e-12 * (1.0 + a.abs()));
            }
            let dw = |zz: Complex64| shifted.displacement(&m, zz).unwrap() - base.displacement(&m, zz).unwrap();
            // difference field must be w = i ω z: derivative along x is i ω, along y is −ω
            let wx = (dw(z + h) - dw(z - h)) / (2.0 * h);
            let wy = (dw(z + c(0.0, h)) - dw(z - c(0.0, h))) / (2.0 * h);
            prop_assert!(wx.re.abs() < 1e-6 && (wy.re + wx.im).abs() < 1e-6 && wy.im.abs() < 1e-6);
            let omega = wx.im;
            let om = *rotation.get_or_insert(omega);
            prop_assert!((omega - om).abs() < 1e-6);
        }
    }
}

fn suite_config(h: f64) -> SuiteConfig {
    // potentials singular at 0: keep the grid on an annulus
    let domain = Domain::Exterior { radius: 1.0 };
    let spec = PolarGridSpec::full(1.5, 3.0, 6, 12);
    SuiteConfig {
        grid: Grid::polar(&spec, domain).unwrap(),
        stencil: StencilConfig::scaled(h, 1.0),
        biharmonic_grid: Grid::polar(&spec, domain).unwrap(),
        biharmonic_stencil: StencilConfig::scaled(2e-2, 1.0),
        corruption: None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_potentials_satisfy_field_equations(phi in laurent(), psi in stress_function_psi(), m in moduli()) {
        let pair = PotentialPair::new(phi, psi).unwrap();
        let rep = potential_suite(&pair, &m, &suite_config(1e-2)).unwrap();
        for r in &rep.reports {
            prop_assert!(r.normalized_residual < 1e-3, "{}: {:?}", r.check, r);
            // some fields cancel the leading error term and converge faster
            if let Some(o) = r.order {
                prop_assert!(o > r.order_band.0, "{}: order {o}", r.check);
            }
        }
    }
}

#[test]
fn polynomial_potentials_have_no_truncation_error() {
    // quadratic φ, ψ: stresses are linear, so second-order stencils are exact
    // everywhere except on the cubic Airy function's gradient
    let pair = PotentialPair::new(
        LaurentPotential::new(0, vec![c(0.3, 0.1), c(1.0, -0.5), c(0.25, 0.7)]),
        LaurentPotential::new(0, vec![c(-0.2, 0.0), c(0.4, 0.9), c(-0.6, 0.2)]),
    )
    .unwrap();
    let m = Moduli::new(2.0, 1.0, 0.5).unwrap();
    let mut cfg = suite_config(1e-2);
    cfg.grid = Grid::cartesian((-1.0, 1.0), 5, (-1.0, 1.0), 5, Domain::Plane).unwrap();
    cfg.biharmonic_grid = cfg.grid.clone();
    let rep = potential_suite(&pair, &m, &cfg).unwrap();
    assert!(rep.passed, "{rep:#?}");
    for r in rep.reports.iter().filter(|r| r.check != "airy_gradient") {
        assert!(
            r.normalized_residual < 1e-8,
            "{}: {}",
            r.check,
            r.normalized_residual
        );
    }
}

#[test]
fn complex_log_in_chi_breaks_the_biharmonic_check() {
    let pair = PotentialPair::new(
        LaurentPotential::zero(),
        LaurentPotential::monomial(-1, c(0.0, 1.0)),
    )
    .unwrap();
    let cfg = suite_config(1e-2);
    let r = verify::check_biharmonic(
        |x, y| pair.airy(c(x, y)),
        &cfg.biharmonic_grid,
        &cfg.biharmonic_stencil,
    )
    .unwrap();
    assert!(!r.passed);
}

#[test]
fn singular_potentials_reject_the_origin() {
    let pair = PotentialPair::new(
        LaurentPotential::monomial(-1, c(1.0, 0.0)),
        LaurentPotential::zero(),
    )
    .unwrap();
    assert!(matches!(pair.stresses(c(0.0, 0.0)), Err(Error::Domain(_))));
    let grid = Grid::cartesian((-1.0, 1.0), 3, (-1.0, 1.0), 3, Domain::Plane).unwrap();
    let err = verify::check_laplace_trace(
        |x, y| Ok(pair.stresses(c(x, y))?.trace()),
        &grid,
        &StencilConfig::default(),
    );
    assert!(err.is_err());
}
