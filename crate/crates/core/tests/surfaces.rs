use gbx_core::surface::all_cases;
use gbx_core::{AlgebraParams, CurveKind, Error, PlanarCurve, TensorRule, TensorSurface};

fn max_diff(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// The constraints written out directly, independent of the library.
fn constraint(rule: TensorRule, p: &AlgebraParams, c: &[f64; 4]) -> f64 {
    let (a, b) = (p.alpha(), p.beta());
    match rule {
        TensorRule::Ti => c[0] * c[2] + a * c[1] * c[3],
        TensorRule::Tj => c[0] * c[1] + b * c[2] * c[3],
        TensorRule::Tij => c[0] * c[3] - c[1] * c[2],
    }
}

fn grid() -> impl Iterator<Item = (f64, f64)> {
    (0..13).flat_map(|i| (0..13).map(move |j| (-3.0 + 0.5 * i as f64, -3.0 + 0.5 * j as f64)))
}

#[test]
fn hyperbolic_spiral_times_spiral_on_ti() {
    let (a, b) = (0.2, -0.1);
    let s = TensorSurface::for_case(TensorRule::Ti, AlgebraParams::classical(), a, b).unwrap();
    for (t, u) in grid() {
        let e = (a * t + b * u).exp();
        let want = [
            e * t.cosh() * u.cos(),
            e * t.cosh() * u.sin(),
            -e * t.sinh() * u.sin(),
            e * t.sinh() * u.cos(),
        ];
        let got = s.evaluate(t, u).unwrap();
        assert!(max_diff(got.coeffs(), &want) <= 1e-12 * e * t.cosh(), "({t}, {u})");
        // The norm factors as (γ₁² - γ₂²)(δ₁² + δ₂²) = e^{2(at+bs)}.
        let n = s.metric().eval(got.coeffs(), got.coeffs());
        assert!((n - e * e).abs() <= 1e-12 * (e * t.cosh()).powi(2));
    }
}

#[test]
fn circles_on_tij() {
    let s = TensorSurface::for_case(TensorRule::Tij, AlgebraParams::classical(), 0.0, 0.0).unwrap();
    for (t, u) in grid() {
        let want = [
            t.cos() * u.cos(),
            t.cos() * u.sin(),
            t.sin() * u.cos(),
            t.sin() * u.sin(),
        ];
        assert!(max_diff(s.evaluate(t, u).unwrap().coeffs(), &want) <= 1e-15);
    }
}

#[test]
fn tj_diagonal_with_negative_alpha() {
    let p = AlgebraParams::new(-1.0, 1.0).unwrap();
    let s = TensorSurface::for_case(TensorRule::Tj, p, 0.0, 0.0).unwrap();
    for i in -20..=20 {
        let t = 0.1 * f64::from(i);
        let (c, sn) = (t.cos(), t.sin());
        let want = [c * c, -sn * sn, c * sn, c * sn];
        assert!(max_diff(s.diagonal(t).unwrap().coeffs(), &want) <= 1e-15);
    }
}

#[test]
fn negative_alpha_ti_uses_the_rule_sign() {
    // Both curves Lorentzian; the third slot is -α·γ₂δ₂ = +sinh t sinh s.
    let p = AlgebraParams::new(-1.0, -1.0).unwrap();
    let s = TensorSurface::for_case(TensorRule::Ti, p, 0.0, 0.0).unwrap();
    let (t, u) = (0.7_f64, -1.3_f64);
    let f = s.evaluate(t, u).unwrap();
    assert!((f.c3() - t.sinh() * u.sinh()).abs() <= 1e-15);
}

#[test]
fn every_case_stays_on_its_hyperquadric() {
    for (rule, p) in all_cases() {
        for (ra, rb) in [(0.0, 0.0), (0.2, -0.1), (-0.5, 0.7)] {
            let s = TensorSurface::for_case(rule, p, ra, rb).unwrap();
            for (t, u) in grid() {
                let f = s.evaluate(t, u).unwrap();
                let scale = f.max_abs().powi(2).max(1.0);
                assert!(constraint(rule, &p, f.coeffs()).abs() <= 1e-12 * scale, "{rule} {p:?}");
                assert!(s.metric().eval(f.coeffs(), f.coeffs()).abs() > 0.0);
            }
        }
    }
}

#[test]
fn diagonal_is_a_one_parameter_subgroup() {
    for (rule, p) in all_cases() {
        for (ra, rb) in [(0.0, 0.0), (0.2, -0.1)] {
            let s = TensorSurface::for_case(rule, p, ra, rb).unwrap();
            for t1 in [-1.0, -0.5, 0.0, 0.5, 1.0] {
                for t2 in [-1.0, -0.5, 0.0, 0.5, 1.0] {
                    let r = s.homomorphism_check(t1, t2, 1e-9).unwrap();
                    assert!(r.passed, "{rule} {p:?} {t1} {t2}: {r:?}");
                }
            }
        }
    }
}

#[test]
fn frames_are_orthonormal_where_defined() {
    for (rule, p) in all_cases() {
        let s = TensorSurface::for_case(rule, p, 0.3, -0.2).unwrap();
        let w = s.metric().weights;
        let g = |x: &[f64; 4], y: &[f64; 4]| (0..4).map(|m| w[m] * x[m] * y[m]).sum::<f64>();
        for (t, u) in grid() {
            let (e1, e2) = s.orthonormal_frame(t, u).unwrap();
            let (a, b) = (&e1.components, &e2.components);
            assert!((g(a, a).abs() - 1.0).abs() <= 1e-9);
            assert!((g(b, b).abs() - 1.0).abs() <= 1e-9);
            assert!(g(a, b).abs() <= 1e-9);
        }
    }
}

#[test]
fn lightlike_spiral_has_no_frame() {
    // rate 1 on a Lorentzian circle gives γ' with zero length.
    let s = TensorSurface::for_case(TensorRule::Ti, AlgebraParams::classical(), 1.0, 0.0).unwrap();
    assert!(matches!(s.orthonormal_frame(0.4, 0.1), Err(Error::Degenerate(_))));
}

#[test]
fn mismatch_lists_permitted_kinds() {
    let p = AlgebraParams::new(1.0, -1.0).unwrap();
    let lc = PlanarCurve::new(CurveKind::LorentzianCircle, 0.0).unwrap();
    let c = PlanarCurve::new(CurveKind::Circle, 0.0).unwrap();
    assert!(TensorSurface::new(lc, c, TensorRule::Tij, p).is_ok());
    let msg = TensorSurface::new(c, lc, TensorRule::Tij, p)
        .map(|_| ())
        .unwrap_err()
        .to_string();
    assert!(msg.contains("gamma in {lorentzian-circle, hyperbolic-spiral}"), "{msg}");
    assert!(msg.contains("delta in {circle, spiral}"), "{msg}");
    assert!(TensorSurface::new(lc, c, TensorRule::Tij, AlgebraParams::new(-1.0, 1.0).unwrap()).is_err());
}

#[test]
fn surfaces_need_unit_parameters() {
    let p = AlgebraParams::new(2.0, 3.0).unwrap();
    assert!(matches!(
        TensorSurface::for_case(TensorRule::Ti, p, 0.0, 0.0),
        Err(Error::UnsupportedSurfaceParams { .. })
    ));
}
