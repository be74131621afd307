use rand::RngExt;

use super::sampling::{random_member, random_number, random_unit_member, seeded};
use super::{Case, RunConfig, VerificationReport};
use crate::algebra::{AlgebraParams, ConjugationKind, GbcNumber, RepMatrix};
use crate::error::Result;
use crate::hyperquadric::{Hyperquadric, HyperquadricKind};
use crate::lie::{
    basis_field, basis_unit, bracket, bracket_finite_difference, coefficient_matrix, pushforward, TangentVector,
};
use crate::mesh::MeshSample;
use crate::numeric::{max_abs_diff, relative_deviation};
use crate::surface::TensorSurface;

/// Coefficient range of random algebra elements.
const ALGEBRA_RANGE: f64 = 10.0;
/// Half-width of the box random hyperquadric members are drawn from.
pub const MEMBER_RANGE: f64 = 2.0;
/// Property sampling domain for surfaces, `[-3, 3]²`.
const SURFACE_RANGE: f64 = 3.0;
/// Grid for the one-parameter subgroup check: 17 points on `[-2, 2]`.
const HOMOMORPHISM_GRID: usize = 17;
const HOMOMORPHISM_RANGE: f64 = 2.0;
/// Central-difference step and tolerance for the tangent closed forms.
const FD_STEP: f64 = 1e-5;
const FD_TOL: f64 = 1e-6;
/// Step for the finite-difference bracket cross-check.
const BRACKET_FD_STEP: f64 = 1e-4;
const BRACKET_FD_TOL: f64 = 1e-8;

/// Bound on the structure constants entering one product.
fn structure_scale(p: &AlgebraParams) -> f64 {
    let (a, b) = (p.alpha().abs(), p.beta().abs());
    1f64.max(a).max(b).max(a * b)
}

fn rep_deviation(a: &RepMatrix, b: &RepMatrix, scale: f64) -> f64 {
    a.sub(b).max_abs() / scale.max(1.0)
}

pub fn algebra_suite(config: &RunConfig) -> Result<VerificationReport> {
    let p = config.validate()?;
    let mut rng = seeded(config.seed);
    let k = structure_scale(&p);
    let (rel, abs) = (config.tol_rel, config.tol_abs);

    let mut commutativity = Case::new("commutativity", 0.0);
    let mut associativity = Case::new("associativity", rel);
    let mut distributivity = Case::new("distributivity", rel);
    let mut bilinearity = Case::new("scalar_bilinearity", rel);
    let mut unit = Case::new("unit_element", 0.0);
    let mut conj_linear = Case::new("conjugation_linearity", rel);
    let mut conj_involution = Case::new("conjugation_involution", 0.0);
    let mut conj_product = Case::new("conjugation_multiplicative", rel);
    let mut norm_form = Case::new("norm_form_consistency", abs);
    let mut iso_product = Case::new("matrix_isomorphism_product", rel);
    let mut iso_linear = Case::new("matrix_isomorphism_linearity", rel);
    let mut matrix_oracle = Case::new("product_matrix_oracle", rel);
    let mut inverse = Case::new("general_inverse", rel);

    for _ in 0..config.samples {
        let x = random_number(&mut rng, ALGEBRA_RANGE);
        let y = random_number(&mut rng, ALGEBRA_RANGE);
        let z = random_number(&mut rng, ALGEBRA_RANGE);
        let lambda: f64 = rng.random_range(-ALGEBRA_RANGE..ALGEBRA_RANGE);
        let delta: f64 = rng.random_range(-ALGEBRA_RANGE..ALGEBRA_RANGE);
        let (nx, ny, nz) = (x.max_abs(), y.max_abs(), z.max_abs());
        let xy = p.multiply(x, y);

        commutativity.record(max_abs_diff(xy.coeffs(), p.multiply(y, x).coeffs()));
        associativity.record(relative_deviation(
            &p.multiply(xy, z),
            &p.multiply(x, p.multiply(y, z)),
            nx * ny * nz * k * k,
        ));
        distributivity.record(relative_deviation(
            &p.multiply(x, y + z),
            &(xy + p.multiply(x, z)),
            nx * (ny + nz) * k,
        ));
        let lxy = lambda * xy;
        let bil_scale = lambda.abs() * nx * ny * k;
        bilinearity.record(
            relative_deviation(&p.multiply(lambda * x, y), &lxy, bil_scale).max(relative_deviation(
                &p.multiply(x, lambda * y),
                &lxy,
                bil_scale,
            )),
        );
        unit.record(max_abs_diff(p.multiply(GbcNumber::ONE, x).coeffs(), x.coeffs()));

        for kind in ConjugationKind::ALL {
            conj_linear.record(relative_deviation(
                &(lambda * x + delta * y).conjugate(kind),
                &(lambda * x.conjugate(kind) + delta * y.conjugate(kind)),
                lambda.abs() * nx + delta.abs() * ny,
            ));
            conj_involution.record(max_abs_diff(x.conjugate(kind).conjugate(kind).coeffs(), x.coeffs()));
            conj_product.record(relative_deviation(
                &xy.conjugate(kind),
                &p.multiply(x.conjugate(kind), y.conjugate(kind)),
                nx * ny * k,
            ));

            let full = p.multiply(x, x.conjugate(kind)).to_array();
            let nf = p.norm_form(x, kind);
            let surviving = match kind {
                ConjugationKind::Ti => 2,
                ConjugationKind::Tj => 1,
                ConjugationKind::Tij => 3,
            };
            let vanishing = (1..4)
                .filter(|&m| m != surviving)
                .map(|m| full[m].abs())
                .fold(0.0, f64::max);
            let agreement = (full[0] - nf.scalar).abs().max((full[surviving] - nf.residual).abs());
            norm_form.record(vanishing.max(agreement));
        }

        let (hx, hy) = (p.rep_matrix(x), p.rep_matrix(y));
        let hxy = hx.matmul(&hy);
        iso_product.record(rep_deviation(&p.rep_matrix(xy), &hxy, nx * ny * k * k));
        iso_linear.record(rep_deviation(&p.rep_matrix(x + y), &hx.add(&hy), (nx + ny) * k));
        let column = GbcNumber::from_array(hxy.column(0));
        matrix_oracle.record_result(column.map(|c| relative_deviation(&xy, &c, nx * ny * k)));

        if let Ok(inv) = p.inverse(x) {
            inverse.record(relative_deviation(
                &p.multiply(x, inv),
                &GbcNumber::ONE,
                nx * inv.max_abs() * k,
            ));
        }
    }

    Ok(VerificationReport {
        suite: "algebra".into(),
        cases: [
            commutativity,
            associativity,
            distributivity,
            bilinearity,
            unit,
            conj_linear,
            conj_involution,
            conj_product,
            norm_form,
            iso_product,
            iso_linear,
            matrix_oracle,
            inverse,
        ]
        .into_iter()
        .map(Case::finish)
        .collect(),
        config: config.clone(),
        anchor: "real algebra axioms, conjugation laws, 4x4 matrix representation".into(),
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GroupOptions {
    /// Also cross-check brackets by central differences of the fields.
    pub finite_difference_brackets: bool,
}

pub fn group_suite(config: &RunConfig, kind: HyperquadricKind, options: GroupOptions) -> Result<VerificationReport> {
    let p = config.validate()?;
    let quadric = Hyperquadric::new(kind, p, config.tol_rel)?;
    let metric = quadric.metric();
    let mut rng = seeded(config.seed);
    let k = structure_scale(&p);
    let (rel, abs) = (config.tol_rel, config.tol_abs);
    let basis = kind.lie_basis(false);

    let mut generator = Case::new("member_generation", rel);
    let mut closure = Case::new("closure", rel);
    let mut norm_mult = Case::new("norm_multiplicativity", rel);
    let mut inverse = Case::new("inverse", rel);
    let mut identity = Case::new("identity", 0.0);
    let mut unit_closure = Case::new("unit_subgroup_closure", rel);
    let mut field_push = Case::new("field_equals_pushforward", 0.0);
    let mut left_inv = Case::new("left_invariance", abs);
    let mut tangency = Case::new("field_tangency", rel);
    let mut brackets = Case::new("bracket_vanishing", 0.0);
    let mut brackets_fd = Case::new("bracket_finite_difference", BRACKET_FD_TOL);

    let scaled_constraint = |x: GbcNumber| quadric.constraint_value(x).abs() / x.max_abs().powi(2).max(1.0);

    // Coefficient matrices are constant, so their commutators are checked once.
    for &m in basis {
        for &n in basis {
            let a = coefficient_matrix(kind, m, &p)?;
            let b = coefficient_matrix(kind, n, &p)?;
            let c = a.commutator(&b);
            brackets.record(c.max_abs());
        }
    }

    for _ in 0..config.samples {
        let x = random_member(&mut rng, &quadric, MEMBER_RANGE, abs);
        let y = random_member(&mut rng, &quadric, MEMBER_RANGE, abs);
        let (xv, yv) = (x.value(), y.value());
        let (nx, ny) = (xv.max_abs(), yv.max_abs());

        generator.record(scaled_constraint(xv).max(scaled_constraint(yv)));

        let xy = p.multiply(xv, yv);
        let member = quadric.product(&x, &y).map(|_| scaled_constraint(xy));
        closure.record_result(member);

        let (n_x, n_y) = (quadric.norm(xv), quadric.norm(yv));
        let mult_scale = metric.abs_eval(xv.coeffs(), xv.coeffs()) * metric.abs_eval(yv.coeffs(), yv.coeffs());
        norm_mult.record((quadric.norm(xy) - n_x * n_y).abs() / (mult_scale * k).max(1.0));

        inverse.record_result(quadric.inverse(&y).map(|inv| {
            let iv = inv.value();
            let s = ny * iv.max_abs() * k;
            relative_deviation(&p.multiply(yv, iv), &GbcNumber::ONE, s)
                .max(relative_deviation(&p.multiply(iv, yv), &GbcNumber::ONE, s))
                .max(scaled_constraint(iv))
        }));
        identity.record(max_abs_diff(p.multiply(GbcNumber::ONE, xv).coeffs(), xv.coeffs()));

        let u = random_unit_member(&mut rng, &quadric, MEMBER_RANGE, abs);
        let v = random_unit_member(&mut rng, &quadric, MEMBER_RANGE, abs);
        let unit_dev = quadric.product(&u, &v).and_then(|uv| {
            let (uu, vv) = (u.value().max_abs(), v.value().max_abs());
            let s = (uu * vv).powi(2) * k;
            let inv = quadric.inverse(&u)?;
            Ok(((quadric.norm(uv.value()) - 1.0).abs() / s.max(1.0))
                .max((quadric.norm(inv.value()) - 1.0).abs() / (inv.value().max_abs().powi(2) * k).max(1.0)))
        });
        unit_closure.record_result(unit_dev);

        let gx = p.multiply(yv, xv);
        for &m in basis {
            let e = basis_unit(m).expect("basis index");
            let field = basis_field(kind, m, xv, &p)?;
            let pushed = pushforward(xv, &TangentVector::at_identity(e.to_array()), &p)?;
            field_push.record(max_abs_diff(&field.components, &pushed.components));

            let at_gx = basis_field(kind, m, gx, &p)?;
            let translated = p.multiply(yv, GbcNumber::from_array(field.components)?);
            left_inv.record(max_abs_diff(&at_gx.components, translated.coeffs()) / (ny * nx * k * k).max(1.0));

            let grad = kind.constraint_gradient(xv, &p);
            let d: f64 = (0..4).map(|c| grad[c] * field.components[c]).sum();
            tangency.record(d.abs() / (1.0 + nx * nx));

            for &n in basis {
                let exact = bracket(kind, m, n, xv, &p)?;
                brackets.record(exact.max_abs());
                if options.finite_difference_brackets {
                    let fd = bracket_finite_difference(kind, m, n, xv, &p, BRACKET_FD_STEP)?;
                    brackets_fd.record(fd.max_abs() / ((1.0 + nx) * k * k));
                }
            }
        }
    }

    let mut cases = vec![
        generator,
        closure,
        norm_mult,
        inverse,
        identity,
        unit_closure,
        field_push,
        left_inv,
        tangency,
        brackets,
    ];
    if options.finite_difference_brackets {
        cases.push(brackets_fd);
    }

    Ok(VerificationReport {
        suite: format!("group-{kind}"),
        cases: cases.into_iter().map(Case::finish).collect(),
        config: config.clone(),
        anchor: format!("Lie group M_{kind}, unit subgroup and left-invariant fields"),
    })
}

pub fn surface_suite(config: &RunConfig, surface: &TensorSurface) -> Result<VerificationReport> {
    let p = config.validate()?;
    if p != *surface.params() {
        return Err(crate::error::Error::InvalidArgument(
            "surface parameters differ from the run configuration".into(),
        ));
    }
    let quadric = surface.hyperquadric(config.tol_rel)?;
    let metric = surface.metric();
    let kind = surface.kind();
    let mut rng = seeded(config.seed);
    let (rel, abs) = (config.tol_rel, config.tol_abs);

    let mut membership = Case::new("membership", abs);
    let mut norm_factor = Case::new("norm_factorization", rel);
    let mut homomorphism = Case::new("one_parameter_subgroup", rel);
    let mut subgroup = Case::new("two_parameter_subgroup", rel);
    let mut forms = Case::new("fundamental_form_consistency", rel);
    let mut frames = Case::new("frame_orthonormality", rel);
    let mut fd = Case::new("tangent_finite_difference", FD_TOL);
    let mut tangent = Case::new("tangents_tangent", rel);
    let mut fields = Case::new("left_invariant_field_match", abs);

    let step = 2.0 * HOMOMORPHISM_RANGE / (HOMOMORPHISM_GRID - 1) as f64;
    let grid: Vec<f64> = (0..HOMOMORPHISM_GRID)
        .map(|i| -HOMOMORPHISM_RANGE + step * i as f64)
        .collect();
    for &t1 in &grid {
        for &t2 in &grid {
            homomorphism.record_result(surface.homomorphism_check(t1, t2, rel).map(|r| r.max_deviation()));
        }
    }

    let (gamma, delta) = (*surface.gamma(), *surface.delta());
    let (w1, w2) = surface.rule().plane_weights(&p);
    for _ in 0..config.samples {
        let t: f64 = rng.random_range(-SURFACE_RANGE..SURFACE_RANGE);
        let s: f64 = rng.random_range(-SURFACE_RANGE..SURFACE_RANGE);

        membership.record_result(surface.evaluate(t, s).and_then(|f| {
            quadric.membership(f)?;
            Ok(quadric.constraint_value(f).abs() / f.max_abs().powi(2).max(1.0))
        }));

        norm_factor.record_result(surface.evaluate(t, s).map(|f| {
            let (g, d) = (gamma.point(t), delta.point(s));
            let factored = (g[0] * g[0] + w1 * g[1] * g[1]) * (d[0] * d[0] + w2 * d[1] * d[1]);
            let scale = metric.abs_eval(f.coeffs(), f.coeffs()).max(f64::MIN_POSITIVE);
            (quadric.norm(f) - factored).abs() / scale
        }));

        let (t2, s2): (f64, f64) = (rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        let (t1, s1) = (t / 2.0, s / 2.0);
        subgroup.record_result((|| {
            let a = surface.evaluate(t1, s1)?;
            let b = surface.evaluate(t2, s2)?;
            let ab = p.checked_multiply(a, b)?;
            let c = surface.evaluate(t1 + t2, s1 + s2)?;
            Ok(relative_deviation(&ab, &c, a.max_abs() * b.max_abs()))
        })());

        forms.record_result(surface.compare_forms(t, s).map(|c| c.deviation()));

        match surface.orthonormal_frame(t, s) {
            Ok((e1, e2)) => {
                let (a, b) = (&e1.components, &e2.components);
                let dev = (metric.eval(a, a).abs() - 1.0)
                    .abs()
                    .max((metric.eval(b, b).abs() - 1.0).abs())
                    .max(metric.eval(a, b).abs());
                frames.record(dev);
            }
            Err(crate::error::Error::Degenerate(_)) => {}
            Err(_) => frames.record(f64::MAX),
        }

        fd.record_result((|| {
            let (ft, fs) = surface.tangents(t, s)?;
            let h = FD_STEP;
            let dt = (surface.evaluate(t + h, s)? - surface.evaluate(t - h, s)?) * (0.5 / h);
            let ds = (surface.evaluate(t, s + h)? - surface.evaluate(t, s - h)?) * (0.5 / h);
            let scale = ft.max_abs().max(fs.max_abs()).max(1.0);
            Ok(max_abs_diff(&ft.components, dt.coeffs()).max(max_abs_diff(&fs.components, ds.coeffs())) / scale)
        })());

        tangent.record_result(surface.tangents(t, s).map(|(ft, fs)| {
            let grad = kind.constraint_gradient(ft.base, &p);
            let dir = |v: &[f64; 4]| (0..4).map(|c| grad[c] * v[c]).sum::<f64>().abs();
            let scale = ft.base.max_abs() * ft.max_abs().max(fs.max_abs());
            dir(&ft.components).max(dir(&fs.components)) / scale.max(1.0)
        }));

        if surface.is_unit_case() {
            fields.record_result(surface.field_match(t1 + t2, s1 + s2).map(|r| r.max_residual()));
        }
    }

    let mut cases = vec![
        membership,
        norm_factor,
        homomorphism,
        subgroup,
        forms,
        frames,
        fd,
        tangent,
    ];
    if surface.is_unit_case() {
        cases.push(fields);
    }

    Ok(VerificationReport {
        suite: format!("surface-{}", surface.rule()),
        cases: cases.into_iter().map(Case::finish).collect(),
        config: config.clone(),
        anchor: format!(
            "{} x {} tensor surface on M_{} (alpha={}, beta={})",
            gamma.kind(),
            delta.kind(),
            kind,
            p.alpha(),
            p.beta()
        ),
    })
}

/// Constraint and (for circle surfaces) unit-norm checks over exported
/// mesh samples.
pub fn mesh_report(config: &RunConfig, surface: &TensorSurface, samples: &[MeshSample]) -> VerificationReport {
    let mut constraint = Case::new("mesh_constraint", config.tol_abs);
    let mut unit = Case::new("mesh_unit_norm", config.tol_abs);
    for m in samples {
        constraint.record(m.constraint.abs() / m.point.max_abs().powi(2).max(1.0));
        unit.record((m.norm - 1.0).abs());
    }
    let mut cases = vec![constraint];
    if surface.is_unit_case() {
        cases.push(unit);
    }
    VerificationReport {
        suite: format!("mesh-{}", surface.rule()),
        cases: cases.into_iter().map(Case::finish).collect(),
        config: config.clone(),
        anchor: format!(
            "{} x {} tensor surface mesh",
            surface.gamma().kind(),
            surface.delta().kind()
        ),
    }
}
