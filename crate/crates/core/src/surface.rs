//! Tensor product surfaces of plane curves lying on the hyperquadrics.
//!
//! Each rule writes `f(t, s)` as a product of two "complex-like" numbers,
//! one per curve:
//!
//! | rule  | factorization                       | plane metrics `g₁`, `g₂`    |
//! |-------|-------------------------------------|-----------------------------|
//! | `Ti`  | `(γ₁ + γ₂ ij)(δ₁ + δ₂ i)`            | `dx² - αβ dy²`, `dx² + α dy²` |
//! | `Tj`  | `(γ₁ + γ₂ ij)(δ₁ + δ₂ j)`            | `dx² - αβ dy²`, `dx² + β dy²` |
//! | `Tij` | `(γ₁ + γ₂ j)(δ₁ + δ₂ i)`             | `dx² + β dy²`,  `dx² + α dy²` |
//!
//! With `α, β = ±1` each factor is an exponential `e^{rt} exp(t u)` for a
//! unit `u` squaring to `∓1`, so the diagonal `f(t, t)` is a one-parameter
//! subgroup and `f` itself a two-dimensional subgroup, provided each curve
//! lives in the plane whose metric matches `u²`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParams, GbcNumber};
use crate::error::{Error, Result};
use crate::hyperquadric::{Hyperquadric, HyperquadricKind, MetricForm};
use crate::lie::{basis_field, TangentVector};
use crate::numeric::{max_abs_diff, relative_deviation};

/// Relative tolerance between the ambient and factored fundamental forms.
pub const FORM_TOL: f64 = 1e-9;

/// Frames are declared degenerate below this fraction of the natural scale.
pub const DEGENERATE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    Circle,
    LorentzianCircle,
    Spiral,
    HyperbolicSpiral,
}

impl CurveKind {
    pub const ALL: [Self; 4] = [
        Self::Circle,
        Self::LorentzianCircle,
        Self::Spiral,
        Self::HyperbolicSpiral,
    ];

    pub fn plane(self) -> Plane {
        match self {
            Self::Circle | Self::Spiral => Plane::Euclidean,
            Self::LorentzianCircle | Self::HyperbolicSpiral => Plane::Lorentzian,
        }
    }

    pub fn is_circle(self) -> bool {
        matches!(self, Self::Circle | Self::LorentzianCircle)
    }

    fn name(self) -> &'static str {
        match self {
            Self::Circle => "circle",
            Self::LorentzianCircle => "lorentzian-circle",
            Self::Spiral => "spiral",
            Self::HyperbolicSpiral => "hyperbolic-spiral",
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown curve kind `{s}`")))
    }
}

/// The plane a curve lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Plane {
    /// `dx² + dy²`
    Euclidean,
    /// `dx² - dy²`
    Lorentzian,
}

impl Plane {
    pub fn metric_sign(self) -> f64 {
        match self {
            Self::Euclidean => 1.0,
            Self::Lorentzian => -1.0,
        }
    }

    fn kinds(self) -> [CurveKind; 2] {
        match self {
            Self::Euclidean => [CurveKind::Circle, CurveKind::Spiral],
            Self::Lorentzian => [CurveKind::LorentzianCircle, CurveKind::HyperbolicSpiral],
        }
    }
}

/// `e^{rt}(cos t, sin t)` or `e^{rt}(cosh t, sinh t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarCurve {
    kind: CurveKind,
    rate: f64,
}

impl PlanarCurve {
    pub fn new(kind: CurveKind, rate: f64) -> Result<Self> {
        if !rate.is_finite() {
            return Err(Error::NonFinite("curve rate"));
        }
        if kind.is_circle() && rate != 0.0 {
            return Err(Error::CircleWithRate { kind, rate });
        }
        Ok(Self { kind, rate })
    }

    /// Circle when `rate` is zero, spiral otherwise.
    pub fn in_plane(plane: Plane, rate: f64) -> Result<Self> {
        let [circle, spiral] = plane.kinds();
        Self::new(if rate == 0.0 { circle } else { spiral }, rate)
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn metric_sign(&self) -> f64 {
        self.kind.plane().metric_sign()
    }

    pub fn point(&self, t: f64) -> [f64; 2] {
        let e = (self.rate * t).exp();
        match self.kind.plane() {
            Plane::Euclidean => [e * t.cos(), e * t.sin()],
            Plane::Lorentzian => [e * t.cosh(), e * t.sinh()],
        }
    }

    pub fn velocity(&self, t: f64) -> [f64; 2] {
        let e = (self.rate * t).exp();
        let r = self.rate;
        match self.kind.plane() {
            Plane::Euclidean => {
                let (s, c) = t.sin_cos();
                [e * (r * c - s), e * (r * s + c)]
            }
            Plane::Lorentzian => {
                let (s, c) = (t.sinh(), t.cosh());
                [e * (r * c + s), e * (r * s + c)]
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TensorRule {
    Ti,
    Tj,
    Tij,
}

impl TensorRule {
    pub const ALL: [Self; 3] = [Self::Ti, Self::Tj, Self::Tij];

    pub fn hyperquadric_kind(self) -> HyperquadricKind {
        match self {
            Self::Ti => HyperquadricKind::Ti,
            Self::Tj => HyperquadricKind::Tj,
            Self::Tij => HyperquadricKind::Tij,
        }
    }

    /// Four coordinates of `γ ⊗ δ`.
    pub fn combine(self, g: [f64; 2], d: [f64; 2], p: &AlgebraParams) -> [f64; 4] {
        let [g1, g2] = g;
        let [d1, d2] = d;
        match self {
            Self::Ti => [g1 * d1, g1 * d2, -p.alpha() * (g2 * d2), g2 * d1],
            Self::Tj => [g1 * d1, -p.beta() * (g2 * d2), g1 * d2, g2 * d1],
            Self::Tij => [g1 * d1, g1 * d2, g2 * d1, g2 * d2],
        }
    }

    /// `dy²` weights of the plane metrics `g₁` (for γ) and `g₂` (for δ).
    pub fn plane_weights(self, p: &AlgebraParams) -> (f64, f64) {
        let (a, b) = (p.alpha(), p.beta());
        match self {
            Self::Ti => (-a * b, a),
            Self::Tj => (-a * b, b),
            Self::Tij => (b, a),
        }
    }

    /// Indices of the basis fields matching `∂/∂t` and `∂/∂s` on the
    /// circle surfaces.
    pub fn designated_fields(self) -> (u8, u8) {
        match self {
            Self::Ti => (4, 2),
            Self::Tj => (4, 3),
            Self::Tij => (3, 2),
        }
    }
}

impl fmt::Display for TensorRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.hyperquadric_kind().fmt(f)
    }
}

impl FromStr for TensorRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ti" => Ok(Self::Ti),
            "tj" => Ok(Self::Tj),
            "tij" => Ok(Self::Tij),
            _ => Err(Error::InvalidArgument(format!("unknown tensor rule `{s}`"))),
        }
    }
}

use Plane::{Euclidean as E, Lorentzian as L};

/// `(rule, sign α, sign β) → (plane of γ, plane of δ)`.
const CASE_TABLE: [(TensorRule, i8, i8, Plane, Plane); 12] = [
    (TensorRule::Ti, 1, 1, L, E),
    (TensorRule::Ti, 1, -1, E, E),
    (TensorRule::Ti, -1, 1, E, L),
    (TensorRule::Ti, -1, -1, L, L),
    (TensorRule::Tj, 1, 1, L, E),
    (TensorRule::Tj, 1, -1, E, L),
    (TensorRule::Tj, -1, 1, E, E),
    (TensorRule::Tj, -1, -1, L, L),
    (TensorRule::Tij, 1, 1, E, E),
    (TensorRule::Tij, 1, -1, L, E),
    (TensorRule::Tij, -1, 1, E, L),
    (TensorRule::Tij, -1, -1, L, L),
];

fn unit_sign(v: f64) -> Option<i8> {
    if v == 1.0 {
        Some(1)
    } else if v == -1.0 {
        Some(-1)
    } else {
        None
    }
}

/// Planes required of `(γ, δ)` for `rule` under `params`.
pub fn required_planes(rule: TensorRule, params: &AlgebraParams) -> Result<(Plane, Plane)> {
    let (alpha, beta) = (params.alpha(), params.beta());
    let (Some(sa), Some(sb)) = (unit_sign(alpha), unit_sign(beta)) else {
        return Err(Error::UnsupportedSurfaceParams { alpha, beta });
    };
    CASE_TABLE
        .iter()
        .find(|(r, a, b, _, _)| *r == rule && *a == sa && *b == sb)
        .map(|&(_, _, _, g, d)| (g, d))
        .ok_or(Error::UnsupportedSurfaceParams { alpha, beta })
}

/// Every `(rule, α, β)` combination with `α, β = ±1`.
pub fn all_cases() -> impl Iterator<Item = (TensorRule, AlgebraParams)> {
    CASE_TABLE.iter().map(|&(rule, a, b, _, _)| {
        let params = AlgebraParams::new(f64::from(a), f64::from(b)).expect("unit params");
        (rule, params)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FundamentalForm {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

impl FundamentalForm {
    pub fn determinant(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }
}

/// Both routes to the first fundamental form, with the rounding scale of
/// each ambient entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FormComparison {
    pub ambient: FundamentalForm,
    pub factored: FundamentalForm,
    pub scale: [f64; 3],
}

impl FormComparison {
    /// Largest relative disagreement over the three entries.
    pub fn deviation(&self) -> f64 {
        let a = [self.ambient.g11, self.ambient.g12, self.ambient.g22];
        let b = [self.factored.g11, self.factored.g12, self.factored.g22];
        (0..3)
            .map(|k| (a[k] - b[k]).abs() / self.scale[k].max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HomomorphismReport {
    pub passed: bool,
    /// `φ(t1)·φ(t2)` against `φ(t1 + t2)`.
    pub product_deviation: f64,
    /// `φ(-t)` against the group inverse of `φ(t)`, worst of `t1`, `t2`.
    pub inverse_deviation: f64,
}

impl HomomorphismReport {
    pub fn max_deviation(&self) -> f64 {
        self.product_deviation.max(self.inverse_deviation)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldMatchReport {
    /// `∂f/∂t` against its designated basis field at `f(t, s)`.
    pub dt_residual: f64,
    /// `∂f/∂s` against its designated basis field.
    pub ds_residual: f64,
    /// `φ'(t)` against the sum of both fields at `φ(t)`.
    pub diagonal_residual: f64,
}

impl FieldMatchReport {
    pub fn max_residual(&self) -> f64 {
        self.dt_residual.max(self.ds_residual).max(self.diagonal_residual)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TensorSurface {
    gamma: PlanarCurve,
    delta: PlanarCurve,
    rule: TensorRule,
    params: AlgebraParams,
}

impl TensorSurface {
    pub fn new(gamma: PlanarCurve, delta: PlanarCurve, rule: TensorRule, params: AlgebraParams) -> Result<Self> {
        let (pg, pd) = required_planes(rule, &params)?;
        if gamma.kind.plane() != pg || delta.kind.plane() != pd {
            let names = |p: Plane| p.kinds().map(|k| k.to_string()).join(", ");
            return Err(Error::CaseMismatch {
                rule,
                alpha: params.alpha(),
                beta: params.beta(),
                gamma: gamma.kind,
                delta: delta.kind,
                permitted_gamma: names(pg),
                permitted_delta: names(pd),
            });
        }
        Ok(Self {
            gamma,
            delta,
            rule,
            params,
        })
    }

    /// The surface the case table permits for `(rule, params)`, using
    /// circles for zero rates and spirals otherwise.
    pub fn for_case(rule: TensorRule, params: AlgebraParams, rate_gamma: f64, rate_delta: f64) -> Result<Self> {
        let (pg, pd) = required_planes(rule, &params)?;
        Self::new(
            PlanarCurve::in_plane(pg, rate_gamma)?,
            PlanarCurve::in_plane(pd, rate_delta)?,
            rule,
            params,
        )
    }

    pub fn gamma(&self) -> &PlanarCurve {
        &self.gamma
    }

    pub fn delta(&self) -> &PlanarCurve {
        &self.delta
    }

    pub fn rule(&self) -> TensorRule {
        self.rule
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn kind(&self) -> HyperquadricKind {
        self.rule.hyperquadric_kind()
    }

    pub fn metric(&self) -> MetricForm {
        self.kind().metric(&self.params)
    }

    pub fn hyperquadric(&self, tol: f64) -> Result<Hyperquadric> {
        Hyperquadric::new(self.kind(), self.params, tol)
    }

    /// Both curves are circles, so the surface lies in the unit subgroup.
    pub fn is_unit_case(&self) -> bool {
        self.gamma.kind.is_circle() && self.delta.kind.is_circle()
    }

    fn combine(&self, g: [f64; 2], d: [f64; 2]) -> GbcNumber {
        GbcNumber::from_array_unchecked(self.rule.combine(g, d, &self.params))
    }

    pub fn evaluate(&self, t: f64, s: f64) -> Result<GbcNumber> {
        let x = self.combine(self.gamma.point(t), self.delta.point(s));
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Error::NonFinite("surface point"))
        }
    }

    /// The one-parameter subgroup `φ(t) = f(t, t)`.
    pub fn diagonal(&self, t: f64) -> Result<GbcNumber> {
        self.evaluate(t, t)
    }

    /// `(∂f/∂t, ∂f/∂s)` from the curves' analytic velocities.
    pub fn tangents(&self, t: f64, s: f64) -> Result<(TangentVector, TangentVector)> {
        let base = self.evaluate(t, s)?;
        let (g, d) = (self.gamma.point(t), self.delta.point(s));
        let ft = self.combine(self.gamma.velocity(t), d);
        let fs = self.combine(g, self.delta.velocity(s));
        if !(ft.is_finite() && fs.is_finite()) {
            return Err(Error::NonFinite("surface tangent"));
        }
        Ok((
            TangentVector {
                components: ft.to_array(),
                base,
            },
            TangentVector {
                components: fs.to_array(),
                base,
            },
        ))
    }

    /// Ambient `g(∂f, ∂f)` next to the products of plane metrics.
    pub fn compare_forms(&self, t: f64, s: f64) -> Result<FormComparison> {
        let (ft, fs) = self.tangents(t, s)?;
        let (u, v) = (&ft.components, &fs.components);
        let metric = self.metric();
        let ambient = FundamentalForm {
            g11: metric.eval(u, u),
            g12: metric.eval(u, v),
            g22: metric.eval(v, v),
        };

        let (w1, w2) = self.rule.plane_weights(&self.params);
        let plane = |w: f64, a: [f64; 2], b: [f64; 2]| a[0] * b[0] + w * (a[1] * b[1]);
        let (g, dg) = (self.gamma.point(t), self.gamma.velocity(t));
        let (d, dd) = (self.delta.point(s), self.delta.velocity(s));
        let factored = FundamentalForm {
            g11: plane(w1, dg, dg) * plane(w2, d, d),
            g12: plane(w1, g, dg) * plane(w2, d, dd),
            g22: plane(w1, g, g) * plane(w2, dd, dd),
        };

        Ok(FormComparison {
            ambient,
            factored,
            scale: [metric.abs_eval(u, u), metric.abs_eval(u, v), metric.abs_eval(v, v)],
        })
    }

    /// First fundamental form, cross-checked against the factored route.
    pub fn fundamental_form(&self, t: f64, s: f64) -> Result<FundamentalForm> {
        self.checked_forms(t, s).map(|c| c.ambient)
    }

    fn checked_forms(&self, t: f64, s: f64) -> Result<FormComparison> {
        let cmp = self.compare_forms(t, s)?;
        let (a, b) = (cmp.ambient, cmp.factored);
        for (k, (entry, x, y)) in [("g11", a.g11, b.g11), ("g12", a.g12, b.g12), ("g22", a.g22, b.g22)]
            .into_iter()
            .enumerate()
        {
            if (x - y).abs() > FORM_TOL * cmp.scale[k] {
                return Err(Error::FormMismatch {
                    entry,
                    ambient: x,
                    factored: y,
                });
            }
        }
        Ok(cmp)
    }

    /// `e₁ = ∂f/∂t / √|g11|` and
    /// `e₂ = (g11 ∂f/∂s − g12 ∂f/∂t) / √|g11 (g11 g22 − g12²)|`.
    pub fn orthonormal_frame(&self, t: f64, s: f64) -> Result<(TangentVector, TangentVector)> {
        let (ft, fs) = self.tangents(t, s)?;
        let cmp = self.checked_forms(t, s)?;
        let (form, [s11, s12, s22]) = (cmp.ambient, cmp.scale);
        // Each quantity is compared with the size of the terms summed into it.
        if form.g11.abs() <= DEGENERATE_TOL * s11 {
            return Err(Error::Degenerate("g11 vanishes"));
        }
        if form.determinant().abs() <= DEGENERATE_TOL * (s11 * s22 + s12 * s12) {
            return Err(Error::Degenerate("induced metric is singular"));
        }
        let d = form.g11 * form.determinant();
        let k1 = 1.0 / form.g11.abs().sqrt();
        let k2 = 1.0 / d.abs().sqrt();
        let e1 = ft.components.map(|c| k1 * c);
        let e2: [f64; 4] = std::array::from_fn(|m| k2 * (form.g11 * fs.components[m] - form.g12 * ft.components[m]));
        Ok((
            TangentVector {
                components: e1,
                base: ft.base,
            },
            TangentVector {
                components: e2,
                base: ft.base,
            },
        ))
    }

    /// Checks `φ(t1)·φ(t2) = φ(t1 + t2)` and `φ(-t) = φ(t)⁻¹` for `t1`, `t2`.
    pub fn homomorphism_check(&self, t1: f64, t2: f64, tol: f64) -> Result<HomomorphismReport> {
        let p1 = self.diagonal(t1)?;
        let p2 = self.diagonal(t2)?;
        let prod = self.params.checked_multiply(p1, p2)?;
        let sum = self.diagonal(t1 + t2)?;
        let product_deviation = relative_deviation(&prod, &sum, p1.max_abs() * p2.max_abs());

        let quadric = self.hyperquadric(tol)?;
        let mut inverse_deviation: f64 = 0.0;
        for t in [t1, t2] {
            let member = quadric.membership(self.diagonal(t)?)?;
            let inv = quadric.inverse(&member)?.value();
            let neg = self.diagonal(-t)?;
            inverse_deviation = inverse_deviation.max(relative_deviation(&inv, &neg, inv.max_abs()));
        }
        Ok(HomomorphismReport {
            passed: product_deviation <= tol && inverse_deviation <= tol,
            product_deviation,
            inverse_deviation,
        })
    }

    /// Relative residuals between the coordinate tangents and the
    /// designated left-invariant fields. Only defined on circle surfaces.
    pub fn field_match(&self, t: f64, s: f64) -> Result<FieldMatchReport> {
        if !self.is_unit_case() {
            return Err(Error::NotUnitCase);
        }
        let kind = self.kind();
        let (mt, ms) = self.rule.designated_fields();
        let p = &self.params;
        let residual = |a: &[f64; 4], b: &[f64; 4]| {
            let scale = a.iter().chain(b).fold(1.0_f64, |m, v| m.max(v.abs()));
            max_abs_diff(a, b) / scale
        };

        let (ft, fs) = self.tangents(t, s)?;
        let at = ft.base;
        let xt = basis_field(kind, mt, at, p)?;
        let xs = basis_field(kind, ms, at, p)?;

        let phi = self.diagonal(t)?;
        let (dt, ds) = self.tangents(t, t)?;
        let dphi: [f64; 4] = std::array::from_fn(|m| dt.components[m] + ds.components[m]);
        let ya = basis_field(kind, mt, phi, p)?;
        let yb = basis_field(kind, ms, phi, p)?;
        let sum: [f64; 4] = std::array::from_fn(|m| ya.components[m] + yb.components[m]);

        Ok(FieldMatchReport {
            dt_residual: residual(&ft.components, &xt.components),
            ds_residual: residual(&fs.components, &xs.components),
            diagonal_residual: residual(&dphi, &sum),
        })
    }
}
