//! The hyperquadrics `M_ti`, `M_tj`, `M_tij` as multiplicative groups.
//!
//! Each hyperquadric is cut out by one bilinear constraint (the imaginary
//! residual of `x · x^k`) together with a nonvanishing norm `g_k(x, x)`.
//! Norms multiply and conjugation is an automorphism, so products of members
//! stay members and `x^k / N_x` inverts `x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParams, ConjugationKind, GbcNumber};
use crate::error::{Error, Result};

/// Default absolute tolerance for membership tests.
pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HyperquadricKind {
    Ti,
    Tj,
    Tij,
}

impl HyperquadricKind {
    pub const ALL: [Self; 3] = [Self::Ti, Self::Tj, Self::Tij];

    pub fn conjugation(self) -> ConjugationKind {
        match self {
            Self::Ti => ConjugationKind::Ti,
            Self::Tj => ConjugationKind::Tj,
            Self::Tij => ConjugationKind::Tij,
        }
    }

    /// `c1c3 + αc2c4`, `c1c2 + βc3c4` or `c1c4 - c2c3`.
    pub fn constraint_value(self, x: GbcNumber, p: &AlgebraParams) -> f64 {
        let [x1, x2, x3, x4] = x.to_array();
        match self {
            Self::Ti => x1 * x3 + p.alpha() * (x2 * x4),
            Self::Tj => x1 * x2 + p.beta() * (x3 * x4),
            Self::Tij => x1 * x4 - x2 * x3,
        }
    }

    /// Gradient of the constraint with respect to `(c1, c2, c3, c4)`.
    pub fn constraint_gradient(self, x: GbcNumber, p: &AlgebraParams) -> [f64; 4] {
        let [x1, x2, x3, x4] = x.to_array();
        let (a, b) = (p.alpha(), p.beta());
        match self {
            Self::Ti => [x3, a * x4, x1, a * x2],
            Self::Tj => [x2, x1, b * x4, b * x3],
            Self::Tij => [x4, -x3, -x2, x1],
        }
    }

    pub fn metric(self, p: &AlgebraParams) -> MetricForm {
        let (a, b) = (p.alpha(), p.beta());
        let weights = match self {
            Self::Ti => [1.0, a, -b, -a * b],
            Self::Tj => [1.0, -a, b, -a * b],
            Self::Tij => [1.0, a, b, a * b],
        };
        MetricForm { weights }
    }

    /// 1-based indices of the left-invariant basis fields `X_m` spanning
    /// the Lie algebra. The unit subgroup drops `X_1`.
    pub fn lie_basis(self, unit_subgroup: bool) -> &'static [u8] {
        match (self, unit_subgroup) {
            (Self::Ti, false) => &[1, 2, 4],
            (Self::Tj, false) => &[1, 3, 4],
            (Self::Tij, false) => &[1, 2, 3],
            (Self::Ti, true) => &[2, 4],
            (Self::Tj, true) => &[3, 4],
            (Self::Tij, true) => &[2, 3],
        }
    }
}

impl fmt::Display for HyperquadricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.conjugation().fmt(f)
    }
}

impl FromStr for HyperquadricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown hyperquadric kind `{s}`")))
    }
}

/// Diagonal quadratic form on `ℝ⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricForm {
    pub weights: [f64; 4],
}

impl MetricForm {
    pub fn eval(&self, x: &[f64; 4], y: &[f64; 4]) -> f64 {
        (0..4).map(|m| self.weights[m] * (x[m] * y[m])).sum()
    }

    /// `Σ |w_m x_m y_m|`, the rounding scale of [`MetricForm::eval`].
    pub fn abs_eval(&self, x: &[f64; 4], y: &[f64; 4]) -> f64 {
        (0..4).map(|m| (self.weights[m] * x[m] * y[m]).abs()).sum()
    }

    /// Number of negative weights, the index `v` of `ℝ⁴_v`.
    pub fn index(&self) -> usize {
        self.weights.iter().filter(|w| **w < 0.0).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailedCondition {
    /// The bilinear constraint is not satisfied.
    Constraint,
    /// The norm vanishes.
    NullNorm,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Constraint => "constraint not satisfied",
            Self::NullNorm => "norm vanishes",
        })
    }
}

/// A number known to lie on a given hyperquadric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HyperquadricPoint {
    value: GbcNumber,
    kind: HyperquadricKind,
}

impl HyperquadricPoint {
    pub fn value(&self) -> GbcNumber {
        self.value
    }

    pub fn kind(&self) -> HyperquadricKind {
        self.kind
    }
}

/// A hyperquadric of a fixed algebra together with the tolerance used to
/// accept points on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyperquadric {
    kind: HyperquadricKind,
    params: AlgebraParams,
    tol: f64,
}

impl Hyperquadric {
    pub fn new(kind: HyperquadricKind, params: AlgebraParams, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "membership tolerance must be positive, got {tol}"
            )));
        }
        Ok(Self { kind, params, tol })
    }

    pub fn kind(&self) -> HyperquadricKind {
        self.kind
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn metric(&self) -> MetricForm {
        self.kind.metric(&self.params)
    }

    pub fn constraint_value(&self, x: GbcNumber) -> f64 {
        self.kind.constraint_value(x, &self.params)
    }

    pub fn metric_eval(&self, x: GbcNumber, y: GbcNumber) -> f64 {
        self.metric().eval(x.coeffs(), y.coeffs())
    }

    pub fn norm(&self, x: GbcNumber) -> f64 {
        self.metric_eval(x, x)
    }

    /// The constraint is compared against `tol · max(1, ‖x‖∞²)` since it is
    /// quadratic in `x`; the norm only has to clear `tol`.
    pub fn membership(&self, x: GbcNumber) -> Result<HyperquadricPoint> {
        let scale = x.max_abs().powi(2).max(1.0);
        let condition = if self.constraint_value(x).abs() > self.tol * scale {
            Some(FailedCondition::Constraint)
        } else if self.norm(x).abs() <= self.tol {
            Some(FailedCondition::NullNorm)
        } else {
            None
        };
        match condition {
            Some(condition) => Err(Error::NotOnHyperquadric {
                kind: self.kind,
                condition,
            }),
            None => Ok(HyperquadricPoint {
                value: x,
                kind: self.kind,
            }),
        }
    }

    pub fn identity(&self) -> HyperquadricPoint {
        HyperquadricPoint {
            value: GbcNumber::ONE,
            kind: self.kind,
        }
    }

    fn check_kind(&self, x: &HyperquadricPoint) -> Result<()> {
        if x.kind != self.kind {
            return Err(Error::KindMismatch(self.kind, x.kind));
        }
        Ok(())
    }

    /// Product of two members, re-validated. A failure here means the
    /// tolerance is too tight for the magnitudes involved.
    pub fn product(&self, x: &HyperquadricPoint, y: &HyperquadricPoint) -> Result<HyperquadricPoint> {
        self.check_kind(x)?;
        self.check_kind(y)?;
        let xy = self.params.checked_multiply(x.value, y.value)?;
        self.membership(xy)
    }

    /// `y^k / N_y`.
    pub fn inverse(&self, y: &HyperquadricPoint) -> Result<HyperquadricPoint> {
        self.check_kind(y)?;
        let n = self.norm(y.value);
        let inv = y.value.conjugate(self.kind.conjugation()).checked_scale(1.0 / n)?;
        Ok(HyperquadricPoint {
            value: inv,
            kind: self.kind,
        })
    }

    /// Membership in the unit subgroup `M*`.
    pub fn is_unit(&self, x: &HyperquadricPoint, tol: f64) -> bool {
        (self.norm(x.value) - 1.0).abs() <= tol
    }
}
