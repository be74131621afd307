//! Left-invariant vector fields on the hyperquadric groups.
//!
//! Left translation `L_x(y) = x·y` is linear, so its differential sends a
//! tangent vector `ζ` at the identity to `x·ζ`. The basis field `X_m` is the
//! pushforward of the `m`-th basis unit, i.e. `X_m(x) = rep_matrix(e_m) x`.
//! Every field is linear in `x` with a constant coefficient matrix.

use serde::Serialize;

use crate::algebra::{AlgebraParams, GbcNumber, RepMatrix};
use crate::error::{Error, Result};
use crate::hyperquadric::{HyperquadricKind, HyperquadricPoint};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangentVector {
    pub components: [f64; 4],
    pub base: GbcNumber,
}

impl TangentVector {
    pub fn at_identity(components: [f64; 4]) -> Self {
        Self {
            components,
            base: GbcNumber::ONE,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Basis unit `1, i, j, ij` for `m = 1..=4`.
pub fn basis_unit(m: u8) -> Option<GbcNumber> {
    (1..=4).contains(&m).then(|| GbcNumber::unit(usize::from(m - 1)))
}

/// Differential of left translation by `x`, applied to `zeta` at the
/// identity.
pub fn pushforward(x: GbcNumber, zeta: &TangentVector, p: &AlgebraParams) -> Result<TangentVector> {
    if zeta.base != GbcNumber::ONE {
        return Err(Error::InvalidArgument(
            "pushforward needs a tangent vector at the identity".into(),
        ));
    }
    let z = GbcNumber::from_array(zeta.components)?;
    Ok(TangentVector {
        components: p.multiply(x, z).to_array(),
        base: x,
    })
}

fn check_index(kind: HyperquadricKind, m: u8) -> Result<GbcNumber> {
    match basis_unit(m) {
        Some(e) if kind.lie_basis(false).contains(&m) => Ok(e),
        _ => Err(Error::IndexNotInBasis { kind, index: m }),
    }
}

/// `X_m` evaluated at `x`.
pub fn basis_field(kind: HyperquadricKind, m: u8, x: GbcNumber, p: &AlgebraParams) -> Result<TangentVector> {
    let e = check_index(kind, m)?;
    Ok(TangentVector {
        components: p.multiply(x, e).to_array(),
        base: x,
    })
}

/// Constant matrix `A_m` with `X_m(x) = A_m x`.
pub fn coefficient_matrix(kind: HyperquadricKind, m: u8, p: &AlgebraParams) -> Result<RepMatrix> {
    let e = check_index(kind, m)?;
    Ok(p.rep_matrix(e))
}

/// Directional derivative of the hyperquadric constraint along `X_m` at a
/// member; vanishes when `X_m` is tangent.
pub fn constraint_tangency(kind: HyperquadricKind, m: u8, x: &HyperquadricPoint, p: &AlgebraParams) -> Result<f64> {
    if x.kind() != kind {
        return Err(Error::KindMismatch(kind, x.kind()));
    }
    let field = basis_field(kind, m, x.value(), p)?;
    let grad = kind.constraint_gradient(x.value(), p);
    Ok((0..4).map(|c| grad[c] * field.components[c]).sum())
}

/// Lie bracket `[X_m, X_n]` at `x`, computed from the coefficient
/// matrices: for linear fields `Ax`, `Bx` the bracket is `(BA - AB) x`.
pub fn bracket(kind: HyperquadricKind, m: u8, n: u8, x: GbcNumber, p: &AlgebraParams) -> Result<TangentVector> {
    let a = coefficient_matrix(kind, m, p)?;
    let b = coefficient_matrix(kind, n, p)?;
    let c = b.matmul(&a).sub(&a.matmul(&b));
    Ok(TangentVector {
        components: c.apply(x.to_array()),
        base: x,
    })
}

/// Bracket from central differences of the fields along each other,
/// `DX_n[X_m] - DX_m[X_n]` with step `h`. Independent of the matrix route.
pub fn bracket_finite_difference(
    kind: HyperquadricKind,
    m: u8,
    n: u8,
    x: GbcNumber,
    p: &AlgebraParams,
    h: f64,
) -> Result<TangentVector> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {h}")));
    }
    let field = |idx: u8, at: GbcNumber| -> Result<GbcNumber> {
        GbcNumber::from_array(basis_field(kind, idx, at, p)?.components)
    };
    let derivative = |along: u8, of: u8| -> Result<GbcNumber> {
        let dir = field(along, x)?;
        let fwd = field(of, x + dir * h)?;
        let bwd = field(of, x - dir * h)?;
        Ok((fwd - bwd) * (0.5 / h))
    };
    let c = derivative(m, n)? - derivative(n, m)?;
    Ok(TangentVector {
        components: c.to_array(),
        base: x,
    })
}
