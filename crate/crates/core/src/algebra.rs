//! Arithmetic in the generalized bicomplex algebra.
//!
//! Numbers are stored on the basis `{1, i, j, ij}` with `i² = -α`,
//! `j² = -β`, `(ij)² = αβ` and `ij = ji`. The product needs `(α, β)`, so it
//! lives on [`AlgebraParams`]; addition and real scaling do not and are
//! available directly on [`GbcNumber`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pivot threshold, relative to the matrix max-norm, below which a
/// representation matrix is declared singular.
pub const SINGULAR_PIVOT_RATIO: f64 = 1e-12;

/// The structure constants `(α, β)` of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlgebraParams {
    alpha: f64,
    beta: f64,
}

impl AlgebraParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha == 0.0 || beta == 0.0 {
            return Err(Error::InvalidParams { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    /// The classical bicomplex numbers, `α = β = 1`.
    pub fn classical() -> Self {
        Self { alpha: 1.0, beta: 1.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Generalized bicomplex product. Symmetric in its arguments term by
    /// term, so `multiply(x, y) == multiply(y, x)` holds bit for bit.
    pub fn multiply(&self, x: GbcNumber, y: GbcNumber) -> GbcNumber {
        let (a, b) = (self.alpha, self.beta);
        let [x1, x2, x3, x4] = x.c;
        let [y1, y2, y3, y4] = y.c;
        GbcNumber {
            c: [
                x1 * y1 - a * (x2 * y2) - b * (x3 * y3) + a * b * (x4 * y4),
                (x1 * y2 + x2 * y1) - b * (x3 * y4 + x4 * y3),
                (x1 * y3 + x3 * y1) - a * (x2 * y4 + x4 * y2),
                x1 * y4 + x4 * y1 + (x2 * y3 + x3 * y2),
            ],
        }
    }

    pub fn checked_multiply(&self, x: GbcNumber, y: GbcNumber) -> Result<GbcNumber> {
        self.multiply(x, y).validated("product")
    }

    /// Scalar part and the single surviving imaginary coefficient of
    /// `x · x^k`.
    pub fn norm_form(&self, x: GbcNumber, kind: ConjugationKind) -> NormForm {
        let (a, b) = (self.alpha, self.beta);
        let [x1, x2, x3, x4] = x.c;
        let (scalar, residual) = match kind {
            ConjugationKind::Ti => (
                x1 * x1 + a * (x2 * x2) - b * (x3 * x3) - a * b * (x4 * x4),
                2.0 * (x1 * x3 + a * (x2 * x4)),
            ),
            ConjugationKind::Tj => (
                x1 * x1 - a * (x2 * x2) + b * (x3 * x3) - a * b * (x4 * x4),
                2.0 * (x1 * x2 + b * (x3 * x4)),
            ),
            ConjugationKind::Tij => (
                x1 * x1 + a * (x2 * x2) + b * (x3 * x3) + a * b * (x4 * x4),
                2.0 * (x1 * x4 - x2 * x3),
            ),
        };
        NormForm { scalar, residual }
    }

    /// Left-multiplication matrix of `x`; column `m` is `x` times the
    /// `m`-th basis unit.
    pub fn rep_matrix(&self, x: GbcNumber) -> RepMatrix {
        let (a, b) = (self.alpha, self.beta);
        let [x1, x2, x3, x4] = x.c;
        RepMatrix {
            entries: [
                [x1, -a * x2, -b * x3, a * b * x4],
                [x2, x1, -b * x4, -b * x3],
                [x3, -a * x4, x1, -a * x2],
                [x4, x3, x2, x1],
            ],
        }
    }

    /// Multiplicative inverse from a pivoted solve of `rep_matrix(x) v = e₁`.
    pub fn inverse(&self, x: GbcNumber) -> Result<GbcNumber> {
        let m = self.rep_matrix(x);
        let v = m.solve([1.0, 0.0, 0.0, 0.0]).ok_or(Error::NotInvertible)?;
        GbcNumber::from_array(v)
    }
}

impl Default for AlgebraParams {
    fn default() -> Self {
        Self::classical()
    }
}

/// A generalized bicomplex number `c1 + c2 i + c3 j + c4 ij`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct GbcNumber {
    c: [f64; 4],
}

impl GbcNumber {
    pub const ZERO: Self = Self { c: [0.0; 4] };
    pub const ONE: Self = Self::unit(0);
    pub const I: Self = Self::unit(1);
    pub const J: Self = Self::unit(2);
    pub const IJ: Self = Self::unit(3);

    pub fn new(c1: f64, c2: f64, c3: f64, c4: f64) -> Result<Self> {
        Self::from_array([c1, c2, c3, c4])
    }

    pub fn from_array(c: [f64; 4]) -> Result<Self> {
        Self { c }.validated("coefficients")
    }

    /// The basis unit with index `m` in `0..4`, ordered `1, i, j, ij`.
    pub const fn unit(m: usize) -> Self {
        let mut c = [0.0; 4];
        c[m] = 1.0;
        Self { c }
    }

    pub fn c1(&self) -> f64 {
        self.c[0]
    }

    pub fn c2(&self) -> f64 {
        self.c[1]
    }

    pub fn c3(&self) -> f64 {
        self.c[2]
    }

    pub fn c4(&self) -> f64 {
        self.c[3]
    }

    pub fn to_array(self) -> [f64; 4] {
        self.c
    }

    pub fn coeffs(&self) -> &[f64; 4] {
        &self.c
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        (self + other).validated("sum")
    }

    pub fn checked_scale(self, lambda: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::NonFinite("scale factor"));
        }
        (self * lambda).validated("scaled number")
    }

    pub fn conjugate(self, kind: ConjugationKind) -> Self {
        let [c1, c2, c3, c4] = self.c;
        let c = match kind {
            ConjugationKind::Ti => [c1, -c2, c3, -c4],
            ConjugationKind::Tj => [c1, c2, -c3, -c4],
            ConjugationKind::Tij => [c1, -c2, -c3, c4],
        };
        Self { c }
    }

    pub(crate) fn from_array_unchecked(c: [f64; 4]) -> Self {
        Self { c }
    }

    fn validated(self, what: &'static str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(what))
        }
    }
}

impl TryFrom<[f64; 4]> for GbcNumber {
    type Error = Error;

    fn try_from(c: [f64; 4]) -> Result<Self> {
        Self::from_array(c)
    }
}

impl From<GbcNumber> for [f64; 4] {
    fn from(x: GbcNumber) -> Self {
        x.c
    }
}

impl fmt::Display for GbcNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c1, c2, c3, c4] = self.c;
        write!(f, "{c1} + {c2}i + {c3}j + {c4}ij")
    }
}

// Unchecked componentwise arithmetic. Overflow can leave the finite
// invariant; use the `checked_*` variants at API boundaries.

impl Add for GbcNumber {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            c: std::array::from_fn(|m| self.c[m] + rhs.c[m]),
        }
    }
}

impl Sub for GbcNumber {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self {
            c: std::array::from_fn(|m| self.c[m] - rhs.c[m]),
        }
    }
}

impl Neg for GbcNumber {
    type Output = Self;

    fn neg(self) -> Self {
        Self { c: self.c.map(|v| -v) }
    }
}

impl Mul<f64> for GbcNumber {
    type Output = Self;

    fn mul(self, lambda: f64) -> Self {
        Self {
            c: self.c.map(|v| lambda * v),
        }
    }
}

impl Mul<GbcNumber> for f64 {
    type Output = GbcNumber;

    fn mul(self, x: GbcNumber) -> GbcNumber {
        x * self
    }
}

/// Which imaginary units a conjugation negates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjugationKind {
    /// `i ↦ -i`, `j ↦ j`.
    Ti,
    /// `i ↦ i`, `j ↦ -j`.
    Tj,
    /// `i ↦ -i`, `j ↦ -j`.
    Tij,
}

impl ConjugationKind {
    pub const ALL: [Self; 3] = [Self::Ti, Self::Tj, Self::Tij];
}

impl fmt::Display for ConjugationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Ti => "ti",
            Self::Tj => "tj",
            Self::Tij => "tij",
        })
    }
}

/// `x · x^k` reduced to its real part and the one imaginary coefficient
/// that does not cancel (`j` for `Ti`, `i` for `Tj`, `ij` for `Tij`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormForm {
    pub scalar: f64,
    pub residual: f64,
}

/// 4×4 matrix of a number's left-multiplication map, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepMatrix {
    pub entries: [[f64; 4]; 4],
}

impl RepMatrix {
    pub fn identity() -> Self {
        Self {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| if r == c { 1.0 } else { 0.0 })),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        Self {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| (0..4).map(|k| a[r][k] * b[k][c]).sum())),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c] + other.entries[r][c])),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c] - other.entries[r][c])),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        std::array::from_fn(|r| (0..4).map(|k| self.entries[r][k] * v[k]).sum())
    }

    pub fn column(&self, c: usize) -> [f64; 4] {
        std::array::from_fn(|r| self.entries[r][c])
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|&v| v == 0.0)
    }

    /// Gaussian elimination with partial pivoting. `None` when a pivot
    /// falls below [`SINGULAR_PIVOT_RATIO`] times the max-norm.
    pub fn solve(&self, rhs: [f64; 4]) -> Option<[f64; 4]> {
        let scale = self.max_abs();
        if scale == 0.0 {
            return None;
        }
        let threshold = SINGULAR_PIVOT_RATIO * scale;
        let mut a = self.entries;
        let mut b = rhs;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs()))
                .unwrap_or(col);
            if a[pivot][col].abs() < threshold {
                return None;
            }
            a.swap(col, pivot);
            b.swap(col, pivot);
            for row in col + 1..4 {
                let factor = a[row][col] / a[col][col];
                let upper = a[col];
                for (dst, src) in a[row][col..].iter_mut().zip(&upper[col..]) {
                    *dst -= factor * src;
                }
                b[row] -= factor * b[col];
            }
        }
        let mut x = [0.0; 4];
        for row in (0..4).rev() {
            let tail: f64 = (row + 1..4).map(|k| a[row][k] * x[k]).sum();
            x[row] = (b[row] - tail) / a[row][row];
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(c: [f64; 4]) -> GbcNumber {
        GbcNumber::from_array(c).unwrap()
    }

    #[test]
    fn rejects_zero_and_non_finite_params() {
        assert!(AlgebraParams::new(0.0, 1.0).is_err());
        assert!(AlgebraParams::new(1.0, 0.0).is_err());
        assert!(AlgebraParams::new(f64::NAN, 1.0).is_err());
        assert!(AlgebraParams::new(1.0, f64::INFINITY).is_err());
        assert!(AlgebraParams::new(-4.0, 0.5).is_ok());
    }

    #[test]
    fn rejects_non_finite_coefficients() {
        assert!(GbcNumber::new(1.0, f64::NAN, 0.0, 0.0).is_err());
        assert!(GbcNumber::new(f64::INFINITY, 0.0, 0.0, 0.0).is_err());
        let big = num([f64::MAX, 0.0, 0.0, 0.0]);
        assert!(big.checked_add(big).is_err());
        assert!(big.checked_scale(2.0).is_err());
        assert!(big.checked_scale(f64::NAN).is_err());
    }

    #[test]
    fn addition_and_scaling() {
        let x = num([1.0, 2.0, 3.0, 4.0]);
        assert_eq!(x.checked_add(GbcNumber::ZERO).unwrap(), x);
        assert_eq!(x + num([4.0, 3.0, 2.0, 1.0]), num([5.0; 4]));
        assert_eq!(x + (-1.0) * x, GbcNumber::ZERO);
        assert_eq!(x.checked_scale(1.0).unwrap(), x);
        assert_eq!(x * 0.0, GbcNumber::ZERO);
        assert_eq!(2.0 * num([1.0, -1.0, 0.0, 3.0]), num([2.0, -2.0, 0.0, 6.0]));
    }

    #[test]
    fn unit_squares() {
        let p = AlgebraParams::new(2.0, 3.0).unwrap();
        assert_eq!(p.multiply(GbcNumber::I, GbcNumber::I), num([-2.0, 0.0, 0.0, 0.0]));
        assert_eq!(p.multiply(GbcNumber::J, GbcNumber::J), num([-3.0, 0.0, 0.0, 0.0]));
        assert_eq!(p.multiply(GbcNumber::IJ, GbcNumber::IJ), num([6.0, 0.0, 0.0, 0.0]));
        assert_eq!(p.multiply(GbcNumber::I, GbcNumber::J), GbcNumber::IJ);
        let x = num([0.3, -1.2, 7.0, 2.5]);
        assert_eq!(p.multiply(GbcNumber::ONE, x), x);
    }

    #[test]
    fn conjugation_sign_patterns() {
        let x = num([1.0, 2.0, 3.0, 4.0]);
        assert_eq!(x.conjugate(ConjugationKind::Ti), num([1.0, -2.0, 3.0, -4.0]));
        assert_eq!(x.conjugate(ConjugationKind::Tj), num([1.0, 2.0, -3.0, -4.0]));
        assert_eq!(x.conjugate(ConjugationKind::Tij), num([1.0, -2.0, -3.0, 4.0]));
        for k in ConjugationKind::ALL {
            assert_eq!(x.conjugate(k).conjugate(k), x);
            assert_eq!(GbcNumber::ONE.conjugate(k), GbcNumber::ONE);
        }
    }

    #[test]
    fn norm_form_examples() {
        let p = AlgebraParams::classical();
        let n = p.norm_form(num([1.0, 2.0, 3.0, 4.0]), ConjugationKind::Tij);
        assert_eq!((n.scalar, n.residual), (30.0, -4.0));
        let n = p.norm_form(num([1.0, 0.0, 0.0, 5.0]), ConjugationKind::Ti);
        assert_eq!((n.scalar, n.residual), (-24.0, 0.0));
        for k in ConjugationKind::ALL {
            let n = p.norm_form(GbcNumber::ONE, k);
            assert_eq!((n.scalar, n.residual), (1.0, 0.0));
        }
    }

    #[test]
    fn rep_matrix_of_one_is_identity() {
        let p = AlgebraParams::new(-1.0, 0.5).unwrap();
        assert_eq!(p.rep_matrix(GbcNumber::ONE), RepMatrix::identity());
        let m = p.rep_matrix(num([1.0, 2.0, 3.0, 4.0]));
        assert_eq!(m.entries[0][1], -p.alpha() * 2.0);
        assert_eq!(m.entries[0][3], p.alpha() * p.beta() * 4.0);
    }

    #[test]
    fn inverse_of_unit_and_zero_divisor() {
        let p = AlgebraParams::classical();
        assert_eq!(p.inverse(GbcNumber::ONE).unwrap(), GbcNumber::ONE);
        // 1 + ij is annihilated by 1 - ij when (ij)² = 1.
        assert!(matches!(
            p.inverse(num([1.0, 0.0, 0.0, 1.0])),
            Err(Error::NotInvertible)
        ));
        assert!(matches!(p.inverse(GbcNumber::ZERO), Err(Error::NotInvertible)));
        // 1 + j has zero Ti-norm but is still invertible: (1 + j)(1 - j) = 2.
        let inv = p.inverse(num([1.0, 0.0, 1.0, 0.0])).unwrap();
        let expect = [0.5, 0.0, -0.5, 0.0];
        for (a, b) in inv.to_array().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn serde_rejects_non_finite() {
        let x: GbcNumber = serde_json::from_str("[1.0, 2.0, 3.0, 4.0]").unwrap();
        assert_eq!(x, num([1.0, 2.0, 3.0, 4.0]));
        assert_eq!(serde_json::to_string(&x).unwrap(), "[1.0,2.0,3.0,4.0]");
    }
}
