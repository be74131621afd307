//! Deviation measures shared by the checks.

use crate::algebra::GbcNumber;

pub fn max_abs_diff(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Max-abs difference divided by `max(1, scale)`. Pass the magnitude of the
/// terms that produced `a` and `b`, e.g. `‖x‖∞‖y‖∞` for a product.
pub fn relative_deviation(a: &GbcNumber, b: &GbcNumber, scale: f64) -> f64 {
    max_abs_diff(a.coeffs(), b.coeffs()) / scale.max(1.0)
}
