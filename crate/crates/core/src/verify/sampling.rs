use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GbcNumber;
use crate::hyperquadric::{Hyperquadric, HyperquadricKind, HyperquadricPoint};

pub type SuiteRng = ChaCha8Rng;

/// Smallest multiplier accepted when solving the constraint for one
/// coordinate.
const MIN_MULTIPLIER: f64 = 0.1;

/// Members must satisfy `|N| ≥ NORM_FLOOR · ‖x‖∞²`, keeping them away from
/// the null cone where the inverse blows up.
const NORM_FLOOR: f64 = 1e-3;

pub fn seeded(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_number(rng: &mut SuiteRng, half_width: f64) -> GbcNumber {
    GbcNumber::from_array(std::array::from_fn(|_| rng.random_range(-half_width..half_width))).expect("finite sample")
}

/// The two coordinate pairs of the constraint `w·c_a·c_b + v·c_c·c_d`.
fn constraint_pairs(kind: HyperquadricKind, alpha: f64, beta: f64) -> [(usize, usize, f64); 2] {
    match kind {
        HyperquadricKind::Ti => [(0, 2, 1.0), (1, 3, alpha)],
        HyperquadricKind::Tj => [(0, 1, 1.0), (2, 3, beta)],
        HyperquadricKind::Tij => [(0, 3, 1.0), (1, 2, -1.0)],
    }
}

/// Draws three coordinates uniformly from `[-half_width, half_width]` and
/// solves the constraint for the coordinate with the largest multiplier.
pub fn random_member(rng: &mut SuiteRng, quadric: &Hyperquadric, half_width: f64, tol_abs: f64) -> HyperquadricPoint {
    let p = quadric.params();
    let pairs = constraint_pairs(quadric.kind(), p.alpha(), p.beta());
    loop {
        let mut c = random_number(rng, half_width).to_array();
        // (coordinate to solve, its multiplier, the other pair's term)
        let candidates = pairs.iter().enumerate().flat_map(|(k, &(a, b, w))| {
            let (oa, ob, ow) = pairs[1 - k];
            let rest = ow * c[oa] * c[ob];
            [(a, w * c[b], rest), (b, w * c[a], rest)]
        });
        let Some((m, mult, rest)) = candidates.max_by(|x, y| x.1.abs().total_cmp(&y.1.abs())) else {
            continue;
        };
        if mult.abs() < MIN_MULTIPLIER {
            continue;
        }
        c[m] = -rest / mult;
        let Ok(x) = GbcNumber::from_array(c) else {
            continue;
        };
        let n = quadric.norm(x).abs();
        if n <= tol_abs || n < NORM_FLOOR * x.max_abs().powi(2) {
            continue;
        }
        if let Ok(point) = quadric.membership(x) {
            return point;
        }
    }
}

/// A member with `g(x, x) = 1`, by rescaling a positive-norm member.
pub fn random_unit_member(
    rng: &mut SuiteRng,
    quadric: &Hyperquadric,
    half_width: f64,
    tol_abs: f64,
) -> HyperquadricPoint {
    loop {
        let x = random_member(rng, quadric, half_width, tol_abs).value();
        let n = quadric.norm(x);
        if n <= 0.0 {
            continue;
        }
        if let Ok(point) = quadric.membership(x * (1.0 / n.sqrt())) {
            return point;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraParams;

    #[test]
    fn members_satisfy_generator_contract() {
        let mut rng = seeded(7);
        for (a, b) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (2.0, 3.0)] {
            let p = AlgebraParams::new(a, b).unwrap();
            for kind in HyperquadricKind::ALL {
                let q = Hyperquadric::new(kind, p, 1e-9).unwrap();
                for _ in 0..500 {
                    let x = random_member(&mut rng, &q, 2.0, 1e-12).value();
                    assert!(q.norm(x).abs() > 1e-12);
                    assert!(q.constraint_value(x).abs() <= 1e-12 * x.max_abs().powi(2).max(1.0));
                    let u = random_unit_member(&mut rng, &q, 2.0, 1e-12);
                    assert!(q.is_unit(&u, 1e-12));
                }
            }
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let q = Hyperquadric::new(HyperquadricKind::Tij, AlgebraParams::classical(), 1e-9).unwrap();
        let draw = |seed| {
            let mut rng = seeded(seed);
            (0..10)
                .map(|_| random_member(&mut rng, &q, 2.0, 1e-12).value())
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        assert_ne!(draw(3), draw(4));
    }
}
