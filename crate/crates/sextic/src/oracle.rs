//! Independent numerical root finder used to cross-check every closed-form
//! result.
//!
//! The finder runs Aberth–Ehrlich simultaneous iteration with a fixed,
//! RNG-free initialization: guesses sit on a circle of radius
//! `1 + max|coefficient|` with an irrational angular offset so no guess
//! lands on a symmetry axis. Runs are therefore bit-reproducible for a
//! given input.
//!
//! Multiple or tightly clustered roots converge slowly and with reduced
//! accuracy; the residual in [`RootSet::residual_max`] is the honest
//! correctness measure and no further polishing is attempted.

use crate::poly::Polynomial;
use crate::scalar;
use num_complex::Complex64;
use thiserror::Error;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: u32 = 1000;

/// Angular offset (radians) for the initial guesses; √2 − 1 keeps the
/// starting set off the real and imaginary axes.
const ANGLE_OFFSET: f64 = std::f64::consts::SQRT_2 - 1.0;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("root finding needs degree >= 1")]
    InvalidDegree,
    #[error("no convergence after {iterations} iterations (residual {residual_max:.3e})")]
    NonConvergence { iterations: u32, residual_max: f64 },
    #[error("root multisets have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
}

/// All roots of a polynomial, multiplicity counted, in canonical order,
/// together with the worst scale-normalized residual `|p(root)| / scale(p)`.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residual_max: f64,
}

/// Find all `degree(p)` roots by Aberth–Ehrlich iteration. Deterministic:
/// fixed initialization, no randomness. Fails with
/// [`OracleError::NonConvergence`] when the normalized residual cannot
/// reach `tol`, either because `max_iter` sweeps ran out or because the
/// corrections hit machine precision first (large roots put an evaluation
/// noise floor under the residual; more sweeps cannot pass below it).
pub fn find_roots(p: &Polynomial, tol: f64, max_iter: u32) -> Result<RootSet, OracleError> {
    let monic = p.monic_normalize().map_err(|_| OracleError::InvalidDegree)?;
    let degree = monic.degree().expect("nonzero");
    if degree < 1 {
        return Err(OracleError::InvalidDegree);
    }
    let scale = monic.scale();

    let radius = 1.0 + scale;
    let step = std::f64::consts::TAU / degree as f64;
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|i| Complex64::from_polar(radius, step * i as f64 + ANGLE_OFFSET))
        .collect();

    let mut iterations = 0;
    loop {
        let residual_max = roots
            .iter()
            .map(|&z| monic.eval(z).norm() / scale)
            .fold(0.0, f64::max);
        if residual_max <= tol {
            scalar::sort_canonical(&mut roots);
            return Ok(RootSet { roots, residual_max });
        }
        if iterations == max_iter {
            return Err(OracleError::NonConvergence {
                iterations,
                residual_max,
            });
        }

        // One Aberth sweep; updated positions are used immediately.
        let mut max_relative_step: f64 = 0.0;
        for i in 0..degree {
            let z = roots[i];
            let (value, slope) = monic.eval_with_derivative(z);
            if value.norm() == 0.0 {
                continue;
            }
            let newton = if slope.norm() > 0.0 {
                value / slope
            } else {
                // Stationary point: fall back to a fixed fractional shift.
                z * 1e-3 + Complex64::new(1e-3, 1e-3)
            };
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| {
                    let gap = z - roots[j];
                    if gap.norm() > 0.0 {
                        gap.inv()
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let correction = if denom.norm() > 0.0 {
                newton / denom
            } else {
                newton
            };
            let candidate = z - correction;
            if scalar::is_finite(candidate) {
                roots[i] = candidate;
                max_relative_step =
                    max_relative_step.max(correction.norm() / (1.0 + candidate.norm()));
            }
        }
        iterations += 1;

        if max_relative_step <= 1e-16 {
            // Stagnated at machine precision without meeting `tol`.
            let residual_max = roots
                .iter()
                .map(|&z| monic.eval(z).norm() / scale)
                .fold(0.0, f64::max);
            if residual_max <= tol {
                scalar::sort_canonical(&mut roots);
                return Ok(RootSet { roots, residual_max });
            }
            return Err(OracleError::NonConvergence {
                iterations,
                residual_max,
            });
        }
    }
}

pub fn find_roots_default(p: &Polynomial) -> Result<RootSet, OracleError> {
    find_roots(p, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// True when the two multisets can be perfectly paired within `tol`.
///
/// First tries the cheap pass: canonical sort on both sides and index-wise
/// comparison. If that fails, falls back to exact bipartite matching on the
/// "within tol" graph so reordered clusters still pair up.
pub fn multiset_match(a: &[Complex64], b: &[Complex64], tol: f64) -> Result<bool, OracleError> {
    if a.len() != b.len() {
        return Err(OracleError::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    scalar::sort_canonical(&mut sa);
    scalar::sort_canonical(&mut sb);
    if sa.iter().zip(&sb).all(|(x, y)| (x - y).norm() <= tol) {
        return Ok(true);
    }
    Ok(perfect_matching_exists(&sa, &sb, tol))
}

/// Kuhn's augmenting-path matching; sizes here are tiny (≤ 10).
fn perfect_matching_exists(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    let n = a.len();
    let adjacency: Vec<Vec<usize>> = a
        .iter()
        .map(|x| {
            b.iter()
                .enumerate()
                .filter(|(_, y)| (x - *y).norm() <= tol)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    let mut matched_to: Vec<Option<usize>> = vec![None; n];
    fn try_assign(
        i: usize,
        adjacency: &[Vec<usize>],
        visited: &mut [bool],
        matched_to: &mut [Option<usize>],
    ) -> bool {
        for &j in &adjacency[i] {
            if !visited[j] {
                visited[j] = true;
                if matched_to[j].is_none()
                    || try_assign(matched_to[j].unwrap(), adjacency, visited, matched_to)
                {
                    matched_to[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }

    (0..n).all(|i| {
        let mut visited = vec![false; n];
        try_assign(i, &adjacency, &mut visited, &mut matched_to)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(actual: Complex64, expected: Complex64, tol: f64) {
        assert!(
            (actual - expected).norm() <= tol,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn unit_circle_pair() {
        let set = find_roots_default(&Polynomial::from_real_descending(&[1.0, 0.0, 1.0])).unwrap();
        assert_eq!(set.roots.len(), 2);
        assert_close(set.roots[0], c(0.0, -1.0), 1e-9);
        assert_close(set.roots[1], c(0.0, 1.0), 1e-9);
        assert!(set.residual_max <= DEFAULT_TOL);
    }

    #[test]
    fn casus_irreducibilis_cubic() {
        // x³ − 3x + 1: three real roots, 2cos(2π/9), 2cos(4π/9), −2cos(π/9).
        let set =
            find_roots_default(&Polynomial::from_real_descending(&[1.0, 0.0, -3.0, 1.0])).unwrap();
        assert_close(set.roots[0], c(-1.8793852415718169, 0.0), 1e-8);
        assert_close(set.roots[1], c(0.34729635533386083, 0.0), 1e-8);
        assert_close(set.roots[2], c(1.532088886237956, 0.0), 1e-8);
    }

    #[test]
    fn quintic_with_axis_roots() {
        let set = find_roots_default(&Polynomial::from_real_descending(&[
            1.0, 0.0, 0.0, 0.0, -1.0, 0.0,
        ]))
        .unwrap();
        let expected = [c(-1.0, 0.0), c(0.0, -1.0), c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)];
        for (root, want) in set.roots.iter().zip(expected) {
            assert_close(*root, want, 1e-9);
        }
    }

    #[test]
    fn non_monic_input_is_normalized() {
        let set =
            find_roots_default(&Polynomial::from_real_descending(&[3.0, 0.0, 3.0])).unwrap();
        assert_close(set.roots[0], c(0.0, -1.0), 1e-9);
        assert_close(set.roots[1], c(0.0, 1.0), 1e-9);
    }

    #[test]
    fn reports_non_convergence() {
        let err = find_roots(
            &Polynomial::from_real_descending(&[1.0, 0.0, 1.0]),
            1e-10,
            1,
        )
        .unwrap_err();
        assert!(matches!(err, OracleError::NonConvergence { .. }));
    }

    #[test]
    fn rejects_constants() {
        assert!(matches!(
            find_roots_default(&Polynomial::one()),
            Err(OracleError::InvalidDegree)
        ));
        assert!(matches!(
            find_roots_default(&Polynomial::zero()),
            Err(OracleError::InvalidDegree)
        ));
    }

    #[test]
    fn multiset_match_is_order_independent() {
        let a = [c(0.0, 1.0), c(0.0, -1.0)];
        let b = [c(0.0, -1.0), c(0.0, 1.0)];
        assert!(multiset_match(&a, &b, 1e-9).unwrap());
    }

    #[test]
    fn multiset_match_respects_tolerance() {
        assert!(!multiset_match(&[c(0.0, 0.0)], &[c(1e-3, 0.0)], 1e-9).unwrap());
        assert!(multiset_match(&[c(0.0, 0.0)], &[c(1e-3, 0.0)], 1e-2).unwrap());
    }

    #[test]
    fn multiset_match_size_mismatch() {
        let err = multiset_match(&[c(0.0, 0.0)], &[], 1e-9).unwrap_err();
        assert_eq!(err, OracleError::SizeMismatch { left: 1, right: 0 });
    }

    #[test]
    fn matching_falls_back_when_greedy_pairing_fails() {
        // Canonical sort pairs (0, ε) with (−ε, 0)-style shifts incorrectly;
        // the bipartite fallback must still find the valid pairing.
        let a = [c(0.0, 0.0), c(1e-7, 1.0)];
        let b = [c(1e-7, 0.0), c(0.0, 1.0)];
        assert!(multiset_match(&a, &b, 5e-7).unwrap());
    }

    #[test]
    fn repeated_root_converges_via_residual() {
        // x⁵: a multiplicity-5 root at 0 converges linearly but the
        // residual criterion still closes.
        let set = find_roots_default(&Polynomial::from_real_descending(&[
            1.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        ]))
        .unwrap();
        assert!(set.residual_max <= DEFAULT_TOL);
        for root in &set.roots {
            assert!(root.norm() <= 0.2, "cluster should hug the origin");
        }
    }
}
