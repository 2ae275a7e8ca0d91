//! Martinelli's pair-sum polynomial and the quadratic × cubic split of a
//! depressed quintic.
//!
//! For a monic quintic `x⁵ + Cx³ + Dx² + Ex + F` with roots `r₁…r₅`, the
//! pair-sum polynomial is the monic degree-10 polynomial whose roots are the
//! ten pairwise sums `rᵢ + rⱼ` (i < j). Any of its roots `k` determines a
//! candidate factorization `(x² − kx + n)(x³ + kx² + lx + m)`: `n` is the
//! product of the two roots summing to `k`, recovered rationally from the
//! coefficients, and `l`, `m` follow from matching the x³ and constant
//! terms. A split is accepted only when the factor product reproduces the
//! source quintic coefficientwise.

use crate::oracle::{self, OracleError};
use crate::poly::Polynomial;
use crate::scalar::{self, canonical_cmp};
use crate::tolerance::Tolerance;
use num_complex::Complex64;
use thiserror::Error;

/// Coefficients of the depressed monic quintic
/// `x⁵ + c3·x³ + c2·x² + c1·x + c0` (the x⁴ term is zero by construction;
/// depressing a general quintic is out of scope here).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuinticDepressed {
    pub c3: Complex64,
    pub c2: Complex64,
    pub c1: Complex64,
    pub c0: Complex64,
}

impl QuinticDepressed {
    pub fn new(c3: Complex64, c2: Complex64, c1: Complex64, c0: Complex64) -> Self {
        scalar::assert_all_finite(&[c3, c2, c1, c0], "quintic coefficient");
        QuinticDepressed { c3, c2, c1, c0 }
    }

    pub fn from_real(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        QuinticDepressed::new(
            Complex64::new(c3, 0.0),
            Complex64::new(c2, 0.0),
            Complex64::new(c1, 0.0),
            Complex64::new(c0, 0.0),
        )
    }

    pub fn to_polynomial(self) -> Polynomial {
        Polynomial::new(vec![
            self.c0,
            self.c1,
            self.c2,
            self.c3,
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
    }

    /// Max coefficient magnitude (≥ 1: the quintic is monic).
    pub fn scale(self) -> f64 {
        [self.c3, self.c2, self.c1, self.c0]
            .iter()
            .map(|c| c.norm())
            .fold(1.0, f64::max)
    }
}

/// One candidate split attempt inside [`split_quintic_auto`];
/// `residual` is `None` when the candidate failed before the product check.
#[derive(Clone, Copy, Debug)]
pub struct SplitAttempt {
    pub pair_sum: Complex64,
    pub residual: Option<f64>,
}

#[derive(Debug, Error)]
pub enum SplitError {
    #[error(
        "pair-sum denominator is degenerate at k = {k} (|5k³+Ck−D| = {magnitude:.3e} <= {threshold:.3e})"
    )]
    DegenerateDenominator {
        k: Complex64,
        magnitude: f64,
        threshold: f64,
    },
    #[error("pair product is degenerate at k = {k} (|n| = {magnitude:.3e} <= {threshold:.3e})")]
    DegeneratePairProduct {
        k: Complex64,
        magnitude: f64,
        threshold: f64,
    },
    #[error("factor product mismatch at k = {k}: normalized residual {residual:.3e}")]
    ProductMismatch { k: Complex64, residual: f64 },
    #[error(
        "no valid split among {n} candidate pair sums (best residual {best:.3e})",
        n = .attempts.len(),
        best = best_residual(.attempts)
    )]
    NoValidSplit { attempts: Vec<SplitAttempt> },
    #[error("pair-sum root finding failed: {0}")]
    Oracle(#[from] OracleError),
}

fn best_residual(attempts: &[SplitAttempt]) -> f64 {
    attempts
        .iter()
        .filter_map(|a| a.residual)
        .fold(f64::INFINITY, f64::min)
}

/// A verified `(x² − kx + n)(x³ + kx² + lx + m)` factorization.
#[derive(Clone, Debug)]
pub struct SplitFactors {
    /// `k`: sum of the two quintic roots carried by the quadratic factor.
    pub pair_sum: Complex64,
    /// `n`: product of those two roots; constant term of the quadratic.
    pub pair_product: Complex64,
    /// `x² − k·x + n`.
    pub quadratic: Polynomial,
    /// `x³ + k·x² + l·x + m`.
    pub cubic: Polynomial,
    /// Max coefficient deviation of `quadratic · cubic` from the source
    /// quintic, normalized by the quintic's scale.
    pub product_residual: f64,
}

impl SplitFactors {
    /// `l`: x-coefficient of the cubic factor.
    pub fn cubic_linear(&self) -> Complex64 {
        self.cubic.coeff(1)
    }

    /// `m`: constant term of the cubic factor.
    pub fn cubic_constant(&self) -> Complex64 {
        self.cubic.coeff(0)
    }
}

/// Scale-aware zero test for the denominators appearing in the split.
fn degeneracy_threshold(k: Complex64, q: QuinticDepressed) -> f64 {
    1e-12 * (1.0 + k.norm().powi(3)) * q.scale()
}

/// Product `n` of the two quintic roots whose sum is `k`, from the rational
/// identity `n = (2(k⁵ + Ck³ + Dk² + Ek) − F) / (5k³ + Ck − D)`. Only
/// meaningful when `k` is a pair-sum root; fails when the denominator is
/// degenerate (the caller should try another pair-sum root).
pub fn compute_n(k: Complex64, q: &QuinticDepressed) -> Result<Complex64, SplitError> {
    let (c, d, e, f) = (q.c3, q.c2, q.c1, q.c0);
    let k2 = k * k;
    let k3 = k2 * k;
    let denom = 5.0 * k3 + c * k - d;
    let threshold = degeneracy_threshold(k, *q);
    if denom.norm() <= threshold {
        return Err(SplitError::DegenerateDenominator {
            k,
            magnitude: denom.norm(),
            threshold,
        });
    }
    let numer = 2.0 * (k3 * k2 + c * k3 + d * k2 + e * k) - f;
    Ok(numer / denom)
}

/// The monic degree-10 pair-sum polynomial, fully expanded, ascending:
///
/// `k¹⁰ + 3C·k⁸ + D·k⁷ + (3C²−3E)k⁶ + (2DC−11F)k⁵ + (C³−D²−2CE)k⁴
///  + (DC²−4DE−4CF)k³ + (7DF−CD²−4E²+EC²)k² + (4EF−FC²−D³)k
///  + (−F²+FDC−D²E)`.
pub fn martinelli_coeffs(q: &QuinticDepressed) -> Polynomial {
    let (c, d, e, f) = (q.c3, q.c2, q.c1, q.c0);
    Polynomial::new(vec![
        -f * f + f * d * c - d * d * e,
        4.0 * e * f - f * c * c - d * d * d,
        7.0 * d * f - c * d * d - 4.0 * e * e + e * c * c,
        d * c * c - 4.0 * d * e - 4.0 * c * f,
        c * c * c - d * d - 2.0 * c * e,
        2.0 * d * c - 11.0 * f,
        3.0 * c * c - 3.0 * e,
        d,
        3.0 * c,
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ])
}

/// The pair-sum polynomial in its unexpanded rational-elimination form:
///
/// `(2(k⁵+Ck³+Dk²+Ek)−F)·(13k⁵+6Ck³−5Dk²+(C²−2E)k+F−DC)
///  − (k⁴+Ck²+Dk+E)·(5k³+Ck−D)²`.
///
/// Algebraically identical to evaluating [`martinelli_coeffs`]; kept as a
/// second route so the two can be checked against each other.
pub fn martinelli_rational_eval(k: Complex64, q: &QuinticDepressed) -> Complex64 {
    let (c, d, e, f) = (q.c3, q.c2, q.c1, q.c0);
    let k2 = k * k;
    let k3 = k2 * k;
    let k4 = k2 * k2;
    let k5 = k4 * k;
    let first = 2.0 * (k5 + c * k3 + d * k2 + e * k) - f;
    let second = 13.0 * k5 + 6.0 * c * k3 - 5.0 * d * k2 + (c * c - 2.0 * e) * k + f - d * c;
    let quartic = k4 + c * k2 + d * k + e;
    let denom = 5.0 * k3 + c * k - d;
    first * second - quartic * denom * denom
}

/// Split the quintic at the pair-sum root `k`: `n` from [`compute_n`],
/// `l = C − n + k²`, `m = F/n`. When both `n` and `F` are degenerate the
/// constant term is recovered from the x-coefficient identity
/// `E = n·l − k·m` instead, which keeps `F = 0` quintics splittable.
/// The factor product is verified against the source before returning.
pub fn split_quintic(
    q: &QuinticDepressed,
    k: Complex64,
    tol: Tolerance,
) -> Result<SplitFactors, SplitError> {
    let n = compute_n(k, q)?;
    let l = q.c3 - n + k * k;
    let threshold = degeneracy_threshold(k, *q);
    let m = if n.norm() > threshold {
        q.c0 / n
    } else if q.c0.norm() <= threshold {
        if k.norm() <= threshold {
            return Err(SplitError::DegeneratePairProduct {
                k,
                magnitude: n.norm(),
                threshold,
            });
        }
        (n * l - q.c1) / k
    } else {
        return Err(SplitError::DegeneratePairProduct {
            k,
            magnitude: n.norm(),
            threshold,
        });
    };

    let quadratic = Polynomial::new(vec![n, -k, Complex64::new(1.0, 0.0)]);
    let cubic = Polynomial::new(vec![m, l, k, Complex64::new(1.0, 0.0)]);
    let product = quadratic.multiply(&cubic);
    let source = q.to_polynomial();

    let scale = q.scale();
    let product_residual = (0..=5)
        .map(|j| (product.coeff(j) - source.coeff(j)).norm() / scale)
        .fold(0.0, f64::max);
    if !tol.poly_eq(&product, &source) {
        return Err(SplitError::ProductMismatch {
            k,
            residual: product_residual,
        });
    }

    Ok(SplitFactors {
        pair_sum: k,
        pair_product: n,
        quadratic,
        cubic,
        product_residual,
    })
}

/// Find all ten pair-sum roots numerically, attempt a split at each, and
/// return the lowest-residual valid one (ties broken by canonical ordering
/// of the pair sum, so results are deterministic). Any valid split is
/// acceptable; no particular pairing is promised.
pub fn split_quintic_auto(
    q: &QuinticDepressed,
    tol: Tolerance,
) -> Result<SplitFactors, SplitError> {
    let mart = martinelli_coeffs(q);
    // Ask for the tightest residual first; large pair sums raise the
    // evaluation noise floor, so relax in steps before giving up. The
    // factor-product verification below is what actually gates correctness.
    let mut outcome = Err(OracleError::NonConvergence {
        iterations: 0,
        residual_max: f64::INFINITY,
    });
    for tol_step in [1e-12, 1e-9, 1e-7] {
        outcome = oracle::find_roots(&mart, tol_step, 2000);
        match &outcome {
            Ok(_) | Err(OracleError::NonConvergence { .. }) => {}
            Err(_) => break,
        }
        if outcome.is_ok() {
            break;
        }
    }
    let roots = outcome?;

    let mut attempts = Vec::with_capacity(roots.roots.len());
    let mut best: Option<SplitFactors> = None;
    for &k in &roots.roots {
        match split_quintic(q, k, tol) {
            Ok(split) => {
                attempts.push(SplitAttempt {
                    pair_sum: k,
                    residual: Some(split.product_residual),
                });
                let better = match &best {
                    None => true,
                    Some(current) => match split
                        .product_residual
                        .total_cmp(&current.product_residual)
                    {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => {
                            canonical_cmp(&split.pair_sum, &current.pair_sum).is_lt()
                        }
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some(split);
                }
            }
            Err(SplitError::ProductMismatch { residual, .. }) => {
                attempts.push(SplitAttempt {
                    pair_sum: k,
                    residual: Some(residual),
                });
            }
            Err(_) => {
                attempts.push(SplitAttempt {
                    pair_sum: k,
                    residual: None,
                });
            }
        }
    }

    best.ok_or(SplitError::NoValidSplit { attempts })
}
