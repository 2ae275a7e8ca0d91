//! Mixed absolute/relative comparison used for every coefficient check.
//!
//! Two scalars agree when `|x − y| ≤ atol + rtol·max(|x|, |y|)`. The same
//! pair of knobs drives polynomial comparison, recovery verification and the
//! residual acceptance gate, so a caller that loosens `rtol` loosens the
//! whole pipeline consistently.

use crate::poly::Polynomial;
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rtol: f64,
    pub atol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::COEFF
    }
}

impl Tolerance {
    /// Default for coefficient-level comparisons.
    pub const COEFF: Tolerance = Tolerance {
        rtol: 1e-9,
        atol: 1e-10,
    };

    /// Default for sextic parameter recovery; recovery is exact algebra, the
    /// slack only absorbs floating-point error.
    pub const RECOVERY: Tolerance = Tolerance {
        rtol: 1e-8,
        atol: 1e-10,
    };

    pub fn new(rtol: f64, atol: f64) -> Self {
        assert!(rtol > 0.0 && atol > 0.0, "tolerances must be positive");
        Tolerance { rtol, atol }
    }

    /// Allowed deviation for a pair of magnitudes.
    pub fn bound(self, x: f64, y: f64) -> f64 {
        self.atol + self.rtol * x.max(y)
    }

    pub fn eq_f64(self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.bound(x.abs(), y.abs())
    }

    pub fn eq_complex(self, x: Complex64, y: Complex64) -> bool {
        (x - y).norm() <= self.bound(x.norm(), y.norm())
    }

    /// Deviation of `x` from `y` expressed in units of the allowed bound;
    /// values ≤ 1 pass. Used to rank competing candidates.
    pub fn margin(self, x: Complex64, y: Complex64) -> f64 {
        (x - y).norm() / self.bound(x.norm(), y.norm())
    }

    /// Coefficientwise comparison, degrees aligned (missing high-order
    /// coefficients compare as zero).
    pub fn poly_eq(self, p: &Polynomial, q: &Polynomial) -> bool {
        let len = p.coeffs().len().max(q.coeffs().len());
        (0..len).all(|j| self.eq_complex(p.coeff(j), q.coeff(j)))
    }

    /// Normalized-residual acceptance limit: residuals are already scale
    /// free, so the limit is the plain sum of the two knobs.
    pub fn residual_limit(self) -> f64 {
        self.atol + self.rtol
    }
}
