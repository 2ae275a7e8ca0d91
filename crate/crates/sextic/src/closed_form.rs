//! Closed-form solvers for monic quadratics and cubics over ℂ.
//!
//! These are the two halves of the sextic root composition: the six sextic
//! roots are pairwise sums of one quadratic root and one cubic root. Complex
//! arithmetic makes both formulas total; there are no real-only code paths.

use crate::poly::Polynomial;
use crate::scalar;
use num_complex::Complex64;

/// `x² + linear·x + constant`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticMonic {
    pub linear: Complex64,
    pub constant: Complex64,
}

/// `x³ + quadratic·x² + linear·x + constant`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicMonic {
    pub quadratic: Complex64,
    pub linear: Complex64,
    pub constant: Complex64,
}

impl QuadraticMonic {
    pub fn new(linear: Complex64, constant: Complex64) -> Self {
        scalar::assert_all_finite(&[linear, constant], "quadratic coefficient");
        QuadraticMonic { linear, constant }
    }

    pub fn to_polynomial(self) -> Polynomial {
        Polynomial::new(vec![self.constant, self.linear, Complex64::new(1.0, 0.0)])
    }
}

impl CubicMonic {
    pub fn new(quadratic: Complex64, linear: Complex64, constant: Complex64) -> Self {
        scalar::assert_all_finite(&[quadratic, linear, constant], "cubic coefficient");
        CubicMonic {
            quadratic,
            linear,
            constant,
        }
    }

    pub fn to_polynomial(self) -> Polynomial {
        Polynomial::new(vec![
            self.constant,
            self.linear,
            self.quadratic,
            Complex64::new(1.0, 0.0),
        ])
    }
}

/// Both roots of `x² + b·x + c`.
///
/// The larger-magnitude root comes from the quadratic formula with the
/// square-root branch chosen to avoid cancellation; the other root is
/// recovered from the product so the pair stays consistent with Vieta.
pub fn solve_quadratic(q: QuadraticMonic) -> [Complex64; 2] {
    let b = q.linear;
    let c = q.constant;
    let mut s = (b * b - 4.0 * c).sqrt();
    // Align s with b so b + s never cancels.
    if (b.conj() * s).re < 0.0 {
        s = -s;
    }
    let big = -(b + s) / 2.0;
    let small = if big.norm() == 0.0 { -b } else { c / big };
    [big, small]
}

/// All three roots of `x³ + a·x² + b·x + c`, by Cardano's method.
///
/// The cubic is depressed with `x = t − a/3`; the two cube-root radicands
/// come from the quadratic in the discriminant, `u` is the principal cube
/// root of the better-conditioned radicand and `v` is forced by the pairing
/// constraint `u·v = −p/3`, which fixes the branch deterministically.
pub fn solve_cubic(cubic: CubicMonic) -> [Complex64; 3] {
    let a = cubic.quadratic;
    let b = cubic.linear;
    let c = cubic.constant;

    let shift = -a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    let half_q = q / 2.0;
    let mut s = (half_q * half_q + p * p * p / 27.0).sqrt();
    if ((-half_q).conj() * s).re < 0.0 {
        s = -s;
    }
    let radicand = -half_q + s;
    let u = radicand.cbrt();
    let v = if u.norm() == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        -p / (3.0 * u)
    };

    let omega = Complex64::new(-0.5, 0.75f64.sqrt());
    let omega2 = omega * omega;
    [
        u + v + shift,
        omega * u + omega2 * v + shift,
        omega2 * u + omega * v + shift,
    ]
}
