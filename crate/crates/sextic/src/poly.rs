//! Dense univariate polynomials over complex binary64 scalars.
//!
//! Coefficients are stored in ascending degree order: `coeffs[j]` multiplies
//! `x^j`. The zero polynomial is the empty coefficient sequence; trailing
//! exact zeros are trimmed at construction so `degree` is O(1) and
//! unambiguous.

use crate::scalar;
use num_complex::Complex64;
use std::ops::Mul;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Build from ascending-degree coefficients. Trailing exact zeros are
    /// trimmed; all parts must be finite.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        scalar::assert_all_finite(&coeffs, "polynomial coefficient");
        while coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial::new(vec![c])
    }

    /// Descending-degree convenience constructor (the order polynomials are
    /// usually written and fed to the CLI).
    pub fn from_descending(coeffs: &[Complex64]) -> Self {
        Polynomial::new(coeffs.iter().rev().copied().collect())
    }

    pub fn from_real_descending(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().rev().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Monic polynomial with the given roots, `∏ (x − rᵢ)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (j, &c) in coeffs.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= r * c;
            }
            coeffs = next;
        }
        Polynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `x^j`; zero beyond the stored degree.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Max coefficient magnitude; the normalizer for residuals.
    pub fn scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Evaluate the polynomial and its derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut deriv = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            deriv = deriv * z + acc;
            acc = acc * z + c;
        }
        (acc, deriv)
    }

    /// Coefficient convolution.
    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean long division: `self = q·quotient + remainder` with
    /// `degree(remainder) < degree(q)`.
    pub fn divide(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let dq = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.coeffs[dq];
        let Some(dp) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if dp < dq {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Complex64::new(0.0, 0.0); dp - dq + 1];
        for i in (dq..=dp).rev() {
            let factor = rem[i] / lead;
            quot[i - dq] = factor;
            rem[i] = Complex64::new(0.0, 0.0);
            for j in 0..dq {
                let delta = factor * divisor.coeffs[j];
                rem[i - dq + j] -= delta;
            }
        }
        rem.truncate(dq);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Scale by the reciprocal of the leading coefficient; the result's
    /// leading coefficient is exactly 1.
    pub fn monic_normalize(&self) -> Result<Polynomial, PolyError> {
        let lead = self.leading().ok_or(PolyError::ZeroPolynomial)?;
        if lead == Complex64::new(1.0, 0.0) {
            return Ok(self.clone());
        }
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().map(|&c| c / lead).collect();
        *coeffs.last_mut().expect("nonzero") = Complex64::new(1.0, 0.0);
        Ok(Polynomial::new(coeffs))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::Tolerance;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real_poly(descending: &[f64]) -> Polynomial {
        Polynomial::from_real_descending(descending)
    }

    #[test]
    fn eval_examples() {
        let p = real_poly(&[1.0, 0.0, 1.0]); // x² + 1
        assert_eq!(p.eval(c(0.0, 1.0)), c(0.0, 0.0));

        let p = real_poly(&[1.0, 0.0, 0.0, 2.0, 21.0, -18.0, 51.0]);
        assert_eq!(p.eval(c(0.0, 0.0)), c(51.0, 0.0));

        let p = real_poly(&[1.0, 0.0, -1.0, 1.0, -6.0, 2.0]);
        assert_eq!(p.eval(c(1.0, 0.0)), c(-3.0, 0.0));
    }

    #[test]
    fn multiply_examples() {
        let quad = real_poly(&[1.0, 0.0, 2.0]);
        let cubic = real_poly(&[1.0, 0.0, -3.0, 1.0]);
        let quintic = real_poly(&[1.0, 0.0, -1.0, 1.0, -6.0, 2.0]);
        assert_eq!(quad.multiply(&cubic), quintic);

        assert_eq!(quintic.multiply(&Polynomial::one()), quintic);

        let down = real_poly(&[1.0, -1.0]);
        let up = real_poly(&[1.0, 1.0]);
        assert_eq!(&down * &up, real_poly(&[1.0, 0.0, -1.0]));
    }

    #[test]
    fn divide_examples() {
        let quintic = real_poly(&[1.0, 0.0, -1.0, 1.0, -6.0, 2.0]);
        let quad = real_poly(&[1.0, 0.0, 2.0]);
        let (q, r) = quintic.divide(&quad).unwrap();
        assert_eq!(q, real_poly(&[1.0, 0.0, -3.0, 1.0]));
        assert!(r.is_zero());

        let (q, r) = quintic.divide(&quintic).unwrap();
        assert_eq!(q, Polynomial::one());
        assert!(r.is_zero());

        let cube = real_poly(&[1.0, 0.0, 0.0, 0.0]);
        let (q, r) = cube.divide(&real_poly(&[1.0, -1.0])).unwrap();
        assert_eq!(q, real_poly(&[1.0, 1.0, 1.0]));
        assert_eq!(r, Polynomial::one());

        assert_eq!(
            quintic.divide(&Polynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn monic_examples() {
        assert_eq!(
            real_poly(&[2.0, 0.0, 4.0]).monic_normalize().unwrap(),
            real_poly(&[1.0, 0.0, 2.0])
        );
        let already = real_poly(&[1.0, 0.0, -3.0, 1.0]);
        assert_eq!(already.monic_normalize().unwrap(), already);
        assert_eq!(
            real_poly(&[3.0, 0.0, 0.0, 6.0, 0.0, 0.0, 0.0])
                .monic_normalize()
                .unwrap(),
            real_poly(&[1.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0])
        );
        assert_eq!(
            Polynomial::zero().monic_normalize(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn zero_polynomial_representation() {
        let z = Polynomial::new(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z, Polynomial::zero());
        assert_eq!(z.scale(), 0.0);
        assert_eq!(z.coeff(3), c(0.0, 0.0));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn from_roots_expands_the_product() {
        let p = Polynomial::from_roots(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(p, real_poly(&[1.0, 0.0, -1.0]));
        assert_eq!(Polynomial::from_roots(&[]), Polynomial::one());
    }

    fn complex_in(mag: f64) -> impl Strategy<Value = Complex64> {
        (-mag..mag, -mag..mag).prop_map(|(re, im)| Complex64::new(re, im))
    }

    /// Degree is pinned by a leading coefficient bounded away from zero so
    /// the quotient stays well conditioned.
    fn poly_nonzero(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        (
            proptest::collection::vec(complex_in(7.0), 0..=max_deg),
            complex_in(7.0).prop_filter("solid leading coefficient", |z| z.norm() >= 0.5),
        )
            .prop_map(|(mut v, lead)| {
                v.push(lead);
                Polynomial::new(v)
            })
    }

    proptest! {
        #[test]
        fn multiply_then_divide_round_trips(p in poly_nonzero(6), q in poly_nonzero(6)) {
            let product = p.multiply(&q);
            let (quot, rem) = product.divide(&q).unwrap();
            let max_input = p.scale().max(q.scale());
            let rem_bound = 1e-10 * (1.0 + max_input);
            prop_assert!(rem.scale() <= rem_bound, "remainder scale {} > {}", rem.scale(), rem_bound);
            prop_assert!(Tolerance::COEFF.poly_eq(&quot, &p));
        }

        #[test]
        fn eval_is_multiplicative(p in poly_nonzero(6), q in poly_nonzero(6), z in complex_in(1.4)) {
            let lhs = p.multiply(&q).eval(z);
            let rhs = p.eval(z) * q.eval(z);
            // 1e-12 relative to the evaluation's magnitude scale
            // Σ|pᵢ||z|^i · Σ|qⱼ||z|^j, which bounds every intermediate.
            let sp: f64 = p.coeffs().iter().enumerate().map(|(i, c)| c.norm() * z.norm().powi(i as i32)).sum();
            let sq: f64 = q.coeffs().iter().enumerate().map(|(j, c)| c.norm() * z.norm().powi(j as i32)).sum();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + sp * sq));
        }

        #[test]
        fn monic_normalize_is_idempotent(p in poly_nonzero(6)) {
            let once = p.monic_normalize().unwrap();
            let twice = once.monic_normalize().unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
