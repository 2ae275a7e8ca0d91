//! The sextic-facing layer: the Milanez coefficient relation.
//!
//! A monic sextic satisfying the relation is, seen through its quintic
//! resolvent `(x² − ax + b)(x³ + ax² + cx + d)`, solvable in closed form:
//! its six roots are exactly the pairwise sums of the two quadratic-factor
//! roots with the three cubic-factor roots. [`forward`] maps parameters
//! `(a, b, c, d)` to the sextic's coefficients, [`recover`] inverts that map
//! (or classifies the sextic as not solvable this way), and [`solve_sextic`]
//! composes the closed-form factor roots into the six sextic roots with an
//! end-to-end residual check against the original input.

use crate::closed_form::{self, CubicMonic, QuadraticMonic};
use crate::martinelli::QuinticDepressed;
use crate::poly::Polynomial;
use crate::scalar::{self, canonical_cmp, sort_canonical};
use crate::tolerance::Tolerance;
use num_complex::Complex64;
use thiserror::Error;

/// Factor parameters of the resolvent `(x² − ax + b)(x³ + ax² + cx + d)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MilanezParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MilanezParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        scalar::assert_all_finite(&[a, b, c, d], "factor parameter");
        MilanezParams { a, b, c, d }
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        MilanezParams::new(
            Complex64::new(a, 0.0),
            Complex64::new(b, 0.0),
            Complex64::new(c, 0.0),
            Complex64::new(d, 0.0),
        )
    }

    /// The quadratic factor `x² − ax + b` of the resolvent.
    pub fn quadratic_factor(self) -> QuadraticMonic {
        QuadraticMonic::new(-self.a, self.b)
    }

    /// The cubic factor `x³ + ax² + cx + d` of the resolvent.
    pub fn cubic_factor(self) -> CubicMonic {
        CubicMonic::new(self.a, self.c, self.d)
    }
}

/// A monic sextic `x⁶ + p1·x⁵ + p2·x⁴ + p3·x³ + p4·x² + p5·x + p6`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SexticMonic {
    pub p1: Complex64,
    pub p2: Complex64,
    pub p3: Complex64,
    pub p4: Complex64,
    pub p5: Complex64,
    pub p6: Complex64,
}

impl SexticMonic {
    pub fn new(
        p1: Complex64,
        p2: Complex64,
        p3: Complex64,
        p4: Complex64,
        p5: Complex64,
        p6: Complex64,
    ) -> Self {
        scalar::assert_all_finite(&[p1, p2, p3, p4, p5, p6], "sextic coefficient");
        SexticMonic { p1, p2, p3, p4, p5, p6 }
    }

    pub fn from_real_descending(coeffs: [f64; 6]) -> Self {
        let [p1, p2, p3, p4, p5, p6] = coeffs.map(|v| Complex64::new(v, 0.0));
        SexticMonic::new(p1, p2, p3, p4, p5, p6)
    }

    /// Normalize a degree-6 polynomial to monic form. `None` when the
    /// polynomial is not of degree 6.
    pub fn from_polynomial(p: &Polynomial) -> Option<Self> {
        if p.degree() != Some(6) {
            return None;
        }
        let monic = p.monic_normalize().expect("degree checked");
        Some(SexticMonic::new(
            monic.coeff(5),
            monic.coeff(4),
            monic.coeff(3),
            monic.coeff(2),
            monic.coeff(1),
            monic.coeff(0),
        ))
    }

    pub fn to_polynomial(self) -> Polynomial {
        Polynomial::new(vec![
            self.p6,
            self.p5,
            self.p4,
            self.p3,
            self.p2,
            self.p1,
            Complex64::new(1.0, 0.0),
        ])
    }

    /// Coefficients below the leading 1, descending: `[p1, …, p6]`.
    pub fn tail(self) -> [Complex64; 6] {
        [self.p1, self.p2, self.p3, self.p4, self.p5, self.p6]
    }

    /// Max coefficient magnitude (≥ 1: monic).
    pub fn scale(self) -> f64 {
        self.tail().iter().map(|c| c.norm()).fold(1.0, f64::max)
    }
}

/// A fully solved sextic: recovered parameters, resolvent, factor roots and
/// the composed six roots, with the end-to-end residual against the input.
#[derive(Clone, Debug)]
pub struct SexticSolution {
    pub params: MilanezParams,
    pub resolvent: QuinticDepressed,
    pub quad_roots: [Complex64; 2],
    pub cubic_roots: [Complex64; 3],
    pub roots: [Complex64; 6],
    pub residual_max: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum SolveError {
    #[error("not Milanez-solvable: no factor parameters satisfy the coefficient relation")]
    NotSolvable,
    #[error(
        "closed-form roots failed verification: residual {residual_max:.3e} exceeds {limit:.3e}"
    )]
    ResidualExceeded { residual_max: f64, limit: f64 },
}

/// The six sextic coefficients generated by parameters `(a, b, c, d)`.
pub fn forward(params: &MilanezParams) -> SexticMonic {
    let (a, b, c, d) = (params.a, params.b, params.c, params.d);
    SexticMonic::new(
        -a,
        -a * a + 3.0 * b + 2.0 * c,
        a * a * a - 2.0 * a * b - 2.0 * a * c + 2.0 * d,
        -a * a * b + c * c + 3.0 * b * b - a * d,
        -a * c * c - a * b * b + a * a * d + 2.0 * a * b * c - 6.0 * b * d + 2.0 * d * c,
        a * d * b - a * d * c - 2.0 * b * b * c + d * d + b * b * b + b * c * c,
    )
}

/// The degree-4 cofactor of the pair-sum polynomial:
/// `k⁴ + a·k³ + (c−a²)·k² + (−a³−d)·k + (ad−a²c)`. Its roots are the
/// within-factor pair sums; `k = a` (the two quadratic-factor roots) is
/// always among them.
pub fn quartic_cofactor(params: &MilanezParams) -> Polynomial {
    let (a, c, d) = (params.a, params.c, params.d);
    Polynomial::new(vec![
        a * d - a * a * c,
        -a * a * a - d,
        c - a * a,
        a,
        Complex64::new(1.0, 0.0),
    ])
}

/// The depressed quintic resolvent: `C = −a²+c+b`, `D = ab+d−ac`,
/// `E = bc−ad`, `F = bd`.
pub fn resolvent_quintic(params: &MilanezParams) -> QuinticDepressed {
    let (a, b, c, d) = (params.a, params.b, params.c, params.d);
    QuinticDepressed::new(
        -a * a + c + b,
        a * b + d - a * c,
        b * c - a * d,
        b * d,
    )
}

/// Invert [`forward`]: recover `(a, b, c, d)` from a monic sextic, or
/// classify it as not solvable along this relation.
///
/// `a = −p1` is forced. Eliminating `c` (linear in `b` from the p2
/// equation) and `d` (linear in `b` from the p3 equation) turns the p4
/// equation into a quadratic in `b` with constant leading coefficient 21/4,
/// so exactly two closed-form candidates exist. A candidate is accepted iff
/// the two remaining equations (p5, p6) hold within `tol`; among passing
/// candidates the one with the smallest worst-equation residual wins, ties
/// broken by canonical ordering of `b`.
pub fn recover(s: &SexticMonic, tol: Tolerance) -> Option<MilanezParams> {
    let a = -s.p1;

    // c = c_base − (3/2)·b, d = d_base − (a/2)·b
    let c_base = (s.p2 + a * a) / 2.0;
    let d_base = (s.p3 - a * a * a) / 2.0 + a * c_base;

    // p4 equation as a quadratic in b: (21/4)·b² + lin·b + cst = 0.
    let lin = -a * a / 2.0 - 3.0 * c_base;
    let cst = c_base * c_base - a * d_base - s.p4;
    let quarter21 = Complex64::new(21.0 / 4.0, 0.0);
    let candidates = closed_form::solve_quadratic(QuadraticMonic::new(
        lin / quarter21,
        cst / quarter21,
    ));

    let mut best: Option<(f64, Complex64, MilanezParams)> = None;
    for b in candidates {
        let c = c_base - 1.5 * b;
        let d = d_base - a / 2.0 * b;
        let params = MilanezParams::new(a, b, c, d);
        let image = forward(&params);
        let margins: Vec<f64> = image
            .tail()
            .iter()
            .zip(s.tail())
            .map(|(got, want)| tol.margin(*got, want))
            .collect();
        // p1–p4 hold by construction; p5 and p6 are the actual test.
        if margins[4] > 1.0 || margins[5] > 1.0 {
            continue;
        }
        let score = margins.iter().fold(0.0, |acc: f64, &m| acc.max(m));
        let better = match &best {
            None => true,
            Some((best_score, best_b, _)) => match score.total_cmp(best_score) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => canonical_cmp(&b, best_b).is_lt(),
                std::cmp::Ordering::Greater => false,
            },
        };
        if better {
            best = Some((score, b, params));
        }
    }
    best.map(|(_, _, params)| params)
}

/// Evaluate the sextic at each root and report the worst residual,
/// normalized by the sextic's coefficient scale.
pub fn sextic_residual_max(s: &SexticMonic, roots: &[Complex64]) -> f64 {
    let p = s.to_polynomial();
    let scale = s.scale();
    roots
        .iter()
        .map(|&r| p.eval(r).norm() / scale)
        .fold(0.0, f64::max)
}

/// The six pairwise sums `u + v`, `u` a quadratic-factor root and `v` a
/// cubic-factor root, in canonical order.
pub fn roots_from_factors(
    quad_roots: [Complex64; 2],
    cubic_roots: [Complex64; 3],
) -> [Complex64; 6] {
    let mut out = [Complex64::new(0.0, 0.0); 6];
    let mut idx = 0;
    for &u in &quad_roots {
        for &v in &cubic_roots {
            out[idx] = u + v;
            idx += 1;
        }
    }
    sort_canonical(&mut out);
    out
}

/// Solve a monic sextic in closed form: recover the parameters, solve the
/// quadratic and cubic factors, and compose the six roots as pairwise sums.
/// The final residual is measured against the original input sextic and
/// never silently accepted.
pub fn solve_sextic(s: &SexticMonic, tol: Tolerance) -> Result<SexticSolution, SolveError> {
    let params = recover(s, tol).ok_or(SolveError::NotSolvable)?;

    let mut quad_roots = closed_form::solve_quadratic(params.quadratic_factor());
    let mut cubic_roots = closed_form::solve_cubic(params.cubic_factor());
    sort_canonical(&mut quad_roots);
    sort_canonical(&mut cubic_roots);
    let roots = roots_from_factors(quad_roots, cubic_roots);

    let residual_max = sextic_residual_max(s, &roots);
    let limit = tol.residual_limit();
    if residual_max > limit {
        return Err(SolveError::ResidualExceeded {
            residual_max,
            limit,
        });
    }

    Ok(SexticSolution {
        params,
        resolvent: resolvent_quintic(&params),
        quad_roots,
        cubic_roots,
        roots,
        residual_max,
    })
}
