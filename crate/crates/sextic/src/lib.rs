//! Closed-form solving of sextic equations whose quintic resolvent splits
//! into a quadratic and a cubic factor.
//!
//! The pipeline: a monic sextic is matched against the Milanez coefficient
//! relation to recover factor parameters `(a, b, c, d)`; those parameters
//! describe a depressed quintic resolvent `(x² − ax + b)(x³ + ax² + cx + d)`
//! whose factor roots, summed pairwise across factors, are the six sextic
//! roots. The quintic side of the machinery (Martinelli's degree-10 pair-sum
//! polynomial and the derived split) is exposed directly and usable on its
//! own for splitting depressed quintics.
//!
//! Every closed-form result can be cross-checked against [`oracle`], an
//! independent simultaneous-iteration root finder; residuals normalized by
//! coefficient scale are the universal correctness measure.

pub mod closed_form;
pub mod martinelli;
pub mod milanez;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod tolerance;

pub use num_complex::Complex64;

pub use martinelli::{QuinticDepressed, SplitError, SplitFactors};
pub use milanez::{MilanezParams, SexticMonic, SexticSolution, SolveError};
pub use oracle::{OracleError, RootSet};
pub use poly::{PolyError, Polynomial};
pub use tolerance::Tolerance;
