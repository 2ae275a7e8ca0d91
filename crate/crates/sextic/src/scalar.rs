//! Ordering and validity helpers for the complex scalars used everywhere.

use num_complex::Complex64;
use std::cmp::Ordering;

/// Canonical ordering: ascending real part, ties broken by ascending
/// imaginary part. All reported root sequences use this order.
pub fn canonical_cmp(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Sort a root sequence into canonical order in place.
pub fn sort_canonical(values: &mut [Complex64]) {
    values.sort_by(canonical_cmp);
}

pub fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Panics if any value is non-finite. Stored scalars must hold finite parts;
/// a NaN or infinity here is a caller bug, not a recoverable condition.
pub fn assert_all_finite(values: &[Complex64], context: &str) {
    for z in values {
        assert!(is_finite(*z), "{context}: non-finite scalar {z}");
    }
}
