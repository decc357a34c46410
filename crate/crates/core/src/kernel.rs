//! Complex branch primitives, disks, and circle sampling.
//!
//! Everything downstream works in `f64` through [`Complex64`]. The branch
//! conventions matter: [`principal_sqrt`] takes the root with nonnegative
//! real part (cut on the negative real axis, mapped to the positive
//! imaginary axis), while [`sqrt_upper`] takes the root with nonnegative
//! imaginary part, which is the convention the parabolic superordinate
//! needs. [`principal_log`] and [`principal_arcsin`] use the standard
//! principal branches with `Arg ∈ (−π, π]`.

use crate::error::{Error, Result};

pub use num_complex::Complex64;

/// A disk `{w : |w − center| < radius}` in the w-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
}

impl Disk {
    /// Panics if `radius` is negative or either field is non-finite.
    pub fn new(center: Complex64, radius: f64) -> Disk {
        assert!(radius >= 0.0, "disk radius must be nonnegative, got {radius}");
        assert!(center.re.is_finite() && center.im.is_finite() && radius.is_finite());
        Disk { center, radius }
    }
}

/// Square root with `Re ≥ 0`; the negative real axis maps to the positive
/// imaginary axis.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    // num-complex uses the polar form with Arg ∈ (−π, π], which is exactly
    // this branch.
    z.sqrt()
}

/// Square root with `Im ≥ 0`, tie-broken to the nonnegative real root on
/// the nonnegative real axis.
pub fn sqrt_upper(z: Complex64) -> Complex64 {
    let w = z.sqrt();
    if w.im < 0.0 {
        -w
    } else {
        w
    }
}

/// Principal logarithm, `log|z| + i·Arg z` with `Arg ∈ (−π, π]`.
///
/// Errors at `z = 0`.
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::LogAtZero);
    }
    Ok(z.ln())
}

/// Principal arcsine, `−i·log(iz + √(1−z²))`, with real part in `[−π/2, π/2]`.
pub fn principal_arcsin(z: Complex64) -> Complex64 {
    z.asin()
}

/// `n` points `center + radius·e^{2πik/n}`, `k = 0..n−1`.
pub fn sample_circle(center: Complex64, radius: f64, n: usize) -> Vec<Complex64> {
    assert!(n >= 1, "sample_circle needs n >= 1");
    assert!(radius >= 0.0, "sample_circle needs radius >= 0");
    (0..n).map(|k| circle_point(center, radius, k, n)).collect()
}

/// The `k`-th of `n` equally spaced points on the circle (no allocation).
pub fn circle_point(center: Complex64, radius: f64, k: usize, n: usize) -> Complex64 {
    let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    center + Complex64::from_polar(radius, theta)
}
