//! The nine target regions in the right half plane.
//!
//! Each region Ω is the image of the unit disk under a univalent
//! superordinate map φ with φ(0) = 1. Membership is decided exactly:
//! either by the region's defining inequality (half plane, disk, parabola,
//! exponential, sigmoid) or by inverting φ and testing whether some
//! preimage lands in the unit disk (cardioid, sine, rational, nephroid).
//! The implicit curve formulas for the cardioid and nephroid are kept as
//! independent cross-checks of the inversion route, never as the membership
//! test itself.
//!
//! [`TargetClass::verify_disk_inclusion`] turns the literature's
//! disk-inclusion lemmas into sampled certificates: it walks a circle just
//! inside the lemma's disk `{w : |w − a| < δ(a)}` and counts membership
//! violations.

use crate::error::{Error, Result};
use crate::exec;
use crate::kernel::{circle_point, principal_arcsin, principal_sqrt, sqrt_upper, Complex64, Disk};

const SQRT2: f64 = std::f64::consts::SQRT_2;
const E: f64 = std::f64::consts::E;
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Coefficient of the rational superordinate, `k = √2 + 1`.
fn rational_k() -> f64 {
    SQRT2 + 1.0
}

/// One of the nine target subclasses of starlike functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetClass {
    /// Half plane `Re w > α`.
    OrderAlpha(f64),
    /// Disk `|w − 1| < 1 − α`.
    DiskAlpha(f64),
    /// Parabolic region `Re w > |w − 1|`.
    Parabolic,
    /// `|log w| < 1`, image of the disk under `e^z`.
    Exponential,
    /// Interior of the cardioid traced by `1 + (4/3)z + (2/3)z²`.
    Cardioid,
    /// Image of the disk under `1 + sin z`.
    Sine,
    /// Image of the disk under `1 + (kz + z²)/(k² − kz)`, `k = √2 + 1`.
    Rational,
    /// Interior of the nephroid traced by `1 + z − z³/3`.
    Nephroid,
    /// `|log(w/(2 − w))| < 1`, image of the disk under the modified sigmoid.
    Sigmoid,
}

use TargetClass::*;

/// The seven parameter-free targets in their canonical reporting order.
pub const NAMED_TARGETS: [TargetClass; 7] =
    [Parabolic, Exponential, Cardioid, Sine, Rational, Nephroid, Sigmoid];

impl TargetClass {
    /// Short name used on the command line and in serialized reports.
    pub fn name(self) -> &'static str {
        match self {
            OrderAlpha(_) => "order",
            DiskAlpha(_) => "disk",
            Parabolic => "parabolic",
            Exponential => "exp",
            Cardioid => "cardioid",
            Sine => "sine",
            Rational => "rational",
            Nephroid => "nephroid",
            Sigmoid => "sigmoid",
        }
    }

    /// The order parameter, present only for the half-plane and disk targets.
    pub fn alpha(self) -> Option<f64> {
        match self {
            OrderAlpha(a) | DiskAlpha(a) => Some(a),
            _ => None,
        }
    }

    /// Checks the `0 ≤ α < 1` constraint where present.
    pub fn validate(self) -> Result<()> {
        match self.alpha() {
            Some(a) if !(0.0..1.0).contains(&a) || !a.is_finite() => {
                Err(Error::AlphaOutOfRange(a))
            }
            _ => Ok(()),
        }
    }

    /// Evaluates the superordinate map φ at `z` (`|z| ≤ 1`).
    ///
    /// Errors on the two maps that are singular at `z = 1`: the parabolic
    /// map (logarithmic singularity) and the half-plane map (pole).
    pub fn superordinate(self, z: Complex64) -> Result<Complex64> {
        if z == ONE && matches!(self, Parabolic | OrderAlpha(_)) {
            return Err(Error::SuperordinateSingularity(self.name().to_owned()));
        }
        Ok(match self {
            OrderAlpha(a) => (ONE + (1.0 - 2.0 * a) * z) / (ONE - z),
            DiskAlpha(a) => ONE + (1.0 - a) * z,
            Parabolic => {
                let s = sqrt_upper(z);
                let l = ((ONE + s) / (ONE - s)).ln();
                ONE + 2.0 / (std::f64::consts::PI * std::f64::consts::PI) * l * l
            }
            Exponential => z.exp(),
            Cardioid => ONE + 4.0 / 3.0 * z + 2.0 / 3.0 * z * z,
            Sine => ONE + z.sin(),
            Rational => {
                let k = rational_k();
                ONE + (k * z + z * z) / (Complex64::new(k * k, 0.0) - k * z)
            }
            Nephroid => ONE + z - z * z * z / 3.0,
            Sigmoid => 2.0 / ((-z).exp() + 1.0),
        })
    }

    /// True iff `w` lies strictly inside Ω. Boundary and exterior points
    /// both return false.
    pub fn contains(self, w: Complex64) -> bool {
        self.membership_defect(w) < 0.0
    }

    /// Signed membership defect: negative strictly inside Ω, zero on the
    /// boundary, positive outside.
    ///
    /// For the inequality-defined regions this is the inequality residual;
    /// for the preimage-defined regions it is `min |z| − 1` over the
    /// preimages of `w` under φ. Not a Euclidean distance, but its sign is
    /// exact up to rounding.
    pub fn membership_defect(self, w: Complex64) -> f64 {
        match self {
            OrderAlpha(a) => a - w.re,
            DiskAlpha(a) => (w - ONE).norm() - (1.0 - a),
            Parabolic => (w - ONE).norm() - w.re,
            Exponential => w.ln().norm() - 1.0,
            Sigmoid => (w / (Complex64::new(2.0, 0.0) - w)).ln().norm() - 1.0,
            Sine => principal_arcsin(w - ONE).norm() - 1.0,
            // (2/3)z² + (4/3)z + (1 − w) = 0, rescaled monic.
            Cardioid => {
                let roots = quadratic_roots(Complex64::new(2.0, 0.0), 1.5 * (ONE - w));
                min_norm(&roots) - 1.0
            }
            // z² + kwz − k²(w − 1) = 0.
            Rational => {
                let k = rational_k();
                let roots = quadratic_roots(k * w, -k * k * (w - ONE));
                min_norm(&roots) - 1.0
            }
            // z − z³/3 = w − 1, i.e. z³ − 3z + 3(w − 1) = 0.
            Nephroid => {
                let roots = depressed_cubic_roots(Complex64::new(-3.0, 0.0), 3.0 * (w - ONE));
                min_norm(&roots) - 1.0
            }
        }
    }

    /// The paper-stated implicit defect: negative inside, zero on the
    /// boundary, positive outside. Supported for the five regions with an
    /// implicit description; errors otherwise.
    pub fn implicit_defect(self, w: Complex64) -> Result<f64> {
        let (u, v) = (w.re, w.im);
        match self {
            Parabolic => Ok((w - ONE).norm() - u),
            Exponential => Ok(w.ln().norm() - 1.0),
            Sigmoid => Ok((w / (Complex64::new(2.0, 0.0) - w)).ln().norm() - 1.0),
            Cardioid => {
                let s = 9.0 * u * u + 9.0 * v * v;
                let a = s - 18.0 * u + 5.0;
                let b = s - 6.0 * u + 1.0;
                Ok(a * a - 16.0 * b)
            }
            Nephroid => {
                let q = (u - 1.0) * (u - 1.0) + v * v - 4.0 / 9.0;
                Ok(q * q * q - 4.0 * v * v / 3.0)
            }
            _ => Err(Error::UnsupportedTarget(self.name().to_owned())),
        }
    }

    /// Radius δ of the largest disk centered at `w = 1` that the inclusion
    /// lemmas certify inside Ω. The leftmost boundary point of Ω is `1 − δ`.
    pub fn inradius_at_one(self) -> f64 {
        match self {
            OrderAlpha(a) | DiskAlpha(a) => 1.0 - a,
            Parabolic => 0.5,
            Exponential => 1.0 - 1.0 / E,
            Cardioid | Nephroid => 2.0 / 3.0,
            Sine => 1.0f64.sin(),
            Rational => 3.0 - 2.0 * SQRT2,
            Sigmoid => (E - 1.0) / (E + 1.0),
        }
    }

    /// The interval of centers `a` admitted by the target's inclusion
    /// lemma, as `(lo, hi, lo_open, hi_open)`.
    pub fn admissible_interval(self) -> Result<(f64, f64, bool, bool)> {
        let sin1 = 1.0f64.sin();
        match self {
            Parabolic => Ok((0.5, 1.5, true, true)),
            Exponential => Ok((1.0 / E, (E + 1.0 / E) / 2.0, false, false)),
            Cardioid => Ok((1.0 / 3.0, 5.0 / 3.0, true, false)),
            Sine => Ok((1.0 - sin1, 1.0 + sin1, false, false)),
            Rational => Ok((2.0 * (SQRT2 - 1.0), SQRT2, true, false)),
            Nephroid => Ok((1.0 / 3.0, 1.0, true, false)),
            Sigmoid => Ok((2.0 / (E + 1.0), 2.0 * E / (1.0 + E), true, true)),
            OrderAlpha(_) | DiskAlpha(_) => {
                Err(Error::UnsupportedTarget(self.name().to_owned()))
            }
        }
    }

    /// The disk radius δ(a) asserted by the target's inclusion lemma.
    pub fn lemma_radius(self, a: f64) -> Result<f64> {
        let (lo, hi, lo_open, hi_open) = self.admissible_interval()?;
        let below = if lo_open { a <= lo } else { a < lo };
        let above = if hi_open { a >= hi } else { a > hi };
        if below || above || !a.is_finite() {
            return Err(Error::CenterOutOfRange { target: self.name().to_owned(), a, lo, hi });
        }
        Ok(match self {
            Parabolic => a - 0.5,
            Exponential => a - 1.0 / E,
            Cardioid | Nephroid => a - 1.0 / 3.0,
            Sine => 1.0f64.sin() - (a - 1.0).abs(),
            Rational => a - 2.0 * (SQRT2 - 1.0),
            Sigmoid => (E - 1.0) / (E + 1.0) - (a - 1.0).abs(),
            OrderAlpha(_) | DiskAlpha(_) => unreachable!(),
        })
    }

    /// Samples `n` points on the circle `|w − a| = shrink·δ(a)` and counts
    /// membership violations.
    pub fn verify_disk_inclusion(self, a: f64, n: usize, shrink: f64) -> Result<InclusionReport> {
        assert!(n >= 1, "need at least one sample");
        assert!(shrink > 0.0 && shrink < 1.0, "shrink must lie in (0, 1), got {shrink}");
        let delta = self.lemma_radius(a)?;
        let center = Complex64::new(a, 0.0);
        let radius = shrink * delta;
        let stats = exec::sweep(n, |k| {
            self.membership_defect(circle_point(center, radius, k, n))
        });
        Ok(InclusionReport {
            target: self,
            disk: Disk::new(center, radius),
            samples: n,
            violations: stats.violations,
            max_defect: stats.max_defect,
        })
    }

    /// `n` boundary points `φ(e^{iθ})` on an offset angle grid
    /// `θ_k = 2π(k + 1/2)/n`. The half-step offset keeps the sampling away
    /// from the singular point `z = 1` of the parabolic and half-plane maps.
    pub fn boundary_polyline(self, n: usize) -> Vec<Complex64> {
        assert!(n >= 3, "need at least three points");
        (0..n)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / (n as f64);
                self.superordinate(Complex64::from_polar(1.0, theta))
                    .expect("offset grid avoids the singular point")
            })
            .collect()
    }
}

impl std::fmt::Display for TargetClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.alpha() {
            Some(a) => write!(f, "{}({})", self.name(), a),
            None => f.write_str(self.name()),
        }
    }
}

/// Result of one sampled disk-inclusion check.
#[derive(Debug, Clone, PartialEq)]
pub struct InclusionReport {
    pub target: TargetClass,
    /// The sampled disk (already shrunk).
    pub disk: Disk,
    pub samples: usize,
    pub violations: usize,
    /// Largest membership defect over the samples; < 0 means all inside.
    pub max_defect: f64,
}

impl InclusionReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Roots of the monic quadratic `z² + bz + c`, computed with the usual
/// cancellation-avoiding pairing (larger root by formula, the other as c/t).
fn quadratic_roots(b: Complex64, c: Complex64) -> [Complex64; 2] {
    let s = principal_sqrt(b * b - 4.0 * c);
    let t = if (b.conj() * s).re >= 0.0 { -(b + s) / 2.0 } else { -(b - s) / 2.0 };
    if t == Complex64::new(0.0, 0.0) {
        [t, t]
    } else {
        [t, c / t]
    }
}

/// Roots of the depressed cubic `z³ + pz + q` over ℂ via Cardano's method,
/// with the larger-modulus cube `u³` chosen to avoid cancellation.
fn depressed_cubic_roots(p: Complex64, q: Complex64) -> [Complex64; 3] {
    let zero = Complex64::new(0.0, 0.0);
    if p == zero && q == zero {
        return [zero; 3];
    }
    let disc = q * q / 4.0 + p * p * p / 27.0;
    let s = principal_sqrt(disc);
    let mq2 = -q / 2.0;
    let u_cubed = if (mq2.conj() * s).re >= 0.0 { mq2 + s } else { mq2 - s };
    let u = u_cubed.cbrt();
    // u³ has the larger modulus of the two Cardano branches, so u ≠ 0.
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut roots = [zero; 3];
    let mut uj = u;
    for root in &mut roots {
        *root = uj - p / (3.0 * uj);
        uj *= omega;
    }
    roots
}

fn min_norm(roots: &[Complex64]) -> f64 {
    roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min)
}
