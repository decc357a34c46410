//! Sharp radii of starlikeness and their certificates.
//!
//! Every radius comes out of one equation: the family's derivative bound
//! `B(r)` equals the target region's inradius δ at `w = 1`. The closed
//! forms solve that equation algebraically (quadratics for T1/T2, an
//! explicit square-root expression for T3); [`solve_radius_numeric`]
//! re-solves it by bisection as an independent cross-check. Sharpness is
//! certified by evaluating the extremal function's `zf′/f` at `z = −ρ` and
//! measuring how exactly it lands on the region's leftmost boundary point.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{
    derivative_bound, extremal_log_derivative, Family,
};
use crate::kernel::Complex64;
use crate::regions::TargetClass;

/// Right end of the bisection bracket; every radius in scope lies below it
/// and the first-branch bounds are strictly increasing up to it.
const BRACKET_END: f64 = std::f64::consts::SQRT_2 - 1.0;

/// A computed radius with its numeric cross-check and sharpness defect.
///
/// Expected invariants (checked by [`RadiusResult::within`], reported by
/// the CLI): `|closed_form − numeric| < 1e−12` and
/// `sharpness_defect < 1e−9`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult {
    pub family: Family,
    pub target: TargetClass,
    pub closed_form: f64,
    pub numeric: f64,
    /// The boundary-contact point `z = −closed_form`.
    pub sharpness_point: Complex64,
    pub sharpness_defect: f64,
}

impl RadiusResult {
    /// True iff the closed-form/numeric gap and the sharpness defect are
    /// within the given tolerances.
    pub fn within(&self, tol_closed_numeric: f64, tol_sharpness: f64) -> bool {
        (self.closed_form - self.numeric).abs() < tol_closed_numeric
            && self.sharpness_defect < tol_sharpness
    }
}

impl Serialize for RadiusResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = if self.target.alpha().is_some() { 6 } else { 5 };
        let mut s = serializer.serialize_struct("RadiusResult", n)?;
        s.serialize_field("family", self.family.name())?;
        s.serialize_field("target", self.target.name())?;
        if let Some(alpha) = self.target.alpha() {
            s.serialize_field("alpha", &alpha)?;
        }
        s.serialize_field("closed_form", &self.closed_form)?;
        s.serialize_field("numeric", &self.numeric)?;
        s.serialize_field("sharpness_defect", &self.sharpness_defect)?;
        s.end()
    }
}

/// Radius of starlikeness of order α (equivalently, of the
/// `|zf′/f − 1| < 1 − α` subclass) for the family, in closed form.
pub fn radius_order_alpha(family: Family, alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) || !alpha.is_finite() {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    Ok(match family {
        Family::T1 => {
            (7.0 - 2.0 * alpha - (17.0 + 4.0 * alpha + 4.0 * alpha * alpha).sqrt()) / 8.0
        }
        Family::T2 => (3.0 - alpha - (5.0 - 2.0 * alpha + alpha * alpha).sqrt()) / 2.0,
        Family::T3 => (1.0 - alpha) / (8.0 + 2.0 * alpha - alpha * alpha).sqrt(),
    })
}

/// Radius for an arbitrary target: the order/disk targets use their own α,
/// every other region reduces through `α = 1 − δ` with δ its inradius at 1.
pub fn radius_for_target(family: Family, target: TargetClass) -> Result<f64> {
    target.validate()?;
    let alpha = match target.alpha() {
        Some(a) => a,
        None => 1.0 - target.inradius_at_one(),
    };
    radius_order_alpha(family, alpha)
}

/// Solves `B(r) = delta` on `[0, √2 − 1]` by bisection.
///
/// The first-branch bounds are strictly increasing there, so the root is
/// unique; `delta` outside `(0, B(√2 − 1)]` is a no-root error.
pub fn solve_radius_numeric(family: Family, delta: f64) -> Result<f64> {
    let max = derivative_bound(family, BRACKET_END)?;
    if !(delta > 0.0) || !delta.is_finite() || delta > max {
        return Err(Error::NoRoot { delta, max });
    }
    let (mut lo, mut hi) = (0.0, BRACKET_END);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if derivative_bound(family, mid).expect("mid inside [0, 1)") < delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Sharpness certificate: evaluates `w = zf′/f` of the extremal function at
/// `z = −ρ` and returns the larger of
///
/// - the distance from `w` to the region's leftmost boundary point `1 − δ`,
/// - the target's own boundary residual at `w` (log-modulus residuals for
///   the exponential and sigmoid regions, the parabola inequality residual,
///   the implicit-curve values for the cardioid and nephroid).
pub fn verify_sharpness(family: Family, target: TargetClass) -> Result<f64> {
    let rho = radius_for_target(family, target)?;
    let w = extremal_log_derivative(family, Complex64::new(-rho, 0.0))?;
    let delta = target.inradius_at_one();
    let contact = (w - Complex64::new(1.0 - delta, 0.0)).norm();
    let residual = match target {
        TargetClass::Parabolic
        | TargetClass::Exponential
        | TargetClass::Sigmoid
        | TargetClass::Cardioid
        | TargetClass::Nephroid => target.implicit_defect(w)?.abs(),
        TargetClass::Sine
        | TargetClass::Rational
        | TargetClass::OrderAlpha(_)
        | TargetClass::DiskAlpha(_) => 0.0,
    };
    Ok(contact.max(residual))
}

/// Radius of univalence, `radius_order_alpha(family, 0)`; equal to the
/// modulus of the extremal derivative's critical point.
pub fn radius_univalence(family: Family) -> f64 {
    radius_order_alpha(family, 0.0).expect("alpha = 0 is valid")
}

/// Computes the full result row for one (family, target) pair.
pub fn radius_result(family: Family, target: TargetClass) -> Result<RadiusResult> {
    target.validate()?;
    let closed_form = radius_for_target(family, target)?;
    let delta = target.inradius_at_one();
    let numeric = solve_radius_numeric(family, delta)?;
    let sharpness_defect = verify_sharpness(family, target)?;
    Ok(RadiusResult {
        family,
        target,
        closed_form,
        numeric,
        sharpness_point: Complex64::new(-closed_form, 0.0),
        sharpness_defect,
    })
}
