//! The classes T1, T2, T3 and their members.
//!
//! A member is built from three Schwarz functions driving the three
//! subordinated factors of `f(z) = z·p(z)·p1(z)·p2(z)`. Schwarz functions
//! are realized as finite Blaschke-type products `rotation·z·∏(z−a)/(1−āz)`
//! with all zeros strictly inside the disk, which keeps `|ω| < 1` exactly
//! (no clipping) while still being dense enough to hunt for bound
//! violations. Derivatives of members are computed analytically through
//! the product rule; finite differences appear only as a test oracle.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::{principal_sqrt, Complex64};

const SPLIT: f64 = std::f64::consts::SQRT_2 - 1.0;
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// One of the three subordination-defined classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    T1,
    T2,
    T3,
}

pub const FAMILIES: [Family; 3] = [Family::T1, Family::T2, Family::T3];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::T1 => "T1",
            Family::T2 => "T2",
            Family::T3 => "T3",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "T1" | "t1" => Ok(Family::T1),
            "T2" | "t2" => Ok(Family::T2),
            "T3" | "t3" => Ok(Family::T3),
            other => Err(format!("unknown family {other:?} (expected T1, T2 or T3)")),
        }
    }
}

/// A Schwarz function `ω(z) = rotation·z·∏(z−a_k)/(1−ā_k z)`.
///
/// `ω(0) = 0` by the pinned `z` factor and `|ω| < 1` on the disk because
/// every Blaschke factor is a disk automorphism. A zero `rotation` denotes
/// the zero function `ω ≡ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzSpec {
    rotation: Complex64,
    zeros: Vec<Complex64>,
}

impl SchwarzSpec {
    /// Validates `|rotation| = 1` (within 1e−12, or exactly 0 for the zero
    /// function) and `|a_k| < 1` for every zero.
    pub fn new(rotation: Complex64, zeros: Vec<Complex64>) -> Result<SchwarzSpec> {
        let r = rotation.norm();
        if !(r == 0.0 || (r - 1.0).abs() <= 1e-12) {
            return Err(Error::InvalidSchwarzSpec(format!(
                "|rotation| = {r} is neither 1 nor 0"
            )));
        }
        if let Some(a) = zeros.iter().find(|a| a.norm() >= 1.0) {
            return Err(Error::InvalidSchwarzSpec(format!(
                "zero {a} has modulus {} >= 1",
                a.norm()
            )));
        }
        Ok(SchwarzSpec { rotation, zeros })
    }

    /// `ω(z) = z`.
    pub fn identity() -> SchwarzSpec {
        SchwarzSpec { rotation: ONE, zeros: Vec::new() }
    }

    /// `ω ≡ 0`.
    pub fn zero() -> SchwarzSpec {
        SchwarzSpec { rotation: ZERO, zeros: Vec::new() }
    }

    pub fn rotation(&self) -> Complex64 {
        self.rotation
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    /// Blaschke degree of ω (number of zeros counting the pinned one).
    pub fn degree(&self) -> usize {
        self.zeros.len() + 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_with_derivative(z).0
    }

    /// `(ω(z), ω′(z))` via the product rule over the factors; each Blaschke
    /// factor has `B′ = (1 − |a|²)/(1 − āz)²`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = self.rotation;
        let mut deriv = ZERO;
        // Pinned factor z.
        (value, deriv) = (value * z, deriv * z + value);
        for &a in &self.zeros {
            let den = ONE - a.conj() * z;
            let f = (z - a) / den;
            let fp = (1.0 - a.norm_sqr()) / (den * den);
            (value, deriv) = (value * f, deriv * f + value * fp);
        }
        (value, deriv)
    }
}

#[derive(Serialize, Deserialize)]
struct SchwarzSpecRepr {
    rotation: [f64; 2],
    zeros: Vec<[f64; 2]>,
}

impl Serialize for SchwarzSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SchwarzSpecRepr {
            rotation: [self.rotation.re, self.rotation.im],
            zeros: self.zeros.iter().map(|a| [a.re, a.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchwarzSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SchwarzSpecRepr::deserialize(deserializer)?;
        SchwarzSpec::new(
            Complex64::new(repr.rotation[0], repr.rotation[1]),
            repr.zeros.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
        )
        .map_err(D::Error::custom)
    }
}

/// How a subordinated factor is built from its Schwarz function.
#[derive(Debug, Clone, Copy, PartialEq)]
enum FactorKind {
    /// `p = e^ω`
    Exp,
    /// `p = √(1+ω)`
    Sqrt,
    /// `p = ω + √(1+ω²)`
    Lune,
}

impl FactorKind {
    fn value(self, omega: Complex64) -> Complex64 {
        match self {
            FactorKind::Exp => omega.exp(),
            FactorKind::Sqrt => principal_sqrt(ONE + omega),
            FactorKind::Lune => omega + principal_sqrt(ONE + omega * omega),
        }
    }

    /// The factor's log-derivative contribution `z·p′(z)/p(z)`.
    fn log_derivative_term(
        self,
        z: Complex64,
        omega: Complex64,
        omega_prime: Complex64,
    ) -> Result<Complex64> {
        let singular = |at: Complex64| Error::FactorSingularity { re: at.re, im: at.im };
        match self {
            FactorKind::Exp => Ok(z * omega_prime),
            FactorKind::Sqrt => {
                let den = ONE + omega;
                if den.norm() < 1e-14 {
                    return Err(singular(z));
                }
                Ok(z * omega_prime / (2.0 * den))
            }
            FactorKind::Lune => {
                let s = principal_sqrt(ONE + omega * omega);
                if s.norm() < 1e-14 {
                    return Err(singular(z));
                }
                Ok(z * omega_prime / s)
            }
        }
    }
}

/// Factor kinds for `(p, p1, p2)` in that order.
fn factor_kinds(family: Family) -> [FactorKind; 3] {
    match family {
        Family::T1 => [FactorKind::Sqrt, FactorKind::Exp, FactorKind::Exp],
        Family::T2 => [FactorKind::Exp, FactorKind::Sqrt, FactorKind::Sqrt],
        Family::T3 => [FactorKind::Lune; 3],
    }
}

/// A concrete member `f(z) = z·p(z)·p1(z)·p2(z)` of one of the classes,
/// determined by the three Schwarz functions driving its factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemberInstance {
    pub family: Family,
    pub omega_p: SchwarzSpec,
    pub omega_1: SchwarzSpec,
    pub omega_2: SchwarzSpec,
}

impl MemberInstance {
    fn specs(&self) -> [&SchwarzSpec; 3] {
        [&self.omega_p, &self.omega_1, &self.omega_2]
    }

    /// Evaluates `f(z)`.
    pub fn value(&self, z: Complex64) -> Complex64 {
        let kinds = factor_kinds(self.family);
        let mut f = z;
        for (spec, kind) in self.specs().into_iter().zip(kinds) {
            f *= kind.value(spec.eval(z));
        }
        f
    }

    /// `zf′(z)/f(z) = 1 + Σ z·p_j′(z)/p_j(z)` with analytic factor formulas.
    pub fn log_derivative(&self, z: Complex64) -> Result<Complex64> {
        let kinds = factor_kinds(self.family);
        let mut total = ONE;
        for (spec, kind) in self.specs().into_iter().zip(kinds) {
            let (omega, omega_prime) = spec.eval_with_derivative(z);
            total += kind.log_derivative_term(z, omega, omega_prime)?;
        }
        Ok(total)
    }
}

/// Assembles a member from its three Schwarz functions.
pub fn make_member(
    family: Family,
    omega_p: SchwarzSpec,
    omega_1: SchwarzSpec,
    omega_2: SchwarzSpec,
) -> MemberInstance {
    MemberInstance { family, omega_p, omega_1, omega_2 }
}

/// The extremal member (all three Schwarz functions equal to `z`).
pub fn extremal_member(family: Family) -> MemberInstance {
    make_member(family, SchwarzSpec::identity(), SchwarzSpec::identity(), SchwarzSpec::identity())
}

/// Certified upper bound `B(r)` on `|zf′(z)/f(z) − 1|` over `|z| ≤ r` for
/// the whole family.
///
/// T1 and T2 are piecewise with the split at `r = √2 − 1`; radius
/// computations only ever evaluate the first branch (`r ≤ √2 − 1`), where
/// the bound vanishes at 0 and increases strictly.
pub fn derivative_bound(family: Family, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) || !r.is_finite() {
        return Err(Error::RadiusOutOfRange(r));
    }
    Ok(match family {
        Family::T1 => {
            if r <= SPLIT {
                r * (5.0 - 4.0 * r) / (2.0 * (1.0 - r))
            } else {
                (3.0 + r + 7.0 * r * r + 3.0 * r.powi(4)) / (2.0 * (1.0 - r * r))
            }
        }
        Family::T2 => {
            if r <= SPLIT {
                r * (2.0 - r) / (1.0 - r)
            } else {
                (1.0 + 4.0 * r + 6.0 * r * r + r.powi(4)) / (4.0 * (1.0 - r * r))
            }
        }
        Family::T3 => 3.0 * r / (1.0 + r * r).sqrt(),
    })
}

/// The extremal function: `f1 = z·e^{2z}·√(1+z)`, `f2 = z(1+z)e^z`,
/// `f3 = z(z+√(1+z²))³`.
pub fn extremal_value(family: Family, z: Complex64) -> Complex64 {
    match family {
        Family::T1 => z * (2.0 * z).exp() * principal_sqrt(ONE + z),
        Family::T2 => z * (ONE + z) * z.exp(),
        Family::T3 => {
            let lune = z + principal_sqrt(ONE + z * z);
            z * lune * lune * lune
        }
    }
}

/// Closed-form `zf′(z)/f(z)` of the extremal function.
pub fn extremal_log_derivative(family: Family, z: Complex64) -> Result<Complex64> {
    match family {
        Family::T1 => {
            let den = ONE + z;
            if den.norm() < 1e-14 {
                return Err(Error::FactorSingularity { re: z.re, im: z.im });
            }
            Ok(ONE + 2.0 * z + z / (2.0 * den))
        }
        Family::T2 => {
            let den = ONE + z;
            if den.norm() < 1e-14 {
                return Err(Error::FactorSingularity { re: z.re, im: z.im });
            }
            Ok(ONE + z + z / den)
        }
        Family::T3 => {
            let s = principal_sqrt(ONE + z * z);
            if s.norm() < 1e-14 {
                return Err(Error::FactorSingularity { re: z.re, im: z.im });
            }
            Ok(ONE + 3.0 * z / s)
        }
    }
}

/// Modulus of the smallest-modulus zero of the extremal function's
/// derivative inside the disk; univalence cannot extend past it.
pub fn univalence_critical_point(family: Family) -> f64 {
    match family {
        Family::T1 => (7.0 - 17.0f64.sqrt()) / 8.0,
        Family::T2 => (3.0 - 5.0f64.sqrt()) / 2.0,
        Family::T3 => 1.0 / 8.0f64.sqrt(),
    }
}

/// Draws `count` members with Blaschke-type Schwarz functions of degree at
/// most `max_degree + 1`: zero count uniform in `0..=max_degree`, zero
/// moduli uniform in `[0, 0.95)`, all angles uniform. Deterministic for a
/// fixed seed.
pub fn sample_members(
    family: Family,
    count: usize,
    seed: u64,
    max_degree: usize,
) -> Vec<MemberInstance> {
    assert!(count >= 1, "need at least one member");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut spec = || random_spec(&mut rng, max_degree);
            let (omega_p, omega_1, omega_2) = (spec(), spec(), spec());
            make_member(family, omega_p, omega_1, omega_2)
        })
        .collect()
}

/// Location and size of the worst sample in a Monte-Carlo sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepViolation {
    pub member_index: usize,
    pub r: f64,
    pub angle_index: usize,
    /// Amount by which the checked quantity exceeded its threshold.
    pub excess: f64,
}

/// Outcome of a Monte-Carlo sweep over sampled members.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub members: usize,
    pub samples: usize,
    pub violations: usize,
    /// Largest excess over the threshold; negative means every sample had
    /// headroom.
    pub max_excess: f64,
    pub worst: Option<SweepViolation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Checks `|zf′(z)/f(z) − 1| ≤ B(r) + slack` for every member on circles
/// `|z| = r` for each `r` in `radii`, sampled at `angles` equispaced points.
/// All members must belong to the same family.
pub fn bound_sweep(
    members: &[MemberInstance],
    radii: &[f64],
    angles: usize,
    slack: f64,
) -> SweepReport {
    let family = members.first().map_or(Family::T1, |m| m.family);
    debug_assert!(members.iter().all(|m| m.family == family));
    let thresholds: Vec<f64> = radii
        .iter()
        .map(|&r| derivative_bound(family, r).expect("sweep radius inside [0, 1)") + slack)
        .collect();
    member_sweep(members, radii, angles, |member, ri, z| {
        let w = member.log_derivative(z).expect("interior evaluation");
        (w - ONE).norm() - thresholds[ri]
    })
}

/// Checks `Re(zf′(z)/f(z)) > 0` for every member at `angles` points on the
/// circle `|z| = radius`.
pub fn starlike_sweep(members: &[MemberInstance], radius: f64, angles: usize) -> SweepReport {
    member_sweep(members, &[radius], angles, |member, _ri, z| {
        -member.log_derivative(z).expect("interior evaluation").re
    })
}

/// Checks `|f′(0) − 1| < tol` for every member, with the derivative taken
/// by a fourth-order central difference (independent of the analytic
/// log-derivative path).
pub fn normalization_sweep(members: &[MemberInstance], tol: f64) -> SweepReport {
    let h = 1e-3;
    member_sweep(members, &[0.0], 1, |member, _ri, _z| {
        let f = |x: f64| member.value(Complex64::new(x, 0.0));
        let fd = (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
        (fd - ONE).norm() - tol
    })
}

/// Shared sweep driver: `excess(member, radius_index, z) ≥ 0` counts as a
/// violation.
fn member_sweep<F>(members: &[MemberInstance], radii: &[f64], angles: usize, excess: F) -> SweepReport
where
    F: Fn(&MemberInstance, usize, Complex64) -> f64 + Sync + Send,
{
    let per_member = |i: usize| {
        let member = &members[i];
        let mut local = SweepReport {
            members: 1,
            samples: 0,
            violations: 0,
            max_excess: f64::NEG_INFINITY,
            worst: None,
        };
        for (ri, &r) in radii.iter().enumerate() {
            for k in 0..angles {
                let z = crate::kernel::circle_point(ZERO, r, k, angles);
                let e = excess(member, ri, z);
                local.samples += 1;
                if !(e < 0.0) {
                    local.violations += 1;
                }
                if e > local.max_excess || local.worst.is_none() {
                    local.max_excess = e;
                    local.worst =
                        Some(SweepViolation { member_index: i, r, angle_index: k, excess: e });
                }
            }
        }
        local
    };
    let merge = |a: SweepReport, b: SweepReport| {
        // Worst sample by (excess, member index): total order, so the
        // parallel reduction is deterministic.
        let worst = match (a.worst, b.worst) {
            (Some(x), Some(y)) => {
                if (y.excess, y.member_index) > (x.excess, x.member_index) {
                    Some(y)
                } else {
                    Some(x)
                }
            }
            (x, y) => x.or(y),
        };
        SweepReport {
            members: a.members + b.members,
            samples: a.samples + b.samples,
            violations: a.violations + b.violations,
            max_excess: a.max_excess.max(b.max_excess),
            worst,
        }
    };
    crate::exec::map_merge(members.len(), per_member, merge).unwrap_or(SweepReport {
        members: 0,
        samples: 0,
        violations: 0,
        max_excess: f64::NEG_INFINITY,
        worst: None,
    })
}

fn random_spec(rng: &mut ChaCha8Rng, max_degree: usize) -> SchwarzSpec {
    let tau = std::f64::consts::TAU;
    let rotation = Complex64::from_polar(1.0, rng.gen_range(0.0..tau));
    let n_zeros = rng.gen_range(0..=max_degree);
    let zeros = (0..n_zeros)
        .map(|_| Complex64::from_polar(0.95 * rng.gen::<f64>(), rng.gen_range(0.0..tau)))
        .collect();
    SchwarzSpec::new(rotation, zeros).expect("drawn within constraints")
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn derivative_bound_examples() {
        assert_eq!(derivative_bound(Family::T1, 0.0).unwrap(), 0.0);
        assert_eq!(derivative_bound(Family::T2, 0.0).unwrap(), 0.0);
        assert_eq!(derivative_bound(Family::T3, 0.0).unwrap(), 0.0);
        // 3·(1/√8)/√(9/8) = 1.
        let b = derivative_bound(Family::T3, 1.0 / 8.0f64.sqrt()).unwrap();
        assert!((b - 1.0).abs() < 1e-15, "got {b}");
        // Both T2 branches meet at the split; value is (3√2−2)/2.
        let at = derivative_bound(Family::T2, SPLIT).unwrap();
        let above = derivative_bound(Family::T2, SPLIT.next_up()).unwrap();
        assert!((at - 1.1213203435596424).abs() < 1e-13, "got {at}");
        assert!((at - above).abs() < 1e-12);
        assert!(derivative_bound(Family::T1, 1.0).is_err());
        assert!(derivative_bound(Family::T1, -0.1).is_err());
    }

    #[test]
    fn t1_second_branch_is_discontinuous_as_printed() {
        let at = derivative_bound(Family::T1, SPLIT).unwrap();
        let above = derivative_bound(Family::T1, SPLIT.next_up()).unwrap();
        assert!(above - at > 1.5, "printed branches: {at} then {above}");
    }

    #[test]
    fn extremal_value_examples() {
        assert_eq!(extremal_value(Family::T1, ZERO), ZERO);
        assert_eq!(extremal_value(Family::T3, ZERO), ZERO);
        // 0.5·1.5·e^{0.5}, evaluated directly.
        let f = extremal_value(Family::T2, re(0.5));
        assert!((f - re(1.2365409530250961)).norm() < 1e-15, "got {f}");
    }

    #[test]
    fn extremal_log_derivative_examples() {
        for family in FAMILIES {
            let v = extremal_log_derivative(family, ZERO).unwrap();
            assert_eq!(v, ONE, "{family}");
        }
        // Parabolic contact of f1: value 1/2 at z = −(3−√5)/4.
        let rho = (3.0 - 5.0f64.sqrt()) / 4.0;
        let v = extremal_log_derivative(Family::T1, re(-rho)).unwrap();
        assert!((v - re(0.5)).norm() < 1e-14, "got {v}");
        // f3′ vanishes at −1/√8.
        let v = extremal_log_derivative(Family::T3, re(-1.0 / 8.0f64.sqrt())).unwrap();
        assert!(v.norm() < 1e-15, "got {v}");
        assert!(extremal_log_derivative(Family::T1, re(-1.0)).is_err());
        assert!(extremal_log_derivative(Family::T2, re(-1.0)).is_err());
    }

    #[test]
    fn univalence_critical_points() {
        assert!((univalence_critical_point(Family::T1) - 0.3596118).abs() < 1e-7);
        assert!((univalence_critical_point(Family::T2) - 0.3819660).abs() < 1e-7);
        assert!((univalence_critical_point(Family::T3) - 0.3535534).abs() < 1e-7);
    }

    #[test]
    fn identity_member_reproduces_extremal() {
        for family in FAMILIES {
            let member = extremal_member(family);
            for k in 0..20 {
                let z = Complex64::from_polar(0.05 + 0.04 * k as f64, 0.37 * k as f64);
                let f = member.value(z);
                let g = extremal_value(family, z);
                assert!((f - g).norm() < 1e-13, "{family} at {z}: {f} vs {g}");
                let a = member.log_derivative(z).unwrap();
                let b = extremal_log_derivative(family, z).unwrap();
                assert!((a - b).norm() < 1e-12, "{family} at {z}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn zero_specs_give_the_identity_function() {
        let member =
            make_member(Family::T2, SchwarzSpec::zero(), SchwarzSpec::zero(), SchwarzSpec::zero());
        for k in 0..10 {
            let z = Complex64::from_polar(0.09 * k as f64, 0.7 * k as f64);
            assert!((member.value(z) - z).norm() < 1e-16);
        }
        assert_eq!(member.log_derivative(re(0.4)).unwrap(), ONE);
    }

    #[test]
    fn member_log_derivative_is_one_at_zero() {
        for member in sample_members(Family::T3, 10, 9, 3) {
            assert!((member.log_derivative(ZERO).unwrap() - ONE).norm() < 1e-16);
        }
    }

    #[test]
    fn t1_identity_member_vanishing_log_derivative() {
        // zf′/f − 1 hits −1 at the univalence radius.
        let rho = (7.0 - 17.0f64.sqrt()) / 8.0;
        let member = extremal_member(Family::T1);
        let v = member.log_derivative(re(-rho)).unwrap();
        assert!(v.norm() < 1e-13, "got {v}");
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_members(Family::T1, 5, 42, 4);
        let b = sample_members(Family::T1, 5, 42, 4);
        assert_eq!(a, b);
        let c = sample_members(Family::T1, 5, 43, 4);
        assert_ne!(a, c);
    }

    #[test]
    fn sampled_specs_respect_constraints() {
        for member in sample_members(Family::T2, 100, 7, 3) {
            for spec in [&member.omega_p, &member.omega_1, &member.omega_2] {
                assert!(spec.degree() <= 4);
                assert!((spec.rotation().norm() - 1.0).abs() <= 1e-12);
                assert!(spec.zeros().iter().all(|a| a.norm() <= 0.95));
            }
        }
    }

    #[test]
    fn schwarz_spec_validation() {
        assert!(SchwarzSpec::new(re(1.0), vec![re(0.5)]).is_ok());
        assert!(SchwarzSpec::new(re(0.9), vec![]).is_err());
        assert!(SchwarzSpec::new(re(1.0), vec![re(1.0)]).is_err());
        assert!(SchwarzSpec::new(ZERO, vec![]).is_ok());
    }

    #[test]
    fn member_json_round_trip() {
        let member = sample_members(Family::T3, 1, 1, 2).pop().unwrap();
        let json = serde_json::to_string(&member).unwrap();
        let back: MemberInstance = serde_json::from_str(&json).unwrap();
        assert_eq!(member, back);

        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["family"], "T3");
        assert!(value["omega_p"]["rotation"].is_array());
        assert!(value["omega_p"]["zeros"].is_array());
    }

    #[test]
    fn blaschke_derivative_matches_finite_differences() {
        let spec = SchwarzSpec::new(
            Complex64::from_polar(1.0, 0.8),
            vec![Complex64::new(0.3, -0.2), Complex64::new(-0.5, 0.1)],
        )
        .unwrap();
        let h = 1e-6;
        for k in 0..12 {
            let z = Complex64::from_polar(0.07 * k as f64, 0.5 * k as f64);
            let (_, d) = spec.eval_with_derivative(z);
            let fd = (spec.eval(z + re(h)) - spec.eval(z - re(h))) / (2.0 * h);
            assert!((d - fd).norm() < 1e-8, "at {z}: {d} vs {fd}");
        }
    }
}
