//! Family-level invariants: the Monte-Carlo derivative bound, extremal
//! consistency, bound monotonicity, and finite-difference oracles.

use radlab_core::families::{
    bound_sweep, derivative_bound, extremal_log_derivative, extremal_member, extremal_value,
    normalization_sweep, sample_members, Family, FAMILIES,
};
use radlab_core::kernel::{circle_point, Complex64};

const SPLIT: f64 = std::f64::consts::SQRT_2 - 1.0;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

const SWEEP_RADII: [f64; 7] = [0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35];

#[test]
fn sampled_members_respect_the_derivative_bound() {
    for family in FAMILIES {
        let members = sample_members(family, 1000, 42, 3);
        let report = bound_sweep(&members, &SWEEP_RADII, 256, 1e-9);
        assert_eq!(
            report.violations, 0,
            "{family}: worst {:?} (max excess {})",
            report.worst, report.max_excess
        );
        assert_eq!(report.samples, 1000 * SWEEP_RADII.len() * 256);
    }
}

#[test]
fn extremal_member_matches_closed_form_log_derivative() {
    for family in FAMILIES {
        let member = extremal_member(family);
        for i in 0..10 {
            for j in 0..10 {
                let z = Complex64::from_polar(
                    0.09 * (i + 1) as f64,
                    std::f64::consts::TAU * j as f64 / 10.0,
                );
                let a = member.log_derivative(z).unwrap();
                let b = extremal_log_derivative(family, z).unwrap();
                assert!((a - b).norm() < 1e-12, "{family} at {z}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn bound_is_strictly_increasing_on_the_first_branch() {
    for family in FAMILIES {
        let mut prev = derivative_bound(family, 0.0).unwrap();
        for i in 1..10_000 {
            let r = SPLIT * i as f64 / 9_999.0;
            let b = derivative_bound(family, r).unwrap();
            assert!(b > prev, "{family} not increasing at r = {r}");
            prev = b;
        }
    }
}

#[test]
fn t2_branches_agree_at_the_split() {
    // Second-branch formula written out independently.
    let r = SPLIT;
    let second = (1.0 + 4.0 * r + 6.0 * r * r + r.powi(4)) / (4.0 * (1.0 - r * r));
    let first = derivative_bound(Family::T2, r).unwrap();
    assert!((first - second).abs() < 1e-12, "{first} vs {second}");
}

#[test]
fn extremal_log_derivative_commutes_with_conjugation() {
    for family in FAMILIES {
        for i in 0..25 {
            let z = Complex64::from_polar(0.037 * (i + 1) as f64, 0.71 * i as f64);
            let a = extremal_log_derivative(family, z.conj()).unwrap();
            let b = extremal_log_derivative(family, z).unwrap().conj();
            assert!((a - b).norm() < 1e-14, "{family} at {z}");
        }
    }
}

#[test]
fn extremal_attains_the_bound_on_the_negative_axis() {
    for family in FAMILIES {
        for i in 1..=40 {
            let r = 0.01 * i as f64;
            let w = extremal_log_derivative(family, re(-r)).unwrap();
            let b = derivative_bound(family, r).unwrap();
            assert!(
                ((w - re(1.0)).norm() - b).abs() < 1e-12,
                "{family} at r = {r}: |w−1| = {} vs B = {b}",
                (w - re(1.0)).norm()
            );
        }
    }
}

#[test]
fn f1_derivative_matches_the_displayed_formula() {
    // f1′(z) = e^{2z}(4z² + 7z + 2)/(2√(1+z)), checked against a
    // fourth-order central difference of f1.
    let h = 5e-4;
    for i in 0..8 {
        for j in 0..12 {
            let z = Complex64::from_polar(0.1 * (i + 1) as f64, std::f64::consts::TAU * j as f64 / 12.0);
            if (z + re(1.0)).norm() < 0.2 {
                continue;
            }
            let formula = (2.0 * z).exp() * (4.0 * z * z + 7.0 * z + re(2.0))
                / (2.0 * radlab_core::kernel::principal_sqrt(re(1.0) + z));
            let f = |w: Complex64| extremal_value(Family::T1, w);
            let fd = (-f(z + re(2.0 * h)) + 8.0 * f(z + re(h)) - 8.0 * f(z - re(h))
                + f(z - re(2.0 * h)))
                / (12.0 * h);
            assert!((fd - formula).norm() < 1e-10, "at {z}: fd {fd} vs formula {formula}");
        }
    }
}

#[test]
fn member_log_derivative_matches_finite_differences() {
    for family in FAMILIES {
        for (mi, member) in sample_members(family, 5, 271, 4).iter().enumerate() {
            for k in 0..16 {
                let z = Complex64::from_polar(0.1 + 0.0375 * k as f64, 0.9 * k as f64);
                let h = 1e-5;
                let fd = (member.value(z + re(h)) - member.value(z - re(h))) / (2.0 * h);
                let oracle = z * fd / member.value(z);
                let analytic = member.log_derivative(z).unwrap();
                assert!(
                    (oracle - analytic).norm() < 1e-7,
                    "{family} member {mi} at {z}: {analytic} vs fd {oracle}"
                );
            }
        }
    }
}

#[test]
fn sampled_members_are_normalized() {
    let members = sample_members(Family::T2, 100, 7, 3);
    let report = normalization_sweep(&members, 1e-10);
    assert_eq!(report.violations, 0, "worst {:?}", report.worst);
}

#[test]
fn bound_sweep_flags_a_planted_violation() {
    // The extremal attains B(r) at θ = π, so a negative slack must trip.
    let members = vec![extremal_member(Family::T3)];
    let strict = bound_sweep(&members, &[0.35], 64, -1e-3);
    assert!(strict.violations > 0);
    let worst = strict.worst.unwrap();
    assert_eq!(worst.angle_index, 32, "violation should sit at θ = π");
    assert!(worst.excess > 0.0);
}

#[test]
fn starlike_sweep_sees_the_extremal_turn_negative() {
    for family in FAMILIES {
        let rho = radlab_core::radii::radius_univalence(family);
        let members = vec![extremal_member(family)];
        let inside = radlab_core::families::starlike_sweep(&members, 0.99 * rho, 256);
        assert_eq!(inside.violations, 0, "{family}: {:?}", inside.worst);
        let outside = radlab_core::families::starlike_sweep(&members, 1.01 * rho, 256);
        assert!(outside.violations > 0, "{family} should fail just outside");
    }
}

#[test]
fn circle_point_agrees_with_sample_circle() {
    let center = Complex64::new(0.3, -0.2);
    let pts = radlab_core::kernel::sample_circle(center, 0.7, 17);
    for (k, p) in pts.iter().enumerate() {
        assert_eq!(*p, circle_point(center, 0.7, k, 17));
    }
}
