//! Invariants of the closed-form geometry, special functions and bounds.

use std::f64::consts::{PI, TAU};

use hypcap::bounds::{b1, b2, cap_seg, jung_h, jung_th_half, qc_diameter_bound};
use hypcap::hyperbolic::{geodesic_segment, hyp_ball, mobius, mobius_inv, rho_disk};
use hypcap::io::fmt_num;
use hypcap::shapes::{hyp_reuleaux, reuleaux_radius_for_diameter, reuleaux_vertex_distance};
use hypcap::special::{complement, gamma2, mu, tau2};
use hypcap::Point;
use proptest::prelude::*;

fn disk_point() -> impl Strategy<Value = Point> {
    (0.0..0.97f64, 0.0..TAU).prop_map(|(r, a)| Point::from_polar(r, a))
}

proptest! {
    #[test]
    fn rho_is_a_metric(x in disk_point(), y in disk_point(), z in disk_point()) {
        let d = rho_disk(x, y).unwrap();
        prop_assert!(d >= 0.0);
        prop_assert!((d - rho_disk(y, x).unwrap()).abs() <= 1e-12 * d.max(1.0));
        prop_assert!(d <= rho_disk(x, z).unwrap() + rho_disk(z, y).unwrap() + 1e-12);
    }

    #[test]
    fn rho_is_mobius_invariant(x in disk_point(), y in disk_point(), a in disk_point()) {
        let d = rho_disk(x, y).unwrap();
        let moved = rho_disk(mobius(a, x), mobius(a, y)).unwrap();
        prop_assert!((d - moved).abs() <= 1e-9 * d.max(1.0));
        prop_assert!((mobius_inv(a, mobius(a, x)) - x).norm() < 1e-12);
    }

    #[test]
    fn ball_boundary_is_at_the_radius(q in disk_point(), radius in 0.05..4.0f64, angle in 0.0..TAU) {
        let ball = hyp_ball(q, radius).unwrap();
        prop_assert!(ball.contains(q));
        let edge = ball.euclid_center + Point::from_polar(ball.euclid_radius, angle);
        prop_assert!((rho_disk(q, edge).unwrap() - radius).abs() < 1e-8 * radius.max(1.0));
    }

    #[test]
    fn geodesic_points_are_equally_spaced(x in disk_point(), y in disk_point()) {
        prop_assume!((x - y).norm() > 1e-6);
        let pts = geodesic_segment(x, y, 6).unwrap();
        let total = rho_disk(x, y).unwrap();
        for w in pts.windows(2) {
            prop_assert!((rho_disk(w[0], w[1]).unwrap() - total / 5.0).abs() < 1e-8 * total.max(1.0));
        }
    }

    #[test]
    fn mu_reflection_identity(exponent in -7.0..-0.151f64) {
        // the pair is derived from the larger modulus so that both are exact complements
        let large = complement(10f64.powf(exponent));
        let small = complement(large);
        prop_assert!((mu(small).unwrap() * mu(large).unwrap() - PI * PI / 4.0).abs() < 1e-10);
    }

    #[test]
    fn mu_is_decreasing(r in 1e-6..0.999f64, step in 1e-4..1e-3f64) {
        prop_assert!(mu(r).unwrap() > mu(r + step).unwrap());
    }

    #[test]
    fn teichmuller_from_grotzsch(s in 0.01..100.0f64) {
        let direct = gamma2((s + 1.0).sqrt()).unwrap() / 2.0;
        prop_assert!((tau2(s).unwrap() - direct).abs() < 1e-10 * direct);
    }

    #[test]
    fn bounds_are_ordered(t in 0.17..7.1f64) {
        let (seg, low, high) = (cap_seg(t).unwrap(), b1(t).unwrap(), b2(t).unwrap());
        prop_assert!(seg < low && low <= high);
    }

    #[test]
    fn planar_jung_bound_matches_its_definition(t in 0.05..10.0f64) {
        // beyond this range the direct form below cancels in 1 − th(h/2)
        let h = jung_h(2, t).unwrap();
        let direct = TAU / (1.0 / (h / 2.0).tanh()).ln();
        prop_assert!((b2(t).unwrap() - direct).abs() < 1e-12 * direct);
        prop_assert!((jung_th_half(2, t).unwrap() - (h / 2.0).tanh()).abs() < 1e-14);
    }

    #[test]
    fn jung_radius_between_half_and_upper_bound(n in 2u32..=10, t in 1e-3..50.0f64) {
        let h = jung_h(n, t).unwrap();
        let nf = n as f64;
        prop_assert!(h >= t / 2.0 * (1.0 - 1e-12));
        prop_assert!(h <= t / (2.0 * (nf + 1.0) / nf).sqrt() * (1.0 + 1e-12));
    }

    #[test]
    fn sinh_quotient_is_increasing(k in prop::sample::select(vec![0.1, 1.0, 10.0]), x in 0.05..5.0f64, dx in 1e-3..1.0f64) {
        let f = |x: f64| (k * x).sinh() / x;
        prop_assert!(f(x + dx) > f(x));
        if x >= 1.0 {
            prop_assert!(x * k.sinh() <= (k * x).sinh() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn qc_bound_weakens_with_dilatation(t in 0.01..5.0f64, k in 1.0..10.0f64) {
        let a = qc_diameter_bound(k, t).unwrap();
        let b = qc_diameter_bound(k + 1.0, t).unwrap();
        prop_assert!(b.value >= a.value);
        prop_assert_eq!(a.vacuous, a.value >= 1.0);
    }

    #[test]
    fn reuleaux_diameter_round_trip(r in 0.01..0.97f64) {
        let t = reuleaux_vertex_distance(r);
        prop_assert!((reuleaux_radius_for_diameter(t).unwrap() - r).abs() < 1e-12);
        let tri = hyp_reuleaux(r).unwrap();
        for v in tri.vertices {
            prop_assert!(tri.contains(v));
        }
        prop_assert!(!tri.contains(Point::new(0.0, 0.0) + (r + 1e-6)));
    }

    #[test]
    fn numbers_survive_formatting(v in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        let back: f64 = fmt_num(v).parse().unwrap();
        prop_assert_eq!(back, if v == 0.0 { 0.0 } else { v });
    }
}
