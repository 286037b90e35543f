use std::f64::consts::{FRAC_PI_2, PI};

use ellip_core::bounds::{
    e_log_bounds, e_log_lower_quotient_form, f_ab_bounds, perimeter_bounds, quadratic_sandwich,
    trapezoid_e, trapezoid_f,
};
use ellip_core::combinatorics::{central_binom_log_bounds, ln_central_binom_ratio};
use ellip_core::reference::{e_ab, e_agm, f_ab, f_agm, Axes, Modulus};
use proptest::prelude::*;

fn m(t: f64) -> Modulus {
    Modulus::new(t).unwrap()
}

proptest! {
    #[test]
    fn log_bounds_enclose_e(t in 1e-6f64..0.999_999) {
        let e = e_agm(m(t)).unwrap().value;
        let iv = e_log_bounds(m(t));
        prop_assert!(iv.contains(e, 1e-15));
        // the quotient form is a lower bound too, only weaker
        let q = e_log_lower_quotient_form(m(t));
        prop_assert!(q <= iv.lo() + 1e-15 && q <= e);
    }

    #[test]
    fn ab_bounds_enclose_and_scale(a in 1e-2f64..1e2, excess in 1e-6f64..1e2, scale in 1e-2f64..1e2) {
        let b = a * (1.0 + excess);
        let ax = Axes::new(a, b).unwrap();
        let f = f_ab(ax).unwrap().value;
        let iv = f_ab_bounds(ax).unwrap();
        prop_assert!(iv.contains(f, 1e-14 * f));
        // F(λa, λb) = F(a, b)/λ, and the bounds follow
        let scaled = f_ab_bounds(Axes::new(scale * a, scale * b).unwrap()).unwrap();
        prop_assert!((scaled.lo() * scale - iv.lo()).abs() <= 1e-12 * iv.lo());
    }

    #[test]
    fn trapezoid_bounds_enclose(t in 1e-4f64..0.9999) {
        let (e, f) = (e_agm(m(t)).unwrap().value, f_agm(m(t)).unwrap().value);
        let (be, bf) = (trapezoid_e(m(t)), trapezoid_f(m(t)));
        prop_assert!((e / FRAC_PI_2 - be.center).abs() <= be.radius * (1.0 + 1e-12));
        prop_assert!((f / FRAC_PI_2 - bf.center).abs() <= bf.radius * (1.0 + 1e-12));
    }

    #[test]
    fn sandwich_is_ordered(t in 1e-3f64..5.0, theta in 0.0f64..FRAC_PI_2) {
        let (lhs, mid) = quadratic_sandwich(t, theta).unwrap();
        prop_assert!(lhs <= mid + 1e-13 && mid <= 1e-13);
    }

    #[test]
    fn perimeter_bounds_enclose(a in 1e-2f64..1e2, b in 1e-2f64..1e2) {
        // E(a, b) integrates √(a²cos²θ + b²sin²θ), the quarter-perimeter
        let p = e_ab(Axes::new(a, b).unwrap()).unwrap().value;
        let pb = perimeter_bounds(Axes::new(a, b).unwrap());
        prop_assert!(pb.quadratic.contains(p, 1e-13 * p));
        prop_assert!(pb.classical.contains(p, 1e-13 * p));
    }
}

#[test]
fn central_binomial_log_bounds_hold_to_ten_thousand() {
    for i in (1..=10_000).step_by(37) {
        let iv = central_binom_log_bounds(i).unwrap();
        assert!(iv.contains_strictly(ln_central_binom_ratio(i)), "i = {i}");
    }
}

#[test]
fn quadratic_perimeter_beats_classical_for_elongated_ellipses() {
    for r in [7.0, 8.0, 20.0] {
        let pb = perimeter_bounds(Axes::new(1.0, r).unwrap());
        assert!(pb.quadratic.hi() < pb.classical.hi(), "b/a = {r}");
    }
    // and not for nearly round ones
    let pb = perimeter_bounds(Axes::new(1.0, 2.0).unwrap());
    assert!(pb.quadratic.hi() > pb.classical.hi());
    assert!(pb.quadratic.lo() > PI / 4.0 * 3.0 - 1.0);
}
