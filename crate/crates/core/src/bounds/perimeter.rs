use std::f64::consts::PI;

use crate::interval::Interval;
use crate::reference::Axes;

/// Two enclosures of the quarter-perimeter `∫₀^{π/2} √(a² sin²θ + b² cos²θ) dθ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerimeterBounds {
    /// `[(π/6)(2a + b), (π/6)(a + 2b)]` for `b ≥ a`, from integrating the
    /// quadratic sandwich; the roles swap when `a > b`.
    pub quadratic: Interval,
    /// `[(π/4)(a + b), (π/4)√(2(a² + b²))]`.
    pub classical: Interval,
}

pub fn perimeter_bounds(ax: Axes) -> PerimeterBounds {
    let (minor, major) = if ax.a() <= ax.b() {
        (ax.a(), ax.b())
    } else {
        (ax.b(), ax.a())
    };
    PerimeterBounds {
        quadratic: Interval::ordered(
            PI / 6.0 * (2.0 * minor + major),
            PI / 6.0 * (minor + 2.0 * major),
        ),
        classical: Interval::ordered(
            PI / 4.0 * (minor + major),
            PI / 4.0 * (2.0 * (minor * minor + major * major)).sqrt(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{e_ab, integrate, QuadratureConfig};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn circle_is_exact() {
        let p = perimeter_bounds(Axes::new(1.0, 1.0).unwrap());
        assert_eq!(p.quadratic, Interval::point(FRAC_PI_2));
        assert!((p.classical.lo() - FRAC_PI_2).abs() < 1e-16);
        assert!((p.classical.hi() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn encloses_quadrature_of_literal_integral() {
        let v = integrate(
            |x: f64| (x.sin().powi(2) + 4.0 * x.cos().powi(2)).sqrt(),
            0.0,
            FRAC_PI_2,
            &QuadratureConfig::default(),
        )
        .unwrap()
        .value;
        let p = perimeter_bounds(Axes::new(1.0, 2.0).unwrap());
        assert!(p.quadratic.lo() < v && v <= p.quadratic.hi());
        assert!(p.classical.contains(v, 0.0));
    }

    #[test]
    fn symmetric_in_axes() {
        let ax = Axes::new(3.0, 0.5).unwrap();
        assert_eq!(perimeter_bounds(ax), perimeter_bounds(ax.swapped()));
        assert!(perimeter_bounds(ax)
            .quadratic
            .contains(e_ab(ax).unwrap().value, 0.0));
    }

    #[test]
    fn quadratic_upper_beats_classical_past_ratio_seven() {
        let at = |r: f64| perimeter_bounds(Axes::new(1.0, r).unwrap());
        let eight = at(8.0);
        assert!((eight.quadratic.hi() - 17.0 * PI / 6.0).abs() < 1e-14);
        assert!(eight.quadratic.hi() < PI / 4.0 * 130f64.sqrt());
        assert!(eight.quadratic.hi() < eight.classical.hi());
        // equal at b = 7a
        let seven = at(7.0);
        assert!((seven.quadratic.hi() - seven.classical.hi()).abs() < 1e-14);
        assert!(at(6.0).quadratic.hi() > at(6.0).classical.hi());
    }
}
