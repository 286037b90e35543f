//! The built-in records and their default grids.

use std::f64::consts::{FRAC_PI_2, PI};

use super::grid::{Axis, Grid};
use super::record::{InequalityRecord, Mode};
use crate::bounds::{self, amm, tchebycheff as tch};
use crate::error::{Error, Result};
use crate::reference::{
    e_ab, e_agm, f_ab, f_agm, integrate, pi_quad, Axes, Modulus, QuadratureConfig,
};

// ---- evaluators ----------------------------------------------------------

fn modulus(p: &[f64]) -> Result<Modulus> {
    Modulus::new(p[0])
}

fn axes(p: &[f64]) -> Result<Axes> {
    Axes::new(p[0], p[1])
}

fn e_ref(p: &[f64]) -> Result<f64> {
    Ok(e_agm(modulus(p)?)?.value)
}

fn f_ref(p: &[f64]) -> Result<f64> {
    Ok(f_agm(modulus(p)?)?.value)
}

fn pi_ref(p: &[f64]) -> Result<f64> {
    Ok(pi_quad(modulus(p)?, p[1], &QuadratureConfig::default())?.value)
}

fn quad(f: fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    Ok(integrate(f, lo, hi, &QuadratureConfig::default())?.value)
}

fn e_log(p: &[f64]) -> Result<crate::interval::Interval> {
    Ok(bounds::e_log_bounds(modulus(p)?))
}

fn f_ab_iv(p: &[f64]) -> Result<crate::interval::Interval> {
    bounds::f_ab_bounds(axes(p)?)
}

fn perimeter(p: &[f64]) -> Result<bounds::PerimeterBounds> {
    Ok(bounds::perimeter_bounds(axes(p)?))
}

fn sandwich(p: &[f64]) -> Result<(f64, f64)> {
    bounds::quadratic_sandwich(p[0], p[1])
}

fn amm_point(p: &[f64]) -> Result<(f64, f64, f64)> {
    amm::pointwise(p[0])
}

fn trap_e(p: &[f64]) -> Result<bounds::TrapezoidBound> {
    Ok(bounds::trapezoid_e(modulus(p)?))
}

fn trap_f(p: &[f64]) -> Result<bounds::TrapezoidBound> {
    Ok(bounds::trapezoid_f(modulus(p)?))
}

fn not_finite(what: &str) -> Error {
    Error::Domain(format!("{what} is not finite"))
}

fn checked(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(not_finite(what))
    }
}

// ---- guards --------------------------------------------------------------

fn always(_: &[f64]) -> bool {
    true
}

fn unit_modulus(p: &[f64]) -> bool {
    p[0] > 0.0 && p[0] < 1.0
}

fn b_exceeds_a(p: &[f64]) -> bool {
    p[0] > 0.0 && p[1] > p[0]
}

fn positive_axes(p: &[f64]) -> bool {
    p[0] > 0.0 && p[1] > 0.0
}

fn characteristic(p: &[f64]) -> bool {
    unit_modulus(p) && p[1] > -1.0
}

// ---- grids ---------------------------------------------------------------

fn modulus_grid() -> Grid {
    Grid::product(vec![Axis::linear(0.001, 0.999, 1000)
        .expect("static grid")
        .refine_near_one(24)])
}

fn fine_modulus_grid() -> Grid {
    Grid::product(vec![Axis::linear(0.0005, 0.9995, 2000)
        .expect("static grid")
        .refine_near_one(24)])
}

fn characteristic_grid() -> Grid {
    Grid::product(vec![
        Axis::linear(0.01, 0.99, 1000).expect("static grid"),
        Axis::linear(-0.99, 4.0, 1000).expect("static grid"),
    ])
}

fn axes_grid() -> Grid {
    Grid::product(vec![
        Axis::log(0.01, 100.0, 1000).expect("static grid"),
        Axis::log(0.01, 100.0, 1000).expect("static grid"),
    ])
}

fn angle_grid() -> Grid {
    Grid::product(vec![
        Axis::linear(0.005, 5.0, 1000).expect("static grid"),
        Axis::linear(0.0, FRAC_PI_2, 1000).expect("static grid"),
    ])
}

fn unit_interval_grid() -> Grid {
    Grid::product(vec![Axis::linear(0.0, 1.0, 10_001).expect("static grid")])
}

// ---- records -------------------------------------------------------------

const T: &[&str] = &["t"];
const TH: &[&str] = &["t", "h"];
const AB: &[&str] = &["a", "b"];
const NONE: &[&str] = &[];

fn modulus_record(
    id: &'static str,
    statement: &'static str,
    lower: Option<super::record::Evaluator>,
    middle: super::record::Evaluator,
    upper: Option<super::record::Evaluator>,
) -> InequalityRecord {
    InequalityRecord {
        id,
        statement,
        guard_text: "0 < t < 1",
        params: T,
        mode: Mode::Enforce,
        strict: true,
        guard: unit_modulus,
        lower,
        middle,
        upper,
        default_grid: modulus_grid,
    }
}

fn constant_record(
    id: &'static str,
    statement: &'static str,
    lower: Option<super::record::Evaluator>,
    middle: super::record::Evaluator,
    upper: Option<super::record::Evaluator>,
) -> InequalityRecord {
    InequalityRecord {
        id,
        statement,
        guard_text: "none",
        params: NONE,
        mode: Mode::Enforce,
        strict: true,
        guard: always,
        lower,
        middle,
        upper,
        default_grid: Grid::unit,
    }
}

fn amm_ref(_: &[f64]) -> Result<f64> {
    Ok(amm::integral(&QuadratureConfig::default())?.value)
}

/// Every built-in record, in a fixed order.
pub fn register_builtin() -> Vec<InequalityRecord> {
    vec![
        modulus_record(
            "thm1",
            "π/2 − ½·ln((1+t)^(1+t)·(1−t)^(1−t)) < E(t) < (π−1)/2 + (1−t²)/(4t)·ln((1+t)/(1−t))",
            Some(|p| Ok(e_log(p)?.lo())),
            e_ref,
            Some(|p| Ok(e_log(p)?.hi())),
        ),
        modulus_record(
            "thm1_quotient_lower",
            "π/2 − ½·ln((1+t)^(1−t) / (1−t)^(1+t)) < E(t)",
            Some(|p| Ok(bounds::e_log_lower_quotient_form(modulus(p)?))),
            e_ref,
            None,
        ),
        InequalityRecord {
            id: "thm2",
            statement: "(π/2)·ln(√(b/a) + √(b/a − 1))/√(b(b−a)) < F(a,b) < (π/2)·arctan√(b/a − 1)/√(a(b−a))",
            guard_text: "b > a > 0",
            params: AB,
            mode: Mode::Enforce,
            strict: true,
            guard: b_exceeds_a,
            lower: Some(|p| Ok(f_ab_iv(p)?.lo())),
            middle: |p| Ok(f_ab(axes(p)?)?.value),
            upper: Some(|p| Ok(f_ab_iv(p)?.hi())),
            default_grid: axes_grid,
        },
        InequalityRecord {
            strict: false,
            default_grid: fine_modulus_grid,
            ..modulus_record(
                "thm3",
                "|(2/π)·E(t) − (1 + √(1−t²))/2| ≤ ½(1 − √(1−t²))·[1 − (2/π)·√((1−t²+√(1−t²))(1+√(1−t²)))/((√(1−t²)+1)·⁴√(1−t²))]",
                Some(|p| Ok(trap_e(p)?.lo())),
                |p| Ok(2.0 / PI * e_ref(p)?),
                Some(|p| Ok(trap_e(p)?.hi())),
            )
        },
        InequalityRecord {
            strict: false,
            default_grid: fine_modulus_grid,
            ..modulus_record(
                "thm4",
                "|(2/π)·F(t) − (√(1−t²)+1)/(2√(1−t²))| ≤ ½(1 − √(1−t²))/√(1−t²)·[1 − (2/π)(1 − √(1−t²))(2 − t² − w)^(3/2)/√((1−t²)(w + t² − 1)(1 − w))], w = √(t⁴ − t² + 1)",
                Some(|p| Ok(trap_f(p)?.lo())),
                |p| Ok(2.0 / PI * f_ref(p)?),
                Some(|p| Ok(trap_f(p)?.hi())),
            )
        },
        InequalityRecord {
            strict: false,
            mode: Mode::Observe,
            default_grid: fine_modulus_grid,
            ..modulus_record(
                "thm3_printed",
                "the same enclosure of (2/π)·E(t) with prefactor 1/π in place of 1/2",
                Some(|p| {
                    let b = trap_e(p)?;
                    Ok(b.center - b.printed_radius)
                }),
                |p| Ok(2.0 / PI * e_ref(p)?),
                Some(|p| {
                    let b = trap_e(p)?;
                    Ok(b.center + b.printed_radius)
                }),
            )
        },
        InequalityRecord {
            strict: false,
            mode: Mode::Observe,
            default_grid: fine_modulus_grid,
            ..modulus_record(
                "thm4_printed",
                "the same enclosure of (2/π)·F(t) with prefactor 1/π in place of 1/2",
                Some(|p| {
                    let b = trap_f(p)?;
                    Ok(b.center - b.printed_radius)
                }),
                |p| Ok(2.0 / PI * f_ref(p)?),
                Some(|p| {
                    let b = trap_f(p)?;
                    Ok(b.center + b.printed_radius)
                }),
            )
        },
        modulus_record(
            "eq9",
            "π·arcsin(t)/(2t) < F(t) < (π/(4t))·ln((1+t)/(1−t))",
            Some(|p| Ok(tch::f_arcsin_lower(p[0]))),
            f_ref,
            Some(|p| Ok(tch::f_log_upper(p[0]))),
        ),
        InequalityRecord {
            mode: Mode::Observe,
            ..modulus_record(
                "eq10",
                "E(t) < (16 − 4t² − 3t⁴)/(4(4 + t²))·F(t)",
                None,
                e_ref,
                Some(|p| Ok(tch::e_over_f_upper_factor(p[0]) * f_ref(p)?)),
            )
        },
        InequalityRecord {
            id: "eq11",
            statement: "F(t) < (1 + h/2)·Π(t,h)",
            guard_text: "−1 < h < 0, or h > t²/(2 − 3t²) > 0",
            params: TH,
            mode: Mode::Enforce,
            strict: true,
            guard: |p| characteristic(p) && tch::third_kind_guard(p[0], p[1]),
            lower: Some(|p| checked(f_ref(p)? / tch::third_kind_factor(p[1]), "F/(1 + h/2)")),
            middle: pi_ref,
            upper: None,
            default_grid: characteristic_grid,
        },
        InequalityRecord {
            id: "eq11_reversed",
            statement: "F(t) > (1 + h/2)·Π(t,h)",
            guard_text: "0 < 2h < t²",
            params: TH,
            mode: Mode::Enforce,
            strict: true,
            guard: |p| characteristic(p) && tch::third_kind_reversed_guard(p[0], p[1]),
            lower: None,
            middle: pi_ref,
            upper: Some(|p| checked(f_ref(p)? / tch::third_kind_factor(p[1]), "F/(1 + h/2)")),
            default_grid: characteristic_grid,
        },
        InequalityRecord {
            id: "eq12",
            statement: "Π(t,h)·E(t) > π²/(4√(1+h))",
            guard_text: "−2 < 2h < t²",
            params: TH,
            mode: Mode::Enforce,
            strict: true,
            guard: |p| characteristic(p) && tch::product_guard(p[0], p[1]),
            lower: Some(|p| Ok(tch::product_bound(p[1]))),
            middle: |p| Ok(pi_ref(p)? * e_ref(p)?),
            upper: None,
            default_grid: characteristic_grid,
        },
        InequalityRecord {
            id: "eq12_reversed",
            statement: "Π(t,h)·E(t) < π²/(4√(1+h))",
            guard_text: "h > t²/(2 − 3t²) > 0",
            params: TH,
            mode: Mode::Enforce,
            strict: true,
            guard: |p| characteristic(p) && tch::product_reversed_guard(p[0], p[1]),
            lower: None,
            middle: |p| Ok(pi_ref(p)? * e_ref(p)?),
            upper: Some(|p| Ok(tch::product_bound(p[1]))),
            default_grid: characteristic_grid,
        },
        InequalityRecord {
            guard_text: "0 < t, t² ≤ 2/3",
            guard: |p| unit_modulus(p) && tch::lower_factor_guard(p[0]),
            strict: false,
            ..modulus_record(
                "eq13",
                "E(t) ≥ (16 − 28t² + 9t⁴)/(4(4 − 5t²))·F(t)",
                Some(|p| Ok(tch::e_over_f_lower_factor(p[0]) * f_ref(p)?)),
                e_ref,
                None,
            )
        },
        constant_record(
            "eq14",
            "π²/(4√2) < ∫₀^{π/2} (1 − sin²x/2)^(−1/2) dx < π·ln(1+√2)/√2",
            Some(|_| Ok(tch::LEMNISCATIC_LOWER)),
            |_| quad(tch::lemniscatic_integrand, 0.0, FRAC_PI_2),
            Some(|_| Ok(tch::LEMNISCATIC_UPPER)),
        ),
        constant_record(
            "eq15",
            "∫₀^{π/2} (1 + cos(x)/2)^(−1) dx < π(ln 3 − ln 2)/2",
            None,
            |_| quad(tch::half_cos_integrand, 0.0, FRAC_PI_2),
            Some(|_| Ok(tch::HALF_COS_UPPER)),
        ),
        constant_record(
            "eq16",
            "∫₀^{π/2} (1 − sin(x)/2)^(−1) dx > π·ln(2)/2",
            Some(|_| Ok(tch::HALF_SIN_LOWER)),
            |_| quad(tch::half_sin_integrand, 0.0, FRAC_PI_2),
            None,
        ),
        InequalityRecord {
            strict: false,
            ..constant_record(
                "eq16_shift",
                "∫₀^{π/2} (1 − sin(x)/2)^(−1) dx = ∫_{π/2}^{π} (1 + cos(x)/2)^(−1) dx",
                Some(|_| quad(tch::half_cos_integrand, FRAC_PI_2, PI)),
                |_| quad(tch::half_sin_integrand, 0.0, FRAC_PI_2),
                Some(|_| quad(tch::half_cos_integrand, FRAC_PI_2, PI)),
            )
        },
        constant_record(
            "amm",
            "π/6 < ∫₀¹ dx/√(4 − x² − x³) < π√2/8",
            Some(|_| Ok(amm::POSED_LOWER)),
            amm_ref,
            Some(|_| Ok(amm::POSED_UPPER)),
        ),
        constant_record(
            "amm_b1",
            "3/10 + 27√2/160 < ∫₀¹ dx/√(4 − x² − x³)",
            Some(|_| Ok(amm::LOWER_B1)),
            amm_ref,
            None,
        ),
        constant_record(
            "amm_b2",
            "1/4 + 19√2/96 < ∫₀¹ dx/√(4 − x² − x³)",
            Some(|_| Ok(amm::LOWER_B2)),
            amm_ref,
            None,
        ),
        constant_record(
            "amm_b3",
            "1/5 + 19√2/80 < ∫₀¹ dx/√(4 − x² − x³)",
            Some(|_| Ok(amm::LOWER_B3)),
            amm_ref,
            None,
        ),
        constant_record(
            "amm_upper",
            "∫₀¹ dx/√(4 − x² − x³) < 79/192 + √2/10",
            None,
            amm_ref,
            Some(|_| Ok(amm::IMPROVED_UPPER)),
        ),
        InequalityRecord {
            id: "ellipse_perimeter",
            statement: "(π/6)(2a + b) < ∫₀^{π/2} √(a²sin²θ + b²cos²θ) dθ ≤ (π/6)(a + 2b) for b ≥ a; a and b swap roles otherwise",
            guard_text: "a > 0, b > 0",
            params: AB,
            mode: Mode::Enforce,
            strict: true,
            guard: positive_axes,
            lower: Some(|p| Ok(perimeter(p)?.quadratic.lo())),
            middle: |p| Ok(e_ab(axes(p)?)?.value),
            upper: Some(|p| Ok(perimeter(p)?.quadratic.hi())),
            default_grid: axes_grid,
        },
        InequalityRecord {
            id: "ellipse_classical",
            statement: "(π/4)(a + b) ≤ ∫₀^{π/2} √(a²sin²θ + b²cos²θ) dθ ≤ (π/4)√(2(a² + b²))",
            guard_text: "a > 0, b > 0",
            params: AB,
            mode: Mode::Enforce,
            strict: false,
            guard: positive_axes,
            lower: Some(|p| Ok(perimeter(p)?.classical.lo())),
            middle: |p| Ok(e_ab(axes(p)?)?.value),
            upper: Some(|p| Ok(perimeter(p)?.classical.hi())),
            default_grid: axes_grid,
        },
        InequalityRecord {
            id: "pointwise_81",
            statement: "−(8/π²)(√(1+t²) − 1)·θ(π/2 − θ) ≤ √(1 + t²cos²θ) − [√(1+t²) − (4/π²)(√(1+t²) − 1)θ²] ≤ 0",
            guard_text: "t > 0, 0 ≤ θ ≤ π/2",
            params: &["t", "theta"],
            mode: Mode::Enforce,
            strict: false,
            guard: |p| p[0] > 0.0 && (0.0..=FRAC_PI_2).contains(&p[1]),
            lower: Some(|p| Ok(sandwich(p)?.0)),
            middle: |p| Ok(sandwich(p)?.1),
            upper: Some(|_| Ok(0.0)),
            default_grid: angle_grid,
        },
        InequalityRecord {
            id: "pointwise_37_75",
            statement: "1/2 + (√2−1)x⁴/2 + (11√2/8 − 2)(1−x)x³ ≤ (4 − x² − x³)^(−1/2) ≤ 1/2 + (√2−1)x²/2 + ((5 − 4√2)/8)x²(1−x)((8√2 − 9)/(8√2 − 10) + x)",
            guard_text: "0 ≤ x ≤ 1",
            params: &["x"],
            mode: Mode::Enforce,
            strict: false,
            guard: |p| (0.0..=1.0).contains(&p[0]),
            lower: Some(|p| Ok(amm_point(p)?.0)),
            middle: |p| Ok(amm_point(p)?.1),
            upper: Some(|p| Ok(amm_point(p)?.2)),
            default_grid: unit_interval_grid,
        },
    ]
}

/// Looks a record up by id.
pub fn find(id: &str) -> Result<InequalityRecord> {
    register_builtin()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownRecord(id.to_string()))
}

/// Ids of every built-in record, in registry order.
pub fn ids() -> Vec<&'static str> {
    register_builtin().iter().map(|r| r.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::sweep;
    use std::collections::HashSet;

    #[test]
    fn registry_shape() {
        let recs = register_builtin();
        assert!(recs.len() >= 14);
        let unique: HashSet<_> = recs.iter().map(|r| r.id).collect();
        assert_eq!(unique.len(), recs.len());
        for r in &recs {
            assert!(r.lower.is_some() || r.upper.is_some(), "{}", r.id);
            let g = (r.default_grid)();
            assert_eq!(g.arity(), Some(r.params.len()), "{}", r.id);
        }
        for id in [
            "thm1",
            "thm2",
            "thm3",
            "thm4",
            "eq9",
            "eq10",
            "eq11",
            "eq11_reversed",
            "eq12",
            "eq12_reversed",
            "eq13",
            "eq14",
            "eq15",
            "eq16",
            "amm",
            "amm_b1",
            "amm_b2",
            "amm_b3",
            "amm_upper",
            "ellipse_perimeter",
            "pointwise_81",
            "pointwise_37_75",
        ] {
            assert!(unique.contains(id), "missing {id}");
        }
        assert!(matches!(find("nope"), Err(Error::UnknownRecord(_))));
    }

    #[test]
    fn guard_examples() {
        assert!(!(find("eq13").unwrap().guard)(&[0.9]));
        assert!((find("eq11_reversed").unwrap().guard)(&[0.8, 0.2]));
        let eq9 = find("eq9").unwrap();
        let lo = (eq9.lower.unwrap())(&[0.5]).unwrap();
        assert!((lo - PI * PI / 6.0).abs() < 1e-15);
    }

    #[test]
    fn eq14_singleton() {
        let r = sweep(&find("eq14").unwrap(), &Grid::unit(), 1e-12).unwrap();
        assert_eq!(r.summary.failures, 0);
        let row = &r.rows[0];
        assert_eq!(row.lo, Some(PI * PI / (4.0 * 2f64.sqrt())));
        assert!(row.reference.unwrap() < row.hi.unwrap());
    }

    #[test]
    fn eq13_skips_rather_than_fails() {
        let g = Grid::points(vec![vec![0.5], vec![0.9]]);
        let r = sweep(&find("eq13").unwrap(), &g, 1e-12).unwrap();
        assert_eq!(
            (r.summary.total, r.summary.skipped, r.summary.failures),
            (1, 1, 0)
        );
    }

    #[test]
    fn third_kind_guards_never_overlap() {
        let pts = Grid::product(vec![
            Axis::linear(0.01, 0.99, 60).unwrap(),
            Axis::linear(-0.99, 4.0, 60).unwrap(),
        ])
        .expand()
        .unwrap();
        let g = |id: &str| find(id).unwrap().guard;
        for p in &pts {
            assert!(!(g("eq11")(p) && g("eq11_reversed")(p)), "{p:?}");
            assert!(!(g("eq12")(p) && g("eq12_reversed")(p)), "{p:?}");
        }
    }

    #[test]
    fn eq15_as_stated_fails() {
        let r = sweep(&find("eq15").unwrap(), &Grid::unit(), 1e-10).unwrap();
        assert_eq!(r.summary.failures, 1);
        assert!(r.summary.max_violation > 0.5);
    }
}
