use std::f64::consts::PI;

use bohr_core::bohr::{bohr_value, finite_bohr_sum, sup_on_circle, Radius};
use bohr_core::schwarz::moebius_series;
use bohr_core::series::TruncatedSeries;
use num_complex::Complex64;
use proptest::prelude::*;

fn series(v: &[(f64, f64)]) -> TruncatedSeries {
    TruncatedSeries::new(v.iter().map(|&(re, im)| Complex64::new(re, im)).collect()).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bohr_sum_is_monotone_in_r(a in coeffs(), r1 in 0.0f64..0.99, r2 in 0.0f64..0.99) {
        let s = series(&a);
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        prop_assert!(finite_bohr_sum(&s, lo) <= finite_bohr_sum(&s, hi));
    }

    #[test]
    fn moebius_bracket_contains_closed_form(a in 0.0f64..0.999, r in 0.0f64..0.9) {
        let f = moebius_series(a, 64).unwrap();
        let v = bohr_value(&f, Radius::new(r).unwrap(), Some(1.0));
        let exact = a + (1.0 - a * a) * r / (1.0 - a * r);
        prop_assert!(v.lower - 1e-14 <= exact && exact <= v.upper() + 1e-14, "{:?} vs {}", v, exact);
    }

    #[test]
    fn bohr_value_is_absolutely_homogeneous(a in coeffs(), r in 0.0f64..0.99, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let s = series(&a);
        let alpha = Complex64::new(re, im);
        let lhs = finite_bohr_sum(&s.scale(alpha), r);
        let rhs = alpha.norm() * finite_bohr_sum(&s, r);
        prop_assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs));
    }

    #[test]
    fn sup_bracket_contains_probes(a in coeffs(), r in 0.01f64..0.99, probes in prop::collection::vec(0.0f64..1.0, 16)) {
        let p = series(&a);
        let v = sup_on_circle(&p, Radius::new(r).unwrap(), 256).unwrap();
        for t in probes {
            let z = Complex64::from_polar(r, 2.0 * PI * t);
            prop_assert!(p.eval(z).norm() <= v.upper() + 1e-13);
        }
        prop_assert!(v.upper() <= finite_bohr_sum(&p, r) + 1e-13);
        prop_assert!(v.lower <= v.upper());
    }

    #[test]
    fn sup_of_moebius_matches_closed_form(a in 0.0f64..0.99, r in 0.0f64..0.95) {
        let f = moebius_series(a, 64).unwrap();
        let v = sup_on_circle(&f, Radius::new(r).unwrap(), 4096).unwrap();
        // the maximum sits at z = -r
        let exact = (a + r) / (1.0 + a * r);
        let tail = r.powi(65) / (1.0 - r);
        prop_assert!(v.lower <= exact + tail + 1e-14 && exact - tail - 1e-14 <= v.upper(), "{:?} vs {}", v, exact);
    }
}
