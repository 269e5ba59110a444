use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use nevanlinna::asymptotics::{expansion_terms, remainder_closed_form_n1, remainder_rnm, taylor_remainder_n1};
use nevanlinna::cases::{default_t_grid, log_unit_ball_root, log_unit_ball_volume, HFamily};
use nevanlinna::classes::{check_cm, post_widder_density, xl_transform, DEFAULT_CM_TOL};
use nevanlinna::func::builtin;
use nevanlinna::halfplane::{evaluate_stieltjes, lowner_matrix, verify_pick, HalfPlaneGrid, MeasureSpec, StieltjesRep};
use nevanlinna::invgamma::{branch_inverse_g_k, invert_log_gamma};
use nevanlinna::numerics::{derivative_n, integrate, series_divide, series_multiply, Grid, PowerSeries, QuadratureConfig};
use nevanlinna::special::{
    digamma, gamma, incomplete_gamma, ln_gamma, log_barnes_g, log_gamma_principal, log_multiple_gamma, LOG_SQRT_TWO_PI,
};

fn upper_half_plane(r_min: f64, r_max: f64) -> impl Strategy<Value = Complex64> {
    (r_min..r_max, 0.02..PI - 0.02).prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integrate_is_linear(a in -3.0..3.0f64, b in -3.0..3.0f64, p in 0.5..4.0f64, q in 0.1..3.0f64) {
        let cfg = QuadratureConfig::default();
        let f = |t: f64| (-p * t).exp();
        let g = |t: f64| 1.0 / (1.0 + q * t * t);
        let lhs = integrate(|t| a * f(t) + b * g(t), 0.0, 5.0, &cfg).unwrap().value;
        let rhs = a * integrate(f, 0.0, 5.0, &cfg).unwrap().value + b * integrate(g, 0.0, 5.0, &cfg).unwrap().value;
        prop_assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn series_divide_inverts_multiply(coeffs in prop::collection::vec(-9i64..9, 1..8), den in prop::collection::vec(-9i64..9, 0..7), d0 in 1i64..5) {
        let order = 8;
        let a = PowerSeries::from_integers(&coeffs, order);
        let mut d = vec![d0];
        d.extend(den);
        let b = PowerSeries::from_integers(&d, order);
        prop_assert_eq!(series_divide(&series_multiply(&a, &b), &b).unwrap(), a);
    }

    #[test]
    fn zeroth_derivative_is_exact(x in 0.1..10.0f64) {
        let f = |t: f64| t.sin() * t.exp();
        prop_assert_eq!(derivative_n(&f, x, 0, 1e-2).unwrap().value, f(x));
    }

    #[test]
    fn gamma_functional_equations(x in 0.05..30.0f64) {
        prop_assert!((gamma(x + 1.0).unwrap() / (x * gamma(x).unwrap()) - 1.0).abs() < 1e-10);
        prop_assert!((digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x).abs() < 1e-10 * (1.0 + 1.0 / x));
        let z = Complex64::new(x.min(8.0), 0.0);
        let lhs = log_barnes_g(z + 1.0).unwrap().re;
        let rhs = ln_gamma(z.re) + log_barnes_g(z).unwrap().re;
        prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()));
    }

    #[test]
    fn log_gamma_is_deterministic(z in upper_half_plane(0.1, 50.0)) {
        prop_assert_eq!(log_gamma_principal(z).unwrap(), log_gamma_principal(z).unwrap());
    }

    #[test]
    fn incomplete_gamma_increasing(l in 0.2..5.0f64, x in 0.0..30.0f64, dx in 0.01..5.0f64) {
        prop_assert!(incomplete_gamma(l, x + dx).unwrap() >= incomplete_gamma(l, x).unwrap());
        prop_assert!(incomplete_gamma(l, x + dx).unwrap() <= gamma(l).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn expansion_reproduces_log_gamma(w in 1.0..10.0f64, m in 1usize..7) {
        let v = expansion_terms(1, m, w).unwrap() + remainder_rnm(1, m, w).unwrap() + LOG_SQRT_TWO_PI;
        prop_assert!((v - ln_gamma(w)).abs() < 1e-9);
    }

    #[test]
    fn multiple_gamma_independent_of_m(n in 1usize..3, w in 0.5..6.0f64, dm in 1usize..7) {
        let a = log_multiple_gamma(n, w, n).unwrap();
        prop_assert!((log_multiple_gamma(n, w, n + dm).unwrap() - a).abs() < 1e-9);
    }

    #[test]
    fn taylor_remainder_routes_agree(n in 1usize..9, w in 0.05..5.0f64) {
        prop_assert!((remainder_closed_form_n1(n, w).unwrap() - taylor_remainder_n1(n, w).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn stieltjes_transform_decreasing(l in 0.3..3.0f64, c in 0.0..2.0f64, t in 0.01..5.0f64, mass in 0.01..3.0f64, x in 0.05..20.0f64, dx in 0.01..5.0f64) {
        let rep = StieltjesRep::new(l, c, MeasureSpec::point_mass(t, mass).unwrap()).unwrap();
        prop_assert!(evaluate_stieltjes(&rep, x + dx).unwrap() < evaluate_stieltjes(&rep, x).unwrap());
    }

    #[test]
    fn lowner_matrix_symmetric(mut pts in prop::collection::vec(0.1..10.0f64, 2..8)) {
        pts.sort_by(f64::total_cmp);
        pts.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        let m = lowner_matrix(&|x: f64| x.ln(), &|x: f64| 1.0 / x, &pts).unwrap();
        prop_assert!((&m - m.transpose()).amax() < 1e-14);
    }

    #[test]
    fn grid_round_trips(min in 1e-3..10.0f64, span in 0.1..100.0f64, count in 2usize..500, log in any::<bool>()) {
        let g = if log { Grid::log(min, min + span, count) } else { Grid::linear(min, min + span, count) };
        let back: Grid = g.to_string().parse().unwrap();
        prop_assert_eq!(back.points(), g.points());
    }

    #[test]
    fn refuted_reports_carry_witness(p in 1.5..4.0f64) {
        // x^p is increasing, so never CM
        let f = builtin("identity").unwrap().powf(p);
        let r = check_cm(&f, 0.0, &Grid::log(0.1, 10.0, 8), 6, DEFAULT_CM_TOL).unwrap();
        prop_assert!(r.is_refuted());
        prop_assert!(r.witness.is_some());
    }

    #[test]
    fn post_widder_closed_form(n in 1usize..60, t in 0.1..5.0f64) {
        let f = builtin("inv_one_plus").unwrap();
        let nf = n as f64;
        let closed = (nf / (nf + t)).powi(n as i32 + 1);
        prop_assert!((post_widder_density(&f, t, n).unwrap() / closed - 1.0).abs() < 1e-11);
    }

    #[test]
    fn xl_of_powers(p in 0.0..4.0f64, x in 0.1..20.0f64) {
        // XL(t^p)(x) = Γ(p+1) x^{-p}
        let v = xl_transform(&|t: f64| t.powf(p), x).unwrap();
        let exact = gamma(p + 1.0).unwrap() * x.powf(-p);
        prop_assert!((v / exact - 1.0).abs() < 1e-10);
    }

    #[test]
    fn unit_ball_recursion_and_log_identity(n in 3usize..300) {
        let lhs = log_unit_ball_volume(n);
        let rhs = log_unit_ball_volume(n - 2) + (2.0 * PI / n as f64).ln();
        prop_assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
        let nf = n as f64;
        let identity = PI.ln() / (2.0 * nf.ln()) - ln_gamma(nf / 2.0 + 1.0) / (nf * nf.ln());
        prop_assert!((log_unit_ball_root(n) - identity).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invert_log_gamma_round_trip(w in upper_half_plane(1.0, 10.0)) {
        let target = log_gamma_principal(w).unwrap();
        let back = invert_log_gamma(target, None).unwrap();
        prop_assert!((back - w).norm() < 1e-10 * w.norm(), "{w} -> {back}");
    }

    #[test]
    fn g_k_maps_upper_half_plane(k in 0usize..4, z in upper_half_plane(0.01, 50.0)) {
        let w = branch_inverse_g_k(k, z).unwrap();
        prop_assert!(w.im > 0.0);
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        let back = log_gamma_principal(w).unwrap().exp();
        prop_assert!((back - sign * z).norm() < 1e-10 * z.norm());
    }
}

#[test]
fn f_a_affine_and_decreasing_in_a() {
    let table = HFamily::default().tabulate(&default_t_grid()).unwrap();
    proptest!(ProptestConfig::with_cases(64), |(a in 0.0..4.0f64, da in 0.01..1.0f64, s in 0.0..1.0f64)| {
        for i in (0..table.t.len()).step_by(37) {
            let f = |a: f64| table.p[i] - a * table.q[i];
            prop_assert!(f(a + da) <= f(a));
            let mid = f(a + s * da);
            prop_assert!((mid - ((1.0 - s) * f(a) + s * f(a + da))).abs() < 1e-12 * (1.0 + f(a).abs()));
        }
    });
}

#[test]
fn pick_closed_under_negative_reciprocal() {
    let f = |z: Complex64| nevanlinna::halfplane::log_gamma_ratio(z);
    let g = |z: Complex64| f(z).map(|v| -1.0 / v);
    let grid = HalfPlaneGrid { n_r: 30, n_theta: 30, ..HalfPlaneGrid::default() };
    assert!(verify_pick("f", &f, &grid, 1e-9).unwrap().is_verified());
    assert!(verify_pick("-1/f", &g, &grid, 1e-9).unwrap().is_verified());
}

#[test]
fn power_series_from_rationals() {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let e = PowerSeries::exp_scaled(&half, 6);
    let inv = series_divide(&PowerSeries::one(6), &e).unwrap();
    let neg = PowerSeries::exp_scaled(&-half, 6);
    assert_eq!(inv, neg);
}
