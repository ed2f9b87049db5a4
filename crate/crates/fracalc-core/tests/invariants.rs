//! Cross-module invariants exercised through the public API.

use fracalc_core::catalog::Catalog;
use fracalc_core::differint::{rl_derivative, rl_integral, trim_index};
use fracalc_core::fde::{solve_linear_fde, FdeProblem};
use fracalc_core::grid::{Grid, Order, SampledSignal};
use fracalc_core::special::{gamma, mittag_leffler};
use num_complex::Complex64;

fn unit_grid(n: usize) -> Grid {
    Grid::new(0.0, 1.0, n).unwrap()
}

fn gamma_real(x: f64) -> f64 {
    gamma(Complex64::new(x, 0.0)).unwrap().re
}

#[test]
fn power_rule_endpoints_match_gamma_ratios() {
    let grid = unit_grid(4096);
    for &v in &[0.5, 1.5] {
        for p in [1u32, 2] {
            let f = SampledSignal::from_fn(grid, |x| x.powi(p as i32)).unwrap();
            let j = rl_integral(&f, Order::new(v).unwrap()).unwrap();
            let pf = p as f64;
            let want = gamma_real(pf + 1.0) / gamma_real(pf + v + 1.0);
            let got = j.values[4096];
            assert!(
                (got - want).abs() <= 1e-6,
                "J^{v} x^{p} at x = 1: got {got}, want {want}"
            );
        }
    }
}

#[test]
fn exponent_law_error_decays_at_first_order_or_better() {
    for cat in [Catalog::Square, Catalog::ExpDecay] {
        let mut gaps = Vec::new();
        for &n in &[512usize, 1024] {
            let f = cat.sample(unit_grid(n)).unwrap();
            let inner = rl_integral(&f, Order::new(0.8).unwrap()).unwrap();
            let nested = rl_integral(&inner, Order::new(0.4).unwrap()).unwrap();
            let direct = rl_integral(&f, Order::new(1.2).unwrap()).unwrap();
            let sup = nested
                .values
                .iter()
                .zip(&direct.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max);
            gaps.push(sup);
        }
        let order = (gaps[0] / gaps[1]).log2();
        assert!(order >= 1.0, "{}: sup gaps {:?}, order {order}", cat.name(), gaps);
    }
}

#[test]
fn derivative_inverts_the_integral_away_from_the_ends() {
    for &v in &[0.3, 0.5, 0.7] {
        let f = Catalog::Sin.sample(unit_grid(1024)).unwrap();
        let j = rl_integral(&f, Order::new(v).unwrap()).unwrap();
        let d = rl_derivative(&j, Order::new(v).unwrap()).unwrap();
        let lo = trim_index(1024);
        let sup = (lo..=1024 - lo)
            .map(|k| (d.values[k] - f.values[k]).abs())
            .fold(0.0_f64, f64::max);
        assert!(sup <= 1e-5, "v = {v}: trimmed sup deviation {sup}");
    }
}

// Known failure. The implicit first-order scheme carries an O(h^v) error at
// the first node after t = 0, so the sup-norm error over the whole interval
// decays like h^0.5 for v = 0.5 even though interior nodes converge at first
// order. See the convergence discussion in the README.
#[test]
fn fde_relaxation_sup_convergence_order() {
    let mut errs = Vec::new();
    for &n in &[1024usize, 2048] {
        let zero = SampledSignal::from_fn(unit_grid(n), |_| 0.0).unwrap();
        let sol = solve_linear_fde(&FdeProblem::new(0.5, 1.0, zero, 1.0).unwrap()).unwrap();
        let mut sup = 0.0_f64;
        for j in 0..=n {
            let t = sol.y.grid.x(j);
            let exact = mittag_leffler(0.5, -t.sqrt()).unwrap();
            sup = sup.max((sol.y.values[j] - exact).abs());
        }
        errs.push(sup);
    }
    let order = (errs[0] / errs[1]).log2();
    assert!(
        order >= 0.9,
        "sup errors {:.3e} -> {:.3e} under halving give order {order:.3}, expected at least 0.9",
        errs[0],
        errs[1]
    );
}

#[test]
fn fde_endpoint_error_decays_at_first_order() {
    let mut errs = Vec::new();
    for &n in &[1024usize, 2048] {
        let zero = SampledSignal::from_fn(unit_grid(n), |_| 0.0).unwrap();
        let sol = solve_linear_fde(&FdeProblem::new(0.5, 1.0, zero, 1.0).unwrap()).unwrap();
        let exact = mittag_leffler(0.5, -1.0).unwrap();
        errs.push((sol.y.values[n] - exact).abs());
    }
    let order = (errs[0] / errs[1]).log2();
    assert!(
        order >= 0.9,
        "endpoint errors {:.3e} -> {:.3e}, order {order:.3}",
        errs[0],
        errs[1]
    );
}
