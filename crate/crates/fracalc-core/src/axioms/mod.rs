//! Executable invariant suites for every module, surfaced through the CLI
//! `axioms` subcommand. Each suite bundles a handful of checks and reports
//! measured deviations alongside the pass/fail verdict.

pub mod oracles;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_core::RngCore;

use crate::catalog::Catalog;
use crate::circuits::{self, ElementKind, FracElement};
use crate::differint::{compare_rl_gl, gl_differint, gl_differint_fast, rl_derivative, rl_integral};
use crate::fde::{fractional_sum, solve_frac_difference, solve_linear_fde, FdeProblem};
use crate::grid::{Grid, Order, SampledSignal};
use crate::special::{gamma, gen_binomial, gl_weights, log_gamma, mittag_leffler};
use crate::transforms::{laplace_numeric, verify_laplace_differint_rule, z_transform_truncated};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub number: usize,
    pub title: &'static str,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Run the full set of suites 1 through 11.
pub fn run_all() -> Vec<SuiteReport> {
    vec![
        suite_1_gamma_recurrence(),
        suite_2_gamma_factorial(),
        suite_3_coefficients(),
        suite_4_linearity(),
        suite_5_integer_orders(),
        suite_6_semigroup(),
        suite_7_equivalence(),
        suite_8_transforms(),
        suite_9_fde_structure(),
        suite_10_fde_convergence(),
        suite_11_circuits(),
    ]
}

pub fn all_passed(reports: &[SuiteReport]) -> bool {
    reports.iter().all(SuiteReport::passed)
}

fn check(suite: usize, name: &'static str, passed: bool, detail: String) -> CheckResult {
    CheckResult { suite, name, passed, detail }
}

fn unit_grid(n: usize) -> Grid {
    Grid::new(0.0, 1.0, n).unwrap()
}

fn sup_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn suite_1_gamma_recurrence() -> SuiteReport {
    let mut checks = Vec::new();

    let g1 = gamma(Complex64::new(1.0, 0.0)).unwrap();
    let dev = (g1 - Complex64::new(1.0, 0.0)).norm();
    checks.push(check(1, "functional equation gamma(1) = 1", dev <= 1e-14, format!("deviation {dev:.2e}")));

    let mut rng = oracles::test_rng(0xA11C_E001);
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let z = Complex64::new(
            0.1 + 19.9 * oracles::unit_f64(&mut rng),
            20.0 * oracles::unit_f64(&mut rng) - 10.0,
        );
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        worst = worst.max((lhs - rhs).norm() / lhs.norm());
    }
    checks.push(check(
        1,
        "recurrence gamma(z+1) = z gamma(z) on 200 samples",
        worst <= 1e-11,
        format!("max relative deviation {worst:.2e}"),
    ));

    let mut worst = 0.0_f64;
    for &z in &[0.5, 1.5, 2.5, 4.0] {
        let direct = oracles::gamma_quadrature(z);
        let approx = gamma(Complex64::new(z, 0.0)).unwrap().re;
        worst = worst.max((direct - approx).abs());
    }
    checks.push(check(
        1,
        "agreement with direct integral quadrature",
        worst <= 1e-8,
        format!("max deviation {worst:.2e}"),
    ));

    SuiteReport { number: 1, title: "gamma: functional equation and integral oracle", checks }
}

pub fn suite_2_gamma_factorial() -> SuiteReport {
    let mut checks = Vec::new();

    let mut factorial = 1.0;
    let mut worst = 0.0_f64;
    for k in 0..=15u32 {
        if k > 0 {
            factorial *= k as f64;
        }
        let g = gamma(Complex64::new(k as f64 + 1.0, 0.0)).unwrap().re;
        worst = worst.max((g - factorial).abs() / factorial);
    }
    checks.push(check(
        2,
        "factorial generalization gamma(k+1) = k!",
        worst <= 1e-12,
        format!("max relative deviation {worst:.2e}"),
    ));

    let mut worst = 0.0_f64;
    for &x in &[0.1, 0.5, 1.0, 2.3, 4.5, 11.0, 20.0, 171.0] {
        let lg = log_gamma(x).unwrap();
        let g = gamma(Complex64::new(x, 0.0)).unwrap().re;
        worst = worst.max((libm::exp(lg) - g).abs() / g.abs());
    }
    checks.push(check(
        2,
        "exp(log_gamma) matches gamma",
        worst <= 1e-12,
        format!("max relative deviation {worst:.2e}"),
    ));

    let sqrt_pi = libm::sqrt(core::f64::consts::PI);
    let cases = [(0.5, sqrt_pi), (-0.5, -2.0 * sqrt_pi), (-1.5, 4.0 * sqrt_pi / 3.0)];
    let mut worst = 0.0_f64;
    for &(z, want) in &cases {
        let g = gamma(Complex64::new(z, 0.0)).unwrap().re;
        worst = worst.max((g - want).abs() / want.abs());
    }
    checks.push(check(
        2,
        "reflection formula at half integers",
        worst <= 1e-12,
        format!("max relative deviation {worst:.2e}"),
    ));

    SuiteReport { number: 2, title: "gamma: factorial and log form", checks }
}

pub fn suite_3_coefficients() -> SuiteReport {
    let mut checks = Vec::new();

    let mut worst = 0.0_f64;
    for &v in &[1.3, 2.7, 5.5] {
        for k in 0..=20 {
            let product = gen_binomial(v, k);
            let ratio = oracles::binom_by_gamma(v, k);
            worst = worst.max((product - ratio).abs() / product.abs());
        }
    }
    checks.push(check(
        3,
        "falling product agrees with the gamma-ratio route",
        worst <= 1e-9,
        format!("max relative deviation {worst:.2e}"),
    ));

    let mut ok = true;
    let mut worst = 0.0_f64;
    for &v in &[0.5, 1.7] {
        let t = gl_weights(v, 64);
        ok &= t.weights[0] == 1.0;
        for k in 0..=64 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let want = sign * gen_binomial(v, k);
            let dev = (t.weights[k] - want).abs() / want.abs().max(1e-300);
            worst = worst.max(dev);
        }
    }
    let integer = gl_weights(2.0, 6);
    ok &= integer.weights[3..].iter().all(|w| *w == 0.0);
    checks.push(check(
        3,
        "weight table equals signed binomials, integer orders truncate",
        ok && worst <= 1e-12,
        format!("max relative deviation {worst:.2e}"),
    ));

    let t = gl_weights(0.5, 1024);
    let s64: f64 = t.weights[..=64].iter().sum();
    let s1024: f64 = t.weights.iter().sum();
    checks.push(check(
        3,
        "weight partial sums shrink toward zero",
        s1024.abs() < s64.abs(),
        format!("|sum to 64| = {:.3e}, |sum to 1024| = {:.3e}", s64.abs(), s1024.abs()),
    ));

    SuiteReport { number: 3, title: "binomial coefficients and GL weights", checks }
}

pub fn suite_4_linearity() -> SuiteReport {
    let mut checks = Vec::new();
    let n = 256;
    let grid = unit_grid(n);
    let orders = [-1.5, -0.5, 0.5, 1.5];
    let mut rng = oracles::test_rng(0xA11C_E004);

    // worst scaled deviation per operator across 20 random draws
    let mut worst_gl = 0.0_f64;
    let mut worst_ji = 0.0_f64;
    let mut worst_dv = 0.0_f64;
    for _ in 0..20 {
        let cf: Vec<f64> = (0..4).map(|_| oracles::symmetric_f64(&mut rng)).collect();
        let cg: Vec<f64> = (0..4).map(|_| oracles::symmetric_f64(&mut rng)).collect();
        let alpha = 2.0 * oracles::symmetric_f64(&mut rng);
        let beta = 2.0 * oracles::symmetric_f64(&mut rng);
        let v = orders[(rng.next_u64() % 4) as usize];

        let cubic = |c: &[f64]| {
            let c = c.to_vec();
            move |x: f64| c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x
        };
        let f = SampledSignal::from_fn(grid, cubic(&cf)).unwrap();
        let g = SampledSignal::from_fn(grid, cubic(&cg)).unwrap();
        let combo = SampledSignal::new(
            grid,
            f.values.iter().zip(&g.values).map(|(a, b)| alpha * a + beta * b).collect(),
        )
        .unwrap();

        let run = |op: &dyn Fn(&SampledSignal) -> SampledSignal, worst: &mut f64| {
            let lhs = op(&combo);
            let fa = op(&f);
            let gb = op(&g);
            let rhs: Vec<f64> =
                fa.values.iter().zip(&gb.values).map(|(a, b)| alpha * a + beta * b).collect();
            let sup = rhs.iter().fold(0.0_f64, |m, x| m.max(x.abs())).max(1.0);
            for (l, r) in lhs.values.iter().zip(&rhs) {
                let scale = r.abs().max(sup);
                *worst = worst.max((l - r).abs() / scale);
            }
        };

        let ov = Order::new(v).unwrap();
        let oabs = Order::new(v.abs()).unwrap();
        run(&|s| gl_differint(s, ov).unwrap(), &mut worst_gl);
        run(&|s| rl_integral(s, oabs).unwrap(), &mut worst_ji);
        run(&|s| rl_derivative(s, oabs).unwrap(), &mut worst_dv);
    }

    for (name, worst) in [
        ("gl_differint is linear (20 draws)", worst_gl),
        ("rl_integral is linear (20 draws)", worst_ji),
        ("rl_derivative is linear (20 draws)", worst_dv),
    ] {
        checks.push(check(4, name, worst <= 1e-10, format!("max scaled deviation {worst:.2e}")));
    }

    SuiteReport { number: 4, title: "differintegral linearity", checks }
}

pub fn suite_5_integer_orders() -> SuiteReport {
    let mut checks = Vec::new();
    let zero = Order::new(0.0).unwrap();
    let one = Order::new(1.0).unwrap();

    let mut ok = true;
    for c in Catalog::ALL {
        let f = c.sample(unit_grid(256)).unwrap();
        ok &= gl_differint(&f, zero).unwrap().values == f.values;
        ok &= rl_integral(&f, zero).unwrap().values == f.values;
    }
    checks.push(check(5, "order zero is the identity on the whole catalog", ok, String::from("bitwise equality")));

    let mut worst = 0.0_f64;
    for c in Catalog::ALL {
        let f = c.sample(unit_grid(1024)).unwrap();
        let j1 = rl_integral(&f, one).unwrap();
        let h = f.grid.h;
        let mut cum = 0.0;
        for j in 1..=1024 {
            cum += 0.5 * h * (f.values[j - 1] + f.values[j]);
            worst = worst.max((j1.values[j] - cum).abs());
        }
    }
    checks.push(check(
        5,
        "order one matches the trapezoid cumulative integral",
        worst <= 1e-12,
        format!("max deviation {worst:.2e}"),
    ));

    let f = Catalog::Square.sample(unit_grid(1024)).unwrap();
    let d = rl_derivative(&f, one).unwrap();
    let worst_d = (1..1024)
        .map(|j| (d.values[j] - 2.0 * d.grid.x(j)).abs())
        .fold(0.0_f64, f64::max);
    let lin = Catalog::Linear.sample(unit_grid(1024)).unwrap();
    let b = gl_differint(&lin, one).unwrap();
    let worst_b = (1..=1024).map(|j| (b.values[j] - 1.0).abs()).fold(0.0_f64, f64::max);
    checks.push(check(
        5,
        "order one derivatives match difference stencils",
        worst_d <= 1e-6 && worst_b <= 1e-12,
        format!("central-stencil deviation {worst_d:.2e}, backward-difference deviation {worst_b:.2e}"),
    ));

    SuiteReport { number: 5, title: "identity and integer orders", checks }
}

pub fn suite_6_semigroup() -> SuiteReport {
    let mut checks = Vec::new();
    let pairs = [(0.3, 0.4), (0.3, 0.7), (0.5, 0.7)];

    for (cat, name) in [
        (Catalog::Square, "semigroup J^u J^v = J^(u+v) on the square signal"),
        (Catalog::Sin, "semigroup J^u J^v = J^(u+v) on the sine signal"),
    ] {
        let mut min_order = f64::INFINITY;
        let mut detail = String::new();
        for &(u, v) in &pairs {
            let mut gaps = Vec::new();
            for &n in &[512usize, 1024] {
                let f = cat.sample(unit_grid(n)).unwrap();
                let inner = rl_integral(&f, Order::new(v).unwrap()).unwrap();
                let outer = rl_integral(&inner, Order::new(u).unwrap()).unwrap();
                let direct = rl_integral(&f, Order::new(u + v).unwrap()).unwrap();
                gaps.push(sup_gap(&outer.values, &direct.values));
            }
            let order = libm::log2(gaps[0] / gaps[1]);
            min_order = min_order.min(order);
            detail = format!("{detail}({u},{v}): order {order:.2}  ");
        }
        checks.push(check(6, name, min_order >= 1.0, detail));
    }

    SuiteReport { number: 6, title: "semigroup law for fractional integrals", checks }
}

pub fn suite_7_equivalence() -> SuiteReport {
    let mut checks = Vec::new();

    let mut ok = true;
    let mut min_order = f64::INFINITY;
    for cat in [Catalog::Linear, Catalog::Square, Catalog::Sin] {
        for &v in &[0.5, -0.5] {
            let f = cat.sample(unit_grid(1024)).unwrap();
            let rep = compare_rl_gl(&f, Order::new(v).unwrap(), &[256, 512, 1024]).unwrap();
            for w in rep.rows.windows(2) {
                ok &= w[1].sup_gap < w[0].sup_gap;
            }
            if let Some(o) = rep.rows.last().and_then(|r| r.est_order) {
                min_order = min_order.min(o);
            }
        }
    }
    checks.push(check(
        7,
        "rl and gl routes converge together on the catalog",
        ok,
        format!("gaps strictly decreasing, slowest decay order {min_order:.2}"),
    ));

    let mut worst = 0.0_f64;
    for &n in &[1024usize, 16384] {
        let f = Catalog::Sin.sample(unit_grid(n)).unwrap();
        for &v in &[0.5, -0.5] {
            let a = gl_differint(&f, Order::new(v).unwrap()).unwrap();
            let b = gl_differint_fast(&f, Order::new(v).unwrap()).unwrap();
            worst = worst.max(sup_gap(&a.values, &b.values));
        }
    }
    checks.push(check(
        7,
        "fft path equals the direct path",
        worst <= 1e-10,
        format!("max sup gap {worst:.2e}"),
    ));

    SuiteReport { number: 7, title: "route equivalence and the fast path", checks }
}

pub fn suite_8_transforms() -> SuiteReport {
    let mut checks = Vec::new();

    let step = vec![1.0; 61];
    let z2 = Complex64::new(2.0, 0.0);
    let dev_step = (z_transform_truncated(&step, z2).unwrap().value - 2.0).norm();
    let mut impulse = vec![0.0; 41];
    impulse[0] = 1.0;
    let dev_imp =
        (z_transform_truncated(&impulse, Complex64::new(1.7, 0.4)).unwrap().value - 1.0).norm();
    let geom: Vec<f64> = (0..=60).map(|k| libm::pow(0.5, k as f64)).collect();
    let dev_geom = (z_transform_truncated(&geom, z2).unwrap().value - 4.0 / 3.0).norm();
    checks.push(check(
        8,
        "z-transform closed forms (step, impulse, geometric)",
        dev_step <= 1e-15 && dev_imp == 0.0 && dev_geom <= 1e-15,
        format!("deviations {dev_step:.2e}, {dev_imp:.2e}, {dev_geom:.2e}"),
    ));

    let f1 = SampledSignal::from_fn(Grid::new(0.0, 20.0, 4000).unwrap(), |_| 1.0).unwrap();
    let ev = laplace_numeric(&f1, Complex64::new(2.0, 0.0)).unwrap();
    let h = f1.grid.h;
    let quad_bound = 2.0 * h * h / 12.0 * (1.0 - libm::exp(-40.0));
    let err1 = (ev.value - 0.5).norm();
    let ft = SampledSignal::from_fn(Grid::new(0.0, 30.0, 6000).unwrap(), |t| t).unwrap();
    let errt = (laplace_numeric(&ft, Complex64::new(1.0, 0.0)).unwrap().value - 1.0).norm();
    checks.push(check(
        8,
        "laplace analytic values for constant and ramp",
        err1 <= 1.1 * quad_bound + ev.tail_bound && errt <= 1e-5,
        format!("constant error {err1:.2e} (quadrature bound {quad_bound:.2e}), ramp error {errt:.2e}"),
    ));

    let s1 = Complex64::new(1.0, 0.0);
    let mut errs = Vec::new();
    for &t_end in &[5.0, 10.0, 20.0, 40.0] {
        let n = (t_end / 0.005) as usize;
        let f = SampledSignal::from_fn(Grid::new(0.0, t_end, n).unwrap(), |_| 1.0).unwrap();
        errs.push((laplace_numeric(&f, s1).unwrap().value - 1.0).norm());
    }
    let horizon_ok = errs[1] < errs[0] && errs[2] < errs[1] && errs[3] <= 1.5 * errs[2];
    checks.push(check(
        8,
        "longer horizons shrink the error until quadrature dominates",
        horizon_ok,
        format!("errors {:.2e}, {:.2e}, {:.2e}, {:.2e}", errs[0], errs[1], errs[2], errs[3]),
    ));

    let mut rng = oracles::test_rng(0xA11C_E008);
    let coef: Vec<f64> = (0..4).map(|_| oracles::symmetric_f64(&mut rng)).collect();
    let g1 = SampledSignal::from_fn(Grid::new(0.0, 10.0, 800).unwrap(), |t| libm::sin(0.9 * t)).unwrap();
    let g2 = SampledSignal::from_fn(Grid::new(0.0, 10.0, 800).unwrap(), |t| libm::exp(-0.4 * t)).unwrap();
    let combo = SampledSignal::new(
        g1.grid,
        g1.values.iter().zip(&g2.values).map(|(a, b)| coef[0] * a + coef[1] * b).collect(),
    )
    .unwrap();
    let s = Complex64::new(1.2, 0.7);
    let lin_dev = (laplace_numeric(&combo, s).unwrap().value
        - (coef[0] * laplace_numeric(&g1, s).unwrap().value
            + coef[1] * laplace_numeric(&g2, s).unwrap().value))
        .norm();
    let zc: Vec<f64> = (0..40).map(|_| oracles::symmetric_f64(&mut rng)).collect();
    let zd: Vec<f64> = (0..40).map(|_| oracles::symmetric_f64(&mut rng)).collect();
    let zcombo: Vec<f64> = zc.iter().zip(&zd).map(|(a, b)| coef[2] * a + coef[3] * b).collect();
    let zs = Complex64::new(1.4, -0.9);
    let zlin_dev = (z_transform_truncated(&zcombo, zs).unwrap().value
        - (coef[2] * z_transform_truncated(&zc, zs).unwrap().value
            + coef[3] * z_transform_truncated(&zd, zs).unwrap().value))
        .norm();
    checks.push(check(
        8,
        "both transforms are linear",
        lin_dev <= 1e-12 && zlin_dev <= 1e-12,
        format!("laplace deviation {lin_dev:.2e}, z deviation {zlin_dev:.2e}"),
    ));

    let mut gaps = Vec::new();
    for &n in &[1000usize, 2000, 4000] {
        let f = SampledSignal::from_fn(Grid::new(0.0, 20.0, n).unwrap(), |_| 1.0).unwrap();
        let rep = verify_laplace_differint_rule(&f, 0.5, &[Complex64::new(2.0, 0.0)]).unwrap();
        gaps.push(rep.rows[0].abs_gap);
    }
    checks.push(check(
        8,
        "operational rule discrepancy decreases with resolution",
        gaps[1] < gaps[0] && gaps[2] < gaps[1],
        format!("gaps {:.2e}, {:.2e}, {:.2e}", gaps[0], gaps[1], gaps[2]),
    ));

    SuiteReport { number: 8, title: "transform rules", checks }
}

pub fn suite_9_fde_structure() -> SuiteReport {
    let mut checks = Vec::new();

    let n = 1000;
    let grid = unit_grid(n);
    let one = SampledSignal::from_fn(grid, |_| 1.0).unwrap();
    let zero = SampledSignal::from_fn(grid, |_| 0.0).unwrap();
    let ramp = solve_linear_fde(&FdeProblem::new(1.0, 0.0, one, 0.0).unwrap()).unwrap();
    let worst_ramp = (0..=n)
        .map(|j| (ramp.y.values[j] - grid.x(j)).abs())
        .fold(0.0_f64, f64::max);
    let relax = solve_linear_fde(&FdeProblem::new(1.0, 1.0, zero, 1.0).unwrap()).unwrap();
    let worst_relax = (0..=n)
        .map(|j| (relax.y.values[j] - libm::exp(-grid.x(j))).abs())
        .fold(0.0_f64, f64::max);
    let h = grid.h;
    checks.push(check(
        9,
        "order one reproduces the classical solutions",
        worst_ramp <= 2.0 * h && worst_relax <= 5.0 * h,
        format!("ramp deviation {worst_ramp:.2e}, relaxation deviation {worst_relax:.2e}"),
    ));

    let mut ok = true;
    for &v in &[0.25, 0.5, 0.75, 1.0] {
        let zero = SampledSignal::from_fn(unit_grid(512), |_| 0.0).unwrap();
        let sol = solve_linear_fde(&FdeProblem::new(v, 1.0, zero, 1.0).unwrap()).unwrap();
        ok &= sol.y.values.iter().all(|y| *y > 0.0);
        ok &= sol.y.values.windows(2).all(|w| w[1] <= w[0]);
    }
    checks.push(check(
        9,
        "relaxation stays positive and non-increasing",
        ok,
        String::from("checked v in {0.25, 0.5, 0.75, 1}"),
    ));

    let mut rng = oracles::test_rng(0xA11C_E009);
    let g256 = unit_grid(256);
    let u1 = SampledSignal::new(g256, (0..=256).map(|_| oracles::symmetric_f64(&mut rng)).collect()).unwrap();
    let u2 = SampledSignal::new(g256, (0..=256).map(|_| oracles::symmetric_f64(&mut rng)).collect()).unwrap();
    let (alpha, beta) = (1.3, -0.8);
    let ucombo = SampledSignal::new(
        g256,
        u1.values.iter().zip(&u2.values).map(|(a, b)| alpha * a + beta * b).collect(),
    )
    .unwrap();
    let y1 = solve_linear_fde(&FdeProblem::new(0.5, 1.0, u1, 0.0).unwrap()).unwrap();
    let y2 = solve_linear_fde(&FdeProblem::new(0.5, 1.0, u2, 0.0).unwrap()).unwrap();
    let yc = solve_linear_fde(&FdeProblem::new(0.5, 1.0, ucombo, 0.0).unwrap()).unwrap();
    let rhs: Vec<f64> =
        y1.y.values.iter().zip(&y2.y.values).map(|(a, b)| alpha * a + beta * b).collect();
    let scale = rhs.iter().fold(0.0_f64, |m, x| m.max(x.abs())).max(1.0);
    let lin_dev = sup_gap(&yc.y.values, &rhs) / scale;
    checks.push(check(
        9,
        "solution map is linear in the forcing",
        lin_dev <= 1e-10,
        format!("max scaled deviation {lin_dev:.2e}"),
    ));

    let x: Vec<f64> = (0..256).map(|_| oracles::symmetric_f64(&mut rng)).collect();
    let mut worst = 0.0_f64;
    for &(u, v) in &[(0.3, 0.7), (0.5, 0.5), (0.25, 1.0)] {
        let nested = fractional_sum(&fractional_sum(&x, v).unwrap(), u).unwrap();
        let direct = fractional_sum(&x, u + v).unwrap();
        let scale = direct.iter().fold(0.0_f64, |m, x| m.max(x.abs())).max(1.0);
        worst = worst.max(sup_gap(&nested, &direct) / scale);
    }
    checks.push(check(
        9,
        "discrete semigroup law for fractional sums",
        worst <= 1e-10,
        format!("max scaled deviation {worst:.2e}"),
    ));

    let mut impulse = vec![0.0; 64];
    impulse[0] = 1.0;
    let green = solve_frac_difference(0.5, 0.0, &impulse, 0.0).unwrap();
    let kernel = fractional_sum(&impulse, 0.5).unwrap();
    let dev_green = sup_gap(&green, &kernel);
    let counting = solve_frac_difference(1.0, 0.0, &[1.0; 8], 0.0).unwrap();
    let count_ok = counting == vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
    checks.push(check(
        9,
        "difference equation impulse response and step counting",
        dev_green <= 1e-12 && count_ok,
        format!("impulse kernel deviation {dev_green:.2e}"),
    ));

    SuiteReport { number: 9, title: "fde structure", checks }
}

pub fn suite_10_fde_convergence() -> SuiteReport {
    let mut errs = Vec::new();
    for &n in &[1024usize, 2048] {
        let zero = SampledSignal::from_fn(unit_grid(n), |_| 0.0).unwrap();
        let sol = solve_linear_fde(&FdeProblem::new(0.5, 1.0, zero, 1.0).unwrap()).unwrap();
        let mut sup = 0.0_f64;
        for j in 0..=n {
            let t = sol.y.grid.x(j);
            let exact = mittag_leffler(0.5, -libm::sqrt(t)).unwrap();
            sup = sup.max((sol.y.values[j] - exact).abs());
        }
        errs.push(sup);
    }
    let order = libm::log2(errs[0] / errs[1]);
    let checks = vec![check(
        10,
        "relaxation sup-norm error decays at order 0.9 or better",
        order >= 0.9,
        format!("sup errors {:.3e} -> {:.3e}, measured order {order:.3}", errs[0], errs[1]),
    )];
    SuiteReport { number: 10, title: "fde convergence", checks }
}

pub fn suite_11_circuits() -> SuiteReport {
    let mut checks = Vec::new();

    let omegas = [0.1, 1.0, 10.0];
    let mut worst = 0.0_f64;
    for &v in &[0.0, 0.25, 0.5, 0.75, 1.0] {
        let e = FracElement::new(ElementKind::Resistoductor, 2.0, v).unwrap();
        for p in circuits::bode_data(&e, &omegas).unwrap() {
            worst = worst.max((p.phase_deg - 90.0 * v).abs());
        }
    }
    checks.push(check(
        11,
        "constant phase equals v times 90 degrees",
        worst <= 1e-10,
        format!("max deviation {worst:.2e} degrees"),
    ));

    let mut worst = 0.0_f64;
    for (kind, sign) in [(ElementKind::Resistoductor, 1.0), (ElementKind::FracIntegrator, -1.0)] {
        let e = FracElement::new(kind, 1.0, 0.5).unwrap();
        for &w in &[0.1, 1.0] {
            let z1 = circuits::impedance(&e, Complex64::new(0.0, w)).unwrap();
            let z10 = circuits::impedance(&e, Complex64::new(0.0, 10.0 * w)).unwrap();
            let ratio = z10.norm() / z1.norm();
            let want = libm::pow(10.0, sign * 0.5);
            worst = worst.max((ratio - want).abs() / want);
        }
    }
    checks.push(check(
        11,
        "decade magnitude ratio is 10^v",
        worst <= 1e-10,
        format!("max relative deviation {worst:.2e}"),
    ));

    let e = FracElement::new(ElementKind::FracIntegrator, 1.0, 0.5).unwrap();
    let mut gaps = Vec::new();
    for &n in &[512usize, 1024, 2048] {
        gaps.push(circuits::step_response(&e, unit_grid(n)).unwrap().gl_sup_gap);
    }
    let order = libm::log2(gaps[1] / gaps[2]);
    checks.push(check(
        11,
        "step response approaches the closed form",
        gaps[1] < gaps[0] && order >= 0.9 && gaps[2] <= 1e-2,
        format!("trimmed gaps {:.2e}, {:.2e}, {:.2e}; order {order:.3}", gaps[0], gaps[1], gaps[2]),
    ));

    let zero_s = Complex64::new(0.0, 0.0);
    let guard = circuits::impedance(&e, zero_s).is_err();
    let res = FracElement::new(ElementKind::Resistoductor, 4.0, 0.0).unwrap();
    let flat = circuits::impedance(&res, zero_s) == Ok(Complex64::new(4.0, 0.0));
    checks.push(check(
        11,
        "zero-frequency guards",
        guard && flat,
        String::from("integrator rejects s = 0, resistor passes through"),
    ));

    SuiteReport { number: 11, title: "circuit elements", checks }
}
