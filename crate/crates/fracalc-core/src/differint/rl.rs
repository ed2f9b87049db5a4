//! Riemann-Liouville operators via product-trapezoidal quadrature.

use alloc::format;
use alloc::vec;

use crate::error::{Error, Result};
use crate::grid::{Order, SampledSignal};
use crate::special;

/// Fractional integral of order `v >= 0`.
///
/// The kernel `(x - t)^(v-1)` is integrated exactly against the piecewise
/// linear interpolant of `f`, which tames the endpoint singularity for
/// `v < 1` and makes the rule exact for linear signals. Order zero returns
/// the input unchanged and the first output node is always zero for `v > 0`.
pub fn rl_integral(f: &SampledSignal, v: Order) -> Result<SampledSignal> {
    if v.v < 0.0 {
        return Err(Error::Domain(format!(
            "rl_integral requires order v >= 0, got {}; use gl_differint for negative orders",
            v.v
        )));
    }
    if v.v == 0.0 {
        return Ok(f.clone());
    }

    let n = f.grid.n;
    let h = f.grid.h;
    let vv = v.v;
    let scale = libm::pow(h, vv) / special::gamma_real(vv + 2.0);
    if !scale.is_finite() {
        return Err(Error::Overflow(format!("quadrature scale h^v / G(v+2) not finite for v = {vv}")));
    }

    // p[m] = m^(v+1); interior weights are second differences of p
    let mut p = vec![0.0; n + 1];
    for (m, slot) in p.iter_mut().enumerate() {
        *slot = libm::pow(m as f64, vv + 1.0);
    }
    let mut b = vec![0.0; n];
    for (m, slot) in b.iter_mut().enumerate().skip(1) {
        *slot = p[m + 1] - 2.0 * p[m] + p[m - 1];
    }

    let mut g = vec![0.0; n + 1];
    for (j, gj) in g.iter_mut().enumerate().skip(1) {
        let jf = j as f64;
        let c0 = libm::pow(jf - 1.0, vv + 1.0) - (jf - vv - 1.0) * libm::pow(jf, vv);
        let mut acc = c0 * f.values[0] + f.values[j];
        for (m, &bm) in b.iter().enumerate().take(j).skip(1) {
            acc += bm * f.values[j - m];
        }
        *gj = scale * acc;
    }
    SampledSignal::new(f.grid, g)
}

/// Fractional derivative of order `v > 0`: integrate to order `m - v` with
/// `m` the ceiling of `v`, then apply `m` second-order differencing passes.
pub fn rl_derivative(f: &SampledSignal, v: Order) -> Result<SampledSignal> {
    if v.v <= 0.0 {
        return Err(Error::Domain(format!("rl_derivative requires order v > 0, got {}", v.v)));
    }
    let m = v.ceil_order();
    if f.grid.n < 2 * m + 2 {
        return Err(Error::Resolution(format!(
            "derivative of order {} needs at least {} intervals, grid has {}",
            v.v,
            2 * m + 2,
            f.grid.n
        )));
    }
    let mut g = rl_integral(f, Order::new(m as f64 - v.v)?)?;
    for _ in 0..m {
        g = derivative_pass(&g);
    }
    Ok(g)
}

/// One second-order differencing sweep: central stencil inside, one-sided
/// three-point stencils at the ends.
fn derivative_pass(g: &SampledSignal) -> SampledSignal {
    let n = g.grid.n;
    let h = g.grid.h;
    let v = &g.values;
    let mut d = vec![0.0; n + 1];
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for j in 1..n {
        d[j] = (v[j + 1] - v[j - 1]) / (2.0 * h);
    }
    d[n] = (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h);
    SampledSignal { grid: g.grid, values: d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn signal<F: Fn(f64) -> f64>(n: usize, f: F) -> SampledSignal {
        SampledSignal::from_fn(Grid::new(0.0, 1.0, n).unwrap(), f).unwrap()
    }

    #[test]
    fn order_one_integrates_constants_exactly() {
        let g = rl_integral(&signal(1000, |_| 1.0), Order::new(1.0).unwrap()).unwrap();
        for j in 0..=1000 {
            assert_abs_diff_eq!(g.values[j], g.grid.x(j), epsilon = 1e-12);
        }
    }

    #[test]
    fn order_zero_is_identity() {
        let f = signal(64, |x| (3.0 * x).sin());
        let g = rl_integral(&f, Order::new(0.0).unwrap()).unwrap();
        assert_eq!(f.values, g.values);
    }

    #[test]
    fn half_integral_of_x_matches_power_rule() {
        // J^0.5 x at x = 1 equals G(2)/G(2.5)
        let g = rl_integral(&signal(1024, |x| x), Order::new(0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(g.values[1024], 0.752_252_778_063_675_1, epsilon = 1e-9);
    }

    #[test]
    fn lower_terminal_output_is_zero() {
        let g = rl_integral(&signal(64, |x| x * x + 1.0), Order::new(0.7).unwrap()).unwrap();
        assert_eq!(g.values[0], 0.0);
    }

    #[test]
    fn negative_order_rejected() {
        let e = rl_integral(&signal(8, |x| x), Order::new(-0.5).unwrap());
        assert!(matches!(e, Err(Error::Domain(_))));
    }

    #[test]
    fn integer_derivative_of_square() {
        let d = rl_derivative(&signal(1024, |x| x * x), Order::new(1.0).unwrap()).unwrap();
        let sup = (1..1024)
            .map(|j| (d.values[j] - 2.0 * d.grid.x(j)).abs())
            .fold(0.0_f64, f64::max);
        assert!(sup <= 1e-6, "interior sup error {sup}");
    }

    #[test]
    fn half_derivative_of_x_matches_power_rule() {
        // D^0.5 x at x = 1 equals 2/sqrt(pi)
        let d = rl_derivative(&signal(1024, |x| x), Order::new(0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(d.values[1024], core::f64::consts::FRAC_2_SQRT_PI, epsilon = 1e-6);
    }

    #[test]
    fn coarse_grids_are_rejected_for_derivatives() {
        let f = signal(5, |x| x);
        assert!(matches!(
            rl_derivative(&f, Order::new(1.5).unwrap()),
            Err(Error::Resolution(_))
        ));
        assert!(rl_derivative(&signal(6, |x| x), Order::new(1.5).unwrap()).is_ok());
    }

    #[test]
    fn nonpositive_derivative_order_rejected() {
        assert!(matches!(
            rl_derivative(&signal(16, |x| x), Order::new(0.0).unwrap()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            rl_derivative(&signal(16, |x| x), Order::new(-1.0).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn second_derivative_of_cubic() {
        let d = rl_derivative(&signal(512, |x| x * x * x), Order::new(2.0).unwrap()).unwrap();
        for j in 2..=510 {
            assert_relative_eq!(d.values[j], 6.0 * d.grid.x(j), max_relative = 1e-8, epsilon = 1e-8);
        }
    }
}
