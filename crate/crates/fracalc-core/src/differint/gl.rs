//! Grunwald-Letnikov differintegral, direct and FFT-accelerated.

use alloc::vec;

use crate::error::Result;
use crate::fft;
use crate::grid::{Order, SampledSignal};
use crate::special::gl_weights;

/// Grunwald-Letnikov differintegral of any real order: positive `v`
/// differentiates, negative `v` integrates, zero is the identity.
///
/// `g(x_j) = h^(-v) * sum over k of w_k f(x_{j-k})` with the signed binomial
/// weights from [`gl_weights`]. Direct evaluation, O(n^2).
pub fn gl_differint(f: &SampledSignal, v: Order) -> Result<SampledSignal> {
    if v.v == 0.0 {
        return Ok(f.clone());
    }
    let n = f.grid.n;
    let w = gl_weights(v.v, n);
    let hv = libm::pow(f.grid.h, -v.v);
    let mut g = vec![0.0; n + 1];
    for (j, gj) in g.iter_mut().enumerate() {
        let mut acc = 0.0;
        for k in 0..=j {
            acc += w.weights[k] * f.values[j - k];
        }
        *gj = hv * acc;
    }
    SampledSignal::new(f.grid, g)
}

/// Same operator evaluated through FFT convolution, O(n log n).
/// Agrees with [`gl_differint`] to better than 1e-10 in the sup norm.
pub fn gl_differint_fast(f: &SampledSignal, v: Order) -> Result<SampledSignal> {
    if v.v == 0.0 {
        return Ok(f.clone());
    }
    let n = f.grid.n;
    let w = gl_weights(v.v, n);
    let hv = libm::pow(f.grid.h, -v.v);
    let conv = fft::convolve_real(&w.weights, &f.values);
    let g = conv[..=n].iter().map(|c| hv * c).collect();
    SampledSignal::new(f.grid, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use approx::assert_abs_diff_eq;

    fn signal<F: Fn(f64) -> f64>(n: usize, f: F) -> SampledSignal {
        SampledSignal::from_fn(Grid::new(0.0, 1.0, n).unwrap(), f).unwrap()
    }

    #[test]
    fn zero_order_is_identity() {
        let f = signal(100, |x| (2.0 * x).cos());
        assert_eq!(gl_differint(&f, Order::new(0.0).unwrap()).unwrap().values, f.values);
        assert_eq!(gl_differint_fast(&f, Order::new(0.0).unwrap()).unwrap().values, f.values);
    }

    #[test]
    fn minus_one_is_the_running_left_rectangle_sum() {
        let n = 1000;
        let g = gl_differint(&signal(n, |_| 1.0), Order::new(-1.0).unwrap()).unwrap();
        let h = g.grid.h;
        for j in 0..=n {
            assert_abs_diff_eq!(g.values[j], (j as f64 + 1.0) * h, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(g.values[n], 1.0 + h, epsilon = 1e-12);
    }

    #[test]
    fn plus_one_is_the_backward_difference() {
        let g = gl_differint(&signal(64, |x| x), Order::new(1.0).unwrap()).unwrap();
        for j in 1..=64 {
            assert_abs_diff_eq!(g.values[j], 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn half_derivative_of_x_converges_to_power_rule() {
        let g = gl_differint(&signal(4096, |x| x), Order::new(0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(g.values[4096], core::f64::consts::FRAC_2_SQRT_PI, epsilon = 5e-3);
    }

    #[test]
    fn fast_path_matches_direct_path() {
        for &v in &[0.5, -0.5, 1.3, -1.7] {
            let f = signal(1024, |x| (3.0 * x).sin() + x);
            let a = gl_differint(&f, Order::new(v).unwrap()).unwrap();
            let b = gl_differint_fast(&f, Order::new(v).unwrap()).unwrap();
            let sup = a
                .values
                .iter()
                .zip(&b.values)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0_f64, f64::max);
            assert!(sup <= 1e-10, "v = {v}: fast/direct gap {sup}");
        }
    }
}
