//! Independent numerical oracles and deterministic sampling helpers used by
//! the invariant suites.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::special;

/// Adaptive Simpson quadrature with Richardson correction.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adapt(f, a, fa, m, fm, b, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adapt(f, a, fa, lm, flm, m, fm, left, tol / 2.0, depth - 1)
            + adapt(f, m, fm, rm, frm, b, fb, right, tol / 2.0, depth - 1)
    }
}

/// Gamma by direct quadrature of its defining integral, in the substituted
/// form `2 int_0^inf w^(2z-1) e^(-w^2) dw` whose integrand is smooth for
/// `z >= 0.5`. Truncated at `w = sqrt(50)`, where the dropped tail is below
/// 2.5e-16 for `z <= 4`.
pub fn gamma_quadrature(z: f64) -> f64 {
    let integrand = move |w: f64| libm::pow(w, 2.0 * z - 1.0) * libm::exp(-w * w);
    2.0 * adaptive_simpson(&integrand, 0.0, libm::sqrt(50.0), 1e-12)
}

/// Binomial coefficient through gamma ratios, the route the falling-factorial
/// product must agree with wherever the ratio is defined. Positive arguments
/// go through log-gamma; a negative non-integer third argument falls back to
/// the reflected gamma evaluation.
pub fn binom_by_gamma(v: f64, k: usize) -> f64 {
    let kf = k as f64;
    let tail = v - kf + 1.0;
    if tail > 0.0 {
        libm::exp(
            special::log_gamma_unchecked(v + 1.0)
                - special::log_gamma_unchecked(kf + 1.0)
                - special::log_gamma_unchecked(tail),
        )
    } else {
        special::gamma_real(v + 1.0) / (special::gamma_real(kf + 1.0) * special::gamma_real(tail))
    }
}

/// Closed-form power rule coefficient for fractional integrals:
/// `J^v x^p = G(p+1)/G(p+v+1) x^(p+v)`.
pub fn integral_power_coeff(v: f64, p: f64) -> f64 {
    special::gamma_real(p + 1.0) / special::gamma_real(p + v + 1.0)
}

/// Closed-form power rule coefficient for fractional derivatives:
/// `D^v x^p = G(p+1)/G(p-v+1) x^(p-v)`.
pub fn derivative_power_coeff(v: f64, p: f64) -> f64 {
    special::gamma_real(p + 1.0) / special::gamma_real(p - v + 1.0)
}

/// Deterministic generator so every suite run sees identical samples.
pub fn test_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw in [0, 1).
pub fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

/// Uniform draw in [-1, 1).
pub fn symmetric_f64(rng: &mut ChaCha8Rng) -> f64 {
    2.0 * unit_f64(rng) - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn simpson_integrates_sine() {
        let v = adaptive_simpson(&|x: f64| libm::sin(x), 0.0, core::f64::consts::PI, 1e-12);
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-11);
    }

    #[test]
    fn quadrature_gamma_at_half() {
        assert_abs_diff_eq!(gamma_quadrature(0.5), 1.772_453_850_905_516, epsilon = 1e-10);
        assert_abs_diff_eq!(gamma_quadrature(4.0), 6.0, epsilon = 1e-9);
    }

    #[test]
    fn gamma_ratio_route_matches_product() {
        use crate::special::gen_binomial;
        for &v in &[1.3, 2.7, 5.5] {
            for k in 0..=20 {
                assert_relative_eq!(binom_by_gamma(v, k), gen_binomial(v, k), max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = test_rng(42);
        let mut b = test_rng(42);
        for _ in 0..10 {
            assert_eq!(unit_f64(&mut a).to_bits(), unit_f64(&mut b).to_bits());
        }
    }
}
