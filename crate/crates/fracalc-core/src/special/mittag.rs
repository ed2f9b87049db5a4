//! Mittag-Leffler function, used as the solution oracle for fractional
//! relaxation problems.

use alloc::format;

use crate::error::{Error, Result};
use crate::special::log_gamma_unchecked;

const TERM_BUDGET: usize = 20_000;

/// Evaluate `E_v(x)` by its power series, sum over j of `x^j / G(v j + 1)`.
///
/// Terms are formed in log space so the factorial growth in the denominator
/// never overflows on the way down. Converges comfortably for `|x| <= 5` and
/// `v >= 0.25`; arguments far outside that box exhaust the term budget or
/// lose too many digits to cancellation and come back as accuracy errors.
///
/// ```
/// let e = fracalc_core::special::mittag_leffler(1.0, 1.0).unwrap();
/// assert!((e - core::f64::consts::E).abs() < 1e-13);
/// ```
pub fn mittag_leffler(v: f64, x: f64) -> Result<f64> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!("mittag_leffler requires v > 0, got {v}")));
    }
    if !x.is_finite() {
        return Err(Error::Domain("mittag_leffler argument must be finite".into()));
    }
    if x == 0.0 {
        return Ok(1.0);
    }

    let ln_ax = libm::log(x.abs());
    let mut sum = 1.0;
    let mut sum_abs = 1.0;
    let mut small_run = 0;
    let mut settled = false;
    for j in 1..=TERM_BUDGET {
        let ln_term = j as f64 * ln_ax - log_gamma_unchecked(v * j as f64 + 1.0);
        let mag = libm::exp(ln_term);
        let term = if x < 0.0 && j % 2 == 1 { -mag } else { mag };
        sum += term;
        sum_abs += mag;
        if mag <= 1e-17 * (1.0 + sum.abs()) {
            small_run += 1;
            if small_run >= 5 {
                settled = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if !sum.is_finite() {
        return Err(Error::Overflow(format!("E_{v}({x}) exceeds the double range")));
    }
    if !settled {
        return Err(Error::Accuracy(format!(
            "series for E_{v}({x}) did not settle within {TERM_BUDGET} terms"
        )));
    }
    // Alternating sums can cancel away all the accurate digits; refuse to
    // return a value whose rounding floor is worse than 1e-10.
    if 2.2e-16 * sum_abs > 1e-10 * if sum.abs() > 1.0 { sum.abs() } else { 1.0 } {
        return Err(Error::Accuracy(format!(
            "cancellation in the series for E_{v}({x}) leaves fewer than 10 digits"
        )));
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn order_one_is_exp() {
        assert_relative_eq!(
            mittag_leffler(1.0, 1.0).unwrap(),
            core::f64::consts::E,
            max_relative = 1e-13
        );
        assert_relative_eq!(mittag_leffler(1.0, -3.0).unwrap(), libm::exp(-3.0), max_relative = 1e-11);
    }

    #[test]
    fn zero_argument() {
        assert_eq!(mittag_leffler(0.5, 0.0).unwrap(), 1.0);
        assert_eq!(mittag_leffler(3.2, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn order_two_is_cosh_of_sqrt() {
        assert_relative_eq!(mittag_leffler(2.0, 1.0).unwrap(), libm::cosh(1.0), max_relative = 1e-13);
    }

    #[test]
    fn half_order_values() {
        // E_{1/2}(x) = exp(x^2) erfc(-x); both routes give these digits.
        assert_relative_eq!(
            mittag_leffler(0.5, 1.0).unwrap(),
            5.008_980_080_762_283,
            max_relative = 1e-11
        );
        assert_abs_diff_eq!(
            mittag_leffler(0.5, -1.0).unwrap(),
            0.427_583_576_155_807_17,
            epsilon = 1e-10
        );
    }

    #[test]
    fn half_order_matches_erfc_identity() {
        // erf(1) from its Taylor series, 2/sqrt(pi) sum (-1)^n / (n! (2n+1))
        let mut erf1 = 0.0;
        let mut factorial = 1.0;
        for n in 0..30 {
            if n > 0 {
                factorial *= n as f64;
            }
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            erf1 += sign / (factorial * (2.0 * n as f64 + 1.0));
        }
        erf1 *= 2.0 / libm::sqrt(core::f64::consts::PI);
        let identity = libm::exp(1.0) * (1.0 + erf1);
        assert_relative_eq!(mittag_leffler(0.5, 1.0).unwrap(), identity, max_relative = 1e-12);
    }

    #[test]
    fn rejects_nonpositive_order() {
        assert!(matches!(mittag_leffler(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(mittag_leffler(-0.5, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn budget_exhaustion_is_an_accuracy_error() {
        // terms shrink like 1/gamma(1 + j/2000), far too slowly to settle
        assert!(matches!(mittag_leffler(0.0005, 1.0), Err(Error::Accuracy(_))));
    }

    #[test]
    fn runaway_series_is_an_overflow_error() {
        // x^(1/v) is astronomically large here, the partial sums blow up
        assert!(matches!(mittag_leffler(0.05, 3.0), Err(Error::Overflow(_))));
    }
}
