//! Gamma-function kernel and the coefficient machinery built on it.

mod binomial;
mod mittag;

pub use binomial::{gen_binomial, gl_weights, GLWeightTable};
pub use mittag::mittag_leffler;

use alloc::format;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used for gamma arguments and transform variables.
pub type ComplexScalar = Complex64;

// Lanczos approximation, g = 7, 9 terms. Relative error stays below 1e-13
// on the right half plane away from the poles.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// Real gamma evaluations overflow past this argument.
pub const GAMMA_OVERFLOW_THRESHOLD: f64 = 171.62;

/// Gamma function for complex arguments.
///
/// Nonpositive real integers are poles and produce a domain error; real
/// arguments beyond [`GAMMA_OVERFLOW_THRESHOLD`] produce an overflow error.
/// Positive integer arguments are evaluated by the exact factorial product.
///
/// ```
/// use num_complex::Complex64;
/// let g = fracalc_core::special::gamma(Complex64::new(5.0, 0.0)).unwrap();
/// assert_eq!(g.re, 24.0);
/// ```
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("gamma argument must be finite".into()));
    }
    if z.im == 0.0 {
        let x = z.re;
        if x <= 0.0 && x == libm::floor(x) {
            return Err(Error::Domain(format!("gamma has a pole at z = {x}")));
        }
        if x > GAMMA_OVERFLOW_THRESHOLD {
            return Err(Error::Overflow(format!(
                "gamma({x}) exceeds the double range (threshold {GAMMA_OVERFLOW_THRESHOLD})"
            )));
        }
        return Ok(Complex64::new(gamma_real(x), 0.0));
    }
    let val = gamma_complex(z);
    if !val.re.is_finite() || !val.im.is_finite() {
        return Err(Error::Overflow(format!("gamma({z}) exceeds the double range")));
    }
    Ok(val)
}

/// Real gamma for non-pole arguments; positive integers go through the exact
/// product, everything else through Lanczos with reflection below 1/2.
pub(crate) fn gamma_real(x: f64) -> f64 {
    if x > 0.0 && x == libm::floor(x) && x <= 171.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return acc;
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos sum on the right half line.
        PI / (libm::sin(PI * x) * gamma_real(1.0 - x))
    } else {
        let t = x + LANCZOS_G - 0.5;
        SQRT_TWO_PI * libm::pow(t, x - 0.5) * libm::exp(-t) * lanczos_sum_real(x)
    }
}

fn lanczos_sum_real(x: f64) -> f64 {
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x - 1.0 + i as f64);
    }
    a
}

fn gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        PI / (s * gamma_complex(1.0 - z))
    } else {
        let t = z + (LANCZOS_G - 0.5);
        let mut a = Complex64::new(LANCZOS[0], 0.0);
        for (i, c) in LANCZOS.iter().enumerate().skip(1) {
            a += c / (z + (i as f64 - 1.0));
        }
        SQRT_TWO_PI * ((z - 0.5) * t.ln() - t).exp() * a
    }
}

/// Natural log of gamma for positive real arguments, usable far past the
/// point where `gamma` itself overflows (up to about 1e6).
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_unchecked(x))
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // log G(x) = log G(x + 1) - log x
        return log_gamma_unchecked(x + 1.0) - libm::log(x);
    }
    let t = x + LANCZOS_G - 0.5;
    0.5 * libm::log(2.0 * PI) + (x - 0.5) * libm::log(t) - t + libm::log(lanczos_sum_real(x))
}
