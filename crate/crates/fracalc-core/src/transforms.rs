//! Numerical Laplace and Z transforms and the operational rule linking the
//! Laplace transform to fractional integration.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::differint::rl_integral;
use crate::error::{Error, Result};
use crate::grid::{Order, SampledSignal};

/// One Laplace evaluation over a finite horizon, with the analytic bound on
/// the truncated tail.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplaceEvaluation {
    pub s: Complex64,
    pub horizon: f64,
    pub value: Complex64,
    /// Bound on the dropped integral past the horizon: for |f| <= M this is
    /// M e^(-Re(s) T) / Re(s).
    pub tail_bound: f64,
}

/// Truncated Z-transform evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ZEvaluation {
    pub z: Complex64,
    pub terms: usize,
    pub value: Complex64,
}

/// Trapezoid quadrature of `f(t) e^(-s t)` over the signal's horizon.
///
/// Requires `Re(s) > 0` and a signal starting at `t = 0`. Accuracy for
/// smooth `f` is O(h^2) plus the reported tail bound.
pub fn laplace_numeric(f: &SampledSignal, s: Complex64) -> Result<LaplaceEvaluation> {
    if !s.re.is_finite() || s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "laplace_numeric requires Re(s) > 0, got Re(s) = {}",
            s.re
        )));
    }
    if f.grid.a != 0.0 {
        return Err(Error::Domain(format!(
            "laplace_numeric requires the signal to start at t = 0, grid starts at {}",
            f.grid.a
        )));
    }
    let n = f.grid.n;
    let h = f.grid.h;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..=n {
        let weight = if j == 0 || j == n { 0.5 } else { 1.0 };
        acc += weight * f.values[j] * (-s * f.grid.x(j)).exp();
    }
    let horizon = f.grid.b;
    let tail_bound = f.max_abs() * libm::exp(-s.re * horizon) / s.re;
    Ok(LaplaceEvaluation { s, horizon, value: h * acc, tail_bound })
}

/// Partial sum of `x[n] z^(-n)` over the whole sequence, evaluated by Horner
/// in the reciprocal variable. Requires `|z| > 1` so the truncation bound for
/// bounded sequences (see [`z_truncation_bound`]) is valid.
pub fn z_transform_truncated(x: &[f64], z: Complex64) -> Result<ZEvaluation> {
    if x.is_empty() {
        return Err(Error::Domain("z_transform_truncated needs a nonempty sequence".into()));
    }
    let r = z.norm();
    if !r.is_finite() || r <= 1.0 {
        return Err(Error::Domain(format!(
            "z_transform_truncated requires |z| > 1, got |z| = {r}"
        )));
    }
    let w = Complex64::new(1.0, 0.0) / z;
    let mut acc = Complex64::new(x[x.len() - 1], 0.0);
    for &xi in x[..x.len() - 1].iter().rev() {
        acc = acc * w + xi;
    }
    Ok(ZEvaluation { z, terms: x.len() - 1, value: acc })
}

/// Geometric bound on the dropped tail of a truncated Z-transform of a
/// sequence bounded by `max_abs_x`, cut after index `n_terms`.
pub fn z_truncation_bound(max_abs_x: f64, z: Complex64, n_terms: usize) -> f64 {
    max_abs_x * libm::pow(z.norm(), -(n_terms as f64)) / (z.norm() - 1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleRow {
    pub s: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_gap: f64,
}

/// Per-`s` discrepancy report for the operational rule
/// `L{J^v f}(s) = s^(-v) L{f}(s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleReport {
    pub order: f64,
    pub rows: Vec<RuleRow>,
}

/// Check the fractional-integration rule of the Laplace transform at a set
/// of `s` samples. The discrepancy at each `s` carries three error sources:
/// trapezoid quadrature O(h^2) on both sides, the truncated tails of both
/// integrals, and the differintegral discretization error of `J^v f`, which
/// dominates at O(h^(1+v)) near the lower terminal.
pub fn verify_laplace_differint_rule(
    f: &SampledSignal,
    v: f64,
    s_samples: &[Complex64],
) -> Result<RuleReport> {
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::Domain(format!("the rule check covers orders in (0, 1), got {v}")));
    }
    let jv = rl_integral(f, Order::new(v)?)?;
    let mut rows = Vec::with_capacity(s_samples.len());
    for &s in s_samples {
        let lhs = laplace_numeric(&jv, s)?.value;
        let rhs = s.powf(-v) * laplace_numeric(f, s)?.value;
        rows.push(RuleRow { s, lhs, rhs, abs_gap: (lhs - rhs).norm() });
    }
    Ok(RuleReport { order: v, rows })
}
