//! Generalized binomial coefficients and the Grunwald-Letnikov weight table.

use alloc::vec::Vec;

/// Table of weights `w_k = (-1)^k C(v, k)` built by the stable recurrence
/// `w_0 = 1`, `w_k = w_{k-1} (k - 1 - v) / k`.
#[derive(Debug, Clone, PartialEq)]
pub struct GLWeightTable {
    pub order: f64,
    pub weights: Vec<f64>,
}

/// Generalized binomial coefficient `C(v, k) = v (v-1) ... (v-k+1) / k!`.
///
/// The falling-factorial product avoids the gamma-ratio form, which hits
/// poles whenever `v` is a nonpositive integer below `k`.
///
/// ```
/// assert_eq!(fracalc_core::special::gen_binomial(0.5, 2), -0.125);
/// assert_eq!(fracalc_core::special::gen_binomial(3.0, 2), 3.0);
/// ```
pub fn gen_binomial(v: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (v - i as f64) / (i as f64 + 1.0);
    }
    acc
}

/// Weights of the Grunwald-Letnikov differintegral of order `v`, indices
/// `0..=n`. For a nonnegative integer order `m` every weight past index `m`
/// is exactly zero, so the table degenerates to the classical difference
/// stencil.
pub fn gl_weights(v: f64, n: usize) -> GLWeightTable {
    let mut weights = Vec::with_capacity(n + 1);
    weights.push(1.0);
    for k in 1..=n {
        let prev = weights[k - 1];
        weights.push(prev * ((k as f64 - 1.0 - v) / k as f64));
    }
    GLWeightTable { order: v, weights }
}
