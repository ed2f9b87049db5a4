//! Uniform sampling grids, sampled signals and differintegration orders.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Uniform lattice of `n + 1` nodes `x_j = a + j*h` on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub h: f64,
}

impl Grid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Grid> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!("grid endpoints must be finite, got [{a}, {b}]")));
        }
        if b <= a {
            return Err(Error::Domain(format!("grid requires b > a, got [{a}, {b}]")));
        }
        if n == 0 {
            return Err(Error::Domain("grid requires at least one interval".into()));
        }
        Ok(Grid { a, b, n, h: (b - a) / n as f64 })
    }

    /// Node coordinate `x_j = a + j*h`.
    pub fn x(&self, j: usize) -> f64 {
        self.a + j as f64 * self.h
    }
}

/// Real-valued samples `f(x_0) .. f(x_n)` bound to a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    pub grid: Grid,
    pub values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<SampledSignal> {
        if values.len() != grid.n + 1 {
            return Err(Error::Domain(format!(
                "signal needs {} samples for this grid, got {}",
                grid.n + 1,
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("signal samples must be finite".into()));
        }
        Ok(SampledSignal { grid, values })
    }

    /// Sample a function on the grid nodes.
    pub fn from_fn<F: Fn(f64) -> f64>(grid: Grid, f: F) -> Result<SampledSignal> {
        let values = (0..=grid.n).map(|j| f(grid.x(j))).collect();
        SampledSignal::new(grid, values)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| if v.abs() > m { v.abs() } else { m })
    }
}

/// Differintegration order `v`; positive orders differentiate, negative
/// orders integrate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    pub v: f64,
}

impl Order {
    pub fn new(v: f64) -> Result<Order> {
        if !v.is_finite() {
            return Err(Error::Domain("order must be finite".into()));
        }
        Ok(Order { v })
    }

    /// True when `v` is within 1e-12 of an integer.
    pub fn is_integer(&self) -> bool {
        (self.v - libm::round(self.v)).abs() <= 1e-12
    }

    pub fn is_positive(&self) -> bool {
        self.v > 0.0
    }

    /// Smallest integer m with m >= v, as used by the integrate-then-differentiate
    /// form of the fractional derivative. Meaningful for v > 0.
    pub fn ceil_order(&self) -> usize {
        libm::ceil(self.v) as usize
    }
}
