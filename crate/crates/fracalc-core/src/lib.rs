//! Numerical fractional calculus on uniformly sampled signals.
//!
//! Implements the Riemann-Liouville fractional integral and derivative, the
//! Grunwald-Letnikov differintegral (with an FFT-accelerated path), numerical
//! Laplace and Z transforms, a linear fractional differential equation solver,
//! discrete fractional sums and differences, and fractional-order circuit
//! element models. The gamma function and generalized binomial coefficients
//! form the shared kernel.
//!
//! The crate is `no_std` (with `alloc`) so the numerics can run anywhere; IO
//! and file formats live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod axioms;
pub mod catalog;
pub mod circuits;
pub mod differint;
pub mod error;
pub mod fde;
mod fft;
pub mod grid;
pub mod special;
pub mod transforms;

pub use error::{Error, Result};
pub use grid::{Grid, Order, SampledSignal};
pub use num_complex;
