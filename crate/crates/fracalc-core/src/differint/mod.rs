//! Differintegral operators on uniformly sampled signals: the
//! Riemann-Liouville fractional integral and derivative, and the
//! Grunwald-Letnikov differintegral with a fast convolution path.

mod compare;
mod gl;
mod rl;

pub use compare::{compare_rl_gl, trim_index, EquivRow, EquivalenceReport};
pub use gl::{gl_differint, gl_differint_fast};
pub use rl::{rl_derivative, rl_integral};
