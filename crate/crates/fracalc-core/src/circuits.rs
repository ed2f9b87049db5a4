//! Fractional-order circuit elements: resistoductor, fractional integrator,
//! fractional differentiator, and sums/reciprocals of `K s^v` terms.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::differint::{gl_differint, trim_index};
use crate::error::{Error, Result};
use crate::grid::{Grid, Order, SampledSignal};
use crate::special;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    /// Interpolates resistor (v = 0) and inductor (v = 1); impedance K s^v.
    Resistoductor,
    /// Impedance K s^(-v), v > 0.
    FracIntegrator,
    /// Impedance K s^v, v > 0.
    FracDifferentiator,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracElement {
    pub kind: ElementKind,
    pub gain: f64,
    pub order: f64,
}

impl FracElement {
    pub fn new(kind: ElementKind, gain: f64, order: f64) -> Result<FracElement> {
        if !gain.is_finite() || gain <= 0.0 {
            return Err(Error::Domain(format!("element gain must be positive, got {gain}")));
        }
        if !order.is_finite() {
            return Err(Error::Domain("element order must be finite".into()));
        }
        let range_ok = match kind {
            ElementKind::Resistoductor => (0.0..=1.0).contains(&order),
            ElementKind::FracIntegrator | ElementKind::FracDifferentiator => order > 0.0,
        };
        if !range_ok {
            return Err(Error::Domain(format!(
                "order {order} outside the valid range for {kind:?}"
            )));
        }
        Ok(FracElement { kind, gain, order })
    }

    /// Exponent of s in the impedance law.
    fn exponent(&self) -> f64 {
        match self.kind {
            ElementKind::Resistoductor | ElementKind::FracDifferentiator => self.order,
            ElementKind::FracIntegrator => -self.order,
        }
    }
}

/// Impedance `K s^(+-v)` on the principal branch
/// `s^v = exp(v (ln|s| + i arg s))`, `arg s` in `(-pi, pi]`.
pub fn impedance(e: &FracElement, s: Complex64) -> Result<Complex64> {
    let expo = e.exponent();
    if s == Complex64::new(0.0, 0.0) {
        if expo > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if expo == 0.0 {
            return Ok(Complex64::new(e.gain, 0.0));
        }
        return Err(Error::Domain(
            "impedance with negative exponent is singular at s = 0".into(),
        ));
    }
    Ok(e.gain * s.powf(expo))
}

/// Unit-step response of a fractional integrator together with the gap to a
/// Grunwald-Letnikov simulation of the same response.
#[derive(Debug, Clone, PartialEq)]
pub struct StepResponse {
    pub signal: SampledSignal,
    /// Sup gap between the closed form and the GL route, excluding the first
    /// 5% of nodes next to the lower terminal.
    pub gl_sup_gap: f64,
}

/// Closed-form step response `y(t) = K t^v / G(v + 1)` of a fractional
/// integrator, cross-checked against `gl_differint` of the unit step.
pub fn step_response(e: &FracElement, grid: Grid) -> Result<StepResponse> {
    if e.kind != ElementKind::FracIntegrator {
        return Err(Error::Domain(format!(
            "step_response models the fractional integrator, got {:?}",
            e.kind
        )));
    }
    if grid.a != 0.0 {
        return Err(Error::Domain(format!(
            "step response starts at t = 0, grid starts at {}",
            grid.a
        )));
    }
    let gamma_v1 = special::gamma_real(e.order + 1.0);
    if !gamma_v1.is_finite() {
        return Err(Error::Overflow(format!("G(v + 1) not finite for v = {}", e.order)));
    }
    let closed =
        SampledSignal::from_fn(grid, |t| e.gain * libm::pow(t, e.order) / gamma_v1)?;

    let step = SampledSignal::from_fn(grid, |_| 1.0)?;
    let sim = gl_differint(&step, Order::new(-e.order)?)?;
    let gl_sup_gap = (trim_index(grid.n)..=grid.n)
        .map(|j| (closed.values[j] - e.gain * sim.values[j]).abs())
        .fold(0.0_f64, f64::max);

    Ok(StepResponse { signal: closed, gl_sup_gap })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodePoint {
    pub omega: f64,
    pub mag_db: f64,
    pub phase_deg: f64,
}

/// Frequency response table at the given angular frequencies, all of which
/// must be positive. Fractional elements have constant phase `+-v * 90` and
/// magnitude slope `+-20 v` dB per decade.
pub fn bode_data(e: &FracElement, omegas: &[f64]) -> Result<Vec<BodePoint>> {
    if let Some(bad) = omegas.iter().find(|w| !w.is_finite() || **w <= 0.0) {
        return Err(Error::Domain(format!("bode_data requires positive frequencies, got {bad}")));
    }
    let mut out = Vec::with_capacity(omegas.len());
    for &omega in omegas {
        let z = impedance(e, Complex64::new(0.0, omega))?;
        out.push(BodePoint {
            omega,
            mag_db: 20.0 * libm::log10(z.norm()),
            phase_deg: z.arg().to_degrees(),
        });
    }
    Ok(out)
}

/// Transfer function `H(s) = sum K_i s^(v_i)`, or its reciprocal when the
/// flag is set.
#[derive(Debug, Clone, PartialEq)]
pub struct FracTransferFunction {
    pub terms: Vec<(f64, f64)>,
    pub reciprocal: bool,
}

impl FracTransferFunction {
    pub fn new(terms: Vec<(f64, f64)>, reciprocal: bool) -> Result<FracTransferFunction> {
        if terms.is_empty() {
            return Err(Error::Domain("transfer function needs at least one term".into()));
        }
        if terms.iter().any(|(k, v)| !k.is_finite() || !v.is_finite()) {
            return Err(Error::Domain("transfer function terms must be finite".into()));
        }
        Ok(FracTransferFunction { terms, reciprocal })
    }

    pub fn evaluate(&self, s: Complex64) -> Result<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for &(k, v) in &self.terms {
            if s == Complex64::new(0.0, 0.0) {
                if v > 0.0 {
                    continue;
                }
                if v == 0.0 {
                    sum += k;
                    continue;
                }
                return Err(Error::Domain(
                    "transfer function with negative exponent is singular at s = 0".into(),
                ));
            }
            sum += k * s.powf(v);
        }
        if self.reciprocal {
            if sum == Complex64::new(0.0, 0.0) {
                return Err(Error::Singular(format!("transfer function denominator vanishes at s = {s}")));
            }
            return Ok(Complex64::new(1.0, 0.0) / sum);
        }
        Ok(sum)
    }
}
