//! Equivalence comparator between the Riemann-Liouville and
//! Grunwald-Letnikov routes.

use alloc::format;
use alloc::vec::Vec;

use crate::differint::{gl_differint, rl_derivative, rl_integral};
use crate::error::{Error, Result};
use crate::grid::{Grid, Order, SampledSignal};

#[derive(Debug, Clone, PartialEq)]
pub struct EquivRow {
    pub n: usize,
    pub sup_gap: f64,
    /// log2 gap ratio against the previous row; absent on the first row and
    /// when a gap is exactly zero.
    pub est_order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub order: f64,
    pub rows: Vec<EquivRow>,
}

/// First node index outside the lower boundary layer: both operator families
/// lose accuracy over the first 5% of the interval, so equivalence metrics
/// start at `x >= a + 0.05 (b - a)`.
pub fn trim_index(n: usize) -> usize {
    libm::ceil(0.05 * n as f64) as usize
}

/// Evaluate both operator routes at several resolutions and report the
/// boundary-trimmed sup gap per resolution plus the decay order between
/// consecutive rows.
///
/// The signal is sampled at the finest grid; every requested resolution must
/// divide `f.grid.n` so coarser runs can subsample the same nodes. Positive
/// orders compare `rl_derivative` against GL, negative orders compare
/// `rl_integral` of `|v|` against GL.
pub fn compare_rl_gl(
    f: &SampledSignal,
    v: Order,
    resolutions: &[usize],
) -> Result<EquivalenceReport> {
    if v.v == 0.0 {
        return Err(Error::Domain(
            "order zero maps both routes to the identity; nothing to compare".into(),
        ));
    }
    if resolutions.is_empty() {
        return Err(Error::Domain("compare_rl_gl needs at least one resolution".into()));
    }
    for w in resolutions.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Domain("resolutions must be strictly increasing".into()));
        }
    }

    let mut rows: Vec<EquivRow> = Vec::with_capacity(resolutions.len());
    for &r in resolutions {
        if r == 0 || !f.grid.n.is_multiple_of(r) {
            return Err(Error::Domain(format!(
                "resolution {r} must divide the source grid resolution {}",
                f.grid.n
            )));
        }
        let stride = f.grid.n / r;
        let values: Vec<f64> = (0..=r).map(|j| f.values[j * stride]).collect();
        let sub = SampledSignal::new(Grid::new(f.grid.a, f.grid.b, r)?, values)?;

        let rl = if v.v > 0.0 {
            rl_derivative(&sub, v)?
        } else {
            rl_integral(&sub, Order::new(-v.v)?)?
        };
        let gl = gl_differint(&sub, v)?;

        let sup_gap = (trim_index(r)..=r)
            .map(|j| (rl.values[j] - gl.values[j]).abs())
            .fold(0.0_f64, f64::max);
        let est_order = rows.last().and_then(|prev| {
            if prev.sup_gap > 0.0 && sup_gap > 0.0 {
                Some(libm::log2(prev.sup_gap / sup_gap) / libm::log2(r as f64 / prev.n as f64))
            } else {
                None
            }
        });
        rows.push(EquivRow { n: r, sup_gap, est_order });
    }
    Ok(EquivalenceReport { order: v.v, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signal<F: Fn(f64) -> f64>(n: usize, f: F) -> SampledSignal {
        SampledSignal::from_fn(Grid::new(0.0, 1.0, n).unwrap(), f).unwrap()
    }

    #[test]
    fn square_gaps_decrease() {
        let f = signal(1024, |x| x * x);
        let rep = compare_rl_gl(&f, Order::new(0.5).unwrap(), &[256, 512, 1024]).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.rows[1].sup_gap < rep.rows[0].sup_gap);
        assert!(rep.rows[2].sup_gap < rep.rows[1].sup_gap);
    }

    #[test]
    fn constant_at_minus_one_stays_within_a_rectangle() {
        let f = signal(1024, |_| 1.0);
        let rep = compare_rl_gl(&f, Order::new(-1.0).unwrap(), &[256, 512, 1024]).unwrap();
        for row in &rep.rows {
            let h = 1.0 / row.n as f64;
            assert!(row.sup_gap <= 2.0 * h, "n = {}: gap {} > 2h", row.n, row.sup_gap);
        }
    }

    #[test]
    fn linear_at_order_one_is_exact_away_from_the_terminal() {
        let f = signal(1024, |x| x);
        let rep = compare_rl_gl(&f, Order::new(1.0).unwrap(), &[256, 512, 1024]).unwrap();
        for row in &rep.rows {
            assert!(row.sup_gap <= 1e-9, "n = {}: gap {}", row.n, row.sup_gap);
        }
    }

    #[test]
    fn zero_order_and_bad_resolution_lists_are_rejected() {
        let f = signal(64, |x| x);
        assert!(matches!(
            compare_rl_gl(&f, Order::new(0.0).unwrap(), &[32, 64]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            compare_rl_gl(&f, Order::new(0.5).unwrap(), &[48, 64]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            compare_rl_gl(&f, Order::new(0.5).unwrap(), &[64, 32]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            compare_rl_gl(&f, Order::new(0.5).unwrap(), &[]),
            Err(Error::Domain(_))
        ));
    }
}
