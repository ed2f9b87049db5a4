//! Minimal iterative radix-2 FFT backing the fast convolution path.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// In-place transform of a power-of-two length signal held as split
/// real/imaginary buffers. The inverse applies the conjugate transform and
/// the 1/n scale.
pub fn fft_pow2(re: &mut [f64], im: &mut [f64], inverse: bool) {
    let n = re.len();
    debug_assert!(n.is_power_of_two());
    debug_assert_eq!(im.len(), n);
    if n <= 1 {
        return;
    }

    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            re.swap(i, j);
            im.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        // direct trig per twiddle keeps rounding flat across stages
        let step = sign * PI / half as f64;
        let mut base = 0;
        while base < n {
            for t in 0..half {
                let ang = step * t as f64;
                let (wr, wi) = (libm::cos(ang), libm::sin(ang));
                let (ur, ui) = (re[base + t], im[base + t]);
                let (xr, xi) = (re[base + t + half], im[base + t + half]);
                let vr = xr * wr - xi * wi;
                let vi = xr * wi + xi * wr;
                re[base + t] = ur + vr;
                im[base + t] = ui + vi;
                re[base + t + half] = ur - vr;
                im[base + t + half] = ui - vi;
            }
            base += len;
        }
        len <<= 1;
    }

    if inverse {
        let scale = 1.0 / n as f64;
        for v in re.iter_mut() {
            *v *= scale;
        }
        for v in im.iter_mut() {
            *v *= scale;
        }
    }
}

/// Full linear convolution of two real sequences, length `a + b - 1`.
pub fn convolve_real(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert!(!a.is_empty() && !b.is_empty());
    let out_len = a.len() + b.len() - 1;
    let m = out_len.next_power_of_two();

    let mut ar = vec![0.0; m];
    ar[..a.len()].copy_from_slice(a);
    let mut ai = vec![0.0; m];
    let mut br = vec![0.0; m];
    br[..b.len()].copy_from_slice(b);
    let mut bi = vec![0.0; m];

    fft_pow2(&mut ar, &mut ai, false);
    fft_pow2(&mut br, &mut bi, false);
    for i in 0..m {
        let r = ar[i] * br[i] - ai[i] * bi[i];
        let s = ar[i] * bi[i] + ai[i] * br[i];
        ar[i] = r;
        ai[i] = s;
    }
    fft_pow2(&mut ar, &mut ai, true);
    ar.truncate(out_len);
    ar
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn roundtrip_recovers_signal() {
        let orig: Vec<f64> = (0..16).map(|i| (i as f64 * 0.37).sin()).collect();
        let mut re = orig.clone();
        let mut im = vec![0.0; 16];
        fft_pow2(&mut re, &mut im, false);
        fft_pow2(&mut re, &mut im, true);
        for (a, b) in re.iter().zip(&orig) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-13);
        }
    }

    #[test]
    fn small_convolution_by_hand() {
        let c = convolve_real(&[1.0, 2.0, 3.0], &[4.0, 5.0]);
        assert_eq!(c.len(), 4);
        assert_abs_diff_eq!(c[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c[1], 13.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c[2], 22.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c[3], 15.0, epsilon = 1e-12);
    }

    #[test]
    fn matches_direct_convolution() {
        let a: Vec<f64> = (0..257).map(|i| (i as f64 * 0.11).cos()).collect();
        let b: Vec<f64> = (0..129).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let fast = convolve_real(&a, &b);
        for j in 0..fast.len() {
            let mut direct = 0.0;
            for k in 0..b.len() {
                if j >= k && j - k < a.len() {
                    direct += b[k] * a[j - k];
                }
            }
            assert_abs_diff_eq!(fast[j], direct, epsilon = 1e-11);
        }
    }
}
