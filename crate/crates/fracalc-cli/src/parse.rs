//! Parsing and printing of complex scalars in "a+bi" notation.

use anyhow::{bail, Result};
use fracalc_core::num_complex::Complex64;

/// Accepts "2", "-1.5", "3i", "-i", "1+2i", "1.5e-2-2e1i".
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t = text.trim();
    if t.is_empty() {
        bail!("empty complex literal");
    }
    if let Ok(re) = t.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        bail!("cannot parse '{t}' as a complex number");
    };
    // split at the last sign that is not leading and not an exponent sign
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-')
            && !matches!(bytes[k - 1], b'e' | b'E')
        {
            split = Some(k);
            break;
        }
    }
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse::<f64>()
            .map_err(|_| anyhow::anyhow!("cannot parse imaginary part of '{t}'"))?,
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part
            .parse::<f64>()
            .map_err(|_| anyhow::anyhow!("cannot parse real part of '{t}'"))?
    };
    Ok(Complex64::new(re, im))
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return format!("{}", z.re);
    }
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
