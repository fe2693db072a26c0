//! Small helpers for complex scalars and the `a+bi` flag syntax.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// `e^{2πi t}` for real `t`.
pub fn unit_phase(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * t)
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, `a+i` (no whitespace).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let err = || Error::ParseComplex(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(err());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| err());
    };
    // The split point is the last sign that is not the leading sign and not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| err())?,
    };
    let re = re_part.parse::<f64>().map_err(|_| err())?;
    Ok(Complex64::new(re, im))
}

/// Formats as `a+bi` / `a-bi`, the inverse of [`parse_complex`].
pub fn format_complex(z: Complex64) -> String {
    if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
