//! Complex literals in `a+bi` form, as used by the CLI flags and config
//! files (e.g. `0.7i`, `1.5-0.5i`, `-i`, `2`, `1e-3+2.5e2i`).

use num_complex::Complex64;

use crate::error::Error;

/// Parse a complex literal. Accepts a pure real (`1.5`), a pure imaginary
/// (`0.7i`, `i`, `-i`) or a `real±imag i` combination; exponents in either
/// part are fine.
pub fn parse_complex(s: &str) -> Result<Complex64, Error> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("malformed complex literal '{s}'"));
    if s.is_empty() {
        return Err(bad());
    }
    if !s.ends_with('i') && !s.ends_with('I') {
        if s.contains(['i', 'I']) {
            return Err(bad());
        }
        let re: f64 = s.parse().map_err(|_| bad())?;
        return Ok(Complex64::new(re, 0.0));
    }
    let body = &s[..s.len() - 1];
    if body.contains(['i', 'I']) {
        return Err(bad());
    }
    // Split at the last sign that is not an exponent sign and not leading.
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        if (bytes[idx] == b'+' || bytes[idx] == b'-')
            && bytes[idx - 1] != b'e'
            && bytes[idx - 1] != b'E'
        {
            split = Some(idx);
            break;
        }
    }
    let (re_part, im_part) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part.parse().map_err(|_| bad())?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

/// Render a complex number in the same `a+bi` form the parser accepts.
pub fn format_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.re == 0.0 {
        format!("{}i", v.im)
    } else if v.im < 0.0 {
        format!("{}{}i", v.re, v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

/// Like [`format_complex`] but rounded to a fixed number of decimals, for
/// human-facing output.
pub fn format_complex_fixed(v: Complex64, decimals: usize) -> String {
    if v.im == 0.0 {
        format!("{:.*}", decimals, v.re)
    } else if v.re == 0.0 {
        format!("{:.*}i", decimals, v.im)
    } else if v.im < 0.0 {
        format!("{:.*}{:.*}i", decimals, v.re, decimals, v.im)
    } else {
        format!("{:.*}+{:.*}i", decimals, v.re, decimals, v.im)
    }
}

/// Serde adapter storing a complex value as its `a+bi` literal.
pub mod complex_str {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&super::format_complex(*v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let s = String::deserialize(de)?;
        super::parse_complex(&s).map_err(serde::de::Error::custom)
    }
}
