//! Decimal formatting with a fixed number of significant digits.

use num_complex::Complex64;

/// Default number of significant digits in printed output.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` with `digits` significant digits, trimming trailing zeros.
/// Very large or small magnitudes use scientific notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let exponent = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = trim_fraction(&s);
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{:.*e}", digits - 1, x);
        match s.split_once('e') {
            Some((mantissa, exp)) => format!("{}e{exp}", trim_fraction(mantissa)),
            None => s,
        }
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `a+bi` / `a-bi` / `a` (when the imaginary part is zero).
pub fn format_complex(z: Complex64, digits: usize) -> String {
    let re = format_significant(z.re, digits);
    let im = format_significant(z.im, digits);
    if im == "0" {
        re
    } else if let Some(abs) = im.strip_prefix('-') {
        format!("{re}-{abs}i")
    } else {
        format!("{re}+{im}i")
    }
}
