//! Locale-independent number rendering.

use geoment::Amplitude;

/// `x` to `digits` significant digits, plain notation for moderate exponents,
/// trailing zeros trimmed.
pub fn num(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".into()
    } else {
        t.to_string()
    }
}

pub fn signed(x: f64, digits: usize) -> String {
    let s = num(x, digits);
    if s.starts_with('-') {
        s
    } else {
        format!("+{s}")
    }
}

/// Ket amplitude: a signed real, a signed imaginary `..i`, or `(re±imi)`.
pub fn amplitude(a: Amplitude, digits: usize, threshold: f64) -> String {
    match (a.re.abs() > threshold, a.im.abs() > threshold) {
        (_, false) => signed(a.re, digits),
        (false, true) => format!("{}i", signed(a.im, digits)),
        (true, true) => format!("({}{}i)", num(a.re, digits), signed(a.im, digits)),
    }
}
