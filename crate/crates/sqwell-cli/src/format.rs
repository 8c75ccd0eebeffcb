//! Significant-digit number formatting, locale independent.
//!
//! Values print in plain decimal while the exponent stays in [-4, digits),
//! and in exponent form outside that window; trailing zeros are trimmed
//! either way. Every emitted token is also a valid JSON number, and parsing
//! a token back and re-formatting it reproduces the same bytes.

/// `x` rendered to `digits` significant digits (1..=17).
pub fn sig(x: f64, digits: usize) -> String {
    debug_assert!((1..=17).contains(&digits));
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent form");
    let e: i32 = exp.parse().expect("integer exponent");
    let sign = if mant.starts_with('-') { "-" } else { "" };
    let d: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if e >= -4 && (e as i64) < digits as i64 {
        if e < 0 {
            let mut frac = "0".repeat((-e - 1) as usize);
            frac.push_str(&d);
            format!("0.{}", frac.trim_end_matches('0'))
        } else {
            let (int_part, frac_part) = d.split_at(e as usize + 1);
            let frac = frac_part.trim_end_matches('0');
            if frac.is_empty() {
                int_part.into()
            } else {
                format!("{int_part}.{frac}")
            }
        }
    } else {
        let (first, rest) = d.split_at(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{first}e{e}")
        } else {
            format!("{first}.{rest}e{e}")
        }
    };
    format!("{sign}{body}")
}
