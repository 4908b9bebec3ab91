//! Text rendering of doubles shared by the CLI and the sweep writers.

/// Shortest `%.17g`-style rendering: 17 significant digits, trailing zeros
/// and a bare decimal point removed, so `90.0` prints as `90`.
pub fn fmt_g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    // rounding to 17 digits can carry into the next decade, so the exponent
    // is read from the rounded scientific form
    let sci = format!("{:.16e}", x);
    let (mantissa, e) = sci.split_once('e').expect("scientific notation");
    let e: i32 = e.parse().expect("integer exponent");
    if !(-5..17).contains(&e) {
        let m = trim(mantissa);
        let sign = if e < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", e.abs());
    }
    let decimals = (16 - e).max(0) as usize;
    trim(&format!("{:.*}", decimals, x)).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
