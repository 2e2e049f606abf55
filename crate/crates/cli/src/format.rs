//! Locale-free number rendering, in the style of C's `%.{p}g`.

/// `x` with `precision` significant digits: fixed notation for decimal
/// exponents in `[-5, precision)`, scientific otherwise; trailing zeros
/// removed; negative zero printed as `0`.
pub fn real(x: f64, precision: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let p = precision.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= p as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        let fixed = trim_zeros(&format!("{:.*}", decimals, x)).to_string();
        if fixed == "-0" {
            "0".into()
        } else {
            fixed
        }
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
