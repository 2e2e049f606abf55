//! Phase arguments: plain radians or multiples of pi such as `pi/2`,
//! `3pi/4`, `-2*pi/3` or `0.5pi`.

use std::f64::consts::PI;

pub fn parse_phi(text: &str) -> Result<f64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if s.is_empty() {
        return Err("empty phase".into());
    }
    let value = match s.find("pi") {
        None => s.parse::<f64>().map_err(|_| format!("cannot read phase '{text}'"))?,
        Some(at) => {
            let coef = s[..at].trim_end_matches('*');
            let coef = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().map_err(|_| format!("bad coefficient in phase '{text}'"))?,
            };
            let rest = &s[at + 2..];
            let den = match rest {
                "" => 1.0,
                r => match r.strip_prefix('/') {
                    Some(d) => d.parse::<f64>().map_err(|_| format!("bad divisor in phase '{text}'"))?,
                    None => return Err(format!("cannot read phase '{text}'")),
                },
            };
            if den == 0.0 {
                return Err(format!("zero divisor in phase '{text}'"));
            }
            coef * PI / den
        }
    };
    if !value.is_finite() {
        return Err(format!("phase '{text}' is not finite"));
    }
    Ok(value)
}
