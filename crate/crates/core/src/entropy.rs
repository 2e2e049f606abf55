//! Thermal-state entropy and its inverse. Natural logarithms throughout.

use crate::error::{Error, Result};

/// `g(n) = ln(1 + n) + n ln(1 + 1/n)`, the entropy of a thermal state with
/// `n` mean photons; `g(0) = 0`.
pub fn thermal_entropy(n: f64) -> Result<f64> {
    if !(n >= 0.0) {
        return Err(Error::domain(format!("thermal photon number {n} must be >= 0")));
    }
    Ok(g(n))
}

pub(crate) fn g(n: f64) -> f64 {
    if n <= 0.0 {
        0.0
    } else {
        n.ln_1p() + n * n.recip().ln_1p()
    }
}

/// Inverse of [`thermal_entropy`]: the thermal occupation whose entropy is `s`.
pub fn thermal_photons_for_entropy(s: f64) -> Result<f64> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("entropy {s} must be finite and >= 0")));
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    // g(n) >= ln(1 + n) bounds the root below e^s - 1.
    let mut lo = 0.0;
    let mut hi = s.exp_m1().max(1e-300);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < s {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}
