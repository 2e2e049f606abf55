//! Fringe visibility `(f_max - f_min) / (f_max + f_min)` of a phase-dependent
//! observable over one period.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Which engine produced a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Gaussian,
    Fock,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Gaussian => "gaussian",
            Engine::Fock => "fock",
        }
    }
}

/// Uniform scan of `[0, 2 pi)` followed by golden-section refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiScan {
    grid_points: usize,
    refine_tol: f64,
}

impl PhiScan {
    pub const DEFAULT_GRID_POINTS: usize = 1024;
    pub const DEFAULT_REFINE_TOL: f64 = 1e-6;

    pub fn new(grid_points: usize, refine_tol: f64) -> Result<Self> {
        if grid_points < 16 {
            return Err(Error::domain(format!("phase grid of {grid_points} points; need >= 16")));
        }
        if !(refine_tol > 0.0 && refine_tol.is_finite()) {
            return Err(Error::domain(format!("refinement tolerance {refine_tol} must be > 0")));
        }
        Ok(PhiScan {
            grid_points,
            refine_tol,
        })
    }

    pub fn grid_points(&self) -> usize {
        self.grid_points
    }

    pub fn refine_tol(&self) -> f64 {
        self.refine_tol
    }

    /// `phi_k = 2 pi k / n` for `k` in `0..n`.
    pub fn grid(&self) -> impl Iterator<Item = f64> {
        let n = self.grid_points;
        (0..n).map(move |k| TAU * k as f64 / n as f64)
    }
}

impl Default for PhiScan {
    fn default() -> Self {
        PhiScan {
            grid_points: Self::DEFAULT_GRID_POINTS,
            refine_tol: Self::DEFAULT_REFINE_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VisibilityResult {
    pub v: f64,
    pub phi_max: f64,
    pub phi_min: f64,
    pub f_max: f64,
    pub f_min: f64,
    pub engine: Engine,
    /// The observable vanished everywhere; `v` is set to 0.
    pub zero_signal: bool,
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Index of the extreme grid value; ties go to the lowest index, so the
/// result does not depend on evaluation order.
fn extreme_index(values: &[f64], better: impl Fn(f64, f64) -> bool) -> usize {
    let mut best = 0;
    for (k, &v) in values.iter().enumerate().skip(1) {
        if better(v, values[best]) {
            best = k;
        }
    }
    best
}

/// Scans `f` over one period, refines the global maximum and minimum inside
/// the grid cells around the best samples, and forms the visibility.
///
/// `f` must be non-negative; values below `-1e-12` relative to the signal
/// scale are reported as unphysical, smaller negatives are clamped to 0.
pub fn visibility(f: impl Fn(f64) -> f64, scan: &PhiScan, engine: Engine) -> Result<VisibilityResult> {
    let values: Vec<f64> = scan.grid().map(&f).collect();
    visibility_from_grid(&f, &values, scan, engine)
}

/// [`visibility`] with the grid samples supplied by the caller (for example
/// computed in parallel). `values[k]` must equal `f(2 pi k / n)`.
pub fn visibility_from_grid(
    f: &impl Fn(f64) -> f64,
    values: &[f64],
    scan: &PhiScan,
    engine: Engine,
) -> Result<VisibilityResult> {
    let n = scan.grid_points();
    if values.len() != n {
        return Err(Error::domain(format!("{} grid samples for a {n}-point scan", values.len())));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Unphysical(format!("observable evaluated to {bad}")));
    }
    let h = TAU / n as f64;
    let kmax = extreme_index(values, |a, b| a > b);
    let kmin = extreme_index(values, |a, b| a < b);
    let center = |k: usize| TAU * k as f64 / n as f64;

    let (mut phi_max, mut f_max) = (center(kmax), values[kmax]);
    let (x, fx) = golden_max(&f, phi_max - h, phi_max + h, scan.refine_tol());
    if fx > f_max {
        phi_max = x;
        f_max = fx;
    }
    let (mut phi_min, mut f_min) = (center(kmin), values[kmin]);
    let neg = |p: f64| -f(p);
    let (x, fx) = golden_max(&neg, phi_min - h, phi_min + h, scan.refine_tol());
    if -fx < f_min {
        phi_min = x;
        f_min = -fx;
    }

    let scale = f_max.abs().max(1.0);
    if f_min < -1e-12 * scale {
        return Err(Error::Unphysical(format!("observable negative: {f_min:e}")));
    }
    let f_min = f_min.max(0.0);
    let f_max = f_max.max(f_min);
    let sum = f_max + f_min;
    let (v, zero_signal) = if sum > 0.0 {
        ((f_max - f_min) / sum, false)
    } else {
        (0.0, true)
    };
    Ok(VisibilityResult {
        v,
        phi_max: phi_max.rem_euclid(TAU),
        phi_min: phi_min.rem_euclid(TAU),
        f_max,
        f_min,
        engine,
        zero_signal,
    })
}

/// Large-`N` form of `V_H`: `1 + (ln(gamma)/5) / ln(N)`.
pub fn vh_asymptotic(n: f64, gamma: f64) -> Result<f64> {
    if !(n > 1.0 && n.is_finite()) {
        return Err(Error::domain(format!("asymptotic form needs N > 1, got {n}")));
    }
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::domain(format!(
            "asymptotic form needs gamma in (0, 1], got {gamma}"
        )));
    }
    Ok(1.0 + (gamma.ln() / 5.0) / n.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constant_signal_has_no_fringes() {
        let r = visibility(|_| 2.5, &PhiScan::default(), Engine::Gaussian).unwrap();
        assert_eq!(r.v, 0.0);
        assert!(!r.zero_signal);
        let z = visibility(|_| 0.0, &PhiScan::default(), Engine::Fock).unwrap();
        assert_eq!(z.v, 0.0);
        assert!(z.zero_signal);
        assert_eq!(z.engine, Engine::Fock);
    }

    #[test]
    fn refines_off_grid_extrema() {
        // 2 + cos(phi - 0.1234567): max 3, min 1, V = 1/2
        let scan = PhiScan::new(16, 1e-9).unwrap();
        let r = visibility(|p| 2.0 + (p - 0.1234567).cos(), &scan, Engine::Gaussian).unwrap();
        assert_relative_eq!(r.f_max, 3.0, epsilon = 1e-12);
        assert_relative_eq!(r.f_min, 1.0, epsilon = 1e-12);
        assert_relative_eq!(r.phi_max, 0.1234567, epsilon = 1e-6);
        assert_relative_eq!(r.phi_min, 0.1234567 + std::f64::consts::PI, epsilon = 1e-6);
        assert_relative_eq!(r.v, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn extremum_across_the_wrap() {
        let scan = PhiScan::new(32, 1e-9).unwrap();
        let r = visibility(|p| 1.0 + (p + 0.05).cos(), &scan, Engine::Gaussian).unwrap();
        assert_relative_eq!(r.phi_max, TAU - 0.05, epsilon = 1e-6);
        assert_relative_eq!(r.v, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn rejects_bad_scans_and_signals() {
        assert!(PhiScan::new(8, 1e-6).unwrap_err().is_domain());
        assert!(PhiScan::new(64, 0.0).is_err());
        assert!(visibility(|p| p.sin(), &PhiScan::default(), Engine::Gaussian).is_err());
    }

    #[test]
    fn asymptotic_form_values() {
        assert_eq!(vh_asymptotic(37.0, 1.0).unwrap(), 1.0);
        assert_relative_eq!(vh_asymptotic(100.0, 0.5).unwrap(), 0.9698970, epsilon = 1e-7);
        assert_relative_eq!(vh_asymptotic(50.0, 0.2).unwrap(), 0.9177184, epsilon = 1e-7);
        assert!(vh_asymptotic(10.0, 0.0).unwrap_err().is_domain());
        assert!(vh_asymptotic(1.0, 0.5).unwrap_err().is_domain());
    }
}
