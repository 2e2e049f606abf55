//! One evaluated operating point, from either engine.

use crate::error::{Error, Result};
use crate::fock::{self, FockCutoff};
use crate::gaussian;
use crate::input::InputSpec;
use crate::observables::{self, Engine, Observable, PhiScan};

/// How the Fock engine picks its basis size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutoffPolicy {
    /// Smallest adequate size found by search.
    Auto,
    Fixed(usize),
}

/// Basis size used and the worst truncation loss measured there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationInfo {
    pub dim: usize,
    pub tail: f64,
}

/// Beam pair and phase of one point. Beam `a` carries `(n, gamma)`, beam `b`
/// carries `(n, gamma2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    pub n: f64,
    pub gamma: f64,
    pub gamma2: f64,
    pub phi: f64,
}

impl OperatingPoint {
    pub fn beams(&self) -> Result<(InputSpec, InputSpec)> {
        Ok((
            InputSpec::from_energy(self.n, self.gamma)?,
            InputSpec::from_energy(self.n, self.gamma2)?,
        ))
    }
}

/// One row of a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepResult {
    pub point: OperatingPoint,
    pub epsilon: f64,
    /// Entropy-equivalent thermal photons of output mode `a`.
    pub n_phi: f64,
    pub k: f64,
    pub h: f64,
    pub v_k: Option<f64>,
    pub v_h: Option<f64>,
    pub engine: Engine,
    pub truncation: Option<TruncationInfo>,
}

/// Resolves the policy into a concrete cutoff for `point`.
pub fn choose_cutoff(
    a: &InputSpec,
    b: &InputSpec,
    phi: f64,
    policy: CutoffPolicy,
    tail_tol: f64,
) -> Result<FockCutoff> {
    match policy {
        CutoffPolicy::Auto => Ok(fock::auto_cutoff(a, b, phi, tail_tol)?.cutoff),
        CutoffPolicy::Fixed(d) => FockCutoff::new(d, tail_tol),
    }
}

/// `epsilon`, `n_phi`, `K` and `H` at one point from one engine.
pub fn evaluate_point(
    point: OperatingPoint,
    engine: Engine,
    policy: CutoffPolicy,
    tail_tol: f64,
) -> Result<SweepResult> {
    let (a, b) = point.beams()?;
    let phi = point.phi;
    if !phi.is_finite() {
        return Err(Error::domain(format!("phase {phi} is not finite")));
    }
    match engine {
        Engine::Gaussian => {
            let out = gaussian::output_state(&a, &b, phi);
            let report = gaussian::entanglement_of(&out)?;
            let moments = observables::GaussianMoments::new(&out);
            Ok(SweepResult {
                point,
                epsilon: report.epsilon,
                n_phi: report.thermal_photons.0,
                k: moments.coincidence(),
                h: moments.difference_squared(),
                v_k: None,
                v_h: None,
                engine,
                truncation: None,
            })
        }
        Engine::Fock => {
            let cutoff = choose_cutoff(&a, &b, phi, policy, tail_tol)?;
            let r = fock::evaluate(&a, &b, phi, &cutoff)?;
            Ok(SweepResult {
                point,
                epsilon: r.epsilon,
                n_phi: r.thermal_photons.0,
                k: r.k,
                h: r.h,
                v_k: None,
                v_h: None,
                engine,
                truncation: Some(TruncationInfo {
                    dim: cutoff.dim(),
                    tail: r.diagnostics.worst(),
                }),
            })
        }
    }
}

/// Visibility of `which` at `(n, gamma)` for equal beams. The Fock engine
/// picks one cutoff adequate at the quarter turn, where the output spreads
/// most, and reuses it over the whole scan.
pub fn visibility_point(
    n: f64,
    gamma: f64,
    which: Observable,
    engine: Engine,
    policy: CutoffPolicy,
    tail_tol: f64,
    scan: &PhiScan,
) -> Result<(f64, Option<TruncationInfo>)> {
    let beam = InputSpec::from_energy(n, gamma)?;
    match engine {
        Engine::Gaussian => {
            Ok((observables::visibility_gaussian(&beam, &beam, which, scan)?.v, None))
        }
        Engine::Fock => {
            let phi = std::f64::consts::FRAC_PI_2;
            let (cutoff, tail) = match policy {
                CutoffPolicy::Auto => {
                    let c = fock::auto_cutoff(&beam, &beam, phi, tail_tol)?;
                    (c.cutoff, c.diagnostics.worst())
                }
                CutoffPolicy::Fixed(d) => (FockCutoff::new(d, tail_tol)?, f64::NAN),
            };
            let v = observables::visibility_fock(&beam, &beam, which, scan, &cutoff)?.v;
            let tail = if tail.is_nan() {
                fock::evaluate(&beam, &beam, phi, &cutoff)?.diagnostics.worst()
            } else {
                tail
            };
            Ok((v, Some(TruncationInfo { dim: cutoff.dim(), tail })))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn pt(n: f64, gamma: f64, phi: f64) -> OperatingPoint {
        OperatingPoint { n, gamma, gamma2: gamma, phi }
    }

    #[test]
    fn empty_beams_give_zeros() {
        for engine in [Engine::Gaussian, Engine::Fock] {
            let r = evaluate_point(pt(0.0, 0.5, 1.0), engine, CutoffPolicy::Auto, 1e-10).unwrap();
            assert_eq!((r.epsilon, r.n_phi, r.k, r.h), (0.0, 0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn engines_agree_on_twin_beam_point() {
        let p = pt(1.0, 1.0, FRAC_PI_2);
        let g = evaluate_point(p, Engine::Gaussian, CutoffPolicy::Auto, 1e-10).unwrap();
        let f = evaluate_point(p, Engine::Fock, CutoffPolicy::Auto, 1e-10).unwrap();
        assert!((g.epsilon - 1.0).abs() < 1e-10);
        assert!((f.epsilon - 1.0).abs() < 2e-3);
        assert!((g.n_phi - f.n_phi).abs() < 1e-3);
        assert!(f.truncation.unwrap().tail <= 1e-10);
        assert!(g.truncation.is_none());
    }

    #[test]
    fn domain_errors_surface() {
        let err = evaluate_point(pt(-1.0, 0.5, 0.0), Engine::Gaussian, CutoffPolicy::Auto, 1e-10);
        assert!(err.unwrap_err().is_domain());
        let err = evaluate_point(pt(1.0, 0.5, 0.0), Engine::Fock, CutoffPolicy::Fixed(1), 1e-10);
        assert!(err.unwrap_err().is_domain());
    }
}
