//! Exact Gaussian engine: symplectic propagation of the input beams through
//! the interferometer, reduced-state entropies and the degree of entanglement.

mod state;
mod symplectic;

pub use state::{Mode, ReducedModeState, TwoModeGaussianState, VACUUM_VARIANCE};
pub use symplectic::{mz_map, mz_map_conjugated, omega, SymplecticMap};

use crate::entropy::g;
use crate::error::{Error, Result};
use crate::input::InputSpec;

const UNPHYSICAL_DET: f64 = 1e-8;
const PURE_BAND: f64 = 1e-12;

pub fn make_input_state(a: &InputSpec, b: &InputSpec) -> TwoModeGaussianState {
    TwoModeGaussianState::from_inputs(a, b)
}

pub fn apply(map: &SymplecticMap, state: &TwoModeGaussianState) -> TwoModeGaussianState {
    map.apply(state)
}

pub fn reduce(state: &TwoModeGaussianState, mode: Mode) -> ReducedModeState {
    state.reduce(mode)
}

/// Output state of the interferometer at phase `phi`.
pub fn output_state(a: &InputSpec, b: &InputSpec, phi: f64) -> TwoModeGaussianState {
    mz_map(phi).apply(&make_input_state(a, b))
}

/// Occupation of the thermal state with the same entropy as `reduced`:
/// `(sqrt(16 det cov) - 1)/2`. The displacement plays no role.
pub fn thermal_photons(reduced: &ReducedModeState) -> Result<f64> {
    let det = reduced.cov.determinant();
    let floor = VACUUM_VARIANCE * VACUUM_VARIANCE;
    if det < floor - UNPHYSICAL_DET {
        return Err(Error::Unphysical(format!(
            "reduced determinant {det:.6e} below 1/16"
        )));
    }
    // Rotations of a vacuum-like block move det by a few ulps; treat that
    // band as pure.
    if det <= floor * (1.0 + PURE_BAND) {
        return Ok(0.0);
    }
    Ok(0.5 * ((16.0 * det).sqrt() - 1.0))
}

/// `(sqrt(1 + sin^2(phi) sinh^2(2r)) - 1)/2`: thermal occupation of either
/// output mode for two identical inputs with squeezing `r`.
pub fn nphi_closed_form(r: f64, phi: f64) -> f64 {
    let s = phi.sin() * (2.0 * r).sinh();
    0.5 * ((1.0 + s * s).sqrt() - 1.0)
}

/// Breakdown of the normalized excess entropy at the output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub epsilon: f64,
    /// Entropy-equivalent thermal photons of each output mode.
    pub thermal_photons: (f64, f64),
    /// Mean photons of each output mode.
    pub mean_photons: (f64, f64),
    pub entropies: (f64, f64),
}

/// `eps = (S_a + S_b - S) / (g(N_a) + g(N_b))` for an arbitrary two-mode
/// Gaussian state assumed pure (`S = 0`), with `N_x` the mean photons of
/// output mode `x`. Returns 0 when both modes are empty.
pub fn entanglement_of(state: &TwoModeGaussianState) -> Result<EntanglementReport> {
    let ra = state.reduce(Mode::A);
    let rb = state.reduce(Mode::B);
    let na = thermal_photons(&ra)?;
    let nb = thermal_photons(&rb)?;
    let ma = ra.mean_photons().max(0.0);
    let mb = rb.mean_photons().max(0.0);
    let (sa, sb) = (g(na), g(nb));
    let denom = g(ma) + g(mb);
    let epsilon = if denom > 0.0 { (sa + sb) / denom } else { 0.0 };
    Ok(EntanglementReport {
        epsilon,
        thermal_photons: (na, nb),
        mean_photons: (ma, mb),
        entropies: (sa, sb),
    })
}

/// Degree of entanglement of the output for inputs `a`, `b` at phase `phi`.
pub fn epsilon(a: &InputSpec, b: &InputSpec, phi: f64) -> Result<f64> {
    if !phi.is_finite() {
        return Err(Error::domain(format!("phase {phi} is not finite")));
    }
    Ok(entanglement_of(&output_state(a, b, phi))?.epsilon)
}

/// Large-`N` form `1 + ln(gamma)/ln(N)`.
pub fn epsilon_asymptotic(n: f64, gamma: f64) -> Result<f64> {
    if !(n > 1.0) {
        return Err(Error::domain(format!("asymptotic form needs N > 1, got {n}")));
    }
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::domain(format!(
            "asymptotic form needs gamma in (0, 1], got {gamma}"
        )));
    }
    Ok(1.0 + gamma.ln() / n.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::{Matrix2, Vector2};
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn beam(n: f64, gamma: f64) -> InputSpec {
        InputSpec::from_energy(n, gamma).unwrap()
    }

    #[test]
    fn thermal_photons_reference_cases() {
        let vac = ReducedModeState::new(Vector2::zeros(), Matrix2::identity() * 0.25).unwrap();
        assert_eq!(thermal_photons(&vac).unwrap(), 0.0);
        let th = ReducedModeState::new(Vector2::new(2.0, 1.0), Matrix2::identity() * 1.75).unwrap();
        assert_relative_eq!(thermal_photons(&th).unwrap(), 3.0, epsilon = 1e-14);
    }

    #[test]
    fn thermal_photons_rejects_sub_vacuum() {
        let bad = ReducedModeState {
            mean: Vector2::zeros(),
            cov: Matrix2::identity() * 0.2,
        };
        assert!(matches!(thermal_photons(&bad), Err(Error::Unphysical(_))));
        // inside the clamp band: accepted and clamped to zero
        let edge = ReducedModeState {
            mean: Vector2::zeros(),
            cov: Matrix2::new(0.25, 0.0, 0.0, 0.25 - 1e-12),
        };
        assert_eq!(thermal_photons(&edge).unwrap(), 0.0);
    }

    #[test]
    fn nphi_reference_cases() {
        assert_eq!(nphi_closed_form(0.9, 0.0), 0.0);
        let spec = beam(3.0, 0.5);
        assert_relative_eq!(nphi_closed_form(spec.r(), FRAC_PI_2), 1.5, epsilon = 1e-12);
        // sinh^2 2r = 4 * 1.5 * 2.5 = 15, sin^2(pi/4) = 1/2
        let expected = 0.5 * (8.5f64.sqrt() - 1.0);
        assert_relative_eq!(nphi_closed_form(spec.r(), FRAC_PI_4), expected, epsilon = 1e-12);
        assert_relative_eq!(expected, 0.95774, epsilon = 1e-5);
    }

    #[test]
    fn symplectic_path_matches_closed_form_at_quarter_turn() {
        let spec = beam(3.0, 0.5);
        let out = output_state(&spec, &spec, FRAC_PI_4);
        let n = thermal_photons(&out.reduce(Mode::A)).unwrap();
        assert_relative_eq!(n, 0.5 * (8.5f64.sqrt() - 1.0), epsilon = 1e-12);
    }

    #[test]
    fn squeezed_vacuum_pair_gives_twin_beam_marginals() {
        let r: f64 = 1.0;
        let sv = InputSpec::from_amplitude(Complex64::new(0.0, 0.0), r).unwrap();
        let out = output_state(&sv, &sv, FRAC_PI_2);
        let ra = out.reduce(Mode::A);
        let c = (2.0 * r).cosh() / 4.0;
        assert!((ra.cov - Matrix2::new(c, 0.0, 0.0, c)).amax() < 1e-13);
        assert_relative_eq!(thermal_photons(&ra).unwrap(), r.sinh().powi(2), epsilon = 1e-12);
        // Twin-beam correlations: <x_a y_b> = <y_a x_b> = sinh(2r)/4
        let cov = out.cov();
        let k = (2.0 * r).sinh() / 4.0;
        assert_relative_eq!(cov[(0, 3)], k, epsilon = 1e-13);
        assert_relative_eq!(cov[(1, 2)], k, epsilon = 1e-13);
        assert!(cov[(0, 2)].abs() < 1e-13 && cov[(1, 3)].abs() < 1e-13);
    }

    #[test]
    fn coherent_inputs_stay_vacuum_like() {
        let coh = InputSpec::from_amplitude(Complex64::new(1.3, -0.4), 0.0).unwrap();
        for k in 0..16 {
            let phi = 2.0 * PI * k as f64 / 16.0;
            let out = output_state(&coh, &coh, phi);
            assert!((out.cov() - nalgebra::Matrix4::identity() * 0.25).amax() < 1e-15);
            assert_eq!(epsilon(&coh, &coh, phi).unwrap(), 0.0);
        }
    }

    #[test]
    fn epsilon_reference_points() {
        let half = beam(3.0, 0.5);
        let expected = g(1.5) / g(3.0);
        assert_relative_eq!(epsilon(&half, &half, FRAC_PI_2).unwrap(), expected, epsilon = 1e-12);
        assert_relative_eq!(expected, 0.7480100, epsilon = 1e-7);
        assert_eq!(epsilon(&half, &half, 0.0).unwrap(), 0.0);
        for &n in &[0.5, 1.0, 3.0, 10.0, 1000.0] {
            let sv = beam(n, 1.0);
            assert_relative_eq!(epsilon(&sv, &sv, FRAC_PI_2).unwrap(), 1.0, epsilon = 1e-10);
        }
        let vac = InputSpec::VACUUM;
        assert_eq!(epsilon(&vac, &vac, 1.0).unwrap(), 0.0);
        assert!(epsilon(&vac, &vac, f64::INFINITY).is_err());
    }

    #[test]
    fn epsilon_large_n() {
        let b = beam(1000.0, 0.5);
        let e = epsilon(&b, &b, FRAC_PI_2).unwrap();
        assert_relative_eq!(e, g(500.0) / g(1000.0), epsilon = 1e-12);
        assert_relative_eq!(e, 0.9124146, epsilon = 1e-6);
        let asym = epsilon_asymptotic(1000.0, 0.5).unwrap();
        assert!((e - asym).abs() / e < 0.02);
    }

    #[test]
    fn asymptotic_reference_values() {
        assert_eq!(epsilon_asymptotic(50.0, 1.0).unwrap(), 1.0);
        assert_relative_eq!(epsilon_asymptotic(1000.0, 0.5).unwrap(), 0.8996567, epsilon = 1e-7);
        assert_relative_eq!(epsilon_asymptotic(100.0, 0.8).unwrap(), 0.9515450, epsilon = 1e-7);
        assert!(epsilon_asymptotic(100.0, 0.0).unwrap_err().is_domain());
        assert!(epsilon_asymptotic(1.0, 0.5).unwrap_err().is_domain());
    }

    #[test]
    fn unequal_squeezing_stays_below_one() {
        let e = epsilon(&beam(3.0, 1.0), &beam(3.0, 0.5), FRAC_PI_2).unwrap();
        assert!(e < 1.0 && e > 0.5, "eps = {e}");
    }
}
