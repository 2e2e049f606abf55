use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use mzent_core::fock::{
    self, build_input, displacement_matrix, evolve, mz_unitary, reduced_density,
    twin_beam_reference, von_neumann_entropy, FockCutoff, TwoModeFockVector,
};
use mzent_core::{gaussian, InputSpec, Mode};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn beam(n: f64, gamma: f64) -> InputSpec {
    InputSpec::from_energy(n, gamma).unwrap()
}

#[test]
fn dense_unitary_on_low_sectors() {
    let d = 12;
    for &phi in &[0.3, FRAC_PI_2, 2.0, 5.5] {
        let u = mz_unitary(phi, d).to_dense();
        let prod = u.adjoint() * &u;
        let keep: Vec<usize> = (0..d * d).filter(|i| i / d + i % d <= d - 4).collect();
        for &i in &keep {
            for &j in &keep {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((prod[(i, j)] - Complex64::new(expected, 0.0)).norm() < 1e-10);
            }
        }
    }
}

/// `(D_a(beta_a) (x) D_b(beta_b)) psi` with truncated displacement matrices.
fn displace(psi: &TwoModeFockVector, beta_a: Complex64, beta_b: Complex64) -> TwoModeFockVector {
    let c = *psi.cutoff();
    let d = c.dim();
    let m = DMatrix::from_fn(d, d, |i, j| psi.amplitude(i, j));
    let da = displacement_matrix(beta_a, &c).unwrap();
    let db = displacement_matrix(beta_b, &c).unwrap();
    let out = da * m * db.transpose();
    let amps = (0..d * d).map(|k| out[(k / d, k % d)]).collect();
    TwoModeFockVector::new(amps, c).unwrap()
}

#[test]
fn quarter_turn_output_is_displaced_rotated_twin_beam() {
    let c = FockCutoff::new(40, 1e-4).unwrap();
    for &r in &[0.25, 0.5, 0.75] {
        for &alpha in &[0.0, 0.5, 1.0] {
            let spec = InputSpec::from_amplitude(Complex64::new(alpha, 0.0), r).unwrap();
            let out = evolve(&build_input(&spec, &spec, &c).unwrap(), FRAC_PI_2);
            let beta = Complex64::from_polar(alpha, FRAC_PI_4);
            let tb = twin_beam_reference(r, &c).unwrap().rotate(Mode::B, FRAC_PI_2);
            let reference = displace(&tb, beta, beta);
            let fid = out.fidelity(&reference);
            assert!(fid > 1.0 - 1e-6, "r={r} alpha={alpha}: {fid}");
        }
    }
}

#[test]
fn displacement_leaves_entropy_unchanged() {
    let c = FockCutoff::new(40, 1e-4).unwrap();
    let tb = twin_beam_reference(0.5, &c).unwrap();
    let moved = displace(&tb, Complex64::new(0.6, -0.3), Complex64::new(-0.4, 0.2));
    for mode in [Mode::A, Mode::B] {
        let s0 = von_neumann_entropy(&reduced_density(&tb, mode)).unwrap();
        let s1 = von_neumann_entropy(&reduced_density(&moved, mode)).unwrap();
        assert!((s0 - s1).abs() < 1e-8, "{s0} vs {s1}");
    }
}

#[test]
fn reduced_entropies_agree_for_pure_states() {
    let c = FockCutoff::new(48, 1e-4).unwrap();
    let a = InputSpec::from_amplitude(Complex64::new(0.7, 0.2), 0.6).unwrap();
    let b = InputSpec::from_amplitude(Complex64::new(-0.3, 0.4), 0.3).unwrap();
    let input = build_input(&a, &b, &c).unwrap();
    for k in 0..8 {
        let out = evolve(&input, PI * k as f64 / 4.0);
        let sa = von_neumann_entropy(&reduced_density(&out, Mode::A)).unwrap();
        let sb = von_neumann_entropy(&reduced_density(&out, Mode::B)).unwrap();
        assert!((sa - sb).abs() < 5e-3, "{sa} vs {sb}");
    }
}

#[test]
fn coherent_outputs_stay_rank_one() {
    let c = FockCutoff::new(40, 1e-8).unwrap();
    let a = InputSpec::from_amplitude(Complex64::new(1.1, 0.4), 0.0).unwrap();
    let b = InputSpec::from_amplitude(Complex64::new(-0.5, 0.9), 0.0).unwrap();
    let input = build_input(&a, &b, &c).unwrap();
    for k in 0..16 {
        let out = evolve(&input, 2.0 * PI * k as f64 / 16.0);
        for mode in [Mode::A, Mode::B] {
            let rho = reduced_density(&out, mode);
            let purity = rho.purity() / rho.trace().powi(2);
            assert!(purity > 1.0 - 1e-8, "{purity}");
        }
    }
}

#[test]
fn oracle_matches_analytic_engine_on_small_grid() {
    for &n in &[0.5, 1.0] {
        for &gamma in &[0.0, 0.5, 1.0] {
            let spec = beam(n, gamma);
            for &phi in &[0.0, PI / 8.0, FRAC_PI_4, FRAC_PI_2] {
                let choice = fock::auto_cutoff(&spec, &spec, phi, 1e-10).unwrap();
                let f = fock::evaluate(&spec, &spec, phi, &choice.cutoff).unwrap();
                let e = gaussian::epsilon(&spec, &spec, phi).unwrap();
                assert!((f.epsilon - e).abs() <= 2e-3, "N={n} g={gamma} phi={phi}");
                let k = mzent_core::observables::k_gaussian(&spec, &spec, phi);
                let h = mzent_core::observables::h_gaussian(&spec, &spec, phi);
                assert!((f.k - k).abs() <= 1e-3 * (1.0 + k));
                assert!((f.h - h).abs() <= 1e-3 * (1.0 + h));
            }
        }
    }
}
