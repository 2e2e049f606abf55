use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector2, Vector4};

use super::symplectic;

use crate::error::{Error, Result};
use crate::input::InputSpec;

/// Variance of either vacuum quadrature. Quadratures are `x = (a + a')/2`,
/// `y = (a - a')/2i`, so a mode's mean photon number is `<x^2> + <y^2> - 1/2`.
pub const VACUUM_VARIANCE: f64 = 0.25;

const SYMMETRY_TOL: f64 = 1e-12;
const UNCERTAINTY_TOL: f64 = 1e-10;
const CLAMP_BAND: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    A,
    B,
}

impl Mode {
    pub(crate) fn offset(self) -> usize {
        match self {
            Mode::A => 0,
            Mode::B => 2,
        }
    }
}

/// Gaussian state of modes `a`, `b`: quadrature means and symmetrized
/// covariance, both ordered `(x_a, y_a, x_b, y_b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeGaussianState {
    pub(crate) mean: Vector4<f64>,
    pub(crate) cov: Matrix4<f64>,
}

impl TwoModeGaussianState {
    pub fn new(mean: Vector4<f64>, cov: Matrix4<f64>) -> Result<Self> {
        for i in 0..4 {
            for j in 0..i {
                if (cov[(i, j)] - cov[(j, i)]).abs() > SYMMETRY_TOL {
                    return Err(Error::Unphysical(format!(
                        "covariance not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let state = TwoModeGaussianState { mean, cov };
        let (lo, _) = state.raw_symplectic_eigenvalues();
        if !(lo >= VACUUM_VARIANCE - UNCERTAINTY_TOL) {
            return Err(Error::Unphysical(format!(
                "symplectic eigenvalue {lo:.3e} below vacuum level"
            )));
        }
        Ok(state)
    }

    pub fn vacuum() -> Self {
        TwoModeGaussianState {
            mean: Vector4::zeros(),
            cov: Matrix4::identity() * VACUUM_VARIANCE,
        }
    }

    /// Product of two squeezed-coherent beams: block-diagonal covariance with
    /// `Var x = e^{2r}/4`, `Var y = e^{-2r}/4` per mode.
    pub fn from_inputs(a: &InputSpec, b: &InputSpec) -> Self {
        let block = |s: &InputSpec| {
            let e = (2.0 * s.r()).exp();
            (e * VACUUM_VARIANCE, VACUUM_VARIANCE / e)
        };
        let (xa, ya) = block(a);
        let (xb, yb) = block(b);
        TwoModeGaussianState {
            mean: Vector4::new(a.alpha().re, a.alpha().im, b.alpha().re, b.alpha().im),
            cov: Matrix4::from_diagonal(&Vector4::new(xa, ya, xb, yb)),
        }
    }

    pub fn mean(&self) -> &Vector4<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix4<f64> {
        &self.cov
    }

    /// Marginal of one mode: the Gaussian sub-block.
    pub fn reduce(&self, mode: Mode) -> ReducedModeState {
        let o = mode.offset();
        ReducedModeState {
            mean: Vector2::new(self.mean[o], self.mean[o + 1]),
            cov: self.cov.fixed_view::<2, 2>(o, o).into_owned(),
        }
    }

    pub fn mean_photons(&self, mode: Mode) -> f64 {
        self.reduce(mode).mean_photons()
    }

    pub fn total_mean_photons(&self) -> f64 {
        self.mean_photons(Mode::A) + self.mean_photons(Mode::B)
    }

    /// `nu^2` are the eigenvalues of `A'A` for the antisymmetric
    /// `A = V^{1/2} Omega V^{1/2}`, each appearing twice. A symmetric
    /// eigensolver keeps them accurate even for pure states, where the
    /// determinant-based closed form loses half the digits.
    fn raw_symplectic_eigenvalues(&self) -> (f64, f64) {
        let eig = SymmetricEigen::new(self.cov);
        let root = Vector4::from_iterator(eig.eigenvalues.iter().map(|l| l.max(0.0).sqrt()));
        let sqrt_v = eig.eigenvectors * Matrix4::from_diagonal(&root) * eig.eigenvectors.transpose();
        let w = symplectic::omega();
        let m = sqrt_v * w.transpose() * self.cov * w * sqrt_v;
        let m = (m + m.transpose()) * 0.5;
        let mut nu2: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        nu2.sort_by(f64::total_cmp);
        let lo = (0.5 * (nu2[0] + nu2[1])).max(0.0).sqrt();
        let hi = (0.5 * (nu2[2] + nu2[3])).max(0.0).sqrt();
        (lo, hi)
    }

    /// Symplectic eigenvalues `(nu_-, nu_+)`; values within `1e-10` below the
    /// vacuum level are clamped to it.
    pub fn symplectic_eigenvalues(&self) -> (f64, f64) {
        let clamp = |nu: f64| {
            if (VACUUM_VARIANCE - CLAMP_BAND..VACUUM_VARIANCE).contains(&nu) {
                VACUUM_VARIANCE
            } else {
                nu
            }
        };
        let (lo, hi) = self.raw_symplectic_eigenvalues();
        (clamp(lo), clamp(hi))
    }
}

/// Single-mode Gaussian marginal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedModeState {
    pub(crate) mean: Vector2<f64>,
    pub(crate) cov: Matrix2<f64>,
}

impl ReducedModeState {
    pub fn new(mean: Vector2<f64>, cov: Matrix2<f64>) -> Result<Self> {
        if (cov[(0, 1)] - cov[(1, 0)]).abs() > SYMMETRY_TOL {
            return Err(Error::Unphysical("covariance not symmetric".into()));
        }
        let det = cov.determinant();
        if det < VACUUM_VARIANCE * VACUUM_VARIANCE - 1e-12 {
            return Err(Error::Unphysical(format!(
                "single-mode determinant {det:.6e} below 1/16"
            )));
        }
        Ok(ReducedModeState { mean, cov })
    }

    pub fn mean(&self) -> &Vector2<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix2<f64> {
        &self.cov
    }

    pub fn mean_photons(&self) -> f64 {
        self.cov.trace() + self.mean.norm_squared() - 0.5
    }

    /// `1 / (4 sqrt(det cov))`.
    pub fn purity(&self) -> f64 {
        1.0 / (4.0 * self.cov.determinant().sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_complex::Complex64;

    #[test]
    fn vacuum_has_no_photons() {
        let v = TwoModeGaussianState::vacuum();
        assert_eq!(v.mean_photons(Mode::A), 0.0);
        assert_eq!(v.mean_photons(Mode::B), 0.0);
        assert_eq!(v.symplectic_eigenvalues(), (0.25, 0.25));
    }

    #[test]
    fn input_state_layout() {
        let vac = TwoModeGaussianState::from_inputs(&InputSpec::VACUUM, &InputSpec::VACUUM);
        assert_eq!(vac, TwoModeGaussianState::vacuum());

        let coh = InputSpec::from_amplitude(Complex64::new(1.0, 0.0), 0.0).unwrap();
        let s = TwoModeGaussianState::from_inputs(&coh, &coh);
        assert_eq!(s.mean, Vector4::new(1.0, 0.0, 1.0, 0.0));
        assert_eq!(s.cov, Matrix4::identity() * 0.25);

        let sq = InputSpec::from_energy(3.0, 0.5).unwrap();
        let s = TwoModeGaussianState::from_inputs(&sq, &InputSpec::VACUUM);
        let r = sq.r();
        assert_relative_eq!(s.cov[(0, 0)], (2.0 * r).exp() / 4.0, epsilon = 1e-14);
        assert_relative_eq!(s.cov[(1, 1)], (-2.0 * r).exp() / 4.0, epsilon = 1e-14);
        assert_relative_eq!(s.mean_photons(Mode::A), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn reduce_of_product_returns_input_block() {
        let a = InputSpec::from_amplitude(Complex64::new(0.3, -0.7), 0.4).unwrap();
        let b = InputSpec::from_amplitude(Complex64::new(-1.1, 0.2), -0.2).unwrap();
        let s = TwoModeGaussianState::from_inputs(&a, &b);
        let rb = s.reduce(Mode::B);
        assert_eq!(rb.mean, Vector2::new(-1.1, 0.2));
        assert_eq!(rb.cov, Matrix2::new((-0.4f64).exp() / 4.0, 0.0, 0.0, 0.4f64.exp() / 4.0));
        let ra = s.reduce(Mode::A);
        assert_relative_eq!(ra.purity(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn rejects_sub_vacuum_covariance() {
        let cov = Matrix4::identity() * 0.2;
        assert!(matches!(
            TwoModeGaussianState::new(Vector4::zeros(), cov),
            Err(Error::Unphysical(_))
        ));
        let mut asym = Matrix4::identity() * 0.3;
        asym[(0, 1)] = 1e-6;
        assert!(TwoModeGaussianState::new(Vector4::zeros(), asym).is_err());
        assert!(ReducedModeState::new(Vector2::zeros(), Matrix2::identity() * 0.24).is_err());
    }
}
