//! Linear quadrature maps of passive two-mode optics.
//!
//! A unitary `U` with `U' a_j U = sum_k S_jk a_k` moves the quadrature means
//! by the real 4x4 image of `S`, and the covariance by congruence. Maps
//! compose in operator order: the matrix of `U1 U2` is `M1 M2`.

use std::f64::consts::FRAC_PI_2;
use std::f64::consts::FRAC_PI_4;

use nalgebra::{Matrix2, Matrix4, Vector4};

use super::state::{Mode, TwoModeGaussianState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticMap {
    pub matrix: Matrix4<f64>,
    pub displacement: Vector4<f64>,
}

/// Block-diagonal symplectic form, `[[0, 1], [-1, 0]]` per mode.
pub fn omega() -> Matrix4<f64> {
    let mut w = Matrix4::zeros();
    w[(0, 1)] = 1.0;
    w[(1, 0)] = -1.0;
    w[(2, 3)] = 1.0;
    w[(3, 2)] = -1.0;
    w
}

impl SymplecticMap {
    pub fn identity() -> Self {
        SymplecticMap {
            matrix: Matrix4::identity(),
            displacement: Vector4::zeros(),
        }
    }

    /// Phase shift `exp(i theta n)` on one mode: `a -> e^{i theta} a`.
    pub fn phase(mode: Mode, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let mut m = Matrix4::identity();
        let o = mode.offset();
        m.fixed_view_mut::<2, 2>(o, o)
            .copy_from(&Matrix2::new(c, -s, s, c));
        SymplecticMap {
            matrix: m,
            displacement: Vector4::zeros(),
        }
    }

    /// Independent phase shifts on both modes.
    pub fn phases(theta_a: f64, theta_b: f64) -> Self {
        SymplecticMap::phase(Mode::A, theta_a).then(&SymplecticMap::phase(Mode::B, theta_b))
    }

    /// Real beam-splitter mixing `exp{delta (b'a - a'b)}`:
    /// `a -> cos(delta) a - sin(delta) b`, `b -> sin(delta) a + cos(delta) b`,
    /// applied identically to the `x` and `y` quadratures.
    pub fn beam_splitter(delta: f64) -> Self {
        let (s, c) = delta.sin_cos();
        let mut m = Matrix4::zeros();
        for q in 0..2 {
            m[(q, q)] = c;
            m[(q, 2 + q)] = -s;
            m[(2 + q, q)] = s;
            m[(2 + q, 2 + q)] = c;
        }
        SymplecticMap {
            matrix: m,
            displacement: Vector4::zeros(),
        }
    }

    /// The map applying `self` first and `next` afterwards.
    pub fn then(&self, next: &SymplecticMap) -> SymplecticMap {
        SymplecticMap {
            matrix: next.matrix * self.matrix,
            displacement: next.matrix * self.displacement + next.displacement,
        }
    }

    pub fn inverse(&self) -> SymplecticMap {
        // M^{-1} = -Omega M^T Omega for symplectic M.
        let w = omega();
        let inv = -(w * self.matrix.transpose() * w);
        SymplecticMap {
            matrix: inv,
            displacement: -(inv * self.displacement),
        }
    }

    /// Largest elementwise deviation of `M Omega M^T` from `Omega`.
    pub fn symplectic_defect(&self) -> f64 {
        let w = omega();
        (self.matrix * w * self.matrix.transpose() - w).amax()
    }

    /// `mean' = M mean + d`, `cov' = M cov M^T`.
    pub fn apply(&self, state: &TwoModeGaussianState) -> TwoModeGaussianState {
        let mean = self.matrix * state.mean + self.displacement;
        let cov = self.matrix * state.cov * self.matrix.transpose();
        // Restore exact symmetry lost to rounding.
        let cov = (cov + cov.transpose()) * 0.5;
        TwoModeGaussianState { mean, cov }
    }
}

/// The interferometer as one beam splitter of angle `phi/2` framed by
/// quarter-turn rotations of mode `b`: `R_b(pi/2) BS(phi/2) R_b(-pi/2)`.
///
/// Net mode map: `a -> c a + i s b`, `b -> i s a + c b` with `c = cos(phi/2)`,
/// `s = sin(phi/2)`; transmissivity `cos^2(phi/2)`.
pub fn mz_map(phi: f64) -> SymplecticMap {
    SymplecticMap::phase(Mode::B, -FRAC_PI_2)
        .then(&SymplecticMap::beam_splitter(0.5 * phi))
        .then(&SymplecticMap::phase(Mode::B, FRAC_PI_2))
}

/// The interferometer written as a balanced splitter, opposite arm phases
/// `+-phi/2`, and the inverse splitter: `BS(pi/4) P(phi/2, -phi/2) BS(pi/4)'`.
pub fn mz_map_conjugated(phi: f64) -> SymplecticMap {
    let bs = SymplecticMap::beam_splitter(FRAC_PI_4);
    bs.inverse()
        .then(&SymplecticMap::phases(0.5 * phi, -0.5 * phi))
        .then(&bs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn max_abs_diff(a: &Matrix4<f64>, b: &Matrix4<f64>) -> f64 {
        (a - b).amax()
    }

    #[test]
    fn zero_phase_is_identity() {
        let m = mz_map(0.0);
        assert!(max_abs_diff(&m.matrix, &Matrix4::identity()) < 1e-15);
        assert_eq!(m.displacement, Vector4::zeros());
    }

    #[test]
    fn half_turn_fully_reflects() {
        // tau = 0: each output quadrature comes entirely from the other mode.
        let m = mz_map(PI).matrix;
        assert!(m.fixed_view::<2, 2>(0, 0).amax() < 1e-15);
        assert!(m.fixed_view::<2, 2>(2, 2).amax() < 1e-15);
        let block = m.fixed_view::<2, 2>(0, 2);
        assert!((block.determinant().abs() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn net_mode_map_matches_complex_splitter() {
        // a_out = c a + i s b: x_a' = c x_a - s y_b, y_a' = c y_a + s x_b.
        let phi: f64 = 0.83;
        let (s, c) = (0.5 * phi).sin_cos();
        let expected = Matrix4::new(
            c, 0.0, 0.0, -s, //
            0.0, c, s, 0.0, //
            0.0, -s, c, 0.0, //
            s, 0.0, 0.0, c,
        );
        assert!(max_abs_diff(&mz_map(phi).matrix, &expected) < 1e-15);
    }

    #[test]
    fn inverse_undoes_map() {
        let m = mz_map(1.1).then(&SymplecticMap {
            matrix: Matrix4::identity(),
            displacement: Vector4::new(0.1, -0.2, 0.3, 0.4),
        });
        let id = m.then(&m.inverse());
        assert!(max_abs_diff(&id.matrix, &Matrix4::identity()) < 1e-14);
        assert!(id.displacement.amax() < 1e-14);
    }
}
