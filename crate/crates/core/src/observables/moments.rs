//! Photon-number moments of a two-mode Gaussian state.
//!
//! Symmetrically ordered quadrature products are plain moments of the Wigner
//! function, so fourth-order products follow from Isserlis' theorem with
//! mean terms. Products of operators on different modes commute and their
//! Weyl symbols multiply; for one mode the symbol of `n^2` is
//! `|z|^4 - |z|^2` with `|z|^2 = x^2 + y^2`.

use crate::gaussian::{self, Mode, TwoModeGaussianState};
use crate::input::InputSpec;

/// Moment generator over the quadratures `(x_a, y_a, x_b, y_b)`.
#[derive(Debug, Clone, Copy)]
pub struct GaussianMoments<'a> {
    state: &'a TwoModeGaussianState,
}

impl<'a> GaussianMoments<'a> {
    pub fn new(state: &'a TwoModeGaussianState) -> Self {
        GaussianMoments { state }
    }

    /// `E[Z_i Z_j]`.
    pub fn second(&self, i: usize, j: usize) -> f64 {
        let m = self.state.mean();
        self.state.cov()[(i, j)] + m[i] * m[j]
    }

    /// `E[Z_i Z_j Z_k Z_l]`.
    pub fn fourth(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let m = self.state.mean();
        let v = self.state.cov();
        let means = m[i] * m[j] * m[k] * m[l];
        let mixed = v[(i, j)] * m[k] * m[l]
            + v[(i, k)] * m[j] * m[l]
            + v[(i, l)] * m[j] * m[k]
            + v[(j, k)] * m[i] * m[l]
            + v[(j, l)] * m[i] * m[k]
            + v[(k, l)] * m[i] * m[j];
        let pairs = v[(i, j)] * v[(k, l)] + v[(i, k)] * v[(j, l)] + v[(i, l)] * v[(j, k)];
        means + mixed + pairs
    }

    /// `E[x^2 + y^2]` of one mode.
    fn intensity(&self, mode: Mode) -> f64 {
        let o = mode.offset();
        self.second(o, o) + self.second(o + 1, o + 1)
    }

    /// `E[(x^2 + y^2)^2]` of one mode.
    fn intensity_squared(&self, mode: Mode) -> f64 {
        let (x, y) = (mode.offset(), mode.offset() + 1);
        self.fourth(x, x, x, x) + 2.0 * self.fourth(x, x, y, y) + self.fourth(y, y, y, y)
    }

    pub fn mean_photons(&self, mode: Mode) -> f64 {
        self.intensity(mode) - 0.5
    }

    /// `<n^2>` of one mode.
    pub fn photons_squared(&self, mode: Mode) -> f64 {
        self.intensity_squared(mode) - self.intensity(mode)
    }

    /// `<n_a n_b>`.
    pub fn coincidence(&self) -> f64 {
        let mut cross = 0.0;
        for i in 0..2 {
            for j in 2..4 {
                cross += self.fourth(i, i, j, j);
            }
        }
        let k = cross - 0.5 * (self.intensity(Mode::A) + self.intensity(Mode::B)) + 0.25;
        // exact value is >= 0; only rounding can push it below
        k.max(0.0)
    }

    /// `<(n_a - n_b)^2>`.
    pub fn difference_squared(&self) -> f64 {
        let raw = self.photons_squared(Mode::A) + self.photons_squared(Mode::B)
            - 2.0 * self.coincidence();
        raw.max(0.0)
    }
}

/// Coincidence rate `K = <n_a n_b>` at the output for phase `phi`.
pub fn k_gaussian(a: &InputSpec, b: &InputSpec, phi: f64) -> f64 {
    let out = gaussian::output_state(a, b, phi);
    GaussianMoments::new(&out).coincidence()
}

/// Squared photocurrent difference `H = <(n_a - n_b)^2>` at the output.
pub fn h_gaussian(a: &InputSpec, b: &InputSpec, phi: f64) -> f64 {
    let out = gaussian::output_state(a, b, phi);
    GaussianMoments::new(&out).difference_squared()
}
