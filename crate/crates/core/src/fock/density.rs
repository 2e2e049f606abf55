use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::state::TwoModeFockVector;
use crate::error::{Error, Result};
use crate::gaussian::Mode;

const NEGATIVE_BAND: f64 = 1e-10;
const NEGLIGIBLE: f64 = 1e-14;

/// Reduced density matrix of one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeDensity {
    pub(crate) matrix: DMatrix<Complex64>,
}

impl ModeDensity {
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    /// `Tr rho^2`.
    pub fn purity(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn mean_photons(&self) -> f64 {
        self.matrix
            .diagonal()
            .iter()
            .enumerate()
            .map(|(n, z)| n as f64 * z.re)
            .sum()
    }

    /// Eigenvalues after symmetrization; small negatives are zeroed and the
    /// spectrum rescaled to unit trace.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let h = (&self.matrix + self.matrix.adjoint()) * Complex64::new(0.5, 0.0);
        let mut ev: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
        for l in ev.iter_mut() {
            if *l < -NEGATIVE_BAND {
                return Err(Error::Unphysical(format!("density eigenvalue {l:.3e}")));
            }
            *l = l.max(0.0);
        }
        let sum: f64 = ev.iter().sum();
        if sum > 0.0 {
            ev.iter_mut().for_each(|l| *l /= sum);
        }
        Ok(ev)
    }
}

/// Partial trace over the other mode:
/// `rho_a[m, n] = sum_k psi(m, k) conj(psi(n, k))` and likewise for `b`.
pub fn reduced_density(psi: &TwoModeFockVector, mode: Mode) -> ModeDensity {
    let d = psi.dim();
    let m = DMatrix::from_fn(d, d, |na, nb| psi.amplitudes[na * d + nb]);
    let matrix = match mode {
        Mode::A => &m * m.adjoint(),
        Mode::B => m.transpose() * m.conjugate(),
    };
    ModeDensity { matrix }
}

/// `-sum l ln l` over the spectrum, skipping `l <= 1e-14`.
pub fn von_neumann_entropy(rho: &ModeDensity) -> Result<f64> {
    let s: f64 = rho
        .eigenvalues()?
        .into_iter()
        .filter(|&l| l > NEGLIGIBLE)
        .map(|l| -l * l.ln())
        .sum();
    Ok(s.max(0.0))
}
