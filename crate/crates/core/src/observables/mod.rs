//! Photodetection observables at the output and their fringe visibilities.

mod heisenberg;
mod moments;
mod visibility;

pub use heisenberg::{h_from_input, h_from_input_without_number_product, k_from_input};
pub use moments::{h_gaussian, k_gaussian, GaussianMoments};
pub use visibility::{
    vh_asymptotic, visibility, visibility_from_grid, Engine, PhiScan, VisibilityResult,
};

use crate::error::Result;
use crate::fock::{self, FockCutoff, TwoModeFockVector};
use crate::input::InputSpec;

/// The Fock-basis input, built once and evolved to any phase.
#[derive(Debug, Clone)]
pub struct FockMoments {
    input: TwoModeFockVector,
}

impl FockMoments {
    pub fn new(a: &InputSpec, b: &InputSpec, cutoff: &FockCutoff) -> Result<Self> {
        Ok(FockMoments {
            input: fock::build_input(a, b, cutoff)?,
        })
    }

    /// `(K, H)` at phase `phi`.
    pub fn at(&self, phi: f64) -> (f64, f64) {
        let out = fock::evolve(&self.input, phi);
        (fock::expectation_k(&out), fock::expectation_h(&out))
    }
}

/// Which fourth-order observable a visibility refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Observable {
    /// Coincidence rate `<n_a n_b>`.
    K,
    /// Squared photocurrent difference `<(n_a - n_b)^2>`.
    H,
}

/// Visibility of `K` or `H` from the Gaussian engine.
pub fn visibility_gaussian(
    a: &InputSpec,
    b: &InputSpec,
    which: Observable,
    scan: &PhiScan,
) -> Result<VisibilityResult> {
    let f = |phi: f64| match which {
        Observable::K => k_gaussian(a, b, phi),
        Observable::H => h_gaussian(a, b, phi),
    };
    visibility(f, scan, Engine::Gaussian)
}

/// Visibility of `K` or `H` from the Fock engine on a fixed cutoff.
pub fn visibility_fock(
    a: &InputSpec,
    b: &InputSpec,
    which: Observable,
    scan: &PhiScan,
    cutoff: &FockCutoff,
) -> Result<VisibilityResult> {
    let m = FockMoments::new(a, b, cutoff)?;
    let f = |phi: f64| {
        let (k, h) = m.at(phi);
        match which {
            Observable::K => k,
            Observable::H => h,
        }
    };
    visibility(f, scan, Engine::Fock)
}
