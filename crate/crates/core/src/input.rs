//! Squeezed-coherent input beams.
//!
//! A beam is `D(alpha) S(r) |0>`: vacuum squeezed by a real parameter `r`
//! and then displaced by the complex amplitude `alpha`. The same beam can be
//! described by its mean photon number `N` and the fraction `gamma` of that
//! energy carried by squeezing, with `sinh^2 r = gamma N` and
//! `|alpha|^2 = (1 - gamma) N`.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputSpec {
    alpha: Complex64,
    r: f64,
}

impl InputSpec {
    pub const VACUUM: InputSpec = InputSpec {
        alpha: Complex64::new(0.0, 0.0),
        r: 0.0,
    };

    /// Beam with displacement `alpha` and squeezing `r`.
    pub fn from_amplitude(alpha: Complex64, r: f64) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite() && r.is_finite()) {
            return Err(Error::domain(format!(
                "non-finite beam parameters alpha={alpha}, r={r}"
            )));
        }
        Ok(InputSpec { alpha, r })
    }

    /// Beam with `n` mean photons of which a fraction `gamma` is squeezing.
    ///
    /// The displacement is taken real and positive; any input phase can be
    /// absorbed into the interferometer phase.
    pub fn from_energy(n: f64, gamma: f64) -> Result<Self> {
        if !(n.is_finite() && n >= 0.0) {
            return Err(Error::domain(format!("mean photon number N={n} must be >= 0")));
        }
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::domain(format!(
                "squeezing fraction gamma={gamma} must lie in [0, 1]"
            )));
        }
        let squeezed = gamma * n;
        let coherent = ((1.0 - gamma) * n).max(0.0);
        Ok(InputSpec {
            alpha: Complex64::new(coherent.sqrt(), 0.0),
            r: squeezed.sqrt().asinh(),
        })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// `sinh^2 r`, the photons carried by squeezing.
    pub fn squeezing_photons(&self) -> f64 {
        self.r.sinh().powi(2)
    }

    /// `N = |alpha|^2 + sinh^2 r`.
    pub fn mean_photons(&self) -> f64 {
        self.alpha.norm_sqr() + self.squeezing_photons()
    }

    /// `gamma = sinh^2 r / N`; zero for the vacuum.
    pub fn squeezing_fraction(&self) -> f64 {
        let n = self.mean_photons();
        if n > 0.0 {
            self.squeezing_photons() / n
        } else {
            0.0
        }
    }

    pub fn is_vacuum(&self) -> bool {
        self.alpha.norm_sqr() == 0.0 && self.r == 0.0
    }
}

impl Default for InputSpec {
    fn default() -> Self {
        InputSpec::VACUUM
    }
}
