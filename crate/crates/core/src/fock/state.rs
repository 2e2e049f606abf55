use num_complex::Complex64;

use super::cutoff::FockCutoff;
use super::single::squeezed_coherent;
use crate::error::{Error, Result};
use crate::gaussian::Mode;
use crate::input::InputSpec;

/// Pure two-mode state on `D x D` levels, amplitudes in row-major `(n_a, n_b)`
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeFockVector {
    pub(crate) amplitudes: Vec<Complex64>,
    pub(crate) cutoff: FockCutoff,
}

impl TwoModeFockVector {
    /// Wraps raw amplitudes, checking length and the norm deficit.
    pub fn new(amplitudes: Vec<Complex64>, cutoff: FockCutoff) -> Result<Self> {
        let d = cutoff.dim();
        if amplitudes.len() != d * d {
            return Err(Error::domain(format!(
                "expected {} amplitudes for D={d}, got {}",
                d * d,
                amplitudes.len()
            )));
        }
        let v = TwoModeFockVector { amplitudes, cutoff };
        let deficit = v.norm_deficit();
        if deficit > cutoff.tail_tol() || v.norm_sqr() > 1.0 + 1e-10 {
            return Err(Error::Truncation {
                dim: d,
                what: "norm deficit",
                value: deficit.max(v.norm_sqr() - 1.0),
                tol: cutoff.tail_tol(),
            });
        }
        Ok(v)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn cutoff(&self) -> &FockCutoff {
        &self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.cutoff.dim()
    }

    pub fn amplitude(&self, na: usize, nb: usize) -> Complex64 {
        self.amplitudes[na * self.dim() + nb]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `1 - sum |psi|^2`, clamped at zero.
    pub fn norm_deficit(&self) -> f64 {
        (1.0 - self.norm_sqr()).max(0.0)
    }

    /// `|<self|other>|^2`.
    pub fn fidelity(&self, other: &TwoModeFockVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "fidelity needs equal cutoffs");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(x, y)| x.conj() * y)
            .sum::<Complex64>()
            .norm_sqr()
    }

    /// Applies the phase shift `exp(i theta n)` to one mode.
    pub fn rotate(&self, mode: Mode, theta: f64) -> TwoModeFockVector {
        let d = self.dim();
        let mut out = self.clone();
        for na in 0..d {
            for nb in 0..d {
                let n = match mode {
                    Mode::A => na,
                    Mode::B => nb,
                };
                out.amplitudes[na * d + nb] *= Complex64::from_polar(1.0, theta * n as f64);
            }
        }
        out
    }

    /// Weight on basis states with `n_a + n_b >= D`, whose photon-number
    /// sectors are only partly represented.
    pub fn incomplete_sector_weight(&self) -> f64 {
        let d = self.dim();
        let mut w = 0.0;
        for na in 0..d {
            for nb in (d - na)..d {
                w += self.amplitudes[na * d + nb].norm_sqr();
            }
        }
        w
    }

    /// Largest per-mode weight on levels `>= max(1, D - 2)`.
    pub fn top_level_occupation(&self) -> f64 {
        let d = self.dim();
        let top = d.saturating_sub(2).max(1);
        let (mut wa, mut wb) = (0.0, 0.0);
        for na in 0..d {
            for nb in 0..d {
                let p = self.amplitudes[na * d + nb].norm_sqr();
                if na >= top {
                    wa += p;
                }
                if nb >= top {
                    wb += p;
                }
            }
        }
        f64::max(wa, wb)
    }
}

/// `D(alpha_a)S(r_a) (x) D(alpha_b)S(r_b) |0,0>`: each beam squeezed first and
/// then displaced.
pub fn build_input(a: &InputSpec, b: &InputSpec, cutoff: &FockCutoff) -> Result<TwoModeFockVector> {
    let d = cutoff.dim();
    let (va, _) = squeezed_coherent(a.alpha(), a.r(), d);
    let (vb, _) = squeezed_coherent(b.alpha(), b.r(), d);
    let mut amplitudes = Vec::with_capacity(d * d);
    for x in &va {
        for y in &vb {
            amplitudes.push(x * y);
        }
    }
    TwoModeFockVector::new(amplitudes, *cutoff)
}

/// Norm deficit of the product input on `dim` levels.
pub(crate) fn input_deficit(a: &InputSpec, b: &InputSpec, dim: usize) -> f64 {
    let (_, da) = squeezed_coherent(a.alpha(), a.r(), dim);
    let (_, db) = squeezed_coherent(b.alpha(), b.r(), dim);
    1.0 - (1.0 - da) * (1.0 - db)
}

/// Twin-beam state `sum_k tanh^k r / cosh r |k, k>` cut at `D` levels.
pub fn twin_beam_reference(r: f64, cutoff: &FockCutoff) -> Result<TwoModeFockVector> {
    if !r.is_finite() {
        return Err(Error::domain(format!("squeezing {r} is not finite")));
    }
    let d = cutoff.dim();
    let t = r.tanh();
    let tail = t.abs().powi(2 * d as i32);
    if tail > cutoff.tail_tol() {
        return Err(Error::Truncation {
            dim: d,
            what: "twin-beam tail",
            value: tail,
            tol: cutoff.tail_tol(),
        });
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); d * d];
    let mut c = 1.0 / r.cosh();
    for k in 0..d {
        amplitudes[k * d + k] = Complex64::new(c, 0.0);
        c *= t;
    }
    TwoModeFockVector::new(amplitudes, *cutoff)
}
