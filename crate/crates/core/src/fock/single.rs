//! Single-mode displacement and squeezing on a truncated number basis.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::cutoff::FockCutoff;
use super::expm::expm_apply;
use super::ladder::ladder_ops;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `exp(alpha a' - conj(alpha) a)` truncated to `cutoff.dim()` levels.
///
/// The generator is exponentiated in its truncated form; columns whose norm
/// drifts from 1 by more than the tail tolerance signal that the state has
/// reached the top of the basis.
pub fn displacement_matrix(alpha: Complex64, cutoff: &FockCutoff) -> Result<DMatrix<Complex64>> {
    let d = cutoff.dim();
    if alpha.norm_sqr() > d as f64 / 4.0 {
        log::warn!("|alpha|^2 = {} is large for D = {d}", alpha.norm_sqr());
    }
    let ops = ladder_ops(d);
    let gen = ops.creation * alpha - ops.annihilation * alpha.conj();
    let u = gen.exp();
    check_vacuum_column(&u, cutoff, "displacement top-level weight")?;
    Ok(u)
}

/// `exp((r/2)(a'^2 - a^2))` truncated to `cutoff.dim()` levels; with this sign
/// `<2k|S(r)|0>` has the sign of `tanh^k r`.
pub fn squeeze_matrix(r: f64, cutoff: &FockCutoff) -> Result<DMatrix<Complex64>> {
    let d = cutoff.dim();
    if r.sinh().powi(2) > d as f64 / 6.0 {
        log::warn!("sinh^2 r = {} is large for D = {d}", r.sinh().powi(2));
    }
    let ops = ladder_ops(d);
    let up = &ops.creation * &ops.creation;
    let down = &ops.annihilation * &ops.annihilation;
    let u = ((up - down) * Complex64::new(0.5 * r, 0.0)).exp();
    check_vacuum_column(&u, cutoff, "squeeze top-level weight")?;
    Ok(u)
}

/// The truncated generators are anti-Hermitian, so every column keeps unit
/// norm; what signals an inadequate basis is weight of the vacuum image piling
/// up in the top two levels.
fn check_vacuum_column(u: &DMatrix<Complex64>, cutoff: &FockCutoff, what: &'static str) -> Result<()> {
    let d = cutoff.dim();
    let worst: f64 = (d.saturating_sub(2)..d).map(|n| u[(n, 0)].norm_sqr()).sum();
    if worst > cutoff.tail_tol() {
        return Err(Error::Truncation {
            dim: cutoff.dim(),
            what,
            value: worst,
            tol: cutoff.tail_tol(),
        });
    }
    Ok(())
}

/// `D(alpha) S(r)|0>` on `dim` levels together with its norm deficit.
///
/// The state is built on twice as many levels and then cut, so the kept
/// amplitudes carry no truncation distortion; only the discarded weight is
/// lost.
pub(crate) fn squeezed_coherent(alpha: Complex64, r: f64, dim: usize) -> (Vec<Complex64>, f64) {
    let w = 2 * dim.max(2);
    let mut v = vec![ZERO; w];
    v[0] = Complex64::new(1.0, 0.0);
    if r != 0.0 {
        let half = 0.5 * r;
        let gen = |x: &[Complex64], y: &mut [Complex64]| {
            for n in 0..w {
                let mut acc = ZERO;
                if n >= 2 {
                    acc += x[n - 2] * ((n * (n - 1)) as f64).sqrt();
                }
                if n + 2 < w {
                    acc -= x[n + 2] * (((n + 1) * (n + 2)) as f64).sqrt();
                }
                y[n] = acc * half;
            }
        };
        v = expm_apply(gen, r.abs() * w as f64, &v);
    }
    if alpha != ZERO {
        let gen = |x: &[Complex64], y: &mut [Complex64]| {
            for n in 0..w {
                let mut acc = ZERO;
                if n >= 1 {
                    acc += alpha * x[n - 1] * (n as f64).sqrt();
                }
                if n + 1 < w {
                    acc -= alpha.conj() * x[n + 1] * ((n + 1) as f64).sqrt();
                }
                y[n] = acc;
            }
        };
        v = expm_apply(gen, 2.0 * alpha.norm() * (w as f64).sqrt(), &v);
    }
    v.truncate(dim);
    let deficit = (1.0 - v.iter().map(|z| z.norm_sqr()).sum::<f64>()).max(0.0);
    (v, deficit)
}
