//! Brute-force engine on a truncated number basis, used to check every
//! result of the Gaussian engine independently.

mod cutoff;
mod density;
mod evolve;
mod expm;
mod ladder;
mod single;
mod state;

pub use cutoff::{FockCutoff, DEFAULT_MAX_DIM, MAX_TAIL_TOL};
pub use density::{reduced_density, von_neumann_entropy, ModeDensity};
pub use evolve::{evolve, mz_unitary, MzUnitary};
pub use expm::expm_apply;
pub use ladder::{apply_ladder, ladder_ops, Ladder, LadderOps};
pub use single::{displacement_matrix, squeeze_matrix};
pub use state::{build_input, twin_beam_reference, TwoModeFockVector};

use crate::entropy::{g, thermal_photons_for_entropy};
use crate::error::{Error, Result};
use crate::gaussian::Mode;
use crate::input::InputSpec;

/// `<n_a n_b>`, normalized by the state's norm.
pub fn expectation_k(psi: &TwoModeFockVector) -> f64 {
    diagonal_mean(psi, |na, nb| (na * nb) as f64)
}

/// `<(n_a - n_b)^2>`, normalized by the state's norm.
pub fn expectation_h(psi: &TwoModeFockVector) -> f64 {
    diagonal_mean(psi, |na, nb| {
        let d = na as f64 - nb as f64;
        d * d
    })
}

/// `<n_x>` of one mode, normalized by the state's norm.
pub fn mean_photons(psi: &TwoModeFockVector, mode: Mode) -> f64 {
    diagonal_mean(psi, |na, nb| match mode {
        Mode::A => na as f64,
        Mode::B => nb as f64,
    })
}

fn diagonal_mean(psi: &TwoModeFockVector, f: impl Fn(usize, usize) -> f64) -> f64 {
    let d = psi.dim();
    let mut num = 0.0;
    let mut den = 0.0;
    for na in 0..d {
        for nb in 0..d {
            let p = psi.amplitudes[na * d + nb].norm_sqr();
            num += f(na, nb) * p;
            den += p;
        }
    }
    if den > 0.0 {
        (num / den).max(0.0)
    } else {
        0.0
    }
}

/// How much of the state the truncation loses, by three measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationDiagnostics {
    /// Norm deficit of the input product state.
    pub input_deficit: f64,
    /// Input weight in photon-number sectors cut by the basis.
    pub sector_tail: f64,
    /// Largest per-mode output weight on the top levels.
    pub top_occupation: f64,
}

impl TruncationDiagnostics {
    pub fn worst(&self) -> f64 {
        self.input_deficit.max(self.sector_tail).max(self.top_occupation)
    }
}

fn diagnose(a: &InputSpec, b: &InputSpec, phi: f64, dim: usize) -> TruncationDiagnostics {
    let input_deficit = state::input_deficit(a, b, dim);
    // Loose tolerance: only the measurements are wanted here.
    let loose = FockCutoff::new(dim, MAX_TAIL_TOL).expect("dim >= 2");
    let (va, _) = single::squeezed_coherent(a.alpha(), a.r(), dim);
    let (vb, _) = single::squeezed_coherent(b.alpha(), b.r(), dim);
    let amplitudes = va.iter().flat_map(|x| vb.iter().map(move |y| x * y)).collect();
    let psi = TwoModeFockVector {
        amplitudes,
        cutoff: loose,
    };
    TruncationDiagnostics {
        input_deficit,
        sector_tail: psi.incomplete_sector_weight(),
        top_occupation: evolve(&psi, phi).top_level_occupation(),
    }
}

/// Cutoff picked by [`auto_cutoff`], with the measurements at that size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffChoice {
    pub cutoff: FockCutoff,
    pub diagnostics: TruncationDiagnostics,
}

/// Smallest `D` whose truncation losses all stay within `tail_tol`, capped
/// at [`DEFAULT_MAX_DIM`].
pub fn auto_cutoff(a: &InputSpec, b: &InputSpec, phi: f64, tail_tol: f64) -> Result<CutoffChoice> {
    auto_cutoff_capped(a, b, phi, tail_tol, DEFAULT_MAX_DIM)
}

/// [`auto_cutoff`] with an explicit cap. Doubles `D` from 2 until the
/// criteria hold, then bisects down to the smallest passing size.
pub fn auto_cutoff_capped(
    a: &InputSpec,
    b: &InputSpec,
    phi: f64,
    tail_tol: f64,
    max_dim: usize,
) -> Result<CutoffChoice> {
    let base = FockCutoff::new(max_dim.max(2), tail_tol)?;
    if !phi.is_finite() {
        return Err(Error::domain(format!("phase {phi} is not finite")));
    }
    let passes = |d: usize| {
        let diag = diagnose(a, b, phi, d);
        (diag.worst() <= tail_tol, diag)
    };
    let mut lo = 1; // largest size known to fail
    let mut d = 2;
    let (mut hi, mut best) = loop {
        let (ok, diag) = passes(d);
        if ok {
            break (d, diag);
        }
        lo = d;
        if d >= max_dim {
            return Err(Error::Truncation {
                dim: d,
                what: "truncation loss at the size cap",
                value: diag.worst(),
                tol: tail_tol,
            });
        }
        d = (2 * d).min(max_dim);
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let (ok, diag) = passes(mid);
        if ok {
            hi = mid;
            best = diag;
        } else {
            lo = mid;
        }
    }
    Ok(CutoffChoice {
        cutoff: base.with_dim(hi),
        diagnostics: best,
    })
}

/// Everything the Fock pipeline measures at one operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockReport {
    pub epsilon: f64,
    /// Entropy-equivalent thermal photons of each output mode.
    pub thermal_photons: (f64, f64),
    /// Mean photons of each output mode.
    pub mean_photons: (f64, f64),
    pub entropies: (f64, f64),
    pub k: f64,
    pub h: f64,
    pub cutoff: FockCutoff,
    pub diagnostics: TruncationDiagnostics,
}

/// Build, evolve, reduce and measure at phase `phi` on the given cutoff.
///
/// Fails when the input does not fit the cutoff; the other truncation
/// measures are reported, not enforced.
pub fn evaluate(a: &InputSpec, b: &InputSpec, phi: f64, cutoff: &FockCutoff) -> Result<FockReport> {
    if !phi.is_finite() {
        return Err(Error::domain(format!("phase {phi} is not finite")));
    }
    let input = build_input(a, b, cutoff)?;
    let out = evolve(&input, phi);
    let sa = von_neumann_entropy(&reduced_density(&out, Mode::A))?;
    let sb = von_neumann_entropy(&reduced_density(&out, Mode::B))?;
    let ma = mean_photons(&out, Mode::A);
    let mb = mean_photons(&out, Mode::B);
    let denom = g(ma) + g(mb);
    let epsilon = if denom > 0.0 { (sa + sb) / denom } else { 0.0 };
    let diagnostics = TruncationDiagnostics {
        input_deficit: input.norm_deficit(),
        sector_tail: input.incomplete_sector_weight(),
        top_occupation: out.top_level_occupation(),
    };
    Ok(FockReport {
        epsilon,
        thermal_photons: (thermal_photons_for_entropy(sa)?, thermal_photons_for_entropy(sb)?),
        mean_photons: (ma, mb),
        entropies: (sa, sb),
        k: expectation_k(&out),
        h: expectation_h(&out),
        cutoff: *cutoff,
        diagnostics,
    })
}

/// Degree of entanglement computed on the truncated basis.
pub fn epsilon_fock(a: &InputSpec, b: &InputSpec, phi: f64, cutoff: &FockCutoff) -> Result<f64> {
    Ok(evaluate(a, b, phi, cutoff)?.epsilon)
}
