//! The interferometer on the truncated two-mode basis.
//!
//! The evolution conserves `n_a + n_b`, so it splits into one block per
//! photon-number sector. Within sector `n` the basis is `|n_a, n - n_a>` for
//! `n_a` in `lo..=hi`; the block is
//! `diag(i^{n_b}) exp(delta K) diag((-i)^{n_b})` with `delta = phi/2` and
//! `K = b'a - a'b` real, antisymmetric and tridiagonal.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::expm::expm_apply;
use super::state::TwoModeFockVector;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `i^k`, exact.
fn i_pow(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Range of `n_a` present in sector `n` with `D` levels per mode.
fn sector_range(n: usize, d: usize) -> (usize, usize) {
    (n.saturating_sub(d - 1), n.min(d - 1))
}

/// `<n_a, n_b| b'a |n_a + 1, n_b - 1> = sqrt((n_a + 1) n_b)`.
fn hop(na: usize, nb: usize) -> f64 {
    (((na + 1) * nb) as f64).sqrt()
}

/// `delta K` on sector `n`: `(K v)[i] = hop_i v[i+1] - hop_{i-1} v[i-1]`.
fn sector_generator(n: usize, lo: usize, len: usize, delta: f64) -> impl Fn(&[Complex64], &mut [Complex64]) {
    let up: Vec<f64> = (0..len.saturating_sub(1))
        .map(|i| delta * hop(lo + i, n - lo - i))
        .collect();
    move |x: &[Complex64], y: &mut [Complex64]| {
        for i in 0..len {
            let mut acc = ZERO;
            if i + 1 < len {
                acc += x[i + 1] * up[i];
            }
            if i >= 1 {
                acc -= x[i - 1] * up[i - 1];
            }
            y[i] = acc;
        }
    }
}

fn sector_bound(n: usize, delta: f64) -> f64 {
    delta.abs() * (n as f64 + 2.0)
}

/// Output state for phase `phi`, sector by sector.
pub fn evolve(psi: &TwoModeFockVector, phi: f64) -> TwoModeFockVector {
    let d = psi.dim();
    let delta = 0.5 * phi;
    let mut out = vec![ZERO; d * d];
    let mut buf = Vec::with_capacity(d);
    for n in 0..(2 * d - 1) {
        let (lo, hi) = sector_range(n, d);
        let len = hi - lo + 1;
        buf.clear();
        buf.extend((lo..=hi).map(|na| {
            let nb = n - na;
            psi.amplitudes[na * d + nb] * i_pow(nb).conj()
        }));
        if buf.iter().all(|z| *z == ZERO) {
            continue;
        }
        let rotated = expm_apply(sector_generator(n, lo, len, delta), sector_bound(n, delta), &buf);
        for (i, z) in rotated.into_iter().enumerate() {
            let na = lo + i;
            let nb = n - na;
            out[na * d + nb] = z * i_pow(nb);
        }
    }
    TwoModeFockVector {
        amplitudes: out,
        cutoff: psi.cutoff,
    }
}

/// Dense sector blocks of the interferometer unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct MzUnitary {
    dim: usize,
    blocks: Vec<DMatrix<Complex64>>,
}

/// Builds every sector block by dense matrix exponentiation. Cost grows as
/// `D^4` overall; intended for oracle-sized `D`.
pub fn mz_unitary(phi: f64, dim: usize) -> MzUnitary {
    assert!(dim >= 2, "truncation dimension must be >= 2");
    let delta = 0.5 * phi;
    let blocks = (0..(2 * dim - 1))
        .map(|n| {
            let (lo, hi) = sector_range(n, dim);
            let len = hi - lo + 1;
            let k = DMatrix::from_fn(len, len, |i, j| {
                let h = if j == i + 1 {
                    hop(lo + i, n - lo - i)
                } else if i == j + 1 {
                    -hop(lo + j, n - lo - j)
                } else {
                    0.0
                };
                Complex64::new(delta * h, 0.0)
            });
            let e = k.exp();
            DMatrix::from_fn(len, len, |i, j| {
                let nb_i = n - lo - i;
                let nb_j = n - lo - j;
                i_pow(nb_i) * e[(i, j)] * i_pow(nb_j).conj()
            })
        })
        .collect();
    MzUnitary { dim, blocks }
}

impl MzUnitary {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, psi: &TwoModeFockVector) -> TwoModeFockVector {
        let d = self.dim;
        assert_eq!(psi.dim(), d, "state and unitary cutoffs differ");
        let mut out = vec![ZERO; d * d];
        for (n, block) in self.blocks.iter().enumerate() {
            let (lo, hi) = sector_range(n, d);
            for i in 0..=(hi - lo) {
                let mut acc = ZERO;
                for j in 0..=(hi - lo) {
                    acc += block[(i, j)] * psi.amplitudes[(lo + j) * d + n - lo - j];
                }
                out[(lo + i) * d + n - lo - i] = acc;
            }
        }
        TwoModeFockVector {
            amplitudes: out,
            cutoff: psi.cutoff,
        }
    }

    /// The full `D^2 x D^2` matrix in the row-major `(n_a, n_b)` basis.
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let d = self.dim;
        let mut u = DMatrix::zeros(d * d, d * d);
        for (n, block) in self.blocks.iter().enumerate() {
            let (lo, hi) = sector_range(n, d);
            for i in 0..=(hi - lo) {
                for j in 0..=(hi - lo) {
                    u[((lo + i) * d + n - lo - i, (lo + j) * d + n - lo - j)] = block[(i, j)];
                }
            }
        }
        u
    }

    /// Largest entry of `U'U - I` over sectors with `n_a + n_b <= max_total`.
    pub fn unitarity_defect(&self, max_total: usize) -> f64 {
        self.blocks
            .iter()
            .take(max_total + 1)
            .map(|b| {
                let id = DMatrix::<Complex64>::identity(b.nrows(), b.ncols());
                (b.adjoint() * b - id).camax()
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::cutoff::FockCutoff;
    use crate::fock::ladder::ladder_ops;
    use crate::fock::state::{build_input, twin_beam_reference};
    use crate::gaussian::Mode;
    use crate::input::InputSpec;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn cut(d: usize) -> FockCutoff {
        FockCutoff::new(d, 1e-8).unwrap()
    }

    #[test]
    fn zero_phase_is_identity() {
        let u = mz_unitary(0.0, 6).to_dense();
        assert!((u - DMatrix::<Complex64>::identity(36, 36)).camax() < 1e-15);
    }

    #[test]
    fn vacuum_is_invariant() {
        let vac = build_input(&InputSpec::VACUUM, &InputSpec::VACUUM, &cut(8)).unwrap();
        for &phi in &[0.3, FRAC_PI_2, PI, 5.0] {
            let out = mz_unitary(phi, 8).apply(&vac);
            assert!((out.amplitude(0, 0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            assert!((evolve(&vac, phi).amplitude(0, 0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn blocks_are_unitary() {
        for &phi in &[0.4, FRAC_PI_2, 2.9] {
            assert!(mz_unitary(phi, 20).unitarity_defect(16) < 1e-10);
        }
    }

    #[test]
    fn sector_blocks_match_kronecker_exponential() {
        // exp{i(phi/2)(a'b + b'a)} on the full product basis, which conserves
        // n_a + n_b and so is unaffected by the cut.
        let d = 5;
        let phi = 1.3;
        let ops = ladder_ops(d);
        let a = ops.annihilation.kronecker(&DMatrix::identity(d, d));
        let b = DMatrix::<Complex64>::identity(d, d).kronecker(&ops.annihilation);
        let hop = a.adjoint() * &b + b.adjoint() * &a;
        let full = (hop * Complex64::new(0.0, 0.5 * phi)).exp();
        let mine = mz_unitary(phi, d).to_dense();
        // compare on complete sectors only: the Kronecker generator couples
        // states beyond the cut differently
        for i in 0..d * d {
            for j in 0..d * d {
                if i / d + i % d < d && j / d + j % d < d {
                    assert!((full[(i, j)] - mine[(i, j)]).norm() < 1e-12, "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn vector_and_block_routes_agree() {
        let spec = InputSpec::from_amplitude(Complex64::new(0.8, 0.3), 0.4).unwrap();
        let psi = build_input(&spec, &InputSpec::from_energy(1.0, 0.5).unwrap(), &cut(40)).unwrap();
        for &phi in &[0.7, FRAC_PI_2, 4.0] {
            let a = evolve(&psi, phi);
            let b = mz_unitary(phi, 40).apply(&psi);
            let diff = a
                .amplitudes()
                .iter()
                .zip(b.amplitudes())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            assert!(diff < 1e-12, "phi={phi}: {diff}");
        }
    }

    #[test]
    fn squeezed_pair_becomes_rotated_twin_beam() {
        let r = 0.5;
        let sv = InputSpec::from_amplitude(Complex64::new(0.0, 0.0), r).unwrap();
        let c = cut(40);
        let out = evolve(&build_input(&sv, &sv, &c).unwrap(), FRAC_PI_2);
        let reference = twin_beam_reference(r, &c).unwrap().rotate(Mode::B, FRAC_PI_2);
        assert!(out.fidelity(&reference) > 1.0 - 1e-6);
    }
}
