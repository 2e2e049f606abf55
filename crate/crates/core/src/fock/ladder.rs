use nalgebra::DMatrix;
use num_complex::Complex64;

/// Truncated single-mode ladder matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderOps {
    pub annihilation: DMatrix<Complex64>,
    pub creation: DMatrix<Complex64>,
    pub number: DMatrix<Complex64>,
}

/// `a|n> = sqrt(n)|n-1>` on levels `0..dim`; creation is the adjoint and
/// number is `diag(0, ..., dim-1)`.
pub fn ladder_ops(dim: usize) -> LadderOps {
    let annihilation = DMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let creation = annihilation.adjoint();
    let number = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            Complex64::new(i as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    LadderOps {
        annihilation,
        creation,
        number,
    }
}

/// Ladder operators of the two modes acting on a row-major `(n_a, n_b)`
/// amplitude array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    A,
    ADag,
    B,
    BDag,
}

/// Applies one truncated ladder operator to a two-mode amplitude array with
/// single-mode dimension `dim`. Same action as the Kronecker-lifted matrix,
/// without forming it.
pub fn apply_ladder(op: Ladder, psi: &[Complex64], dim: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for na in 0..dim {
        for nb in 0..dim {
            let (src, amp) = match op {
                // (a psi)(na, nb) = sqrt(na+1) psi(na+1, nb)
                Ladder::A if na + 1 < dim => ((na + 1, nb), ((na + 1) as f64).sqrt()),
                Ladder::ADag if na >= 1 => ((na - 1, nb), (na as f64).sqrt()),
                Ladder::B if nb + 1 < dim => ((na, nb + 1), ((nb + 1) as f64).sqrt()),
                Ladder::BDag if nb >= 1 => ((na, nb - 1), (nb as f64).sqrt()),
                _ => continue,
            };
            out[na * dim + nb] = psi[src.0 * dim + src.1] * amp;
        }
    }
    out
}
