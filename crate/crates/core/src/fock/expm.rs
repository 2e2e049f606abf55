//! Action of the exponential of a bounded generator on a vector.
//!
//! Truncated Taylor series with scaling: `exp(A) v = (exp(A/s))^s v` where `s`
//! is chosen so that `||A/s||_1 <= 2`; each factor is summed until the next
//! term is negligible against the partial sum. Generators here are sparse and
//! anti-Hermitian, so the steps are norm-preserving and the series never
//! needs more than ~30 terms.

use num_complex::Complex64;

const MAX_TERMS: usize = 60;
const STEP_NORM: f64 = 2.0;

/// `exp(generator) v`, with `generator` given as its action `y = G x` and an
/// upper bound `norm1` on its 1-norm.
pub fn expm_apply<G>(generator: G, norm1: f64, v: &[Complex64]) -> Vec<Complex64>
where
    G: Fn(&[Complex64], &mut [Complex64]),
{
    let steps = (norm1 / STEP_NORM).ceil().max(1.0) as usize;
    let scale = 1.0 / steps as f64;
    let mut acc = v.to_vec();
    let mut term = vec![Complex64::new(0.0, 0.0); v.len()];
    let mut next = vec![Complex64::new(0.0, 0.0); v.len()];
    for _ in 0..steps {
        term.copy_from_slice(&acc);
        for k in 1..=MAX_TERMS {
            generator(&term, &mut next);
            let f = scale / k as f64;
            let mut term_norm = 0.0f64;
            let mut acc_norm = 0.0f64;
            for ((t, n), a) in term.iter_mut().zip(next.iter()).zip(acc.iter_mut()) {
                *t = n * f;
                *a += *t;
                term_norm = term_norm.max(t.norm());
                acc_norm = acc_norm.max(a.norm());
            }
            if term_norm <= f64::EPSILON * 1e-2 * acc_norm.max(f64::MIN_POSITIVE) {
                break;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_generator() {
        // G = theta [[0, -1], [1, 0]] -> exp(G) is a rotation by theta.
        let theta = 7.3;
        let gen = |x: &[Complex64], y: &mut [Complex64]| {
            y[0] = -x[1] * theta;
            y[1] = x[0] * theta;
        };
        let v = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let out = expm_apply(gen, theta, &v);
        assert!((out[0].re - theta.cos()).abs() < 1e-13);
        assert!((out[1].re - theta.sin()).abs() < 1e-13);
    }

    #[test]
    fn zero_generator_is_identity() {
        let v = [Complex64::new(0.3, -0.2), Complex64::new(1.0, 0.5)];
        let out = expm_apply(|_: &[Complex64], y: &mut [Complex64]| y.fill(Complex64::new(0.0, 0.0)), 0.0, &v);
        assert_eq!(out, v.to_vec());
    }
}
