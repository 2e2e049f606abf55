//! `K` and `H` as operators on the input fields.
//!
//! Conjugating `n_a n_b` and `(n_a - n_b)^2` with the interferometer gives
//! normally ordered polynomials in the input ladder operators whose
//! coefficients depend on `s = sin(delta)`, `c = cos(delta)`. With the
//! orientation used here `delta = -phi/2`. Evaluating these polynomials on
//! the input state must reproduce the output expectations; tests use this to
//! check the algebra against the evolved state.

use num_complex::Complex64;

use crate::fock::{apply_ladder, Ladder, TwoModeFockVector};

use Ladder::{ADag as Ad, BDag as Bd, A, B};

type Term = (Complex64, &'static [Ladder]);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn im(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

fn angles(phi: f64) -> (f64, f64) {
    (-0.5 * phi).sin_cos()
}

/// Terms of the conjugated `n_a n_b`.
fn k_terms(phi: f64) -> Vec<Term> {
    let (s, c) = angles(phi);
    let s2c2 = s * s * c * c;
    let sc3 = s * c * c * c;
    let s3c = s * s * s * c;
    vec![
        (re(s2c2), &[Ad, Ad, A, A]),
        (re(s2c2), &[Bd, Bd, B, B]),
        (re(s2c2), &[Ad, Ad, B, B]),
        (re(s2c2), &[Bd, Bd, A, A]),
        (re((s * s - c * c).powi(2)), &[Ad, A, Bd, B]),
        (im(sc3), &[A, Bd, Bd, B]),
        (im(sc3), &[Ad, Ad, A, B]),
        (im(-sc3), &[Ad, Bd, B, B]),
        (im(-sc3), &[Ad, A, A, Bd]),
        (im(s3c), &[Ad, A, A, Bd]),
        (im(s3c), &[Ad, Bd, B, B]),
        (im(-s3c), &[Ad, Ad, A, B]),
        (im(-s3c), &[A, Bd, Bd, B]),
    ]
}

/// Terms of the conjugated `(n_a - n_b)^2`, except `-2 K`.
fn h_terms_without_k(phi: f64, with_number_product: bool) -> Vec<Term> {
    let (s, c) = angles(phi);
    let s2c2 = s * s * c * c;
    let sc3 = 2.0 * s * c * c * c;
    let s3c = 2.0 * s * s * s * c;
    let quartic = s.powi(4) + c.powi(4);
    let mut terms: Vec<Term> = vec![
        (re(quartic), &[Ad, A, Ad, A]),
        (re(quartic), &[Bd, B, Bd, B]),
        (re(-2.0 * s2c2), &[Ad, Ad, B, B]),
        (re(-2.0 * s2c2), &[Bd, Bd, A, A]),
        (re(2.0 * s2c2), &[Ad, A]),
        (re(2.0 * s2c2), &[Bd, B]),
        (im(sc3), &[Ad, A, A, Bd]),
        (im(-sc3), &[Ad, Ad, A, B]),
        (im(sc3), &[Ad, Bd, B, B]),
        (im(-sc3), &[A, Bd, Bd, B]),
        (im(s3c), &[A, Bd, Bd, B]),
        (im(-s3c), &[Ad, Bd, B, B]),
        (im(s3c), &[Ad, Ad, A, B]),
        (im(-s3c), &[Ad, A, A, Bd]),
    ];
    if with_number_product {
        terms.push((re(8.0 * s2c2), &[Ad, A, Bd, B]));
    }
    terms
}

/// `<psi| W |psi>` for a word of ladder operators, applied right to left.
fn word_expectation(psi: &TwoModeFockVector, word: &[Ladder]) -> Complex64 {
    let d = psi.dim();
    let mut v = psi.amplitudes().to_vec();
    for &op in word.iter().rev() {
        v = apply_ladder(op, &v, d);
    }
    psi.amplitudes()
        .iter()
        .zip(&v)
        .map(|(x, y)| x.conj() * y)
        .sum()
}

fn sum_terms(psi: &TwoModeFockVector, terms: &[Term]) -> Complex64 {
    terms
        .iter()
        .map(|(coef, word)| coef * word_expectation(psi, word))
        .sum()
}

/// Output coincidence rate evaluated on the input state `psi`.
///
/// Exact when `psi` has no weight on basis states with `n_a + n_b >= D`.
pub fn k_from_input(psi: &TwoModeFockVector, phi: f64) -> Complex64 {
    sum_terms(psi, &k_terms(phi)) / psi.norm_sqr()
}

/// Output squared photocurrent difference evaluated on the input state.
pub fn h_from_input(psi: &TwoModeFockVector, phi: f64) -> Complex64 {
    let rest = sum_terms(psi, &h_terms_without_k(phi, true)) / psi.norm_sqr();
    rest - 2.0 * k_from_input(psi, phi)
}

/// The expansion of `(n_a - n_b)^2` lacking its `8 s^2 c^2 n_a n_b` term.
/// Kept to show that this term is required.
pub fn h_from_input_without_number_product(psi: &TwoModeFockVector, phi: f64) -> Complex64 {
    let rest = sum_terms(psi, &h_terms_without_k(phi, false)) / psi.norm_sqr();
    rest - 2.0 * k_from_input(psi, phi)
}
