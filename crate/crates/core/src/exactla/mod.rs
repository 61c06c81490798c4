//! Exact linear algebra over `Q` and prime fields.

mod field;
mod matrix;
mod span;

pub use field::{eval_poly, is_prime, Field, FieldKind, Fp, Rational};
pub use matrix::Matrix;
pub use span::{Coordinates, Span};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
}

pub type Vector<F> = Vec<F>;

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Field::is_zero)
}

pub fn add_scaled<F: Field>(acc: &mut [F], c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.add_ref(&c.mul_ref(x));
        }
    }
}

/// `sum_i coeffs[i] * vectors[i]`.
pub fn combine<F: Field>(len: usize, coeffs: &[F], vectors: &[Vec<F>]) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        add_scaled(&mut out, c, v);
    }
    out
}
