use crate::error::{Error, Result};

/// Largest tolerated norm loss.
pub const MAX_TAIL_TOL: f64 = 1e-4;
/// Default resource cap on the single-mode dimension.
pub const DEFAULT_MAX_DIM: usize = 256;

/// Single-mode truncation: levels `0..dim` are kept for each mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockCutoff {
    dim: usize,
    tail_tol: f64,
}

impl FockCutoff {
    pub fn new(dim: usize, tail_tol: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::domain(format!("truncation dimension {dim} must be >= 2")));
        }
        if !(tail_tol > 0.0 && tail_tol <= MAX_TAIL_TOL) {
            return Err(Error::domain(format!(
                "tail tolerance {tail_tol:e} must lie in (0, {MAX_TAIL_TOL:e}]"
            )));
        }
        Ok(FockCutoff { dim, tail_tol })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tail_tol(&self) -> f64 {
        self.tail_tol
    }

    pub(crate) fn with_dim(self, dim: usize) -> Self {
        FockCutoff { dim, ..self }
    }
}
