//! Entanglement and fringe visibility at the output of a Mach-Zehnder
//! interferometer fed by two squeezed-coherent beams.
//!
//! Two engines compute the same quantities: [`gaussian`] propagates
//! covariance matrices exactly, and [`fock`] works on a truncated number
//! basis as an independent check. [`observables`] builds the photodetection
//! moments and fringe visibilities on top of them.

// Domain checks are written `!(x >= lo)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod entropy;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod input;
pub mod observables;
pub mod report;

pub use entropy::{thermal_entropy, thermal_photons_for_entropy};
pub use error::{Error, Result};
pub use fock::{FockCutoff, FockReport, TwoModeFockVector};
pub use gaussian::{epsilon, epsilon_asymptotic, Mode, ReducedModeState, TwoModeGaussianState};
pub use input::InputSpec;
pub use observables::{Engine, Observable, PhiScan, VisibilityResult};
pub use report::{evaluate_point, CutoffPolicy, OperatingPoint, SweepResult, TruncationInfo};
