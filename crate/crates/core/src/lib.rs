//! Logarithmic perturbation theory for the radial Klein-Gordon equation with
//! mixed vector and scalar potentials, plus a Numerov shooting solver used as
//! an independent reference.
//!
//! Units are natural (`ħ = c = 1`). Potentials enter through their Laurent
//! coefficients about the origin, `r V(r) = Σ V_i r^i` and likewise for `W`.

// `!(x > 0.0)` is used deliberately so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_forms;
pub mod error;
pub mod numerov;
pub mod perturbation;
pub mod potentials;
pub mod reference;
pub mod summation;

pub use error::{Error, ErrorKind, Result};
pub use perturbation::{energy_corrections, EnergyExpansion, QuantumState};
pub use potentials::{CouplingSeries, HulthenParams, PotentialFunction};
