//! Closed-form construction and numerical verification of massive spin-1
//! field objects: Proca polarization vectors, field strengths, the
//! Bargmann-Wigner spinor, the notoph (Kalb-Ramond) tensor and the Noether
//! densities of the antisymmetric tensor field, together with an empirical
//! engine for classifying their massless limits.
//!
//! Conventions used throughout:
//!
//! * metric `diag(1, -1, -1, -1)`, contravariant Levi-Civita `ε^{0123} = +1`;
//! * chiral gamma matrices with `γ⁵ = iγ⁰γ¹γ²γ³ = diag(-1, -1, 1, 1)`;
//! * plane waves `e^{∓ip·x}` with `∂_μ → ∓ip_μ` for positive/negative energy;
//! * `E^i = F^{i0}`, `B^i = -½ ε^{ijk} F^{jk}`.

#![allow(clippy::needless_range_loop)]

pub mod clifford;
pub mod dynamics;
mod error;
pub mod limits;
pub mod polarization;
pub mod report;
pub mod sampling;
pub mod strengths;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
pub use report::{CheckReport, Status};
pub use tensor::{FieldStrength, FourVector, LorentzBoost, Momentum, C64};

/// Default absolute/relative tolerance for identity checks.
pub const DEFAULT_TOL: f64 = 1e-12;
