//! Plane-wave dynamics of the massive vector / antisymmetric tensor field.
//!
//! A [`PlaneWaveMode`] carries the momentum-space amplitudes of
//! `A(x) = u e^{-ik·x} + …` and `F(x) = F₊ e^{-ik·x} + F₋ e^{+ik·x}`.
//! Derivatives act as `∂_μ → -ik_μ` on the positive-energy amplitude and
//! `∂_μ → +ik_μ` on the negative-energy one.

mod equations;
mod noether;

pub use equations::*;
pub use noether::*;

use serde::{Deserialize, Serialize};

use crate::polarization::{polarization, NormScheme, PolarizationState};
use crate::strengths::{field_strength_from_potential, notoph_tensor, EnergySign};
use crate::tensor::{FieldStrength, FourVector, Momentum, C64, I, METRIC};
use crate::Result;

/// Which normalization of the first-order Proca pair a mode obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProcaConvention {
    /// `∂_αF^{αμ} + (m/2)A^μ = 0`, `2mF^{μν} = ∂^μA^ν - ∂^νA^μ`
    HalfMass,
    /// `∂_αF^{αμ} + m²A^μ = 0`, `F^{μν} = ∂^μA^ν - ∂^νA^μ`
    Textbook,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveMode {
    pub momentum: Momentum,
    /// Four-momentum used by the derivative rule; `(E_p, p)` unless perturbed.
    pub k: FourVector,
    pub sigma: Option<PolarizationState>,
    pub norm: NormScheme,
    pub convention: ProcaConvention,
    /// Conjugation phase of the negative-energy potential.
    pub alpha: f64,
    pub u: FourVector,
    pub f_plus: FieldStrength,
    pub f_minus: FieldStrength,
}

impl PlaneWaveMode {
    /// Half-mass mode with zero conjugation phase.
    pub fn new(p: &Momentum, sigma: PolarizationState, norm: NormScheme) -> Result<Self> {
        Self::with_phase(p, sigma, norm, 0.0)
    }

    pub fn with_phase(p: &Momentum, sigma: PolarizationState, norm: NormScheme, alpha: f64) -> Result<Self> {
        let u = polarization(p, sigma, norm)?;
        let f_plus = field_strength_from_potential(p, &u, EnergySign::Positive, 0.0)?;
        let f_minus = field_strength_from_potential(p, &u, EnergySign::Negative, alpha)?;
        Ok(PlaneWaveMode {
            momentum: *p,
            k: p.four_vector(),
            sigma: Some(sigma),
            norm,
            convention: ProcaConvention::HalfMass,
            alpha,
            u,
            f_plus,
            f_minus,
        })
    }

    /// A mode given directly by its strength amplitudes, with no potential.
    pub fn from_strengths(p: &Momentum, f_plus: FieldStrength, f_minus: FieldStrength) -> Self {
        PlaneWaveMode {
            momentum: *p,
            k: p.four_vector(),
            sigma: None,
            norm: NormScheme::Unit,
            convention: ProcaConvention::HalfMass,
            alpha: 0.0,
            u: FourVector::zero(),
            f_plus,
            f_minus,
        }
    }

    /// `F₊ = F₋ =` the notoph tensor.
    pub fn notoph(p: &Momentum, norm: NormScheme) -> Result<Self> {
        let f = notoph_tensor(p, norm)?;
        let mut mode = Self::from_strengths(p, f, f);
        mode.norm = norm;
        Ok(mode)
    }

    pub fn mass(&self) -> f64 {
        self.momentum.mass()
    }

    /// Same amplitudes, derivative rule evaluated at `k = (energy, p)`.
    pub fn off_shell(&self, energy: f64) -> Self {
        let mut out = *self;
        out.k[0] = C64::from(energy);
        out
    }

    /// `k² - m²`
    pub fn shell_defect(&self) -> f64 {
        let k2: f64 = (0..4).map(|mu| self.k[mu].re * self.k[mu].re * METRIC[mu]).sum();
        k2 - self.mass() * self.mass()
    }

    /// Size of an amplitude before the cancellations in `k∧u`: the larger of
    /// `|F|` and `|k||u|/2m`.
    pub fn expanded_strength(&self) -> f64 {
        let f = self.f_plus.max_abs().max(self.f_minus.max_abs());
        let m = self.mass();
        if m > 0.0 {
            f.max(euclid(&self.k.0) * euclid(&self.u.0) / (2.0 * m))
        } else {
            f
        }
    }

    /// Magnitude of the terms in a bilinear density carrying `derivatives`
    /// factors of `k`; rounding in the amplitudes is relative to this.
    pub fn density_scale(&self, derivatives: i32) -> f64 {
        let f = self.f_plus.max_abs().max(self.f_minus.max_abs());
        euclid(&self.k.0).powi(derivatives) * f * self.expanded_strength()
    }

    /// `u → e^{iθ}u`, `F₊ → e^{iθ}F₊`, `F₋ → e^{-iθ}F₋`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let ph = C64::from_polar(1.0, theta);
        let mut out = *self;
        out.u = self.u.scale(ph);
        out.f_plus = self.f_plus.scale(ph);
        out.f_minus = self.f_minus.scale(ph.conj());
        out
    }

    /// Potential and strength of one energy sign: `(w, F, d_μ)` where `d_μ`
    /// is the covariant derivative factor.
    pub(crate) fn amplitude(&self, sign: EnergySign) -> (FourVector, FieldStrength, [C64; 4]) {
        let d = derivative_factor(&self.k, sign);
        match sign {
            EnergySign::Positive => (self.u, self.f_plus, d),
            EnergySign::Negative => (self.u.conj().scale(C64::from_polar(1.0, self.alpha)), self.f_minus, d),
        }
    }
}

/// Covariant `∂_μ → s·i·k_μ`, `s = -1` for positive energy.
pub(crate) fn derivative_factor(k: &FourVector, sign: EnergySign) -> [C64; 4] {
    let s = sign.derivative_sign();
    let low = k.lower();
    low.map(|x| I * s * x)
}

/// Euclidean length of a component array.
pub(crate) fn euclid(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Raises a covariant index array.
pub(crate) fn raise(v: &[C64; 4]) -> [C64; 4] {
    std::array::from_fn(|mu| v[mu] * METRIC[mu])
}
