//! Momentum-space residuals of the first- and second-order field equations.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{euclid, raise, PlaneWaveMode, ProcaConvention};
use crate::clifford::{basis, expansion_terms, DiracMatrix};
use crate::polarization::{NormScheme, PolarizationState};
use crate::report::CheckReport;
use crate::strengths::EnergySign;
use crate::tensor::{minkowski_dot, FieldStrength, FourVector, Momentum, C64, I, METRIC, ZERO};
use crate::{Error, Result};

/// Residuals of the Proca pair for one energy sign, with the magnitudes of
/// the terms that cancel in each equation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProcaResidual {
    pub divergence: FourVector,
    pub curl: FieldStrength,
    pub divergence_scale: f64,
    pub curl_scale: f64,
}

impl ProcaResidual {
    /// Largest residual relative to its equation's term size (floored at 1).
    pub fn relative(&self) -> f64 {
        (self.divergence.max_abs() / self.divergence_scale.max(1.0)).max(self.curl.max_abs() / self.curl_scale.max(1.0))
    }
}

/// Positive-energy residuals `(r1, r2)` of the Proca pair in `convention`.
pub fn proca_residual(mode: &PlaneWaveMode, convention: ProcaConvention) -> (FourVector, FieldStrength) {
    let r = proca_residual_signed(mode, convention, EnergySign::Positive);
    (r.divergence, r.curl)
}

pub fn proca_residual_signed(mode: &PlaneWaveMode, convention: ProcaConvention, sign: EnergySign) -> ProcaResidual {
    let m = mode.mass();
    let (w, f, d) = mode.amplitude(sign);
    let (c_div, c_curl) = match convention {
        ProcaConvention::HalfMass => (0.5 * m, 2.0 * m),
        ProcaConvention::Textbook => (m * m, 1.0),
    };
    let div: [C64; 4] = std::array::from_fn(|mu| (0..4).map(|a| d[a] * f.get(a, mu)).sum());
    let divergence = FourVector(std::array::from_fn(|mu| div[mu] + w[mu] * c_div));

    let d_up = raise(&d);
    let grad = FieldStrength::from_fn(|mu, nu| d_up[mu] * w[nu] - d_up[nu] * w[mu]);
    let curl = f.scale(C64::from(c_curl)) - grad;

    // The divergence cancels terms of size |k|²|w|/c_curl once F is expanded.
    let expanded = euclid(&d) * euclid(&d) * euclid(&w.0) / c_curl;
    let divergence_scale = div
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(w.max_abs() * c_div)
        .max(expanded);
    let curl_scale = (f.max_abs() * c_curl)
        .max(grad.max_abs())
        .max(euclid(&d) * euclid(&w.0));
    ProcaResidual {
        divergence,
        curl,
        divergence_scale,
        curl_scale,
    }
}

/// Relative Proca residual over both energy signs.
pub fn proca_defect(mode: &PlaneWaveMode, convention: ProcaConvention) -> f64 {
    EnergySign::BOTH
        .iter()
        .map(|&s| proca_residual_signed(mode, convention, s).relative())
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapDirection {
    ToTextbook,
    ToHalfMass,
}

/// Rescales the potential between the two conventions.
///
/// The half-mass potential is `2m` times the textbook one (`A → 2mA` read as
/// a substitution), and the strengths coincide.
pub fn normalization_map(mode: &PlaneWaveMode, direction: MapDirection) -> Result<PlaneWaveMode> {
    mode.momentum.require_massive()?;
    let two_m = 2.0 * mode.mass();
    let mut out = *mode;
    match direction {
        MapDirection::ToTextbook => {
            out.u = mode.u * (1.0 / two_m);
            out.convention = ProcaConvention::Textbook;
        }
        MapDirection::ToHalfMass => {
            out.u = mode.u * two_m;
            out.convention = ProcaConvention::HalfMass;
        }
    }
    Ok(out)
}

/// Residuals of the spin-0 set at four-momentum `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KemmerResiduals {
    /// `Ã^μ = -(k^μ/m) φ̃`, solved from the third equation.
    pub axial: FourVector,
    /// `mφ̃ + i∂_μÃ^μ`, which reduces to `(m² - k²) φ̃ / m`.
    pub scalar: C64,
    /// `mÃ^μ + i∂^μφ̃`
    pub vector: FourVector,
}

/// `mφ = 0` with `m ≠ 0` forces `φ = 0`.
pub fn kemmer_scalar_field(m: f64) -> Result<C64> {
    if m > 0.0 && m.is_finite() {
        Ok(ZERO)
    } else {
        Err(Error::NonPositiveMass(m))
    }
}

pub fn kemmer_residuals(k: &FourVector, m: f64, phi_t: C64) -> Result<KemmerResiduals> {
    kemmer_scalar_field(m)?;
    let d = super::derivative_factor(k, EnergySign::Positive);
    let d_up = raise(&d);
    let axial = k.scale(-phi_t / m);
    let div: C64 = (0..4).map(|mu| d[mu] * axial[mu]).sum();
    let scalar = phi_t * m + I * div;
    let vector = FourVector(std::array::from_fn(|mu| axial[mu] * m + I * d_up[mu] * phi_t));
    Ok(KemmerResiduals { axial, scalar, vector })
}

pub fn kemmer_scalar_check(p: &Momentum, phi_t: C64, tol: f64) -> Result<CheckReport> {
    p.require_massive()?;
    let r = kemmer_residuals(&p.four_vector(), p.mass(), phi_t)?;
    let k = euclid(&p.four_vector().0);
    let scale = (phi_t.norm() * (p.mass() + k * k / p.mass())).max(1.0);
    let phi = kemmer_scalar_field(p.mass())?;
    let err = (r.scalar.norm().max(r.vector.max_abs()) / scale).max(phi.norm());
    Ok(CheckReport::check(
        "dynamics.kemmer",
        "spin-0 set: m phi = 0, m phi~ = -i d.A~, m A~ = -i d phi~",
        "Kemmer j=0 set",
        err,
        tol,
    ))
}

/// Relative bound on `|p·B|` accepted as transverse.
pub const TRANSVERSE_TOL: f64 = 1e-10;

/// Builds `F̃^{μν} = (∂^μB^ν - ∂^νB^μ)/(2im)` and returns it with the residual
/// of `i∂_αF̃^{αμ} + (m/2)B^μ`.
pub fn dual_set_fields(p: &Momentum, b_pot: &FourVector) -> Result<(FieldStrength, FourVector)> {
    p.require_massive()?;
    let k = p.four_vector();
    let m = p.mass();
    let transverse = minkowski_dot(&k, b_pot).norm();
    let scale = k.max_abs() * b_pot.max_abs();
    if transverse > TRANSVERSE_TOL * scale.max(1.0) {
        return Err(Error::NotTransverse(transverse));
    }
    let d = super::derivative_factor(&k, EnergySign::Positive);
    let d_up = raise(&d);
    let grad = FieldStrength::from_fn(|mu, nu| d_up[mu] * b_pot[nu] - d_up[nu] * b_pot[mu]);
    let f_dual = grad.scale(C64::from(1.0) / (I * 2.0 * m));
    let residual = FourVector(std::array::from_fn(|mu| {
        let div: C64 = (0..4).map(|a| d[a] * f_dual.get(a, mu)).sum();
        I * div + b_pot[mu] * (0.5 * m)
    }));
    Ok((f_dual, residual))
}

pub fn dual_set_check(p: &Momentum, b_pot: &FourVector, tol: f64) -> Result<CheckReport> {
    let (_, residual) = dual_set_fields(p, b_pot)?;
    let d = euclid(&p.four_vector().0);
    let scale = (b_pot.max_abs() * p.mass() * 0.5)
        .max(d * d * euclid(&b_pot.0) / (2.0 * p.mass()))
        .max(1.0);
    Ok(CheckReport::check(
        "dynamics.dual_set",
        "i d_a F~^{a mu} + (m/2) B^mu = 0 with 2im F~ = dB - dB",
        "dual-tensor equation set",
        residual.max_abs() / scale,
        tol,
    ))
}

/// Relative residuals of `(k̸ - m)Ψ = 0` and `Ψ(k̸ - m)ᵀ = 0`.
pub fn bw_residuals(mode: &PlaneWaveMode, weight: C64) -> (f64, f64) {
    let b = basis();
    let (vector, tensor) = expansion_terms(b, &mode.u, &mode.f_plus);
    let psi = vector + tensor.scale(weight);
    let slash = b.slash(&mode.k);
    let m = mode.mass();
    let op = slash - DiracMatrix::identity().scale(C64::from(m));
    let left = op * psi;
    let right = psi * op.transpose();
    // Ψ's entries cancel down from |u| and |k||u|/2m, so those set its size.
    let k = euclid(&mode.k.0);
    let f = mode.f_plus.max_abs();
    let growth = if f > 0.0 {
        (k * euclid(&mode.u.0) / (2.0 * m * f)).max(1.0)
    } else {
        1.0
    };
    let size = psi.frobenius().max(vector.frobenius() + tensor.frobenius() * growth);
    let scale = ((k + m) * size).max(f64::MIN_POSITIVE);
    (left.frobenius() / scale, right.frobenius() / scale)
}

/// Least-squares weight `c` minimizing `‖(k̸ - m)(V + cT)‖` for one mode.
pub fn calibrate_bw_weight(mode: &PlaneWaveMode) -> C64 {
    let b = basis();
    let (vector, tensor) = expansion_terms(b, &mode.u, &mode.f_plus);
    let op = b.slash(&mode.k) - DiracMatrix::identity().scale(C64::from(mode.mass()));
    let r0 = op * vector;
    let r1 = op * tensor;
    -r1.inner(&r0) / r1.inner(&r1)
}

/// Relative weight of the tensor term in the symmetric expansion, calibrated
/// once on a fixed transverse half-mass mode.
pub fn bw_weight() -> C64 {
    static WEIGHT: OnceLock<C64> = OnceLock::new();
    *WEIGHT.get_or_init(|| {
        let p = Momentum::new([0.3, -0.7, 1.1], 1.3).expect("valid reference momentum");
        let mode = PlaneWaveMode::new(&p, PolarizationState::Plus, NormScheme::Unit).expect("massive reference mode");
        calibrate_bw_weight(&mode)
    })
}

pub fn bw_check(p: &Momentum, sigma: PolarizationState, tol: f64) -> Result<CheckReport> {
    let mode = PlaneWaveMode::new(p, sigma, NormScheme::Unit)?;
    let (left, right) = bw_residuals(&mode, bw_weight());
    Ok(CheckReport::check(
        format!("dynamics.bw.{sigma}"),
        "Dirac equation on both indices of the symmetric bispinor",
        "Bargmann-Wigner equations",
        left.max(right),
        tol,
    )
    .with_details(format!("first index {left:e}, second index {right:e}")))
}

/// Residual of `½(□ + m²)F_{μν} + ∂_μ∂^αF_{αν} - ∂_ν∂^αF_{αμ}` with
/// `□ = -∂_α∂^α`, for the positive and negative amplitudes. Returned with
/// indices raised.
pub fn eom_residual(mode: &PlaneWaveMode) -> (FieldStrength, FieldStrength) {
    let m = mode.mass();
    let one = |sign: EnergySign| {
        let (_, f, d) = mode.amplitude(sign);
        let d_up = raise(&d);
        let low = f.lowered();
        let box_op = -(0..4).map(|a| d[a] * d_up[a]).sum::<C64>();
        // v_ν = ∂^α F_{αν}
        let v: [C64; 4] = std::array::from_fn(|nu| (0..4).map(|a| d_up[a] * low[a][nu]).sum());
        FieldStrength::from_fn(|mu, nu| {
            let r = (box_op + m * m) * 0.5 * low[mu][nu] + d[mu] * v[nu] - d[nu] * v[mu];
            r * (METRIC[mu] * METRIC[nu])
        })
    };
    (one(EnergySign::Positive), one(EnergySign::Negative))
}

/// Largest EOM residual relative to the size of its individual terms,
/// `(Σ|k_μ|² + m²)` times the larger of `|F|` and its unexpanded size `|k||u|/c`.
pub fn eom_defect(mode: &PlaneWaveMode) -> f64 {
    let (a, b) = eom_residual(mode);
    let k = euclid(&mode.k.0);
    let m = mode.mass();
    let c_curl = match mode.convention {
        ProcaConvention::HalfMass => 2.0 * m,
        ProcaConvention::Textbook => 1.0,
    };
    let f = mode
        .f_plus
        .max_abs()
        .max(mode.f_minus.max_abs())
        .max(k * euclid(&mode.u.0) / c_curl);
    let scale = ((k * k + m * m) * f).max(1.0);
    a.max_abs().max(b.max_abs()) / scale
}
