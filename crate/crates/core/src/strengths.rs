//! Momentum-space field strengths and the notoph tensor.
//!
//! With the half-mass relation `2m F^{μν} = ∂^μA^ν - ∂^νA^μ` and the plane
//! wave rule `∂_μ → -ip_μ`, the positive-energy amplitudes are
//! `B = (i/2m) p × u` and `E = (i/2m)(p⁰ u - p u⁰)`. Negative-energy
//! amplitudes are built from the conjugate potential `u^c = e^{iα} u*` with
//! `∂_μ → +ip_μ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polarization::{closed_form_u, polarization, NormScheme, PolarizationState};
use crate::report::CheckReport;
use crate::tensor::{
    boost_matrix, eb_decompose, max_abs3, max_abs_diff3, FieldStrength, FourVector, Momentum, ThreeVector, C64, I, ZERO,
};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub const BOTH: [EnergySign; 2] = [EnergySign::Positive, EnergySign::Negative];

    /// `s` in `∂_μ → s·i·p_μ`: `-1` for positive energy, `+1` for negative.
    pub fn derivative_sign(self) -> f64 {
        match self {
            EnergySign::Positive => -1.0,
            EnergySign::Negative => 1.0,
        }
    }
}

impl fmt::Display for EnergySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergySign::Positive => "+",
            EnergySign::Negative => "-",
        })
    }
}

/// Conjugation phases `α_σ` (magnetic) and `α'_σ` (electric), indexed by
/// [`PolarizationState::index`]. All zero corresponds to `C = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Phases {
    pub alpha: [f64; 4],
    pub alpha_prime: [f64; 4],
}

impl Phases {
    pub fn uniform(angle: f64) -> Self {
        Phases {
            alpha: [angle; 4],
            alpha_prime: [angle; 4],
        }
    }

    pub fn alpha(&self, s: PolarizationState) -> f64 {
        self.alpha[s.index()]
    }

    pub fn alpha_prime(&self, s: PolarizationState) -> f64 {
        self.alpha_prime[s.index()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElectroMagnetic {
    pub e: ThreeVector,
    pub b: ThreeVector,
}

impl ElectroMagnetic {
    pub fn zero() -> Self {
        ElectroMagnetic {
            e: [ZERO; 3],
            b: [ZERO; 3],
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        ElectroMagnetic {
            e: self.e.map(|z| z * s),
            b: self.b.map(|z| z * s),
        }
    }

    pub fn max_abs(&self) -> f64 {
        max_abs3(&self.e).max(max_abs3(&self.b))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        max_abs_diff3(&self.e, &other.e).max(max_abs_diff3(&self.b, &other.b))
    }
}

/// Strength amplitude `F^{μν}` of one energy sign, from the potential `u`.
///
/// Negative energy uses `e^{iα} u*` in place of `u`.
pub fn field_strength_from_potential(
    p: &Momentum,
    u: &FourVector,
    sign: EnergySign,
    alpha: f64,
) -> Result<FieldStrength> {
    p.require_massive()?;
    let k = p.four_vector();
    Ok(field_strength_with_k(&k, p.mass(), u, sign, alpha))
}

/// `F = (s·i/2m)(k∧w)` with `w` the (possibly conjugated) potential. Works off
/// shell; `k` is taken as given.
pub(crate) fn field_strength_with_k(
    k: &FourVector,
    m: f64,
    u: &FourVector,
    sign: EnergySign,
    alpha: f64,
) -> FieldStrength {
    let (w, s) = match sign {
        EnergySign::Positive => (*u, -1.0),
        EnergySign::Negative => (u.conj().scale(C64::from_polar(1.0, alpha)), 1.0),
    };
    FieldStrength::wedge(k, &w).scale(I * (s / (2.0 * m)))
}

pub fn strengths_from_potential(p: &Momentum, u: &FourVector, sign: EnergySign) -> Result<ElectroMagnetic> {
    strengths_from_potential_with_phases(p, u, sign, 0.0, 0.0)
}

/// `E` uses the phase `alpha_prime`, `B` uses `alpha`.
pub fn strengths_from_potential_with_phases(
    p: &Momentum,
    u: &FourVector,
    sign: EnergySign,
    alpha: f64,
    alpha_prime: f64,
) -> Result<ElectroMagnetic> {
    let (_, b) = eb_decompose(&field_strength_from_potential(p, u, sign, alpha)?);
    let (e, _) = eb_decompose(&field_strength_from_potential(p, u, sign, alpha_prime)?);
    Ok(ElectroMagnetic { e, b })
}

/// Constructed strengths of mode `σ`: boost the rest vector, then differentiate.
pub fn mode_strengths(
    p: &Momentum,
    sigma: PolarizationState,
    norm: NormScheme,
    sign: EnergySign,
    phases: &Phases,
) -> Result<ElectroMagnetic> {
    let u = polarization(p, sigma, norm)?;
    strengths_from_potential_with_phases(p, &u, sign, phases.alpha(sigma), phases.alpha_prime(sigma))
}

pub fn closed_form_strengths(
    p: &Momentum,
    sigma: PolarizationState,
    norm: NormScheme,
    sign: EnergySign,
) -> Result<ElectroMagnetic> {
    closed_form_strengths_with_phases(p, sigma, norm, sign, &Phases::default())
}

/// Closed-form `(+)` columns; `(-)` partners follow from the relations
/// `X⁺(p,±1) = e^{-iα_{∓1}} X⁻(p,∓1)` and `X⁺(p,0) = -e^{-iα_0} X⁻(p,0)`.
pub fn closed_form_strengths_with_phases(
    p: &Momentum,
    sigma: PolarizationState,
    norm: NormScheme,
    sign: EnergySign,
    phases: &Phases,
) -> Result<ElectroMagnetic> {
    // Validates mass and norm.
    closed_form_u(p, sigma, norm)?;
    match sign {
        EnergySign::Positive => Ok(positive_columns(p, sigma, norm)),
        EnergySign::Negative => {
            let partner = positive_columns(p, sigma.flipped(), norm);
            let sign = if sigma == PolarizationState::Zero { -1.0 } else { 1.0 };
            Ok(ElectroMagnetic {
                e: partner.e.map(|z| z * C64::from_polar(sign, phases.alpha_prime(sigma))),
                b: partner.b.map(|z| z * C64::from_polar(sign, phases.alpha(sigma))),
            })
        }
    }
}

fn positive_columns(p: &Momentum, sigma: PolarizationState, norm: NormScheme) -> ElectroMagnetic {
    let m = p.mass();
    let e_p = p.energy();
    let n = norm.factor(m);
    let [p1, p2, p3] = p.p();
    let d = e_p + m;
    let re = C64::from;
    match sigma {
        PolarizationState::Plus => {
            let pr = p.p_r();
            let pre = -I * (n / (2.0 * std::f64::consts::SQRT_2 * m));
            ElectroMagnetic {
                b: [-I * p3, re(p3), I * pr].map(|z| z * pre),
                e: [re(e_p) - pr * (p1 / d), I * e_p - pr * (p2 / d), -pr * (p3 / d)].map(|z| z * pre),
            }
        }
        PolarizationState::Minus => {
            let pl = p.p_l();
            let pre = I * (n / (2.0 * std::f64::consts::SQRT_2 * m));
            ElectroMagnetic {
                b: [I * p3, re(p3), -I * pl].map(|z| z * pre),
                e: [re(e_p) - pl * (p1 / d), -I * e_p - pl * (p2 / d), -pl * (p3 / d)].map(|z| z * pre),
            }
        }
        PolarizationState::Zero => {
            let pre = I * (n / (2.0 * m));
            ElectroMagnetic {
                b: [re(p2), re(-p1), ZERO].map(|z| z * pre),
                e: [re(-p1 * p3 / d), re(-p2 * p3 / d), re(e_p - p3 * p3 / d)].map(|z| z * pre),
            }
        }
        PolarizationState::TimeLike => ElectroMagnetic::zero(),
    }
}

/// Verifies the six `(+)`/`(-)` relations on constructed strengths, the
/// negative-energy ones built with the supplied phases.
pub fn phase_relation_check(p: &Momentum, phases: &Phases, tol: f64) -> Result<CheckReport> {
    phase_relation_check_with_norm(p, NormScheme::Unit, phases, tol)
}

pub fn phase_relation_check_with_norm(
    p: &Momentum,
    norm: NormScheme,
    phases: &Phases,
    tol: f64,
) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    let mut details = Vec::new();
    for sigma in PolarizationState::SPATIAL {
        let partner = sigma.flipped();
        let plus = mode_strengths(p, sigma, norm, EnergySign::Positive, phases)?;
        let minus = mode_strengths(p, partner, norm, EnergySign::Negative, phases)?;
        let sign = if sigma == PolarizationState::Zero { -1.0 } else { 1.0 };
        let rb = minus.b.map(|z| z * C64::from_polar(sign, -phases.alpha(partner)));
        let re = minus.e.map(|z| z * C64::from_polar(sign, -phases.alpha_prime(partner)));
        let scale = plus.max_abs().max(1.0);
        let db = max_abs_diff3(&plus.b, &rb) / scale;
        let de = max_abs_diff3(&plus.e, &re) / scale;
        details.push(format!("B({sigma}): {db:e}, E({sigma}): {de:e}"));
        worst = worst.max(db).max(de);
    }
    Ok(CheckReport::check(
        "strengths.phase_relations",
        "B+(p,s) and E+(p,s) equal phased B-(p,-s), E-(p,-s), minus sign for s = 0",
        "field-strength phase relations",
        worst,
        tol,
    )
    .with_details(details.join("; ")))
}

/// `N (ε₁^μ ε₂^ν - ε₁^ν ε₂^μ)` with `ε₁, ε₂` the unit boosts of the rest-frame
/// x and y linear polarizations.
pub fn notoph_tensor(p: &Momentum, norm: NormScheme) -> Result<FieldStrength> {
    let l = boost_matrix(p)?;
    let n = norm.factor(p.mass());
    closed_form_u(p, PolarizationState::Zero, norm)?;
    let e1 = l.apply(&FourVector::from_real([0.0, 1.0, 0.0, 0.0]));
    let e2 = l.apply(&FourVector::from_real([0.0, 0.0, 1.0, 0.0]));
    Ok(FieldStrength::wedge(&e1, &e2).scale(C64::from(n)))
}

/// The closed-form notoph matrix with its `iN²/m` prefactor.
pub fn closed_form_notoph(p: &Momentum, norm: NormScheme) -> Result<FieldStrength> {
    closed_form_u(p, PolarizationState::Zero, norm)?;
    let m = p.mass();
    let n = norm.factor(m);
    let p0 = p.energy();
    let [p1, p2, p3] = p.p();
    let d = p0 + m;
    let rl = (p.p_r() * p.p_l()).re;
    let pre = I * (n * n / m);
    Ok(FieldStrength::from_upper([
        C64::from(-p2),
        C64::from(p1),
        ZERO,
        C64::from(m + rl / d),
        C64::from(p2 * p3 / d),
        C64::from(-p1 * p3 / d),
    ])
    .scale(pre))
}

/// Least-squares ratio `c` in `notoph_tensor ≈ c · closed_form_notoph`, and the
/// relative residual of that fit.
pub fn notoph_ratio(p: &Momentum, norm: NormScheme) -> Result<(C64, f64)> {
    let built = notoph_tensor(p, norm)?.upper();
    let closed = closed_form_notoph(p, norm)?.upper();
    let num: C64 = closed.iter().zip(&built).map(|(a, b)| a.conj() * b).sum();
    let den: f64 = closed.iter().map(|a| a.norm_sqr()).sum();
    let c = num / den;
    let resid = built
        .iter()
        .zip(&closed)
        .map(|(b, a)| (b - c * a).norm())
        .fold(0.0, f64::max);
    let scale = built
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    Ok((c, resid / scale))
}
