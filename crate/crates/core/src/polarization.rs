//! Polarization vectors of the massive vector potential.
//!
//! `u^μ(p, σ) = N · L^μ_ν(p) ε^ν(0, σ)`, with `L(p)` the pure boost from rest
//! and `N` the normalization scheme. `N = 1` gives unit-normalized vectors,
//! `N = m` the mass-normalized ones that stay finite as `m → 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::tensor::{boost_matrix, conj_dot, FourVector, Momentum, C64, I, ONE, ZERO};
use crate::{Error, Result};

/// Spin projection label `σ ∈ {+1, 0, -1, 0_t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PolarizationState {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "0t")]
    TimeLike,
}

impl PolarizationState {
    pub const ALL: [PolarizationState; 4] = [Self::Plus, Self::Zero, Self::Minus, Self::TimeLike];
    /// The three physical (space-like) modes.
    pub const SPATIAL: [PolarizationState; 3] = [Self::Plus, Self::Zero, Self::Minus];

    pub fn index(self) -> usize {
        match self {
            Self::Plus => 0,
            Self::Zero => 1,
            Self::Minus => 2,
            Self::TimeLike => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Plus => "+1",
            Self::Zero => "0",
            Self::Minus => "-1",
            Self::TimeLike => "0t",
        }
    }

    pub fn is_spatial(self) -> bool {
        self != Self::TimeLike
    }

    /// `σ → -σ`; the zero modes map to themselves.
    pub fn flipped(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
            other => other,
        }
    }
}

impl fmt::Display for PolarizationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PolarizationState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "plus" => Ok(Self::Plus),
            "0" | "zero" => Ok(Self::Zero),
            "-1" | "minus" => Ok(Self::Minus),
            "0t" | "0_t" | "t" | "timelike" => Ok(Self::TimeLike),
            other => Err(Error::Parse {
                what: "polarization state",
                input: other.to_string(),
            }),
        }
    }
}

/// Overall scale `N` of the potential.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormScheme {
    /// `N = 1`
    Unit,
    /// `N = m`
    Mass,
    /// `N = value`, independent of the mass.
    Custom(f64),
}

impl NormScheme {
    pub fn custom(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self::Custom(value))
        } else {
            Err(Error::InvalidNormalization(value))
        }
    }

    pub fn factor(self, m: f64) -> f64 {
        match self {
            Self::Unit => 1.0,
            Self::Mass => m,
            Self::Custom(v) => v,
        }
    }

    pub fn label(self) -> String {
        match self {
            Self::Unit => "unit".into(),
            Self::Mass => "mass".into(),
            Self::Custom(v) => format!("custom({v})"),
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            Self::Custom(v) => Self::custom(v),
            other => Ok(other),
        }
    }
}

impl FromStr for NormScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "unit" | "1" => Ok(Self::Unit),
            "mass" | "m" => Ok(Self::Mass),
            other => other
                .parse::<f64>()
                .map_err(|_| Error::Parse {
                    what: "normalization scheme",
                    input: other.to_string(),
                })
                .and_then(Self::custom),
        }
    }
}

/// Rest-frame basis vectors `ε^μ(0, σ)`.
pub fn rest_polarization(sigma: PolarizationState) -> FourVector {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    match sigma {
        PolarizationState::Plus => FourVector::new([ZERO, ONE, I, ZERO]).scale(C64::from(-r)),
        PolarizationState::Zero => FourVector::new([ZERO, ZERO, ZERO, ONE]),
        PolarizationState::Minus => FourVector::new([ZERO, ONE, -I, ZERO]).scale(C64::from(r)),
        PolarizationState::TimeLike => FourVector::new([ONE, ZERO, ZERO, ZERO]),
    }
}

/// Boost-constructed `N · L(p) ε(0, σ)`.
pub fn polarization(p: &Momentum, sigma: PolarizationState, norm: NormScheme) -> Result<FourVector> {
    let norm = norm.validate()?;
    let l = boost_matrix(p)?;
    let n = norm.factor(p.mass());
    Ok(l.apply(&rest_polarization(sigma)) * n)
}

/// Closed-form momentum-space columns, written out without using the boost.
pub fn closed_form_u(p: &Momentum, sigma: PolarizationState, norm: NormScheme) -> Result<FourVector> {
    let norm = norm.validate()?;
    p.require_massive()?;
    let m = p.mass();
    let e = p.energy();
    let n = norm.factor(m);
    let [p1, p2, p3] = p.p();
    let d = e + m;
    let re = C64::from;
    let u = match sigma {
        PolarizationState::Plus => {
            let pr = p.p_r();
            let pre = -n / (std::f64::consts::SQRT_2 * m);
            FourVector::new([pr, re(m) + pr * (p1 / d), I * m + pr * (p2 / d), pr * (p3 / d)]).scale(re(pre))
        }
        PolarizationState::Minus => {
            let pl = p.p_l();
            let pre = n / (std::f64::consts::SQRT_2 * m);
            FourVector::new([pl, re(m) + pl * (p1 / d), -I * m + pl * (p2 / d), pl * (p3 / d)]).scale(re(pre))
        }
        PolarizationState::Zero => FourVector::from_real([p3, p1 * p3 / d, p2 * p3 / d, m + p3 * p3 / d]) * (n / m),
        PolarizationState::TimeLike => FourVector::from_real([e, p1, p2, p3]) * (n / m),
    };
    Ok(u)
}

/// `ε*_μ(p, σ) ε^μ(p, σ')` for unit-normalized vectors.
///
/// Equals `-δ_{σσ'}` among the space-like modes, `+1` for the time-like mode
/// with itself and `0` across the two sectors.
pub fn norm_check(p: &Momentum, sigma: PolarizationState, sigma_prime: PolarizationState) -> Result<C64> {
    let a = polarization(p, sigma, NormScheme::Unit)?;
    let b = polarization(p, sigma_prime, NormScheme::Unit)?;
    Ok(conj_dot(&a, &b))
}

/// Expected value of [`norm_check`].
pub fn expected_norm(sigma: PolarizationState, sigma_prime: PolarizationState) -> f64 {
    match (sigma, sigma_prime) {
        (a, b) if a != b => 0.0,
        (PolarizationState::TimeLike, _) => 1.0,
        _ => -1.0,
    }
}
