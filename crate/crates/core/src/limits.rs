//! Empirical classification of small-mass and small-momentum behavior.
//!
//! A quantity is sampled on a geometric schedule `m_k = m0·ratio^k` and the
//! slope of `log|f|` against `log m` is fitted over the tail of the schedule.

use serde::{Deserialize, Serialize};

use crate::polarization::{polarization, NormScheme, PolarizationState};
use crate::strengths::{notoph_tensor, strengths_from_potential, EnergySign};
use crate::tensor::{Momentum, C64, ZERO};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitConfig {
    pub m0: f64,
    pub ratio: f64,
    pub steps: usize,
    pub slope_tol: f64,
    pub floor: f64,
}

impl Default for LimitConfig {
    fn default() -> Self {
        LimitConfig {
            m0: 1.0,
            ratio: 0.5,
            steps: 20,
            slope_tol: 0.1,
            floor: 1e-14,
        }
    }
}

impl LimitConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.m0.is_finite() && self.m0 > 0.0) {
            return Err(Error::InvalidSchedule(format!("m0 must be positive, got {}", self.m0)));
        }
        if !(self.ratio > 0.0 && self.ratio < 1.0) {
            return Err(Error::InvalidSchedule(format!(
                "ratio must lie in (0, 1), got {}",
                self.ratio
            )));
        }
        if self.steps < 4 {
            return Err(Error::InvalidSchedule(format!(
                "need at least 4 steps, got {}",
                self.steps
            )));
        }
        if !(self.slope_tol > 0.0 && self.floor > 0.0) {
            return Err(Error::InvalidSchedule(
                "slope tolerance and floor must be positive".into(),
            ));
        }
        Ok(())
    }

    /// The sample points, largest first.
    pub fn schedule(&self) -> Vec<f64> {
        (0..self.steps).map(|k| self.m0 * self.ratio.powi(k as i32)).collect()
    }

    pub fn with_m0(&self, m0: f64) -> Self {
        LimitConfig { m0, ..*self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Vanishes,
    Finite,
    Diverges,
    IdenticallyZero,
}

impl Verdict {
    /// True for both `Vanishes` and `IdenticallyZero`.
    pub fn tends_to_zero(self) -> bool {
        matches!(self, Verdict::Vanishes | Verdict::IdenticallyZero)
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Vanishes => "vanishes",
            Verdict::Finite => "finite",
            Verdict::Diverges => "diverges",
            Verdict::IdenticallyZero => "identically_zero",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitClassification {
    pub verdict: Verdict,
    /// Fitted exponent; `None` when every sample sits below the floor.
    pub order: Option<f64>,
    /// Value at the smallest sample.
    pub value: C64,
}

/// Least-squares slope of `y` against `x`.
fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Classifies precomputed samples `f(x_k)` with `x` decreasing.
pub fn classify_samples(xs: &[f64], fs: &[C64], cfg: &LimitConfig) -> Result<LimitClassification> {
    if let Some(bad) = fs.iter().find(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::NonFinite(if bad.re.is_finite() { bad.im } else { bad.re }));
    }
    let value = *fs.last().unwrap_or(&ZERO);
    if fs.iter().all(|z| z.norm() < cfg.floor) {
        return Ok(LimitClassification {
            verdict: Verdict::IdenticallyZero,
            order: None,
            value,
        });
    }
    let start = xs.len() / 2;
    let lx: Vec<f64> = xs[start..].iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = fs[start..].iter().map(|z| z.norm().max(cfg.floor).ln()).collect();
    let s = fit_slope(&lx, &ly);
    let verdict = if s > cfg.slope_tol {
        Verdict::Vanishes
    } else if s < -cfg.slope_tol {
        Verdict::Diverges
    } else {
        Verdict::Finite
    };
    Ok(LimitClassification {
        verdict,
        order: Some(s),
        value,
    })
}

/// Classifies `f(m)` as `m → 0`.
pub fn classify_limit(f: impl Fn(f64) -> Result<C64>, cfg: &LimitConfig) -> Result<LimitClassification> {
    cfg.validate()?;
    let ms = cfg.schedule();
    let fs = ms.iter().map(|&m| f(m)).collect::<Result<Vec<_>>>()?;
    classify_samples(&ms, &fs, cfg)
}

/// Classification of every component of `u`, `E⁺` and `B⁺`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MasslessReport {
    pub p: [f64; 3],
    pub sigma: PolarizationState,
    pub norm: NormScheme,
    pub u: [LimitClassification; 4],
    pub e: [LimitClassification; 3],
    pub b: [LimitClassification; 3],
}

impl MasslessReport {
    pub fn all(&self) -> impl Iterator<Item = &LimitClassification> {
        self.u.iter().chain(self.e.iter()).chain(self.b.iter())
    }

    pub fn limit_u(&self) -> [C64; 4] {
        self.u.map(|c| c.value)
    }
}

fn classify_components<const N: usize>(
    ms: &[f64],
    samples: &[[C64; N]],
    cfg: &LimitConfig,
) -> Result<[LimitClassification; N]> {
    let mut out = Vec::with_capacity(N);
    for c in 0..N {
        let fs: Vec<C64> = samples.iter().map(|s| s[c]).collect();
        out.push(classify_samples(ms, &fs, cfg)?);
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

/// `m → 0` at fixed `p` for the potential and the positive-energy strengths.
pub fn massless_report_with(
    p: [f64; 3],
    sigma: PolarizationState,
    norm: NormScheme,
    cfg: &LimitConfig,
) -> Result<MasslessReport> {
    cfg.validate()?;
    if p.iter().all(|&x| x == 0.0) {
        return Err(Error::ZeroMomentum);
    }
    let ms = cfg.schedule();
    let mut us = Vec::with_capacity(ms.len());
    let mut es = Vec::with_capacity(ms.len());
    let mut bs = Vec::with_capacity(ms.len());
    for &m in &ms {
        let mom = Momentum::new(p, m)?;
        let u = polarization(&mom, sigma, norm)?;
        let eb = strengths_from_potential(&mom, &u, EnergySign::Positive)?;
        us.push(u.0);
        es.push(eb.e);
        bs.push(eb.b);
    }
    Ok(MasslessReport {
        p,
        sigma,
        norm,
        u: classify_components(&ms, &us, cfg)?,
        e: classify_components(&ms, &es, cfg)?,
        b: classify_components(&ms, &bs, cfg)?,
    })
}

pub fn massless_report(p: [f64; 3], sigma: PolarizationState, norm: NormScheme) -> Result<MasslessReport> {
    massless_report_with(p, sigma, norm, &LimitConfig::default())
}

/// Classification of the six independent entries `F^{01}, F^{02}, F^{03},
/// F^{12}, F^{13}, F^{23}` of the notoph tensor as `m → 0` at fixed `p`.
pub fn notoph_massless_report_with(
    p: [f64; 3],
    norm: NormScheme,
    cfg: &LimitConfig,
) -> Result<[LimitClassification; 6]> {
    cfg.validate()?;
    let ms = cfg.schedule();
    let samples = ms
        .iter()
        .map(|&m| Ok(notoph_tensor(&Momentum::new(p, m)?, norm)?.upper()))
        .collect::<Result<Vec<_>>>()?;
    classify_components(&ms, &samples, cfg)
}

pub fn notoph_massless_report(p: [f64; 3], norm: NormScheme) -> Result<[LimitClassification; 6]> {
    notoph_massless_report_with(p, norm, &LimitConfig::default())
}

/// Takes `m → 0` of `f(q, m)` first, then classifies the result as `q → 0`.
///
/// The inner schedule starts at `m0·q` so that the mass always runs below the
/// momentum. A diverging inner limit makes the whole limit diverge.
pub fn sequential_limit(f: impl Fn(f64, f64) -> Result<C64>, cfg: &LimitConfig) -> Result<LimitClassification> {
    cfg.validate()?;
    let qs = cfg.schedule();
    let mut inner = Vec::with_capacity(qs.len());
    for &q in &qs {
        let c = classify_limit(|m| f(q, m), &cfg.with_m0(cfg.m0 * q))?;
        match c.verdict {
            Verdict::Diverges => return Ok(c),
            Verdict::Finite => inner.push(c.value),
            Verdict::Vanishes | Verdict::IdenticallyZero => inner.push(ZERO),
        }
    }
    classify_samples(&qs, &inner, cfg)
}

/// Length of `u` in the massless limit, followed by `p₃ → 0` along the z-axis.
pub fn rest_limit_report_with(
    sigma: PolarizationState,
    norm: NormScheme,
    cfg: &LimitConfig,
) -> Result<LimitClassification> {
    sequential_limit(
        |q, m| {
            let u = polarization(&Momentum::new([0.0, 0.0, q], m)?, sigma, norm)?;
            Ok(C64::from(u.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()))
        },
        cfg,
    )
}

pub fn rest_limit_report(sigma: PolarizationState, norm: NormScheme) -> Result<LimitClassification> {
    rest_limit_report_with(sigma, norm, &LimitConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(f: impl Fn(f64) -> f64) -> LimitClassification {
        classify_limit(|m| Ok(C64::from(f(m))), &LimitConfig::default()).unwrap()
    }

    #[test]
    fn monomials() {
        for k in -2..=2 {
            let c = classify(|m| 3.0 * m.powi(k));
            assert!((c.order.unwrap() - k as f64).abs() < 0.01, "k = {k}");
            let expected = match k {
                k if k > 0 => Verdict::Vanishes,
                0 => Verdict::Finite,
                _ => Verdict::Diverges,
            };
            assert_eq!(c.verdict, expected);
        }
    }

    #[test]
    fn zero_function() {
        let c = classify(|_| 0.0);
        assert_eq!(c.verdict, Verdict::IdenticallyZero);
        assert!(c.order.is_none());
    }

    #[test]
    fn mixed_order_uses_dominant_term() {
        assert_eq!(classify(|m| 2.0 + 5.0 * m).verdict, Verdict::Finite);
        assert_eq!(classify(|m| m + 1.0 / m).verdict, Verdict::Diverges);
        let c = classify(|m| 2.0 + 5.0 * m);
        assert!((c.value.re - 2.0).abs() < 1e-4);
    }

    #[test]
    fn rejects_bad_schedule() {
        let bad = LimitConfig {
            ratio: 1.5,
            ..LimitConfig::default()
        };
        assert!(classify_limit(|_| Ok(ZERO), &bad).is_err());
        let short = LimitConfig {
            steps: 3,
            ..LimitConfig::default()
        };
        assert!(classify_limit(|_| Ok(ZERO), &short).is_err());
    }

    #[test]
    fn rejects_non_finite() {
        let r = classify_limit(
            |m| Ok(C64::from(if m < 1e-3 { f64::NAN } else { 1.0 })),
            &LimitConfig::default(),
        );
        assert!(matches!(r, Err(Error::NonFinite(_))));
    }

    #[test]
    fn unit_longitudinal_diverges() {
        let c = classify_limit(
            |m| {
                Ok(polarization(
                    &Momentum::new([0.0, 0.0, 2.0], m)?,
                    PolarizationState::Zero,
                    NormScheme::Unit,
                )?[0])
            },
            &LimitConfig::default(),
        )
        .unwrap();
        assert_eq!(c.verdict, Verdict::Diverges);
    }

    #[test]
    fn longitudinal_mass_normalized_along_z() {
        let r = massless_report([0.0, 0.0, 2.0], PolarizationState::Zero, NormScheme::Mass).unwrap();
        let u = r.limit_u();
        for (got, want) in u.iter().zip([2.0, 0.0, 0.0, 2.0]) {
            assert!((got - C64::from(want)).norm() < 1e-10);
        }
    }

    #[test]
    fn transverse_along_z_vanish() {
        for s in [PolarizationState::Plus, PolarizationState::Minus] {
            let r = massless_report([0.0, 0.0, 2.0], s, NormScheme::Mass).unwrap();
            assert!(r.u.iter().all(|c| c.verdict.tends_to_zero()), "{s}");
            // u ∝ m while the strengths carry 1/m, so E and B stay finite.
            assert!(
                r.e.iter().chain(r.b.iter()).all(|c| c.verdict != Verdict::Diverges),
                "{s}"
            );
        }
    }

    #[test]
    fn timelike_along_z() {
        let r = massless_report([0.0, 0.0, 2.0], PolarizationState::TimeLike, NormScheme::Mass).unwrap();
        assert_eq!(r.u[0].verdict, Verdict::Finite);
        assert_eq!(r.u[3].verdict, Verdict::Finite);
        assert_eq!(r.u[1].verdict, Verdict::IdenticallyZero);
        assert!(r
            .e
            .iter()
            .chain(r.b.iter())
            .all(|c| c.verdict == Verdict::IdenticallyZero));
    }

    #[test]
    fn massless_report_needs_momentum() {
        assert!(matches!(
            massless_report([0.0; 3], PolarizationState::Zero, NormScheme::Mass),
            Err(Error::ZeroMomentum)
        ));
    }

    #[test]
    fn rest_limits() {
        for s in [PolarizationState::Zero, PolarizationState::TimeLike] {
            let c = rest_limit_report(s, NormScheme::Mass).unwrap();
            assert!(c.verdict.tends_to_zero(), "{s}: {c:?}");
        }
        assert_eq!(
            rest_limit_report(PolarizationState::Zero, NormScheme::Unit)
                .unwrap()
                .verdict,
            Verdict::Diverges
        );
    }

    #[test]
    fn notoph_along_z_vanishes() {
        let r = notoph_massless_report([0.0, 0.0, 2.0], NormScheme::Mass).unwrap();
        assert!(r.iter().all(|c| c.verdict.tends_to_zero()));
        assert!(r.iter().any(|c| c.verdict == Verdict::Vanishes));
    }

    #[test]
    fn constant_sequential_limit_is_finite() {
        let c = sequential_limit(|_, _| Ok(C64::from(1.5)), &LimitConfig::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Finite);
        assert!((c.value.re - 1.5).abs() < 1e-15);
    }

    #[test]
    fn stable_under_halving_m0() {
        let cfg = LimitConfig::default();
        for s in PolarizationState::ALL {
            for norm in [NormScheme::Unit, NormScheme::Mass] {
                let a = massless_report_with([0.3, -1.2, 2.0], s, norm, &cfg).unwrap();
                let b = massless_report_with([0.3, -1.2, 2.0], s, norm, &cfg.with_m0(0.5)).unwrap();
                for (x, y) in a.all().zip(b.all()) {
                    assert_eq!(x.verdict, y.verdict);
                }
            }
        }
    }
}
