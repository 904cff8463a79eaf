//! Lagrangian, energy-momentum tensor, rotation generators, angular momentum
//! and the Pauli-Lubanski vector of the antisymmetric tensor field.
//!
//! Quadratic densities keep only the `x`-independent cross terms of the plane
//! wave `F₊e^{-ik·x} + F₋e^{+ik·x}`: every bilinear `Q(F, F)` contributes
//! `Q(F₊, F₋) + Q(F₋, F₊)`, each factor carrying its own derivative rule.

use serde::{Deserialize, Serialize};

use super::{raise, PlaneWaveMode};
use crate::strengths::EnergySign;
use crate::tensor::{
    expm4, levi_civita, levi_civita3, levi_civita_lower, mixed_generator, transform_tensor, FieldStrength, FourVector,
    Momentum, C64, METRIC, ZERO,
};
use crate::{Error, Result};

/// One factor of a bilinear: the amplitude with both index placements and its
/// derivative covector.
struct Factor {
    up: [[C64; 4]; 4],
    low: [[C64; 4]; 4],
    d: [C64; 4],
    d_up: [C64; 4],
}

impl Factor {
    fn new(f: &FieldStrength, d: [C64; 4]) -> Self {
        Factor {
            up: f.components(),
            low: f.lowered(),
            d_up: raise(&d),
            d,
        }
    }

    /// `v^ν = ∂_μ F^{μν}`
    fn divergence(&self) -> [C64; 4] {
        std::array::from_fn(|nu| (0..4).map(|mu| self.d[mu] * self.up[mu][nu]).sum())
    }

    /// `F^μ_κ`
    fn mixed(&self, mu: usize, kappa: usize) -> C64 {
        self.up[mu][kappa] * METRIC[kappa]
    }
}

fn factors(mode: &PlaneWaveMode) -> [(Factor, Factor); 2] {
    let (_, fp, dp) = mode.amplitude(EnergySign::Positive);
    let (_, fm, dm) = mode.amplitude(EnergySign::Negative);
    [
        (Factor::new(&fp, dp), Factor::new(&fm, dm)),
        (Factor::new(&fm, dm), Factor::new(&fp, dp)),
    ]
}

fn contract(a: &[[C64; 4]; 4], b: &[[C64; 4]; 4]) -> C64 {
    let mut acc = ZERO;
    for mu in 0..4 {
        for nu in 0..4 {
            acc += a[mu][nu] * b[mu][nu];
        }
    }
    acc
}

fn lagrangian_term(x: &Factor, y: &Factor, m: f64) -> C64 {
    let dd: C64 = (0..4).map(|mu| x.d[mu] * y.d_up[mu]).sum();
    let kinetic = dd * contract(&x.low, &y.up) * 0.25;

    let vx = x.divergence();
    // ∂^ν F_{να} for the second factor, as a covariant vector in α.
    let wy: [C64; 4] = std::array::from_fn(|a| (0..4).map(|nu| y.d_up[nu] * y.low[nu][a]).sum());
    let div_div: C64 = (0..4).map(|a| vx[a] * wy[a]).sum::<C64>() * -0.5;

    let mut cross = ZERO;
    for mu in 0..4 {
        for nu in 0..4 {
            for a in 0..4 {
                cross += x.d[mu] * x.low[nu][a] * y.d_up[nu] * y.up[mu][a];
            }
        }
    }
    let cross = cross * -0.5;

    let mass = contract(&x.low, &y.up) * (0.25 * m * m);
    kinetic + div_div + cross + mass
}

/// Cross-term part of the Lagrangian density.
pub fn lagrangian_density(mode: &PlaneWaveMode) -> C64 {
    let m = mode.mass();
    factors(mode).iter().map(|(x, y)| lagrangian_term(x, y, m)).sum()
}

/// Cross-term part of `Θ^{λβ}`; `Θ^{00}` is the energy density.
pub fn stress_density(mode: &PlaneWaveMode) -> [[C64; 4]; 4] {
    let lag = lagrangian_density(mode);
    let mut theta = [[ZERO; 4]; 4];
    for (x, y) in factors(mode).iter() {
        let xy = contract(&x.low, &y.up);
        let vx = x.divergence();
        for l in 0..4 {
            for b in 0..4 {
                let first = x.d_up[l] * y.d_up[b] * xy;
                // (∂_μF^{μα}) ∂^β F^λ_α
                let second: C64 = (0..4).map(|a| vx[a] * y.d_up[b] * y.up[l][a] * METRIC[a]).sum();
                // (∂^μ F^{λα}) ∂^β F_{μα}
                let mut third = ZERO;
                for mu in 0..4 {
                    for a in 0..4 {
                        third += x.d_up[mu] * x.up[l][a] * y.d_up[b] * y.low[mu][a];
                    }
                }
                theta[l][b] += (first - second * 2.0 - third * 2.0) * 0.5;
            }
        }
    }
    for (l, row) in theta.iter_mut().enumerate() {
        row[l] -= lag * METRIC[l];
    }
    theta
}

/// Generator `T_{κτ}^{αβ,μν}` of infinitesimal Lorentz transformations on
/// antisymmetric tensors, stored densely.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationGenerator {
    t: Vec<f64>,
}

fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

fn g(a: usize, b: usize) -> f64 {
    if a == b {
        METRIC[a]
    } else {
        0.0
    }
}

impl RotationGenerator {
    pub fn new() -> Self {
        let mut t = vec![0.0; 4096];
        for k in 0..4 {
            for ta in 0..4 {
                for a in 0..4 {
                    for b in 0..4 {
                        for mu in 0..4 {
                            for nu in 0..4 {
                                let v = 0.5
                                    * (g(a, mu) * (delta(k, b) * delta(ta, nu) - delta(ta, b) * delta(k, nu))
                                        + g(b, mu) * (delta(k, nu) * delta(ta, a) - delta(ta, nu) * delta(k, a))
                                        + g(a, nu) * (delta(k, mu) * delta(ta, b) - delta(ta, mu) * delta(k, b))
                                        + g(b, nu) * (delta(k, a) * delta(ta, mu) - delta(ta, a) * delta(k, mu)));
                                t[Self::index(k, ta, a, b, mu, nu)] = v;
                            }
                        }
                    }
                }
            }
        }
        RotationGenerator { t }
    }

    fn index(k: usize, ta: usize, a: usize, b: usize, mu: usize, nu: usize) -> usize {
        ((((k * 4 + ta) * 4 + a) * 4 + b) * 4 + mu) * 4 + nu
    }

    /// `T_{κτ}^{αβ,μν}`
    pub fn get(&self, kappa: usize, tau: usize, alpha: usize, beta: usize, mu: usize, nu: usize) -> f64 {
        self.t[Self::index(kappa, tau, alpha, beta, mu, nu)]
    }
}

impl Default for RotationGenerator {
    fn default() -> Self {
        Self::new()
    }
}

pub fn rotation_generator() -> RotationGenerator {
    RotationGenerator::new()
}

fn antisymmetry_defect(m: &[[f64; 4]; 4]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((m[i][j] + m[j][i]).abs());
        }
    }
    worst
}

/// Full component array of `δF^{αβ} = ½ ω^{κτ} T_{κτ}^{αβ,μν} F_{μν}`.
pub fn variation_components(
    gen: &RotationGenerator,
    omega: &[[f64; 4]; 4],
    f: &FieldStrength,
) -> Result<[[C64; 4]; 4]> {
    let defect = antisymmetry_defect(omega);
    if defect > 0.0 {
        return Err(Error::NotAntisymmetric(defect));
    }
    let low = f.lowered();
    let mut out = [[ZERO; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let mut acc = ZERO;
            for k in 0..4 {
                for ta in 0..4 {
                    if omega[k][ta] == 0.0 {
                        continue;
                    }
                    for mu in 0..4 {
                        for nu in 0..4 {
                            let t = gen.get(k, ta, a, b, mu, nu);
                            if t != 0.0 {
                                acc += low[mu][nu] * (0.5 * omega[k][ta] * t);
                            }
                        }
                    }
                }
            }
            out[a][b] = acc;
        }
    }
    Ok(out)
}

pub fn infinitesimal_variation(
    gen: &RotationGenerator,
    omega: &[[f64; 4]; 4],
    f: &FieldStrength,
) -> Result<FieldStrength> {
    let c = variation_components(gen, omega, f)?;
    Ok(FieldStrength::from_fn(|a, b| c[a][b]))
}

/// `Λ F Λᵀ` with `Λ = exp(Ω)`, `Ω^μ_ν = ω^{μλ} g_{λν}`.
pub fn finite_transform(omega: &[[f64; 4]; 4], f: &FieldStrength) -> Result<FieldStrength> {
    let defect = antisymmetry_defect(omega);
    if defect > 0.0 {
        return Err(Error::NotAntisymmetric(defect));
    }
    Ok(transform_tensor(&expm4(&mixed_generator(omega)), f))
}

/// `max |F + δF - ΛFΛᵀ|` for the parameter `θ·ω`.
pub fn first_order_error(gen: &RotationGenerator, omega: &[[f64; 4]; 4], theta: f64, f: &FieldStrength) -> Result<f64> {
    let scaled: [[f64; 4]; 4] = omega.map(|row| row.map(|x| x * theta));
    let linear = *f + infinitesimal_variation(gen, &scaled, f)?;
    Ok(linear.max_abs_diff(&finite_transform(&scaled, f)?))
}

/// Angular-momentum density `J_{κτ}` (both indices down).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngularMomentumDensity {
    pub lower: [[C64; 4]; 4],
}

impl AngularMomentumDensity {
    /// `J^{κτ}`
    pub fn raised(&self) -> [[C64; 4]; 4] {
        std::array::from_fn(|k| std::array::from_fn(|t| self.lower[k][t] * (METRIC[k] * METRIC[t])))
    }

    pub fn antisymmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.lower[i][j] + self.lower[j][i]).norm());
            }
        }
        worst
    }

    /// `J^k = ½ ε^{ijk} J^{ij}`
    pub fn spin(&self) -> [C64; 3] {
        let up = self.raised();
        std::array::from_fn(|k| {
            let mut acc = ZERO;
            for i in 0..3 {
                for j in 0..3 {
                    acc += up[i + 1][j + 1] * levi_civita3(i, j, k);
                }
            }
            acc * 0.5
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.lower.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn angular_term(x: &Factor, y: &Factor) -> [[C64; 4]; 4] {
    let v = x.divergence();
    let v_low: [C64; 4] = std::array::from_fn(|k| v[k] * METRIC[k]);
    // ∂_0 F_{τμ} + ∂_μ F_{0τ} + ∂_τ F_{μ0}
    let cyclic = |t: usize, mu: usize| x.d[0] * x.low[t][mu] + x.d[mu] * x.low[0][t] + x.d[t] * x.low[mu][0];
    let mut j = [[ZERO; 4]; 4];
    for k in 0..4 {
        for t in 0..4 {
            let mut acc = ZERO;
            for nu in 0..4 {
                acc += v[nu] * (delta(0, k) * y.low[nu][t] - delta(0, t) * y.low[nu][k]);
            }
            acc += -v_low[k] * y.low[0][t] + v_low[t] * y.low[0][k];
            for mu in 0..4 {
                acc += y.mixed(mu, k) * cyclic(t, mu) - y.mixed(mu, t) * cyclic(k, mu);
            }
            j[k][t] = acc;
        }
    }
    j
}

/// Cross-term part of the angular-momentum integrand.
pub fn angular_momentum_density(mode: &PlaneWaveMode) -> AngularMomentumDensity {
    let mut lower = [[ZERO; 4]; 4];
    for (x, y) in factors(mode).iter() {
        let j = angular_term(x, y);
        for k in 0..4 {
            for t in 0..4 {
                lower[k][t] += j[k][t];
            }
        }
    }
    AngularMomentumDensity { lower }
}

/// Spin vector evaluated directly from the spatial-component formula
/// `J^k = ε^{ijk}[F^{0i}(∂_μF^{μj}) + F_μ^j(∂^0F^{μi} + ∂^μF^{i0} + ∂^iF^{0μ})]`.
pub fn spin_density(mode: &PlaneWaveMode) -> [C64; 3] {
    let mut out = [ZERO; 3];
    for (x, y) in factors(mode).iter() {
        let v = x.divergence();
        for (k, slot) in out.iter_mut().enumerate() {
            for i in 0..3 {
                for j in 0..3 {
                    let e = levi_civita3(i, j, k);
                    if e == 0.0 {
                        continue;
                    }
                    let (ii, jj) = (i + 1, j + 1);
                    let mut acc = y.up[0][ii] * v[jj];
                    for mu in 0..4 {
                        let y_mu_j = y.up[mu][jj] * METRIC[mu];
                        acc +=
                            y_mu_j * (x.d_up[0] * x.up[mu][ii] + x.d_up[mu] * x.up[ii][0] + x.d_up[ii] * x.up[0][mu]);
                    }
                    *slot += acc * e;
                }
            }
        }
    }
    out
}

/// `W^μ` from `W_μ = -½ ε_{μκτν} J^{κτ} P^ν`, with `P` replaced by `k`.
pub fn pauli_lubanski(j: &AngularMomentumDensity, k: &FourVector) -> FourVector {
    let up = j.raised();
    let w_low: [C64; 4] = std::array::from_fn(|mu| {
        let mut acc = ZERO;
        for ka in 0..4 {
            for ta in 0..4 {
                for nu in 0..4 {
                    let e = levi_civita_lower(mu, ka, ta, nu);
                    if e != 0.0 {
                        acc += up[ka][ta] * k[nu] * e;
                    }
                }
            }
        }
        acc * -0.5
    });
    FourVector(raise(&w_low))
}

/// `W_μ n^μ` with `n = (0, p̂)`.
pub fn helicity_projection(w: &FourVector, p: &Momentum) -> Result<C64> {
    let n = p.direction().ok_or(Error::ZeroMomentum)?;
    let w_low = w.lower();
    Ok((0..3).map(|i| w_low[i + 1] * n[i]).sum())
}

/// `-½ ε^{ijk} n^k J^{ij} p⁰`, the spatial closed form of the projection.
pub fn projection_from_spin(j: &AngularMomentumDensity, p: &Momentum) -> Result<C64> {
    let n = p.direction().ok_or(Error::ZeroMomentum)?;
    let up = j.raised();
    let mut acc = ZERO;
    for i in 0..3 {
        for jj in 0..3 {
            for k in 0..3 {
                acc += up[i + 1][jj + 1] * (levi_civita(0, i + 1, jj + 1, k + 1) * n[k]);
            }
        }
    }
    Ok(acc * (-0.5 * p.energy()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoetherDensities {
    pub lagrangian: C64,
    pub theta: [[C64; 4]; 4],
    pub angular: AngularMomentumDensity,
    pub pauli_lubanski: FourVector,
    pub spin: [C64; 3],
    /// `None` at rest, where `p̂` is undefined.
    pub helicity: Option<C64>,
}

pub fn noether_densities(mode: &PlaneWaveMode) -> NoetherDensities {
    let angular = angular_momentum_density(mode);
    let w = pauli_lubanski(&angular, &mode.k);
    NoetherDensities {
        lagrangian: lagrangian_density(mode),
        theta: stress_density(mode),
        angular,
        pauli_lubanski: w,
        spin: spin_density(mode),
        helicity: helicity_projection(&w, &mode.momentum).ok(),
    }
}

impl NoetherDensities {
    pub fn max_abs(&self) -> f64 {
        let theta = self.theta.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        let spin = self.spin.iter().map(|z| z.norm()).fold(0.0, f64::max);
        self.lagrangian
            .norm()
            .max(theta)
            .max(self.angular.max_abs())
            .max(self.pauli_lubanski.max_abs())
            .max(spin)
            .max(self.helicity.map_or(0.0, |h| h.norm()))
    }
}
