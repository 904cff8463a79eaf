//! The full verification suite over seeded random momenta.

use serde::{Deserialize, Serialize};

use crate::clifford::{basis, dual_identity_deviation, verify_dual_identity, verify_r_properties};
use crate::dynamics::{
    angular_momentum_density, bw_check, bw_weight, dual_set_check, eom_defect, first_order_error, helicity_projection,
    kemmer_scalar_check, lagrangian_density, noether_densities, normalization_map, pauli_lubanski, proca_defect,
    projection_from_spin, rotation_generator, spin_density, stress_density, variation_components, MapDirection,
    PlaneWaveMode, ProcaConvention,
};
use crate::limits::{
    classify_limit, massless_report, massless_report_with, notoph_massless_report, rest_limit_report, LimitConfig,
    Verdict,
};
use crate::polarization::{closed_form_u, expected_norm, norm_check, polarization, NormScheme, PolarizationState};
use crate::report::{CheckReport, Status};
use crate::sampling::MomentumSampler;
use crate::strengths::{
    closed_form_strengths_with_phases, mode_strengths, notoph_ratio, phase_relation_check, EnergySign, Phases,
};
use crate::tensor::{boost_matrix, dual, minkowski_dot, Momentum, C64, ONE};
use crate::{Error, Result, DEFAULT_TOL};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub tol: f64,
    pub samples: usize,
    pub norm: NormScheme,
    pub phases: Phases,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            tol: DEFAULT_TOL,
            samples: 100,
            norm: NormScheme::Unit,
            phases: Phases::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("need at least one sample".into()));
        }
        let all_phases = self.phases.alpha.iter().chain(self.phases.alpha_prime.iter());
        if all_phases.clone().any(|a| !a.is_finite()) {
            return Err(Error::InvalidConfig("phases must be finite".into()));
        }
        if let NormScheme::Custom(v) = self.norm {
            NormScheme::custom(v)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub v: u32,
    pub config: SuiteConfig,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(config: SuiteConfig, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Info => summary.info += 1,
            }
        }
        SuiteReport {
            v: SCHEMA_VERSION,
            config,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Running maximum of an error with the place it occurred.
#[derive(Default)]
struct Worst {
    err: f64,
    at: String,
}

impl Worst {
    fn see(&mut self, err: f64, at: impl FnOnce() -> String) {
        if err > self.err || err.is_nan() {
            self.err = if err.is_nan() { f64::INFINITY } else { err };
            self.at = at();
        }
    }

    fn report(self, id: &str, desc: &str, anchor: &str, tol: f64) -> CheckReport {
        let details = if self.at.is_empty() {
            String::new()
        } else {
            format!("worst at {}", self.at)
        };
        CheckReport::check(id, desc, anchor, self.err, tol).with_details(details)
    }
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff / scale.max(1.0)
}

fn describe(p: &Momentum) -> String {
    let [a, b, c] = p.p();
    format!("p = ({a:.6}, {b:.6}, {c:.6}), m = {:.6}", p.mass())
}

fn fmt_c(z: C64) -> String {
    format!("{:.12e}{:+.12e}i", z.re, z.im)
}

fn schemes(cfg: &SuiteConfig) -> Vec<NormScheme> {
    let mut out = vec![NormScheme::Unit, NormScheme::Mass];
    if !out.contains(&cfg.norm) {
        out.push(cfg.norm);
    }
    out
}

fn tensor_checks(cfg: &SuiteConfig, ps: &[Momentum]) -> Result<Vec<CheckReport>> {
    let mut metric = Worst::default();
    let mut involution = Worst::default();
    for p in ps {
        let l = boost_matrix(p)?;
        let size = l.matrix.iter().flatten().fold(0.0f64, |a, x| a.max(x.abs()));
        metric.see(rel(l.metric_defect(), size * size), || describe(p));
        for s in PolarizationState::SPATIAL {
            let f = PlaneWaveMode::new(p, s, cfg.norm)?.f_plus;
            let back = dual(&dual(&f));
            involution.see(rel((back + f).max_abs(), f.max_abs()), || {
                format!("{s}, {}", describe(p))
            });
        }
    }
    Ok(vec![
        metric.report(
            "tensor.boost_metric",
            "L^T g L = g for the momentum boost",
            "standard boost",
            cfg.tol,
        ),
        involution.report("tensor.dual_involution", "dual(dual(F)) = -F", "dual tensor", cfg.tol),
    ])
}

fn clifford_checks(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let b = basis();
    let mut out = verify_r_properties(b, cfg.tol);
    out.push(CheckReport::check(
        "clifford.relations",
        "{gamma^mu, gamma^nu} = 2 g^{mu nu}",
        "Weyl representation",
        b.clifford_defect(),
        cfg.tol,
    ));
    out.push(verify_dual_identity(b, 1.0, cfg.tol));
    let flipped = (0..4)
        .flat_map(|mu| (0..4).map(move |nu| (mu, nu)))
        .filter(|(mu, nu)| mu < nu)
        .map(|(mu, nu)| dual_identity_deviation(b, -1.0, mu, nu))
        .fold(0.0, f64::max);
    out.push(CheckReport::info(
        "clifford.dual_identity_flipped",
        "dual identity under the opposite Levi-Civita sign",
        "Weyl-representation dual identity",
        format!("max deviation {flipped:e}"),
    ));
    out
}

fn polarization_checks(cfg: &SuiteConfig, ps: &[Momentum]) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for norm in schemes(cfg) {
        let mut w = Worst::default();
        for p in ps {
            for s in PolarizationState::ALL {
                let built = polarization(p, s, norm)?;
                let closed = closed_form_u(p, s, norm)?;
                w.see(rel(built.max_abs_diff(&closed), closed.max_abs()), || {
                    format!("{s}, {}", describe(p))
                });
            }
        }
        out.push(w.report(
            &format!("polarization.closed_form.{}", norm.label()),
            "boosted rest vectors equal the closed-form momentum-space columns",
            "field functions in the momentum representation",
            cfg.tol,
        ));
    }

    let mut ortho = Worst::default();
    let mut transverse = Worst::default();
    for p in ps {
        for s in PolarizationState::ALL {
            for t in PolarizationState::ALL {
                let got = norm_check(p, s, t)?;
                let scale =
                    polarization(p, s, NormScheme::Unit)?.max_abs() * polarization(p, t, NormScheme::Unit)?.max_abs();
                ortho.see(rel((got - C64::from(expected_norm(s, t))).norm(), scale), || {
                    format!("({s}, {t}), {}", describe(p))
                });
            }
            if s.is_spatial() {
                let u = polarization(p, s, NormScheme::Unit)?;
                let d = minkowski_dot(&p.four_vector(), &u).norm();
                transverse.see(rel(d, p.energy() * u.max_abs()), || format!("{s}, {}", describe(p)));
            }
        }
    }
    out.push(ortho.report(
        "polarization.orthonormality",
        "u*(s) . u(s') = g-signature delta for unit normalization",
        "polarization vectors",
        cfg.tol,
    ));
    out.push(transverse.report(
        "polarization.transversality",
        "p . u(p, s) = 0 for the spatial modes",
        "polarization vectors",
        cfg.tol,
    ));
    Ok(out)
}

fn strengths_checks(cfg: &SuiteConfig, ps: &[Momentum]) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let mut closed = Worst::default();
    let mut timelike = Worst::default();
    let mut phase = Worst::default();
    for p in ps {
        for norm in schemes(cfg) {
            for s in PolarizationState::ALL {
                for sign in EnergySign::BOTH {
                    let built = mode_strengths(p, s, norm, sign, &cfg.phases)?;
                    let explicit = closed_form_strengths_with_phases(p, s, norm, sign, &cfg.phases)?;
                    let expanded = PlaneWaveMode::new(p, s, norm)?.expanded_strength();
                    closed.see(
                        rel(built.max_abs_diff(&explicit), explicit.max_abs().max(expanded)),
                        || format!("{s}, {sign}, {}, {}", norm.label(), describe(p)),
                    );
                    if s == PolarizationState::TimeLike {
                        timelike.see(rel(built.max_abs(), expanded), || format!("{sign}, {}", describe(p)));
                    }
                }
            }
        }
        let r = phase_relation_check(p, &cfg.phases, cfg.tol)?;
        phase.see(r.max_abs_error, || describe(p));
    }
    out.push(closed.report(
        "strengths.closed_form",
        "E and B from the potential equal the closed-form columns, both energy signs",
        "field strengths (Here they are)",
        cfg.tol,
    ));
    out.push(timelike.report(
        "strengths.timelike_zero",
        "E and B vanish for the time-like polarization",
        "time-like polarization",
        cfg.tol,
    ));
    out.push(phase.report(
        "strengths.phase_relations",
        "B+(p,s), E+(p,s) against the phased negative-energy partners, minus sign for s = 0",
        "field-strength phase relations",
        cfg.tol,
    ));

    let mut spread = Worst::default();
    let mut resid = Worst::default();
    let mut reference: Option<C64> = None;
    for p in ps {
        let (c, r) = notoph_ratio(p, cfg.norm)?;
        let scaled = c * cfg.norm.factor(p.mass());
        let first = *reference.get_or_insert(scaled);
        spread.see((scaled - first).norm() / first.norm(), || describe(p));
        resid.see(r, || describe(p));
    }
    out.push(spread.report(
        "strengths.notoph_constant_spread",
        "N times the notoph proportionality constant is independent of p and m",
        "notoph tensor closed form",
        cfg.tol,
    ));
    out.push(resid.report(
        "strengths.notoph_proportionality",
        "antisymmetrized product of transverse vectors is proportional to the closed-form matrix",
        "notoph tensor closed form",
        cfg.tol,
    ));
    if let Some(c) = reference {
        out.push(CheckReport::info(
            "strengths.notoph_constant",
            "constructed / closed-form notoph tensor, times N",
            "notoph tensor closed form",
            fmt_c(c),
        ));
    }
    Ok(out)
}

fn mode(cfg: &SuiteConfig, p: &Momentum, s: PolarizationState) -> Result<PlaneWaveMode> {
    PlaneWaveMode::with_phase(p, s, cfg.norm, cfg.phases.alpha(s))
}

fn equation_checks(cfg: &SuiteConfig, ps: &[Momentum]) -> Result<Vec<CheckReport>> {
    let mut half = Worst::default();
    let mut textbook = Worst::default();
    let mut unmapped: f64 = f64::INFINITY;
    let mut roundtrip = Worst::default();
    let mut kemmer = Worst::default();
    let mut dual_set = Worst::default();
    let mut bw = Worst::default();
    let mut eom = Worst::default();
    for p in ps {
        for s in PolarizationState::ALL {
            let md = mode(cfg, p, s)?;
            eom.see(eom_defect(&md), || format!("{s}, {}", describe(p)));
            if !s.is_spatial() {
                continue;
            }
            half.see(proca_defect(&md, ProcaConvention::HalfMass), || {
                format!("{s}, {}", describe(p))
            });
            unmapped = unmapped.min(proca_defect(&md, ProcaConvention::Textbook));
            let mapped = normalization_map(&md, MapDirection::ToTextbook)?;
            textbook.see(proca_defect(&mapped, ProcaConvention::Textbook), || {
                format!("{s}, {}", describe(p))
            });
            let back = normalization_map(&mapped, MapDirection::ToHalfMass)?;
            let d = back.u.max_abs_diff(&md.u).max(back.f_plus.max_abs_diff(&md.f_plus));
            roundtrip.see(rel(d, md.u.max_abs()), || format!("{s}, {}", describe(p)));

            let u = polarization(p, s, NormScheme::Unit)?;
            dual_set.see(dual_set_check(p, &u, cfg.tol)?.max_abs_error, || {
                format!("{s}, {}", describe(p))
            });
            bw.see(bw_check(p, s, cfg.tol)?.max_abs_error, || {
                format!("{s}, {}", describe(p))
            });
        }
        kemmer.see(kemmer_scalar_check(p, ONE, cfg.tol)?.max_abs_error, || describe(p));
    }
    Ok(vec![
        half.report(
            "dynamics.proca.half_mass",
            "d_a F^{a mu} + (m/2) A^mu = 0 and 2m F = dA - dA",
            "Proca-Duffin-Kemmer set",
            cfg.tol,
        ),
        textbook.report(
            "dynamics.proca.textbook",
            "textbook set holds after the normalization change",
            "Proca-Duffin-Kemmer set",
            cfg.tol,
        ),
        CheckReport::info(
            "dynamics.proca.textbook_unmapped",
            "smallest textbook residual of an unmapped half-mass mode",
            "Proca-Duffin-Kemmer set",
            format!("{unmapped:e}"),
        ),
        roundtrip.report(
            "dynamics.normalization_roundtrip",
            "mapping to the textbook convention and back is the identity",
            "normalization change",
            cfg.tol,
        ),
        kemmer.report(
            "dynamics.kemmer",
            "spin-0 set on shell, phi = 0",
            "Kemmer j=0 set",
            cfg.tol,
        ),
        dual_set.report(
            "dynamics.dual_set",
            "dual-tensor set built from transverse potentials",
            "dual-tensor equation set",
            cfg.tol,
        ),
        bw.report(
            "dynamics.bw",
            "Dirac equation on both indices of the symmetric bispinor, spatial modes",
            "Bargmann-Wigner equations",
            cfg.tol,
        ),
        CheckReport::info(
            "dynamics.bw_weight",
            "calibrated weight of the tensor term in the bispinor expansion",
            "Bargmann-Wigner equations",
            fmt_c(bw_weight()),
        ),
        eom.report(
            "dynamics.eom",
            "(1/2)(box + m^2) F + dF - dF = 0 with box = -d.d",
            "equation of motion",
            cfg.tol,
        ),
    ])
}

fn omegas(sampler: &mut MomentumSampler) -> Vec<(String, [[f64; 4]; 4])> {
    let mut rot = [[0.0; 4]; 4];
    rot[1][2] = 1.0;
    rot[2][1] = -1.0;
    let mut boost = [[0.0; 4]; 4];
    boost[0][1] = 1.0;
    boost[1][0] = -1.0;
    let mut generic = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in (i + 1)..4 {
            let v = sampler.uniform(-1.0, 1.0);
            generic[i][j] = v;
            generic[j][i] = -v;
        }
    }
    vec![
        ("rotation 12".into(), rot),
        ("boost 01".into(), boost),
        ("generic".into(), generic),
    ]
}

fn noether_checks(cfg: &SuiteConfig, ps: &[Momentum]) -> Result<Vec<CheckReport>> {
    let gen = rotation_generator();
    let mut sampler = MomentumSampler::new(cfg.seed ^ 0x5eed);
    let omegas = omegas(&mut sampler);
    let (theta, half) = (1e-3, 5e-4);

    let mut scaling = Worst::default();
    let mut variation_antisym = Worst::default();
    let mut antisym = Worst::default();
    let mut consistency = Worst::default();
    let mut projection = Worst::default();
    let mut helicity = Worst::default();
    let mut spin = Worst::default();
    let mut energy = Worst::default();
    let mut timelike = Worst::default();
    let mut notoph = Worst::default();
    let mut phase = Worst::default();

    for (n, p) in ps.iter().enumerate() {
        let where_ = || describe(p);
        if n < 10 {
            let f = mode(cfg, p, PolarizationState::Plus)?.f_plus;
            for (name, omega) in &omegas {
                let e1 = first_order_error(&gen, omega, theta, &f)?;
                let e2 = first_order_error(&gen, omega, half, &f)?;
                scaling.see((e1 / e2 - 4.0).abs(), || format!("{name}, {}", describe(p)));
                let c = variation_components(&gen, omega, &f)?;
                let d = (0..4)
                    .flat_map(|a| (0..4).map(move |b| (a, b)))
                    .map(|(a, b)| (c[a][b] + c[b][a]).norm())
                    .fold(0.0, f64::max);
                variation_antisym.see(d, || format!("{name}, {}", describe(p)));
            }
        }

        let mut h = Vec::new();
        let mut spins = Vec::new();
        let mut theta00 = Vec::new();
        for s in PolarizationState::ALL {
            let md = mode(cfg, p, s)?;
            let j = angular_momentum_density(&md);
            let (s1, s2) = (md.density_scale(1), md.density_scale(2));
            antisym.see(rel(j.antisymmetry_defect(), s1), || format!("{s}, {}", where_()));
            let from_j = j.spin();
            let direct = spin_density(&md);
            let d = (0..3).map(|k| (from_j[k] - direct[k]).norm()).fold(0.0, f64::max);
            consistency.see(rel(d, s1), || format!("{s}, {}", where_()));
            let w = pauli_lubanski(&j, &md.k);
            if let (Ok(a), Ok(b)) = (helicity_projection(&w, p), projection_from_spin(&j, p)) {
                projection.see(rel((a - b).norm(), s2), || format!("{s}, {}", where_()));
                if matches!(s, PolarizationState::Plus | PolarizationState::Minus) {
                    h.push((a, s2));
                }
            }
            if matches!(s, PolarizationState::Plus | PolarizationState::Minus) {
                spins.push((from_j, s1));
                theta00.push((stress_density(&md)[0][0], s2));
            }
            if s == PolarizationState::TimeLike {
                timelike.see(noether_densities(&md).max_abs(), where_);
            }
            let a = noether_densities(&md);
            let b = noether_densities(&md.with_global_phase(0.7));
            let d2 = (a.lagrangian - b.lagrangian)
                .norm()
                .max((a.theta[0][0] - b.theta[0][0]).norm());
            let d1 = (0..3).map(|k| (a.spin[k] - b.spin[k]).norm()).fold(0.0, f64::max);
            phase.see(rel(d2, s2).max(rel(d1, s1)), || format!("{s}, {}", where_()));
        }
        if h.len() == 2 {
            helicity.see(rel((h[0].0 + h[1].0).norm(), h[0].1), where_);
        }
        let ds = (0..3)
            .map(|k| (spins[0].0[k] + spins[1].0[k]).norm())
            .fold(0.0, f64::max);
        spin.see(rel(ds, spins[0].1), where_);
        energy.see(rel((theta00[0].0 - theta00[1].0).norm(), theta00[0].1), where_);

        let nm = PlaneWaveMode::notoph(p, cfg.norm)?;
        let nd = noether_densities(&nm);
        let worst = nd
            .angular
            .max_abs()
            .max(nd.spin.iter().map(|z| z.norm()).fold(0.0, f64::max))
            .max(nd.helicity.map_or(0.0, |z| z.norm()));
        notoph.see(worst, where_);
    }

    let mut out = vec![
        scaling.report(
            "dynamics.variation_scaling",
            "first-order error of the generator ratio at theta and theta/2 equals 4",
            "infinitesimal Lorentz transformations",
            0.05,
        ),
        variation_antisym.report(
            "dynamics.variation_antisymmetry",
            "delta F is antisymmetric",
            "infinitesimal Lorentz transformations",
            cfg.tol,
        ),
        antisym.report(
            "dynamics.angular_antisymmetry",
            "J_{kappa tau} = -J_{tau kappa}",
            "angular momentum tensor",
            cfg.tol,
        ),
        consistency.report(
            "dynamics.spin_consistency",
            "explicit spin vector equals (1/2) eps^{ijk} J^{ij}",
            "relativistic spin",
            cfg.tol,
        ),
        projection.report(
            "dynamics.projection_form",
            "W.n equals -(1/2) eps^{ijk} n^k J^{ij} p^0",
            "Pauli-Lubanski vector",
            cfg.tol,
        ),
        helicity.report(
            "dynamics.helicity_opposite",
            "projections of the s = +1 and s = -1 modes are equal and opposite",
            "Pauli-Lubanski vector",
            cfg.tol,
        ),
        spin.report(
            "dynamics.spin_opposite",
            "spin vectors of the s = +1 and s = -1 modes are equal and opposite",
            "relativistic spin",
            cfg.tol,
        ),
        energy.report(
            "dynamics.energy_density_equal",
            "Theta^00 is the same for s = +1 and s = -1",
            "energy-momentum tensor",
            cfg.tol,
        ),
        timelike.report(
            "dynamics.timelike_densities_zero",
            "every density of the time-like mode vanishes",
            "time-like polarization",
            cfg.tol,
        ),
        notoph.report(
            "dynamics.notoph_spin_zero",
            "angular momentum, spin and helicity of the notoph mode vanish",
            "longitudinal Kalb-Ramond field",
            cfg.tol,
        ),
        phase.report(
            "dynamics.phase_invariance",
            "densities are unchanged by a global phase",
            "angular momentum tensor",
            cfg.tol,
        ),
    ];

    if let Some(p) = ps.iter().find(|p| p.magnitude() > 0.0) {
        let mut parts = Vec::new();
        for s in PolarizationState::ALL {
            let md = mode(cfg, p, s)?;
            let d = noether_densities(&md);
            let h = d.helicity.map_or("undefined".into(), fmt_c);
            parts.push(format!(
                "{s}: L = {}, Theta00 = {}, W.n = {h}",
                fmt_c(lagrangian_density(&md)),
                fmt_c(d.theta[0][0])
            ));
        }
        out.push(CheckReport::info(
            "dynamics.helicity_values",
            "Lagrangian, energy density and helicity projection per mode",
            "Pauli-Lubanski vector",
            format!("{}; {}", describe(p), parts.join("; ")),
        ));
    }
    Ok(out)
}

fn nearest_integer_gap(x: f64) -> f64 {
    (x - x.round()).abs()
}

fn limit_checks(ps: &[Momentum]) -> Result<Vec<CheckReport>> {
    let lc = LimitConfig::default();
    let mut out = Vec::new();

    let mut mono = Worst::default();
    for k in -2..=2 {
        let c = classify_limit(|m| Ok(C64::from(m.powi(k))), &lc)?;
        mono.see((c.order.unwrap_or(f64::NAN) - k as f64).abs(), || format!("k = {k}"));
    }
    out.push(mono.report(
        "limits.monomial_orders",
        "fitted slope of m^k recovers k",
        "massless limit",
        0.01,
    ));

    // Components whose limit is below the tail masses cannot be resolved, so
    // generic momenta keep every component above a tenth of |p|.
    let generic: Vec<[f64; 3]> = ps
        .iter()
        .filter(|p| p.p().iter().all(|x| x.abs() >= 0.1 * p.magnitude()))
        .take(10)
        .map(|p| p.p())
        .collect();
    let mut not_finite = 0usize;
    let mut no_divergence = 0usize;
    let mut order_gap = Worst::default();
    for p in &generic {
        for s in PolarizationState::ALL {
            let r = massless_report(*p, s, NormScheme::Mass)?;
            not_finite += r.u.iter().filter(|c| c.verdict != Verdict::Finite).count();
            for c in r.u.iter() {
                if let Some(o) = c.order {
                    order_gap.see(nearest_integer_gap(o), || format!("{s}, N = m, p = {p:?}"));
                }
            }
        }
        for s in PolarizationState::SPATIAL {
            let r = massless_report(*p, s, NormScheme::Unit)?;
            if !r.u.iter().any(|c| c.verdict == Verdict::Diverges) {
                no_divergence += 1;
            }
            for c in r.u.iter() {
                if let Some(o) = c.order {
                    order_gap.see(nearest_integer_gap(o), || format!("{s}, N = 1, p = {p:?}"));
                }
            }
        }
    }
    out.push(
        CheckReport::check(
            "limits.mass_normalized_finite",
            "with N = m every potential component has a finite massless limit",
            "massless limit",
            not_finite as f64,
            0.0,
        )
        .with_details(format!(
            "{} momenta, non-finite components: {not_finite}",
            generic.len()
        )),
    );
    out.push(
        CheckReport::check(
            "limits.unit_diverges",
            "with N = 1 each spatial mode has a diverging potential component",
            "massless limit",
            no_divergence as f64,
            0.0,
        )
        .with_details(format!(
            "{} momenta, modes without divergence: {no_divergence}",
            generic.len()
        )),
    );

    let z = [0.0, 0.0, 2.0];
    let mut transverse = 0usize;
    for s in [PolarizationState::Plus, PolarizationState::Minus] {
        let r = massless_report(z, s, NormScheme::Mass)?;
        transverse += r.u.iter().filter(|c| !c.verdict.tends_to_zero()).count();
        for c in r.u.iter() {
            if let Some(o) = c.order {
                order_gap.see(nearest_integer_gap(o), || format!("{s}, N = m, p = {z:?}"));
            }
        }
    }
    out.push(CheckReport::check(
        "limits.z_axis_transverse",
        "s = +1, -1 potentials vanish for motion along the third axis",
        "massless limit",
        transverse as f64,
        0.0,
    ));

    let r = massless_report(z, PolarizationState::Zero, NormScheme::Mass)?;
    let m_min = *lc.schedule().last().unwrap_or(&lc.m0);
    let e_p = (4.0 + m_min * m_min).sqrt();
    let expected = [e_p, 0.0, 0.0, e_p];
    let dev = r
        .limit_u()
        .iter()
        .zip(expected)
        .map(|(a, b)| (a - C64::from(b)).norm())
        .fold(0.0, f64::max);
    out.push(
        CheckReport::check(
            "limits.z_axis_longitudinal",
            "s = 0 potential along the third axis tends to (E_p, 0, 0, E_p)",
            "massless limit",
            dev,
            1e-10,
        )
        .with_details(format!("limit {:?}", r.limit_u().map(fmt_c))),
    );
    out.push(order_gap.report(
        "limits.integer_orders",
        "fitted power-law orders lie within 0.1 of an integer",
        "massless limit",
        0.1,
    ));

    let nr = notoph_massless_report(z, NormScheme::Mass)?;
    let nonvanishing = nr.iter().filter(|c| !c.verdict.tends_to_zero()).count();
    out.push(CheckReport::check(
        "limits.notoph_vanishes",
        "notoph entries with N = m vanish for motion along the third axis",
        "longitudinal states in the massless case",
        nonvanishing as f64,
        0.0,
    ));

    let mut rest = 0usize;
    for s in [PolarizationState::Zero, PolarizationState::TimeLike] {
        if !rest_limit_report(s, NormScheme::Mass)?.verdict.tends_to_zero() {
            rest += 1;
        }
    }
    out.push(CheckReport::check(
        "limits.rest_limit",
        "massless s = 0 and time-like potentials then vanish at rest",
        "massless limit",
        rest as f64,
        0.0,
    ));

    let mut unstable = 0usize;
    for s in PolarizationState::ALL {
        for norm in [NormScheme::Unit, NormScheme::Mass] {
            let a = massless_report_with(z, s, norm, &lc)?;
            let b = massless_report_with(z, s, norm, &lc.with_m0(lc.m0 / 2.0))?;
            unstable += a.all().zip(b.all()).filter(|(x, y)| x.verdict != y.verdict).count();
        }
    }
    out.push(CheckReport::check(
        "limits.halving_stability",
        "verdicts unchanged when the starting mass is halved",
        "massless limit",
        unstable as f64,
        0.0,
    ));
    Ok(out)
}

/// Runs every check. Check order in the report is by id.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let ps = MomentumSampler::new(cfg.seed).momenta(cfg.samples);
    let mut checks = Vec::new();
    checks.extend(tensor_checks(cfg, &ps)?);
    checks.extend(clifford_checks(cfg));
    checks.extend(polarization_checks(cfg, &ps)?);
    checks.extend(strengths_checks(cfg, &ps)?);
    checks.extend(equation_checks(cfg, &ps)?);
    checks.extend(noether_checks(cfg, &ps)?);
    checks.extend(limit_checks(&ps)?);
    Ok(SuiteReport::new(*cfg, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            samples: 5,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn rejects_bad_config() {
        assert!(SuiteConfig { tol: 0.0, ..small() }.validate().is_err());
        assert!(SuiteConfig { samples: 0, ..small() }.validate().is_err());
    }

    #[test]
    fn ids_sorted_and_unique() {
        let r = run_suite(&small()).unwrap();
        let ids: Vec<_> = r.checks.iter().map(|c| c.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn summary_counts() {
        let r = run_suite(&small()).unwrap();
        assert_eq!(r.summary.pass + r.summary.fail + r.summary.info, r.checks.len());
        assert_eq!(r.v, SCHEMA_VERSION);
    }

    #[test]
    fn json_round_trip() {
        let r = run_suite(&small()).unwrap();
        let back: SuiteReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
