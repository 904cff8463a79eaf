//! Independent oracles: position-space finite differences, explicit matrix
//! products and brute-force sums, compared against the library.

#![allow(clippy::needless_range_loop)]

use num_complex::Complex64 as C;
use tensorfield::clifford::basis;
use tensorfield::dynamics::{
    angular_momentum_density, finite_transform, infinitesimal_variation, lagrangian_density, rotation_generator,
    spin_density, stress_density, PlaneWaveMode,
};
use tensorfield::polarization::{polarization, rest_polarization, NormScheme, PolarizationState};
use tensorfield::strengths::{notoph_tensor, EnergySign};
use tensorfield::tensor::{boost_matrix, dual, levi_civita};
use tensorfield::{FieldStrength, FourVector, Momentum};

type M4 = [[C; 4]; 4];
const G: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

fn zero4() -> M4 {
    [[C::new(0.0, 0.0); 4]; 4]
}

fn low(t: &M4) -> M4 {
    let mut o = zero4();
    for a in 0..4 {
        for b in 0..4 {
            o[a][b] = t[a][b] * G[a] * G[b];
        }
    }
    o
}

/// A plane-wave field in position space with finite-difference derivatives.
struct Field<'a> {
    mode: &'a PlaneWaveMode,
    h: f64,
}

impl Field<'_> {
    fn at(&self, x: [f64; 4]) -> M4 {
        let k = self.mode.k.0;
        let kx = k[0].re * x[0] - k[1].re * x[1] - k[2].re * x[2] - k[3].re * x[3];
        let ep = C::from_polar(1.0, -kx);
        let em = C::from_polar(1.0, kx);
        let fp = self.mode.f_plus.components();
        let fm = self.mode.f_minus.components();
        let mut o = zero4();
        for a in 0..4 {
            for b in 0..4 {
                o[a][b] = fp[a][b] * ep + fm[a][b] * em;
            }
        }
        o
    }

    /// `∂_μ F^{αβ}` by the fourth-order central stencil.
    fn grad(&self, x: [f64; 4]) -> [M4; 4] {
        let mut out = [zero4(); 4];
        for (mu, slot) in out.iter_mut().enumerate() {
            let shifted = |s: f64| {
                let mut y = x;
                y[mu] += s * self.h;
                self.at(y)
            };
            let (p2, p1, m1, m2) = (shifted(2.0), shifted(1.0), shifted(-1.0), shifted(-2.0));
            for a in 0..4 {
                for b in 0..4 {
                    slot[a][b] = (-p2[a][b] + p1[a][b] * 8.0 - m1[a][b] * 8.0 + m2[a][b]) / (12.0 * self.h);
                }
            }
        }
        out
    }

    /// Points along one time period; the oscillating `e^{∓2ik·x}` parts
    /// average to zero over them.
    fn period_points(&self, n: usize) -> Vec<[f64; 4]> {
        let w = self.mode.k[0].re;
        (0..n)
            .map(|j| [2.0 * std::f64::consts::PI * j as f64 / (n as f64 * w), 0.0, 0.0, 0.0])
            .collect()
    }

    fn average<T: Copy + std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T>>(
        &self,
        zero: T,
        f: impl Fn(&M4, &[M4; 4]) -> T,
    ) -> T {
        let pts = self.period_points(8);
        let n = pts.len() as f64;
        pts.iter()
            .fold(zero, |acc, x| acc + f(&self.at(*x), &self.grad(*x)) * (1.0 / n))
    }
}

fn lagrangian(f: &M4, d: &[M4; 4], m: f64) -> C {
    let fl = low(f);
    let dl: Vec<M4> = d.iter().map(low).collect();
    let mut t1 = C::new(0.0, 0.0);
    let mut t3 = C::new(0.0, 0.0);
    for mu in 0..4 {
        for nu in 0..4 {
            for a in 0..4 {
                t1 += dl[mu][nu][a] * d[mu][nu][a] * G[mu];
                t3 += dl[mu][nu][a] * d[nu][mu][a] * G[nu];
            }
        }
    }
    let div: Vec<C> = (0..4).map(|a| (0..4).map(|mu| d[mu][mu][a]).sum()).collect();
    let mut t2 = C::new(0.0, 0.0);
    for a in 0..4 {
        let w: C = (0..4).map(|nu| dl[nu][nu][a] * G[nu]).sum();
        t2 += div[a] * w;
    }
    let mut t4 = C::new(0.0, 0.0);
    for mu in 0..4 {
        for nu in 0..4 {
            t4 += fl[mu][nu] * f[mu][nu];
        }
    }
    t1 * 0.25 - t2 * 0.5 - t3 * 0.5 + t4 * (0.25 * m * m)
}

fn theta(f: &M4, d: &[M4; 4], m: f64) -> M4 {
    let l = lagrangian(f, d, m);
    let dl: Vec<M4> = d.iter().map(low).collect();
    let div: Vec<C> = (0..4).map(|a| (0..4).map(|mu| d[mu][mu][a]).sum()).collect();
    let mut out = zero4();
    for lam in 0..4 {
        for beta in 0..4 {
            let mut acc = C::new(0.0, 0.0);
            for mu in 0..4 {
                for a in 0..4 {
                    acc += dl[lam][mu][a] * G[lam] * d[beta][mu][a] * G[beta];
                }
            }
            for a in 0..4 {
                acc -= div[a] * d[beta][lam][a] * G[beta] * G[a] * 2.0;
            }
            for mu in 0..4 {
                for a in 0..4 {
                    acc -= d[mu][lam][a] * G[mu] * d[beta][mu][a] * G[beta] * G[mu] * G[a] * 2.0;
                }
            }
            out[lam][beta] = acc * 0.5 - if lam == beta { l * G[lam] } else { C::new(0.0, 0.0) };
        }
    }
    out
}

/// The angular-momentum integrand `J_{κτ}` written out term by term.
fn angular(f: &M4, d: &[M4; 4]) -> M4 {
    let fl = low(f);
    let dl: Vec<M4> = d.iter().map(low).collect();
    let div: Vec<C> = (0..4).map(|n| (0..4).map(|mu| d[mu][mu][n]).sum()).collect();
    let g0 = |a: usize| if a == 0 { 1.0 } else { 0.0 };
    let mixed = |mu: usize, k: usize| f[mu][k] * G[k];
    let mut out = zero4();
    for k in 0..4 {
        for t in 0..4 {
            let mut acc = C::new(0.0, 0.0);
            for n in 0..4 {
                acc += div[n] * (fl[n][t] * g0(k) - fl[n][k] * g0(t));
            }
            acc += -div[k] * G[k] * fl[0][t] + div[t] * G[t] * fl[0][k];
            for mu in 0..4 {
                let cyc = |a: usize, b: usize| dl[0][a][b] + dl[b][0][a] + dl[a][b][0];
                acc += mixed(mu, k) * cyc(t, mu) - mixed(mu, t) * cyc(k, mu);
            }
            out[k][t] = acc;
        }
    }
    out
}

fn mode(p: [f64; 3], m: f64, s: PolarizationState) -> PlaneWaveMode {
    PlaneWaveMode::new(&Momentum::new(p, m).unwrap(), s, NormScheme::Unit).unwrap()
}

fn field(md: &PlaneWaveMode) -> Field<'_> {
    let kmax = md.k.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Field {
        mode: md,
        h: 2e-3 / kmax,
    }
}

fn cases() -> Vec<PlaneWaveMode> {
    let mut v = Vec::new();
    for (p, m) in [
        ([0.8, -1.7, 2.4], 0.9),
        ([0.3, 0.2, -0.5], 1.7),
        ([-2.0, 1.0, 0.5], 0.4),
    ] {
        for s in PolarizationState::ALL {
            v.push(mode(p, m, s));
        }
    }
    v.push(PlaneWaveMode::notoph(&Momentum::new([0.4, 1.1, -0.7], 1.2).unwrap(), NormScheme::Mass).unwrap());
    v
}

fn close(a: C, b: C, scale: f64, tol: f64) -> bool {
    (a - b).norm() <= tol * scale.max(1.0)
}

#[test]
fn lagrangian_matches_position_space_average() {
    for md in cases() {
        let fld = field(&md);
        let oracle = fld.average(C::new(0.0, 0.0), |f, d| lagrangian(f, d, md.mass()));
        let lib = lagrangian_density(&md);
        assert!(
            close(oracle, lib, md.density_scale(2), 1e-8),
            "{:?}: {oracle} vs {lib}",
            md.sigma
        );
    }
}

#[test]
fn stress_tensor_matches_position_space_average() {
    for md in cases() {
        let fld = field(&md);
        let lib = stress_density(&md);
        for lam in 0..4 {
            for beta in 0..4 {
                let oracle = fld.average(C::new(0.0, 0.0), |f, d| theta(f, d, md.mass())[lam][beta]);
                assert!(
                    close(oracle, lib[lam][beta], md.density_scale(2), 1e-8),
                    "{:?} ({lam},{beta}): {oracle} vs {}",
                    md.sigma,
                    lib[lam][beta]
                );
            }
        }
    }
}

#[test]
fn angular_momentum_matches_position_space_average() {
    for md in cases() {
        let fld = field(&md);
        let lib = angular_momentum_density(&md).lower;
        for k in 0..4 {
            for t in 0..4 {
                let oracle = fld.average(C::new(0.0, 0.0), |f, d| angular(f, d)[k][t]);
                assert!(
                    close(oracle, lib[k][t], md.density_scale(1), 1e-8),
                    "{:?} ({k},{t}): {oracle} vs {}",
                    md.sigma,
                    lib[k][t]
                );
            }
        }
    }
}

#[test]
fn spin_vector_matches_position_space_average() {
    for md in cases() {
        let fld = field(&md);
        let lib = spin_density(&md);
        for k in 0..3 {
            // ε^{ijk}[F^{0i}∂_μF^{μj} + F_μ^j(∂^0F^{μi} + ∂^μF^{i0} + ∂^iF^{0μ})]
            let oracle = fld.average(C::new(0.0, 0.0), |f, d| {
                let mut acc = C::new(0.0, 0.0);
                for i in 1..4 {
                    for j in 1..4 {
                        let e = levi_civita(0, i, j, k + 1);
                        if e == 0.0 {
                            continue;
                        }
                        let div: C = (0..4).map(|mu| d[mu][mu][j]).sum();
                        let mut term = f[0][i] * div;
                        for mu in 0..4 {
                            let f_mu_j = f[mu][j] * G[mu];
                            term += f_mu_j * (d[0][mu][i] + d[mu][i][0] * G[mu] + d[i][0][mu] * G[i]);
                        }
                        acc += term * e;
                    }
                }
                acc
            });
            assert!(
                close(oracle, lib[k], md.density_scale(1), 1e-8),
                "{:?}: {oracle} vs {}",
                md.sigma,
                lib[k]
            );
        }
    }
}

#[test]
fn strengths_are_curl_of_the_potential_in_position_space() {
    // 2m F^{μν} = ∂^μA^ν - ∂^νA^μ for A(x) = u e^{-ik·x}, checked by finite differences.
    let p = Momentum::new([0.6, -1.1, 0.9], 0.7).unwrap();
    for s in PolarizationState::ALL {
        let md = PlaneWaveMode::new(&p, s, NormScheme::Unit).unwrap();
        let k = md.k.0.map(|z| z.re);
        let a = |x: [f64; 4], nu: usize| {
            let kx = k[0] * x[0] - k[1] * x[1] - k[2] * x[2] - k[3] * x[3];
            md.u[nu] * C::from_polar(1.0, -kx)
        };
        let h = 1e-3;
        let da = |mu: usize, nu: usize| {
            let mut xp = [0.0; 4];
            let mut xm = [0.0; 4];
            xp[mu] = h;
            xm[mu] = -h;
            (a(xp, nu) - a(xm, nu)) / (2.0 * h) * G[mu]
        };
        let f = md.f_plus.components();
        for mu in 0..4 {
            for nu in 0..4 {
                let lhs = f[mu][nu] * (2.0 * p.mass());
                let rhs = da(mu, nu) - da(nu, mu);
                assert!((lhs - rhs).norm() < 1e-6 * md.u.max_abs().max(1.0), "{s} ({mu},{nu})");
            }
        }
    }
}

/// Boost by exponentiating the rapidity generator with a plain Taylor series.
fn boost_by_exponential(p: &Momentum) -> [[f64; 4]; 4] {
    let mag = p.magnitude();
    let eta = (mag / p.mass()).asinh();
    let n = p.p().map(|x| x / mag);
    let mut k = [[0.0; 4]; 4];
    for i in 0..3 {
        k[0][i + 1] = n[i] * eta;
        k[i + 1][0] = n[i] * eta;
    }
    let mut out = [[0.0; 4]; 4];
    let mut term = [[0.0; 4]; 4];
    for i in 0..4 {
        out[i][i] = 1.0;
        term[i][i] = 1.0;
    }
    for n in 1..80 {
        let mut next = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                for l in 0..4 {
                    next[i][j] += term[i][l] * k[l][j] / n as f64;
                }
            }
        }
        term = next;
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] += term[i][j];
            }
        }
    }
    out
}

#[test]
fn boost_matches_exponential_of_generator() {
    for (p, m) in [([0.3, -0.4, 1.2], 0.8), ([1.5, 0.0, 0.0], 2.0), ([0.1, 0.2, 0.3], 0.5)] {
        let mom = Momentum::new(p, m).unwrap();
        let oracle = boost_by_exponential(&mom);
        let lib = boost_matrix(&mom).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((oracle[i][j] - lib.matrix[i][j]).abs() < 1e-12, "({i},{j})");
            }
        }
        for s in PolarizationState::ALL {
            let rest = rest_polarization(s);
            let u = polarization(&mom, s, NormScheme::Unit).unwrap();
            for i in 0..4 {
                let expect: C = (0..4).map(|j| rest[j] * oracle[i][j]).sum();
                assert!((expect - u[i]).norm() < 1e-12);
            }
        }
    }
}

/// Chiral gammas assembled from Pauli matrices, independent of the library.
fn gammas() -> [[[C; 4]; 4]; 4] {
    let z = C::new(0.0, 0.0);
    let o = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    let sigma = [[[z, o], [o, z]], [[z, -i], [i, z]], [[o, z], [z, -o]]];
    let mut g = [[[z; 4]; 4]; 4];
    for a in 0..2 {
        g[0][a][a + 2] = o;
        g[0][a + 2][a] = o;
    }
    for (n, s) in sigma.iter().enumerate() {
        for a in 0..2 {
            for b in 0..2 {
                g[n + 1][a][b + 2] = s[a][b];
                g[n + 1][a + 2][b] = -s[a][b];
            }
        }
    }
    g
}

fn mm(a: &M4, b: &M4) -> M4 {
    let mut o = zero4();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                o[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    o
}

#[test]
fn gamma_matrices_match_pauli_construction() {
    let g = gammas();
    let b = basis();
    for mu in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g[mu][i][j], b.gamma[mu].0[i][j]);
            }
        }
    }
    let g5 = {
        let t = mm(&mm(&g[0], &g[1]), &mm(&g[2], &g[3]));
        t.map(|row| row.map(|z| z * C::new(0.0, 1.0)))
    };
    for i in 0..4 {
        for j in 0..4 {
            assert!((g5[i][j] - b.gamma5.0[i][j]).norm() < 1e-15);
        }
    }
}

#[test]
fn dual_identity_by_brute_force() {
    let g = gammas();
    let i = C::new(0.0, 1.0);
    let sigma = |mu: usize, nu: usize| {
        let a = mm(&g[mu], &g[nu]);
        let b = mm(&g[nu], &g[mu]);
        let mut o = zero4();
        for r in 0..4 {
            for c in 0..4 {
                o[r][c] = (a[r][c] - b[r][c]) * i * 0.5;
            }
        }
        o
    };
    let g5 = mm(&mm(&g[0], &g[1]), &mm(&g[2], &g[3])).map(|row| row.map(|z| z * i));
    for mu in 0..4 {
        for nu in 0..4 {
            let lhs = mm(&g5, &sigma(mu, nu));
            let mut rhs = zero4();
            for rho in 0..4 {
                for sg in 0..4 {
                    let e = levi_civita(mu, nu, rho, sg);
                    if e == 0.0 {
                        continue;
                    }
                    let s = sigma(rho, sg);
                    for r in 0..4 {
                        for c in 0..4 {
                            rhs[r][c] += s[r][c] * (i * 0.5 * e * G[rho] * G[sg]);
                        }
                    }
                }
            }
            for r in 0..4 {
                for c in 0..4 {
                    assert!((lhs[r][c] - rhs[r][c]).norm() < 1e-14, "({mu},{nu})");
                }
            }
        }
    }
}

#[test]
fn dual_is_contraction_with_levi_civita() {
    let f = mode([0.8, -1.7, 2.4], 0.9, PolarizationState::Plus).f_plus;
    let fl = low(&f.components());
    let lib = dual(&f);
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = C::new(0.0, 0.0);
            for r in 0..4 {
                for s in 0..4 {
                    acc += fl[r][s] * (0.5 * levi_civita(mu, nu, r, s));
                }
            }
            assert!((acc - lib.get(mu, nu)).norm() < 1e-14);
        }
    }
}

#[test]
fn variation_matches_lowered_generator_action() {
    // δF^{αβ} = ω^{βν} F^α_ν + ω^{αν} F_ν^β.
    let f = mode([0.8, -1.7, 2.4], 0.9, PolarizationState::Zero).f_plus;
    let c = f.components();
    let mut omega = [[0.0; 4]; 4];
    let vals = [0.3, -0.2, 0.5, 0.7, -0.4, 0.1];
    for (n, (a, b)) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].into_iter().enumerate() {
        omega[a][b] = vals[n];
        omega[b][a] = -vals[n];
    }
    let lib = infinitesimal_variation(&rotation_generator(), &omega, &f).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let mut acc = C::new(0.0, 0.0);
            for n in 0..4 {
                acc += c[a][n] * G[n] * omega[b][n] + c[n][b] * G[n] * omega[a][n];
            }
            assert!((acc - lib.get(a, b)).norm() < 1e-14, "({a},{b})");
        }
    }
}

#[test]
fn finite_transform_preserves_invariants() {
    let f = mode([0.8, -1.7, 2.4], 0.9, PolarizationState::Plus).f_plus;
    let mut omega = [[0.0; 4]; 4];
    omega[0][2] = 0.8;
    omega[2][0] = -0.8;
    omega[1][3] = 0.5;
    omega[3][1] = -0.5;
    let g = finite_transform(&omega, &f).unwrap();
    let inv = |t: &FieldStrength| {
        let c = t.components();
        let l = low(&c);
        let mut a = C::new(0.0, 0.0);
        for m in 0..4 {
            for n in 0..4 {
                a += c[m][n] * l[m][n];
            }
        }
        let d = dual(t).components();
        let mut b = C::new(0.0, 0.0);
        for m in 0..4 {
            for n in 0..4 {
                b += d[m][n] * l[m][n];
            }
        }
        (a, b)
    };
    let (a0, b0) = inv(&f);
    let (a1, b1) = inv(&g);
    assert!((a0 - a1).norm() < 1e-12 * a0.norm().max(1.0));
    assert!((b0 - b1).norm() < 1e-12 * b0.norm().max(1.0));
}

#[test]
fn notoph_is_wedge_of_boosted_transverse_axes() {
    let p = Momentum::new([0.4, 1.1, -0.7], 1.2).unwrap();
    let oracle = boost_by_exponential(&p);
    let e1 = FourVector::from_real([oracle[0][1], oracle[1][1], oracle[2][1], oracle[3][1]]);
    let e2 = FourVector::from_real([oracle[0][2], oracle[1][2], oracle[2][2], oracle[3][2]]);
    let lib = notoph_tensor(&p, NormScheme::Unit).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let w = e1[a] * e2[b] - e1[b] * e2[a];
            assert!((w - lib.get(a, b)).norm() < 1e-12);
        }
    }
}

#[test]
fn negative_energy_strength_uses_conjugate_potential() {
    let p = Momentum::new([0.4, 1.1, -0.7], 1.2).unwrap();
    let u = polarization(&p, PolarizationState::Plus, NormScheme::Unit).unwrap();
    let alpha = 0.6;
    let f = tensorfield::strengths::field_strength_from_potential(&p, &u, EnergySign::Negative, alpha).unwrap();
    let w = u.conj().scale(C::from_polar(1.0, alpha));
    let k = p.four_vector();
    for a in 0..4 {
        for b in 0..4 {
            let expect = (k[a] * w[b] - k[b] * w[a]) * C::new(0.0, 1.0 / (2.0 * p.mass()));
            assert!((expect - f.get(a, b)).norm() < 1e-14);
        }
    }
}
