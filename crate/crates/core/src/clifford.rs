//! Dirac algebra in the chiral (Weyl) representation and the `R = CP` matrix.
//!
//! Block layout (2×2 blocks, `σⁱ` the Pauli matrices):
//!
//! ```text
//! γ⁰ = [[0, 1], [1, 0]]     γⁱ = [[0, σⁱ], [-σⁱ, 0]]
//! γ⁵ = iγ⁰γ¹γ²γ³ = diag(-1, -1, 1, 1)
//! R  = [[iΘ, 0], [0, -iΘ]]  Θ = -iσ₂ = [[0, -1], [1, 0]]
//! σ^{μν} = (i/2)[γ^μ, γ^ν]
//! ```
//!
//! These block signs are the ones for which every `R` conjugation identity
//! holds with `R` exactly as written, and the `γ⁵` sign is the one for which
//! `γ⁵σ^{μν} = (i/2) ε^{μνρσ} σ_{ρσ}` holds with `ε^{0123} = +1`.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::report::CheckReport;
use crate::tensor::{levi_civita, FieldStrength, FourVector, C64, I, METRIC, ONE, ZERO};

/// A 4×4 complex matrix on spinor indices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiracMatrix(pub [[C64; 4]; 4]);

impl DiracMatrix {
    pub fn zero() -> Self {
        DiracMatrix([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        DiracMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { ONE } else { ZERO })
        }))
    }

    /// Assembles a matrix from four 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(a: [[C64; 2]; 2], b: [[C64; 2]; 2], c: [[C64; 2]; 2], d: [[C64; 2]; 2]) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][j];
                m[i][j + 2] = b[i][j];
                m[i + 2][j] = c[i][j];
                m[i + 2][j + 2] = d[i][j];
            }
        }
        DiracMatrix(m)
    }

    pub fn transpose(&self) -> Self {
        DiracMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i])))
    }

    pub fn adjoint(&self) -> Self {
        DiracMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].conj())))
    }

    pub fn scale(&self, s: C64) -> Self {
        DiracMatrix(self.0.map(|row| row.map(|z| z * s)))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// `max |M - Mᵀ|`
    pub fn symmetry_defect(&self) -> f64 {
        self.max_abs_diff(&self.transpose())
    }

    /// `max |M + Mᵀ|`
    pub fn antisymmetry_defect(&self) -> f64 {
        (*self + self.transpose()).max_abs()
    }

    /// Entrywise `Σ conj(a) b`.
    pub fn inner(&self, other: &Self) -> C64 {
        let mut acc = ZERO;
        for i in 0..4 {
            for j in 0..4 {
                acc += self.0[i][j].conj() * other.0[i][j];
            }
        }
        acc
    }
}

impl Add for DiracMatrix {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DiracMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])
        }))
    }
}

impl Sub for DiracMatrix {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DiracMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] - rhs.0[i][j])
        }))
    }
}

impl Neg for DiracMatrix {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Mul for DiracMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        DiracMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
        }))
    }
}

impl Mul<C64> for DiracMatrix {
    type Output = Self;
    fn mul(self, s: C64) -> Self {
        self.scale(s)
    }
}

/// The sixteen-element Dirac basis together with `R`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaBasis {
    pub gamma: [DiracMatrix; 4],
    pub gamma5: DiracMatrix,
    /// `σ^{μν}`, antisymmetric in `(μ, ν)`.
    pub sigma: [[DiracMatrix; 4]; 4],
    pub r: DiracMatrix,
}

fn pauli() -> [[[C64; 2]; 2]; 3] {
    [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
}

fn scale2(m: [[C64; 2]; 2], s: C64) -> [[C64; 2]; 2] {
    m.map(|row| row.map(|z| z * s))
}

pub fn gamma_basis() -> GammaBasis {
    let zero2 = [[ZERO; 2]; 2];
    let id2 = [[ONE, ZERO], [ZERO, ONE]];
    let s = pauli();

    let g0 = DiracMatrix::from_blocks(zero2, id2, id2, zero2);
    let gi = |k: usize| DiracMatrix::from_blocks(zero2, s[k], scale2(s[k], -ONE), zero2);
    let gamma = [g0, gi(0), gi(1), gi(2)];

    let gamma5 = (gamma[0] * gamma[1] * gamma[2] * gamma[3]).scale(I);

    let sigma = std::array::from_fn(|mu| std::array::from_fn(|nu| gamma[mu].commutator(&gamma[nu]).scale(I * 0.5)));

    let theta = [[ZERO, -ONE], [ONE, ZERO]];
    let r = DiracMatrix::from_blocks(scale2(theta, I), zero2, zero2, scale2(theta, -I));

    GammaBasis {
        gamma,
        gamma5,
        sigma,
        r,
    }
}

/// Shared, lazily built basis.
pub fn basis() -> &'static GammaBasis {
    static BASIS: OnceLock<GammaBasis> = OnceLock::new();
    BASIS.get_or_init(gamma_basis)
}

impl GammaBasis {
    /// `k̸ = γ^μ k_μ`
    pub fn slash(&self, k: &FourVector) -> DiracMatrix {
        let low = k.lower();
        (0..4).fold(DiracMatrix::zero(), |acc, mu| acc + self.gamma[mu].scale(low[mu]))
    }

    /// `σ_{ρσ}` with both indices lowered.
    pub fn sigma_lower(&self, rho: usize, sigma: usize) -> DiracMatrix {
        self.sigma[rho][sigma].scale(C64::from(METRIC[rho] * METRIC[sigma]))
    }

    /// `max |{γ^μ, γ^ν} - 2 g^{μν}|` over all index pairs.
    pub fn clifford_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let expected = if mu == nu {
                    DiracMatrix::identity().scale(C64::from(2.0 * METRIC[mu]))
                } else {
                    DiracMatrix::zero()
                };
                worst = worst.max(self.gamma[mu].anticommutator(&self.gamma[nu]).max_abs_diff(&expected));
            }
        }
        worst
    }
}

/// The five `R` conjugation properties, one report each.
pub fn verify_r_properties(basis: &GammaBasis, tol: f64) -> Vec<CheckReport> {
    let r = basis.r;
    // R⁻¹ = R, covered by the involution check below.
    let r_inv = r;
    let conj = |m: &DiracMatrix| r_inv * *m * r;

    let transpose = (r.transpose() + r).max_abs();
    let involution = r
        .adjoint()
        .max_abs_diff(&r)
        .max((r * r).max_abs_diff(&DiracMatrix::identity()));
    let gamma5 = conj(&basis.gamma5).max_abs_diff(&basis.gamma5.transpose());
    let gamma = (0..4)
        .map(|mu| (conj(&basis.gamma[mu]) + basis.gamma[mu].transpose()).max_abs())
        .fold(0.0, f64::max);
    let mut sigma: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let s = &basis.sigma[mu][nu];
            sigma = sigma.max((conj(s) + s.transpose()).max_abs());
        }
    }

    vec![
        CheckReport::check(
            "clifford.r_transpose",
            "R^T = -R",
            "R-matrix properties",
            transpose,
            tol,
        ),
        CheckReport::check(
            "clifford.r_unitary_involution",
            "R^dagger = R = R^-1",
            "R-matrix properties",
            involution,
            tol,
        ),
        CheckReport::check(
            "clifford.r_gamma5",
            "R^-1 gamma5 R = gamma5^T",
            "R-matrix properties",
            gamma5,
            tol,
        ),
        CheckReport::check(
            "clifford.r_gamma",
            "R^-1 gamma^mu R = -(gamma^mu)^T",
            "R-matrix properties",
            gamma,
            tol,
        ),
        CheckReport::check(
            "clifford.r_sigma",
            "R^-1 sigma^{mu nu} R = -(sigma^{mu nu})^T",
            "R-matrix properties",
            sigma,
            tol,
        ),
    ]
}

/// Deviation `|γ⁵σ^{μν} - (i/2) s ε^{μνρσ} σ_{ρσ}|` for one index pair, where
/// `s = eps_sign` flips the Levi-Civita convention.
pub fn dual_identity_deviation(basis: &GammaBasis, eps_sign: f64, mu: usize, nu: usize) -> f64 {
    let lhs = basis.gamma5 * basis.sigma[mu][nu];
    let mut rhs = DiracMatrix::zero();
    for rho in 0..4 {
        for sig in 0..4 {
            let e = levi_civita(mu, nu, rho, sig);
            if e != 0.0 {
                rhs = rhs + basis.sigma_lower(rho, sig).scale(I * (0.5 * eps_sign * e));
            }
        }
    }
    lhs.max_abs_diff(&rhs)
}

/// Checks `γ⁵σ^{μν} = (i/2) ε^{μνρσ} σ_{ρσ}` over every index pair.
pub fn verify_dual_identity(basis: &GammaBasis, eps_sign: f64, tol: f64) -> CheckReport {
    let mut worst: f64 = 0.0;
    let mut details = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            let d = dual_identity_deviation(basis, eps_sign, mu, nu);
            if mu < nu {
                details.push(format!("({mu}{nu}): {d:e}"));
            }
            worst = worst.max(d);
        }
    }
    CheckReport::check(
        "clifford.dual_identity",
        format!("gamma5 sigma^{{mu nu}} = (i/2) eps^{{mu nu rho sigma}} sigma_{{rho sigma}}, eps^0123 = {eps_sign:+}"),
        "Weyl-representation dual identity",
        worst,
        tol,
    )
    .with_details(details.join(", "))
}

/// `Ψ = γ^μ R A_μ + σ^{μν} R F_{μν}` (symmetric part of the bispinor).
pub fn symmetric_expand(basis: &GammaBasis, a: &FourVector, f: &FieldStrength) -> DiracMatrix {
    symmetric_expand_weighted(basis, a, f, ONE)
}

/// As [`symmetric_expand`], with the tensor term multiplied by `weight`.
pub fn symmetric_expand_weighted(basis: &GammaBasis, a: &FourVector, f: &FieldStrength, weight: C64) -> DiracMatrix {
    let (vector, tensor) = expansion_terms(basis, a, f);
    vector + tensor.scale(weight)
}

/// The vector term `γ^μ R A_μ` and tensor term `σ^{μν} R F_{μν}` separately.
pub fn expansion_terms(basis: &GammaBasis, a: &FourVector, f: &FieldStrength) -> (DiracMatrix, DiracMatrix) {
    let a_low = a.lower();
    let f_low = f.lowered();
    let mut vector = DiracMatrix::zero();
    for mu in 0..4 {
        vector = vector + basis.gamma[mu].scale(a_low[mu]);
    }
    let mut tensor = DiracMatrix::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            if mu != nu {
                tensor = tensor + basis.sigma[mu][nu].scale(f_low[mu][nu]);
            }
        }
    }
    (vector * basis.r, tensor * basis.r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> GammaBasis {
        gamma_basis()
    }

    #[test]
    fn gamma_squares() {
        let b = b();
        assert_eq!(b.gamma[0] * b.gamma[0], DiracMatrix::identity());
        for i in 1..4 {
            assert_eq!(b.gamma[i] * b.gamma[i], -DiracMatrix::identity());
        }
        assert_eq!(b.gamma[0] * b.gamma[1] + b.gamma[1] * b.gamma[0], DiracMatrix::zero());
    }

    #[test]
    fn clifford_relations_exact() {
        assert_eq!(b().clifford_defect(), 0.0);
    }

    #[test]
    fn gamma5_is_diagonal_involution() {
        let b = b();
        let g5 = b.gamma5;
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(g5.0[i][j], ZERO);
                }
            }
        }
        assert_eq!(g5.0[0][0], -ONE);
        assert_eq!(g5.0[3][3], ONE);
        assert_eq!(g5 * g5, DiracMatrix::identity());
    }

    #[test]
    fn r_matches_block_form() {
        let r = b().r;
        // iΘ = [[0, -i], [i, 0]], -iΘ = [[0, i], [-i, 0]]
        assert_eq!(r.0[0][1], -I);
        assert_eq!(r.0[1][0], I);
        assert_eq!(r.0[2][3], I);
        assert_eq!(r.0[3][2], -I);
        assert_eq!(r.0[0][0], ZERO);
        assert_eq!(r.0[0][2], ZERO);
    }

    #[test]
    fn r_properties_exact() {
        let b = b();
        assert_eq!(b.r.transpose() + b.r, DiracMatrix::zero());
        assert_eq!(b.r * b.r, DiracMatrix::identity());
        assert_eq!(b.r * b.gamma[2] * b.r + b.gamma[2].transpose(), DiracMatrix::zero());
        for rep in verify_r_properties(&b, 0.0) {
            assert!(rep.passed(), "{rep:?}");
            assert_eq!(rep.max_abs_error, 0.0);
        }
    }

    #[test]
    fn dual_identity_calibration() {
        let b = b();
        assert_eq!(dual_identity_deviation(&b, 1.0, 0, 1), 0.0);
        assert_eq!(dual_identity_deviation(&b, 1.0, 2, 2), 0.0);
        assert!(verify_dual_identity(&b, 1.0, 0.0).passed());
        // Flipping ε against the calibrated choice breaks the identity: the
        // right-hand side changes sign, so the deviation is 2·|γ⁵σ^{01}| = 2.
        assert_eq!(dual_identity_deviation(&b, -1.0, 0, 1), 2.0);
        assert!(!verify_dual_identity(&b, -1.0, 1e-12).passed());
    }

    #[test]
    fn flipping_gamma5_also_breaks_identity() {
        let mut b = b();
        b.gamma5 = -b.gamma5;
        assert!(dual_identity_deviation(&b, 1.0, 0, 1) > 1.0);
        assert_eq!(dual_identity_deviation(&b, -1.0, 0, 1), 0.0);
    }

    #[test]
    fn expansion_matrix_symmetries() {
        let b = b();
        assert_eq!(b.r.antisymmetry_defect(), 0.0);
        assert_eq!((b.gamma5 * b.r).antisymmetry_defect(), 0.0);
        for mu in 0..4 {
            assert_eq!((b.gamma[mu] * b.r).symmetry_defect(), 0.0);
            for nu in 0..4 {
                assert_eq!((b.sigma[mu][nu] * b.r).symmetry_defect(), 0.0);
                assert_eq!((b.gamma5 * b.sigma[mu][nu] * b.r).symmetry_defect(), 0.0);
            }
        }
    }

    #[test]
    fn symmetric_expand_of_zero() {
        let psi = symmetric_expand(&b(), &FourVector::zero(), &FieldStrength::zero());
        assert_eq!(psi, DiracMatrix::zero());
    }

    #[test]
    fn symmetric_expand_is_symmetric() {
        let b = b();
        let a = FourVector::new([
            C64::new(0.3, -1.0),
            C64::new(2.0, 0.1),
            C64::new(-0.7, 0.4),
            C64::new(1.1, 2.2),
        ]);
        let f = FieldStrength::from_upper([
            C64::new(1.0, 0.5),
            C64::new(-2.0, 0.0),
            C64::new(0.25, -3.0),
            C64::new(0.0, 1.0),
            C64::new(4.0, 4.0),
            C64::new(-1.5, 0.5),
        ]);
        let psi = symmetric_expand(&b, &a, &f);
        assert!(psi.symmetry_defect() < 1e-14);
        assert!(psi.max_abs() > 1.0);
    }
}
