//! Minkowski-space primitives.
//!
//! Signature is fixed to `diag(1, -1, -1, -1)` and the contravariant
//! Levi-Civita symbol is normalized to `ε^{0123} = +1`. All tensors are stored
//! with upper (contravariant) indices; lowering is explicit.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type C64 = Complex64;

/// A complex spatial 3-vector.
pub type ThreeVector = [C64; 3];

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Diagonal of the metric `g_{μν} = g^{μν}`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Contravariant Levi-Civita symbol `ε^{μνρσ}` with `ε^{0123} = +1`.
pub fn levi_civita(a: usize, b: usize, c: usize, d: usize) -> f64 {
    let idx = [a, b, c, d];
    if idx.iter().any(|&i| i > 3) {
        return 0.0;
    }
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if idx[i] == idx[j] {
                return 0.0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Covariant Levi-Civita symbol `ε_{μνρσ}`; picks up `det g = -1`.
pub fn levi_civita_lower(a: usize, b: usize, c: usize, d: usize) -> f64 {
    -levi_civita(a, b, c, d)
}

/// Three-dimensional `ε^{ijk}` on spatial indices `0..3` (i.e. x, y, z).
pub fn levi_civita3(i: usize, j: usize, k: usize) -> f64 {
    levi_civita(0, i + 1, j + 1, k + 1)
}

/// Contravariant four-vector with complex components.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector(pub [C64; 4]);

impl FourVector {
    pub const fn new(c: [C64; 4]) -> Self {
        FourVector(c)
    }

    pub fn from_real(c: [f64; 4]) -> Self {
        FourVector(c.map(C64::from))
    }

    pub fn zero() -> Self {
        FourVector([ZERO; 4])
    }

    pub fn time(&self) -> C64 {
        self.0[0]
    }

    pub fn spatial(&self) -> ThreeVector {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Covariant components `a_μ = g_{μν} a^ν`.
    pub fn lower(&self) -> [C64; 4] {
        let mut out = self.0;
        for (mu, x) in out.iter_mut().enumerate() {
            *x *= METRIC[mu];
        }
        out
    }

    pub fn conj(&self) -> Self {
        FourVector(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, s: C64) -> Self {
        FourVector(self.0.map(|z| z * s))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        (*self - *other).max_abs()
    }
}

impl Index<usize> for FourVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for FourVector {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.0[i]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector(self.0.map(|z| -z))
    }
}

impl Mul<C64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: C64) -> FourVector {
        self.scale(s)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector(self.0.map(|z| z * s))
    }
}

/// `a^0 b^0 - a·b`, no conjugation.
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> C64 {
    (0..4).map(|mu| a.0[mu] * b.0[mu] * METRIC[mu]).sum()
}

/// `a*_μ b^μ`, the first argument conjugated. Only used for norm checks.
pub fn conj_dot(a: &FourVector, b: &FourVector) -> C64 {
    minkowski_dot(&a.conj(), b)
}

pub fn cross(a: &ThreeVector, b: &ThreeVector) -> ThreeVector {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn dot3(a: &ThreeVector, b: &ThreeVector) -> C64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn max_abs3(a: &ThreeVector) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff3(a: &ThreeVector, b: &ThreeVector) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).norm()).fold(0.0, f64::max)
}

/// On-shell momentum of a particle of mass `m >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Momentum {
    p: [f64; 3],
    m: f64,
}

impl Momentum {
    pub fn new(p: [f64; 3], m: f64) -> Result<Self> {
        if !m.is_finite() || m < 0.0 {
            return Err(Error::InvalidMass(m));
        }
        if p.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidMomentum(p));
        }
        Ok(Momentum { p, m })
    }

    /// Like [`Momentum::new`] but additionally rejects `m == 0`.
    pub fn massive(p: [f64; 3], m: f64) -> Result<Self> {
        let k = Self::new(p, m)?;
        k.require_massive()?;
        Ok(k)
    }

    pub fn at_rest(m: f64) -> Result<Self> {
        Self::new([0.0; 3], m)
    }

    pub fn p(&self) -> [f64; 3] {
        self.p
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn energy(&self) -> f64 {
        (self.magnitude_sq() + self.m * self.m).sqrt()
    }

    pub fn magnitude_sq(&self) -> f64 {
        self.p.iter().map(|x| x * x).sum()
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude_sq().sqrt()
    }

    /// `p̂`, or `None` at rest.
    pub fn direction(&self) -> Option<[f64; 3]> {
        let n = self.magnitude();
        (n > 0.0).then(|| self.p.map(|x| x / n))
    }

    /// `p_r = p₁ + i p₂`
    pub fn p_r(&self) -> C64 {
        C64::new(self.p[0], self.p[1])
    }

    /// `p_l = p₁ - i p₂`
    pub fn p_l(&self) -> C64 {
        C64::new(self.p[0], -self.p[1])
    }

    /// `(E_p, p₁, p₂, p₃)`
    pub fn four_vector(&self) -> FourVector {
        FourVector::from_real([self.energy(), self.p[0], self.p[1], self.p[2]])
    }

    pub fn with_mass(&self, m: f64) -> Result<Self> {
        Self::new(self.p, m)
    }

    pub(crate) fn require_massive(&self) -> Result<()> {
        if self.m > 0.0 {
            Ok(())
        } else {
            Err(Error::NonPositiveMass(self.m))
        }
    }
}

/// Real 4×4 matrix `L^μ_ν` acting on contravariant vectors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LorentzBoost {
    pub matrix: [[f64; 4]; 4],
}

impl LorentzBoost {
    pub fn identity() -> Self {
        LorentzBoost { matrix: identity4() }
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector(std::array::from_fn(|mu| {
            (0..4).map(|nu| v.0[nu] * self.matrix[mu][nu]).sum()
        }))
    }

    /// `max |Lᵀ g L - g|`.
    pub fn metric_defect(&self) -> f64 {
        let l = &self.matrix;
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                let v: f64 = (0..4).map(|mu| l[mu][a] * METRIC[mu] * l[mu][b]).sum();
                let g = if a == b { METRIC[a] } else { 0.0 };
                worst = worst.max((v - g).abs());
            }
        }
        worst
    }

    pub fn determinant(&self) -> f64 {
        det4(&self.matrix)
    }
}

pub(crate) fn identity4() -> [[f64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }))
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    // Laplace expansion along the first row.
    let minor = |col: usize| -> f64 {
        let rows: Vec<[f64; 3]> = (1..4)
            .map(|r| {
                let mut out = [0.0; 3];
                let mut k = 0;
                for c in 0..4 {
                    if c != col {
                        out[k] = m[r][c];
                        k += 1;
                    }
                }
                out
            })
            .collect();
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    };
    (0..4)
        .map(|c| if c % 2 == 0 { 1.0 } else { -1.0 } * m[0][c] * minor(c))
        .sum()
}

/// Pure boost taking `(m, 0, 0, 0)` to `(E_p, p)`. Identity at rest.
pub fn boost_matrix(p: &Momentum) -> Result<LorentzBoost> {
    p.require_massive()?;
    let gamma = p.energy() / p.mass();
    let Some(n) = p.direction() else {
        return Ok(LorentzBoost::identity());
    };
    // √(γ²-1) = |p|/m, computed directly to avoid cancellation.
    let eta = p.magnitude() / p.mass();
    let mut l = [[0.0; 4]; 4];
    l[0][0] = gamma;
    for i in 0..3 {
        l[i + 1][0] = n[i] * eta;
        l[0][i + 1] = n[i] * eta;
        for k in 0..3 {
            let delta = if i == k { 1.0 } else { 0.0 };
            l[i + 1][k + 1] = delta + (gamma - 1.0) * n[i] * n[k];
        }
    }
    Ok(LorentzBoost { matrix: l })
}

/// Antisymmetric rank-2 tensor with contravariant indices `F^{μν}`.
///
/// Every constructor enforces `F^{μν} = -F^{νμ}` exactly; only the six
/// entries above the diagonal are ever read from caller input.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct FieldStrength {
    c: [[C64; 4]; 4],
}

/// The six independent index pairs `μ < ν`.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl FieldStrength {
    pub fn zero() -> Self {
        FieldStrength::default()
    }

    /// Builds the tensor from `f(μ, ν)` evaluated on `μ < ν` only.
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut c = [[ZERO; 4]; 4];
        for (mu, nu) in PAIRS {
            let v = f(mu, nu);
            c[mu][nu] = v;
            c[nu][mu] = -v;
        }
        FieldStrength { c }
    }

    /// Entries in [`PAIRS`] order: `F^{01}, F^{02}, F^{03}, F^{12}, F^{13}, F^{23}`.
    pub fn from_upper(v: [C64; 6]) -> Self {
        let mut k = 0;
        Self::from_fn(|_, _| {
            let x = v[k];
            k += 1;
            x
        })
    }

    /// Antisymmetric part of an arbitrary matrix, `(M - Mᵀ)/2`.
    pub fn antisymmetrize(m: &[[C64; 4]; 4]) -> Self {
        Self::from_fn(|mu, nu| (m[mu][nu] - m[nu][mu]) * 0.5)
    }

    /// `a^μ b^ν - a^ν b^μ`
    pub fn wedge(a: &FourVector, b: &FourVector) -> Self {
        Self::from_fn(|mu, nu| a.0[mu] * b.0[nu] - a.0[nu] * b.0[mu])
    }

    pub fn get(&self, mu: usize, nu: usize) -> C64 {
        self.c[mu][nu]
    }

    pub fn upper(&self) -> [C64; 6] {
        PAIRS.map(|(mu, nu)| self.c[mu][nu])
    }

    /// Full contravariant component array.
    pub fn components(&self) -> [[C64; 4]; 4] {
        self.c
    }

    /// `F_{μν} = g_{μα} g_{νβ} F^{αβ}`.
    pub fn lowered(&self) -> [[C64; 4]; 4] {
        std::array::from_fn(|mu| std::array::from_fn(|nu| self.c[mu][nu] * (METRIC[mu] * METRIC[nu])))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_fn(|mu, nu| self.c[mu][nu] * s)
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|mu, nu| self.c[mu][nu].conj())
    }

    pub fn max_abs(&self) -> f64 {
        self.upper().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &FieldStrength) -> f64 {
        (*self - *other).max_abs()
    }
}

impl Index<(usize, usize)> for FieldStrength {
    type Output = C64;
    fn index(&self, (mu, nu): (usize, usize)) -> &C64 {
        &self.c[mu][nu]
    }
}

impl Add for FieldStrength {
    type Output = FieldStrength;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|mu, nu| self.c[mu][nu] + rhs.c[mu][nu])
    }
}

impl Sub for FieldStrength {
    type Output = FieldStrength;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|mu, nu| self.c[mu][nu] - rhs.c[mu][nu])
    }
}

impl Neg for FieldStrength {
    type Output = FieldStrength;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

/// Hodge dual `F̃^{μν} = ½ ε^{μνρσ} F_{ρσ}`.
pub fn dual(f: &FieldStrength) -> FieldStrength {
    let low = f.lowered();
    FieldStrength::from_fn(|mu, nu| {
        let mut acc = ZERO;
        for rho in 0..4 {
            for sigma in 0..4 {
                let e = levi_civita(mu, nu, rho, sigma);
                if e != 0.0 {
                    acc += low[rho][sigma] * e;
                }
            }
        }
        acc * 0.5
    })
}

/// `E^i = F^{i0}`, `B^i = -½ ε^{ijk} F^{jk}`.
pub fn eb_decompose(f: &FieldStrength) -> (ThreeVector, ThreeVector) {
    let e = std::array::from_fn(|i| f.get(i + 1, 0));
    let b = [-f.get(2, 3), -f.get(3, 1), -f.get(1, 2)];
    (e, b)
}

/// Inverse of [`eb_decompose`].
pub fn eb_compose(e: &ThreeVector, b: &ThreeVector) -> FieldStrength {
    FieldStrength::from_upper([-e[0], -e[1], -e[2], -b[2], b[1], -b[0]])
}

/// Raises the first index of an antisymmetric parameter `ω^{μν}` to get the
/// mixed generator `Ω^μ_ν = ω^{μλ} g_{λν}`.
pub fn mixed_generator(omega: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    std::array::from_fn(|mu| std::array::from_fn(|nu| omega[mu][nu] * METRIC[nu]))
}

/// Matrix exponential of a real 4×4 matrix by scaling and squaring.
pub fn expm4(a: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let norm = a
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let x: [[f64; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| a[i][j] * scale));
    let mut result = identity4();
    let mut term = identity4();
    for k in 1..=18 {
        term = matmul4(&term, &x);
        for row in term.iter_mut() {
            for v in row.iter_mut() {
                *v /= k as f64;
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                result[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        result = matmul4(&result, &result);
    }
    result
}

pub(crate) fn matmul4(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

/// `F'^{αβ} = Λ^α_μ Λ^β_ν F^{μν}`.
pub fn transform_tensor(lambda: &[[f64; 4]; 4], f: &FieldStrength) -> FieldStrength {
    FieldStrength::from_fn(|a, b| {
        let mut acc = ZERO;
        for mu in 0..4 {
            for nu in 0..4 {
                acc += f.get(mu, nu) * (lambda[a][mu] * lambda[b][nu]);
            }
        }
        acc
    })
}
