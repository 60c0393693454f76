//! The integrable manifold of the symmetric mixed eight-vertex model:
//! algebraic invariants, the closed-form R-matrix and its elliptic form,
//! the quartic R-matrix surface with its twelve singular points, the
//! commutativity condition for zero-field Ising transfer matrices, the
//! Hamiltonian limit (a transverse-field Ising chain with a
//! Dzyaloshinsky-Moriya term), and the symmetric even eight-vertex
//! comparison.
//!
//! Throughout, weights are on the arrow-reversal symmetric manifold
//! `w2=w1, w6=w5, v2=v1, v6=v5`, so a weight set is the quadruple
//! `(w1, w5, v1, v5)`. Two sets belong to the same commuting family when
//! they share the invariants
//!
//! ```text
//! Δ₁ = w5·v1/(w1·v5),   Δ₂ = (w1² + v5² − w5² − v1²)/(2·w1·v5)
//! ```

use crate::elliptic::{jacobi_cn, jacobi_dn, jacobi_sn, EllipticParams};
use crate::linalg::{cx, eye, from_rows, kron, CMatrix};
use crate::spin::{embed_two_site, IsingParams};
use crate::vertex::Mixed8VWeights;
use crate::{Error, Result};
use ndarray::Array2;
use num_complex::Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// The two algebraic invariants selecting a commuting family.
#[derive(Debug, Clone, Copy)]
pub struct InvariantPair {
    pub delta1: Complex64,
    pub delta2: Complex64,
}

impl InvariantPair {
    pub fn close_to(&self, other: &InvariantPair, tol: f64) -> bool {
        let s1 = self.delta1.norm().max(1.0);
        let s2 = self.delta2.norm().max(1.0);
        (self.delta1 - other.delta1).norm() <= tol * s1
            && (self.delta2 - other.delta2).norm() <= tol * s2
    }
}

/// Invariants of a symmetric weight set. Requires `w1·v5 ≠ 0`.
pub fn invariants_of(m: &Mixed8VWeights) -> Result<InvariantPair> {
    let denom = m.w1 * m.v5;
    if denom.norm() == 0.0 {
        return Err(Error::Domain("invariants need w1·v5 != 0".into()));
    }
    let delta1 = m.w5 * m.v1 / denom;
    let delta2 =
        (m.w1 * m.w1 + m.v5 * m.v5 - m.w5 * m.w5 - m.v1 * m.v1) / (2.0 * denom);
    Ok(InvariantPair { delta1, delta2 })
}

/// Elliptic parameterization of the symmetric manifold:
/// `w1 = sn(x+iλ)`, `w5 = sn(iλ)`, `v5 = sn(x)`,
/// `v1 = −k·sn(iλ)·sn(x)·sn(x+iλ)`, all at modulus `k`.
pub fn uniformized_weights(p: &EllipticParams) -> Result<Mixed8VWeights> {
    let il = Complex64::new(0.0, p.lambda);
    let sn_l = jacobi_sn(il, p.k)?;
    let sn_x = jacobi_sn(p.x, p.k)?;
    let sn_xl = jacobi_sn(p.x + il, p.k)?;
    let w1 = sn_xl;
    let w5 = sn_l;
    let v5 = sn_x;
    let v1 = -p.k * sn_l * sn_x * sn_xl;
    Ok(Mixed8VWeights::symmetric(w1, w5, v1, v5))
}

/// Invariants in elliptic form: `Δ₁ = −k·sn(iλ)²`, `Δ₂ = cn(iλ)·dn(iλ)`.
pub fn uniformized_invariants(k: f64, lambda: f64) -> Result<InvariantPair> {
    let il = Complex64::new(0.0, lambda);
    let sn_l = jacobi_sn(il, k)?;
    Ok(InvariantPair {
        delta1: -k * sn_l * sn_l,
        delta2: jacobi_cn(il, k)? * jacobi_dn(il, k)?,
    })
}

/// The four independent entries of the symmetric mixed R-matrix.
#[derive(Debug, Clone, Copy)]
pub struct MixedREntries {
    pub w1: Complex64,
    pub w5: Complex64,
    pub v1: Complex64,
    pub v5: Complex64,
}

impl MixedREntries {
    /// Assemble the 4×4 matrix
    /// `[[w1,0,v1,0],[v5,0,w5,0],[0,w5,0,v5],[0,v1,0,w1]]`.
    pub fn to_matrix(&self) -> CMatrix {
        let z = Complex64::new(0.0, 0.0);
        from_rows(
            4,
            4,
            &[
                self.w1, z, self.v1, z, //
                self.v5, z, self.w5, z, //
                z, self.w5, z, self.v5, //
                z, self.v1, z, self.w1,
            ],
        )
    }

    pub fn scaled(&self, f: Complex64) -> Self {
        Self {
            w1: self.w1 * f,
            w5: self.w5 * f,
            v1: self.v1 * f,
            v5: self.v5 * f,
        }
    }
}

fn nonzero(z: Complex64, what: &str) -> Result<Complex64> {
    if z.norm() < 1e-14 {
        return Err(Error::Domain(format!("vanishing denominator in {what}")));
    }
    Ok(z)
}

/// Tolerance used to decide that two weight sets lie on the same curve.
pub const ON_CURVE_TOL: f64 = 1e-8;

/// Closed-form R-matrix entries for two weight sets on the same invariant
/// curve, normalized to `w5 = 1`:
///
/// ```text
/// w1 = w5·(w1'·w5'')/(w5'·w1'')
/// v1 = v5·(w1'·v1'')/(w5'·v5'')
/// v5 = w5·w5''·(w1'·v5'' − v5'·w1'')/(w1''·(v1'·v1'' − w5'·w5''))
/// ```
pub fn closed_form_r(m1: &Mixed8VWeights, m2: &Mixed8VWeights) -> Result<MixedREntries> {
    let i1 = invariants_of(m1)?;
    let i2 = invariants_of(m2)?;
    if !i1.close_to(&i2, ON_CURVE_TOL) {
        return Err(Error::Domain(format!(
            "weight sets are not on the same invariant curve: ({}, {}) vs ({}, {})",
            i1.delta1, i1.delta2, i2.delta1, i2.delta2
        )));
    }
    let w5 = ONE;
    let w1 = w5 * m1.w1 * m2.w5 / nonzero(m1.w5 * m2.w1, "R entry w1")?;
    let v5 = w5 * m2.w5 * (m1.w1 * m2.v5 - m1.v5 * m2.w1)
        / nonzero(m2.w1 * (m1.v1 * m2.v1 - m1.w5 * m2.w5), "R entry v5")?;
    let v1 = v5 * m1.w1 * m2.v1 / nonzero(m1.w5 * m2.v5, "R entry v1")?;
    Ok(MixedREntries { w1, w5, v1, v5 })
}

/// Closed-form R-matrix for two points of the uniformized family, carrying
/// the normalization `w5 = 1/(1 + i·√k·sn(x₁−x₂,k))` under which the
/// unitarity product is the identity.
pub fn uniformized_r(k: f64, lambda: f64, x1: Complex64, x2: Complex64) -> Result<CMatrix> {
    let m1 = uniformized_weights(&EllipticParams::new(k, lambda, x1)?)?;
    let m2 = uniformized_weights(&EllipticParams::new(k, lambda, x2)?)?;
    let entries = closed_form_r(&m1, &m2)?;
    let sn_diff = jacobi_sn(x1 - x2, k)?;
    let w5 = ONE / (ONE + I * k.sqrt() * sn_diff);
    Ok(entries.scaled(w5).to_matrix())
}

/// The twelve functional equations tying the R-matrix entries to a pair of
/// on-curve weight sets; all twelve vanish on a solution. Returned in the
/// order: the four two-monomial relations, then the eight four-monomial
/// relations.
pub fn functional_equation_residuals(
    r: &MixedREntries,
    wp: &Mixed8VWeights,
    wpp: &Mixed8VWeights,
) -> [Complex64; 12] {
    let (bw1, bw5, bv1, bv5) = (r.w1, r.w5, r.v1, r.v5);
    let (w1p, w5p, v1p, v5p) = (wp.w1, wp.w5, wp.v1, wp.v5);
    let (w1q, w5q, v1q, v5q) = (wpp.w1, wpp.w5, wpp.v1, wpp.v5);
    [
        bw1 * w5p * w1q - bw5 * w1p * w5q,
        bw5 * v1p * v5q - bw1 * v5p * v1q,
        bv1 * w5p * v5q - bv5 * w1p * v1q,
        bv5 * v1p * w1q - bv1 * v5p * w5q,
        bw5 * v1p * w1q - bv1 * (w5p * w5q - v1p * v1q) - bw1 * w1p * v1q,
        bw5 * (v5p * w1q - w1p * v5q) - bv5 * w5p * w1q + bv1 * v5p * v1q,
        bw1 * w5p * v5q - bw5 * v5p * w5q + bv5 * (w5p * w5q - v1p * v1q),
        bw1 * (v5p * w1q - w1p * v5q) + bv1 * v1p * v5q - bv5 * w1p * w5q,
        bv1 * (w1p * w1q - v5p * v5q) - bw1 * v1p * w1q + bw5 * w1p * v1q,
        bv1 * w5p * w1q - bw5 * (v1p * w5q - w5p * v1q) - bv5 * v5p * v1q,
        bv5 * (w1p * w1q - v5p * v5q) + bw5 * w5p * v5q - bw1 * v5p * w5q,
        bv5 * v1p * v5q - bv1 * w1p * w5q + bw1 * (v1p * w5q - w5p * v1q),
    ]
}

/// The homogeneous quartic surface carrying the R-matrix entries, and its
/// gradient in the order `(∂w1, ∂w5, ∂v1, ∂v5)`.
pub fn surface_eval(
    r: &MixedREntries,
    inv: &InvariantPair,
) -> Result<(Complex64, [Complex64; 4])> {
    if inv.delta1.norm() == 0.0 {
        return Err(Error::Domain("surface needs Δ₁ != 0".into()));
    }
    let (w1, w5, v1, v5) = (r.w1, r.w5, r.v1, r.v5);
    let c = 4.0 * (ONE + inv.delta1 * inv.delta1 - inv.delta2 * inv.delta2) / inv.delta1;
    let sum_sq = v5 * v5 + w1 * w1 + w5 * w5;
    // product form (v5² − (w1+w5)²)(v5² − (w1−w5)²)
    let qp = v5 * v5 - (w1 + w5) * (w1 + w5);
    let qm = v5 * v5 - (w1 - w5) * (w1 - w5);
    let s = v1.powu(4) + c * v1 * v5 * w1 * w5 - 2.0 * v1 * v1 * sum_sq + qp * qm;
    let d_w1 = c * v1 * v5 * w5 - 4.0 * v1 * v1 * w1
        - 2.0 * (w1 + w5) * qm
        - 2.0 * (w1 - w5) * qp;
    let d_w5 = c * v1 * v5 * w1 - 4.0 * v1 * v1 * w5 - 2.0 * (w1 + w5) * qm
        + 2.0 * (w1 - w5) * qp;
    let d_v1 = 4.0 * v1 * v1 * v1 + c * v5 * w1 * w5 - 4.0 * v1 * sum_sq;
    let d_v5 = c * v1 * w1 * w5 - 4.0 * v1 * v1 * v5 + 2.0 * v5 * (qp + qm);
    Ok((s, [d_w1, d_w5, d_v1, d_v5]))
}

/// The twelve isolated singular points of the quartic surface, as
/// projective quadruples `[w1 : w5 : v1 : v5]`.
pub fn surface_singular_points() -> [[Complex64; 4]; 12] {
    let z = Complex64::new(0.0, 0.0);
    let o = ONE;
    [
        [z, o, z, o],
        [z, o, z, -o],
        [z, o, o, z],
        [z, o, -o, z],
        [o, o, z, z],
        [o, -o, z, z],
        [o, z, o, z],
        [o, z, -o, z],
        [o, z, z, o],
        [o, z, z, -o],
        [z, z, o, o],
        [z, z, o, -o],
    ]
}

/// Substituting the R-matrix entries into the invariant combinations yields
/// weight-dependent functions of the second point rather than constants:
///
/// ```text
/// F₁ = w1''·v1''/(w5''·v5''),
/// F₂ = (w1''² + v1''² − w5''² − v5''²)/(2·w5''·v5'')
/// ```
///
/// Both routes are evaluated and must agree; the second-point values are
/// returned. At coincident points the bold v entries vanish and the
/// left-hand route degenerates, in which case only the second-point values
/// are reported.
pub fn r_invariant_functions(
    m1: &Mixed8VWeights,
    m2: &Mixed8VWeights,
) -> Result<(Complex64, Complex64)> {
    let r = closed_form_r(m1, m2)?;
    let f1 = m2.w1 * m2.v1 / nonzero(m2.w5 * m2.v5, "F1")?;
    let f2 = (m2.w1 * m2.w1 + m2.v1 * m2.v1 - m2.w5 * m2.w5 - m2.v5 * m2.v5)
        / nonzero(2.0 * m2.w5 * m2.v5, "F2")?;
    let scale = [r.w1, r.w5, r.v1, r.v5]
        .iter()
        .map(|z| z.norm())
        .fold(0.0f64, f64::max);
    if r.v5.norm() <= 1e-12 * scale || r.v1.norm() <= 1e-12 * scale {
        // coincident-point degeneracy: R ∝ P
        return Ok((f1, f2));
    }
    let f1_bold = r.w5 * r.v1 / (r.w1 * r.v5);
    let f2_bold =
        (r.w1 * r.w1 + r.v5 * r.v5 - r.w5 * r.w5 - r.v1 * r.v1) / (2.0 * r.w1 * r.v5);
    if (f1_bold - f1).norm() > 1e-8 * f1.norm().max(1.0)
        || (f2_bold - f2).norm() > 1e-8 * f2.norm().max(1.0)
    {
        return Err(Error::Domain(format!(
            "R-entry invariant functions disagree: F1 {} vs {}, F2 {} vs {}",
            f1_bold, f1, f2_bold, f2
        )));
    }
    Ok((f1, f2))
}

/// Residual of the affine curve `x² − 2Δ₂xy + y² − Δ₁²x²y² − 1 = 0`
/// satisfied by `x = w1''/w5''`, `y = v5''/w5''` along the family.
pub fn affine_curve_residual(x: Complex64, y: Complex64, inv: &InvariantPair) -> Complex64 {
    x * x - 2.0 * inv.delta2 * x * y + y * y - inv.delta1 * inv.delta1 * x * x * y * y - ONE
}

/// The affine variable `y` recovered from the R-matrix entries and
/// `x = w1''/w5''` during the surface elimination.
pub fn eliminate_y(r: &MixedREntries, inv: &InvariantPair, x: Complex64) -> Result<Complex64> {
    let num = r.v5 * r.v5 - r.v1 * r.v1 + r.w1 * r.w1 - r.w5 * r.w5
        - 2.0 * inv.delta2 * r.v5 * r.w1 * x;
    let den = nonzero(
        2.0 * r.v5 * r.w1 * (inv.delta1 * inv.delta1 * x * x - ONE),
        "y elimination",
    )?;
    Ok(num / den)
}

/// Pauli matrices.
pub fn sigma_x() -> CMatrix {
    from_rows(2, 2, &[cx(0.0), cx(1.0), cx(1.0), cx(0.0)])
}
pub fn sigma_y() -> CMatrix {
    from_rows(
        2,
        2,
        &[
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ],
    )
}
pub fn sigma_z() -> CMatrix {
    from_rows(2, 2, &[cx(1.0), cx(0.0), cx(0.0), cx(-1.0)])
}

/// Parameters of the Hermitian chain: angle `θ`, radius `κ` and overall
/// coupling `J`. The transverse field and Dzyaloshinsky-Moriya couplings
/// `h = κ·cosθ`, `D = κ·sinθ` lie on a circle of radius `κ`, corresponding
/// to invariants `Δ₁ = e^{−2iθ}`, `Δ₂ = 2e^{−iθ}/κ`.
#[derive(Debug, Clone, Copy)]
pub struct MixedChainParams {
    pub theta: f64,
    pub kappa: f64,
    pub j: f64,
}

impl MixedChainParams {
    pub fn h(&self) -> f64 {
        self.kappa * self.theta.cos()
    }
    pub fn d(&self) -> f64 {
        self.kappa * self.theta.sin()
    }
    pub fn gamma(&self) -> f64 {
        (1.0 + self.d() * self.d()).sqrt()
    }
    pub fn delta1(&self) -> Complex64 {
        (-2.0 * I * self.theta).exp()
    }
    pub fn delta2(&self) -> Complex64 {
        2.0 * (-I * Complex64::from(self.theta)).exp() / self.kappa
    }
}

fn chain_from_bond(bond: &CMatrix, l: usize) -> CMatrix {
    assert!(l >= 2);
    let dim = 1usize << l;
    let mut h = Array2::zeros((dim, dim));
    for j in 0..l {
        h += &embed_two_site(bond, 2, l, j, (j + 1) % l);
    }
    h
}

/// Periodic chain `−J Σ_j (σᶻ_j σᶻ_{j+1} + h·σˣ_j + D·σʸ_j σᶻ_{j+1})`,
/// Hermitian for real parameters.
pub fn mixed_hamiltonian(p: &MixedChainParams, l: usize) -> CMatrix {
    let bond = (kron(&sigma_z(), &sigma_z())
        + kron(&sigma_x(), &eye(2)) * cx(p.h())
        + kron(&sigma_y(), &sigma_z()) * cx(p.d()))
        * cx(-p.j);
    chain_from_bond(&bond, l)
}

/// The same chain for arbitrary complex invariants,
/// `−J Σ_j (σᶻσᶻ + ((Δ₁+1)/Δ₂)·σˣ_j + i((Δ₁−1)/Δ₂)·σʸσᶻ)`; generally
/// non-Hermitian.
pub fn mixed_hamiltonian_general(
    delta1: Complex64,
    delta2: Complex64,
    j: f64,
    l: usize,
) -> Result<CMatrix> {
    let d2 = nonzero(delta2, "mixed chain couplings")?;
    let a = (delta1 + ONE) / d2;
    let b = I * (delta1 - ONE) / d2;
    let bond = (kron(&sigma_z(), &sigma_z())
        + kron(&sigma_x(), &eye(2)) * a
        + kron(&sigma_y(), &sigma_z()) * b)
        * cx(-j);
    Ok(chain_from_bond(&bond, l))
}

/// Two-site operator of the Hamiltonian limit of the symmetric family in
/// matrix form, with expansion coefficients `ẇ5` (additive constant, kept
/// explicit) and `v̇5`; the constraints of the invariant curve fix
/// `ẇ1 − ẇ5 = Δ₂·v̇5` and `v̇1 = Δ₁·v̇5`.
pub fn two_site_mixed_limit(
    inv: &InvariantPair,
    w5_dot: Complex64,
    v5_dot: Complex64,
) -> CMatrix {
    let w1_dot = w5_dot + inv.delta2 * v5_dot;
    let v1_dot = inv.delta1 * v5_dot;
    let z = Complex64::new(0.0, 0.0);
    from_rows(
        4,
        4,
        &[
            w1_dot, z, v1_dot, z, //
            z, w5_dot, z, v5_dot, //
            v5_dot, z, w5_dot, z, //
            z, v1_dot, z, w1_dot,
        ],
    )
}

/// XY chain with perpendicular field and a Dzyaloshinsky-Moriya term:
/// `−J Σ ((1+γ)/2·σˣσˣ + (1−γ)/2·σʸσʸ + h·σᶻ_j + D/2·(σˣσʸ − σʸσˣ))`
/// with `γ = √(1+D²)`; unitarily equivalent to [`mixed_hamiltonian`].
pub fn xy_dm_hamiltonian(p: &MixedChainParams, l: usize) -> CMatrix {
    let (h, d, g) = (p.h(), p.d(), p.gamma());
    let bond = (kron(&sigma_x(), &sigma_x()) * cx((1.0 + g) / 2.0)
        + kron(&sigma_y(), &sigma_y()) * cx((1.0 - g) / 2.0)
        + kron(&sigma_z(), &eye(2)) * cx(h)
        + (kron(&sigma_x(), &sigma_y()) - kron(&sigma_y(), &sigma_x())) * cx(d / 2.0))
        * cx(-p.j);
    chain_from_bond(&bond, l)
}

/// Parameters `(U, V)` of the Pauli rotation carrying the `σᶻσᶻ` chain onto
/// the XY form: `U = (√(1+iD) + √(1−iD)) / (2(1+D²)^{1/4})` and
/// `V = −D/(2γU)`, satisfying `U² + V² = 1`.
pub fn canonical_transform_uv(d: f64) -> (Complex64, Complex64) {
    let gamma = (1.0 + d * d).sqrt();
    let u = ((ONE + I * d).sqrt() + (ONE - I * d).sqrt()) / (2.0 * gamma.sqrt());
    let u = Complex64::from(u.re); // sum of conjugates, real by construction
    let v = if d == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        -Complex64::from(d) / (2.0 * gamma * u)
    };
    (u, v)
}

/// Symmetric even eight-vertex weights `a, b, c, d` in Baxter form.
#[derive(Debug, Clone, Copy)]
pub struct SymEvenWeights {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl SymEvenWeights {
    pub fn to_even8v(&self) -> crate::vertex::Even8VWeights {
        crate::vertex::Even8VWeights::symmetric(self.a, self.b, self.c, self.d)
    }

    /// Invariants of the even model: `Δ₁ = cd/(ab)`,
    /// `Δ₂ = (a²+b²−c²−d²)/(2ab)`.
    pub fn invariants(&self) -> Result<InvariantPair> {
        let ab = nonzero(self.a * self.b, "even invariants")?;
        Ok(InvariantPair {
            delta1: self.c * self.d / ab,
            delta2: (self.a * self.a + self.b * self.b - self.c * self.c - self.d * self.d)
                / (2.0 * ab),
        })
    }
}

/// Weight correspondence between the mixed and even models on the same
/// elliptic curve: `w1 = a, v5 = b, w5 = c, v1 = d`.
pub fn mixed_to_sym_even(m: &Mixed8VWeights) -> SymEvenWeights {
    SymEvenWeights {
        a: m.w1,
        b: m.v5,
        c: m.w5,
        d: m.v1,
    }
}

/// Baxter's constants `Γ, Δ` with `Δ₁ = (1−Γ)/(1+Γ)` and `Δ₂ = Δ(1+Γ)`.
#[derive(Debug, Clone, Copy)]
pub struct BaxterParams {
    pub gamma_b: Complex64,
    pub delta_b: Complex64,
}

impl BaxterParams {
    pub fn from_invariants(inv: &InvariantPair) -> Result<Self> {
        let gamma_b = (ONE - inv.delta1) / nonzero(ONE + inv.delta1, "Baxter Γ")?;
        let delta_b = inv.delta2 / nonzero(ONE + gamma_b, "Baxter Δ")?;
        Ok(Self { gamma_b, delta_b })
    }

    pub fn invariants(&self) -> InvariantPair {
        InvariantPair {
            delta1: (ONE - self.gamma_b) / (ONE + self.gamma_b),
            delta2: self.delta_b * (ONE + self.gamma_b),
        }
    }
}

/// Closed-form R-matrix of the symmetric even eight-vertex model for two
/// on-curve weight sets, normalized to `c = 1`; assembled as
/// `[[a,0,0,d],[0,b,c,0],[0,c,b,0],[d,0,0,a]]`.
pub fn baxter_even_r(e1: &SymEvenWeights, e2: &SymEvenWeights) -> Result<CMatrix> {
    let i1 = e1.invariants()?;
    let i2 = e2.invariants()?;
    if !i1.close_to(&i2, ON_CURVE_TOL) {
        return Err(Error::Domain(
            "even weight sets are not on the same invariant curve".into(),
        ));
    }
    let (a1, b1, c1, d1) = (e1.a, e1.b, e1.c, e1.d);
    let (a2, b2, c2, d2) = (e2.a, e2.b, e2.c, e2.d);
    let common = nonzero(b1 * b2 - a1 * a2, "even R denominator")?;
    let quart = nonzero(c1 * c1 * a2 * a2 - a1 * a1 * d2 * d2, "even R denominator")?;
    let bc = ONE;
    let ba = bc * (a2 * a2 / (c2 * c2)) * (c1 * c2 - d1 * d2)
        * (c1 * c1 * b2 * b2 - a1 * a1 * c2 * c2)
        / (common * quart);
    let bb = bc * (a2 * b2 / nonzero(c2 * d2, "even R denominator")?) * (c1 * d2 - d1 * c2)
        / common;
    let bd = bc * (d2 * a2 / nonzero(b2 * c2, "even R denominator")?) * (b1 * a2 - a1 * b2)
        * (c1 * c1 * b2 * b2 - a1 * a1 * c2 * c2)
        / (common * quart);
    let z = Complex64::new(0.0, 0.0);
    Ok(from_rows(
        4,
        4,
        &[
            ba, z, z, bd, //
            z, bb, bc, z, //
            z, bc, bb, z, //
            bd, z, z, ba,
        ],
    ))
}

/// Invariants of the zero-field Ising weights together with the
/// commutativity combination `2·sinh(2βJ_h)·sinh(2βJ_v)`; transfer matrices
/// at couplings sharing that combination commute.
pub fn onsager_check(p: &IsingParams) -> Result<(Complex64, Complex64, Complex64)> {
    let zero_field = IsingParams { hfield: 0.0, ..*p };
    let m = crate::equivmap::ising_mixed8v(&zero_field, crate::equivmap::MapKind::A);
    let inv = invariants_of(&m)?;
    let rhs = 2.0 * (2.0 * p.beta * p.jh).sinh() * (2.0 * p.beta * p.jv).sinh();
    Ok((inv.delta1, inv.delta2, cx(rhs)))
}
