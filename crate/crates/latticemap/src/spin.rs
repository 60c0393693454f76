//! `n`-state spin models with nearest-neighbor edge weights: transfer
//! matrices in both layerings, the brute-force partition sum and the
//! spin-side Hamiltonian limit.
//!
//! On the `L×L` torus the partition function is
//! `Z = Σ Π W_h(σ_{i,j},σ_{i,j+1})·W_v(σ_{i,j},σ_{i+1,j})`, recoverable as
//! `Tr[T^L]` for either transfer layering.

use crate::basis::{configurations, pack, unpack};
use crate::linalg::{cx, CMatrix};
use crate::{checked_dim, checked_enum, Result};
use ndarray::Array2;
use num_complex::Complex64;

/// Horizontal and vertical edge weight matrices of an `n`-state spin model.
#[derive(Debug, Clone)]
pub struct EdgeWeights {
    pub n: usize,
    /// `wh[(a,b)] = W_h(a,b)`
    pub wh: CMatrix,
    /// `wv[(a,b)] = W_v(a,b)`
    pub wv: CMatrix,
}

impl EdgeWeights {
    pub fn new(wh: CMatrix, wv: CMatrix) -> Result<Self> {
        let n = wh.nrows();
        if wh.dim() != (n, n) || wv.dim() != (n, n) || n < 2 {
            return Err(crate::Error::Dimension(
                "edge weights must be square n x n with n >= 2".into(),
            ));
        }
        if wh.iter().chain(wv.iter()).any(|z| !z.is_finite()) {
            return Err(crate::Error::Domain("edge weights must be finite".into()));
        }
        Ok(Self { n, wh, wv })
    }

    /// Same model with the roles of horizontal and vertical weights
    /// interchanged (a 90° rotation of the lattice).
    pub fn swapped(&self) -> Self {
        Self {
            n: self.n,
            wh: self.wv.clone(),
            wv: self.wh.clone(),
        }
    }
}

/// Couplings of the Ising model in a field.
#[derive(Debug, Clone, Copy)]
pub struct IsingParams {
    pub beta: f64,
    pub jh: f64,
    pub jv: f64,
    pub hfield: f64,
}

/// Ising edge weights in the spin basis, state order `(+,−) → (0,1)`:
/// `W_h(+,+) = e^{β(J_h+H/2)}`, `W_h(+,−) = W_h(−,+) = e^{−βJ_h}`,
/// `W_h(−,−) = e^{β(J_h−H/2)}`, and the analogous vertical matrix.
pub fn ising_edge_weights(p: &IsingParams) -> EdgeWeights {
    let b = p.beta;
    let edge = |j: f64| {
        let mut m = Array2::zeros((2, 2));
        m[(0, 0)] = cx((b * (j + p.hfield / 2.0)).exp());
        m[(0, 1)] = cx((-b * j).exp());
        m[(1, 0)] = cx((-b * j).exp());
        m[(1, 1)] = cx((b * (j - p.hfield / 2.0)).exp());
        m
    };
    EdgeWeights {
        n: 2,
        wh: edge(p.jh),
        wv: edge(p.jv),
    }
}

/// Diagonal-to-diagonal transfer matrix: element
/// `[(a_1…a_L),(b_1…b_L)] = Π_j W_v(a_j,b_j)·W_h(a_j,b_{j+1})` with
/// `b_{L+1} = b_1`. Site 1 is the most significant base-`n` digit.
pub fn t_diag(ew: &EdgeWeights, l: usize) -> Result<CMatrix> {
    let n = ew.n;
    let dim = checked_dim(n, l)?;
    let mut t = Array2::zeros((dim, dim));
    for (row, a) in configurations(n, l).enumerate() {
        for (col, b) in configurations(n, l).enumerate() {
            let mut prod = Complex64::new(1.0, 0.0);
            for j in 0..l {
                prod *= ew.wv[(a[j], b[j])] * ew.wh[(a[j], b[(j + 1) % l])];
            }
            t[(row, col)] = prod;
        }
    }
    Ok(t)
}

/// Row layering factor with element `Π_j W_v(a_j,b_j)`.
pub fn t_v_factor(ew: &EdgeWeights, l: usize) -> Result<CMatrix> {
    let n = ew.n;
    let dim = checked_dim(n, l)?;
    let mut t = Array2::zeros((dim, dim));
    for (row, a) in configurations(n, l).enumerate() {
        for (col, b) in configurations(n, l).enumerate() {
            let mut prod = Complex64::new(1.0, 0.0);
            for j in 0..l {
                prod *= ew.wv[(a[j], b[j])];
            }
            t[(row, col)] = prod;
        }
    }
    Ok(t)
}

/// Row layering factor with element `Π_j W_h(a_j,b_{j+1})·δ_{a_{j+1},b_{j+1}}`
/// (periodic); the deltas make it diagonal with entry `Π_j W_h(a_j,a_{j+1})`.
pub fn t_h_factor(ew: &EdgeWeights, l: usize) -> Result<CMatrix> {
    let n = ew.n;
    let dim = checked_dim(n, l)?;
    let mut t = Array2::zeros((dim, dim));
    for (row, a) in configurations(n, l).enumerate() {
        let mut prod = Complex64::new(1.0, 0.0);
        for j in 0..l {
            prod *= ew.wh[(a[j], a[(j + 1) % l])];
        }
        t[(row, row)] = prod;
    }
    Ok(t)
}

/// Row-to-row transfer matrix `T_row = T_v · T_h`.
pub fn t_row(ew: &EdgeWeights, l: usize) -> Result<CMatrix> {
    Ok(t_v_factor(ew, l)?.dot(&t_h_factor(ew, l)?))
}

/// Exact toroidal partition sum over all `n^{L²}` spin configurations.
pub fn z_spin_bruteforce(ew: &EdgeWeights, l: usize) -> Result<Complex64> {
    let n = ew.n;
    let sites = (l * l) as u32;
    let total = checked_enum(n, sites)? as usize;
    let mut z = Complex64::new(0.0, 0.0);
    for cfg in 0..total {
        let sigma = unpack(cfg, n, l * l);
        let at = |i: usize, j: usize| sigma[(i % l) * l + (j % l)];
        let mut prod = Complex64::new(1.0, 0.0);
        for i in 0..l {
            for j in 0..l {
                prod *= ew.wh[(at(i, j), at(i, j + 1))] * ew.wv[(at(i, j), at(i + 1, j))];
            }
        }
        z += prod;
    }
    Ok(z)
}

/// First-order edge-weight expansion coefficients around the identity point
/// `W_h = 1 + ε·Ẇ_h`, `W_v = δ + ε·Ẇ_v`.
#[derive(Debug, Clone)]
pub struct SpinHamiltonianLimit {
    pub wh_dot: CMatrix,
    pub wv_dot: CMatrix,
}

/// Two-site operator of the spin Hamiltonian limit on `(j, j+1)`:
/// `Σ Ẇ_h(i1,i2) e_{i1,i1}⊗e_{i2,i2} + Σ Ẇ_v(i1,i2) e_{i1,i2}⊗I`.
fn two_site_spin(hl: &SpinHamiltonianLimit) -> CMatrix {
    let n = hl.wh_dot.nrows();
    let mut op = Array2::zeros((n * n, n * n));
    for i1 in 0..n {
        for i2 in 0..n {
            // diagonal-diagonal coupling from the horizontal expansion
            op[(i1 * n + i2, i1 * n + i2)] += hl.wh_dot[(i1, i2)];
            // single-site hop from the vertical expansion, identity on the partner
            for i3 in 0..n {
                op[(i1 * n + i3, i2 * n + i3)] += hl.wv_dot[(i1, i2)];
            }
        }
    }
    op
}

/// Embed a two-site operator at sites `(site_a, site_b)` (0-based, distinct)
/// of an `L`-site chain with identity elsewhere.
pub fn embed_two_site(op: &CMatrix, n: usize, l: usize, site_a: usize, site_b: usize) -> CMatrix {
    assert!(site_a < l && site_b < l && site_a != site_b);
    let dim = n.pow(l as u32);
    let mut out = Array2::zeros((dim, dim));
    for (row, r) in configurations(n, l).enumerate() {
        for ca in 0..n {
            for cb in 0..n {
                let v = op[(r[site_a] * n + r[site_b], ca * n + cb)];
                if v == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let mut c = r.clone();
                c[site_a] = ca;
                c[site_b] = cb;
                out[(row, pack(&c, n))] += v;
            }
        }
    }
    out
}

/// Periodic chain Hamiltonian `Σ_{j=1}^{L−1} H_{j,j+1} + H_{L,1}` from the
/// spin-side two-site operator.
pub fn spin_hamiltonian(hl: &SpinHamiltonianLimit, l: usize) -> CMatrix {
    assert!(l >= 2, "chain needs at least two sites");
    let n = hl.wh_dot.nrows();
    let op = two_site_spin(hl);
    let dim = n.pow(l as u32);
    let mut h = Array2::zeros((dim, dim));
    for j in 0..l {
        h += &embed_two_site(&op, n, l, j, (j + 1) % l);
    }
    h
}
