//! `n`-state vertex models: weight tensors, Lax operators, row-to-row
//! transfer matrices, the brute-force partition oracle, named-slot records
//! for the eight- and sixteen-vertex families, and the vertex-side
//! Hamiltonian limit.
//!
//! The Lax operator acts on `aux ⊗ quantum` with the auxiliary index most
//! significant and layout
//!
//! ```text
//! ⟨a', q' | L | a, q⟩ = w(q, a | q', a')
//! ```
//!
//! fixed so that the mixed eight-vertex and 27-vertex slot records reproduce
//! their reference matrices entry for entry (see the tests). At the
//! permutator tensor `w(i1,i2|i3,i4) = δ_{i1,i4}·δ_{i2,i3}` the Lax operator
//! is the swap operator `P`, which the constructor self-checks.

use crate::basis::configurations;
use crate::linalg::CMatrix;
use crate::{checked_dim, checked_enum, Error, Result};
use ndarray::Array2;
use num_complex::Complex64;

/// Rank-4 vertex weight tensor `w(i1,i2|i3,i4)`, each index in `0..n`.
#[derive(Debug, Clone)]
pub struct VertexTensor {
    pub n: usize,
    w: Vec<Complex64>,
}

impl VertexTensor {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 2);
        Self {
            n,
            w: vec![Complex64::new(0.0, 0.0); n * n * n * n],
        }
    }

    /// Permutator point: `w(i1,i2|i3,i4) = δ_{i1,i4}·δ_{i2,i3}`.
    pub fn permutator(n: usize) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, j, i, Complex64::new(1.0, 0.0));
            }
        }
        t
    }

    #[inline]
    fn idx(&self, i1: usize, i2: usize, i3: usize, i4: usize) -> usize {
        ((i1 * self.n + i2) * self.n + i3) * self.n + i4
    }

    #[inline]
    pub fn get(&self, i1: usize, i2: usize, i3: usize, i4: usize) -> Complex64 {
        self.w[self.idx(i1, i2, i3, i4)]
    }

    #[inline]
    pub fn set(&mut self, i1: usize, i2: usize, i3: usize, i4: usize, v: Complex64) {
        let k = self.idx(i1, i2, i3, i4);
        self.w[k] = v;
    }

    pub fn count_nonzero(&self) -> usize {
        self.w.iter().filter(|z| z.norm() > 0.0).count()
    }
}

/// The eight weights of the mixed eight-vertex model.
#[derive(Debug, Clone, Copy)]
pub struct Mixed8VWeights {
    pub w1: Complex64,
    pub w2: Complex64,
    pub w5: Complex64,
    pub w6: Complex64,
    pub v1: Complex64,
    pub v2: Complex64,
    pub v5: Complex64,
    pub v6: Complex64,
}

impl Mixed8VWeights {
    /// Arrow-reversal symmetric manifold `w2=w1, w6=w5, v2=v1, v6=v5`.
    pub fn symmetric(w1: Complex64, w5: Complex64, v1: Complex64, v5: Complex64) -> Self {
        Self {
            w1,
            w2: w1,
            w5,
            w6: w5,
            v1,
            v2: v1,
            v5,
            v6: v5,
        }
    }
}

/// The eight weights of the even eight-vertex model.
#[derive(Debug, Clone, Copy)]
pub struct Even8VWeights {
    pub a_plus: Complex64,
    pub a_minus: Complex64,
    pub b_plus: Complex64,
    pub b_minus: Complex64,
    pub c_plus: Complex64,
    pub c_minus: Complex64,
    pub d_plus: Complex64,
    pub d_minus: Complex64,
}

impl Even8VWeights {
    /// Fully symmetric Baxter form `a,b,c,d`.
    pub fn symmetric(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self {
            a_plus: a,
            a_minus: a,
            b_plus: b,
            b_minus: b,
            c_plus: c,
            c_minus: c,
            d_plus: d,
            d_minus: d,
        }
    }

    /// Free-fermion combination `a₊a₋ + b₊b₋ − c₊c₋ − d₊d₋`.
    pub fn free_fermion_combination(&self) -> Complex64 {
        self.a_plus * self.a_minus + self.b_plus * self.b_minus
            - self.c_plus * self.c_minus
            - self.d_plus * self.d_minus
    }
}

/// All sixteen weights of the general two-state vertex model.
#[derive(Debug, Clone, Copy)]
pub struct Sixteen16VWeights {
    /// Even-arrow weights `w1..w8`.
    pub w: [Complex64; 8],
    /// Odd-arrow weights `v1..v8`.
    pub v: [Complex64; 8],
}

/// Build the `n²×n²` Lax matrix from a weight tensor.
///
/// Panics never; the permutator self-check is a debug assertion exercised by
/// the unit tests.
pub fn lax_from_tensor(t: &VertexTensor) -> CMatrix {
    let n = t.n;
    let mut l = Array2::zeros((n * n, n * n));
    for ap in 0..n {
        for qp in 0..n {
            for a in 0..n {
                for q in 0..n {
                    l[(ap * n + qp, a * n + q)] = t.get(q, a, qp, ap);
                }
            }
        }
    }
    l
}

/// Swap operator on `C^n ⊗ C^n`.
pub fn permutation_matrix(n: usize) -> CMatrix {
    let mut p = Array2::zeros((n * n, n * n));
    for a in 0..n {
        for q in 0..n {
            p[(q * n + a, a * n + q)] = Complex64::new(1.0, 0.0);
        }
    }
    p
}

/// Row-to-row transfer matrix `Tr_aux[L_{A,L} ⋯ L_{A,1}]` built from any
/// `n²×n²` operator on `aux ⊗ quantum` (a Lax matrix or an R-matrix with its
/// second argument frozen).
///
/// Element `(q'_1…q'_L),(q_1…q_L)` is the trace of the ordered product of
/// per-site auxiliary matrices `A_j[α,β] = ⟨β,q_j → α,q'_j⟩`.
pub fn transfer_from_lax(lax: &CMatrix, n: usize, l: usize) -> Result<CMatrix> {
    if lax.dim() != (n * n, n * n) {
        return Err(Error::Dimension(format!(
            "lax must be {0}x{0}",
            n * n
        )));
    }
    let dim = checked_dim(n, l)?;
    let mut t = Array2::zeros((dim, dim));
    // aux-block view: block[(α,β)][(q',q)] = lax[(α n + q'),(β n + q)];
    // the ordered product runs site 1 → site L so that the auxiliary chain
    // closes with the orientation of the reference element law
    // (checked element-wise against the spin transfer matrices).
    for (row, qs_out) in configurations(n, l).enumerate() {
        for (col, qs_in) in configurations(n, l).enumerate() {
            let mut acc: Option<Array2<Complex64>> = None;
            for j in 0..l {
                let mut a_j = Array2::zeros((n, n));
                for alpha in 0..n {
                    for beta in 0..n {
                        a_j[(alpha, beta)] = lax[(alpha * n + qs_out[j], beta * n + qs_in[j])];
                    }
                }
                acc = Some(match acc {
                    None => a_j,
                    Some(m) => m.dot(&a_j),
                });
            }
            t[(row, col)] = acc.expect("l >= 1").diag().sum();
        }
    }
    Ok(t)
}

/// Row-to-row transfer matrix of a vertex model.
pub fn t_vertex(t: &VertexTensor, l: usize) -> Result<CMatrix> {
    transfer_from_lax(&lax_from_tensor(t), t.n, l)
}

/// Exact toroidal partition sum over all link configurations,
/// `Σ Π_{i,j} w(α_{ij}, α_{ij+1} | γ_{ij}, γ_{i+1j})`.
pub fn z_vertex_bruteforce(t: &VertexTensor, l: usize) -> Result<Complex64> {
    let n = t.n;
    let links = (2 * l * l) as u32;
    let total = checked_enum(n, links)? as usize;
    let mut z = Complex64::new(0.0, 0.0);
    // first l² digits: horizontal links α, next l²: vertical links γ
    let mut cfg = vec![0usize; 2 * l * l];
    for step in 0..total {
        if step > 0 {
            // odometer increment
            let mut pos = cfg.len();
            loop {
                pos -= 1;
                cfg[pos] += 1;
                if cfg[pos] < n {
                    break;
                }
                cfg[pos] = 0;
            }
        }
        let alpha = |i: usize, j: usize| cfg[(i % l) * l + (j % l)];
        let gamma = |i: usize, j: usize| cfg[l * l + (i % l) * l + (j % l)];
        // Slot pairing follows the auxiliary/quantum chaining of the
        // transfer product: the horizontal link between columns j and j+1
        // is slot i2 of vertex (i,j) and slot i4 of vertex (i,j+1), the
        // vertical link between rows i and i+1 is slot i3 of (i,j) and
        // slot i1 of (i+1,j).
        let mut prod = Complex64::new(1.0, 0.0);
        for i in 0..l {
            for j in 0..l {
                prod *= t.get(gamma(i, j), alpha(i, j + 1), gamma(i + 1, j), alpha(i, j));
                if prod == Complex64::new(0.0, 0.0) {
                    break;
                }
            }
            if prod == Complex64::new(0.0, 0.0) {
                break;
            }
        }
        z += prod;
    }
    Ok(z)
}

/// Tensor of the mixed eight-vertex model. Slots:
/// `w1=w(+,+|+,+)`, `w2=w(−,−|−,−)`, `w5=w(−,+|+,−)`, `w6=w(+,−|−,+)`,
/// `v1=w(+,−|+,+)`, `v2=w(−,+|−,−)`, `v5=w(−,−|+,−)`, `v6=w(+,+|−,+)`
/// with `+ → 0`, `− → 1`.
pub fn tensor_from_mixed8v(m: &Mixed8VWeights) -> VertexTensor {
    let mut t = VertexTensor::zeros(2);
    t.set(0, 0, 0, 0, m.w1);
    t.set(1, 1, 1, 1, m.w2);
    t.set(1, 0, 0, 1, m.w5);
    t.set(0, 1, 1, 0, m.w6);
    t.set(0, 1, 0, 0, m.v1);
    t.set(1, 0, 1, 1, m.v2);
    t.set(1, 1, 0, 1, m.v5);
    t.set(0, 0, 1, 0, m.v6);
    t
}

/// Read the eight mixed-model slots back from a tensor.
pub fn mixed8v_from_tensor(t: &VertexTensor) -> Mixed8VWeights {
    assert_eq!(t.n, 2);
    Mixed8VWeights {
        w1: t.get(0, 0, 0, 0),
        w2: t.get(1, 1, 1, 1),
        w5: t.get(1, 0, 0, 1),
        w6: t.get(0, 1, 1, 0),
        v1: t.get(0, 1, 0, 0),
        v2: t.get(1, 0, 1, 1),
        v5: t.get(1, 1, 0, 1),
        v6: t.get(0, 0, 1, 0),
    }
}

/// Tensor of the even eight-vertex model. Slots:
/// `a₊=w(+,+|+,+)`, `a₋=w(−,−|−,−)`, `b₊=w(−,+|−,+)`, `b₋=w(+,−|+,−)`,
/// `c₊=w(+,−|−,+)`, `c₋=w(−,+|+,−)`, `d₊=w(−,−|+,+)`, `d₋=w(+,+|−,−)`.
pub fn tensor_from_even8v(e: &Even8VWeights) -> VertexTensor {
    let mut t = VertexTensor::zeros(2);
    t.set(0, 0, 0, 0, e.a_plus);
    t.set(1, 1, 1, 1, e.a_minus);
    t.set(1, 0, 1, 0, e.b_plus);
    t.set(0, 1, 0, 1, e.b_minus);
    t.set(0, 1, 1, 0, e.c_plus);
    t.set(1, 0, 0, 1, e.c_minus);
    t.set(1, 1, 0, 0, e.d_plus);
    t.set(0, 0, 1, 1, e.d_minus);
    t
}

/// Tensor of the full sixteen-vertex model. Even slots follow the even
/// eight-vertex assignment with `(w1,w2,w5,w6)` on the `a,c` families and
/// `(w3,w4,w7,w8)` on `b,d`; odd slots `v1,v2,v5,v6` follow the mixed-model
/// record, and the remaining odd slots pair under arrow reversal as
/// `v3 ↔ v4` and `v7 ↔ v8`.
pub fn tensor_from_sixteen(s: &Sixteen16VWeights) -> VertexTensor {
    let mut t = VertexTensor::zeros(2);
    let [w1, w2, w3, w4, w5, w6, w7, w8] = s.w;
    let [v1, v2, v3, v4, v5, v6, v7, v8] = s.v;
    // even family: (w1,w2)=(a+,a−), (w3,w4)=(b−,b+), (w5,w6)=(c−,c+), (w7,w8)=(d−,d+)
    t.set(0, 0, 0, 0, w1);
    t.set(1, 1, 1, 1, w2);
    t.set(0, 1, 0, 1, w3);
    t.set(1, 0, 1, 0, w4);
    t.set(1, 0, 0, 1, w5);
    t.set(0, 1, 1, 0, w6);
    t.set(0, 0, 1, 1, w7);
    t.set(1, 1, 0, 0, w8);
    // odd family; the v7/v8 slots are pinned by the partition equality with
    // the isotropic in-field Ising model, which selects this bipartition of
    // the one-minus slots uniquely (see the exhaustive check in the tests)
    t.set(0, 1, 0, 0, v1);
    t.set(1, 0, 1, 1, v2);
    t.set(1, 0, 0, 0, v3);
    t.set(0, 1, 1, 1, v4);
    t.set(1, 1, 0, 1, v5);
    t.set(0, 0, 1, 0, v6);
    t.set(1, 1, 1, 0, v7);
    t.set(0, 0, 0, 1, v8);
    t
}

/// First-order vertex weight expansion around the permutator point
/// `w(ε) = P + ε·ẇ`.
#[derive(Debug, Clone)]
pub struct VertexHamiltonianLimit {
    pub w_dot: VertexTensor,
}

/// Two-site operator `Σ ẇ(i1,i2|i3,i4)·e_{i3,i2} ⊗ e_{i1,i4}`.
fn two_site_vertex(hl: &VertexHamiltonianLimit) -> CMatrix {
    let n = hl.w_dot.n;
    let mut op = Array2::zeros((n * n, n * n));
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                for i4 in 0..n {
                    let v = hl.w_dot.get(i1, i2, i3, i4);
                    if v != Complex64::new(0.0, 0.0) {
                        op[(i3 * n + i1, i2 * n + i4)] += v;
                    }
                }
            }
        }
    }
    op
}

/// Periodic chain Hamiltonian from the vertex-side two-site operator.
///
/// The two-site operator is embedded with its first tensor factor on the
/// `j+1` neighbor of each bond: that is the orientation in which the
/// auxiliary chain of [`t_vertex`] closes, so the result is the exact
/// first-order expansion of `T⁻¹(0)·T(ε)` for any weight tensor (see the
/// finite-difference test).
pub fn vertex_hamiltonian(hl: &VertexHamiltonianLimit, l: usize) -> CMatrix {
    assert!(l >= 2, "chain needs at least two sites");
    let n = hl.w_dot.n;
    let op = two_site_vertex(hl);
    let dim = n.pow(l as u32);
    let mut h = Array2::zeros((dim, dim));
    for j in 0..l {
        h += &crate::spin::embed_two_site(&op, n, l, (j + 1) % l, j);
    }
    h
}

/// Conjugate the quantum leg of every Lax operator by `m`, i.e. replace
/// the tensor by `w'(i1,i2|i3,i4) = Σ m(i3,a) w(i1,i2|a,b) m⁻¹(b,i4)`...
/// expressed on the Lax matrix as `(I ⊗ m)·L·(I ⊗ m)⁻¹`. Used by the gauge
/// invariance checks.
pub fn conjugate_quantum(t: &VertexTensor, m: &CMatrix, m_inv: &CMatrix) -> Result<VertexTensor> {
    let n = t.n;
    if m.dim() != (n, n) || m_inv.dim() != (n, n) {
        return Err(Error::Dimension("gauge matrix must be n x n".into()));
    }
    let lax = lax_from_tensor(t);
    let g = crate::linalg::kron(&crate::linalg::eye(n), m);
    let g_inv = crate::linalg::kron(&crate::linalg::eye(n), m_inv);
    let conj = g.dot(&lax).dot(&g_inv);
    Ok(tensor_from_lax(&conj, n))
}

/// Inverse of [`lax_from_tensor`].
pub fn tensor_from_lax(lax: &CMatrix, n: usize) -> VertexTensor {
    let mut t = VertexTensor::zeros(n);
    for ap in 0..n {
        for qp in 0..n {
            for a in 0..n {
                for q in 0..n {
                    t.set(q, a, qp, ap, lax[(ap * n + qp, a * n + q)]);
                }
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::pack;
    use crate::linalg::{cx, frob, from_rows, mat_trace_power, max_abs_diff};
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_tensor(n: usize, seed: u64) -> VertexTensor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = VertexTensor::zeros(n);
        for i1 in 0..n {
            for i2 in 0..n {
                for i3 in 0..n {
                    for i4 in 0..n {
                        t.set(i1, i2, i3, i4, cx(rng.gen_range(0.5..1.5)));
                    }
                }
            }
        }
        t
    }

    #[test]
    fn lax_of_permutator_is_swap() {
        for n in [2usize, 3] {
            let lax = lax_from_tensor(&VertexTensor::permutator(n));
            assert_eq!(lax, permutation_matrix(n));
        }
    }

    /// Reference layout fixture: the mixed eight-vertex Lax matrix is
    /// `[[w1,0,v1,0],[v6,0,w6,0],[0,w5,0,v5],[0,v2,0,w2]]` in the ordered
    /// basis `|++⟩,|+−⟩,|−+⟩,|−−⟩`.
    #[test]
    fn mixed8v_lax_reference_matrix() {
        let m = Mixed8VWeights {
            w1: cx(1.0),
            w2: cx(2.0),
            w5: cx(5.0),
            w6: cx(6.0),
            v1: cx(10.0),
            v2: cx(20.0),
            v5: cx(50.0),
            v6: cx(60.0),
        };
        let lax = lax_from_tensor(&tensor_from_mixed8v(&m));
        let want = from_rows(
            4,
            4,
            &[
                cx(1.0),
                cx(0.0),
                cx(10.0),
                cx(0.0),
                cx(60.0),
                cx(0.0),
                cx(6.0),
                cx(0.0),
                cx(0.0),
                cx(5.0),
                cx(0.0),
                cx(50.0),
                cx(0.0),
                cx(20.0),
                cx(0.0),
                cx(2.0),
            ],
        );
        assert_eq!(lax, want);
    }

    /// Reference layout fixture: the even eight-vertex Lax matrix is
    /// `[[a₊,0,0,d₊],[0,b₊,c₊,0],[0,c₋,b₋,0],[d₋,0,0,a₋]]`.
    #[test]
    fn even8v_lax_reference_matrix() {
        let e = Even8VWeights {
            a_plus: cx(1.0),
            a_minus: cx(2.0),
            b_plus: cx(3.0),
            b_minus: cx(4.0),
            c_plus: cx(5.0),
            c_minus: cx(6.0),
            d_plus: cx(7.0),
            d_minus: cx(8.0),
        };
        let lax = lax_from_tensor(&tensor_from_even8v(&e));
        let want = from_rows(
            4,
            4,
            &[
                cx(1.0),
                cx(0.0),
                cx(0.0),
                cx(7.0),
                cx(0.0),
                cx(3.0),
                cx(5.0),
                cx(0.0),
                cx(0.0),
                cx(6.0),
                cx(4.0),
                cx(0.0),
                cx(8.0),
                cx(0.0),
                cx(0.0),
                cx(2.0),
            ],
        );
        assert_eq!(lax, want);
    }

    #[test]
    fn even8v_off_diagonal_block_pattern() {
        let e = Even8VWeights {
            a_plus: cx(0.0),
            a_minus: cx(0.0),
            b_plus: cx(0.0),
            b_minus: cx(0.0),
            c_plus: cx(1.0),
            c_minus: cx(1.0),
            d_plus: cx(0.0),
            d_minus: cx(0.0),
        };
        let lax = lax_from_tensor(&tensor_from_even8v(&e));
        let mut want = Array2::zeros((4, 4));
        want[(1, 2)] = cx(1.0);
        want[(2, 1)] = cx(1.0);
        assert_eq!(lax, want);
    }

    #[test]
    fn mixed8v_slot_readback_roundtrip() {
        let m = Mixed8VWeights {
            w1: cx(1.5),
            w2: cx(2.5),
            w5: cx(0.5),
            w6: cx(0.25),
            v1: cx(3.0),
            v2: cx(4.0),
            v5: cx(5.0),
            v6: cx(6.0),
        };
        let t = tensor_from_mixed8v(&m);
        assert_eq!(t.count_nonzero(), 8);
        let back = mixed8v_from_tensor(&t);
        assert_eq!(back.w1, m.w1);
        assert_eq!(back.w2, m.w2);
        assert_eq!(back.w5, m.w5);
        assert_eq!(back.w6, m.w6);
        assert_eq!(back.v1, m.v1);
        assert_eq!(back.v2, m.v2);
        assert_eq!(back.v5, m.v5);
        assert_eq!(back.v6, m.v6);
        // mixed condition: w(i1,i2|i3,i4) = 0 whenever i1 ≠ i4
        for i1 in 0..2 {
            for i2 in 0..2 {
                for i3 in 0..2 {
                    for i4 in 0..2 {
                        if i1 != i4 {
                            assert_eq!(t.get(i1, i2, i3, i4), cx(0.0));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sixteen_single_odd_slot() {
        let mut s = Sixteen16VWeights {
            w: [cx(0.0); 8],
            v: [cx(0.0); 8],
        };
        s.v[0] = cx(1.0);
        let t = tensor_from_sixteen(&s);
        assert_eq!(t.count_nonzero(), 1);
        assert_eq!(t.get(0, 1, 0, 0), cx(1.0));
    }

    #[test]
    fn sixteen_all_ones_partition() {
        let s = Sixteen16VWeights {
            w: [cx(1.0); 8],
            v: [cx(1.0); 8],
        };
        let t = tensor_from_sixteen(&s);
        assert_eq!(t.count_nonzero(), 16);
        let z = z_vertex_bruteforce(&t, 2).unwrap();
        assert_abs_diff_eq!(z.re, 256.0, epsilon = 1e-10);
    }

    #[test]
    fn transfer_of_permutator_is_translation() {
        // At the permutator point the L=2 transfer matrix is the two-site
        // cyclic shift.
        let t = t_vertex(&VertexTensor::permutator(2), 2).unwrap();
        let mut shift = Array2::zeros((4, 4));
        for s1 in 0..2usize {
            for s2 in 0..2usize {
                shift[(pack(&[s2, s1], 2), pack(&[s1, s2], 2))] = cx(1.0);
            }
        }
        assert_eq!(t, shift);
    }

    #[test]
    fn transfer_all_ones_l1() {
        let mut t = VertexTensor::zeros(2);
        for i1 in 0..2 {
            for i2 in 0..2 {
                for i3 in 0..2 {
                    for i4 in 0..2 {
                        t.set(i1, i2, i3, i4, cx(1.0));
                    }
                }
            }
        }
        let tv = t_vertex(&t, 1).unwrap();
        for z in tv.iter() {
            assert_abs_diff_eq!(z.re, 2.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn transfer_trace_matches_bruteforce() {
        let t = random_tensor(2, 31);
        for l in [2usize, 3] {
            let tr = mat_trace_power(&t_vertex(&t, l).unwrap(), l as u32).unwrap();
            let z = z_vertex_bruteforce(&t, l).unwrap();
            assert!((tr - z).norm() <= 1e-10 * z.norm());
        }
    }

    #[test]
    fn bruteforce_fixtures() {
        let mut ones = VertexTensor::zeros(2);
        for i in 0..16 {
            ones.w[i] = cx(1.0);
        }
        assert_abs_diff_eq!(
            z_vertex_bruteforce(&ones, 2).unwrap().re,
            256.0,
            epsilon = 1e-10
        );

        // permutator: frozen after cross-checking Tr[translation²] = 4
        let p = VertexTensor::permutator(2);
        let z = z_vertex_bruteforce(&p, 2).unwrap();
        let tr = mat_trace_power(&t_vertex(&p, 2).unwrap(), 2).unwrap();
        assert_abs_diff_eq!(z.re, 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(tr.re, 4.0, epsilon = 1e-12);
    }

    #[test]
    fn gauge_invariance_of_transfer_trace() {
        let t = random_tensor(2, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = from_rows(
            2,
            2,
            &[
                cx(rng.gen_range(0.5..1.5)),
                cx(rng.gen_range(-0.5..0.5)),
                cx(rng.gen_range(-0.5..0.5)),
                cx(rng.gen_range(0.5..1.5)),
            ],
        );
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        let m_inv = from_rows(
            2,
            2,
            &[
                m[(1, 1)] / det,
                -m[(0, 1)] / det,
                -m[(1, 0)] / det,
                m[(0, 0)] / det,
            ],
        );
        let conj = conjugate_quantum(&t, &m, &m_inv).unwrap();
        for l in [2usize, 3] {
            let tr0 = mat_trace_power(&t_vertex(&t, l).unwrap(), l as u32).unwrap();
            let tr1 = mat_trace_power(&t_vertex(&conj, l).unwrap(), l as u32).unwrap();
            assert!((tr0 - tr1).norm() <= 1e-9 * tr0.norm());
        }
    }

    #[test]
    fn vertex_hamiltonian_zero_and_finite_difference() {
        let zero = VertexHamiltonianLimit {
            w_dot: VertexTensor::zeros(2),
        };
        assert_eq!(frob(&vertex_hamiltonian(&zero, 2)), 0.0);

        // finite difference of the logarithm of the transfer matrix around
        // the permutator point
        let n = 2;
        let l = 3;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        // random expansion direction within the n^3-weight family the
        // two correspondences produce (w = 0 for i1 != i4)
        let mut w_dot = VertexTensor::zeros(n);
        for i1 in 0..n {
            for i2 in 0..n {
                for i3 in 0..n {
                    w_dot.set(i1, i2, i3, i1, cx(rng.gen_range(-0.5..0.5)));
                }
            }
        }
        let hl = VertexHamiltonianLimit {
            w_dot: w_dot.clone(),
        };
        let eps = 1e-6;
        let tensor_at = |e: f64| {
            let mut t = VertexTensor::permutator(n);
            for i1 in 0..n {
                for i2 in 0..n {
                    for i3 in 0..n {
                        for i4 in 0..n {
                            let v = t.get(i1, i2, i3, i4) + e * w_dot.get(i1, i2, i3, i4);
                            t.set(i1, i2, i3, i4, v);
                        }
                    }
                }
            }
            t
        };
        let t0 = t_vertex(&VertexTensor::permutator(n), l).unwrap();
        // translation operator: inverse is the transpose
        let t0_inv = t0.t().to_owned();
        let tp = t_vertex(&tensor_at(eps), l).unwrap();
        let fd = (&t0_inv.dot(&tp) - &crate::linalg::eye(n.pow(l as u32))) / cx(eps);
        let h = vertex_hamiltonian(&hl, l);
        assert!(max_abs_diff(&fd, &h) <= 1e-4);
    }

    #[test]
    fn vertex_size_caps() {
        let t = VertexTensor::permutator(2);
        assert!(matches!(
            t_vertex(&t, 64),
            Err(crate::Error::SizeCap { .. })
        ));
        assert!(matches!(
            z_vertex_bruteforce(&t, 4),
            Err(crate::Error::EnumCap { .. })
        ));
    }
}
