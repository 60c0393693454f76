//! The two spin→vertex correspondences, their transfer-element identities,
//! and the Ising instantiations.
//!
//! Map A sends `w(i1,i2|i3,i4) = W_h(i3,i1)·W_v(i3,i2)·δ_{i1,i4}`; the
//! resulting row-to-row vertex transfer matrix reproduces, element by
//! element, the diagonal-to-diagonal spin transfer matrix with horizontal
//! and vertical weights interchanged. Map B sends
//! `w(i1,i2|i3,i4) = W_v(i3,i1)·W_h(i1,i2)·δ_{i1,i4}` and matches the spin
//! row-to-row transfer matrix exactly. Either way the equivalent vertex
//! model has `n³` non-null weights and the toroidal partition functions
//! coincide at finite size.

use crate::linalg::{cx, max_abs_diff};
use crate::spin::{t_diag, t_row, EdgeWeights, IsingParams};
use crate::vertex::{t_vertex, Mixed8VWeights, Sixteen16VWeights, VertexTensor};
use crate::{Error, Result};
use num_complex::Complex64;

/// Which of the two spin→vertex weight assignments to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    A,
    B,
}

/// Build the equivalent vertex tensor from spin edge weights.
pub fn map_spin_to_vertex(ew: &EdgeWeights, kind: MapKind) -> VertexTensor {
    let n = ew.n;
    let mut t = VertexTensor::zeros(n);
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                let v = match kind {
                    MapKind::A => ew.wh[(i3, i1)] * ew.wv[(i3, i2)],
                    MapKind::B => ew.wv[(i3, i1)] * ew.wh[(i1, i2)],
                };
                t.set(i1, i2, i3, i1, v);
            }
        }
    }
    t
}

/// Maximum element-wise deviation between the vertex transfer matrix and its
/// spin-side counterpart: the h/v-swapped diagonal transfer matrix for map A,
/// the row transfer matrix for map B.
pub fn verify_transfer_identity(ew: &EdgeWeights, kind: MapKind, l: usize) -> Result<f64> {
    let t_ver = t_vertex(&map_spin_to_vertex(ew, kind), l)?;
    let target = match kind {
        MapKind::A => t_diag(&ew.swapped(), l)?,
        MapKind::B => t_row(ew, l)?,
    };
    Ok(max_abs_diff(&t_ver, &target))
}

/// Closed-form mixed eight-vertex weights of the Ising model in a field.
pub fn ising_mixed8v(p: &IsingParams, kind: MapKind) -> Mixed8VWeights {
    let b = p.beta;
    let (jh, jv, h) = (p.jh, p.jv, p.hfield);
    let e = |x: f64| cx((b * x).exp());
    match kind {
        MapKind::A => Mixed8VWeights {
            w1: e(jh + jv + h),
            w2: e(jh + jv - h),
            w5: e(-jh + jv + h / 2.0),
            w6: e(-jh + jv - h / 2.0),
            v1: e(jh - jv + h / 2.0),
            v2: e(jh - jv - h / 2.0),
            v5: e(-jh - jv),
            v6: e(-jh - jv),
        },
        MapKind::B => Mixed8VWeights {
            w1: e(jh + jv + h),
            w2: e(jh + jv - h),
            w5: e(-jh - jv),
            w6: e(-jh - jv),
            v1: e(-jh + jv + h / 2.0),
            v2: e(-jh + jv - h / 2.0),
            v5: e(jh - jv - h / 2.0),
            v6: e(jh - jv + h / 2.0),
        },
    }
}

/// Sixteen-vertex weights equivalent to the isotropic Ising model in a
/// field (coupling `J = jh`). Requires `J > 0` for the `√tanh` branch.
pub fn liwu_sixteen(p: &IsingParams) -> Result<Sixteen16VWeights> {
    let b = p.beta;
    let j = p.jh;
    if j <= 0.0 {
        return Err(Error::Domain(
            "isotropic coupling must be positive for the sqrt(tanh) branch".into(),
        ));
    }
    let bh = b * p.hfield;
    let bj = b * j;
    let omega1 = 2.0 * bh.cosh() * bj.cosh().powi(2);
    let omega2 = 2.0 * bh.cosh() * bj.sinh().powi(2);
    let omega_rest = bh.cosh() * (2.0 * bj).sinh();
    let root_tanh = bj.tanh().sqrt();
    let v_a = 2.0 * bh.sinh() * bj.cosh().powi(2) * root_tanh;
    let v_b = 2.0 * bh.sinh() * bj.sinh().powi(2) / root_tanh;
    let mut w = [cx(omega_rest); 8];
    w[0] = cx(omega1);
    w[1] = cx(omega2);
    let mut v = [Complex64::new(0.0, 0.0); 8];
    for (i, slot) in v.iter_mut().enumerate() {
        // v1,v3,v6,v8 carry the √tanh class, v2,v4,v5,v7 the 1/√tanh class
        *slot = if [0, 2, 5, 7].contains(&i) {
            cx(v_a)
        } else {
            cx(v_b)
        };
    }
    Ok(Sixteen16VWeights { w, v })
}
