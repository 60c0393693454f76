//! Yang-Baxter machinery: residuals for the RLL algebra and the R-only
//! Yang-Baxter equation, unitarity checks, and the linear solver that
//! recovers an R-matrix from a pair of Lax operators.
//!
//! All residuals are relative Frobenius norms of the defining relations,
//! evaluated on the `n³`-dimensional triple space with spaces 1 and 2 the
//! auxiliary legs and space 3 the quantum leg.

use crate::linalg::{eye, frob, kron, max_abs, nullspace, trace, CMatrix};
use crate::vertex::permutation_matrix;
use crate::{Error, Result};
use ndarray::Array2;
use num_complex::Complex64;

/// Embed an `n²×n²` operator on legs (1,3) of `C^n ⊗ C^n ⊗ C^n`.
fn embed_13(m: &CMatrix, n: usize) -> CMatrix {
    let dim = n * n * n;
    let mut out = Array2::zeros((dim, dim));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for ap in 0..n {
                    for cp in 0..n {
                        out[((a * n + b) * n + c, (ap * n + b) * n + cp)] =
                            m[(a * n + c, ap * n + cp)];
                    }
                }
            }
        }
    }
    out
}

fn check_square(m: &CMatrix, dim: usize, what: &str) -> Result<()> {
    if m.dim() != (dim, dim) {
        return Err(Error::Dimension(format!(
            "{what} must be {dim}x{dim}, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

fn side_of(m: &CMatrix) -> Result<usize> {
    let d = m.nrows();
    let n = (d as f64).sqrt().round() as usize;
    if n * n != d || m.ncols() != d {
        return Err(Error::Dimension(format!(
            "operator must act on a tensor square, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(n)
}

/// Relative residual of `R₁₂·L₁₃·L₂₃ − L₂₃·L₁₃·R₁₂` on the triple space,
/// with `lax1` carrying the first weight set and `lax2` the second.
pub fn rll_residual(r: &CMatrix, lax1: &CMatrix, lax2: &CMatrix) -> Result<f64> {
    let n = side_of(r)?;
    check_square(lax1, n * n, "lax1")?;
    check_square(lax2, n * n, "lax2")?;
    let r12 = kron(r, &eye(n));
    let l13 = embed_13(lax1, n);
    let l23 = kron(&eye(n), lax2);
    let lhs = r12.dot(&l13).dot(&l23);
    let rhs = l23.dot(&l13).dot(&r12);
    let scale = frob(&lhs);
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok(frob(&(&lhs - &rhs)) / scale)
}

/// Relative residual of `R₁₂·R₁₃·R₂₃ − R₂₃·R₁₃·R₁₂`.
pub fn ybe_residual(r12: &CMatrix, r13: &CMatrix, r23: &CMatrix) -> Result<f64> {
    let n = side_of(r12)?;
    check_square(r13, n * n, "r13")?;
    check_square(r23, n * n, "r23")?;
    let a = kron(r12, &eye(n));
    let b = embed_13(r13, n);
    let c = kron(&eye(n), r23);
    let lhs = a.dot(&b).dot(&c);
    let rhs = c.dot(&b).dot(&a);
    let scale = frob(&lhs);
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok(frob(&(&lhs - &rhs)) / scale)
}

/// Deviation of `M = R(x₁,x₂)·P·R(x₂,x₁)·P` from a multiple of the
/// identity, together with that multiple `Tr(M)/dim`.
pub fn unitarity_residual(r_ab: &CMatrix, r_ba: &CMatrix) -> Result<(f64, Complex64)> {
    let n = side_of(r_ab)?;
    check_square(r_ba, n * n, "r_ba")?;
    let p = permutation_matrix(n);
    let m = r_ab.dot(&p.dot(r_ba).dot(&p));
    let c = trace(&m) / (n * n) as f64;
    let dev = &m - &(eye(n * n) * c);
    let scale = frob(&m);
    let residual = if scale == 0.0 {
        frob(&dev)
    } else {
        frob(&dev) / scale
    };
    Ok((residual, c))
}

/// Outcome of a numerical R-matrix solve.
#[derive(Debug, Clone)]
pub struct RSolveReport {
    /// Normalized solution when the kernel is one-dimensional, otherwise the
    /// first normalized basis vector.
    pub r: CMatrix,
    /// Dimension of the solution space of the stacked system.
    pub kernel_dim: usize,
    /// Largest RLL residual of `r` over the supplied pairs.
    pub residual: f64,
    /// Every kernel basis vector reshaped to an `n²×n²` matrix.
    pub basis: Vec<CMatrix>,
    /// The sparsity mask applied to the unknowns, if any.
    pub mask: Option<Vec<bool>>,
}

/// Scale to unit Frobenius norm and rotate the first significant entry
/// (row-major order) onto the positive real axis. Idempotent.
pub fn normalize_r(r: &CMatrix) -> CMatrix {
    let norm = frob(r);
    if norm == 0.0 {
        return r.clone();
    }
    let scaled = r.mapv(|z| z / norm);
    let threshold = 1e-8 * max_abs(&scaled);
    match scaled.iter().find(|z| z.norm() > threshold) {
        Some(z) => {
            let phase = z / z.norm();
            scaled.mapv(|w| w / phase)
        }
        None => scaled,
    }
}

/// Solve `R₁₂·L₁₃·L'₂₃ = L'₂₃·L₁₃·R₁₂` for `R` as a homogeneous linear
/// system: the `n⁴` entries of `R` (or the masked subset) are the unknowns
/// and every pair contributes `n⁶` equations. With `M = L₁₃L'₂₃` and
/// `N = L'₂₃L₁₃`, equation `(abq),(cdr)` reads
///
/// ```text
/// Σ_ef  R[(ab),(ef)]·M[(ef q),(cd r)] − N[(ab q),(ef r)]·R[(ef),(cd)] = 0
/// ```
///
/// The kernel of the stacked system is extracted with [`nullspace`].
pub fn solve_r(
    pairs: &[(CMatrix, CMatrix)],
    tol: f64,
    mask: Option<&[bool]>,
) -> Result<RSolveReport> {
    if pairs.is_empty() {
        return Err(Error::Dimension("need at least one Lax pair".into()));
    }
    let n = side_of(&pairs[0].0)?;
    let nn = n * n;
    let unknown_full = nn * nn;
    let active: Vec<usize> = match mask {
        Some(m) => {
            if m.len() != unknown_full {
                return Err(Error::Dimension(format!(
                    "mask must have {unknown_full} entries"
                )));
            }
            (0..unknown_full).filter(|&i| m[i]).collect()
        }
        None => (0..unknown_full).collect(),
    };
    let mut col_of = vec![None; unknown_full];
    for (col, &u) in active.iter().enumerate() {
        col_of[u] = Some(col);
    }

    let rows_per_pair = n.pow(6);
    let mut system: CMatrix = Array2::zeros((rows_per_pair * pairs.len(), active.len()));
    for (pi, (lax1, lax2)) in pairs.iter().enumerate() {
        check_square(lax1, nn, "lax1")?;
        check_square(lax2, nn, "lax2")?;
        let l13 = embed_13(lax1, n);
        let l23 = kron(&eye(n), lax2);
        let m = l13.dot(&l23);
        let nmat = l23.dot(&l13);
        let mut row = pi * rows_per_pair;
        for ab in 0..nn {
            for q in 0..n {
                for cd in 0..nn {
                    for r in 0..n {
                        for ef in 0..nn {
                            if let Some(col) = col_of[ab * nn + ef] {
                                system[(row, col)] += m[(ef * n + q, cd * n + r)];
                            }
                            if let Some(col) = col_of[ef * nn + cd] {
                                system[(row, col)] -= nmat[(ab * n + q, ef * n + r)];
                            }
                        }
                        row += 1;
                    }
                }
            }
        }
    }

    let ns = nullspace(&system, tol)?;
    let expand = |v: &ndarray::Array1<Complex64>| -> CMatrix {
        let mut full = Array2::zeros((nn, nn));
        for (k, &u) in active.iter().enumerate() {
            full[(u / nn, u % nn)] = v[k];
        }
        full
    };
    let basis: Vec<CMatrix> = ns.basis.iter().map(|v| normalize_r(&expand(v))).collect();
    let r = match basis.first() {
        Some(m) => m.clone(),
        None => Array2::zeros((nn, nn)),
    };
    let mut residual = 0.0f64;
    if !basis.is_empty() {
        for (lax1, lax2) in pairs {
            residual = residual.max(rll_residual(&r, lax1, lax2)?);
        }
    }
    Ok(RSolveReport {
        r,
        kernel_dim: basis.len(),
        residual,
        basis,
        mask: mask.map(|m| m.to_vec()),
    })
}

/// Zero-pattern voting over sample solutions: an entry stays active only if
/// its magnitude reaches `rel_tol` times the largest entry in at least one
/// sample.
pub fn vote_zero_mask(samples: &[CMatrix], rel_tol: f64) -> Vec<bool> {
    assert!(!samples.is_empty());
    let nn = samples[0].nrows();
    let mut mask = vec![false; nn * nn];
    for s in samples {
        let cutoff = rel_tol * max_abs(s);
        for (u, z) in s.iter().enumerate() {
            if z.norm() >= cutoff {
                mask[u] = true;
            }
        }
    }
    mask
}
