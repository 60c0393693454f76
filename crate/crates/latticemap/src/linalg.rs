//! Dense complex linear algebra shared by all modules: Kronecker products,
//! traces of matrix powers, eigen-spectra and nullspace extraction.
//!
//! Matrices are stored row-major with 0-based indices; anything quoted
//! 1-based elsewhere is translated at module boundaries. Eigenvalue and
//! singular value decompositions are delegated to LAPACK through
//! `ndarray-linalg`.

use crate::{Error, Result};
use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, SVD};
use num_complex::Complex64;

/// Dense complex matrix, row-major.
pub type CMatrix = Array2<Complex64>;

/// Default relative tolerance for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Shorthand for a real scalar as a complex number.
pub fn cx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Build a matrix from a row-major slice.
pub fn from_rows(rows: usize, cols: usize, entries: &[Complex64]) -> CMatrix {
    Array2::from_shape_vec((rows, cols), entries.to_vec()).expect("shape mismatch")
}

/// Identity matrix of size `n`.
pub fn eye(n: usize) -> CMatrix {
    Array2::eye(n)
}

/// Sum of diagonal entries.
pub fn trace(m: &CMatrix) -> Complex64 {
    m.diag().sum()
}

/// Frobenius norm.
pub fn frob(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry magnitude.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Largest entry-wise difference between two matrices of equal shape.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.dim(), b.dim(), "comparing matrices of different shapes");
    a.iter()
        .zip(b.iter())
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).norm()))
}

/// Relative commutator residual `‖AB − BA‖ / (‖A‖·‖B‖)`.
pub fn commutator_residual(a: &CMatrix, b: &CMatrix) -> f64 {
    let ab = a.dot(b);
    let ba = b.dot(a);
    let scale = frob(a) * frob(b);
    if scale == 0.0 {
        return 0.0;
    }
    frob(&(&ab - &ba)) / scale
}

/// Kronecker product with `entry((i·rb+k),(j·cb+l)) = a(i,j)·b(k,l)`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = Array2::zeros((ra * rb, ca * cb));
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[(i, j)];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[(i * rb + k, j * cb + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Trace of the `p`-th matrix power, computed by repeated multiplication.
/// Only the running product is kept in memory.
pub fn mat_trace_power(t: &CMatrix, p: u32) -> Result<Complex64> {
    let (r, c) = t.dim();
    if r != c {
        return Err(Error::Dimension(format!(
            "trace power needs a square matrix, got {r}x{c}"
        )));
    }
    if p == 0 {
        return Err(Error::Dimension("power must be >= 1".into()));
    }
    let mut acc = t.clone();
    for _ in 1..p {
        acc = acc.dot(t);
    }
    Ok(trace(&acc))
}

/// Orthonormal basis of the numerical kernel of a matrix.
#[derive(Debug, Clone)]
pub struct NullspaceResult {
    /// Unit-norm, mutually orthogonal kernel vectors.
    pub basis: Vec<Array1<Complex64>>,
    /// Number of singular values above the tolerance.
    pub rank: usize,
    /// Largest singular value that was treated as zero.
    pub residual: f64,
}

/// Kernel `{v : ‖Av‖ ≤ tol·‖A‖}` via singular value decomposition.
///
/// Singular directions with `σ ≤ tol·σ_max` span the kernel; the zero matrix
/// has a full kernel. Deterministic for fixed input.
pub fn nullspace(a: &CMatrix, tol: f64) -> Result<NullspaceResult> {
    if tol <= 0.0 {
        return Err(Error::Domain("nullspace tolerance must be positive".into()));
    }
    let cols = a.ncols();
    let (_, s, vt) = a
        .svd(false, true)
        .map_err(|e| Error::Backend(format!("svd: {e}")))?;
    let vt = vt.expect("requested V^H");
    let smax = s.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = tol * smax;
    let mut basis = Vec::new();
    let mut residual = 0.0f64;
    let mut rank = 0usize;
    for (i, &sigma) in s.iter().enumerate() {
        if sigma <= cutoff {
            residual = residual.max(sigma);
            basis.push(vt.row(i).mapv(|z| z.conj()));
        } else {
            rank += 1;
        }
    }
    // Rows of V^H beyond the number of singular values (cols > rows case)
    // are exact kernel directions.
    for i in s.len()..cols.min(vt.nrows()) {
        basis.push(vt.row(i).mapv(|z| z.conj()));
    }
    debug_assert_eq!(rank + basis.len(), cols);
    Ok(NullspaceResult {
        basis,
        rank,
        residual,
    })
}

/// Eigenvalues sorted lexicographically by (real, imaginary) part.
pub fn eig_spectrum(a: &CMatrix) -> Result<Vec<Complex64>> {
    let (r, c) = a.dim();
    if r != c {
        return Err(Error::Dimension(format!(
            "eigenvalues need a square matrix, got {r}x{c}"
        )));
    }
    let (vals, _) = a
        .eig()
        .map_err(|e| Error::Backend(format!("eig did not converge: {e}")))?;
    let mut vals = vals.to_vec();
    vals.sort_by(|p, q| {
        p.re.partial_cmp(&q.re)
            .unwrap()
            .then(p.im.partial_cmp(&q.im).unwrap())
    });
    Ok(vals)
}
