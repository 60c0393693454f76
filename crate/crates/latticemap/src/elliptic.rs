//! Jacobi elliptic functions `sn`, `cn`, `dn` of complex argument with real
//! modulus `k ∈ [0, 1)`.
//!
//! Real arguments use the descending Landen/AGM recursion; complex arguments
//! are reached through the Jacobi imaginary transformation combined with the
//! addition formulas, i.e. the real/imaginary split
//!
//! ```text
//! sn(x+iy, k) = (s·d1 + i·c·d·s1·c1) / (c1² + k²·s²·s1²)
//! ```
//!
//! with `s,c,d` at modulus `k` and `s1,c1,d1` at the complementary modulus.
//! Accuracy is guaranteed inside the first pole strip `|Im u| < K'(k)`;
//! outside it the split formulas remain periodic but lose digits near the
//! poles, which are reported as explicit domain errors.

use crate::{Error, Result};
use num_complex::Complex64;

/// Parameters of the elliptic uniformization: modulus `k`, crossing
/// parameter `λ` and spectral point `x`.
#[derive(Debug, Clone, Copy)]
pub struct EllipticParams {
    pub k: f64,
    pub lambda: f64,
    pub x: Complex64,
}

impl EllipticParams {
    /// Requires `0 < k < 1` and finite `λ > 0`. Callers must keep
    /// `λ < K'(k)` to stay below the pole strip of `sn(iλ, k)`.
    pub fn new(k: f64, lambda: f64, x: Complex64) -> Result<Self> {
        if !(0.0 < k && k < 1.0) {
            return Err(Error::Domain(format!("modulus k={k} outside (0,1)")));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::Domain(format!("lambda={lambda} must be finite and positive")));
        }
        if !x.is_finite() {
            return Err(Error::Domain("spectral point must be finite".into()));
        }
        Ok(Self { k, lambda, x })
    }
}

const SMALL_MODULUS: f64 = 1e-12;
const OVERFLOW: f64 = 1e12;

/// Complete elliptic integral of the first kind `K(k)` by AGM iteration.
pub fn complete_k(k: f64) -> f64 {
    assert!((0.0..1.0).contains(&k), "modulus outside [0,1)");
    let mut a = 1.0f64;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    std::f64::consts::PI / (2.0 * a)
}

/// Complementary integral `K'(k) = K(√(1−k²))`.
pub fn complete_k_prime(k: f64) -> f64 {
    complete_k((1.0 - k * k).sqrt())
}

/// `sn`, `cn`, `dn` for real argument via the AGM/Landen recursion.
fn sncndn_real(u: f64, k: f64) -> (f64, f64, f64) {
    if k.abs() < SMALL_MODULUS {
        return (u.sin(), u.cos(), 1.0);
    }
    let kp = (1.0 - k * k).sqrt();
    let mut a = vec![1.0f64];
    let mut c = vec![k];
    let mut b = kp;
    let mut n = 0usize;
    while c[n] > f64::EPSILON * a[n] && n < 60 {
        let an = 0.5 * (a[n] + b);
        let cn = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        a.push(an);
        c.push(cn);
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for i in (1..=n).rev() {
        let s = (c[i] / a[i] * phi.sin()).clamp(-1.0, 1.0);
        phi = 0.5 * (phi + s.asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    let dn = (1.0 - (k * sn) * (k * sn)).max(0.0).sqrt();
    (sn, cn, dn)
}

fn jacobi_all(u: Complex64, k: f64) -> Result<(Complex64, Complex64, Complex64)> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!("modulus k={k} outside [0,1)")));
    }
    if !u.is_finite() {
        return Err(Error::Domain("elliptic argument must be finite".into()));
    }
    if k < SMALL_MODULUS {
        return Ok((u.sin(), u.cos(), Complex64::new(1.0, 0.0)));
    }
    let kp = (1.0 - k * k).sqrt();
    let (s, c, d) = sncndn_real(u.re, k);
    let (s1, c1, d1) = sncndn_real(u.im, kp);
    let denom = c1 * c1 + (k * s * s1) * (k * s * s1);
    if denom.abs() < 1e-290 {
        return Err(Error::Domain(format!("elliptic pole at u={u}")));
    }
    let sn = Complex64::new(s * d1, c * d * s1 * c1) / denom;
    let cn = Complex64::new(c * c1, -s * d * s1 * d1) / denom;
    let dn = Complex64::new(d * c1 * d1, -k * k * s * c * s1) / denom;
    for v in [sn, cn, dn] {
        if !v.is_finite() || v.norm() > OVERFLOW {
            return Err(Error::Domain(format!("elliptic pole at u={u}")));
        }
    }
    Ok((sn, cn, dn))
}

/// Jacobi `sn(u, k)` for complex `u`.
pub fn jacobi_sn(u: Complex64, k: f64) -> Result<Complex64> {
    jacobi_all(u, k).map(|(sn, _, _)| sn)
}

/// Jacobi `cn(u, k)` for complex `u`.
pub fn jacobi_cn(u: Complex64, k: f64) -> Result<Complex64> {
    jacobi_all(u, k).map(|(_, cn, _)| cn)
}

/// Jacobi `dn(u, k)` for complex `u`.
pub fn jacobi_dn(u: Complex64, k: f64) -> Result<Complex64> {
    jacobi_all(u, k).map(|(_, _, dn)| dn)
}
