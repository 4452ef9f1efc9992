//! Power-iteration spectral radius of symmetric non-negative matrices and
//! the closed forms for the `d(a,b)` sequence family.

use crate::error::Error;
use crate::metrics::{distance_matrix, terminal_distance_matrix};
use crate::tree::Tree;
use crate::Result;

/// Default relative tolerance for the power iteration.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default iteration cap.
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Result of a dominant-eigenvalue solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Dominant eigenvalue (Rayleigh quotient at termination).
    pub radius: f64,
    /// Unit-norm dominant eigenvector.
    pub perron: Vec<f64>,
    /// Iterations performed.
    pub iterations: usize,
    /// `max |A v - lambda v|` at termination.
    pub residual: f64,
}

fn mat_vec(n: usize, a: &[f64], v: &[f64], out: &mut [f64]) {
    for i in 0..n {
        let row = &a[i * n..(i + 1) * n];
        out[i] = row.iter().zip(v).map(|(&x, &y)| x * y).sum();
    }
}

/// Power iteration on a symmetric entrywise non-negative matrix, given
/// row-major as `n * n` entries.
///
/// Starts from the normalized all-ones vector and stops when
/// `max |A v - lambda v| <= tol * max(1, lambda)`.
pub fn spectral_radius(n: usize, a: &[f64], tol: f64, max_iter: usize) -> Result<SpectralResult> {
    assert_eq!(a.len(), n * n, "matrix size mismatch");
    assert!(tol > 0.0, "tolerance must be positive");
    for i in 0..n {
        for j in (i + 1)..n {
            if a[i * n + j] != a[j * n + i] {
                return Err(Error::Asymmetric(i, j));
            }
            if a[i * n + j] < 0.0 {
                return Err(Error::InvalidArgument(format!("negative entry at ({i},{j})")));
            }
        }
    }

    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    for it in 1..=max_iter {
        mat_vec(n, a, &v, &mut w);
        // v is unit norm, so the Rayleigh quotient is just v . w.
        let lambda: f64 = v.iter().zip(&w).map(|(&x, &y)| x * y).sum();
        let residual = v
            .iter()
            .zip(&w)
            .map(|(&x, &y)| (y - lambda * x).abs())
            .fold(0.0, f64::max);
        if residual <= tol * lambda.abs().max(1.0) {
            return Ok(SpectralResult { radius: lambda, perron: v, iterations: it, residual });
        }
        let norm: f64 = w.iter().map(|&x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            // Zero matrix (or zero image): radius 0, keep the start vector.
            return Ok(SpectralResult { radius: 0.0, perron: v, iterations: it, residual: 0.0 });
        }
        for (x, &y) in v.iter_mut().zip(&w) {
            *x = y / norm;
        }
    }
    mat_vec(n, a, &v, &mut w);
    let lambda: f64 = v.iter().zip(&w).map(|(&x, &y)| x * y).sum();
    let residual = v
        .iter()
        .zip(&w)
        .map(|(&x, &y)| (y - lambda * x).abs())
        .fold(0.0, f64::max);
    Err(Error::NotConverged { iterations: max_iter, residual })
}

/// Terminal distance spectral radius of a tree.
pub fn tdsr(t: &Tree, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    let rd = terminal_distance_matrix(t);
    spectral_radius(rd.leaf_count(), &rd.to_dense(), tol, max_iter)
}

/// Distance spectral radius of a tree.
pub fn dsr(t: &Tree, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    let d = distance_matrix(t);
    spectral_radius(d.order(), &d.to_dense(), tol, max_iter)
}

/// Closed-form terminal distance spectral radius of the greedy tree of
/// `d(a,b)`: the positive root of
/// `x^2 - 2(2a+b-3)x - 8(a+b-1) - ab = 0`.
pub fn tdsr_ab_closed(a: usize, b: usize) -> f64 {
    let (a, b) = (a as f64, b as f64);
    2.0 * a + b - 3.0 + (4.0 * a * a + b * b + 5.0 * a * b - 4.0 * a + 2.0 * b + 1.0).sqrt()
}

/// Closed-form average terminal-distance row sum for `d(a,b)`:
/// `2(2a+b)(1 - 1/(a+b))`.
pub fn tlb_ab_closed(a: usize, b: usize) -> f64 {
    let (a, b) = (a as f64, b as f64);
    2.0 * (2.0 * a + b) * (1.0 - 1.0 / (a + b))
}

/// Relative gap `1 - TLB/TUB` for `d(a,b)` in closed form.
pub fn terr_ab(a: usize, b: usize) -> f64 {
    1.0 - tlb_ab_closed(a, b) / tdsr_ab_closed(a, b)
}

/// Limit of the worst-case relative gap over the `d(a,b)` family:
/// `(3 sqrt 2 - 4) / (3 sqrt 2 + 4)`, just under 3%.
pub fn terr_limit() -> f64 {
    let s = 3.0 * 2f64.sqrt();
    (s - 4.0) / (s + 4.0)
}

/// Continuous maximizer `a(n) = (n - 8)/3 + 2 sqrt 2` of the relative gap
/// at fixed `n = a + b`.
pub fn extremal_a(n: f64) -> f64 {
    (n - 8.0) / 3.0 + 2.0 * 2f64.sqrt()
}
