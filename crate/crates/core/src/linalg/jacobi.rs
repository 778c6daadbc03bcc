use alloc::vec::Vec;

use super::DenseMatrix;
use crate::error::{Error, Result};

/// Default relative convergence target for the off-diagonal norm.
pub const CONV_TOL: f64 = 1e-12;
/// Sweep cap; hitting it is reported as [`Error::NoConvergence`].
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix by the cyclic Jacobi method.
///
/// Sweeps visit the pairs `(i, j)`, `i < j`, in row order and annihilate each
/// off-diagonal entry with one plane rotation. Iteration stops once the
/// off-diagonal Frobenius norm drops to `conv_tol` times the Frobenius norm
/// of the input. The values are returned in diagonal order (unsorted).
pub fn sym_eigenvalues(m: &DenseMatrix, conv_tol: f64) -> Result<Vec<f64>> {
    m.check_symmetric()?;
    let n = m.rows();
    let mut a = m.clone();
    // exact symmetrization; the certificate above tolerates rounding-level asymmetry
    for i in 0..n {
        for j in i + 1..n {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }

    let target = conv_tol * a.frobenius_norm();
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= target {
            return Ok(diagonal(&a));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if off_norm(&a) <= target {
        return Ok(diagonal(&a));
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

/// [`sym_eigenvalues`] at [`CONV_TOL`].
pub fn sym_eigenvalues_default(m: &DenseMatrix) -> Result<Vec<f64>> {
    sym_eigenvalues(m, CONV_TOL)
}

fn diagonal(a: &DenseMatrix) -> Vec<f64> {
    (0..a.rows()).map(|i| a[(i, i)]).collect()
}

fn off_norm(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[(i, j)] * a[(i, j)];
        }
    }
    libm::sqrt(2.0 * sum)
}

/// Applies `A <- J^T A J` with the rotation that zeroes `a_pq`.
fn rotate(a: &mut DenseMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0, so the rotation angle stays below pi/4
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::hypot(theta, 1.0))
    } else {
        -1.0 / (-theta + libm::hypot(theta, 1.0))
    };
    let c = 1.0 / libm::hypot(t, 1.0);
    let s = t * c;
    let n = a.rows();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
}
