//! Dense real matrices, a cyclic Jacobi eigensolver and spectrum bookkeeping.

mod jacobi;
mod spectrum;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};

pub use jacobi::{sym_eigenvalues, sym_eigenvalues_default, CONV_TOL, MAX_SWEEPS};
pub use spectrum::{char_poly_coeffs, group_spectrum, max_deviation, multiset_equal, Spectrum, GROUP_TOL, ZERO_TOL};

/// Relative tolerance of the symmetry certificate.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Row-major dense matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                what: "matrix data",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds a matrix from equally long rows.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    what: "matrix row",
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                what: "matrix product inner dimension",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// `self * self^T`.
    pub fn gram(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v: f64 = self.row(i).iter().zip(self.row(j)).map(|(a, b)| a * b).sum();
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        out
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| f64::max(m, x.abs()))
    }

    /// Largest `|a_ij - a_ji|`; infinite for non-square input.
    pub fn asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    /// Symmetry certificate: `max|a_ij - a_ji| <= 1e-12 * max(1, max|a_ij|)`.
    pub fn is_symmetric(&self) -> bool {
        self.asymmetry() <= SYMMETRY_TOL * self.max_abs().max(1.0)
    }

    pub(crate) fn check_symmetric(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric {
                deviation: self.asymmetry(),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Conjugates an equitable quotient matrix by `D^{1/2}` where
/// `D = diag(part_sizes)`, returning `D^{1/2} z D^{-1/2}`.
///
/// A quotient of a symmetric matrix has entries `z_ij = n_j * c_ij` with
/// `c` symmetric, so the conjugate is symmetric with the same eigenvalues.
/// The result must pass the symmetry certificate; failure means `z` is not
/// the quotient it claims to be.
pub fn symmetrize_quotient(z: &DenseMatrix, part_sizes: &[usize]) -> Result<DenseMatrix> {
    if !z.is_square() {
        return Err(Error::NotSquare {
            rows: z.rows(),
            cols: z.cols(),
        });
    }
    if part_sizes.len() != z.rows() {
        return Err(Error::LengthMismatch {
            what: "quotient part sizes",
            expected: z.rows(),
            found: part_sizes.len(),
        });
    }
    if part_sizes.contains(&0) {
        return Err(Error::Parameters("quotient part sizes must be positive".into()));
    }
    let roots: Vec<f64> = part_sizes.iter().map(|&n| libm::sqrt(n as f64)).collect();
    let n = z.rows();
    let mut out = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = if part_sizes[i] == part_sizes[j] {
                z[(i, j)]
            } else {
                z[(i, j)] * roots[i] / roots[j]
            };
        }
    }
    out.check_symmetric()?;
    Ok(out)
}
