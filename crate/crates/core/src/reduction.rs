//! Dimension reduction of the adjacency spectrum.
//!
//! For `A = [[O, B], [B^T, O]]` with `p <= q`,
//! `phi(A, x) = x^(q-p) * phi(B B^T, x^2)`. When the negative edges sit inside
//! `r` rows and `s` columns, `B B^T` has `p - r` identical rows outside the
//! cover and folds further onto a matrix `Z1` of order `r + 1`, giving
//! `phi(A, x) = x^(p+q-2r-2) * phi(Z1, x^2)`; the column-side analogue `Z2`
//! has order `s + 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, DenseMatrix, Spectrum, ZERO_TOL};
use crate::sgraph::SignedBipartiteGraph;

/// Gram eigenvalues below `-GRAM_NEG_TOL` are rejected; smaller negatives
/// are rounding noise and clamp to zero.
pub const GRAM_NEG_TOL: f64 = 1e-8;

/// `phi(A, x) = x^zero_exponent * phi(z, x^2)`.
///
/// `z` is either symmetric (`part_sizes` all one) or an equitable quotient
/// of a symmetric matrix over parts of the given sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedForm {
    zero_exponent: usize,
    z: DenseMatrix,
    part_sizes: Vec<usize>,
}

impl ReducedForm {
    pub fn new(zero_exponent: usize, z: DenseMatrix, part_sizes: Vec<usize>) -> Result<Self> {
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
        Ok(Self {
            zero_exponent,
            z,
            part_sizes,
        })
    }

    /// Form with a symmetric `z`.
    pub fn symmetric(zero_exponent: usize, z: DenseMatrix) -> Result<Self> {
        let parts = vec![1; z.rows()];
        Self::new(zero_exponent, z, parts)
    }

    pub fn zero_exponent(&self) -> usize {
        self.zero_exponent
    }

    pub fn z(&self) -> &DenseMatrix {
        &self.z
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn order(&self) -> usize {
        self.z.rows()
    }

    /// Degree of the characteristic polynomial this form encodes.
    pub fn degree(&self) -> usize {
        self.zero_exponent + 2 * self.order()
    }

    /// Eigenvalues of `z`, read off its symmetrized conjugate.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let sym = linalg::symmetrize_quotient(&self.z, &self.part_sizes)?;
        linalg::sym_eigenvalues_default(&sym)
    }

    /// Each eigenvalue `mu` of `z` contributes `±sqrt(mu)`, plus
    /// `zero_exponent` zeros.
    pub fn spectrum(&self) -> Result<Spectrum> {
        lift(&self.eigenvalues()?, self.zero_exponent)
    }
}

pub(crate) fn lift(squares: &[f64], zeros: usize) -> Result<Spectrum> {
    let mut values = Vec::with_capacity(2 * squares.len() + zeros);
    for &mu in squares {
        if mu < -GRAM_NEG_TOL {
            return Err(Error::InvalidGram { value: mu });
        }
        let root = if mu < ZERO_TOL { 0.0 } else { libm::sqrt(mu) };
        values.push(root);
        values.push(-root);
    }
    values.extend(core::iter::repeat_n(0.0, zeros));
    Ok(Spectrum::from_values(&values))
}

/// Spectrum of `[[O, X], [X^T, O]]` from the `p` eigenvalues of `X X^T`:
/// `±sqrt(mu)` for each, plus `q - p` zeros.
pub fn bipartite_lift(gram_eigs: &[f64], p: usize, q: usize) -> Result<Spectrum> {
    if p > q {
        return Err(Error::Parameters(alloc::format!(
            "bipartite lift needs p <= q, got p = {p}, q = {q}"
        )));
    }
    if gram_eigs.len() != p {
        return Err(Error::LengthMismatch {
            what: "Gram eigenvalues",
            expected: p,
            found: gram_eigs.len(),
        });
    }
    lift(gram_eigs, q - p)
}

/// `B B^T` of order `p` with exponent `q - p`.
pub fn gram_form(g: &SignedBipartiteGraph) -> ReducedForm {
    ReducedForm::symmetric(g.q() - g.p(), g.spectral_block().gram()).expect("Gram matrix is square")
}

/// `Z1` for a cover block `x` (`r x s`, entries ±1) inside `K_{p,q}`:
///
/// ```text
/// [ X X^T + (q-s) J          sqrt(p-r) (Y + (q-s) 1) ]
/// [ sqrt(p-r) (Y + (q-s) 1)^T          q (p-r)        ]
/// ```
///
/// with `Y` the row sums of `X`. Needs `1 <= r < p`.
pub(crate) fn z1_from_block(p: usize, q: usize, x: &[Vec<i64>]) -> ReducedForm {
    let r = x.len();
    let s = x.first().map_or(0, Vec::len);
    debug_assert!(r >= 1 && r < p && s <= q);
    let pad = (q - s) as i64;
    let c = libm::sqrt((p - r) as f64);

    let mut z = DenseMatrix::zeros(r + 1, r + 1);
    for i in 0..r {
        for j in i..r {
            let dot: i64 = x[i].iter().zip(&x[j]).map(|(a, b)| a * b).sum();
            let v = (dot + pad) as f64;
            z[(i, j)] = v;
            z[(j, i)] = v;
        }
        let border = (x[i].iter().sum::<i64>() + pad) as f64 * c;
        z[(i, r)] = border;
        z[(r, i)] = border;
    }
    z[(r, r)] = (q * (p - r)) as f64;
    ReducedForm::symmetric(p + q - 2 * r - 2, z).expect("square by construction")
}

/// Row-side reduction. Falls back to [`gram_form`] when the cover is empty
/// or spans all of U, where the folded border row does not exist.
pub fn build_z1(g: &SignedBipartiteGraph) -> ReducedForm {
    let (rows, cols) = g.negative_cover();
    if rows.is_empty() || rows.len() == g.p() {
        return gram_form(g);
    }
    z1_from_block(g.p(), g.q(), &g.sub_block(&rows, &cols))
}

/// Column-side reduction, order `s + 1`. Falls back to [`gram_form`] when
/// the cover is empty, spans all of V, or `2s + 2 > p + q` (the exponent
/// would be negative).
pub fn build_z2(g: &SignedBipartiteGraph) -> ReducedForm {
    let (rows, cols) = g.negative_cover();
    let s = cols.len();
    if s == 0 || s == g.q() || 2 * s + 2 > g.order() {
        return gram_form(g);
    }
    let xt: Vec<Vec<i64>> = cols
        .iter()
        .map(|&j| rows.iter().map(|&i| i64::from(g.sign(i, j))).collect())
        .collect();
    z1_from_block(g.q(), g.p(), &xt)
}

/// The smaller of [`build_z1`] and [`build_z2`].
pub fn reduce(g: &SignedBipartiteGraph) -> ReducedForm {
    let (r, s) = g.minimal_cover();
    if r <= s {
        build_z1(g)
    } else {
        build_z2(g)
    }
}

pub fn spectrum_via_reduction(g: &SignedBipartiteGraph) -> Result<Spectrum> {
    reduce(g).spectrum()
}

/// `max(0, p + q - 2 min(r, s) - 2)` for the negative cover `(r, s)`.
pub fn nullity_lower_bound(g: &SignedBipartiteGraph) -> usize {
    let (r, s) = g.minimal_cover();
    g.order().saturating_sub(2 * r.min(s) + 2)
}
