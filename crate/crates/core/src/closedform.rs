//! Closed-form and quotient-form spectra for structured negative patterns.
//!
//! All routes here assume `p <= q` and a pattern laid out by
//! [`build_from_pattern`]. Integer parts of every formula are evaluated
//! exactly before the final square roots.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, DenseMatrix, Spectrum, ZERO_TOL};
use crate::reduction::{self, ReducedForm, GRAM_NEG_TOL};
use crate::sgraph::{build_from_pattern, NegativePattern, PathKind, RegularSubgraph};

/// A closed-form spectrum together with the quotient it was read from, if
/// the formula is a quotient matrix rather than explicit roots.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult {
    pub spectrum: Spectrum,
    pub quotient: Option<ReducedForm>,
}

impl ClosedFormResult {
    fn explicit(spectrum: Spectrum) -> Self {
        Self {
            spectrum,
            quotient: None,
        }
    }

    fn from_form(form: ReducedForm) -> Result<Self> {
        Ok(Self {
            spectrum: form.spectrum()?,
            quotient: Some(form),
        })
    }
}

fn check_parts(p: usize, q: usize) -> Result<()> {
    if p == 0 || p > q {
        return Err(Error::Parameters(format!("need 1 <= p <= q, got p = {p}, q = {q}")));
    }
    Ok(())
}

fn root(square: f64) -> Result<f64> {
    if square < -GRAM_NEG_TOL {
        return Err(Error::InvalidGram { value: square });
    }
    Ok(if square < ZERO_TOL { 0.0 } else { libm::sqrt(square) })
}

/// `±root` for each root, then `zero_exponent` zeros. A negative exponent
/// cancels that many zeros already present among the roots.
fn assemble(roots: &[f64], zero_exponent: i64) -> Result<Spectrum> {
    let mut values: Vec<f64> = roots.iter().flat_map(|&x| [x, -x]).collect();
    if zero_exponent >= 0 {
        values.extend(core::iter::repeat_n(0.0, zero_exponent as usize));
    } else {
        for _ in 0..zero_exponent.unsigned_abs() {
            let pos = values
                .iter()
                .position(|v| v.abs() < ZERO_TOL)
                .ok_or_else(|| Error::Parameters("formula leaves a negative number of zero eigenvalues".into()))?;
            values.swap_remove(pos);
        }
    }
    Ok(Spectrum::from_values(&values))
}

fn isqrt_f64(x: i128) -> Result<f64> {
    if x < 0 {
        return Err(Error::NegativeDiscriminant { value: x as f64 });
    }
    Ok(libm::sqrt(x as f64))
}

/// Negative edges inducing `K_{r,s}`.
///
/// The nonzero eigenvalues are `±mu_1, ±mu_2` with `mu^2` the roots of
/// `y^2 - pq y + 4 r (p-r) s (q-s)`, i.e.
/// `mu^2 = (pq ± sqrt(q^2 (p-2r)^2 + 4 r (p-r) (q-2s)^2)) / 2`;
/// the remaining `p + q - 4` eigenvalues are zero.
pub fn biclique_spectrum(p: usize, q: usize, r: usize, s: usize) -> Result<ClosedFormResult> {
    check_parts(p, q)?;
    NegativePattern::Biclique { r, s }.validate(p, q)?;
    let (p_, q_, r_, s_) = (p as i128, q as i128, r as i128, s as i128);
    let trace = p_ * q_;
    let disc = q_ * q_ * (p_ - 2 * r_).pow(2) + 4 * r_ * (p_ - r_) * (q_ - 2 * s_).pow(2);
    let det = 4 * r_ * (p_ - r_) * s_ * (q_ - s_);
    let big = (trace as f64 + isqrt_f64(disc)?) / 2.0;
    // product form avoids cancellation in the smaller root
    let small = det as f64 / big;
    let spectrum = assemble(&[root(big)?, root(small)?], (p + q) as i64 - 4)?;
    Ok(ClosedFormResult::explicit(spectrum))
}

/// Negative edges inducing disjoint `K_{r_i, s_i}`, `i = 1..k`.
///
/// `phi = x^(p+q-2k-2) phi(Z', x^2)` with the `(k+1)`-order quotient
///
/// ```text
/// Z'_ij     = r_j c_ij,  c_ii = q,  c_ij = q - 2 s_i - 2 s_j
/// Z'_i,k+1  = c (q - 2 s_i)
/// Z'_k+1,j  = r_j c (q - 2 s_j)
/// Z'_k+1,k+1 = q (p - r),   c = sqrt(p - r),  r = sum r_i
/// ```
///
/// When the bicliques cover all of U the border row vanishes and the
/// spectrum comes from the general reduction instead.
pub fn disjoint_bicliques_quotient(p: usize, q: usize, parts: &[(usize, usize)]) -> Result<ClosedFormResult> {
    check_parts(p, q)?;
    let pattern = NegativePattern::BicliqueUnion { parts: parts.to_vec() };
    pattern.validate(p, q)?;
    let (r_total, _) = pattern.footprint();
    if r_total == p {
        let g = build_from_pattern(p, q, &pattern)?;
        return ClosedFormResult::from_form(reduction::reduce(&g));
    }

    let k = parts.len();
    let qi = q as i64;
    let c = libm::sqrt((p - r_total) as f64);
    let mut z = DenseMatrix::zeros(k + 1, k + 1);
    for (i, &(_, si)) in parts.iter().enumerate() {
        let si = si as i64;
        for (j, &(rj, sj)) in parts.iter().enumerate() {
            let cij = if i == j { qi } else { qi - 2 * si - 2 * sj as i64 };
            z[(i, j)] = (rj as i64 * cij) as f64;
        }
        z[(i, k)] = c * (qi - 2 * si) as f64;
        z[(k, i)] = parts[i].0 as f64 * c * (qi - 2 * si) as f64;
    }
    z[(k, k)] = (q * (p - r_total)) as f64;

    let mut sizes: Vec<usize> = parts.iter().map(|&(r, _)| r).collect();
    sizes.push(1);
    ClosedFormResult::from_form(ReducedForm::new(p + q - 2 * k - 2, z, sizes)?)
}

/// Negative edges inducing a path (see [`PathKind`] for the embedding).
///
/// With `r_U` path vertices in U, the quotient has order `r_U + 1`:
/// entry `(i, j)` is `q - 2 |N_i Δ N_j|` where `N_i` is the set of negative
/// neighbours of the `i`-th path vertex in U, the border is
/// `sqrt(p - r_U) (q - 2 |N_i|)` and the corner `q (p - r_U)`. The zero
/// exponent is `p + q - 2 r_U - 2`, i.e. `p + q - 2r - 2` for `Even` and
/// `OddV`, `p + q - 2r - 4` for `OddU`.
pub fn path_quotient(p: usize, q: usize, kind: PathKind, r: usize) -> Result<ClosedFormResult> {
    check_parts(p, q)?;
    let pattern = NegativePattern::path(kind, r);
    pattern.validate(p, q)?;
    let (r_u, _) = kind.footprint(r);
    if r_u == p {
        let g = build_from_pattern(p, q, &pattern)?;
        return ClosedFormResult::from_form(reduction::reduce(&g));
    }

    let mut nbhd: Vec<BTreeSet<usize>> = (0..r_u).map(|_| BTreeSet::new()).collect();
    for (u, v) in kind.edges(r) {
        nbhd[u].insert(v);
    }
    let qi = q as i64;
    let c = libm::sqrt((p - r_u) as f64);
    let mut z = DenseMatrix::zeros(r_u + 1, r_u + 1);
    for i in 0..r_u {
        for j in 0..r_u {
            let diff = nbhd[i].symmetric_difference(&nbhd[j]).count() as i64;
            z[(i, j)] = (qi - 2 * diff) as f64;
        }
        let border = c * (qi - 2 * nbhd[i].len() as i64) as f64;
        z[(i, r_u)] = border;
        z[(r_u, i)] = border;
    }
    z[(r_u, r_u)] = (q * (p - r_u)) as f64;
    ClosedFormResult::from_form(ReducedForm::symmetric(p + q - 2 * r_u - 2, z)?)
}

/// Explicit spectrum for a negative `P_5` with both ends in V:
/// `±mu_1, ±mu_2, ±2` and `p + q - 6` zeros, where
/// `mu^2 = (pq - 4 ± sqrt(p^2 q^2 - 56pq + 128p + 96q - 240)) / 2`.
pub fn p5_explicit(p: usize, q: usize) -> Result<Spectrum> {
    check_parts(p, q)?;
    if p < 2 || q < 3 || p + q < 6 {
        return Err(Error::Parameters(format!(
            "P_5 with ends in V needs p >= 2, q >= 3 and p + q >= 6, got ({p}, {q})"
        )));
    }
    let (p_, q_) = (p as i128, q as i128);
    let disc = p_ * p_ * q_ * q_ - 56 * p_ * q_ + 128 * p_ + 96 * q_ - 240;
    let sq = isqrt_f64(disc)?;
    let t = (p * q) as f64 - 4.0;
    let mu1 = root((t + sq) / 2.0)?;
    let mu2 = root((t - sq) / 2.0)?;
    assemble(&[mu1, mu2, 2.0], (p + q) as i64 - 6)
}

fn sorted_graph_eigenvalues(h: &RegularSubgraph) -> Result<Vec<f64>> {
    let mut mu = linalg::sym_eigenvalues_default(&h.adjacency_matrix())?;
    mu.sort_by(|a, b| b.total_cmp(a));
    Ok(mu)
}

fn check_regular(k: usize, h: &RegularSubgraph) -> Result<()> {
    if h.k() != k {
        return Err(Error::Parameters(format!(
            "regular subgraph has {} + {} vertices, expected k = {k}",
            h.k(),
            h.k()
        )));
    }
    Ok(())
}

/// `K_{k,k}` whose negative edges induce the `r`-regular `H` on all `2k`
/// vertices. With `H`'s eigenvalues `r = mu_1 >= ... >= mu_2k = -r`, the
/// spectrum is `-2 mu_i` for `i = 2..2k-1` together with `±(k - 2r)`.
pub fn regular_kk_spectrum(k: usize, h: &RegularSubgraph) -> Result<Spectrum> {
    check_regular(k, h)?;
    let mu = sorted_graph_eigenvalues(h)?;
    let r = h.degree() as f64;
    let mut values: Vec<f64> = mu[1..2 * k - 1].iter().map(|m| -2.0 * m).collect();
    let edge = k as f64 - 2.0 * r;
    values.push(edge);
    values.push(-edge);
    Ok(Spectrum::from_values(&values))
}

/// The two exact integers `(T, P)` with `alpha_1 + alpha_2 = T` and
/// `alpha_1 alpha_2 = P`:
/// `T = pq + (k-2r)^2 - k^2`,
/// `P = (p-k) (q ((k-2r)^2 + k(q-k)) - k (q-2r)^2)`.
fn regular_trace_det(p: usize, q: usize, k: usize, r: usize) -> (i128, i128) {
    let (p, q, k, r) = (p as i128, q as i128, k as i128, r as i128);
    let d = (k - 2 * r).pow(2);
    let trace = p * q + d - k * k;
    let det = (p - k) * (q * (d + k * (q - k)) - k * (q - 2 * r).pow(2));
    (trace, det)
}

fn check_regular_sizes(p: usize, q: usize, k: usize, h: &RegularSubgraph) -> Result<()> {
    check_parts(p, q)?;
    check_regular(k, h)?;
    if k > p {
        return Err(Error::Pattern(format!("H needs k = {k} vertices per side, p = {p}")));
    }
    Ok(())
}

/// `K_{p,q}` whose negative edges induce the `r`-regular `H` on `U_k ∪ V_k`.
///
/// With `mu_1 = r >= ... >= mu_k >= 0` the top half of `H`'s spectrum, the
/// eigenvalues are `±2 mu_i` (`i = 2..k`), `±sqrt(alpha_1)`, `±sqrt(alpha_2)`
/// where `alpha` solves `y^2 - T y + P` (see `regular_trace_det`), and
/// `p + q - 2k - 2` zeros. For `p = k` that exponent is negative and is
/// absorbed by `alpha_2 = 0`.
pub fn regular_general_spectrum(p: usize, q: usize, k: usize, h: &RegularSubgraph) -> Result<Spectrum> {
    check_regular_sizes(p, q, k, h)?;
    let mu = sorted_graph_eigenvalues(h)?;
    let (trace, det) = regular_trace_det(p, q, k, h.degree());
    let sq = isqrt_f64(trace * trace - 4 * det)?;
    let alpha1 = (trace as f64 + sq) / 2.0;
    let alpha2 = if alpha1 > 0.0 { det as f64 / alpha1 } else { 0.0 };

    let mut roots = Vec::with_capacity(k + 1);
    for &m in &mu[1..k] {
        roots.push(2.0 * m.max(0.0));
    }
    roots.push(root(alpha1)?);
    roots.push(root(alpha2)?);
    assemble(&roots, (p + q) as i64 - 2 * k as i64 - 2)
}

/// Whether `K_{p,q}` with negative (or positive) regular `H` on `U_k ∪ V_k`
/// is nonsingular.
///
/// This holds exactly when `p = q`, `H` is nonsingular, and either
/// `p = k + 1`, or `p = k` with `k != 2r`. For `p = q = k + 1` the pair
/// `alpha_1 alpha_2 = (2r)^2` never vanishes; for `p = q = k` the surviving
/// pair is `±(k - 2r)`.
pub fn nonsingularity_check(p: usize, q: usize, k: usize, h: &RegularSubgraph) -> Result<bool> {
    check_regular_sizes(p, q, k, h)?;
    if p != q || p > k + 1 {
        return Ok(false);
    }
    let mu = sorted_graph_eigenvalues(h)?;
    if mu.iter().any(|m| m.abs() < ZERO_TOL) {
        return Ok(false);
    }
    let (trace, det) = regular_trace_det(p, q, k, h.degree());
    Ok(if p == k { trace != 0 } else { det != 0 })
}

/// Dispatches to the closed form matching `pattern`.
pub fn closed_form(p: usize, q: usize, pattern: &NegativePattern) -> Result<ClosedFormResult> {
    match pattern {
        NegativePattern::Biclique { r, s } => biclique_spectrum(p, q, *r, *s),
        NegativePattern::BicliqueUnion { parts } => disjoint_bicliques_quotient(p, q, parts),
        NegativePattern::Regular(h) => Ok(ClosedFormResult::explicit(regular_general_spectrum(p, q, h.k(), h)?)),
        NegativePattern::Arbitrary { .. } => Err(Error::NoClosedForm),
        path => {
            let (kind, r) = path.as_path().expect("remaining variants are paths");
            path_quotient(p, q, kind, r)
        }
    }
}
