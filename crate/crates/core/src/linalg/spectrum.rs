use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default grouping tolerance for eigenvalue multiplicities.
pub const GROUP_TOL: f64 = 1e-8;
/// Eigenvalues with `|x| < ZERO_TOL` count as zero.
pub const ZERO_TOL: f64 = 1e-8;

/// Multiset of real eigenvalues, grouped and sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec<SpectrumEntry>", try_from = "Vec<SpectrumEntry>")]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
    tol: f64,
}

/// Wire form of one spectrum group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

impl From<Spectrum> for Vec<SpectrumEntry> {
    fn from(s: Spectrum) -> Self {
        s.pairs
            .into_iter()
            .map(|(value, multiplicity)| SpectrumEntry { value, multiplicity })
            .collect()
    }
}

impl TryFrom<Vec<SpectrumEntry>> for Spectrum {
    type Error = Error;

    fn try_from(entries: Vec<SpectrumEntry>) -> Result<Self> {
        let mut values = Vec::new();
        for e in entries {
            if e.multiplicity == 0 {
                return Err(Error::Parameters("zero multiplicity in spectrum".into()));
            }
            values.extend(core::iter::repeat_n(e.value, e.multiplicity));
        }
        let dim = values.len();
        group_spectrum(&values, dim, GROUP_TOL)
    }
}

impl Spectrum {
    /// Groups `values` at the default tolerance.
    pub fn from_values(values: &[f64]) -> Self {
        group_values(values, GROUP_TOL)
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Total multiplicity.
    pub fn dim(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// All eigenvalues with repetition, descending.
    pub fn values(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| core::iter::repeat_n(v, m))
            .collect()
    }

    pub fn max(&self) -> Option<f64> {
        self.pairs.first().map(|&(v, _)| v)
    }

    pub fn multiplicity(&self, value: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|&&(v, _)| (v - value).abs() <= tol)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Multiplicity of the eigenvalue zero, `|x| < ZERO_TOL`.
    pub fn nullity(&self) -> usize {
        self.pairs
            .iter()
            .filter(|&&(v, _)| v.abs() < ZERO_TOL)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Largest deviation between the spectrum and its mirror image `-spectrum`.
    pub fn asymmetry(&self) -> f64 {
        let v = self.values();
        let n = v.len();
        (0..n).fold(0.0, |m, i| f64::max(m, (v[i] + v[n - 1 - i]).abs()))
    }

    pub fn is_symmetric_about_zero(&self, tol: f64) -> bool {
        self.asymmetry() <= tol
    }
}

impl core::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        for (i, (v, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        f.write_str("}")
    }
}

/// Sorts `values` descending and merges runs whose consecutive gaps are at
/// most `tol`; each group is represented by its mean. Values within
/// [`ZERO_TOL`] of zero are snapped to exactly zero first.
pub fn group_spectrum(values: &[f64], dim: usize, tol: f64) -> Result<Spectrum> {
    if values.len() != dim {
        return Err(Error::LengthMismatch {
            what: "spectrum values",
            expected: dim,
            found: values.len(),
        });
    }
    Ok(group_values(values, tol))
}

fn group_values(values: &[f64], tol: f64) -> Spectrum {
    let mut sorted: Vec<f64> = values
        .iter()
        .map(|&v| if v.abs() < ZERO_TOL { 0.0 } else { v })
        .collect();
    sorted.sort_by(|a, b| b.total_cmp(a));

    let mut pairs: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i - 1] - sorted[i] > tol {
            let group = &sorted[start..i];
            let mean = if group.contains(&0.0) {
                0.0
            } else {
                group.iter().sum::<f64>() / group.len() as f64
            };
            pairs.push((mean, group.len()));
            start = i;
        }
    }
    Spectrum { pairs, tol }
}

/// Maximum elementwise gap between two spectra of equal dimension, after
/// expanding multiplicities.
pub fn max_deviation(a: &Spectrum, b: &Spectrum) -> Result<f64> {
    let (va, vb) = (a.values(), b.values());
    if va.len() != vb.len() {
        return Err(Error::LengthMismatch {
            what: "spectrum dimension",
            expected: va.len(),
            found: vb.len(),
        });
    }
    Ok(va.iter().zip(&vb).fold(0.0, |m, (x, y)| f64::max(m, (x - y).abs())))
}

pub fn multiset_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    max_deviation(a, b).is_ok_and(|d| d <= tol)
}

/// Coefficients of `prod (x - lambda)` over the spectrum, from degree `n`
/// down to degree 0.
pub fn char_poly_coeffs(s: &Spectrum) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for lambda in s.values() {
        coeffs.push(0.0);
        for k in (1..coeffs.len()).rev() {
            coeffs[k] -= lambda * coeffs[k - 1];
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_close_values() {
        let s = group_spectrum(&[1.0, 1.0 + 1e-12, -1.0], 3, 1e-9).unwrap();
        assert_eq!(s.pairs().len(), 2);
        assert!((s.pairs()[0].0 - 1.0).abs() < 1e-11);
        assert_eq!(s.pairs()[0].1, 2);
        assert_eq!(s.pairs()[1], (-1.0, 1));
    }

    #[test]
    fn singleton_zero() {
        let s = group_spectrum(&[0.0], 1, GROUP_TOL).unwrap();
        assert_eq!(s.pairs(), &[(0.0, 1)]);
        assert_eq!(s.nullity(), 1);
    }

    #[test]
    fn dimension_is_checked() {
        assert!(group_spectrum(&[1.0, 2.0], 3, GROUP_TOL).is_err());
    }

    #[test]
    fn near_zero_values_snap() {
        let s = Spectrum::from_values(&[3e-16, -2e-15, 1.0, -1.0]);
        assert_eq!(s.pairs(), &[(1.0, 1), (0.0, 2), (-1.0, 1)]);
    }

    #[test]
    fn consecutive_groups_are_separated() {
        let s = Spectrum::from_values(&[2.0, 2.0 + 5e-9, 2.0 + 1e-8 + 4e-9, 1.0]);
        // single linkage chains all three copies of 2
        assert_eq!(s.pairs().len(), 2);
        assert_eq!(s.pairs()[0].1, 3);
    }

    #[test]
    fn equality_and_deviation() {
        let a = Spectrum::from_values(&[2.0, 0.0, -2.0]);
        let b = Spectrum::from_values(&[-2.0, 1e-10, 2.0 + 1e-10]);
        assert!(multiset_equal(&a, &a, 0.0));
        assert!(multiset_equal(&a, &b, 1e-9));
        assert!(!multiset_equal(&a, &b, 1e-11));
        let c = Spectrum::from_values(&[1.0]);
        assert!(!multiset_equal(&a, &c, 1.0));
        assert!(max_deviation(&a, &c).is_err());
    }

    #[test]
    fn char_poly_of_single_edge() {
        let s = Spectrum::from_values(&[1.0, -1.0]);
        assert_eq!(char_poly_coeffs(&s), vec![1.0, 0.0, -1.0]);
    }

    #[test]
    fn char_poly_of_triangle() {
        // K_3: x^3 - 3x - 2
        let s = Spectrum::from_values(&[2.0, -1.0, -1.0]);
        let c = char_poly_coeffs(&s);
        assert_eq!(c, vec![1.0, 0.0, -3.0, -2.0]);
    }

    #[test]
    fn symmetry_measure() {
        assert!(Spectrum::from_values(&[3.0, 1.0, 0.0, -1.0, -3.0]).is_symmetric_about_zero(0.0));
        let s = Spectrum::from_values(&[2.0, -1.0, -1.0]);
        assert_eq!(s.asymmetry(), 2.0);
    }

    #[test]
    fn serde_round_trip() {
        let s = Spectrum::from_values(&[2.0, 0.0, 0.0, -2.0]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"[{"value":2.0,"multiplicity":1},{"value":0.0,"multiplicity":2},{"value":-2.0,"multiplicity":1}]"#
        );
        let back: Spectrum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
