//! The `verify` suites: fixed reference instances and seeded random checks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_spectra::closedform::{biclique_spectrum, disjoint_bicliques_quotient, p5_explicit, path_quotient};
use signed_spectra::linalg::max_deviation;
use signed_spectra::oracle::{full_spectrum, verify, Method};
use signed_spectra::reduction::spectrum_via_reduction;
use signed_spectra::sgraph::{build_from_pattern, random_signing};
use signed_spectra::{NegativePattern, PathKind, SignedBipartiteGraph, Spectrum};

use crate::error::CliResult;

const GOLDEN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CaseResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

fn expand(top: &[f64], zeros: usize) -> Spectrum {
    let mut v: Vec<f64> = top.iter().flat_map(|&x| [x, -x]).collect();
    v.extend(std::iter::repeat_n(0.0, zeros));
    Spectrum::from_values(&v)
}

fn worst(pairs: &[(&Spectrum, &Spectrum)]) -> CliResult<f64> {
    let mut d = 0.0f64;
    for (a, b) in pairs {
        d = d.max(max_deviation(a, b)?);
    }
    Ok(d)
}

/// Reference instances with known spectra.
pub fn golden() -> CliResult<Vec<CaseResult>> {
    let mut out = Vec::new();

    let g = SignedBipartiteGraph::from_rows(&[[-1, -1, -1, 1, 1, 1], [-1, 1, -1, -1, 1, 1], [1; 6], [1; 6]])?;
    let want = expand(&[2.0 * 3f64.sqrt(), 2.0 * 2f64.sqrt(), 2.0], 4);
    let (oracle, reduced) = (full_spectrum(&g)?, spectrum_via_reduction(&g)?);
    let d = worst(&[(&oracle, &want), (&reduced, &want)])?;
    out.push(CaseResult::new(
        "K_{4,6} two negative rows",
        d < GOLDEN_TOL,
        format!("oracle and reduction vs exact: {d:.1e}"),
    ));

    let parts = [(2, 2), (2, 3)];
    let res = disjoint_bicliques_quotient(5, 7, &parts)?;
    let g = build_from_pattern(5, 7, &NegativePattern::BicliqueUnion { parts: parts.to_vec() })?;
    let oracle = full_spectrum(&g)?;
    let want = expand(&[4.5091423669484, 3.3668072246304814, 1.8254435698664995], 6);
    let quotient_ok = res
        .quotient
        .as_ref()
        .is_some_and(|f| f.z().to_rows() == [[14.0, -6.0, 3.0], [-6.0, 14.0, 1.0], [6.0, 2.0, 7.0]]);
    let d = worst(&[(&res.spectrum, &oracle), (&res.spectrum, &want)])?;
    out.push(CaseResult::new(
        "K_{5,7} two negative bicliques",
        d < GOLDEN_TOL && quotient_ok,
        format!(
            "quotient matrix {}, closed form vs oracle and reference: {d:.1e}",
            if quotient_ok { "ok" } else { "wrong" }
        ),
    ));

    for (p, q) in [(3, 4), (4, 5), (5, 9)] {
        let explicit = p5_explicit(p, q)?;
        let quotient = path_quotient(p, q, PathKind::OddV, 2)?.spectrum;
        let oracle = full_spectrum(&build_from_pattern(p, q, &NegativePattern::PathOddV { r: 2 })?)?;
        let d = worst(&[(&explicit, &quotient), (&explicit, &oracle)])?;
        let has_two = explicit.multiplicity(2.0, GOLDEN_TOL) >= 1;
        out.push(CaseResult::new(
            format!("K_{{{p},{q}}} negative P_5 with ends in V"),
            d < GOLDEN_TOL && has_two,
            format!("explicit vs quotient vs oracle: {d:.1e}, ±2 present: {has_two}"),
        ));
    }

    let res = biclique_spectrum(5, 7, 2, 2)?.spectrum;
    let want = expand(&[5.063537330567421, 3.0595080816938762], 8);
    let d = max_deviation(&res, &want)?;
    out.push(CaseResult::new(
        "K_{5,7} negative K_{2,2}",
        d < GOLDEN_TOL,
        format!("closed form vs reference: {d:.1e}"),
    ));
    Ok(out)
}

fn random_structured<R: Rng>(rng: &mut R) -> (usize, usize, NegativePattern) {
    let p = rng.random_range(2..=10);
    let q = rng.random_range(p..=12);
    let pattern = match rng.random_range(0..3) {
        0 => NegativePattern::Biclique {
            r: rng.random_range(1..=p),
            s: rng.random_range(1..=q),
        },
        1 => {
            let r1 = rng.random_range(1..p);
            let r2 = rng.random_range(1..=p - r1);
            let s1 = rng.random_range(1..q);
            let s2 = rng.random_range(1..=q - s1);
            NegativePattern::BicliqueUnion {
                parts: vec![(r1, s1), (r2, s2)],
            }
        }
        _ => {
            let kind = [PathKind::Even, PathKind::OddU, PathKind::OddV][rng.random_range(0..3)];
            let max_r = (1..=p).take_while(|&r| {
                let (a, b) = kind.footprint(r);
                a <= p && b <= q
            });
            let r = rng.random_range(1..=max_r.last().unwrap_or(1));
            NegativePattern::path(kind, r)
        }
    };
    (p, q, pattern)
}

/// Seeded random checks: `trials` random signings (oracle vs reduction) and
/// `trials` random structured patterns (all three routes), each run
/// through the full cross-check.
pub fn properties(trials: usize, seed: u64) -> CliResult<Vec<CaseResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<(&str, String), usize> = BTreeMap::new();
    for _ in 0..trials {
        let p = rng.random_range(1..=15);
        let q = rng.random_range(p..=30 - p);
        let g = random_signing(p, q, &mut rng)?;
        let report = verify(&g, None, &[Method::Oracle, Method::Reduction], rng.random())?;
        for (name, ok) in report.checks {
            *counts.entry(("random signings", name)).or_default() += usize::from(ok);
        }

        let (p, q, pattern) = random_structured(&mut rng);
        let g = build_from_pattern(p, q, &pattern)?;
        let report = verify(&g, Some(&pattern), &Method::ALL, rng.random())?;
        for (name, ok) in report.checks {
            *counts.entry(("structured patterns", name)).or_default() += usize::from(ok);
        }
    }
    Ok(counts
        .into_iter()
        .map(|((group, check), passed)| {
            CaseResult::new(
                format!("{group}: {check}"),
                passed == trials,
                format!("{passed}/{trials}"),
            )
        })
        .collect())
}
