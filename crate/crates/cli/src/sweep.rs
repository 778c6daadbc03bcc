//! Parameter-grid sweeps written as CSV.

use std::io::Write;

use serde::Serialize;
use signed_spectra::oracle::{verify, Method};
use signed_spectra::reduction::nullity_lower_bound;
use signed_spectra::sgraph::{build_from_pattern, random_signing};
use signed_spectra::{NegativePattern, PathKind, RegularSubgraph, SignedBipartiteGraph};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};
use crate::instance::PatternKind;
use crate::output::sig12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub p: usize,
    pub q: usize,
    pub pattern: &'static str,
    pub params: String,
    pub mu_max: f64,
    pub nullity: usize,
    pub bound: usize,
    pub pass: bool,
}

pub fn parse_patterns(list: &str) -> CliResult<Vec<PatternKind>> {
    use clap::ValueEnum;
    let mut kinds = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let kind =
            PatternKind::from_str(name, false).map_err(|_| CliError::usage(format!("unknown pattern {name:?}")))?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return Err(CliError::usage("--patterns is empty"));
    }
    Ok(kinds)
}

fn regular_family(max_k: usize) -> Vec<(String, RegularSubgraph)> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        if let Ok(h) = RegularSubgraph::perfect_matching(k) {
            out.push((format!("matching(k={k})"), h));
        }
        if let Ok(h) = RegularSubgraph::even_cycle(k) {
            out.push((format!("cycle(k={k})"), h));
        }
        if let Ok(h) = RegularSubgraph::disjoint_four_cycles(k) {
            out.push((format!("four-cycles(k={k})"), h));
        }
    }
    out
}

/// Every `(params, pattern)` of `kind` that fits in `K_{p,q}`.
fn patterns_for(kind: PatternKind, p: usize, q: usize) -> Vec<(String, NegativePattern)> {
    let mut out = Vec::new();
    match kind {
        PatternKind::Biclique => {
            for r in 1..=p {
                for s in 1..=q {
                    out.push((format!("r={r};s={s}"), NegativePattern::Biclique { r, s }));
                }
            }
        }
        PatternKind::Bicliques => {
            for r1 in 1..p {
                for s1 in 1..q {
                    for r2 in 1..=p - r1 {
                        for s2 in 1..=q - s1 {
                            if (r1, s1) <= (r2, s2) {
                                out.push((
                                    format!("{r1}:{s1};{r2}:{s2}"),
                                    NegativePattern::BicliqueUnion {
                                        parts: vec![(r1, s1), (r2, s2)],
                                    },
                                ));
                            }
                        }
                    }
                }
            }
        }
        PatternKind::Regular => {
            for (name, h) in regular_family(p) {
                out.push((name, NegativePattern::Regular(h)));
            }
        }
        PatternKind::Random => {}
        path => {
            let pk: PathKind = path.path_kind().expect("path kinds");
            for r in 1..=q {
                let (a, b) = pk.footprint(r);
                if a <= p && b <= q {
                    out.push((format!("r={r}"), NegativePattern::path(pk, r)));
                }
            }
        }
    }
    out
}

fn row(
    p: usize,
    q: usize,
    kind: PatternKind,
    params: String,
    g: &SignedBipartiteGraph,
    pattern: Option<&NegativePattern>,
    seed: u64,
) -> CliResult<SweepRow> {
    let methods: &[Method] = if pattern.is_some() {
        &Method::ALL
    } else {
        &[Method::Oracle, Method::Reduction]
    };
    let report = verify(g, pattern, methods, seed)?;
    let oracle = &report.methods[Method::Oracle.name()];
    Ok(SweepRow {
        p,
        q,
        pattern: kind.name(),
        params,
        mu_max: sig12(oracle.max().unwrap_or(0.0)),
        nullity: oracle.nullity(),
        bound: nullity_lower_bound(g),
        pass: report.pass,
    })
}

/// All instances with `1 <= p <= p_max`, `p <= q <= q_max`, sorted by
/// `(p, q, pattern, params)`. `random` contributes one signing per `(p, q)`.
pub fn run(p_max: usize, q_max: usize, kinds: &[PatternKind], seed: u64) -> CliResult<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for p in 1..=p_max {
        for q in p..=q_max {
            for &kind in kinds {
                if kind == PatternKind::Random {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((p as u64) << 32 | q as u64));
                    let g = random_signing(p, q, &mut rng)?;
                    rows.push(row(p, q, kind, format!("seed={seed}"), &g, None, seed)?);
                    continue;
                }
                for (params, pattern) in patterns_for(kind, p, q) {
                    let g = build_from_pattern(p, q, &pattern)?;
                    rows.push(row(p, q, kind, params, &g, Some(&pattern), seed)?);
                }
            }
        }
    }
    rows.sort_by(|a, b| (a.p, a.q, a.pattern, &a.params).cmp(&(b.p, b.q, b.pattern, &b.params)));
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: "<output>".into(),
        source,
    })?;
    Ok(())
}
