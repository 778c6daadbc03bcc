//! Turning command-line pattern arguments into a concrete graph.

use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signed_spectra::sgraph::{build_from_pattern, random_signing};
use signed_spectra::{NegativePattern, PathKind, SignedBipartiteGraph};

use crate::error::{CliError, CliResult};
use crate::hfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum PatternKind {
    Biclique,
    Bicliques,
    PathEven,
    PathOddU,
    PathOddV,
    Regular,
    Random,
}

impl PatternKind {
    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Biclique => "biclique",
            PatternKind::Bicliques => "bicliques",
            PatternKind::PathEven => "path-even",
            PatternKind::PathOddU => "path-odd-u",
            PatternKind::PathOddV => "path-odd-v",
            PatternKind::Regular => "regular",
            PatternKind::Random => "random",
        }
    }

    pub fn path_kind(self) -> Option<PathKind> {
        match self {
            PatternKind::PathEven => Some(PathKind::Even),
            PatternKind::PathOddU => Some(PathKind::OddU),
            PatternKind::PathOddV => Some(PathKind::OddV),
            _ => None,
        }
    }
}

/// The pattern-specific arguments of `spectrum` and `build`.
#[derive(Debug, Clone, Default)]
pub struct PatternArgs {
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub parts: Option<String>,
    pub path_r: Option<usize>,
    pub h_file: Option<PathBuf>,
    pub seed: u64,
}

/// A graph together with the structured pattern it was laid out from.
/// Random signings have no pattern.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: SignedBipartiteGraph,
    pub pattern: Option<NegativePattern>,
    pub label: String,
}

/// Parses `"r1:s1,r2:s2,..."`.
pub fn parse_parts(text: &str) -> CliResult<Vec<(usize, usize)>> {
    let bad = || CliError::usage(format!("--parts expects \"r1:s1,r2:s2,...\", got {text:?}"));
    text.split(',')
        .map(|chunk| {
            let (r, s) = chunk.trim().split_once(':').ok_or_else(bad)?;
            let r = r.trim().parse().map_err(|_| bad())?;
            let s = s.trim().parse().map_err(|_| bad())?;
            Ok((r, s))
        })
        .collect()
}

fn need<T>(value: Option<T>, flag: &str, kind: PatternKind) -> CliResult<T> {
    value.ok_or_else(|| CliError::usage(format!("--pattern {} needs {flag}", kind.name())))
}

pub fn pattern_from_args(kind: PatternKind, args: &PatternArgs) -> CliResult<Option<NegativePattern>> {
    let pattern = match kind {
        PatternKind::Biclique => NegativePattern::Biclique {
            r: need(args.r, "--r", kind)?,
            s: need(args.s, "--s", kind)?,
        },
        PatternKind::Bicliques => NegativePattern::BicliqueUnion {
            parts: parse_parts(need(args.parts.as_deref(), "--parts", kind)?)?,
        },
        PatternKind::Regular => NegativePattern::Regular(hfile::load(need(args.h_file.as_deref(), "--h-file", kind)?)?),
        PatternKind::Random => return Ok(None),
        path => NegativePattern::path(
            path.path_kind().expect("path kinds"),
            need(args.path_r, "--path-r", kind)?,
        ),
    };
    Ok(Some(pattern))
}

pub fn build_instance(p: usize, q: usize, kind: PatternKind, args: &PatternArgs) -> CliResult<Instance> {
    if p == 0 || p > q {
        return Err(CliError::usage(format!("need 1 <= p <= q, got p = {p}, q = {q}")));
    }
    match pattern_from_args(kind, args)? {
        Some(pattern) => {
            let graph = build_from_pattern(p, q, &pattern)?;
            Ok(Instance {
                label: pattern.to_string(),
                graph,
                pattern: Some(pattern),
            })
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            Ok(Instance {
                graph: random_signing(p, q, &mut rng)?,
                pattern: None,
                label: format!("random(seed={})", args.seed),
            })
        }
    }
}
