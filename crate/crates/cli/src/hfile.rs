//! Edge-list files describing a regular bipartite graph `H`.
//!
//! One edge `u v` per line on vertex labels `1..=2k`. Blank lines and
//! anything after `#` are ignored.
//!
//! ```text
//! # 6-cycle
//! 1 2
//! 2 3
//! 3 4
//! 4 5
//! 5 6
//! 6 1
//! ```

use std::collections::BTreeSet;
use std::path::Path;

use signed_spectra::RegularSubgraph;

use crate::error::{CliError, CliResult};

pub fn parse(text: &str, path: &Path) -> CliResult<RegularSubgraph> {
    let fail = |line: usize, message: String| CliError::HFile {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(fail(line_no, format!("expected `u v`, found {line:?}")));
        };
        let parse_label = |s: &str| -> CliResult<usize> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(fail(line_no, format!("vertex labels start at 1, found {s:?}"))),
            }
        };
        let (u, v) = (parse_label(a)?, parse_label(b)?);
        if u == v {
            return Err(fail(line_no, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(line_no, format!("repeated edge {u} {v}")));
        }
        n = n.max(u).max(v);
        edges.push((u - 1, v - 1));
    }
    if edges.is_empty() {
        return Err(fail(0, "no edges".into()));
    }
    RegularSubgraph::from_edges(n, &edges).map_err(|e| fail(0, e.to_string()))
}

pub fn load(path: &Path) -> CliResult<RegularSubgraph> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text, path)
}
