use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{RegularSubgraph, SignedBipartiteGraph};
use crate::error::{Error, Result};

/// Which end vertices a negative path has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    /// `P_{2r}`: one end in U, the other in V.
    Even,
    /// `P_{2r+1}` with both ends in U.
    OddU,
    /// `P_{2r+1}` with both ends in V.
    OddV,
}

impl PathKind {
    /// `(U-side, V-side)` vertex counts of the path with parameter `r`.
    pub fn footprint(self, r: usize) -> (usize, usize) {
        match self {
            PathKind::Even => (r, r),
            PathKind::OddU => (r + 1, r),
            PathKind::OddV => (r, r + 1),
        }
    }

    /// Negative edges `(u, v)` of the path laid on the lowest indices.
    ///
    /// `Even` and `OddU` walk `u_0, v_0, u_1, v_1, ...`; `OddV` walks
    /// `v_0, u_0, v_1, ..., u_{r-1}, v_r`.
    pub fn edges(self, r: usize) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(2 * r);
        for i in 0..r {
            edges.push((i, i));
            match self {
                PathKind::Even if i + 1 < r => edges.push((i + 1, i)),
                PathKind::Even => {}
                PathKind::OddU => edges.push((i + 1, i)),
                PathKind::OddV => edges.push((i, i + 1)),
            }
        }
        edges
    }

    pub fn name(self) -> &'static str {
        match self {
            PathKind::Even => "path-even",
            PathKind::OddU => "path-odd-u",
            PathKind::OddV => "path-odd-v",
        }
    }
}

/// The family a signing's negative edges belong to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NegativePattern {
    /// Negative edges induce `K_{r,s}`.
    Biclique {
        r: usize,
        s: usize,
    },
    /// Negative edges induce disjoint `K_{r_i, s_i}`.
    BicliqueUnion {
        parts: Vec<(usize, usize)>,
    },
    PathEven {
        r: usize,
    },
    PathOddU {
        r: usize,
    },
    PathOddV {
        r: usize,
    },
    /// Negative edges induce a regular bipartite `H` on `k + k` vertices.
    Regular(RegularSubgraph),
    /// Any other signing, given by its negative edges `(u, v)`.
    Arbitrary {
        negative_edges: Vec<(usize, usize)>,
    },
}

impl NegativePattern {
    pub fn path(kind: PathKind, r: usize) -> Self {
        match kind {
            PathKind::Even => NegativePattern::PathEven { r },
            PathKind::OddU => NegativePattern::PathOddU { r },
            PathKind::OddV => NegativePattern::PathOddV { r },
        }
    }

    pub fn as_path(&self) -> Option<(PathKind, usize)> {
        match *self {
            NegativePattern::PathEven { r } => Some((PathKind::Even, r)),
            NegativePattern::PathOddU { r } => Some((PathKind::OddU, r)),
            NegativePattern::PathOddV { r } => Some((PathKind::OddV, r)),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NegativePattern::Biclique { .. } => "biclique",
            NegativePattern::BicliqueUnion { .. } => "bicliques",
            NegativePattern::PathEven { .. } => PathKind::Even.name(),
            NegativePattern::PathOddU { .. } => PathKind::OddU.name(),
            NegativePattern::PathOddV { .. } => PathKind::OddV.name(),
            NegativePattern::Regular(_) => "regular",
            NegativePattern::Arbitrary { .. } => "arbitrary",
        }
    }

    /// Number of U- and V-vertices touched by a negative edge.
    pub fn footprint(&self) -> (usize, usize) {
        match self {
            NegativePattern::Biclique { r, s } => (*r, *s),
            NegativePattern::BicliqueUnion { parts } => parts.iter().fold((0, 0), |(a, b), &(r, s)| (a + r, b + s)),
            NegativePattern::Regular(h) => (h.k(), h.k()),
            NegativePattern::Arbitrary { negative_edges } => {
                let rows: BTreeSet<_> = negative_edges.iter().map(|e| e.0).collect();
                let cols: BTreeSet<_> = negative_edges.iter().map(|e| e.1).collect();
                (rows.len(), cols.len())
            }
            path => {
                let (kind, r) = path.as_path().expect("remaining variants are paths");
                kind.footprint(r)
            }
        }
    }

    /// Checks the pattern's own invariants and that it fits in `K_{p,q}`.
    pub fn validate(&self, p: usize, q: usize) -> Result<()> {
        if p == 0 || q == 0 {
            return Err(Error::EmptyPart { p, q });
        }
        match self {
            NegativePattern::Biclique { r, s } => {
                if *r == 0 || *s == 0 {
                    return Err(Error::Pattern(format!("biclique K_{{{r},{s}}} has no edges")));
                }
            }
            NegativePattern::BicliqueUnion { parts } => {
                if parts.is_empty() {
                    return Err(Error::Pattern("biclique union has no parts".into()));
                }
                if let Some((r, s)) = parts.iter().find(|(r, s)| *r == 0 || *s == 0) {
                    return Err(Error::Pattern(format!("biclique part K_{{{r},{s}}} has no edges")));
                }
            }
            NegativePattern::Regular(_) => {}
            NegativePattern::Arbitrary { negative_edges } => {
                if let Some((u, v)) = negative_edges.iter().find(|(u, v)| *u >= p || *v >= q) {
                    return Err(Error::Pattern(format!("edge ({u}, {v}) outside K_{{{p},{q}}}")));
                }
                return Ok(());
            }
            path => {
                let (_, r) = path.as_path().expect("remaining variants are paths");
                if r == 0 {
                    return Err(Error::Pattern("path parameter r must be at least 1".into()));
                }
            }
        }
        let (ru, sv) = self.footprint();
        if ru > p || sv > q {
            return Err(Error::Pattern(format!(
                "{self} needs {ru} U-vertices and {sv} V-vertices, K_{{{p},{q}}} has {p} and {q}"
            )));
        }
        Ok(())
    }

    /// Negative edges `(u, v)` of the canonical embedding.
    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        match self {
            NegativePattern::Biclique { r, s } => block_edges(0, *r, 0, *s),
            NegativePattern::BicliqueUnion { parts } => {
                let mut edges = Vec::new();
                let (mut u0, mut v0) = (0, 0);
                for &(r, s) in parts {
                    edges.extend(block_edges(u0, r, v0, s));
                    u0 += r;
                    v0 += s;
                }
                edges
            }
            NegativePattern::Regular(h) => h.edges(),
            NegativePattern::Arbitrary { negative_edges } => negative_edges.clone(),
            path => {
                let (kind, r) = path.as_path().expect("remaining variants are paths");
                kind.edges(r)
            }
        }
    }
}

fn block_edges(u0: usize, r: usize, v0: usize, s: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(r * s);
    for u in u0..u0 + r {
        for v in v0..v0 + s {
            out.push((u, v));
        }
    }
    out
}

impl fmt::Display for NegativePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegativePattern::Biclique { r, s } => write!(f, "biclique(r={r};s={s})"),
            NegativePattern::BicliqueUnion { parts } => {
                f.write_str("bicliques(")?;
                for (i, (r, s)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{r}:{s}")?;
                }
                f.write_str(")")
            }
            NegativePattern::Regular(h) => write!(f, "regular(k={};degree={})", h.k(), h.degree()),
            NegativePattern::Arbitrary { negative_edges } => {
                write!(f, "arbitrary(negative={})", negative_edges.len())
            }
            path => {
                let (kind, r) = path.as_path().expect("remaining variants are paths");
                write!(f, "{}(r={r})", kind.name())
            }
        }
    }
}

/// Lays the pattern onto the lowest-index vertices of `K_{p,q}`: bicliques
/// are stacked diagonally in order, paths follow [`PathKind::edges`], and
/// every other edge is positive.
pub fn build_from_pattern(p: usize, q: usize, pattern: &NegativePattern) -> Result<SignedBipartiteGraph> {
    pattern.validate(p, q)?;
    SignedBipartiteGraph::with_negative_edges(p, q, &pattern.negative_edges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn example_signing_from_edge_list() {
        let pattern = NegativePattern::Arbitrary {
            negative_edges: vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (1, 3)],
        };
        let g = build_from_pattern(4, 6, &pattern).unwrap();
        let rows: Vec<_> = g.rows().collect();
        assert_eq!(rows[0], [-1, -1, -1, 1, 1, 1]);
        assert_eq!(rows[1], [-1, 1, -1, -1, 1, 1]);
        assert!(rows[2..].iter().all(|r| r.iter().all(|&s| s == 1)));
    }

    #[test]
    fn empty_biclique_is_rejected() {
        for (r, s) in [(0, 2), (2, 0), (0, 0)] {
            assert!(build_from_pattern(3, 4, &NegativePattern::Biclique { r, s }).is_err());
        }
        assert!(build_from_pattern(3, 4, &NegativePattern::Biclique { r: 4, s: 1 }).is_err());
    }

    #[test]
    fn disjoint_bicliques() {
        let pattern = NegativePattern::BicliqueUnion {
            parts: vec![(2, 2), (2, 3)],
        };
        let g = build_from_pattern(5, 7, &pattern).unwrap();
        assert_eq!(g.negative_edge_count(), 10);
        assert_eq!(g.minimal_cover(), (4, 5));
        assert_eq!(g.sign(1, 1), -1);
        assert_eq!(g.sign(1, 2), 1);
        assert_eq!(g.sign(2, 2), -1);
        assert_eq!(g.sign(3, 4), -1);
        assert!(build_from_pattern(
            5,
            7,
            &NegativePattern::BicliqueUnion {
                parts: vec![(3, 2), (3, 3)]
            }
        )
        .is_err());
        assert!(build_from_pattern(5, 7, &NegativePattern::BicliqueUnion { parts: vec![] }).is_err());
    }

    #[test]
    fn paths() {
        assert_eq!(PathKind::Even.edges(1), [(0, 0)]);
        assert_eq!(PathKind::Even.edges(2), [(0, 0), (1, 0), (1, 1)]);
        assert_eq!(PathKind::OddU.edges(2), [(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert_eq!(PathKind::OddV.edges(2), [(0, 0), (0, 1), (1, 1), (1, 2)]);
        for kind in [PathKind::Even, PathKind::OddU, PathKind::OddV] {
            for r in 1..4 {
                let edges = kind.edges(r);
                let n_vertices = match kind {
                    PathKind::Even => 2 * r,
                    _ => 2 * r + 1,
                };
                assert_eq!(edges.len(), n_vertices - 1);
                let g = build_from_pattern(6, 6, &NegativePattern::path(kind, r)).unwrap();
                assert_eq!(g.minimal_cover(), kind.footprint(r));
            }
        }
    }

    #[test]
    fn path_fit_is_checked() {
        let p5 = NegativePattern::PathOddV { r: 2 };
        assert!(build_from_pattern(2, 3, &p5).is_ok());
        assert!(build_from_pattern(2, 2, &p5).is_err());
        assert!(build_from_pattern(3, 3, &NegativePattern::PathOddU { r: 3 }).is_err());
        assert!(build_from_pattern(3, 3, &NegativePattern::PathEven { r: 0 }).is_err());
    }

    #[test]
    fn regular_embedding() {
        let h = RegularSubgraph::even_cycle(3).unwrap();
        let g = build_from_pattern(4, 5, &NegativePattern::Regular(h.clone())).unwrap();
        assert_eq!(g.negative_edge_count(), 6);
        assert_eq!(g.minimal_cover(), (3, 3));
        assert!(build_from_pattern(2, 5, &NegativePattern::Regular(h)).is_err());
    }

    #[test]
    fn arbitrary_edges_must_fit() {
        let bad = NegativePattern::Arbitrary {
            negative_edges: vec![(0, 9)],
        };
        assert!(build_from_pattern(3, 4, &bad).is_err());
    }

    #[test]
    fn display_names() {
        assert_eq!(
            NegativePattern::Biclique { r: 2, s: 3 }.to_string(),
            "biclique(r=2;s=3)"
        );
        assert_eq!(
            NegativePattern::BicliqueUnion {
                parts: vec![(2, 2), (2, 3)]
            }
            .to_string(),
            "bicliques(2:2;2:3)"
        );
        assert_eq!(NegativePattern::PathOddV { r: 2 }.to_string(), "path-odd-v(r=2)");
    }
}
