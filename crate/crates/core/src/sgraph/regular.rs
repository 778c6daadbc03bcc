use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// A validated regular bipartite graph `H` on `2k` vertices whose two colour
/// classes both have size `k`.
///
/// Colour classes come from a breadth-first 2-colouring in which the
/// smallest label of every component is put on the U side. When `H` is laid
/// into `K_{p,q}`, the U side maps to `u_0..u_{k-1}` and the V side to
/// `v_0..v_{k-1}`, each in increasing label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularSubgraph {
    k: usize,
    degree: usize,
    adjacency: Vec<Vec<u8>>,
    u_side: Vec<usize>,
    v_side: Vec<usize>,
}

impl RegularSubgraph {
    /// Validates a symmetric, zero-diagonal 0/1 adjacency table.
    pub fn new(adjacency: Vec<Vec<u8>>) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::Pattern(format!(
                "regular subgraph needs an even, positive vertex count, got {n}"
            )));
        }
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    what: "regular subgraph adjacency row",
                    expected: n,
                    found: row.len(),
                });
            }
            if row[i] != 0 {
                return Err(Error::Pattern(format!("loop at vertex {i}")));
            }
            for (j, &x) in row.iter().enumerate() {
                if x > 1 {
                    return Err(Error::Pattern(format!("entry ({i}, {j}) is {x}, expected 0 or 1")));
                }
                if adjacency[j][i] != x {
                    return Err(Error::Pattern(format!("adjacency not symmetric at ({i}, {j})")));
                }
            }
        }

        let degree = adjacency[0].iter().filter(|&&x| x == 1).count();
        if let Some(v) = adjacency
            .iter()
            .position(|row| row.iter().filter(|&&x| x == 1).count() != degree)
        {
            return Err(Error::Pattern(format!(
                "subgraph is not regular: vertex {v} differs from degree {degree}"
            )));
        }
        if degree == 0 {
            return Err(Error::Pattern("regular subgraph has no edges".into()));
        }

        let colour =
            two_colouring(&adjacency).ok_or_else(|| Error::Pattern("regular subgraph is not bipartite".into()))?;
        let u_side: Vec<usize> = (0..n).filter(|&v| colour[v] == 0).collect();
        let v_side: Vec<usize> = (0..n).filter(|&v| colour[v] == 1).collect();
        if u_side.len() != v_side.len() {
            return Err(Error::Pattern(format!(
                "colour classes have sizes {} and {}",
                u_side.len(),
                v_side.len()
            )));
        }
        Ok(Self {
            k: n / 2,
            degree,
            adjacency,
            u_side,
            v_side,
        })
    }

    /// Builds from an edge list on vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![vec![0u8; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Pattern(format!("edge ({a}, {b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::Pattern(format!("loop at vertex {a}")));
            }
            if adjacency[a][b] == 1 {
                return Err(Error::Pattern(format!("repeated edge ({a}, {b})")));
            }
            adjacency[a][b] = 1;
            adjacency[b][a] = 1;
        }
        Self::new(adjacency)
    }

    /// `k` disjoint edges `u_i v_i`.
    pub fn perfect_matching(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (i, k + i)).collect();
        Self::from_edges(2 * k, &edges)
    }

    /// The cycle `C_{2k}` through all of `U_k ∪ V_k` (`k >= 2`).
    pub fn even_cycle(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Parameters(format!("C_{{2k}} needs k >= 2, got {k}")));
        }
        let mut edges = Vec::with_capacity(2 * k);
        for i in 0..k {
            edges.push((i, k + i));
            edges.push((k + i, (i + 1) % k));
        }
        Self::from_edges(2 * k, &edges)
    }

    /// `k / 2` disjoint 4-cycles (`k` even).
    pub fn disjoint_four_cycles(k: usize) -> Result<Self> {
        if k == 0 || !k.is_multiple_of(2) {
            return Err(Error::Parameters(format!("disjoint 4-cycles need even k, got {k}")));
        }
        let mut edges = Vec::with_capacity(2 * k);
        for b in (0..k).step_by(2) {
            for i in b..b + 2 {
                for j in b..b + 2 {
                    edges.push((i, k + j));
                }
            }
        }
        Self::from_edges(2 * k, &edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Regularity `r`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn adjacency(&self) -> &[Vec<u8>] {
        &self.adjacency
    }

    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let rows: Vec<Vec<f64>> = self
            .adjacency
            .iter()
            .map(|r| r.iter().map(|&x| f64::from(x)).collect())
            .collect();
        DenseMatrix::from_rows(&rows).expect("square table")
    }

    pub fn u_side(&self) -> &[usize] {
        &self.u_side
    }

    pub fn v_side(&self) -> &[usize] {
        &self.v_side
    }

    /// `(i, j)` pairs of `K_{k,k}` covered by `H`, in U/V index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &u) in self.u_side.iter().enumerate() {
            for (j, &v) in self.v_side.iter().enumerate() {
                if self.adjacency[u][v] == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn two_colouring(adj: &[Vec<u8>]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut colour = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for w in (0..n).filter(|&w| adj[v][w] == 1) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}
