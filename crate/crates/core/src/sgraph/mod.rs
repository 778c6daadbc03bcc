//! Signed complete bipartite graphs and the negative-edge pattern families.

mod pattern;
mod regular;

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

pub use pattern::{build_from_pattern, NegativePattern, PathKind};
pub use regular::RegularSubgraph;

/// A signed `K_{p,q}` with parts `U = {u_0..u_{p-1}}`, `V = {v_0..v_{q-1}}`.
///
/// Every pair `(u_i, v_j)` is an edge; `sign(i, j)` is its sign. The
/// constructor enforces `1 <= p <= q`, swapping the parts and transposing the
/// sign table when needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct SignedBipartiteGraph {
    p: usize,
    q: usize,
    signs: Vec<i8>,
}

/// JSON form: `{"p": int, "q": int, "signs": [[±1, ...], ...]}`, row-major by U-index.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphRepr {
    p: usize,
    q: usize,
    signs: Vec<Vec<i64>>,
}

impl From<SignedBipartiteGraph> for GraphRepr {
    fn from(g: SignedBipartiteGraph) -> Self {
        GraphRepr {
            p: g.p,
            q: g.q,
            signs: g.rows().map(|r| r.iter().map(|&s| i64::from(s)).collect()).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for SignedBipartiteGraph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        if repr.signs.len() != repr.p {
            return Err(Error::LengthMismatch {
                what: "sign table rows",
                expected: repr.p,
                found: repr.signs.len(),
            });
        }
        let mut signs = Vec::with_capacity(repr.p * repr.q);
        for (i, row) in repr.signs.iter().enumerate() {
            if row.len() != repr.q {
                return Err(Error::LengthMismatch {
                    what: "sign table row",
                    expected: repr.q,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                signs.push(to_sign(i, j, v)?);
            }
        }
        SignedBipartiteGraph::new(repr.p, repr.q, signs)
    }
}

fn to_sign(row: usize, col: usize, value: i64) -> Result<i8> {
    match value {
        1 => Ok(1),
        -1 => Ok(-1),
        _ => Err(Error::InvalidSign { row, col, value }),
    }
}

impl SignedBipartiteGraph {
    /// `signs` is the row-major `p x q` sign table.
    pub fn new(p: usize, q: usize, signs: Vec<i8>) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::EmptyPart { p, q });
        }
        if signs.len() != p * q {
            return Err(Error::LengthMismatch {
                what: "sign table",
                expected: p * q,
                found: signs.len(),
            });
        }
        for (idx, &s) in signs.iter().enumerate() {
            to_sign(idx / q, idx % q, i64::from(s))?;
        }
        let g = Self { p, q, signs };
        Ok(if p > q { g.transposed() } else { g })
    }

    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let p = rows.len();
        let q = rows.first().map_or(0, |r| r.as_ref().len());
        let mut signs = Vec::with_capacity(p * q);
        for r in rows {
            let r = r.as_ref();
            if r.len() != q {
                return Err(Error::LengthMismatch {
                    what: "sign table row",
                    expected: q,
                    found: r.len(),
                });
            }
            signs.extend_from_slice(r);
        }
        Self::new(p, q, signs)
    }

    pub fn all_positive(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, vec![1; p * q])
    }

    /// All-positive `K_{p,q}` with the listed `(u, v)` edges made negative.
    pub fn with_negative_edges(p: usize, q: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::EmptyPart { p, q });
        }
        let mut signs = vec![1i8; p * q];
        for &(u, v) in edges {
            if u >= p || v >= q {
                return Err(Error::Pattern(alloc::format!("edge ({u}, {v}) outside K_{{{p},{q}}}")));
            }
            signs[u * q + v] = -1;
        }
        Self::new(p, q, signs)
    }

    fn transposed(&self) -> Self {
        let mut signs = Vec::with_capacity(self.signs.len());
        for j in 0..self.q {
            for i in 0..self.p {
                signs.push(self.sign(i, j));
            }
        }
        Self {
            p: self.q,
            q: self.p,
            signs,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn order(&self) -> usize {
        self.p + self.q
    }

    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.signs[i * self.q + j]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[i8]> + '_ {
        self.signs.chunks(self.q)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// The full `(p+q) x (p+q)` adjacency matrix `[[O, B], [B^T, O]]`.
    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let n = self.order();
        let mut a = DenseMatrix::zeros(n, n);
        for i in 0..self.p {
            for j in 0..self.q {
                let s = f64::from(self.sign(i, j));
                a[(i, self.p + j)] = s;
                a[(self.p + j, i)] = s;
            }
        }
        a
    }

    /// The `p x q` sign table `B` as a real matrix.
    pub fn spectral_block(&self) -> DenseMatrix {
        let data = self.signs.iter().map(|&s| f64::from(s)).collect();
        DenseMatrix::new(self.p, self.q, data).expect("sign table has p*q entries")
    }

    /// Submatrix of the spectral block on the given U-rows and V-columns.
    pub fn sub_block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| i64::from(self.sign(i, j))).collect())
            .collect()
    }

    /// `sigma'(u_i v_j) = theta_u[i] * sigma(u_i v_j) * theta_v[j]`.
    pub fn switch(&self, f: &SwitchingFunction) -> Result<Self> {
        if f.theta_u.len() != self.p {
            return Err(Error::LengthMismatch {
                what: "switching function on U",
                expected: self.p,
                found: f.theta_u.len(),
            });
        }
        if f.theta_v.len() != self.q {
            return Err(Error::LengthMismatch {
                what: "switching function on V",
                expected: self.q,
                found: f.theta_v.len(),
            });
        }
        let mut signs = self.signs.clone();
        for i in 0..self.p {
            for j in 0..self.q {
                signs[i * self.q + j] *= f.theta_u[i] * f.theta_v[j];
            }
        }
        Ok(Self {
            p: self.p,
            q: self.q,
            signs,
        })
    }

    /// Flips the sign of every edge.
    pub fn negate(&self) -> Self {
        Self {
            p: self.p,
            q: self.q,
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// U-rows and V-columns that carry at least one negative edge.
    pub fn negative_cover(&self) -> (Vec<usize>, Vec<usize>) {
        let rows = (0..self.p)
            .filter(|&i| (0..self.q).any(|j| self.sign(i, j) < 0))
            .collect();
        let cols = (0..self.q)
            .filter(|&j| (0..self.p).any(|i| self.sign(i, j) < 0))
            .collect();
        (rows, cols)
    }

    /// Sizes `(r, s)` of the smallest induced subgraph `U_r ∪ V_s` holding
    /// every negative edge; `(0, 0)` for the all-positive graph.
    pub fn minimal_cover(&self) -> (usize, usize) {
        let (rows, cols) = self.negative_cover();
        (rows.len(), cols.len())
    }

    /// Every cycle positive. In `K_{p,q}` it suffices that each 4-cycle
    /// through `u_0` and `v_0` is positive.
    pub fn is_balanced(&self) -> bool {
        let corner = self.sign(0, 0);
        (1..self.p).all(|i| (1..self.q).all(|j| corner * self.sign(i, 0) * self.sign(0, j) * self.sign(i, j) == 1))
    }
}

/// Vertex signs `theta: U ∪ V -> {+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction {
    theta_u: Vec<i8>,
    theta_v: Vec<i8>,
}

impl SwitchingFunction {
    pub fn new(theta_u: Vec<i8>, theta_v: Vec<i8>) -> Result<Self> {
        for (idx, &t) in theta_u.iter().enumerate() {
            to_sign(0, idx, i64::from(t))?;
        }
        for (idx, &t) in theta_v.iter().enumerate() {
            to_sign(1, idx, i64::from(t))?;
        }
        Ok(Self { theta_u, theta_v })
    }

    pub fn identity(p: usize, q: usize) -> Self {
        Self {
            theta_u: vec![1; p],
            theta_v: vec![1; q],
        }
    }

    pub fn random<R: Rng + ?Sized>(p: usize, q: usize, rng: &mut R) -> Self {
        let mut pick = || if rng.random_bool(0.5) { 1 } else { -1 };
        let theta_u = (0..p).map(|_| pick()).collect();
        let theta_v = (0..q).map(|_| pick()).collect();
        Self { theta_u, theta_v }
    }

    pub fn theta_u(&self) -> &[i8] {
        &self.theta_u
    }

    pub fn theta_v(&self) -> &[i8] {
        &self.theta_v
    }
}

/// Random signing whose negative edges sit inside a random `r x s` box of
/// rows and columns, each box entry negative with probability one half.
///
/// Uniform signings almost always have the full cover `(p, q)`; boxing the
/// negatives keeps the cover (and with it the nullity bound) nontrivial.
pub fn random_signing<R: Rng + ?Sized>(p: usize, q: usize, rng: &mut R) -> Result<SignedBipartiteGraph> {
    if p == 0 || q == 0 {
        return Err(Error::EmptyPart { p, q });
    }
    let r = rng.random_range(1..=p);
    let s = rng.random_range(1..=q);
    let rows = sample_indices(p, r, rng);
    let cols = sample_indices(q, s, rng);
    let mut edges = Vec::new();
    for &i in &rows {
        for &j in &cols {
            if rng.random_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    SignedBipartiteGraph::with_negative_edges(p, q, &edges)
}

fn sample_indices<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    // partial Fisher-Yates
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        idx.swap(i, j);
    }
    idx.truncate(k);
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn example_3_1() -> SignedBipartiteGraph {
        SignedBipartiteGraph::with_negative_edges(4, 6, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn construction_normalizes_part_order() {
        let g = SignedBipartiteGraph::from_rows(&[[1, -1], [1, 1], [-1, 1]]).unwrap();
        assert_eq!((g.p(), g.q()), (2, 3));
        assert_eq!(g.rows().collect::<Vec<_>>(), [[1, 1, -1], [-1, 1, 1]]);
    }

    #[test]
    fn construction_rejects_bad_tables() {
        assert_eq!(
            SignedBipartiteGraph::new(0, 3, vec![]),
            Err(Error::EmptyPart { p: 0, q: 3 })
        );
        assert!(matches!(
            SignedBipartiteGraph::new(2, 2, vec![1, 1, 1]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            SignedBipartiteGraph::new(1, 2, vec![1, 0]),
            Err(Error::InvalidSign {
                row: 0,
                col: 1,
                value: 0
            })
        );
    }

    #[test]
    fn single_edge_adjacency() {
        let g = SignedBipartiteGraph::all_positive(1, 1).unwrap();
        assert_eq!(g.adjacency_matrix().to_rows(), [[0.0, 1.0], [1.0, 0.0]]);
    }

    #[test]
    fn example_adjacency_row_sums() {
        let a = example_3_1().adjacency_matrix();
        assert!(a.is_symmetric());
        let sums: Vec<f64> = (0..10).map(|i| a.row(i).iter().sum()).collect();
        assert_eq!(sums, [0.0, 0.0, 6.0, 6.0, 0.0, 2.0, 0.0, 2.0, 4.0, 4.0]);
    }

    #[test]
    fn example_spectral_block_and_cover() {
        let g = example_3_1();
        let b = g.spectral_block();
        assert_eq!(b.row(0), [-1.0, -1.0, -1.0, 1.0, 1.0, 1.0]);
        assert_eq!(b.row(1), [-1.0, 1.0, -1.0, -1.0, 1.0, 1.0]);
        assert_eq!(b.row(2), [1.0; 6]);
        assert_eq!(g.minimal_cover(), (2, 4));
        let (rows, cols) = g.negative_cover();
        assert_eq!(g.sub_block(&rows, &cols), [[-1, -1, -1, 1], [-1, 1, -1, -1]]);
    }

    #[test]
    fn simple_blocks() {
        let pos = SignedBipartiteGraph::all_positive(2, 3).unwrap();
        assert_eq!(pos.spectral_block().to_rows(), [[1.0; 3], [1.0; 3]]);
        assert_eq!(pos.minimal_cover(), (0, 0));
        let neg = SignedBipartiteGraph::new(2, 2, vec![-1; 4]).unwrap();
        assert_eq!(neg.spectral_block().to_rows(), [[-1.0; 2], [-1.0; 2]]);
        assert_eq!(neg.adjacency_matrix(), pos_k22().adjacency_matrix().scale(-1.0));
    }

    fn pos_k22() -> SignedBipartiteGraph {
        SignedBipartiteGraph::all_positive(2, 2).unwrap()
    }

    #[test]
    fn switching() {
        let g = example_3_1();
        assert_eq!(g.switch(&SwitchingFunction::identity(4, 6)).unwrap(), g);
        let flip = SwitchingFunction::new(vec![-1; 4], vec![-1; 6]).unwrap();
        assert_eq!(g.switch(&flip).unwrap(), g);

        let one = SwitchingFunction::new(vec![1, -1], vec![1, 1]).unwrap();
        let h = pos_k22().switch(&one).unwrap();
        assert_eq!(h.rows().collect::<Vec<_>>(), [[1, 1], [-1, -1]]);

        assert!(matches!(
            g.switch(&SwitchingFunction::identity(6, 4)),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(SwitchingFunction::new(vec![2], vec![1]).is_err());
    }

    #[test]
    fn negation() {
        let g = example_3_1();
        assert_eq!(g.negate().adjacency_matrix(), g.adjacency_matrix().scale(-1.0));
        assert_eq!(g.negate().negate(), g);
    }

    #[test]
    fn balance() {
        assert!(SignedBipartiteGraph::new(3, 4, vec![-1; 12]).unwrap().is_balanced());
        assert!(SignedBipartiteGraph::all_positive(3, 4).unwrap().is_balanced());
        let one_neg = SignedBipartiteGraph::with_negative_edges(2, 2, &[(0, 0)]).unwrap();
        assert!(!one_neg.is_balanced());
        // a star has no cycles
        assert!(SignedBipartiteGraph::from_rows(&[[1, -1, -1, 1]])
            .unwrap()
            .is_balanced());
        assert!(!example_3_1().is_balanced());
    }

    #[test]
    fn switching_preserves_balance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let f = SwitchingFunction::random(3, 5, &mut rng);
            let g = SignedBipartiteGraph::all_positive(3, 5).unwrap().switch(&f).unwrap();
            assert!(g.is_balanced());
        }
    }

    #[test]
    fn random_signings_are_reproducible() {
        let a = random_signing(5, 7, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
        let b = random_signing(5, 7, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip() {
        let g = example_3_1();
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with(r#"{"p":4,"q":6,"signs":[[-1,-1,-1,1,1,1],[-1,1,-1,-1,1,1],"#));
        let back: SignedBipartiteGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<SignedBipartiteGraph>(r#"{"p":1,"q":2,"signs":[[1,0]]}"#).is_err());
        assert!(serde_json::from_str::<SignedBipartiteGraph>(r#"{"p":2,"q":2,"signs":[[1,1]]}"#).is_err());
    }
}
