//! Adjacency spectra of signed complete bipartite graphs.
//!
//! A signed `K_{p,q}` is fully described by its `p x q` table of edge signs
//! (the *spectral block*). This crate computes the spectrum of such a graph
//! along three independent routes:
//!
//! * [`oracle`]: dense Jacobi eigendecomposition of the full `(p+q)`-order
//!   adjacency matrix;
//! * [`reduction`]: the Gram / Schur-complement pipeline, which folds the
//!   problem onto a matrix of order `min(r, s) + 1` where `(r, s)` is the
//!   negative cover;
//! * [`closedform`]: explicit formulas and small quotient matrices for
//!   structured negative-edge patterns (bicliques, paths, regular subgraphs).
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the companion `signed-spectra-cli` crate.
#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

pub mod closedform;
mod error;
pub mod linalg;
pub mod oracle;
pub mod reduction;
pub mod sgraph;

pub use closedform::ClosedFormResult;
pub use error::{Error, Result};
pub use linalg::{DenseMatrix, Spectrum};
pub use oracle::{Method, VerificationReport};
pub use reduction::ReducedForm;
pub use sgraph::{NegativePattern, PathKind, RegularSubgraph, SignedBipartiteGraph, SwitchingFunction};
