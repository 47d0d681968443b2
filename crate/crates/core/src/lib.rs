//! Quadratic embedding constants (QEC) of graphs.
//!
//! The QEC of a connected graph is the maximum of `<f, D f>` over unit
//! vectors `f` orthogonal to the all-ones vector, where `D` is the graph
//! distance matrix. A graph admits an embedding into Euclidean space with
//! squared distances equal to graph distances exactly when its QEC is
//! non-positive.
//!
//! The crate provides:
//!
//! * [`graph`] and [`generators`]: dense graphs, edge-list parsing, BFS
//!   distances and strong-regularity detection;
//! * [`spectra`]: a cyclic Jacobi eigensolver and the eigenproblem
//!   restricted to the complement of the all-ones vector;
//! * [`srg`]: closed forms for strongly regular graphs computed from the
//!   parameter tuple `(n, k, λ, μ)` alone;
//! * [`qec`]: the numeric engine for arbitrary connected graphs;
//! * [`embedding`]: construction and verification of quadratic embeddings;
//! * [`scan`]: parameter enumeration and the named-graph table.

pub mod embedding;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod qec;
pub mod scan;
pub mod spectra;
pub mod srg;
pub mod tolerance;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, SrgDetection, SrgParams};
pub use qec::{QeClass, QecMethod, QecReport};
pub use spectra::{EigenDecomposition, SymMatrix};
