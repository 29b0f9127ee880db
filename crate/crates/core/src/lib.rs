//! Decomposition trees of k-connected graphs by pairwise independent
//! cutsets, specialised to biconnected graphs and their single 2-vertex
//! cutsets.
//!
//! The crate is `no_std` (it needs `alloc`). Everything works on the
//! immutable [`Graph`] value; surgery returns new graphs.
//!
//! * [`connectivity`]: cutset enumeration, the separates/splits predicates,
//!   independence and single cutsets.
//! * [`decomposition`]: parts, the augmented graph, decomposition trees,
//!   the block–cutpoint tree and part classification.
//! * [`planarity`]: subdivision witnesses and the part-wise planarity test.
//! * [`coloring`]: level-order colorings and list colorings along the tree.
//! * [`critical`]: recognition and generation of critical biconnected graphs.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod connectivity;
pub mod critical;
pub mod decomposition;
mod error;
pub mod graph;
pub mod planarity;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex, VertexSet};
