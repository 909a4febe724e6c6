//! Counting and detecting bipartite patterns in degenerate graphs.
//!
//! Every algorithm here works on a degeneracy ordering of the input graph.
//! Left neighbourhoods in such an ordering have at most `d` vertices, so
//! dictionaries over their subsets stay small. From those dictionaries
//! [`witness::ExactNeighborhoodTable`] answers "how many vertices see exactly
//! `X` inside `S`" for a small query set `S`. The table drives:
//!
//! * [`counter`]: counting and detecting bipartite patterns, including the
//!   dedicated biclique and co-matching paths,
//! * [`vc`]: the exact VC-dimension, its approximations and a clique
//!   reduction used to generate hard instances,
//! * [`ladder`]: a factor-two approximation of the ladder index.
//!
//! [`harness`] wraps these behind a JSON/CSV command surface used by the
//! `degpat` binary.

pub mod control;
pub mod counter;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod ladder;
pub mod pattern;
pub mod subset_dict;
pub mod vc;
pub mod witness;

pub use control::Control;
pub use error::{Error, Result};
pub use graph::{degeneracy_order, load_edge_list, Graph, LoadedGraph, OrderedGraph, Vertex};
