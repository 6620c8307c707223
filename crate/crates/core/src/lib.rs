//! k-clique listing by edge-oriented branch and bound.
//!
//! ```
//! use kclique::{generate, listing::{count_cliques, Algorithm}};
//!
//! let g = generate::complete(6);
//! assert_eq!(count_cliques(&g, 4, Algorithm::EbbkcH).unwrap(), 15);
//! ```

pub mod combinatorics;
pub mod error;
pub mod generate;
pub mod graph;
pub mod listing;
pub mod oracle;
pub mod ordering;
pub mod plex;
pub mod stats;

pub use error::{Error, Result};
pub use graph::{build_graph, parse_edge_list, parse_edge_list_str, EdgeId, Graph, LocalGraph, Vertex};
pub use listing::{count_cliques, list, Algorithm, CliqueSink, ListConfig, ListReport, ListStats, PruneConfig, Scheme};
pub use plex::EtPolicy;
