//! Graph analysis built around generation decompositions and STOCs.
//!
//! A STOC is a cycle containing exactly one secondary edge with respect to
//! the BFS spanning tree grown from a start node. This crate computes
//! per-generation propagation indices (how many nodes each hop newly
//! reaches), enumerates STOCs by generation and size, verifies the exact
//! integer relations connecting the two, and drives parameter sweeps over
//! Watts-Strogatz and Holme-Kim networks.
//!
//! Typical use:
//!
//! ```
//! use stocnet::prelude::*;
//!
//! let g = generators::ring(6).unwrap();
//! let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
//! let c = census(&g, &d).unwrap();
//! assert_eq!(local_absolute_index(&d).values, vec![1.0, 2.0, 2.0, 1.0]);
//! assert_eq!(c.total(), euler_total(&g, 0).unwrap());
//! ```

pub mod census;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod sweep;
pub mod verification;

pub mod prelude {
    pub use crate::census::{census, euler_total, stoc_per_generation_by_difference, StocCensus};
    pub use crate::decomposition::{
        decompose, EdgeClass, EdgeInfo, GenerationDecomposition, TieBreak,
    };
    pub use crate::generators::{self, GeneratorSpec};
    pub use crate::graph::{build_graph, load_edge_list, write_edge_list, Graph, NodeId};
    pub use crate::indices::{
        absolute_index, local_absolute_index, local_relative_index, relative_index, IndexSeries,
        StartSelection,
    };
    pub use crate::sweep::{run_sweep, summarize, SweepConfig, SweepModel, SweepResult};
    pub use crate::verification::{
        closed_form_index, recursion_report, recursion_residual, regular_recursion_index,
        tie_break_invariance_check,
    };
}
