//! STOC census: cycles containing exactly one secondary edge.
//!
//! Every secondary edge closes exactly one cycle through the primary
//! spanning tree (its fundamental cycle), and every cycle with exactly one
//! secondary edge arises this way, so STOCs are enumerated by walking each
//! secondary edge's endpoints up to their lowest common tree ancestor. An
//! intra-level secondary edge yields a cycle with an odd node count, a
//! cross-level one an even count; a generation-M STOC has at least 3 and at
//! most 2M nodes.
//!
//! The total over all generations depends only on the component's node and
//! edge counts: every start node sees exactly `1 + edges - nodes` STOCs,
//! the graph analogue of the polyhedron surface count.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::decomposition::{EdgeClass, GenerationDecomposition};
use crate::graph::{connected_component, Graph, GraphError, NodeId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("decomposition does not belong to this graph")]
    MismatchedInputs,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Counts of STOCs by generation and node count for one start node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StocCensus {
    start: NodeId,
    counts: BTreeMap<(u32, u32), u64>,
    per_generation: Vec<u64>,
    cumulative: Vec<u64>,
}

impl StocCensus {
    pub fn start(&self) -> NodeId {
        self.start
    }

    /// Sparse table: `(generation, node_count) -> count`, ordered.
    pub fn counts(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.counts
    }

    /// Number of generation-`m` STOCs with exactly `j` nodes.
    pub fn count(&self, m: u32, j: u32) -> u64 {
        self.counts.get(&(m, j)).copied().unwrap_or(0)
    }

    /// STOC counts per generation, indexed 0..=L+1. The final entry belongs
    /// to the dummy generation: intra-level edges among last-generation
    /// nodes close cycles there.
    pub fn per_generation(&self) -> &[u64] {
        &self.per_generation
    }

    /// Cumulative count through generation `m`; saturates at the total.
    pub fn cumulative(&self, m: u32) -> u64 {
        let idx = (m as usize).min(self.cumulative.len() - 1);
        self.cumulative[idx]
    }

    /// Total number of STOCs seen from this start node.
    pub fn total(&self) -> u64 {
        *self.cumulative.last().unwrap()
    }

    /// Largest generation index carried by the census (`L + 1`).
    pub fn max_generation(&self) -> u32 {
        (self.per_generation.len() - 1) as u32
    }
}

/// Enumerates all STOCs of `g` as seen from the start of `d`.
pub fn census(g: &Graph, d: &GenerationDecomposition) -> Result<StocCensus, CensusError> {
    if !d.matches(g) {
        return Err(CensusError::MismatchedInputs);
    }

    let dummy = d.eccentricity() as usize + 1;
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let mut per_generation = vec![0u64; dummy + 1];

    for (idx, &(u, w)) in g.edges().iter().enumerate() {
        let Some(info) = d.edge_info(idx) else { continue };
        if info.class != EdgeClass::Secondary {
            continue;
        }
        let j = fundamental_cycle_size(d, u, w);
        let intra = d.node_generation(u) == d.node_generation(w);
        debug_assert!(
            intra == (j % 2 == 1),
            "intra-level secondaries close odd cycles, cross-level even ones"
        );
        debug_assert!(3 <= j && j <= 2 * info.generation);
        *counts.entry((info.generation, j)).or_insert(0) += 1;
        per_generation[info.generation as usize] += 1;
    }

    let mut cumulative = Vec::with_capacity(per_generation.len());
    let mut running = 0u64;
    for &c in &per_generation {
        running += c;
        cumulative.push(running);
    }

    Ok(StocCensus {
        start: d.start(),
        counts,
        per_generation,
        cumulative,
    })
}

/// Node count of the fundamental cycle closed by the secondary edge
/// `(u, w)`: both endpoints walk up the primary tree to their lowest common
/// ancestor.
fn fundamental_cycle_size(d: &GenerationDecomposition, u: NodeId, w: NodeId) -> u32 {
    let (mut a, mut b) = (u, w);
    let (mut da, mut db) = (
        d.node_generation(a).expect("secondary edge endpoint is reachable"),
        d.node_generation(b).expect("secondary edge endpoint is reachable"),
    );
    let (du, dw) = (da, db);
    while da > db {
        a = d.parent(a).expect("non-root node has a parent");
        da -= 1;
    }
    while db > da {
        b = d.parent(b).expect("non-root node has a parent");
        db -= 1;
    }
    while a != b {
        a = d.parent(a).expect("non-root node has a parent");
        b = d.parent(b).expect("non-root node has a parent");
        da -= 1;
    }
    du + dw - 2 * da + 1
}

/// `1 + edges - nodes` over the connected component containing `v`: the
/// total STOC count from any start inside that component.
pub fn euler_total(g: &Graph, component_of: NodeId) -> Result<u64, CensusError> {
    let component = connected_component(g, component_of)?;
    let edges = crate::graph::component_edge_count(g, &component);
    Ok((1 + edges - component.len()) as u64)
}

/// Per-generation STOC counts computed without classifying edges: the
/// cumulative count through generation M equals
/// `1 + (edges of generation <= M) - (nodes of generation <= M)`, and the
/// per-generation counts are differences of adjacent cumulative values.
///
/// Agrees elementwise with [`census`]'s per-generation totals; the two
/// routes share only the generation numbers.
pub fn stoc_per_generation_by_difference(
    g: &Graph,
    d: &GenerationDecomposition,
) -> Result<Vec<u64>, CensusError> {
    if !d.matches(g) {
        return Err(CensusError::MismatchedInputs);
    }
    let dummy = d.eccentricity() as usize + 1;
    let mut edge_hist = vec![0i64; dummy + 1];
    for idx in 0..g.edge_count() {
        if let Some(info) = d.edge_info(idx) {
            edge_hist[info.generation as usize] += 1;
        }
    }
    let mut node_hist = vec![0i64; dummy + 1];
    for (gen, level) in d.level_sets().iter().enumerate() {
        node_hist[gen] = level.len() as i64;
    }

    let mut result = Vec::with_capacity(dummy + 1);
    let (mut edges_so_far, mut nodes_so_far) = (0i64, 0i64);
    let mut previous = 0i64;
    for m in 0..=dummy {
        edges_so_far += edge_hist[m];
        nodes_so_far += node_hist[m];
        let cumulative = 1 + edges_so_far - nodes_so_far;
        debug_assert!(cumulative >= previous, "cumulative STOC count is monotone");
        result.push((cumulative - previous) as u64);
        previous = cumulative;
    }
    Ok(result)
}
