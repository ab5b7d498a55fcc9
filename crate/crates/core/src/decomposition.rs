//! Generation decomposition of a graph from a start node.
//!
//! The generation of a node is its hop distance from the start; the
//! generation of an edge is `g + 1` where `g` is the smaller endpoint
//! generation. Every non-start reachable node designates exactly one edge
//! to the previous generation as its primary edge, so the primary edges
//! form a BFS spanning tree of the reachable component; every other edge
//! (extra cross-level parents and all intra-level edges) is secondary.
//!
//! Which of several candidate parents becomes primary is a tie-break
//! choice. The default picks the lowest-id previous-generation neighbor;
//! a seeded-random policy exists to exercise the claim that the quantities
//! built on top of the classification do not depend on the choice.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, NodeId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("start node {id} out of range for node count {node_count}")]
    IdOutOfRange { id: NodeId, node_count: usize },
}

/// Policy for choosing the primary parent among several previous-generation
/// neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestId,
    SeededRandom(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Primary,
    Secondary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeInfo {
    /// Edge generation: one more than the smaller endpoint generation.
    pub generation: u32,
    pub class: EdgeClass,
}

/// Node and edge generations, primary parents and level sets for one start.
#[derive(Debug, Clone)]
pub struct GenerationDecomposition {
    start: NodeId,
    node_generation: Vec<Option<u32>>,
    parent: Vec<Option<NodeId>>,
    edge_info: Vec<Option<EdgeInfo>>,
    level_sets: Vec<Vec<NodeId>>,
    reachable_edges: usize,
    source_nodes: usize,
    source_edges: usize,
}

impl GenerationDecomposition {
    pub fn start(&self) -> NodeId {
        self.start
    }

    /// Generation (hop distance) of `v`, or `None` if unreachable.
    pub fn node_generation(&self, v: NodeId) -> Option<u32> {
        self.node_generation[v as usize]
    }

    /// Primary parent of `v`; `None` for the start node and unreachable nodes.
    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v as usize]
    }

    /// Generation and class of the edge at `edge_index` in the graph's edge
    /// list; `None` if the edge lies outside the reachable component.
    pub fn edge_info(&self, edge_index: usize) -> Option<EdgeInfo> {
        self.edge_info[edge_index]
    }

    /// Nodes per generation, ascending by id within each level.
    pub fn level_sets(&self) -> &[Vec<NodeId>] {
        &self.level_sets
    }

    pub fn level_size(&self, generation: u32) -> usize {
        self.level_sets
            .get(generation as usize)
            .map_or(0, Vec::len)
    }

    /// Largest generation that contains a node (`L`).
    pub fn eccentricity(&self) -> u32 {
        (self.level_sets.len() - 1) as u32
    }

    pub fn reachable_count(&self) -> usize {
        self.level_sets.iter().map(Vec::len).sum()
    }

    /// Edges with both endpoints reachable.
    pub fn reachable_edge_count(&self) -> usize {
        self.reachable_edges
    }

    /// Fingerprint of the graph this decomposition was computed from.
    pub(crate) fn matches(&self, g: &Graph) -> bool {
        self.source_nodes == g.node_count() && self.source_edges == g.edge_count()
    }
}

/// Computes the generation decomposition of `g` from `start`.
pub fn decompose(
    g: &Graph,
    start: NodeId,
    tie_break: TieBreak,
) -> Result<GenerationDecomposition, DecompositionError> {
    if start as usize >= g.node_count() {
        return Err(DecompositionError::IdOutOfRange {
            id: start,
            node_count: g.node_count(),
        });
    }

    let n = g.node_count();
    let mut node_generation: Vec<Option<u32>> = vec![None; n];
    let mut queue = VecDeque::new();
    node_generation[start as usize] = Some(0);
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        let next = node_generation[u as usize].unwrap() + 1;
        for &w in g.neighbors(u) {
            if node_generation[w as usize].is_none() {
                node_generation[w as usize] = Some(next);
                queue.push_back(w);
            }
        }
    }

    let last = node_generation.iter().flatten().max().copied().unwrap_or(0);
    let mut level_sets: Vec<Vec<NodeId>> = vec![Vec::new(); last as usize + 1];
    for v in 0..n as NodeId {
        if let Some(gen) = node_generation[v as usize] {
            level_sets[gen as usize].push(v);
        }
    }

    let mut rng = match tie_break {
        TieBreak::LowestId => None,
        TieBreak::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut parent: Vec<Option<NodeId>> = vec![None; n];
    for v in 0..n as NodeId {
        let Some(gen) = node_generation[v as usize] else { continue };
        if gen == 0 {
            continue;
        }
        let mut previous = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| node_generation[u as usize] == Some(gen - 1));
        parent[v as usize] = Some(match &mut rng {
            // neighbors are sorted, so the first candidate is the lowest id
            None => previous.next().expect("reachable node has a parent"),
            Some(rng) => {
                let count = previous.clone().count();
                previous
                    .nth(rng.random_range(0..count))
                    .expect("index within candidate count")
            }
        });
    }

    let mut edge_info: Vec<Option<EdgeInfo>> = vec![None; g.edge_count()];
    let mut reachable_edges = 0;
    for (idx, &(u, w)) in g.edges().iter().enumerate() {
        let (Some(gu), Some(gw)) = (node_generation[u as usize], node_generation[w as usize])
        else {
            continue;
        };
        reachable_edges += 1;
        debug_assert!(gu.abs_diff(gw) <= 1, "BFS generations differ by at most one");
        let info = if gu == gw {
            EdgeInfo {
                generation: gu + 1,
                class: EdgeClass::Secondary,
            }
        } else {
            let (child, other, deeper) = if gu > gw { (u, w, gu) } else { (w, u, gw) };
            let class = if parent[child as usize] == Some(other) {
                EdgeClass::Primary
            } else {
                EdgeClass::Secondary
            };
            EdgeInfo {
                generation: deeper,
                class,
            }
        };
        edge_info[idx] = Some(info);
    }

    Ok(GenerationDecomposition {
        start,
        node_generation,
        parent,
        edge_info,
        level_sets,
        reachable_edges,
        source_nodes: g.node_count(),
        source_edges: g.edge_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::ring;
    use crate::graph::build_graph;

    fn k4() -> Graph {
        build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], None).unwrap()
    }

    #[test]
    fn cycle4_generations_and_classes() {
        let g = ring(4).unwrap();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        let gens: Vec<u32> = (0..4).map(|v| d.node_generation(v).unwrap()).collect();
        assert_eq!(gens, vec![0, 1, 2, 1]);
        // (0,1) and (0,3) are generation-1 primaries.
        for (u, v) in [(0, 1), (0, 3)] {
            let info = d.edge_info(g.edge_index(u, v).unwrap()).unwrap();
            assert_eq!(info, EdgeInfo { generation: 1, class: EdgeClass::Primary });
        }
        // Node 2 picks the lowest-id parent 1; (2,3) becomes the secondary.
        assert_eq!(d.parent(2), Some(1));
        let p = d.edge_info(g.edge_index(1, 2).unwrap()).unwrap();
        let s = d.edge_info(g.edge_index(2, 3).unwrap()).unwrap();
        assert_eq!(p, EdgeInfo { generation: 2, class: EdgeClass::Primary });
        assert_eq!(s, EdgeInfo { generation: 2, class: EdgeClass::Secondary });
    }

    #[test]
    fn cycle5_single_intra_level_secondary() {
        let g = ring(5).unwrap();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        let sizes: Vec<usize> = d.level_sets().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2]);
        let info = d.edge_info(g.edge_index(2, 3).unwrap()).unwrap();
        assert_eq!(info, EdgeInfo { generation: 3, class: EdgeClass::Secondary });
    }

    #[test]
    fn star_from_center_is_all_primary() {
        let g = build_graph(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], None).unwrap();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        assert_eq!(d.level_size(1), 5);
        for idx in 0..g.edge_count() {
            assert_eq!(d.edge_info(idx).unwrap().class, EdgeClass::Primary);
        }
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(decompose(&ring(6).unwrap(), 2, TieBreak::LowestId).unwrap().eccentricity(), 3);
        assert_eq!(decompose(&k4(), 1, TieBreak::LowestId).unwrap().eccentricity(), 1);
        let single = build_graph(&[], Some(1)).unwrap();
        assert_eq!(decompose(&single, 0, TieBreak::LowestId).unwrap().eccentricity(), 0);
    }

    #[test]
    fn primary_edges_form_spanning_tree() {
        let g = k4();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        let primaries = (0..g.edge_count())
            .filter(|&i| d.edge_info(i).map(|e| e.class) == Some(EdgeClass::Primary))
            .count();
        assert_eq!(primaries, d.reachable_count() - 1);
        let secondaries = d.reachable_edge_count() - primaries;
        assert_eq!(secondaries, g.edge_count() - g.node_count() + 1);
    }

    #[test]
    fn unreachable_nodes_have_no_generation() {
        let g = build_graph(&[(0, 1), (2, 3)], None).unwrap();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        assert_eq!(d.node_generation(2), None);
        assert_eq!(d.parent(2), None);
        assert_eq!(d.reachable_count(), 2);
        assert_eq!(d.edge_info(g.edge_index(2, 3).unwrap()), None);
    }

    #[test]
    fn node_generations_ignore_tie_break() {
        let g = k4();
        let a = decompose(&g, 0, TieBreak::LowestId).unwrap();
        for seed in 0..5 {
            let b = decompose(&g, 0, TieBreak::SeededRandom(seed)).unwrap();
            for v in 0..4 {
                assert_eq!(a.node_generation(v), b.node_generation(v));
            }
        }
    }

    #[test]
    fn start_out_of_range() {
        let g = ring(4).unwrap();
        assert!(matches!(
            decompose(&g, 7, TieBreak::LowestId),
            Err(DecompositionError::IdOutOfRange { id: 7, .. })
        ));
    }
}
