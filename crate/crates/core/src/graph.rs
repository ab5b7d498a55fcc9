//! Undirected simple graph: construction, validation and edge-list I/O.
//!
//! Node ids are contiguous `0..node_count`. Self-loops and duplicate edges
//! are rejected at construction time; neighbor lists are kept sorted so that
//! every traversal over the graph is deterministic.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

/// Node identifier. Ids are dense: every id below `node_count` is a node.
pub type NodeId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at node {node}{}", fmt_line(.line))]
    SelfLoop { node: u64, line: Option<usize> },
    #[error("duplicate edge ({u}, {v}){}", fmt_line(.line))]
    DuplicateEdge { u: u64, v: u64, line: Option<usize> },
    #[error("node id {id} out of range for node count {node_count}")]
    IdOutOfRange { id: NodeId, node_count: usize },
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(n) => format!(" (line {n})"),
        None => String::new(),
    }
}

/// Immutable undirected simple graph.
///
/// Stores both a canonical sorted edge list (pairs `(u, v)` with `u < v`)
/// and per-node sorted adjacency lists. Construction validates simplicity;
/// after that the graph is read-only and safe to share across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edges: Vec<(NodeId, NodeId)>,
    labels: Option<Vec<u64>>,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Neighbors of `v`, sorted ascending. Panics if `v` is out of range.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v as usize]
    }

    /// Canonical edge list: pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        if u as usize >= self.node_count() || v as usize >= self.node_count() {
            return false;
        }
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Index of edge `(u, v)` in [`Graph::edges`], independent of endpoint order.
    pub fn edge_index(&self, u: NodeId, v: NodeId) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Original label of `v` as read from an edge-list file; equals `v`
    /// itself for graphs built directly from id pairs.
    pub fn label(&self, v: NodeId) -> u64 {
        match &self.labels {
            Some(labels) => labels[v as usize],
            None => u64::from(v),
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        0..self.node_count() as NodeId
    }

    pub fn is_connected(&self) -> bool {
        match self.node_count() {
            0 => true,
            _ => connected_component(self, 0).map_or(false, |c| c.len() == self.node_count()),
        }
    }

    fn check_id(&self, v: NodeId) -> Result<(), GraphError> {
        if (v as usize) < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::IdOutOfRange {
                id: v,
                node_count: self.node_count(),
            })
        }
    }
}

/// Builds a validated graph from id pairs.
///
/// When `node_count` is `None` it is inferred as `max id + 1`, so isolated
/// nodes can only exist when an explicit count is supplied.
pub fn build_graph(pairs: &[(NodeId, NodeId)], node_count: Option<usize>) -> Result<Graph, GraphError> {
    let inferred = pairs
        .iter()
        .map(|&(u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap_or(0);
    let n = match node_count {
        Some(n) => {
            for &(u, v) in pairs {
                for id in [u, v] {
                    if id as usize >= n {
                        return Err(GraphError::IdOutOfRange { id, node_count: n });
                    }
                }
            }
            n
        }
        None => inferred,
    };

    let mut canonical: Vec<(NodeId, NodeId)> = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        if u == v {
            return Err(GraphError::SelfLoop {
                node: u64::from(u),
                line: None,
            });
        }
        canonical.push((u.min(v), u.max(v)));
    }
    canonical.sort_unstable();
    if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
        return Err(GraphError::DuplicateEdge {
            u: u64::from(w[0].0),
            v: u64::from(w[0].1),
            line: None,
        });
    }

    Ok(assemble(n, canonical, None))
}

/// Assembles a graph from already-validated canonical edges.
fn assemble(node_count: usize, edges: Vec<(NodeId, NodeId)>, labels: Option<Vec<u64>>) -> Graph {
    let mut adjacency = vec![Vec::new(); node_count];
    for &(u, v) in &edges {
        adjacency[u as usize].push(v);
        adjacency[v as usize].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    debug_assert_eq!(
        adjacency.iter().map(Vec::len).sum::<usize>(),
        2 * edges.len(),
        "degree sum must be twice the edge count"
    );
    Graph {
        adjacency,
        edges,
        labels,
    }
}

/// Reads an edge list: one `u v` pair per line, `#` starts a comment,
/// blank lines are ignored. Labels are arbitrary non-negative integers and
/// are remapped to contiguous ids in order of first appearance; the original
/// labels are retained and used again when the graph is written back out.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut ids: HashMap<u64, NodeId> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut seen: HashMap<(NodeId, NodeId), usize> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| GraphError::Parse {
            line: line_no,
            reason: e.to_string(),
        })?;
        let content = match line.find('#') {
            Some(pos) => &line[..pos],
            None => &line[..],
        };
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            if content.trim().is_empty() {
                continue;
            }
            return Err(GraphError::Parse {
                line: line_no,
                reason: format!("expected two node labels, got {:?}", content.trim()),
            });
        };
        if let Some(extra) = tokens.next() {
            return Err(GraphError::Parse {
                line: line_no,
                reason: format!("unexpected trailing token {extra:?}"),
            });
        }
        let parse = |tok: &str| {
            tok.parse::<u64>().map_err(|_| GraphError::Parse {
                line: line_no,
                reason: format!("invalid node label {tok:?}"),
            })
        };
        let (la, lb) = (parse(a)?, parse(b)?);
        if la == lb {
            return Err(GraphError::SelfLoop {
                node: la,
                line: Some(line_no),
            });
        }
        let mut intern = |label: u64| -> NodeId {
            *ids.entry(label).or_insert_with(|| {
                labels.push(label);
                (labels.len() - 1) as NodeId
            })
        };
        let (u, v) = (intern(la), intern(lb));
        let key = (u.min(v), u.max(v));
        if seen.insert(key, line_no).is_some() {
            return Err(GraphError::DuplicateEdge {
                u: la,
                v: lb,
                line: Some(line_no),
            });
        }
        edges.push(key);
    }

    edges.sort_unstable();
    Ok(assemble(labels.len(), edges, Some(labels)))
}

/// Writes the graph in the edge-list format accepted by [`load_edge_list`],
/// using original labels when present. Isolated nodes are not representable
/// in this format and are dropped.
pub fn write_edge_list<W: Write>(g: &Graph, mut writer: W) -> io::Result<()> {
    for &(u, v) in g.edges() {
        writeln!(writer, "{} {}", g.label(u), g.label(v))?;
    }
    Ok(())
}

/// Nodes reachable from `v`, including `v` itself, sorted ascending.
pub fn connected_component(g: &Graph, v: NodeId) -> Result<Vec<NodeId>, GraphError> {
    g.check_id(v)?;
    let mut visited = vec![false; g.node_count()];
    let mut queue = std::collections::VecDeque::new();
    visited[v as usize] = true;
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !visited[w as usize] {
                visited[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    Ok((0..g.node_count() as NodeId)
        .filter(|&u| visited[u as usize])
        .collect())
}

/// Edges with both endpoints inside the component of `v`, as edge indices.
pub(crate) fn component_edge_count(g: &Graph, component: &[NodeId]) -> usize {
    let mut inside = vec![false; g.node_count()];
    for &u in component {
        inside[u as usize] = true;
    }
    g.edges()
        .iter()
        .filter(|&&(u, _)| inside[u as usize])
        .count()
}
