//! Deterministic, seeded graph generators.
//!
//! Covers the regular lattices used to verify the index/STOC relations
//! (rings, extended rings, square and triangular lattices, square torus)
//! and the random families used in the experiments (Watts-Strogatz,
//! Holme-Kim, Barabasi-Albert, Erdos-Renyi). All random generators take an
//! explicit 64-bit seed and use a portable ChaCha stream, so the same spec
//! and seed reproduce the same graph bit for bit on any platform.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{build_graph, Graph, NodeId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("graph too small: {0}")]
    TooSmall(String),
    #[error("bad degree parameter: {0}")]
    BadDegree(String),
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// A generator family together with its parameters and seed.
///
/// `build` dispatches to the matching free function; random families ignore
/// none of their fields, lattice families carry no seed.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Ring { n: usize },
    ExtendedRing { n: usize, r: usize },
    SquareLattice { rows: usize, cols: usize, torus: bool },
    TriangularLattice { rows: usize, cols: usize },
    WattsStrogatz { n: usize, k: usize, p: f64, seed: u64 },
    HolmeKim { n: usize, m: usize, q: f64, seed: u64 },
    BarabasiAlbert { n: usize, m: usize, seed: u64 },
    ErdosRenyi { n: usize, edges: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph, GeneratorError> {
        match *self {
            GeneratorSpec::Ring { n } => ring(n),
            GeneratorSpec::ExtendedRing { n, r } => extended_ring(n, r),
            GeneratorSpec::SquareLattice { rows, cols, torus } => square_lattice(rows, cols, torus),
            GeneratorSpec::TriangularLattice { rows, cols } => triangular_lattice(rows, cols),
            GeneratorSpec::WattsStrogatz { n, k, p, seed } => watts_strogatz(n, k, p, seed),
            GeneratorSpec::HolmeKim { n, m, q, seed } => holme_kim(n, m, q, seed),
            GeneratorSpec::BarabasiAlbert { n, m, seed } => barabasi_albert(n, m, seed),
            GeneratorSpec::ErdosRenyi { n, edges, seed } => erdos_renyi(n, edges, seed),
        }
    }
}

fn finish(n: usize, edges: Vec<(NodeId, NodeId)>) -> Graph {
    build_graph(&edges, Some(n)).expect("generator emitted an invalid edge set")
}

/// Cycle graph C_n: every degree 2, n edges.
pub fn ring(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::TooSmall(format!("ring needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n)
        .map(|i| (i as NodeId, ((i + 1) % n) as NodeId))
        .collect();
    Ok(finish(n, edges))
}

/// Ring with each node joined to its r nearest neighbors on both sides:
/// node i is adjacent to i±1, ..., i±r (mod n), so every degree is 2r.
pub fn extended_ring(n: usize, r: usize) -> Result<Graph, GeneratorError> {
    if r < 1 || n <= 2 * r {
        return Err(GeneratorError::TooSmall(format!(
            "extended ring needs n > 2r >= 2, got n={n}, r={r}"
        )));
    }
    let mut edges = Vec::with_capacity(n * r);
    for j in 1..=r {
        for i in 0..n {
            edges.push((i as NodeId, ((i + j) % n) as NodeId));
        }
    }
    Ok(finish(n, edges))
}

/// Square (tetragonal) lattice on a rows x cols grid. Open boundaries give
/// the usual 4-neighbor grid; with `torus` both axes wrap and every node has
/// degree 4. Node id of cell (r, c) is `r * cols + c`.
pub fn square_lattice(rows: usize, cols: usize, torus: bool) -> Result<Graph, GeneratorError> {
    let min = if torus { 3 } else { 2 };
    if rows < min || cols < min {
        return Err(GeneratorError::TooSmall(format!(
            "square lattice needs rows, cols >= {min}, got {rows}x{cols}"
        )));
    }
    let id = |r: usize, c: usize| (r * cols + c) as NodeId;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            } else if torus {
                edges.push((id(r, c), id(r, 0)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            } else if torus {
                edges.push((id(r, c), id(0, c)));
            }
        }
    }
    Ok(finish(rows * cols, edges))
}

/// Triangular lattice in row-offset coordinates: besides the 4-neighbor grid
/// adjacency, even rows connect down-left and odd rows down-right, which
/// gives interior nodes degree 6.
pub fn triangular_lattice(rows: usize, cols: usize) -> Result<Graph, GeneratorError> {
    if rows < 2 || cols < 2 {
        return Err(GeneratorError::TooSmall(format!(
            "triangular lattice needs rows, cols >= 2, got {rows}x{cols}"
        )));
    }
    let id = |r: usize, c: usize| (r * cols + c) as NodeId;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
                if r % 2 == 0 {
                    if c >= 1 {
                        edges.push((id(r, c), id(r + 1, c - 1)));
                    }
                } else if c + 1 < cols {
                    edges.push((id(r, c), id(r + 1, c + 1)));
                }
            }
        }
    }
    Ok(finish(rows * cols, edges))
}

/// Watts-Strogatz small-world graph.
///
/// Starts from `extended_ring(n, k/2)` and visits every original lattice
/// edge in a fixed order (ring distance first, then node id). With
/// probability `p` the far endpoint of the visited edge is rewired to a
/// node drawn uniformly at random, redrawing while the draw would create a
/// self-loop or a duplicate edge. Rewiring is skipped when the kept
/// endpoint is already adjacent to everything else, so the edge count is
/// always exactly `n * k / 2`.
pub fn watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if k % 2 != 0 || k < 2 {
        return Err(GeneratorError::BadDegree(format!("k must be even and >= 2, got {k}")));
    }
    if n < k + 1 {
        return Err(GeneratorError::BadDegree(format!(
            "need n >= k + 1, got n={n}, k={k}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::BadProbability(p));
    }
    let r = k / 2;
    let mut adj: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); n];
    let add = |adj: &mut Vec<BTreeSet<NodeId>>, u: NodeId, v: NodeId| {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    };
    for j in 1..=r {
        for i in 0..n {
            add(&mut adj, i as NodeId, ((i + j) % n) as NodeId);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for j in 1..=r {
        for i in 0..n {
            if !rng.random_bool(p) {
                continue;
            }
            let keep = i as NodeId;
            let old = ((i + j) % n) as NodeId;
            if adj[keep as usize].len() >= n - 1 {
                continue; // no legal target left
            }
            let new = loop {
                let w = rng.random_range(0..n as NodeId);
                if w != keep && !adj[keep as usize].contains(&w) {
                    break w;
                }
            };
            adj[keep as usize].remove(&old);
            adj[old as usize].remove(&keep);
            add(&mut adj, keep, new);
        }
    }

    let edges: Vec<(NodeId, NodeId)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| (u as NodeId) < v)
                .map(move |&v| (u as NodeId, v))
        })
        .collect();
    debug_assert_eq!(edges.len(), n * r, "rewiring must preserve the edge count");
    Ok(finish(n, edges))
}

/// Holme-Kim growing network with triad formation.
///
/// Starts from a clique on `m + 1` nodes. Each subsequent node attaches `m`
/// edges: the first always by preferential attachment (probability
/// proportional to current degree, duplicates redrawn); every further edge
/// is, with probability `q`, a triad step to a uniformly chosen neighbor of
/// the last preferential-attachment target (skipping nodes already adjacent,
/// and falling back to preferential attachment when no neighbor is eligible)
/// and otherwise a fresh preferential-attachment step. With `q = 0` this is
/// the Barabasi-Albert rule.
pub fn holme_kim(n: usize, m: usize, q: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if m < 1 || m >= n {
        return Err(GeneratorError::BadParameter(format!(
            "need 1 <= m < n, got m={m}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(GeneratorError::BadParameter(format!(
            "triad probability {q} outside [0, 1]"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); n];
    // One entry per unit of degree; drawing uniformly from this list is
    // preferential attachment.
    let mut repeated: Vec<NodeId> = Vec::with_capacity(2 * (m * (m + 1) / 2 + (n - m - 1) * m));

    for u in 0..=m {
        for v in (u + 1)..=m {
            adj[u].insert(v as NodeId);
            adj[v].insert(u as NodeId);
        }
    }
    for u in 0..=m {
        for _ in 0..m {
            repeated.push(u as NodeId);
        }
    }

    for v in (m + 1)..n {
        let v = v as NodeId;
        let draw_pa = |rng: &mut ChaCha8Rng, adj: &[BTreeSet<NodeId>], repeated: &[NodeId]| loop {
            let t = repeated[rng.random_range(0..repeated.len())];
            if t != v && !adj[v as usize].contains(&t) {
                break t;
            }
        };

        let first = draw_pa(&mut rng, &adj, &repeated);
        adj[v as usize].insert(first);
        adj[first as usize].insert(v);
        repeated.push(first);
        let mut last_pa = first;

        for _ in 1..m {
            let mut target = None;
            if rng.random_bool(q) {
                let eligible: Vec<NodeId> = adj[last_pa as usize]
                    .iter()
                    .copied()
                    .filter(|&w| w != v && !adj[v as usize].contains(&w))
                    .collect();
                if !eligible.is_empty() {
                    target = Some(eligible[rng.random_range(0..eligible.len())]);
                }
            }
            let t = match target {
                Some(t) => t,
                None => {
                    let t = draw_pa(&mut rng, &adj, &repeated);
                    last_pa = t;
                    t
                }
            };
            adj[v as usize].insert(t);
            adj[t as usize].insert(v);
            repeated.push(t);
        }
        for _ in 0..m {
            repeated.push(v);
        }
    }

    let edges: Vec<(NodeId, NodeId)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&w| (u as NodeId) < w)
                .map(move |&w| (u as NodeId, w))
        })
        .collect();
    Ok(finish(n, edges))
}

/// Barabasi-Albert preferential attachment: `holme_kim` with `q = 0`.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph, GeneratorError> {
    holme_kim(n, m, 0.0, seed)
}

/// Uniform random simple graph with exactly `edge_count` edges (G(n, M)).
///
/// Samples `edge_count` distinct pair indices with a sparse Fisher-Yates
/// pass, so the draw is exactly uniform for any density.
pub fn erdos_renyi(n: usize, edge_count: usize, seed: u64) -> Result<Graph, GeneratorError> {
    let total = n as u64 * (n as u64 - 1) / 2;
    if edge_count as u64 > total {
        return Err(GeneratorError::BadParameter(format!(
            "requested {edge_count} edges but only {total} pairs exist for n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut swapped: std::collections::HashMap<u64, u64> = std::collections::HashMap::new();
    let mut edges = Vec::with_capacity(edge_count);
    for i in 0..edge_count as u64 {
        let j = rng.random_range(i..total);
        let pick = swapped.get(&j).copied().unwrap_or(j);
        let at_i = swapped.get(&i).copied().unwrap_or(i);
        swapped.insert(j, at_i);
        edges.push(decode_pair(n, pick));
    }
    Ok(finish(n, edges))
}

/// Maps a linear index over the pairs (0,1), (0,2), ..., (n-2, n-1) back to
/// the pair itself.
fn decode_pair(n: usize, t: u64) -> (NodeId, NodeId) {
    let offset = |u: u64| u * (2 * n as u64 - u - 1) / 2;
    let (mut lo, mut hi) = (0u64, n as u64 - 1);
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if offset(mid) <= t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u = lo;
    let v = u + 1 + (t - offset(u));
    (u as NodeId, v as NodeId)
}
