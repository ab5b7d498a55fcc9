//! Shared test fixtures and independent oracles.

use std::collections::BTreeMap;

use stocnet::decomposition::{EdgeClass, GenerationDecomposition};
use stocnet::graph::{build_graph, Graph, NodeId};

/// Six-node fixture with levels {0}, {1,2,3}, {4,5} from node 0, one
/// triangle through the root, one even 4-cycle and one odd 5-cycle:
/// the smallest graph exercising every STOC kind.
#[allow(dead_code)]
pub fn six_node_fixture() -> Graph {
    build_graph(
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (2, 3),
            (1, 5),
            (2, 5),
            (3, 4),
            (4, 5),
        ],
        None,
    )
    .unwrap()
}

/// Brute-force STOC table: enumerates every simple cycle of the graph and
/// keeps those containing exactly one secondary edge, bucketed by
/// (generation of that edge, cycle length). Exponential, only for small
/// graphs; shares nothing with the census implementation beyond the edge
/// classification itself.
#[allow(dead_code)]
pub fn brute_force_stocs(g: &Graph, d: &GenerationDecomposition) -> BTreeMap<(u32, u32), u64> {
    let mut table = BTreeMap::new();
    for cycle in all_simple_cycles(g) {
        let mut secondary = Vec::new();
        let mut skip = false;
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let idx = g.edge_index(u, v).expect("cycle edges exist");
            match d.edge_info(idx) {
                None => {
                    skip = true; // cycle outside the reachable component
                    break;
                }
                Some(info) => {
                    if info.class == EdgeClass::Secondary {
                        secondary.push(info.generation);
                    }
                }
            }
        }
        if skip || secondary.len() != 1 {
            continue;
        }
        *table
            .entry((secondary[0], cycle.len() as u32))
            .or_insert(0u64) += 1;
    }
    table
}

/// Every simple cycle, listed once: the smallest node comes first and its
/// two cycle neighbors appear in ascending order.
fn all_simple_cycles(g: &Graph) -> Vec<Vec<NodeId>> {
    let mut cycles = Vec::new();
    let mut path: Vec<NodeId> = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    for s in g.nodes() {
        path.push(s);
        on_path[s as usize] = true;
        extend_cycles(g, s, &mut path, &mut on_path, &mut cycles);
        on_path[s as usize] = false;
        path.pop();
    }
    cycles
}

fn extend_cycles(
    g: &Graph,
    root: NodeId,
    path: &mut Vec<NodeId>,
    on_path: &mut [bool],
    cycles: &mut Vec<Vec<NodeId>>,
) {
    let tip = *path.last().unwrap();
    for &next in g.neighbors(tip) {
        if next == root {
            // closing edge; count the cycle once per direction
            if path.len() >= 3 && path[1] < tip {
                cycles.push(path.clone());
            }
            continue;
        }
        if next < root || on_path[next as usize] {
            continue;
        }
        path.push(next);
        on_path[next as usize] = true;
        extend_cycles(g, root, path, on_path, cycles);
        on_path[next as usize] = false;
        path.pop();
    }
}
