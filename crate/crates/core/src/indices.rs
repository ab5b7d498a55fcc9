//! Absolute and relative propagation indices.
//!
//! The local absolute index of generation M counts the nodes first reached
//! at hop M from a start node; the relative index is the ratio of
//! consecutive absolute values. Averaged variants take the mean over start
//! nodes: the absolute average divides by the full number of selected
//! starts (a start contributes 0 beyond its eccentricity), while the
//! relative average only includes starts for which the next generation
//! exists, with `support` recording how many did.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::decomposition::{decompose, GenerationDecomposition, TieBreak};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("empty start sample: requested {requested} of {available} nodes")]
    EmptySample { requested: usize, available: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    Absolute,
    Relative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexScope {
    Local { start: NodeId },
    Averaged { starts: usize },
}

/// Which start nodes an averaged index runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartSelection {
    All,
    Sample { size: usize, seed: u64 },
}

/// A per-generation series of index values.
///
/// `dispersion` and `support` are per-generation and only populated for
/// averaged scope: the population standard deviation over contributing
/// starts, and how many starts contributed.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexSeries {
    pub kind: IndexKind,
    pub scope: IndexScope,
    pub values: Vec<f64>,
    pub dispersion: Vec<f64>,
    pub support: Vec<u64>,
}

/// Per-generation counts of newly reached nodes: `values[M]` is the size of
/// generation M, starting with 1 at generation 0.
pub fn local_absolute_index(d: &GenerationDecomposition) -> IndexSeries {
    IndexSeries {
        kind: IndexKind::Absolute,
        scope: IndexScope::Local { start: d.start() },
        values: d.level_sets().iter().map(|l| l.len() as f64).collect(),
        dispersion: Vec::new(),
        support: Vec::new(),
    }
}

/// Ratios of consecutive absolute values, defined for generations
/// 0..eccentricity (the series is one shorter than the absolute one).
pub fn local_relative_index(d: &GenerationDecomposition) -> IndexSeries {
    let sizes: Vec<f64> = d.level_sets().iter().map(|l| l.len() as f64).collect();
    IndexSeries {
        kind: IndexKind::Relative,
        scope: IndexScope::Local { start: d.start() },
        values: sizes.windows(2).map(|w| w[1] / w[0]).collect(),
        dispersion: Vec::new(),
        support: Vec::new(),
    }
}

/// Resolves a start selection to a sorted list of start nodes.
pub fn resolve_starts(g: &Graph, selection: StartSelection) -> Result<Vec<NodeId>, IndexError> {
    let n = g.node_count();
    match selection {
        StartSelection::All => {
            if n == 0 {
                return Err(IndexError::EmptySample { requested: 0, available: 0 });
            }
            Ok((0..n as NodeId).collect())
        }
        StartSelection::Sample { size, seed } => {
            if size == 0 || size > n {
                return Err(IndexError::EmptySample { requested: size, available: n });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picks = rand::seq::index::sample(&mut rng, n, size).into_vec();
            picks.sort_unstable();
            Ok(picks.into_iter().map(|v| v as NodeId).collect())
        }
    }
}

/// Mean of the local absolute index over the selected starts; a start
/// contributes 0 at generations beyond its eccentricity.
pub fn absolute_index(g: &Graph, selection: StartSelection) -> Result<IndexSeries, IndexError> {
    let starts = resolve_starts(g, selection)?;
    let series: Vec<Vec<f64>> = starts
        .par_iter()
        .map(|&s| {
            let d = decompose(g, s, TieBreak::LowestId).expect("start ids are in range");
            d.level_sets().iter().map(|l| l.len() as f64).collect()
        })
        .collect();

    let len = series.iter().map(Vec::len).max().unwrap_or(0);
    let count = starts.len() as f64;
    let mut sum = vec![0.0; len];
    let mut sumsq = vec![0.0; len];
    for s in &series {
        for (m, &v) in s.iter().enumerate() {
            sum[m] += v;
            sumsq[m] += v * v;
        }
    }
    let values: Vec<f64> = sum.iter().map(|&s| s / count).collect();
    let dispersion = values
        .iter()
        .zip(&sumsq)
        .map(|(&mean, &sq)| (sq / count - mean * mean).max(0.0).sqrt())
        .collect();
    Ok(IndexSeries {
        kind: IndexKind::Absolute,
        scope: IndexScope::Averaged { starts: starts.len() },
        values,
        dispersion,
        support: vec![starts.len() as u64; len],
    })
}

/// Mean of the local relative index over the selected starts, restricted at
/// each generation to the starts for which the ratio is defined.
pub fn relative_index(g: &Graph, selection: StartSelection) -> Result<IndexSeries, IndexError> {
    let starts = resolve_starts(g, selection)?;
    let series: Vec<Vec<f64>> = starts
        .par_iter()
        .map(|&s| {
            let d = decompose(g, s, TieBreak::LowestId).expect("start ids are in range");
            local_relative_index(&d).values
        })
        .collect();

    let len = series.iter().map(Vec::len).max().unwrap_or(0);
    let mut sum = vec![0.0; len];
    let mut sumsq = vec![0.0; len];
    let mut support = vec![0u64; len];
    for s in &series {
        for (m, &v) in s.iter().enumerate() {
            sum[m] += v;
            sumsq[m] += v * v;
            support[m] += 1;
        }
    }
    let values: Vec<f64> = sum
        .iter()
        .zip(&support)
        .map(|(&s, &n)| s / n as f64)
        .collect();
    let dispersion = values
        .iter()
        .zip(sumsq.iter().zip(&support))
        .map(|(&mean, (&sq, &n))| (sq / n as f64 - mean * mean).max(0.0).sqrt())
        .collect();
    Ok(IndexSeries {
        kind: IndexKind::Relative,
        scope: IndexScope::Averaged { starts: starts.len() },
        values,
        dispersion,
        support,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::ring;
    use crate::graph::build_graph;

    fn local_abs(g: &Graph, start: NodeId) -> Vec<f64> {
        let d = decompose(g, start, TieBreak::LowestId).unwrap();
        local_absolute_index(&d).values
    }

    #[test]
    fn cycle6_local_absolute() {
        let g = ring(6).unwrap();
        for start in 0..6 {
            assert_eq!(local_abs(&g, start), vec![1.0, 2.0, 2.0, 1.0]);
        }
    }

    #[test]
    fn star_from_center() {
        let g = build_graph(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], None).unwrap();
        assert_eq!(local_abs(&g, 0), vec![1.0, 5.0]);
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        assert_eq!(local_relative_index(&d).values, vec![5.0]);
    }

    #[test]
    fn cycle6_relative() {
        let g = ring(6).unwrap();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        assert_eq!(local_relative_index(&d).values, vec![2.0, 1.0, 0.5]);
    }

    #[test]
    fn path_end_relative() {
        let g = build_graph(&[(0, 1), (1, 2)], None).unwrap();
        let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
        assert_eq!(local_relative_index(&d).values, vec![1.0, 1.0]);
    }

    #[test]
    fn averaged_absolute_on_vertex_transitive_graph() {
        let g = ring(6).unwrap();
        let s = absolute_index(&g, StartSelection::All).unwrap();
        assert_eq!(s.values, vec![1.0, 2.0, 2.0, 1.0]);
        assert!(s.dispersion.iter().all(|&d| d == 0.0));
        assert_eq!(s.support, vec![6; 4]);
    }

    #[test]
    fn averaged_absolute_on_path() {
        // Ends see [1,1,1], the middle sees [1,2]; generation 1 averages 4/3.
        let g = build_graph(&[(0, 1), (1, 2)], None).unwrap();
        let s = absolute_index(&g, StartSelection::All).unwrap();
        assert_eq!(s.values[0], 1.0);
        assert!((s.values[1] - 4.0 / 3.0).abs() < 1e-12);
        assert!((s.values[2] - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn averaged_absolute_on_k4() {
        let g = build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], None).unwrap();
        let s = absolute_index(&g, StartSelection::All).unwrap();
        assert_eq!(s.values, vec![1.0, 3.0]);
    }

    #[test]
    fn relative_support_shrinks_on_path() {
        // From the ends the ratio exists at generations 0 and 1, from the
        // middle only at generation 0.
        let g = build_graph(&[(0, 1), (1, 2)], None).unwrap();
        let s = relative_index(&g, StartSelection::All).unwrap();
        assert_eq!(s.support, vec![3, 2]);
        assert!((s.values[0] - (1.0 + 2.0 + 1.0) / 3.0).abs() < 1e-12);
        assert!((s.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn local_absolute_sums_to_component_size() {
        let g = build_graph(&[(0, 1), (1, 2), (3, 4)], None).unwrap();
        let total: f64 = local_abs(&g, 0).iter().sum();
        assert_eq!(total, 3.0);
    }

    #[test]
    fn sampled_starts_are_deterministic() {
        let g = ring(30).unwrap();
        let a = resolve_starts(&g, StartSelection::Sample { size: 5, seed: 9 }).unwrap();
        let b = resolve_starts(&g, StartSelection::Sample { size: 5, seed: 9 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn empty_sample_rejected() {
        let g = ring(5).unwrap();
        assert!(matches!(
            absolute_index(&g, StartSelection::Sample { size: 0, seed: 1 }),
            Err(IndexError::EmptySample { .. })
        ));
        assert!(matches!(
            relative_index(&g, StartSelection::Sample { size: 6, seed: 1 }),
            Err(IndexError::EmptySample { .. })
        ));
    }
}
