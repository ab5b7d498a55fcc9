//! Parameter sweeps over Watts-Strogatz and Holme-Kim networks.
//!
//! For every grid point and replicate a graph is generated (reseeding on
//! the rare disconnected draw), decomposed from every selected start node,
//! and reduced to per-generation means of the absolute index, the relative
//! index and the STOC count. Per-start series shorter than the longest one
//! are zero-padded before averaging. STOC counts per generation come from
//! the difference of adjacent cumulative values, which needs no edge
//! classification; each start's total is checked against
//! `1 + edges - nodes` before anything is averaged.
//!
//! A sweep is a pure function of its config: the same base seed yields
//! byte-identical CSV output.

use std::fmt;
use std::io::{self, Write};
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::census::stoc_per_generation_by_difference;
use crate::decomposition::{decompose, TieBreak};
use crate::generators::{holme_kim, watts_strogatz, GeneratorError};
use crate::graph::Graph;
use crate::indices::{resolve_starts, StartSelection};

const MAX_RESEED_ATTEMPTS: usize = 64;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("config error: {0}")]
    Config(String),
    #[error("generation failure: {0}")]
    GenerationFailure(String),
    #[error("io error: {0}")]
    Io(#[from] io::Error),
}

impl From<GeneratorError> for SweepError {
    fn from(e: GeneratorError) -> Self {
        SweepError::Config(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepModel {
    WattsStrogatz,
    HolmeKim,
}

impl SweepModel {
    pub fn tag(self) -> &'static str {
        match self {
            SweepModel::WattsStrogatz => "ws",
            SweepModel::HolmeKim => "hk",
        }
    }
}

impl fmt::Display for SweepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Full description of a sweep: model, grid, replicate count and seeding.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: SweepModel,
    pub n: usize,
    /// Even ring degree k for Watts-Strogatz, edges-per-node m for Holme-Kim.
    pub degree_param: usize,
    /// Rewiring probabilities p, or triad probabilities q.
    pub params: Vec<f64>,
    pub replicates: usize,
    pub base_seed: u64,
    pub starts: StartSelection,
}

impl SweepConfig {
    /// The standard protocol for a model: n = 3000 with mean degree 6
    /// (k = 6 or m = 3), ten replicates, all starts, and the standard grid:
    /// p = 2^0, 2^-1, ..., 2^-10 for Watts-Strogatz (the grid never reaches
    /// p = 0; pass explicit params for that) and q = 0.0, 0.1, ..., 1.0 for
    /// Holme-Kim.
    pub fn standard(model: SweepModel, base_seed: u64) -> Self {
        let (degree_param, params) = match model {
            SweepModel::WattsStrogatz => (6, (0..=10).map(|m| 2f64.powi(-m)).collect()),
            SweepModel::HolmeKim => (3, (0..=10).map(|i| i as f64 / 10.0).collect()),
        };
        SweepConfig {
            model,
            n: 3000,
            degree_param,
            params,
            replicates: 10,
            base_seed,
            starts: StartSelection::All,
        }
    }

    fn validate(&self) -> Result<(), SweepError> {
        if self.params.is_empty() {
            return Err(SweepError::Config("empty parameter grid".into()));
        }
        if self.replicates == 0 {
            return Err(SweepError::Config("need at least one replicate".into()));
        }
        if let SweepModel::WattsStrogatz = self.model {
            if self.degree_param % 2 != 0 {
                return Err(SweepError::Config(format!(
                    "watts-strogatz degree k must be even, got {}",
                    self.degree_param
                )));
            }
        }
        for &p in &self.params {
            if !(0.0..=1.0).contains(&p) {
                return Err(SweepError::Config(format!("parameter {p} outside [0, 1]")));
            }
        }
        Ok(())
    }
}

/// One averaged output row: a (parameter, generation) cell of the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub parameter: f64,
    pub generation: u32,
    pub n_abs_mean: f64,
    pub n_abs_std: f64,
    /// `None` when no (replicate, start) pair had this relative generation.
    pub r_rel_mean: Option<f64>,
    pub r_rel_std: Option<f64>,
    pub stoc_mean: f64,
    pub stoc_std: f64,
    /// Number of (replicate, start) pairs contributing to the relative mean.
    pub support_count: u64,
}

/// Per-replicate record: which seed actually produced the graph and the
/// exact invariants of that graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicateStat {
    pub parameter: f64,
    pub replicate: usize,
    pub seed: u64,
    pub nodes: usize,
    pub edges: usize,
    /// `1 + edges - nodes`; every start's STOC counts sum to this.
    pub euler_total: u64,
}

/// A disconnected draw that was rejected and reseeded.
#[derive(Debug, Clone, PartialEq)]
pub struct ReseedEvent {
    pub parameter: f64,
    pub replicate: usize,
    pub rejected_seed: u64,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub replicate_stats: Vec<ReplicateStat>,
    pub reseed_events: Vec<ReseedEvent>,
}

impl SweepResult {
    pub fn rows_for(&self, parameter: f64) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |r| r.parameter == parameter)
    }
}

fn generate(cfg: &SweepConfig, parameter: f64, seed: u64) -> Result<Graph, SweepError> {
    Ok(match cfg.model {
        SweepModel::WattsStrogatz => watts_strogatz(cfg.n, cfg.degree_param, parameter, seed)?,
        SweepModel::HolmeKim => holme_kim(cfg.n, cfg.degree_param, parameter, seed)?,
    })
}

/// Runs the sweep described by `cfg`. Deterministic given the base seed:
/// replicate r draws seed `base + r`, and a disconnected draw retries with
/// the seed advanced by the replicate count.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult, SweepError> {
    cfg.validate()?;

    let mut rows = Vec::new();
    let mut replicate_stats = Vec::new();
    let mut reseed_events = Vec::new();

    for &parameter in &cfg.params {
        let mut abs_sum: Vec<f64> = Vec::new();
        let mut abs_sumsq: Vec<f64> = Vec::new();
        let mut rel_sum: Vec<f64> = Vec::new();
        let mut rel_sumsq: Vec<f64> = Vec::new();
        let mut rel_count: Vec<u64> = Vec::new();
        let mut stoc_sum: Vec<f64> = Vec::new();
        let mut stoc_sumsq: Vec<f64> = Vec::new();
        let mut samples = 0u64;

        for replicate in 0..cfg.replicates {
            let (graph, seed) = {
                let mut attempt = 0;
                loop {
                    let seed = cfg
                        .base_seed
                        .wrapping_add(replicate as u64)
                        .wrapping_add((attempt * cfg.replicates) as u64);
                    let g = generate(cfg, parameter, seed)?;
                    if g.is_connected() {
                        break (g, seed);
                    }
                    reseed_events.push(ReseedEvent {
                        parameter,
                        replicate,
                        rejected_seed: seed,
                    });
                    attempt += 1;
                    if attempt >= MAX_RESEED_ATTEMPTS {
                        return Err(SweepError::GenerationFailure(format!(
                            "{} at parameter {parameter}: {MAX_RESEED_ATTEMPTS} disconnected draws",
                            cfg.model
                        )));
                    }
                }
            };

            let euler = (1 + graph.edge_count() - graph.node_count()) as u64;
            replicate_stats.push(ReplicateStat {
                parameter,
                replicate,
                seed,
                nodes: graph.node_count(),
                edges: graph.edge_count(),
                euler_total: euler,
            });

            let starts = resolve_starts(&graph, cfg.starts)
                .map_err(|e| SweepError::Config(e.to_string()))?;
            samples += starts.len() as u64;

            // Per-start series, computed in parallel but reduced in fixed
            // ascending start order.
            let per_start: Vec<(Vec<u64>, Vec<u64>)> = starts
                .par_iter()
                .map(|&s| {
                    let d = decompose(&graph, s, TieBreak::LowestId).expect("start in range");
                    let levels: Vec<u64> =
                        d.level_sets().iter().map(|l| l.len() as u64).collect();
                    let stocs = stoc_per_generation_by_difference(&graph, &d)
                        .expect("decomposition belongs to graph");
                    (levels, stocs)
                })
                .collect();

            for (levels, stocs) in &per_start {
                assert_eq!(
                    stocs.iter().sum::<u64>(),
                    euler,
                    "per-start STOC total must equal 1 + edges - nodes"
                );
                grow(&mut abs_sum, levels.len());
                grow(&mut abs_sumsq, levels.len());
                for (m, &v) in levels.iter().enumerate() {
                    let v = v as f64;
                    abs_sum[m] += v;
                    abs_sumsq[m] += v * v;
                }
                if levels.len() >= 2 {
                    let ratios = levels.len() - 1;
                    grow(&mut rel_sum, ratios);
                    grow(&mut rel_sumsq, ratios);
                    if rel_count.len() < ratios {
                        rel_count.resize(ratios, 0);
                    }
                    for m in 0..ratios {
                        let r = levels[m + 1] as f64 / levels[m] as f64;
                        rel_sum[m] += r;
                        rel_sumsq[m] += r * r;
                        rel_count[m] += 1;
                    }
                }
                grow(&mut stoc_sum, stocs.len());
                grow(&mut stoc_sumsq, stocs.len());
                for (m, &v) in stocs.iter().enumerate() {
                    let v = v as f64;
                    stoc_sum[m] += v;
                    stoc_sumsq[m] += v * v;
                }
            }
        }

        let generations = abs_sum.len().max(stoc_sum.len());
        let count = samples as f64;
        for m in 0..generations {
            let stat = |sum: &[f64], sumsq: &[f64]| {
                let s = sum.get(m).copied().unwrap_or(0.0);
                let sq = sumsq.get(m).copied().unwrap_or(0.0);
                let mean = s / count;
                (mean, (sq / count - mean * mean).max(0.0).sqrt())
            };
            let (n_abs_mean, n_abs_std) = stat(&abs_sum, &abs_sumsq);
            let (stoc_mean, stoc_std) = stat(&stoc_sum, &stoc_sumsq);
            let support = rel_count.get(m).copied().unwrap_or(0);
            let (r_rel_mean, r_rel_std) = if support > 0 {
                let mean = rel_sum[m] / support as f64;
                let std = (rel_sumsq[m] / support as f64 - mean * mean).max(0.0).sqrt();
                (Some(mean), Some(std))
            } else {
                (None, None)
            };
            rows.push(SweepRow {
                parameter,
                generation: m as u32,
                n_abs_mean,
                n_abs_std,
                r_rel_mean,
                r_rel_std,
                stoc_mean,
                stoc_std,
                support_count: support,
            });
        }
    }

    Ok(SweepResult {
        config: cfg.clone(),
        rows,
        replicate_stats,
        reseed_events,
    })
}

fn grow(v: &mut Vec<f64>, len: usize) {
    if v.len() < len {
        v.resize(len, 0.0);
    }
}

/// Formats with six significant digits, the precision used in CSV output.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

/// Writes the sweep as CSV: `#`-prefixed metadata comments echoing the
/// config, then a header row, then one row per (parameter, generation).
pub fn emit_csv<W: Write>(result: &SweepResult, mut w: W) -> io::Result<()> {
    let cfg = &result.config;
    writeln!(w, "# stocnet sweep")?;
    writeln!(w, "# model = {}", cfg.model)?;
    writeln!(w, "# n = {}", cfg.n)?;
    writeln!(w, "# degree_param = {}", cfg.degree_param)?;
    writeln!(
        w,
        "# params = {}",
        cfg.params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    )?;
    writeln!(w, "# replicates = {}", cfg.replicates)?;
    writeln!(w, "# base_seed = {}", cfg.base_seed)?;
    match cfg.starts {
        StartSelection::All => writeln!(w, "# starts = all")?,
        StartSelection::Sample { size, seed } => {
            writeln!(w, "# starts = sample size={size} seed={seed}")?
        }
    }
    writeln!(w, "# padding = short per-start series are zero-padded")?;
    for stat in &result.replicate_stats {
        writeln!(
            w,
            "# replicate parameter={} replicate={} seed={} edges={} euler_total={}",
            stat.parameter, stat.replicate, stat.seed, stat.edges, stat.euler_total
        )?;
    }
    for event in &result.reseed_events {
        writeln!(
            w,
            "# reseed parameter={} replicate={} rejected_seed={}",
            event.parameter, event.replicate, event.rejected_seed
        )?;
    }
    writeln!(
        w,
        "model,parameter,generation,n_abs_mean,n_abs_std,r_rel_mean,r_rel_std,stoc_mean,stoc_std,support_count"
    )?;
    for row in &result.rows {
        let opt = |v: Option<f64>| v.map(format_float).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            cfg.model,
            row.parameter,
            row.generation,
            format_float(row.n_abs_mean),
            format_float(row.n_abs_std),
            opt(row.r_rel_mean),
            opt(row.r_rel_std),
            format_float(row.stoc_mean),
            format_float(row.stoc_std),
            row.support_count
        )?;
    }
    Ok(())
}

pub fn write_csv_file(result: &SweepResult, path: &Path) -> Result<(), SweepError> {
    let file = std::fs::File::create(path)?;
    let mut writer = io::BufWriter::new(file);
    emit_csv(result, &mut writer)?;
    writer.flush()?;
    Ok(())
}

/// Peak locations per parameter: where the absolute index and the STOC
/// count reach their maxima (first generation on ties), plus the mean
/// Euler total over replicates.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub parameter: f64,
    pub n_peak_generation: u32,
    pub n_peak_value: f64,
    pub stoc_peak_generation: u32,
    pub stoc_peak_value: f64,
    pub euler_total_mean: f64,
}

pub fn summarize(result: &SweepResult) -> Vec<SummaryRow> {
    let mut summary = Vec::new();
    for &parameter in &result.config.params {
        let rows: Vec<&SweepRow> = result.rows_for(parameter).collect();
        if rows.is_empty() {
            continue;
        }
        let peak = |value: &dyn Fn(&SweepRow) -> f64| {
            let mut best = (0u32, f64::MIN);
            for r in &rows {
                if value(r) > best.1 {
                    best = (r.generation, value(r));
                }
            }
            best
        };
        let (n_peak_generation, n_peak_value) = peak(&|r: &SweepRow| r.n_abs_mean);
        let (stoc_peak_generation, stoc_peak_value) = peak(&|r: &SweepRow| r.stoc_mean);
        let stats: Vec<&ReplicateStat> = result
            .replicate_stats
            .iter()
            .filter(|s| s.parameter == parameter)
            .collect();
        let euler_total_mean =
            stats.iter().map(|s| s.euler_total as f64).sum::<f64>() / stats.len() as f64;
        summary.push(SummaryRow {
            parameter,
            n_peak_generation,
            n_peak_value,
            stoc_peak_generation,
            stoc_peak_value,
            euler_total_mean,
        });
    }
    summary
}

pub fn emit_summary_csv<W: Write>(result: &SweepResult, mut w: W) -> io::Result<()> {
    writeln!(
        w,
        "model,parameter,n_peak_generation,n_peak_value,stoc_peak_generation,stoc_peak_value,euler_total_mean"
    )?;
    for s in summarize(result) {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            result.config.model,
            s.parameter,
            s.n_peak_generation,
            format_float(s.n_peak_value),
            s.stoc_peak_generation,
            format_float(s.stoc_peak_value),
            format_float(s.euler_total_mean)
        )?;
    }
    Ok(())
}

/// Optional fields collected from a config file or CLI flags; later sources
/// override earlier ones field by field.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepOverrides {
    pub model: Option<SweepModel>,
    pub n: Option<usize>,
    pub degree_param: Option<usize>,
    pub params: Option<Vec<f64>>,
    pub replicates: Option<usize>,
    pub base_seed: Option<u64>,
    pub starts: Option<StartSelection>,
}

impl SweepOverrides {
    pub fn merge(mut self, over: SweepOverrides) -> SweepOverrides {
        if over.model.is_some() {
            self.model = over.model;
        }
        if over.n.is_some() {
            self.n = over.n;
        }
        if over.degree_param.is_some() {
            self.degree_param = over.degree_param;
        }
        if over.params.is_some() {
            self.params = over.params;
        }
        if over.replicates.is_some() {
            self.replicates = over.replicates;
        }
        if over.base_seed.is_some() {
            self.base_seed = over.base_seed;
        }
        if over.starts.is_some() {
            self.starts = over.starts;
        }
        self
    }

    /// Resolves to a full config: the model is required, everything else
    /// falls back to [`SweepConfig::standard`] for that model.
    pub fn resolve(self) -> Result<SweepConfig, SweepError> {
        let model = self
            .model
            .ok_or_else(|| SweepError::Config("model (ws or hk) is required".into()))?;
        let mut cfg = SweepConfig::standard(model, 0);
        if let Some(n) = self.n {
            cfg.n = n;
        }
        if let Some(d) = self.degree_param {
            cfg.degree_param = d;
        }
        if let Some(p) = self.params {
            cfg.params = p;
        }
        if let Some(r) = self.replicates {
            cfg.replicates = r;
        }
        if let Some(s) = self.base_seed {
            cfg.base_seed = s;
        }
        if let Some(s) = self.starts {
            cfg.starts = s;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses the flat `key = value` config format. Keys mirror the CLI flags:
/// `model`, `n`, `k`/`m` (degree parameter), `params` (comma-separated),
/// `replicates`, `seed`, `starts` (`all` or `sample`), `sample_size`,
/// `sample_seed`. `#` starts a comment.
pub fn parse_config(text: &str) -> Result<SweepOverrides, SweepError> {
    let mut over = SweepOverrides::default();
    let mut sample_size: Option<usize> = None;
    let mut sample_seed: Option<u64> = None;
    let mut starts_kind: Option<&str> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(SweepError::Config(format!(
                "line {line_no}: expected key = value, got {line:?}"
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| {
            SweepError::Config(format!("line {line_no}: invalid {what} value {value:?}"))
        };
        match key {
            "model" => {
                over.model = Some(match value {
                    "ws" => SweepModel::WattsStrogatz,
                    "hk" => SweepModel::HolmeKim,
                    _ => return Err(bad("model")),
                })
            }
            "n" => over.n = Some(value.parse().map_err(|_| bad("n"))?),
            "k" | "m" => over.degree_param = Some(value.parse().map_err(|_| bad(key))?),
            "params" => {
                let parsed: Result<Vec<f64>, _> =
                    value.split(',').map(|t| t.trim().parse::<f64>()).collect();
                over.params = Some(parsed.map_err(|_| bad("params"))?);
            }
            "replicates" => over.replicates = Some(value.parse().map_err(|_| bad("replicates"))?),
            "seed" => over.base_seed = Some(value.parse().map_err(|_| bad("seed"))?),
            "starts" => match value {
                "all" | "sample" => starts_kind = Some(if value == "all" { "all" } else { "sample" }),
                _ => return Err(bad("starts")),
            },
            "sample_size" => sample_size = Some(value.parse().map_err(|_| bad("sample_size"))?),
            "sample_seed" => sample_seed = Some(value.parse().map_err(|_| bad("sample_seed"))?),
            _ => return Err(SweepError::Config(format!("line {line_no}: unknown key {key:?}"))),
        }
    }

    over.starts = match (starts_kind, sample_size) {
        (Some("all"), _) | (None, None) => starts_kind.map(|_| StartSelection::All),
        (Some("sample"), Some(size)) | (None, Some(size)) => Some(StartSelection::Sample {
            size,
            seed: sample_seed.unwrap_or(0),
        }),
        (Some("sample"), None) => {
            return Err(SweepError::Config(
                "starts = sample requires sample_size".into(),
            ))
        }
        _ => unreachable!(),
    };
    Ok(over)
}
