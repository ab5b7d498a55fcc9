//! Command-line interface: generate graphs, analyze them, run parameter
//! sweeps and verify the exact index/STOC relations.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on input
//! or configuration errors.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use stocnet::census::{census, StocCensus};
use stocnet::decomposition::{decompose, EdgeClass, GenerationDecomposition, TieBreak};
use stocnet::generators::GeneratorSpec;
use stocnet::graph::{load_edge_list, write_edge_list, Graph, NodeId};
use stocnet::indices::{resolve_starts, StartSelection};
use stocnet::sweep::{
    emit_summary_csv, format_float, parse_config, run_sweep, write_csv_file, SweepModel,
    SweepOverrides,
};
use stocnet::verification::suites;

#[derive(Parser)]
#[command(name = "stocnet", version, about = "Propagation indices and STOC censuses on undirected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    /// Cycle graph
    Ring,
    /// Extended ring: neighbors within distance r
    Xring,
    /// Square lattice with open boundaries
    Sqlattice,
    /// Triangular lattice (row-offset)
    Trilattice,
    /// Square lattice on a torus
    Torus,
    /// Watts-Strogatz small world
    Ws,
    /// Holme-Kim scale free with triad formation
    Hk,
    /// Barabasi-Albert preferential attachment
    Ba,
    /// Uniform random graph with a fixed edge count
    Er,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Lattices,
    Random,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StartsArg {
    All,
    Sample,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Generate {
        #[arg(long)]
        model: ModelArg,
        /// Node count (ring, xring, ws, hk, ba, er).
        #[arg(long)]
        n: Option<usize>,
        /// Even base degree (ws).
        #[arg(long)]
        k: Option<usize>,
        /// Edges per new node (hk, ba).
        #[arg(long)]
        m: Option<usize>,
        /// Neighbor half-width (xring).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// Rewiring probability (ws).
        #[arg(long)]
        p: Option<f64>,
        /// Triad-formation probability (hk).
        #[arg(long)]
        q: Option<f64>,
        /// Edge count (er).
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Analyze a graph: indices, STOC census and summaries.
    Analyze {
        /// Edge-list file to read.
        #[arg(long)]
        graph: PathBuf,
        /// Analyze from this single start node (id after remapping).
        #[arg(long, conflicts_with_all = ["all_starts", "sample"])]
        start: Option<NodeId>,
        /// Average over every node (the default).
        #[arg(long)]
        all_starts: bool,
        /// Average over a seeded uniform sample of this many starts.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        sample_seed: u64,
        /// Append per-node and per-edge decomposition sections
        /// (requires --start).
        #[arg(long, requires = "start")]
        dump_decomposition: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a parameter sweep and write CSV results.
    Sweep {
        /// key = value config file; flags below override its values.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory for <model>_sweep.csv and <model>_summary.csv.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Explicit comma-separated parameter grid.
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        replicates: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        starts: Option<StartsArg>,
        #[arg(long)]
        sample_size: Option<usize>,
        #[arg(long)]
        sample_seed: Option<u64>,
    },
    /// Check the exact index/STOC relations on fixed corpora.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Seed for the random corpus.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate {
            model,
            n,
            k,
            m,
            r,
            rows,
            cols,
            p,
            q,
            edges,
            seed,
            out,
        } => {
            let spec = build_spec(model, n, k, m, r, rows, cols, p, q, edges, seed)?;
            let graph = spec.build().map_err(|e| e.to_string())?;
            let file = File::create(&out).map_err(|e| format!("{}: {e}", out.display()))?;
            let mut writer = BufWriter::new(file);
            write_edge_list(&graph, &mut writer).map_err(|e| e.to_string())?;
            writer.flush().map_err(|e| e.to_string())?;
            println!(
                "wrote {} nodes, {} edges to {}",
                graph.node_count(),
                graph.edge_count(),
                out.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            graph,
            start,
            all_starts: _,
            sample,
            sample_seed,
            dump_decomposition,
            out,
        } => {
            let file = File::open(&graph).map_err(|e| format!("{}: {e}", graph.display()))?;
            let g = load_edge_list(BufReader::new(file)).map_err(|e| e.to_string())?;
            let output = File::create(&out).map_err(|e| format!("{}: {e}", out.display()))?;
            let mut w = BufWriter::new(output);
            match start {
                Some(s) => analyze_local(&g, s, dump_decomposition, &graph, &mut w)?,
                None => {
                    let selection = match sample {
                        Some(size) => StartSelection::Sample { size, seed: sample_seed },
                        None => StartSelection::All,
                    };
                    analyze_averaged(&g, selection, &graph, &mut w)?
                }
            }
            w.flush().map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            config,
            out,
            model,
            n,
            k,
            m,
            params,
            replicates,
            seed,
            starts,
            sample_size,
            sample_seed,
        } => {
            let from_file = match &config {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    parse_config(&text).map_err(|e| e.to_string())?
                }
                None => SweepOverrides::default(),
            };
            let from_cli = cli_overrides(
                model, n, k, m, params, replicates, seed, starts, sample_size, sample_seed,
            )?;
            let cfg = from_file.merge(from_cli).resolve().map_err(|e| e.to_string())?;

            std::fs::create_dir_all(&out).map_err(|e| format!("{}: {e}", out.display()))?;
            let result = run_sweep(&cfg).map_err(|e| e.to_string())?;

            let sweep_path = out.join(format!("{}_sweep.csv", cfg.model));
            write_csv_file(&result, &sweep_path).map_err(|e| e.to_string())?;
            let summary_path = out.join(format!("{}_summary.csv", cfg.model));
            let summary_file =
                File::create(&summary_path).map_err(|e| format!("{}: {e}", summary_path.display()))?;
            let mut sw = BufWriter::new(summary_file);
            emit_summary_csv(&result, &mut sw).map_err(|e| e.to_string())?;
            sw.flush().map_err(|e| e.to_string())?;

            println!("wrote {}", sweep_path.display());
            println!("wrote {}", summary_path.display());
            if !result.reseed_events.is_empty() {
                println!("reseeded {} disconnected draws", result.reseed_events.len());
            }
            for s in stocnet::sweep::summarize(&result) {
                println!(
                    "{} parameter {}: index peak {} at generation {}, stoc peak at generation {}",
                    cfg.model,
                    s.parameter,
                    format_float(s.n_peak_value),
                    s.n_peak_generation,
                    s.stoc_peak_generation
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, seed } => {
            let outcomes = match suite {
                SuiteArg::Lattices => suites::lattice_suite(),
                SuiteArg::Random => suites::random_suite(seed),
                SuiteArg::All => {
                    let mut all = suites::lattice_suite();
                    all.extend(suites::random_suite(seed));
                    all
                }
            };
            let mut failures = 0;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                println!("{status}  {:24} {:24} {}", o.check, o.subject, o.detail);
                if !o.passed {
                    failures += 1;
                }
            }
            println!("{} checks, {failures} failures", outcomes.len());
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_spec(
    model: ModelArg,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    r: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    p: Option<f64>,
    q: Option<f64>,
    edges: Option<usize>,
    seed: u64,
) -> Result<GeneratorSpec, String> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| format!("{flag} is required for this model"))
    };
    let need_f = |value: Option<f64>, flag: &str| {
        value.ok_or_else(|| format!("{flag} is required for this model"))
    };
    Ok(match model {
        ModelArg::Ring => GeneratorSpec::Ring { n: need(n, "--n")? },
        ModelArg::Xring => GeneratorSpec::ExtendedRing {
            n: need(n, "--n")?,
            r: need(r, "--r")?,
        },
        ModelArg::Sqlattice => GeneratorSpec::SquareLattice {
            rows: need(rows, "--rows")?,
            cols: need(cols, "--cols")?,
            torus: false,
        },
        ModelArg::Torus => GeneratorSpec::SquareLattice {
            rows: need(rows, "--rows")?,
            cols: need(cols, "--cols")?,
            torus: true,
        },
        ModelArg::Trilattice => GeneratorSpec::TriangularLattice {
            rows: need(rows, "--rows")?,
            cols: need(cols, "--cols")?,
        },
        ModelArg::Ws => GeneratorSpec::WattsStrogatz {
            n: need(n, "--n")?,
            k: need(k, "--k")?,
            p: need_f(p, "--p")?,
            seed,
        },
        ModelArg::Hk => GeneratorSpec::HolmeKim {
            n: need(n, "--n")?,
            m: need(m, "--m")?,
            q: need_f(q, "--q")?,
            seed,
        },
        ModelArg::Ba => GeneratorSpec::BarabasiAlbert {
            n: need(n, "--n")?,
            m: need(m, "--m")?,
            seed,
        },
        ModelArg::Er => GeneratorSpec::ErdosRenyi {
            n: need(n, "--n")?,
            edges: need(edges, "--edges")?,
            seed,
        },
    })
}

#[allow(clippy::too_many_arguments)]
fn cli_overrides(
    model: Option<String>,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    params: Option<String>,
    replicates: Option<usize>,
    seed: Option<u64>,
    starts: Option<StartsArg>,
    sample_size: Option<usize>,
    sample_seed: Option<u64>,
) -> Result<SweepOverrides, String> {
    let model = match model.as_deref() {
        None => None,
        Some("ws") => Some(SweepModel::WattsStrogatz),
        Some("hk") => Some(SweepModel::HolmeKim),
        Some(other) => return Err(format!("unknown sweep model {other:?} (expected ws or hk)")),
    };
    let params = match params {
        None => None,
        Some(text) => {
            let parsed: Result<Vec<f64>, _> =
                text.split(',').map(|t| t.trim().parse::<f64>()).collect();
            Some(parsed.map_err(|e| format!("invalid --params: {e}"))?)
        }
    };
    let starts = match (starts, sample_size) {
        (Some(StartsArg::All), _) => Some(StartSelection::All),
        (Some(StartsArg::Sample), Some(size)) | (None, Some(size)) => Some(StartSelection::Sample {
            size,
            seed: sample_seed.unwrap_or(0),
        }),
        (Some(StartsArg::Sample), None) => {
            return Err("--starts sample requires --sample-size".into())
        }
        (None, None) => None,
    };
    Ok(SweepOverrides {
        model,
        n,
        degree_param: k.or(m),
        params,
        replicates,
        base_seed: seed,
        starts,
    })
}

fn analyze_local<W: Write>(
    g: &Graph,
    start: NodeId,
    dump: bool,
    source: &Path,
    w: &mut W,
) -> Result<(), String> {
    let d = decompose(g, start, TieBreak::LowestId).map_err(|e| e.to_string())?;
    let c = census(g, &d).map_err(|e| e.to_string())?;
    let err = |e: std::io::Error| e.to_string();

    writeln!(w, "# stocnet analyze").map_err(err)?;
    writeln!(w, "# graph = {}", source.display()).map_err(err)?;
    writeln!(w, "# mode = local start={start}").map_err(err)?;

    writeln!(w, "# indices").map_err(err)?;
    writeln!(w, "generation,n_abs,r_rel").map_err(err)?;
    let sizes: Vec<usize> = d.level_sets().iter().map(Vec::len).collect();
    for (gen, &size) in sizes.iter().enumerate() {
        let ratio = match sizes.get(gen + 1) {
            Some(&next) => format_float(next as f64 / size as f64),
            None => String::new(),
        };
        writeln!(w, "{gen},{size},{ratio}").map_err(err)?;
    }

    writeln!(w, "# stoc summary").map_err(err)?;
    writeln!(w, "generation,stoc_count,cumulative").map_err(err)?;
    for (gen, &count) in c.per_generation().iter().enumerate() {
        writeln!(w, "{gen},{count},{}", c.cumulative(gen as u32)).map_err(err)?;
    }

    writeln!(w, "# census").map_err(err)?;
    writeln!(w, "start,generation,j,count").map_err(err)?;
    for (&(gen, j), &count) in c.counts() {
        writeln!(w, "{start},{gen},{j},{count}").map_err(err)?;
    }

    if dump {
        write_decomposition_dump(g, &d, w)?;
    }
    Ok(())
}

fn write_decomposition_dump<W: Write>(
    g: &Graph,
    d: &GenerationDecomposition,
    w: &mut W,
) -> Result<(), String> {
    let err = |e: std::io::Error| e.to_string();
    writeln!(w, "# decomposition nodes").map_err(err)?;
    writeln!(w, "node,generation,parent").map_err(err)?;
    for v in g.nodes() {
        let gen = match d.node_generation(v) {
            Some(gen) => gen.to_string(),
            None => continue, // unreachable nodes carry no generation
        };
        let parent = d.parent(v).map(|p| p.to_string()).unwrap_or_default();
        writeln!(w, "{v},{gen},{parent}").map_err(err)?;
    }
    writeln!(w, "# decomposition edges").map_err(err)?;
    writeln!(w, "u,v,edge_generation,class").map_err(err)?;
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let Some(info) = d.edge_info(idx) else { continue };
        let class = match info.class {
            EdgeClass::Primary => "primary",
            EdgeClass::Secondary => "secondary",
        };
        writeln!(w, "{u},{v},{},{class}", info.generation).map_err(err)?;
    }
    Ok(())
}

fn analyze_averaged<W: Write>(
    g: &Graph,
    selection: StartSelection,
    source: &Path,
    w: &mut W,
) -> Result<(), String> {
    let starts = resolve_starts(g, selection).map_err(|e| e.to_string())?;
    let per_start: Vec<(Vec<usize>, StocCensus)> = starts
        .par_iter()
        .map(|&s| {
            let d = decompose(g, s, TieBreak::LowestId).expect("start in range");
            let c = census(g, &d).expect("matching inputs");
            let sizes = d.level_sets().iter().map(Vec::len).collect();
            (sizes, c)
        })
        .collect();

    let count = starts.len() as f64;
    let max_abs = per_start.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
    let max_stoc = per_start
        .iter()
        .map(|(_, c)| c.per_generation().len())
        .max()
        .unwrap_or(0);

    let mut abs_sum = vec![0.0; max_abs];
    let mut abs_sumsq = vec![0.0; max_abs];
    let mut rel_sum = vec![0.0; max_abs.saturating_sub(1)];
    let mut rel_sumsq = vec![0.0; max_abs.saturating_sub(1)];
    let mut rel_support = vec![0u64; max_abs.saturating_sub(1)];
    let mut stoc_sum = vec![0.0; max_stoc];
    for (sizes, c) in &per_start {
        for (m, &v) in sizes.iter().enumerate() {
            abs_sum[m] += v as f64;
            abs_sumsq[m] += (v * v) as f64;
        }
        for m in 0..sizes.len().saturating_sub(1) {
            let r = sizes[m + 1] as f64 / sizes[m] as f64;
            rel_sum[m] += r;
            rel_sumsq[m] += r * r;
            rel_support[m] += 1;
        }
        for (m, &v) in c.per_generation().iter().enumerate() {
            stoc_sum[m] += v as f64;
        }
    }

    let err = |e: std::io::Error| e.to_string();
    writeln!(w, "# stocnet analyze").map_err(err)?;
    writeln!(w, "# graph = {}", source.display()).map_err(err)?;
    match selection {
        StartSelection::All => writeln!(w, "# mode = averaged starts=all").map_err(err)?,
        StartSelection::Sample { size, seed } => {
            writeln!(w, "# mode = averaged starts=sample size={size} seed={seed}").map_err(err)?
        }
    }

    writeln!(w, "# indices").map_err(err)?;
    writeln!(w, "generation,n_abs_mean,n_abs_std,r_rel_mean,r_rel_std,support_count").map_err(err)?;
    for m in 0..max_abs {
        let mean = abs_sum[m] / count;
        let std = (abs_sumsq[m] / count - mean * mean).max(0.0).sqrt();
        let (rel_mean, rel_std, support) = match rel_support.get(m) {
            Some(&n) if n > 0 => {
                let mean = rel_sum[m] / n as f64;
                let std = (rel_sumsq[m] / n as f64 - mean * mean).max(0.0).sqrt();
                (format_float(mean), format_float(std), n)
            }
            _ => (String::new(), String::new(), 0),
        };
        writeln!(
            w,
            "{m},{},{},{rel_mean},{rel_std},{support}",
            format_float(mean),
            format_float(std)
        )
        .map_err(err)?;
    }

    writeln!(w, "# stoc summary").map_err(err)?;
    writeln!(w, "generation,stoc_mean,cumulative_mean").map_err(err)?;
    let mut running = 0.0;
    for (m, &sum) in stoc_sum.iter().enumerate() {
        let mean = sum / count;
        running += mean;
        writeln!(w, "{m},{},{}", format_float(mean), format_float(running)).map_err(err)?;
    }

    writeln!(w, "# census").map_err(err)?;
    writeln!(w, "start,generation,j,count").map_err(err)?;
    for (start, (_, c)) in starts.iter().zip(&per_start) {
        for (&(gen, j), &count) in c.counts() {
            writeln!(w, "{start},{gen},{j},{count}").map_err(err)?;
        }
    }
    Ok(())
}
