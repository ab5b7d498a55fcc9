//! Acceptance suite: every relation the library claims is checked here at
//! its stated tolerance, one pass/fail line per criterion (run with
//! `--nocapture` to see them). Everything except the averaged sweep curves
//! is exact integer equality.

mod common;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use common::six_node_fixture;
use stocnet::census::{census, euler_total, stoc_per_generation_by_difference};
use stocnet::decomposition::{decompose, TieBreak};
use stocnet::generators::{
    erdos_renyi, extended_ring, holme_kim, ring, square_lattice, triangular_lattice,
    watts_strogatz,
};
use stocnet::graph::Graph;
use stocnet::indices::StartSelection;
use stocnet::sweep::{emit_csv, run_sweep, SweepConfig, SweepModel, SweepResult};
use stocnet::verification::{
    closed_form_index, recursion_report, regular_recursion_index, tie_break_invariance_check,
};

const SWEEP_SEED: u64 = 42;

fn report(criterion: &str, passed: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} ({detail})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{criterion} failed: {detail}");
}

/// Generates with consecutive seeds until the draw is connected.
fn connected(mut build: impl FnMut(u64) -> Graph, seed: u64) -> Graph {
    for attempt in 0..50 {
        let g = build(seed + 1000 * attempt);
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected graph in 50 attempts from seed {seed}");
}

/// Criterion 1: census total = 1 + edges - nodes, exactly, on a corpus of
/// at least 200 random connected graphs with three start nodes each.
#[test]
fn criterion_1_euler_identity_on_random_corpus() {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = Vec::new();
    for i in 0..68u64 {
        let n = 50 + (i as usize * 23) % 1500;
        let edges = (0.7 * n as f64 * (n as f64).ln()) as usize;
        graphs.push(connected(|s| erdos_renyi(n, edges, s).unwrap(), 1100 + i));
    }
    graphs.push(connected(|s| erdos_renyi(2000, 11000, s).unwrap(), 1999));
    for i in 0..68u64 {
        let n = 100 + (i as usize * 29) % 1700;
        let p = [0.01, 0.1, 0.5, 1.0][i as usize % 4];
        graphs.push(connected(|s| watts_strogatz(n, 6, p, s).unwrap(), 2100 + i));
    }
    graphs.push(connected(|s| watts_strogatz(2000, 6, 0.25, s).unwrap(), 2999));
    for i in 0..68u64 {
        let n = 80 + (i as usize * 31) % 1700;
        let m = 2 + (i as usize % 2);
        let q = [0.0, 0.3, 0.7, 1.0][i as usize % 4];
        graphs.push(connected(|s| holme_kim(n, m, q, s).unwrap(), 3100 + i));
    }
    graphs.push(connected(|s| holme_kim(2000, 3, 0.5, s).unwrap(), 3999));
    assert!(graphs.len() >= 200, "corpus has {} graphs", graphs.len());

    let mut checked = 0;
    for g in &graphs {
        let expected = (1 + g.edge_count() - g.node_count()) as u64;
        for k in 0..3u32 {
            let s = (k as usize * g.node_count() / 3) as u32;
            let d = decompose(g, s, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            assert_eq!(
                c.total(),
                expected,
                "euler identity from start {s} on {} nodes",
                g.node_count()
            );
            assert_eq!(c.total(), euler_total(g, s).unwrap());
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        "criterion 1 (euler identity)",
        elapsed < Duration::from_secs(60),
        &format!("{checked} exact checks on {} graphs in {elapsed:?}", graphs.len()),
    );
}

/// Criterion 2: zero recursion residual for every start and every valid
/// generation on the lattice list and on 50 random graphs.
#[test]
fn criterion_2_recursion_residuals() {
    let mut corpus: Vec<(String, Graph)> = vec![
        ("ring(9)".into(), ring(9).unwrap()),
        ("ring(10)".into(), ring(10).unwrap()),
        ("extended_ring(20,2)".into(), extended_ring(20, 2).unwrap()),
        ("triangular(6x6)".into(), triangular_lattice(6, 6).unwrap()),
        ("square(6x6)".into(), square_lattice(6, 6, false).unwrap()),
        ("torus(6x6)".into(), square_lattice(6, 6, true).unwrap()),
    ];
    for i in 0..50u64 {
        let n = 30 + (i as usize * 7) % 100;
        let edges = 2 * n;
        corpus.push((format!("er#{i}"), erdos_renyi(n, edges, 7000 + i).unwrap()));
    }

    let mut checks = 0u64;
    for (name, g) in &corpus {
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            let rep = recursion_report(g, &d, &c).unwrap();
            assert!(
                rep.all_zero(),
                "{name} start {start}: residuals {:?}",
                rep.residuals
            );
            checks += rep.residuals.len() as u64;
        }
    }
    report(
        "criterion 2 (recursion residuals)",
        true,
        &format!("{checks} generations all zero across {} graphs", corpus.len()),
    );
}

/// Criterion 3: the closed form equals the BFS level sizes and the iterated
/// one-step recursion on regular graphs.
#[test]
fn criterion_3_closed_form() {
    let corpus: Vec<(&str, Graph)> = vec![
        ("ring(21)", ring(21).unwrap()),
        ("extended_ring(24,2)", extended_ring(24, 2).unwrap()),
        ("torus(10x10)", square_lattice(10, 10, true).unwrap()),
    ];
    let mut checks = 0u64;
    for (name, g) in &corpus {
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            for m in 1..=d.eccentricity() {
                let bfs = d.level_size(m) as i64;
                let closed = closed_form_index(g, &c, m).unwrap();
                let iterated = regular_recursion_index(g, &c, m).unwrap();
                assert_eq!(closed, bfs, "{name} start {start} generation {m}");
                assert_eq!(iterated, closed, "{name} start {start} generation {m}");
                checks += 1;
            }
        }
    }
    report(
        "criterion 3 (closed form)",
        true,
        &format!("{checks} generations exact on 3 regular graphs"),
    );
}

/// Criterion 4: totals and the correction combination are identical across
/// 10 random tie-break seeds on 20 random graphs.
#[test]
fn criterion_4_tie_break_invariance() {
    for i in 0..20u64 {
        let n = 40 + (i as usize * 13) % 160;
        let g = erdos_renyi(n, 3 * n, 8800 + i).unwrap();
        let rep = tie_break_invariance_check(&g, 0, 10, 5500 + i).unwrap();
        assert!(
            rep.is_consistent(),
            "graph #{i}: violations {:?}",
            rep.violations
        );
    }
    report(
        "criterion 4 (tie-break invariance)",
        true,
        "10 random policies agree on 20 graphs",
    );
}

/// Criterion 5: difference-based per-generation STOC counts equal the
/// direct census from every start node.
#[test]
fn criterion_5_method_equivalence() {
    let corpus = vec![
        ("ws(300,6,0.25)", watts_strogatz(300, 6, 0.25, 4321).unwrap()),
        ("hk(300,3,0.5)", holme_kim(300, 3, 0.5, 4321).unwrap()),
    ];
    let mut starts = 0;
    for (name, g) in &corpus {
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            let diff = stoc_per_generation_by_difference(g, &d).unwrap();
            assert_eq!(diff, c.per_generation(), "{name} start {start}");
            starts += 1;
        }
    }
    report(
        "criterion 5 (method equivalence)",
        true,
        &format!("elementwise equal over {starts} starts"),
    );
}

struct Sweeps {
    ws: SweepResult,
    hk: SweepResult,
    elapsed: Duration,
}

fn protocol_sweeps() -> &'static Sweeps {
    static SWEEPS: OnceLock<Sweeps> = OnceLock::new();
    SWEEPS.get_or_init(|| {
        let start = Instant::now();
        let ws = run_sweep(&SweepConfig::standard(SweepModel::WattsStrogatz, SWEEP_SEED)).unwrap();
        let hk = run_sweep(&SweepConfig::standard(SweepModel::HolmeKim, SWEEP_SEED)).unwrap();
        Sweeps {
            ws,
            hk,
            elapsed: start.elapsed(),
        }
    })
}

fn peak_generation(result: &SweepResult, parameter: f64, value: impl Fn(&stocnet::sweep::SweepRow) -> f64) -> u32 {
    let mut best = (0u32, f64::MIN);
    for row in result.rows_for(parameter) {
        if value(row) > best.1 {
            best = (row.generation, value(row));
        }
    }
    best.0
}

fn peak_value(result: &SweepResult, parameter: f64, value: impl Fn(&stocnet::sweep::SweepRow) -> f64) -> f64 {
    result
        .rows_for(parameter)
        .map(&value)
        .fold(f64::MIN, f64::max)
}

/// Criterion 6: the full protocol-scale sweeps finish in time and the
/// averaged curves have the claimed shape.
#[test]
fn criterion_6_protocol_scale_sweeps() {
    let sweeps = protocol_sweeps();
    let mut failures: Vec<String> = Vec::new();

    if sweeps.elapsed > Duration::from_secs(600) {
        failures.push(format!("sweeps took {:?} > 10 minutes", sweeps.elapsed));
    }

    // (a) the index peak moves to earlier generations as p grows,
    // with one generation of slack between adjacent grid points
    let mut ws_params = sweeps.ws.config.params.clone();
    ws_params.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for pair in ws_params.windows(2) {
        let low = peak_generation(&sweeps.ws, pair[0], |r| r.n_abs_mean);
        let high = peak_generation(&sweeps.ws, pair[1], |r| r.n_abs_mean);
        if high > low + 1 {
            failures.push(format!(
                "ws index peak rose from generation {low} at p={} to {high} at p={}",
                pair[0], pair[1]
            ));
        }
    }

    // (b) the STOC peak comes at or after the index peak
    for (result, tag) in [(&sweeps.ws, "ws"), (&sweeps.hk, "hk")] {
        for &param in &result.config.params {
            let n_peak = peak_generation(result, param, |r| r.n_abs_mean);
            let stoc_peak = peak_generation(result, param, |r| r.stoc_mean);
            if stoc_peak < n_peak {
                failures.push(format!(
                    "{tag} parameter {param}: stoc peak {stoc_peak} before index peak {n_peak}"
                ));
            }
        }
    }

    // (c) the scale-free network reaches a larger maximum index
    let hk_max = peak_value(&sweeps.hk, 0.5, |r| r.n_abs_mean);
    let ws_max = peak_value(&sweeps.ws, 0.5, |r| r.n_abs_mean);
    if hk_max <= ws_max {
        failures.push(format!("hk max {hk_max} not above ws max {ws_max} at parameter 0.5"));
    }

    // averaged curves are finite and non-negative everywhere
    for (result, tag) in [(&sweeps.ws, "ws"), (&sweeps.hk, "hk")] {
        for row in &result.rows {
            let all = [row.n_abs_mean, row.stoc_mean, row.r_rel_mean.unwrap_or(0.0)];
            if all.iter().any(|v| !v.is_finite() || *v < 0.0) {
                failures.push(format!(
                    "{tag} parameter {} generation {}: non-finite or negative mean",
                    row.parameter, row.generation
                ));
            }
        }
    }

    // (d) exact totals per replicate
    for stat in &sweeps.ws.replicate_stats {
        if stat.edges == 9000 && stat.euler_total != 6001 {
            failures.push(format!(
                "ws parameter {} replicate {}: euler total {} != 6001",
                stat.parameter, stat.replicate, stat.euler_total
            ));
        }
        if stat.edges != 9000 {
            failures.push(format!(
                "ws parameter {} replicate {}: {} edges",
                stat.parameter, stat.replicate, stat.edges
            ));
        }
    }

    report(
        "criterion 6 (protocol-scale sweeps)",
        failures.is_empty(),
        &if failures.is_empty() {
            format!(
                "22 sweeps x 10 replicates x 3000 starts in {:?}",
                sweeps.elapsed
            )
        } else {
            failures.join("; ")
        },
    );
}

/// Criterion 7: the six-node worked example yields local absolute indices
/// [1, 3, 2].
#[test]
fn criterion_7_worked_example() {
    let g = six_node_fixture();
    let d = decompose(&g, 0, TieBreak::LowestId).unwrap();
    let sizes: Vec<usize> = d.level_sets().iter().map(Vec::len).collect();
    report(
        "criterion 7 (worked example)",
        sizes == vec![1, 3, 2],
        &format!("local absolute indices {sizes:?}"),
    );
}

/// Criterion 8: an identical re-run of the protocol sweeps emits
/// byte-identical CSV.
#[test]
fn criterion_8_determinism() {
    let sweeps = protocol_sweeps();
    let ws_again = run_sweep(&SweepConfig::standard(SweepModel::WattsStrogatz, SWEEP_SEED)).unwrap();
    let hk_again = run_sweep(&SweepConfig::standard(SweepModel::HolmeKim, SWEEP_SEED)).unwrap();

    let csv = |r: &SweepResult| {
        let mut out = Vec::new();
        emit_csv(r, &mut out).unwrap();
        out
    };
    let ws_equal = csv(&sweeps.ws) == csv(&ws_again);
    let hk_equal = csv(&sweeps.hk) == csv(&hk_again);
    report(
        "criterion 8 (determinism)",
        ws_equal && hk_equal,
        &format!(
            "ws byte-identical: {ws_equal}, hk byte-identical: {hk_equal} ({} bytes)",
            csv(&sweeps.ws).len()
        ),
    );
}
