//! Machine checks of the analytic relations between indices and STOCs.
//!
//! Three relations are checked, all in exact integer arithmetic:
//!
//! * the recursion expressing the absolute index of generation M through
//!   the degrees of generation M-1 and the STOC counts of generations M
//!   and M-1 (odd STOCs cost two next-generation nodes, even ones cost one
//!   now and one a generation later);
//! * its specialization to k-regular graphs, iterated from N_1 = k;
//! * the closed form of that recursion, a weighted sum over the census.
//!
//! A nonzero residual anywhere is a hard failure, never a tolerance issue.

use thiserror::Error;

use crate::census::{census, StocCensus};
use crate::decomposition::{decompose, GenerationDecomposition, TieBreak};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerificationError {
    #[error("generation {m} outside the valid range 2..={last}")]
    BadGeneration { m: u32, last: u32 },
    #[error("graph is not regular (degrees {0} and {1} both present)")]
    NotRegular(usize, usize),
    #[error("closed-form term overflows 128-bit arithmetic")]
    Overflow,
    #[error("invariance check needs at least 2 trials, got {0}")]
    TooFewTrials(usize),
    #[error("start node {id} out of range for node count {node_count}")]
    IdOutOfRange { id: NodeId, node_count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationKind {
    /// General recursion for the absolute index.
    Recursion,
    /// Closed form for k-regular graphs.
    RegularClosedForm,
    /// One-step regular recursion iterated from N_1 = k.
    RegularIteration,
}

/// Left-minus-right residuals of one relation over a range of generations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    pub start: NodeId,
    pub equation: EquationKind,
    /// `(generation, residual)` pairs.
    pub residuals: Vec<(u32, i64)>,
}

impl ResidualReport {
    pub fn max_abs_residual(&self) -> i64 {
        self.residuals.iter().map(|&(_, r)| r.abs()).max().unwrap_or(0)
    }

    pub fn all_zero(&self) -> bool {
        self.max_abs_residual() == 0
    }
}

fn odd_sum(c: &StocCensus, m: u32) -> i64 {
    c.counts()
        .range((m, 0)..(m + 1, 0))
        .filter(|(&(_, j), _)| j % 2 == 1)
        .map(|(_, &n)| n as i64)
        .sum()
}

fn even_sum(c: &StocCensus, m: u32) -> i64 {
    c.counts()
        .range((m, 0)..(m + 1, 0))
        .filter(|(&(_, j), _)| j % 2 == 0)
        .map(|(_, &n)| n as i64)
        .sum()
}

/// The STOC correction entering the recursion at generation `m`:
/// `2 * odd(m) + even(m) + even(m - 1)`. Classification-free: it equals the
/// degree sum over generation m-1 minus its node count, minus N_m.
pub fn correction_combination(c: &StocCensus, m: u32) -> i64 {
    let prev = if m == 0 { 0 } else { even_sum(c, m - 1) };
    2 * odd_sum(c, m) + even_sum(c, m) + prev
}

/// Residual of the index/STOC recursion at generation `m >= 2`:
///
/// `N_m - [ sum over generation-(m-1) nodes of (degree - 1)
///          - 2 * odd STOCs of m - even STOCs of m - even STOCs of m-1 ]`.
///
/// Valid through the dummy generation `L + 1`, where the empty level and
/// the intra-level edges among last-generation nodes cancel exactly.
pub fn recursion_residual(
    g: &Graph,
    d: &GenerationDecomposition,
    c: &StocCensus,
    m: u32,
) -> Result<i64, VerificationError> {
    let last = d.eccentricity();
    if m < 2 || m > last + 1 {
        return Err(VerificationError::BadGeneration { m, last });
    }
    let tree_term: i64 = d.level_sets()[m as usize - 1]
        .iter()
        .map(|&v| g.degree(v) as i64 - 1)
        .sum();
    let lhs = d.level_size(m) as i64;
    Ok(lhs - (tree_term - correction_combination(c, m)))
}

/// Residuals of the recursion for every generation in `2..=L+1`.
pub fn recursion_report(
    g: &Graph,
    d: &GenerationDecomposition,
    c: &StocCensus,
) -> Result<ResidualReport, VerificationError> {
    let mut residuals = Vec::new();
    for m in 2..=d.eccentricity() + 1 {
        residuals.push((m, recursion_residual(g, d, c, m)?));
    }
    Ok(ResidualReport {
        start: d.start(),
        equation: EquationKind::Recursion,
        residuals,
    })
}

/// Degree shared by every node, or `NotRegular`.
pub fn regular_degree(g: &Graph) -> Result<usize, VerificationError> {
    let mut degrees = g.nodes().map(|v| g.degree(v));
    let Some(k) = degrees.next() else { return Ok(0) };
    for d in degrees {
        if d != k {
            return Err(VerificationError::NotRegular(k, d));
        }
    }
    Ok(k)
}

/// Closed form of the regular recursion: for a k-regular graph,
///
/// `N_m = k (k-1)^(m-1)
///        - sum over odd  census entries (i, j), 2 <= i <= m, of 2 (k-1)^(m-i) C
///        - sum over even census entries (i, j), 2 <= i <  m, of k (k-1)^(m-1-i) C
///        - sum over even census entries (m, j) of C`.
pub fn closed_form_index(g: &Graph, c: &StocCensus, m: u32) -> Result<i64, VerificationError> {
    if m < 1 {
        return Err(VerificationError::BadGeneration { m, last: 0 });
    }
    let k = regular_degree(g)? as i128;
    let pow = |exp: u32| -> Result<i128, VerificationError> {
        (k - 1).checked_pow(exp).ok_or(VerificationError::Overflow)
    };

    let mut value = k.checked_mul(pow(m - 1)?).ok_or(VerificationError::Overflow)?;
    for (&(i, j), &count) in c.counts().range((2, 0)..(m + 1, 0)) {
        let count = count as i128;
        let term = if j % 2 == 1 {
            2 * pow(m - i)? * count
        } else if i < m {
            k * pow(m - 1 - i)? * count
        } else {
            count
        };
        value -= term;
    }
    i64::try_from(value).map_err(|_| VerificationError::Overflow)
}

/// The one-step regular recursion `N_i = N_{i-1} (k-1) - corrections`
/// iterated from `N_1 = k` up to generation `m`. Agrees with
/// [`closed_form_index`] by construction of the closed form.
pub fn regular_recursion_index(
    g: &Graph,
    c: &StocCensus,
    m: u32,
) -> Result<i64, VerificationError> {
    if m < 1 {
        return Err(VerificationError::BadGeneration { m, last: 0 });
    }
    let k = regular_degree(g)? as i64;
    let mut value = k;
    for i in 2..=m {
        value = value * (k - 1) - correction_combination(c, i);
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantQuantity {
    /// Per-generation secondary-edge (STOC) totals.
    PerGenerationTotal,
    /// The correction combination entering the recursion.
    CorrectionCombination,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceViolation {
    pub quantity: InvariantQuantity,
    pub generation: u32,
    /// Value seen per trial, reference trial first.
    pub values: Vec<i64>,
}

/// Outcome of re-running decomposition and census under different primary-
/// edge tie-break policies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub start: NodeId,
    pub trials: usize,
    pub violations: Vec<InvarianceViolation>,
}

impl InvarianceReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that per-generation STOC totals and the correction combination do
/// not depend on which candidate parent edge is designated primary.
///
/// Runs the deterministic lowest-id policy as a reference plus `trials`
/// seeded-random policies (seeds `seed..seed+trials`). Violations are
/// reported, not thrown.
pub fn tie_break_invariance_check(
    g: &Graph,
    start: NodeId,
    trials: usize,
    seed: u64,
) -> Result<InvarianceReport, VerificationError> {
    if trials < 2 {
        return Err(VerificationError::TooFewTrials(trials));
    }
    if start as usize >= g.node_count() {
        return Err(VerificationError::IdOutOfRange {
            id: start,
            node_count: g.node_count(),
        });
    }

    let mut policies = vec![TieBreak::LowestId];
    policies.extend((0..trials as u64).map(|t| TieBreak::SeededRandom(seed + t)));

    let censuses: Vec<StocCensus> = policies
        .iter()
        .map(|&policy| {
            let d = decompose(g, start, policy).expect("start validated above");
            census(g, &d).expect("decomposition belongs to g")
        })
        .collect();

    let max_gen = censuses[0].max_generation();
    let mut violations = Vec::new();
    for m in 0..=max_gen {
        let totals: Vec<i64> = censuses
            .iter()
            .map(|c| c.per_generation().get(m as usize).copied().unwrap_or(0) as i64)
            .collect();
        if totals.windows(2).any(|w| w[0] != w[1]) {
            violations.push(InvarianceViolation {
                quantity: InvariantQuantity::PerGenerationTotal,
                generation: m,
                values: totals,
            });
        }
        let combos: Vec<i64> = censuses.iter().map(|c| correction_combination(c, m)).collect();
        if combos.windows(2).any(|w| w[0] != w[1]) {
            violations.push(InvarianceViolation {
                quantity: InvariantQuantity::CorrectionCombination,
                generation: m,
                values: combos,
            });
        }
    }

    Ok(InvarianceReport {
        start,
        trials,
        violations,
    })
}

/// Named pass/fail checks over fixed graph corpora, used by the `verify`
/// CLI subcommand.
pub mod suites {
    use super::*;
    use crate::census::{euler_total, stoc_per_generation_by_difference};
    use crate::generators::{
        erdos_renyi, extended_ring, holme_kim, ring, square_lattice, triangular_lattice,
        watts_strogatz,
    };

    #[derive(Debug, Clone)]
    pub struct CheckOutcome {
        pub check: &'static str,
        pub subject: String,
        pub passed: bool,
        pub detail: String,
    }

    fn ok(check: &'static str, subject: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            check,
            subject: subject.to_string(),
            passed: true,
            detail,
        }
    }

    fn fail(check: &'static str, subject: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            check,
            subject: subject.to_string(),
            passed: false,
            detail,
        }
    }

    /// Recursion residuals over every start node and every valid generation.
    fn check_recursion(g: &Graph, subject: &str) -> CheckOutcome {
        let mut worst = 0i64;
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            let report = recursion_report(g, &d, &c).unwrap();
            worst = worst.max(report.max_abs_residual());
        }
        let detail = format!("max |residual| = {worst}");
        if worst == 0 {
            ok("recursion-residual", subject, detail)
        } else {
            fail("recursion-residual", subject, detail)
        }
    }

    /// Census total against `1 + edges - nodes` from every start node.
    fn check_euler(g: &Graph, subject: &str) -> CheckOutcome {
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            let expected = euler_total(g, start).unwrap();
            if c.total() != expected {
                return fail(
                    "euler-total",
                    subject,
                    format!("start {start}: census {} != {expected}", c.total()),
                );
            }
        }
        ok("euler-total", subject, format!("total {} from every start", euler_total(g, 0).unwrap()))
    }

    /// Difference-based per-generation counts against the direct census.
    fn check_difference(g: &Graph, subject: &str) -> CheckOutcome {
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            let diff = stoc_per_generation_by_difference(g, &d).unwrap();
            if diff != c.per_generation() {
                return fail("difference-method", subject, format!("mismatch from start {start}"));
            }
        }
        ok("difference-method", subject, "matches census from every start".into())
    }

    /// Closed form and iterated recursion against BFS level sizes on a
    /// regular graph.
    fn check_closed_form(g: &Graph, subject: &str) -> CheckOutcome {
        for start in g.nodes() {
            let d = decompose(g, start, TieBreak::LowestId).unwrap();
            let c = census(g, &d).unwrap();
            for m in 1..=d.eccentricity() {
                let expected = d.level_size(m) as i64;
                let closed = closed_form_index(g, &c, m).unwrap();
                let iterated = regular_recursion_index(g, &c, m).unwrap();
                if closed != expected || iterated != expected {
                    return fail(
                        "closed-form",
                        subject,
                        format!("start {start} gen {m}: closed {closed}, iterated {iterated}, bfs {expected}"),
                    );
                }
            }
        }
        ok("closed-form", subject, "equals BFS level sizes from every start".into())
    }

    fn check_invariance(g: &Graph, subject: &str, start: NodeId, seed: u64) -> CheckOutcome {
        let report = tie_break_invariance_check(g, start, 10, seed).unwrap();
        if report.is_consistent() {
            ok("tie-break-invariance", subject, "10 random policies agree".into())
        } else {
            fail(
                "tie-break-invariance",
                subject,
                format!("{} violations", report.violations.len()),
            )
        }
    }

    /// The fixed lattice corpus: rings, extended rings, triangular and
    /// square lattices, and square tori.
    pub fn lattice_suite() -> Vec<CheckOutcome> {
        let lattices: Vec<(String, Graph, bool)> = vec![
            ("ring(9)".into(), ring(9).unwrap(), true),
            ("ring(10)".into(), ring(10).unwrap(), true),
            ("ring(21)".into(), ring(21).unwrap(), true),
            ("extended_ring(20,2)".into(), extended_ring(20, 2).unwrap(), true),
            ("extended_ring(24,2)".into(), extended_ring(24, 2).unwrap(), true),
            ("triangular(6x6)".into(), triangular_lattice(6, 6).unwrap(), false),
            ("square(6x6)".into(), square_lattice(6, 6, false).unwrap(), false),
            ("torus(6x6)".into(), square_lattice(6, 6, true).unwrap(), true),
            ("torus(10x10)".into(), square_lattice(10, 10, true).unwrap(), true),
        ];
        let mut outcomes = Vec::new();
        for (subject, g, regular) in &lattices {
            outcomes.push(check_recursion(g, subject));
            outcomes.push(check_euler(g, subject));
            outcomes.push(check_difference(g, subject));
            if *regular {
                outcomes.push(check_closed_form(g, subject));
            }
        }
        outcomes
    }

    /// A seeded random corpus of Erdos-Renyi, Watts-Strogatz and Holme-Kim
    /// graphs.
    pub fn random_suite(seed: u64) -> Vec<CheckOutcome> {
        let mut graphs: Vec<(String, Graph)> = Vec::new();
        for i in 0..6 {
            let n = 60 + 30 * i;
            let edges = 2 * n;
            graphs.push((
                format!("er({n},{edges})#{i}"),
                erdos_renyi(n, edges, seed + i as u64).unwrap(),
            ));
        }
        for (i, p) in [0.05, 0.3, 1.0].iter().enumerate() {
            graphs.push((
                format!("ws(200,6,{p})"),
                watts_strogatz(200, 6, *p, seed + 100 + i as u64).unwrap(),
            ));
        }
        for (i, q) in [0.0, 0.5, 1.0].iter().enumerate() {
            graphs.push((
                format!("hk(200,3,{q})"),
                holme_kim(200, 3, *q, seed + 200 + i as u64).unwrap(),
            ));
        }

        let mut outcomes = Vec::new();
        for (subject, g) in &graphs {
            outcomes.push(check_recursion(g, subject));
            outcomes.push(check_euler(g, subject));
            outcomes.push(check_difference(g, subject));
            outcomes.push(check_invariance(g, subject, 0, seed ^ 0x5eed));
        }
        outcomes
    }
}
