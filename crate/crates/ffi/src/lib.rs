//! C ABI for the stocnet library.
//!
//! Graphs and decompositions are opaque handles created and destroyed
//! through this interface; every fallible call returns a [`StocnetStatus`]
//! and stores a human-readable message retrievable with
//! [`stocnet_last_error_message`] on the same thread. Out-parameters are
//! only written on `Ok`.
//!
//! The matching C header lives at `include/stocnet.h` and is generated
//! with cbindgen (see `cbindgen.toml`).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::ptr;

use stocnet::census::{census, euler_total, stoc_per_generation_by_difference};
use stocnet::decomposition::{decompose, GenerationDecomposition, TieBreak};
use stocnet::generators;
use stocnet::graph::{build_graph, load_edge_list, write_edge_list, Graph};
use stocnet::verification::recursion_report;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StocnetStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments violate a precondition (bad sizes, probabilities, ids).
    InvalidArgument = 2,
    /// An edge-list file failed to parse or validate.
    ParseError = 3,
    /// A node id is outside the graph.
    OutOfRange = 4,
    /// The node is not reachable from the decomposition's start.
    Unreachable = 5,
    /// A caller-supplied buffer is too small.
    BufferTooSmall = 6,
    /// File could not be read or written.
    IoError = 7,
}

/// Opaque graph handle.
pub struct StocnetGraph(Graph);

/// Opaque decomposition handle; remembers the graph it was computed from.
pub struct StocnetDecomposition(GenerationDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: StocnetStatus, message: impl Into<String>) -> StocnetStatus {
    let text = CString::new(message.into()).unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn stocnet_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |msg| msg.as_ptr())
    })
}

fn graph_out(out: *mut *mut StocnetGraph, graph: Graph) -> StocnetStatus {
    // Safety: out checked non-null by the caller.
    unsafe { *out = Box::into_raw(Box::new(StocnetGraph(graph))) };
    StocnetStatus::Ok
}

macro_rules! require_nonnull {
    ($ptr:expr) => {
        if $ptr.is_null() {
            return fail(
                StocnetStatus::NullPointer,
                concat!(stringify!($ptr), " is null"),
            );
        }
    };
}

/// Builds a graph from `pair_count` edges laid out as `u0,v0,u1,v1,...`.
/// With `use_node_count = false` the node count is inferred from the
/// largest id.
///
/// # Safety
/// `edges` must point to `2 * pair_count` readable u32 values; `out` must
/// be a valid location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_from_edges(
    edges: *const u32,
    pair_count: usize,
    node_count: u32,
    use_node_count: bool,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    require_nonnull!(out);
    if pair_count > 0 {
        require_nonnull!(edges);
    }
    let flat = unsafe { std::slice::from_raw_parts(edges, 2 * pair_count) };
    let pairs: Vec<(u32, u32)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    let count = use_node_count.then_some(node_count as usize);
    match build_graph(&pairs, count) {
        Ok(g) => graph_out(out, g),
        Err(e) => fail(StocnetStatus::InvalidArgument, e.to_string()),
    }
}

/// Loads an edge-list file (`u v` per line, `#` comments).
///
/// # Safety
/// `path` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_load_path(
    path: *const c_char,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    require_nonnull!(path);
    require_nonnull!(out);
    let path = match unsafe { CStr::from_ptr(path) }.to_str() {
        Ok(p) => p,
        Err(_) => return fail(StocnetStatus::InvalidArgument, "path is not valid UTF-8"),
    };
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) => return fail(StocnetStatus::IoError, format!("{path}: {e}")),
    };
    match load_edge_list(BufReader::new(file)) {
        Ok(g) => graph_out(out, g),
        Err(e) => fail(StocnetStatus::ParseError, e.to_string()),
    }
}

/// Writes the graph as an edge-list file.
///
/// # Safety
/// `graph` must be a live handle; `path` a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_write_path(
    graph: *const StocnetGraph,
    path: *const c_char,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(path);
    let g = unsafe { &(*graph).0 };
    let path = match unsafe { CStr::from_ptr(path) }.to_str() {
        Ok(p) => p,
        Err(_) => return fail(StocnetStatus::InvalidArgument, "path is not valid UTF-8"),
    };
    let file = match File::create(path) {
        Ok(f) => f,
        Err(e) => return fail(StocnetStatus::IoError, format!("{path}: {e}")),
    };
    let mut writer = BufWriter::new(file);
    match write_edge_list(g, &mut writer) {
        Ok(()) => StocnetStatus::Ok,
        Err(e) => fail(StocnetStatus::IoError, e.to_string()),
    }
}

/// Frees a graph handle; null is ignored.
///
/// # Safety
/// `graph` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_free(graph: *mut StocnetGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Node count; 0 for a null handle.
///
/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_node_count(graph: *const StocnetGraph) -> u32 {
    if graph.is_null() {
        return 0;
    }
    unsafe { &(*graph).0 }.node_count() as u32
}

/// Edge count; 0 for a null handle.
///
/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_edge_count(graph: *const StocnetGraph) -> u64 {
    if graph.is_null() {
        return 0;
    }
    unsafe { &(*graph).0 }.edge_count() as u64
}

/// Degree of one node.
///
/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_graph_degree(
    graph: *const StocnetGraph,
    node: u32,
    out: *mut u32,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(out);
    let g = unsafe { &(*graph).0 };
    if node as usize >= g.node_count() {
        return fail(
            StocnetStatus::OutOfRange,
            format!("node {node} out of range for {} nodes", g.node_count()),
        );
    }
    unsafe { *out = g.degree(node) as u32 };
    StocnetStatus::Ok
}

macro_rules! generator {
    ($call:expr, $out:expr) => {{
        require_nonnull!($out);
        match $call {
            Ok(g) => graph_out($out, g),
            Err(e) => fail(StocnetStatus::InvalidArgument, e.to_string()),
        }
    }};
}

/// Cycle graph on `n >= 3` nodes.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_ring(
    n: usize,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::ring(n), out)
}

/// Ring where each node reaches `r` neighbors on both sides (`n > 2r`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_extended_ring(
    n: usize,
    r: usize,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::extended_ring(n, r), out)
}

/// Square lattice, optionally wrapped into a torus.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_square_lattice(
    rows: usize,
    cols: usize,
    torus: bool,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::square_lattice(rows, cols, torus), out)
}

/// Triangular lattice in row-offset coordinates.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_triangular_lattice(
    rows: usize,
    cols: usize,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::triangular_lattice(rows, cols), out)
}

/// Watts-Strogatz small world: even degree `k`, rewiring probability `p`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_watts_strogatz(
    n: usize,
    k: usize,
    p: f64,
    seed: u64,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::watts_strogatz(n, k, p, seed), out)
}

/// Holme-Kim scale-free graph with triad-formation probability `q`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_holme_kim(
    n: usize,
    m: usize,
    q: f64,
    seed: u64,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::holme_kim(n, m, q, seed), out)
}

/// Barabasi-Albert preferential attachment (`holme_kim` with q = 0).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_barabasi_albert(
    n: usize,
    m: usize,
    seed: u64,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::barabasi_albert(n, m, seed), out)
}

/// Uniform random simple graph with exactly `edges` edges.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_generate_erdos_renyi(
    n: usize,
    edges: usize,
    seed: u64,
    out: *mut *mut StocnetGraph,
) -> StocnetStatus {
    generator!(generators::erdos_renyi(n, edges, seed), out)
}

/// Decomposes `graph` from `start`. With `random_tie_break` the primary
/// parent among equal candidates is chosen by a generator seeded with
/// `tie_break_seed` instead of by lowest id.
///
/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_decompose(
    graph: *const StocnetGraph,
    start: u32,
    random_tie_break: bool,
    tie_break_seed: u64,
    out: *mut *mut StocnetDecomposition,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(out);
    let g = unsafe { &(*graph).0 };
    let policy = if random_tie_break {
        TieBreak::SeededRandom(tie_break_seed)
    } else {
        TieBreak::LowestId
    };
    match decompose(g, start, policy) {
        Ok(d) => {
            unsafe { *out = Box::into_raw(Box::new(StocnetDecomposition(d))) };
            StocnetStatus::Ok
        }
        Err(e) => fail(StocnetStatus::OutOfRange, e.to_string()),
    }
}

/// Frees a decomposition handle; null is ignored.
///
/// # Safety
/// `decomposition` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stocnet_decomposition_free(decomposition: *mut StocnetDecomposition) {
    if !decomposition.is_null() {
        drop(unsafe { Box::from_raw(decomposition) });
    }
}

/// Largest generation with a node (`L`); 0 for a null handle.
///
/// # Safety
/// `decomposition` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn stocnet_decomposition_eccentricity(
    decomposition: *const StocnetDecomposition,
) -> u32 {
    if decomposition.is_null() {
        return 0;
    }
    unsafe { &(*decomposition).0 }.eccentricity()
}

/// Generation (hop distance) of one node; `Unreachable` if the node is not
/// in the start's component.
///
/// # Safety
/// `decomposition` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_node_generation(
    decomposition: *const StocnetDecomposition,
    node: u32,
    out: *mut u32,
) -> StocnetStatus {
    require_nonnull!(decomposition);
    require_nonnull!(out);
    let d = unsafe { &(*decomposition).0 };
    match d.node_generation(node) {
        Some(gen) => {
            unsafe { *out = gen };
            StocnetStatus::Ok
        }
        None => fail(
            StocnetStatus::Unreachable,
            format!("node {node} unreachable from start {}", d.start()),
        ),
    }
}

fn copy_series(
    series: &[u64],
    buffer: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> StocnetStatus {
    if series.len() > capacity {
        return fail(
            StocnetStatus::BufferTooSmall,
            format!("need {} slots, got {capacity}", series.len()),
        );
    }
    unsafe {
        ptr::copy_nonoverlapping(series.as_ptr(), buffer, series.len());
        *written = series.len();
    }
    StocnetStatus::Ok
}

/// Local absolute index: nodes newly reached per generation. The series
/// has `eccentricity + 1` entries.
///
/// # Safety
/// `decomposition` must be a live handle; `buffer` must have room for
/// `capacity` u64 values; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_local_absolute_index(
    decomposition: *const StocnetDecomposition,
    buffer: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> StocnetStatus {
    require_nonnull!(decomposition);
    require_nonnull!(buffer);
    require_nonnull!(written);
    let d = unsafe { &(*decomposition).0 };
    let series: Vec<u64> = d.level_sets().iter().map(|l| l.len() as u64).collect();
    copy_series(&series, buffer, capacity, written)
}

/// STOC counts per generation, computed by the cumulative-difference
/// method. The series has `eccentricity + 2` entries (the last one is the
/// dummy generation).
///
/// # Safety
/// `graph` and `decomposition` must be live handles from the same graph;
/// `buffer` must have room for `capacity` u64 values; `written` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_stoc_per_generation(
    graph: *const StocnetGraph,
    decomposition: *const StocnetDecomposition,
    buffer: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(decomposition);
    require_nonnull!(buffer);
    require_nonnull!(written);
    let g = unsafe { &(*graph).0 };
    let d = unsafe { &(*decomposition).0 };
    match stoc_per_generation_by_difference(g, d) {
        Ok(series) => copy_series(&series, buffer, capacity, written),
        Err(e) => fail(StocnetStatus::InvalidArgument, e.to_string()),
    }
}

/// Total STOC count seen from the decomposition's start.
///
/// # Safety
/// `graph` and `decomposition` must be live handles from the same graph;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_census_total(
    graph: *const StocnetGraph,
    decomposition: *const StocnetDecomposition,
    out: *mut u64,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(decomposition);
    require_nonnull!(out);
    let g = unsafe { &(*graph).0 };
    let d = unsafe { &(*decomposition).0 };
    match census(g, d) {
        Ok(c) => {
            unsafe { *out = c.total() };
            StocnetStatus::Ok
        }
        Err(e) => fail(StocnetStatus::InvalidArgument, e.to_string()),
    }
}

/// `1 + edges - nodes` over the component containing `node`.
///
/// # Safety
/// `graph` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_euler_total(
    graph: *const StocnetGraph,
    node: u32,
    out: *mut u64,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(out);
    let g = unsafe { &(*graph).0 };
    match euler_total(g, node) {
        Ok(total) => {
            unsafe { *out = total };
            StocnetStatus::Ok
        }
        Err(e) => fail(StocnetStatus::OutOfRange, e.to_string()),
    }
}

/// Largest absolute residual of the index/STOC recursion over all valid
/// generations; zero on every graph if the implementation is consistent.
///
/// # Safety
/// `graph` and `decomposition` must be live handles from the same graph;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stocnet_recursion_max_residual(
    graph: *const StocnetGraph,
    decomposition: *const StocnetDecomposition,
    out: *mut i64,
) -> StocnetStatus {
    require_nonnull!(graph);
    require_nonnull!(decomposition);
    require_nonnull!(out);
    let g = unsafe { &(*graph).0 };
    let d = unsafe { &(*decomposition).0 };
    let c = match census(g, d) {
        Ok(c) => c,
        Err(e) => return fail(StocnetStatus::InvalidArgument, e.to_string()),
    };
    match recursion_report(g, d, &c) {
        Ok(report) => {
            unsafe { *out = report.max_abs_residual() };
            StocnetStatus::Ok
        }
        Err(e) => fail(StocnetStatus::InvalidArgument, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn make_ring(n: usize) -> *mut StocnetGraph {
        let mut out = ptr::null_mut();
        let status = unsafe { stocnet_generate_ring(n, &mut out) };
        assert_eq!(status, StocnetStatus::Ok);
        assert!(!out.is_null());
        out
    }

    #[test]
    fn build_query_free() {
        let edges = [0u32, 1, 1, 2, 2, 0];
        let mut g = ptr::null_mut();
        let status = unsafe { stocnet_graph_from_edges(edges.as_ptr(), 3, 0, false, &mut g) };
        assert_eq!(status, StocnetStatus::Ok);
        assert_eq!(unsafe { stocnet_graph_node_count(g) }, 3);
        assert_eq!(unsafe { stocnet_graph_edge_count(g) }, 3);
        let mut degree = 0;
        assert_eq!(
            unsafe { stocnet_graph_degree(g, 1, &mut degree) },
            StocnetStatus::Ok
        );
        assert_eq!(degree, 2);
        unsafe { stocnet_graph_free(g) };
    }

    #[test]
    fn invalid_edges_are_reported() {
        let edges = [0u32, 0];
        let mut g = ptr::null_mut();
        let status = unsafe { stocnet_graph_from_edges(edges.as_ptr(), 1, 0, false, &mut g) };
        assert_eq!(status, StocnetStatus::InvalidArgument);
        let msg = stocnet_last_error_message();
        assert!(!msg.is_null());
        let text = unsafe { CStr::from_ptr(msg) }.to_str().unwrap();
        assert!(text.contains("self-loop"), "{text}");
    }

    #[test]
    fn decompose_and_series() {
        let g = make_ring(6);
        let mut d = ptr::null_mut();
        assert_eq!(
            unsafe { stocnet_decompose(g, 0, false, 0, &mut d) },
            StocnetStatus::Ok
        );
        assert_eq!(unsafe { stocnet_decomposition_eccentricity(d) }, 3);

        let mut gen = u32::MAX;
        assert_eq!(
            unsafe { stocnet_node_generation(d, 3, &mut gen) },
            StocnetStatus::Ok
        );
        assert_eq!(gen, 3);

        let mut buf = [0u64; 8];
        let mut written = 0usize;
        assert_eq!(
            unsafe { stocnet_local_absolute_index(d, buf.as_mut_ptr(), buf.len(), &mut written) },
            StocnetStatus::Ok
        );
        assert_eq!(&buf[..written], &[1, 2, 2, 1]);

        assert_eq!(
            unsafe { stocnet_stoc_per_generation(g, d, buf.as_mut_ptr(), buf.len(), &mut written) },
            StocnetStatus::Ok
        );
        assert_eq!(&buf[..written], &[0, 0, 0, 1, 0]);

        let mut total = 0u64;
        assert_eq!(unsafe { stocnet_census_total(g, d, &mut total) }, StocnetStatus::Ok);
        assert_eq!(total, 1);
        let mut euler = 7u64;
        assert_eq!(unsafe { stocnet_euler_total(g, 0, &mut euler) }, StocnetStatus::Ok);
        assert_eq!(euler, 1);
        let mut residual = -1i64;
        assert_eq!(
            unsafe { stocnet_recursion_max_residual(g, d, &mut residual) },
            StocnetStatus::Ok
        );
        assert_eq!(residual, 0);

        unsafe { stocnet_decomposition_free(d) };
        unsafe { stocnet_graph_free(g) };
    }

    #[test]
    fn buffer_too_small() {
        let g = make_ring(6);
        let mut d = ptr::null_mut();
        unsafe { stocnet_decompose(g, 0, false, 0, &mut d) };
        let mut buf = [0u64; 2];
        let mut written = 0usize;
        assert_eq!(
            unsafe { stocnet_local_absolute_index(d, buf.as_mut_ptr(), buf.len(), &mut written) },
            StocnetStatus::BufferTooSmall
        );
        unsafe { stocnet_decomposition_free(d) };
        unsafe { stocnet_graph_free(g) };
    }

    #[test]
    fn out_of_range_and_unreachable() {
        let g = make_ring(4);
        let mut d = ptr::null_mut();
        assert_eq!(
            unsafe { stocnet_decompose(g, 9, false, 0, &mut d) },
            StocnetStatus::OutOfRange
        );
        unsafe { stocnet_graph_free(g) };

        let edges = [0u32, 1, 2, 3];
        let mut g = ptr::null_mut();
        unsafe { stocnet_graph_from_edges(edges.as_ptr(), 2, 0, false, &mut g) };
        let mut d = ptr::null_mut();
        assert_eq!(unsafe { stocnet_decompose(g, 0, false, 0, &mut d) }, StocnetStatus::Ok);
        let mut gen = 0u32;
        assert_eq!(
            unsafe { stocnet_node_generation(d, 3, &mut gen) },
            StocnetStatus::Unreachable
        );
        unsafe { stocnet_decomposition_free(d) };
        unsafe { stocnet_graph_free(g) };
    }

    #[test]
    fn null_handles_are_safe() {
        assert_eq!(unsafe { stocnet_graph_node_count(ptr::null()) }, 0);
        assert_eq!(unsafe { stocnet_decomposition_eccentricity(ptr::null()) }, 0);
        let mut out = 0u64;
        assert_eq!(
            unsafe { stocnet_euler_total(ptr::null(), 0, &mut out) },
            StocnetStatus::NullPointer
        );
        unsafe { stocnet_graph_free(ptr::null_mut()) };
        unsafe { stocnet_decomposition_free(ptr::null_mut()) };
    }

    #[test]
    fn generators_round_trip_through_files() {
        let dir = std::env::temp_dir().join("stocnet_ffi_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ws.txt");
        let c_path = CString::new(path.to_str().unwrap()).unwrap();

        let mut g = ptr::null_mut();
        assert_eq!(
            unsafe { stocnet_generate_watts_strogatz(50, 4, 0.2, 11, &mut g) },
            StocnetStatus::Ok
        );
        assert_eq!(
            unsafe { stocnet_graph_write_path(g, c_path.as_ptr()) },
            StocnetStatus::Ok
        );
        let mut reloaded = ptr::null_mut();
        assert_eq!(
            unsafe { stocnet_graph_load_path(c_path.as_ptr(), &mut reloaded) },
            StocnetStatus::Ok
        );
        assert_eq!(
            unsafe { stocnet_graph_edge_count(reloaded) },
            unsafe { stocnet_graph_edge_count(g) }
        );
        unsafe { stocnet_graph_free(g) };
        unsafe { stocnet_graph_free(reloaded) };
        std::fs::remove_file(&path).ok();
    }
}
