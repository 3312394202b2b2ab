//! Exact cycle-length spectra via a subset dynamic program over
//! (vertex-set, endpoint) path states, and the pancyclicity predicates
//! built on them.
//!
//! For a source vertex the DP visits every vertex subset containing the
//! source in increasing mask order, maintaining for each subset the set of
//! endpoints reachable by a simple path from the source spanning exactly
//! that subset. A cycle of length `l` through the source exists iff some
//! path of length `l - 1` ends at a neighbor of the source. The table
//! holds `2^(n-1)` endpoint masks, which keeps whole-catalog sweeps
//! practical to about order 14 even though the graph type allows 32.
//!
//! Convention for acyclic graphs: girth and circumference are `None` and
//! no vertex, edge or graph is reported (weakly) pancyclic. The vacuous
//! reading of the definitions is deliberately rejected; the interesting
//! inputs always have girth 3 and the convention keeps reports unambiguous.

use crate::graph::{iter_bits, Graph};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("path endpoints must be distinct")]
    SameEndpoints,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
}

/// A set of cycle or path lengths, stored as a bitmask (bit `l` = length
/// `l` present). Lengths never exceed 32, so a single word suffices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LengthSet(u64);

impl LengthSet {
    pub const EMPTY: LengthSet = LengthSet(0);

    /// The set `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        debug_assert!(hi < 64);
        if lo > hi {
            LengthSet(0)
        } else {
            LengthSet(((1u64 << (hi - lo + 1)) - 1) << lo)
        }
    }

    pub fn insert(&mut self, len: usize) {
        debug_assert!(len < 64);
        self.0 |= 1 << len;
    }

    pub fn contains(&self, len: usize) -> bool {
        len < 64 && self.0 & (1 << len) != 0
    }

    /// True iff every length of `other` is present in `self`.
    pub fn covers(&self, other: LengthSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn union(&self, other: LengthSet) -> LengthSet {
        LengthSet(self.0 | other.0)
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        (!self.is_empty()).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let l = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(l)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Subset path DP from `source`: calls `visit(k, endpoints)` for every
/// vertex subset S with `source` in S and |S| = k >= 2 that carries at
/// least one simple path from `source` spanning S, where `endpoints` is
/// the bitmask of reachable path endpoints. Visiting stops early when
/// `visit` returns true. Subsets arrive in increasing mask order, so
/// smaller sets are never revisited.
fn scan_paths(g: &Graph, source: usize, mut visit: impl FnMut(usize, u32) -> bool) {
    let n = g.order();
    debug_assert!(source < n);
    if n < 2 {
        return;
    }
    let low = (1u32 << source) - 1;
    // Index masks address the n-1 vertices other than `source`.
    let compress = |vmask: u32| (vmask & low) | ((vmask >> 1) & !low);
    let expand = |imask: u32| (imask & low) | ((imask & !low) << 1);

    let mut end = vec![0u32; 1usize << (n - 1)];
    for w in iter_bits(g.neighbors(source)) {
        end[compress(1u32 << w) as usize] = 1 << w;
    }
    for m in 1..end.len() {
        let ends = end[m];
        if ends == 0 {
            continue;
        }
        let members = expand(m as u32) | (1 << source);
        let k = (m as u32).count_ones() as usize + 1;
        if visit(k, ends) {
            return;
        }
        if k == n {
            continue;
        }
        for u in iter_bits(ends) {
            let ext = g.neighbors(u) & !members;
            for w in iter_bits(ext) {
                end[(m as u32 | compress(1u32 << w)) as usize] |= 1 << w;
            }
        }
    }
}

/// The exact set of lengths `l` such that `v` lies on an `l`-cycle.
pub fn vertex_cycle_lengths(g: &Graph, v: usize) -> LengthSet {
    vertex_cycle_lengths_until(g, v, LengthSet::EMPTY)
}

/// Like [`vertex_cycle_lengths`] but stops as soon as the collected set
/// covers `target` (useful when only coverage of an interval matters).
/// The result always covers the intersection of the true spectrum with
/// `target` correctly; lengths outside `target` may be missing when the
/// early exit fires.
pub fn vertex_cycle_lengths_until(g: &Graph, v: usize, target: LengthSet) -> LengthSet {
    let nv = g.neighbors(v);
    let mut out = LengthSet::EMPTY;
    if !target.is_empty() && out.covers(target) {
        return out;
    }
    scan_paths(g, v, |k, ends| {
        if k >= 3 && ends & nv != 0 {
            out.insert(k);
            !target.is_empty() && out.covers(target)
        } else {
            false
        }
    });
    out
}

/// The exact set of path lengths between `u` and `w` (number of edges of
/// each simple `(u,w)`-path).
pub fn path_length_spectrum(g: &Graph, u: usize, w: usize) -> Result<LengthSet, SpectrumError> {
    if u == w {
        return Err(SpectrumError::SameEndpoints);
    }
    assert!(u < g.order() && w < g.order());
    let wbit = 1u32 << w;
    let mut out = LengthSet::EMPTY;
    scan_paths(g, u, |k, ends| {
        if ends & wbit != 0 {
            out.insert(k - 1);
        }
        false
    });
    Ok(out)
}

/// Path-length spectra from `u` to every other vertex in one DP pass;
/// entry `u` itself stays empty. Cheaper than calling
/// [`path_length_spectrum`] per target when several targets share a
/// source.
pub fn path_length_spectra_from(g: &Graph, u: usize) -> Vec<LengthSet> {
    assert!(u < g.order());
    let mut out = vec![LengthSet::EMPTY; g.order()];
    scan_paths(g, u, |k, ends| {
        for w in crate::graph::iter_bits(ends) {
            out[w].insert(k - 1);
        }
        false
    });
    out
}

/// The exact set of lengths `l` such that the edge `{u, w}` lies on an
/// `l`-cycle: a cycle of length `l` through the edge is a `(u,w)`-path of
/// length `l - 1 >= 2` plus the edge itself.
pub fn edge_cycle_lengths(g: &Graph, u: usize, w: usize) -> Result<LengthSet, SpectrumError> {
    if u == w {
        return Err(SpectrumError::SameEndpoints);
    }
    if u >= g.order() || w >= g.order() || !g.has_edge(u, w) {
        return Err(SpectrumError::NotAnEdge(u, w));
    }
    let paths = path_length_spectrum(g, u, w)?;
    let mut out = LengthSet::EMPTY;
    for l in paths.iter() {
        if l >= 2 {
            out.insert(l + 1);
        }
    }
    Ok(out)
}

/// Per-vertex and whole-graph cycle spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSpectrum {
    vertex_lengths: Vec<LengthSet>,
    graph_lengths: LengthSet,
    girth: Option<usize>,
    circumference: Option<usize>,
}

impl CycleSpectrum {
    pub fn vertex_lengths(&self, v: usize) -> LengthSet {
        self.vertex_lengths[v]
    }

    pub fn all_vertex_lengths(&self) -> &[LengthSet] {
        &self.vertex_lengths
    }

    pub fn graph_lengths(&self) -> LengthSet {
        self.graph_lengths
    }

    pub fn girth(&self) -> Option<usize> {
        self.girth
    }

    pub fn circumference(&self) -> Option<usize> {
        self.circumference
    }

    pub fn is_acyclic(&self) -> bool {
        self.graph_lengths.is_empty()
    }
}

/// Full spectrum: which cycle lengths pass through each vertex, their
/// union, and girth/circumference (both `None` iff the graph is acyclic).
pub fn cycle_spectrum(g: &Graph) -> CycleSpectrum {
    let vertex_lengths: Vec<LengthSet> = g.vertices().map(|v| vertex_cycle_lengths(g, v)).collect();
    let graph_lengths = vertex_lengths
        .iter()
        .fold(LengthSet::EMPTY, |acc, s| acc.union(*s));
    CycleSpectrum {
        vertex_lengths,
        graph_lengths,
        girth: graph_lengths.min(),
        circumference: graph_lengths.max(),
    }
}

/// Union of all vertex spectra, computed with min-vertex rooting so each
/// cycle is scanned once. Much cheaper than [`cycle_spectrum`] when only
/// girth/circumference or hamiltonicity are needed.
pub fn graph_cycle_lengths(g: &Graph) -> LengthSet {
    let n = g.order();
    let mut out = LengthSet::EMPTY;
    let everything = LengthSet::interval(3, n);
    for r in 0..n {
        if out.covers(everything) {
            break;
        }
        // Cycles whose minimum vertex is r live in the subgraph on r..n-1.
        let tail = g.induced(!0u32 << r);
        let nv = tail.neighbors(0);
        scan_paths(&tail, 0, |k, ends| {
            if k >= 3 && ends & nv != 0 {
                out.insert(k);
            }
            false
        });
    }
    out
}

/// Circumference equals order: some cycle is spanning.
pub fn is_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let target = {
        let mut t = LengthSet::EMPTY;
        t.insert(n);
        t
    };
    vertex_cycle_lengths_until(g, 0, target).contains(n)
}

/// True iff some vertex's spectrum covers the whole interval
/// `[girth, circumference]`. Scans vertices in descending degree order
/// and stops at the first hit, which is the common case on dense graphs.
pub fn has_weakly_pancyclic_vertex(g: &Graph) -> bool {
    weakly_pancyclic_vertex_count_capped(g, 1) >= 1
}

/// Number of weakly pancyclic vertices, stopping once `cap` are found
/// (pass `g.order()` for the exact count). Returns 0 for acyclic graphs.
pub fn weakly_pancyclic_vertex_count_capped(g: &Graph, cap: usize) -> usize {
    let lengths = graph_cycle_lengths(g);
    let (Some(lo), Some(hi)) = (lengths.min(), lengths.max()) else {
        return 0;
    };
    let target = LengthSet::interval(lo, hi);
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut found = 0;
    for v in order {
        if vertex_cycle_lengths_until(g, v, target).covers(target) {
            found += 1;
            if found >= cap {
                break;
            }
        }
    }
    found
}

/// Classification of every vertex and edge as pancyclic / weakly
/// pancyclic, with the graph-level flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PancyclicityReport {
    pancyclic_vertices: u32,
    weakly_pancyclic_vertices: u32,
    pancyclic_edges: Vec<(usize, usize)>,
    graph_pancyclic: bool,
    graph_weakly_pancyclic: bool,
}

impl PancyclicityReport {
    /// Bitmask of vertices lying on an `l`-cycle for every `3 <= l <= n`.
    pub fn pancyclic_vertices(&self) -> u32 {
        self.pancyclic_vertices
    }

    /// Bitmask of vertices lying on an `l`-cycle for every
    /// `girth <= l <= circumference`.
    pub fn weakly_pancyclic_vertices(&self) -> u32 {
        self.weakly_pancyclic_vertices
    }

    pub fn pancyclic_edges(&self) -> &[(usize, usize)] {
        &self.pancyclic_edges
    }

    pub fn pancyclic_vertex_count(&self) -> usize {
        self.pancyclic_vertices.count_ones() as usize
    }

    pub fn weakly_pancyclic_vertex_count(&self) -> usize {
        self.weakly_pancyclic_vertices.count_ones() as usize
    }

    pub fn is_graph_pancyclic(&self) -> bool {
        self.graph_pancyclic
    }

    pub fn is_graph_weakly_pancyclic(&self) -> bool {
        self.graph_weakly_pancyclic
    }
}

/// Classifies every vertex and edge of `g`. On acyclic graphs everything
/// is empty and both graph flags are false (see the module convention).
pub fn classify_pancyclicity(g: &Graph) -> PancyclicityReport {
    let spectrum = cycle_spectrum(g);
    let (Some(lo), Some(hi)) = (spectrum.girth(), spectrum.circumference()) else {
        return PancyclicityReport {
            pancyclic_vertices: 0,
            weakly_pancyclic_vertices: 0,
            pancyclic_edges: Vec::new(),
            graph_pancyclic: false,
            graph_weakly_pancyclic: false,
        };
    };
    let n = g.order();
    let wp_interval = LengthSet::interval(lo, hi);
    let pan_interval = LengthSet::interval(3, n);
    let mut wp = 0u32;
    let mut pan = 0u32;
    for v in g.vertices() {
        let s = spectrum.vertex_lengths(v);
        if s.covers(wp_interval) {
            wp |= 1 << v;
        }
        if s.covers(pan_interval) {
            pan |= 1 << v;
        }
    }
    // Both endpoints of a pancyclic edge are necessarily pancyclic
    // vertices, so only those edges need the path DP.
    let mut pancyclic_edges = Vec::new();
    for (u, v) in g.edges() {
        if pan & (1 << u) != 0 && pan & (1 << v) != 0 {
            let el = edge_cycle_lengths(g, u, v).expect("edge exists");
            if el.covers(pan_interval) {
                pancyclic_edges.push((u, v));
            }
        }
    }
    PancyclicityReport {
        pancyclic_vertices: pan,
        weakly_pancyclic_vertices: wp,
        pancyclic_edges,
        graph_pancyclic: spectrum.graph_lengths().covers(pan_interval),
        graph_weakly_pancyclic: spectrum.graph_lengths().covers(wp_interval),
    }
}
