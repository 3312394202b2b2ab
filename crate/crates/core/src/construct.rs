//! Deterministic generators for the named graph families: complete
//! bipartite graphs, cycles, the extremal family `BT(n)` and its
//! one-edge-swap relative `G_n`, plus the size threshold `b(n)`.
//!
//! Vertex numbering is fixed so the graph6 output of each generator is
//! stable and can be golden-tested; the families themselves are only
//! defined up to isomorphism.

use crate::graph::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("order {0} exceeds the maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("bt(n) requires n >= 5, got {0}")]
    BtOrderTooSmall(usize),
    #[error("gn(n) requires n >= 6, got {0}")]
    GnOrderTooSmall(usize),
}

/// The size threshold `b(n) = floor((n-1)^2 / 4) + 2`.
pub fn b_threshold(n: usize) -> usize {
    debug_assert!(n >= 1);
    (n - 1) * (n - 1) / 4 + 2
}

/// `K_{s,t}` with parts `{0..s-1}` and `{s..s+t-1}`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, ConstructError> {
    if s + t > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge(s + t));
    }
    Ok(Graph::from_edges(
        s + t,
        (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))),
    ))
}

/// The `k`-cycle on vertices `0..k-1` in rotation order.
pub fn cycle_graph(k: usize) -> Result<Graph, ConstructError> {
    if k < 3 {
        return Err(ConstructError::CycleTooShort(k));
    }
    if k > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge(k));
    }
    Ok(Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k))))
}

/// `BT(n)`: `K_{floor((n-1)/2), ceil((n-1)/2)}` with one edge identified
/// with an edge of a triangle. Vertices `0..n-2` carry the complete
/// bipartite graph (parts `{0..s-1}` and `{s..n-2}` for
/// `s = floor((n-1)/2)`); vertex `n-1` is the triangle apex, adjacent
/// exactly to the identified edge `{0, s}` — the least vertex of each
/// part. Its size is `b(n)`.
pub fn bt(n: usize) -> Result<Graph, ConstructError> {
    if n < 5 {
        return Err(ConstructError::BtOrderTooSmall(n));
    }
    if n > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge(n));
    }
    let s = (n - 1) / 2;
    let mut edges: Vec<(usize, usize)> = (0..s).flat_map(|u| (s..n - 1).map(move |v| (u, v))).collect();
    let (a, b) = bt_identified_edge(n);
    edges.push((bt_apex(n), a));
    edges.push((bt_apex(n), b));
    Ok(Graph::from_edges(n, edges))
}

/// The endpoints of the identified edge of [`bt`]`(n)`: the least vertex
/// of each part.
pub fn bt_identified_edge(n: usize) -> (usize, usize) {
    (0, (n - 1) / 2)
}

/// The triangle apex of [`bt`]`(n)`: its unique vertex of degree 2.
pub fn bt_apex(n: usize) -> usize {
    n - 1
}

/// `G_n`: take `H = BT(n-1)` with triangle apex `x`, split `H - x` into
/// its parts `V1` (size `floor((n-2)/2)`) and `V2` (size
/// `ceil((n-2)/2)`), and add a new vertex `y` adjacent to `x` and to all
/// of `V2` except the one neighbor of `x` there. The result has order `n`
/// and size `b(n)` again, but its unique triangle has no degree-2 vertex,
/// so it is not isomorphic to `BT(n)`.
pub fn gn(n: usize) -> Result<Graph, ConstructError> {
    if n < 6 {
        return Err(ConstructError::GnOrderTooSmall(n));
    }
    if n > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge(n));
    }
    let h = bt(n - 1)?;
    let x = bt_apex(n - 1);
    let s = (n - 2) / 2; // least vertex of V2; also x's neighbor in V2
    let y = n - 1;
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    edges.push((y, x));
    edges.extend((s + 1..n - 2).map(|v| (y, v)));
    Ok(Graph::from_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;

    #[test]
    fn threshold_values() {
        assert_eq!(b_threshold(5), 6);
        assert_eq!(b_threshold(9), 18);
        assert_eq!(b_threshold(10), 22);
    }

    #[test]
    fn threshold_small_vertex_identity() {
        // b(n) - floor((n-2)^2/4) - 2 = floor((n-1)/2): deleting a small
        // vertex keeps the size above the next threshold down.
        for n in 2..=32 {
            assert_eq!(b_threshold(n) - (n - 2) * (n - 2) / 4 - 2, (n - 1) / 2, "n={n}");
        }
    }

    #[test]
    fn complete_bipartite_shapes() {
        let g = complete_bipartite(3, 4).unwrap();
        assert_eq!((g.order(), g.size()), (7, 12));
        let parts = bipartition(&g).unwrap();
        let (a, b) = parts.part_sizes();
        assert_eq!((a.min(b), a.max(b)), (3, 4));
        assert_eq!(complete_bipartite(1, 1).unwrap().size(), 1);
        let empty5 = complete_bipartite(0, 5).unwrap();
        assert_eq!((empty5.order(), empty5.size()), (5, 0));
        assert_eq!(complete_bipartite(20, 13), Err(ConstructError::OrderTooLarge(33)));
    }

    #[test]
    fn cycle_graph_shapes() {
        assert_eq!(cycle_graph(3).unwrap().size(), 3);
        assert_eq!(cycle_graph(5).unwrap().to_graph6(), "Dhc");
        assert_eq!(cycle_graph(2), Err(ConstructError::CycleTooShort(2)));
    }

    #[test]
    fn bt_sizes_match_threshold() {
        for n in 5..=32 {
            let g = bt(n).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.size(), b_threshold(n), "bt({n})");
            let (a, b) = bt_identified_edge(n);
            assert!(g.has_edge(a, b) && g.has_edge(bt_apex(n), a) && g.has_edge(bt_apex(n), b));
            assert_eq!(g.degree(bt_apex(n)), 2);
        }
        assert_eq!(bt(4), Err(ConstructError::BtOrderTooSmall(4)));
    }

    #[test]
    fn gn_sizes_match_threshold() {
        for n in 6..=32 {
            let g = gn(n).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.size(), b_threshold(n), "gn({n})");
            assert!(bipartition(&g).is_none(), "gn({n}) is nonbipartite");
        }
        assert_eq!(gn(5), Err(ConstructError::GnOrderTooSmall(5)));
    }

    #[test]
    fn bt_is_nonbipartite() {
        assert!(bipartition(&bt(8).unwrap()).is_none());
    }
}
