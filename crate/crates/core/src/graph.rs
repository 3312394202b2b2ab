//! Immutable simple graphs on at most 32 vertices, stored as bit-vector
//! adjacency rows so neighborhood operations are single-word.

use std::fmt;

/// Largest supported order. One adjacency row fits a `u32`.
pub const MAX_ORDER: usize = 32;

/// An immutable simple graph of order at most [`MAX_ORDER`].
///
/// `adj[i]` holds the neighborhood of vertex `i` as a bitmask. The
/// representation is always symmetric and irreflexive; every constructor
/// maintains that, and "edits" return new values, so a `Graph` can be
/// shared freely between threads.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 32`; callers converting untrusted input should bound
    /// the order first.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds maximum {MAX_ORDER}");
        Graph {
            n: n as u8,
            adj: [0; MAX_ORDER],
        }
    }

    /// Builds a graph from an edge list. Panics on out-of-range endpoints
    /// or self-loops.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for order {n}");
            assert!(u != v, "self-loop at {u}");
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let total: u32 = self.adj[..self.order()].iter().map(|r| r.count_ones()).sum();
        (total / 2) as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order() && v < self.order());
        self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u32 {
        debug_assert!(v < self.order());
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// All vertices as a bitmask.
    pub fn vertex_mask(&self) -> u32 {
        mask_below(self.order())
    }

    /// Edges as `(u, v)` pairs with `u < v`, in column-major upper-triangle
    /// order (the graph6 bit order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    /// A copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        assert!(u < self.order() && v < self.order() && u != v);
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    /// A copy with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        assert!(u < self.order() && v < self.order());
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let full = self.vertex_mask();
        let mut g = Graph::empty(self.order());
        for v in self.vertices() {
            g.adj[v] = full & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Relabels vertices: `perm[old]` is the new label of vertex `old`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Induced subgraph on the vertices of `mask`, relabeled in ascending
    /// order of their original indices.
    pub fn induced(&self, mask: u32) -> Self {
        let mask = mask & self.vertex_mask();
        let kept: Vec<usize> = iter_bits(mask).collect();
        let mut g = Graph::empty(kept.len());
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// True when every vertex is reachable from every other. The order-0
    /// and order-1 graphs count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0u32;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Bitmask with bits `0..n` set.
pub fn mask_below(n: usize) -> u32 {
    debug_assert!(n <= 32);
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bit positions of `mask` in ascending order.
pub fn iter_bits(mask: u32) -> BitIter {
    BitIter(mask)
}

pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A proper 2-coloring of a bipartite graph.
///
/// `part1` holds, for every connected component, the color class of the
/// component's least-indexed vertex, so the split is deterministic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    part1: u32,
    part2: u32,
    order: u8,
}

impl Bipartition {
    pub fn part1(&self) -> u32 {
        self.part1
    }

    pub fn part2(&self) -> u32 {
        self.part2
    }

    pub fn part_sizes(&self) -> (usize, usize) {
        (self.part1.count_ones() as usize, self.part2.count_ones() as usize)
    }

    /// True iff the parts have sizes `floor(n/2)` and `ceil(n/2)`.
    pub fn is_balanced(&self) -> bool {
        let (a, b) = self.part_sizes();
        let n = self.order as usize;
        a.min(b) == n / 2 && a.max(b) == n.div_ceil(2)
    }
}

/// Returns a 2-coloring of `g`, or `None` iff `g` contains an odd cycle.
///
/// Colors are assigned by BFS from the least unvisited vertex of each
/// component, with that vertex placed in part 1.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut color1 = 0u32;
    let mut color2 = 0u32;
    for start in 0..n {
        if (color1 | color2) & (1 << start) != 0 {
            continue;
        }
        color1 |= 1 << start;
        let mut frontier = 1u32 << start;
        let mut frontier_in_one = true;
        while frontier != 0 {
            let mut nbrs = 0u32;
            for v in iter_bits(frontier) {
                nbrs |= g.neighbors(v);
            }
            let same = if frontier_in_one { color1 } else { color2 };
            if nbrs & same != 0 {
                // A neighbor carries the frontier's own color: odd cycle.
                return None;
            }
            let fresh = nbrs & !(color1 | color2);
            if frontier_in_one {
                color2 |= nbrs;
            } else {
                color1 |= nbrs;
            }
            frontier = fresh;
            frontier_in_one = !frontier_in_one;
        }
    }
    Some(Bipartition {
        part1: color1,
        part2: color2,
        order: n as u8,
    })
}

/// Per-vertex small/big classification from the degree threshold
/// `floor((n-1)/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexClasses {
    small: u32,
    threshold: u8,
    min_degree: u8,
    order: u8,
}

impl VertexClasses {
    /// Bitmask of small vertices.
    pub fn small_mask(&self) -> u32 {
        self.small
    }

    pub fn is_small(&self, v: usize) -> bool {
        debug_assert!(v < self.order as usize);
        self.small & (1 << v) != 0
    }

    /// The cutoff `floor((n-1)/2)`: small means degree at most this.
    pub fn threshold(&self) -> usize {
        self.threshold as usize
    }

    /// Minimum degree of the graph.
    pub fn min_degree(&self) -> usize {
        self.min_degree as usize
    }
}

/// Classifies each vertex as small (degree at most `floor((n-1)/2)`) or
/// big, and records the minimum degree. Panics on the order-0 graph.
pub fn classify_vertices(g: &Graph) -> VertexClasses {
    let n = g.order();
    assert!(n >= 1, "degree classification needs at least one vertex");
    let threshold = (n - 1) / 2;
    let mut small = 0u32;
    let mut min_degree = n;
    for v in g.vertices() {
        let d = g.degree(v);
        min_degree = min_degree.min(d);
        if d <= threshold {
            small |= 1 << v;
        }
    }
    VertexClasses {
        small,
        threshold: threshold as u8,
        min_degree: min_degree as u8,
        order: n as u8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_basics() {
        let g = Graph::empty(0);
        assert_eq!(g.order(), 0);
        assert_eq!(g.size(), 0);
        assert!(g.is_connected());
        let g = Graph::empty(5);
        assert_eq!(g.size(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn edges_roundtrip_and_complement() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.size(), 3);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let c = g.complement();
        assert_eq!(c.size(), 3);
        assert!(c.has_edge(0, 2) && c.has_edge(0, 3) && c.has_edge(1, 3));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn with_and_without_edge_are_nondestructive() {
        let g = Graph::empty(3);
        let h = g.with_edge(0, 2);
        assert_eq!(g.size(), 0);
        assert_eq!(h.size(), 1);
        assert_eq!(h.without_edge(0, 2), g);
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let c6 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let b = bipartition(&c6).expect("C6 is bipartite");
        assert_eq!(b.part1(), 0b010101, "even positions, BFS from 0");
        assert_eq!(b.part2(), 0b101010);
        assert!(b.is_balanced());
    }

    #[test]
    fn bipartition_rejects_odd_cycle() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(bipartition(&c5).is_none());
    }

    #[test]
    fn bipartition_component_rule() {
        // Two components: an edge {0,3} and an edge {1,2}. Least vertex of
        // each component goes in part 1.
        let g = Graph::from_edges(4, [(0, 3), (1, 2)]);
        let b = bipartition(&g).unwrap();
        assert_eq!(b.part1(), 0b0011);
        assert_eq!(b.part2(), 0b1100);
    }

    #[test]
    fn small_vertex_threshold() {
        // n = 9: threshold floor(8/2) = 4.
        let mut edges = vec![];
        for v in 1..=4 {
            edges.push((0, v)); // deg(0) = 4
        }
        for v in 1..=5 {
            if v != 5 {
                edges.push((5, v)); // deg(5) = 4 so far
            }
        }
        edges.push((5, 6)); // deg(5) = 5
        let g = Graph::from_edges(9, edges);
        let cls = classify_vertices(&g);
        assert_eq!(cls.threshold(), 4);
        assert!(cls.is_small(0), "degree 4 is small at n=9");
        assert!(!cls.is_small(5), "degree 5 is big at n=9");
        assert_eq!(cls.min_degree(), 0);
    }

    #[test]
    fn k4_all_big() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let cls = classify_vertices(&k4);
        assert_eq!(cls.small_mask(), 0);
        assert_eq!(cls.min_degree(), 3);
    }

    #[test]
    fn small_threshold_is_k_for_orders_2k1_and_2k2() {
        for k in 1..=15 {
            assert_eq!(classify_vertices(&Graph::empty(2 * k + 1)).threshold(), k);
            assert_eq!(classify_vertices(&Graph::empty(2 * k + 2)).threshold(), k);
        }
    }
}
