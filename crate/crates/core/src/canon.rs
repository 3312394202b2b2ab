//! Canonical labeling by individualization-refinement: orderings are
//! restricted to those consistent with an iterated degree/neighborhood
//! partition refinement, ties are explored by backtracking, and the
//! lexicographically smallest packed adjacency string over the explored
//! orderings is the canonical form. Automorphisms discovered when two
//! orderings produce the same string are collected; they prune the
//! search and generate the automorphism group, which the enumerator
//! needs for orbit tests.

use crate::graph::{iter_bits, Graph};
use std::collections::VecDeque;
use std::fmt;

/// A vertex permutation, `perm[old] = new`. Entries at or above the
/// graph's order are padding.
pub type Perm = [u8; 32];

fn identity_perm() -> Perm {
    let mut p = [0u8; 32];
    for (i, e) in p.iter_mut().enumerate() {
        *e = i as u8;
    }
    p
}

/// Order-invariant fingerprint; equal forms characterize isomorphism.
/// Layout: one order byte, then the upper triangle of the canonically
/// relabeled graph in column-major bit order, packed big-endian.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Box<[u8]>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in self.bytes.iter() {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Result of a full canonical labeling run.
pub struct CanonicalLabeling {
    pub form: CanonicalForm,
    /// `ordering[position] = original vertex` for the canonical ordering.
    pub ordering: Perm,
    /// Automorphism generators discovered during the search. Together
    /// they generate the automorphism group.
    pub generators: Vec<Perm>,
}

/// The canonical fingerprint of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

/// Canonical form plus the ordering achieving it and the discovered
/// automorphism generators.
pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    if n == 0 {
        return CanonicalLabeling {
            form: CanonicalForm { bytes: vec![0u8].into_boxed_slice() },
            ordering: identity_perm(),
            generators: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        n,
        best_bits: None,
        best_order: identity_perm(),
        generators: Vec::new(),
    };
    let mut base = Vec::new();
    search.explore(vec![g.vertex_mask()], &mut base);
    let bits = search.best_bits.expect("at least one leaf");
    let mut bytes = Vec::with_capacity(1 + bits.len());
    bytes.push(n as u8);
    bytes.extend_from_slice(&bits);
    CanonicalLabeling {
        form: CanonicalForm { bytes: bytes.into_boxed_slice() },
        ordering: search.best_order,
        generators: search.generators,
    }
}

/// True iff `g` and `h` are isomorphic: cheap invariants first, then
/// canonical form equality.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: Option<Vec<u8>>,
    best_order: Perm,
    generators: Vec<Perm>,
}

impl Search<'_> {
    fn explore(&mut self, mut cells: Vec<u32>, base: &mut Vec<u8>) {
        refine(self.g, &mut cells);
        match cells.iter().position(|c| c.count_ones() > 1) {
            None => self.leaf(&cells),
            Some(ti) => {
                let target = cells[ti];
                let mut tried = 0u32;
                for v in iter_bits(target) {
                    if tried != 0 && self.in_explored_orbit(v, tried, base) {
                        continue;
                    }
                    tried |= 1 << v;
                    let mut child = cells.clone();
                    child[ti] = target & !(1 << v);
                    child.insert(ti, 1 << v);
                    base.push(v as u8);
                    self.explore(child, base);
                    base.pop();
                }
            }
        }
    }

    fn leaf(&mut self, cells: &[u32]) {
        let mut order = identity_perm();
        for (pos, cell) in cells.iter().enumerate() {
            order[pos] = cell.trailing_zeros() as u8;
        }
        let bits = packed_triangle(self.g, &order);
        match &self.best_bits {
            None => {
                self.best_bits = Some(bits);
                self.best_order = order;
            }
            Some(best) => match bits.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_bits = Some(bits);
                    self.best_order = order;
                }
                std::cmp::Ordering::Equal => {
                    // Two orderings with identical strings: the map
                    // best_order[i] -> order[i] is an automorphism.
                    let mut gamma = identity_perm();
                    for i in 0..self.n {
                        gamma[self.best_order[i] as usize] = order[i];
                    }
                    if gamma != identity_perm() && !self.generators.contains(&gamma) {
                        self.generators.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// True when some known automorphism fixing the individualized base
    /// pointwise maps `v` into the already-tried set; such a branch would
    /// replay an explored subtree up to symmetry.
    fn in_explored_orbit(&self, v: usize, tried: u32, base: &[u8]) -> bool {
        let mut parent: [u8; 32] = identity_perm();
        fn find(parent: &mut [u8; 32], x: usize) -> usize {
            let mut r = x;
            while parent[r] as usize != r {
                r = parent[r] as usize;
            }
            let mut c = x;
            while parent[c] as usize != c {
                let next = parent[c] as usize;
                parent[c] = r as u8;
                c = next;
            }
            r
        }
        let mut any = false;
        for gen in &self.generators {
            if base.iter().all(|&b| gen[b as usize] == b) {
                any = true;
                for (x, &gx) in gen.iter().enumerate().take(self.n) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx as usize));
                    if a != b {
                        parent[a] = b as u8;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        iter_bits(tried).any(|t| find(&mut parent, t) == rv)
    }
}

/// Packed upper triangle of `g` relabeled by `order` (column-major bit
/// order, big-endian within bytes, zero padding).
fn packed_triangle(g: &Graph, order: &Perm) -> Vec<u8> {
    let n = g.order();
    let nbits = n * (n - 1) / 2;
    let mut out = vec![0u8; nbits.div_ceil(8)];
    let mut bit = 0usize;
    for j in 0..n {
        for i in 0..j {
            if g.has_edge(order[i] as usize, order[j] as usize) {
                out[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    out
}

/// Refines `cells` (an ordered partition, each cell a vertex bitmask) to
/// the coarsest stable partition: repeatedly split every cell by the
/// neighbor count into each splitter cell, ordering subcells by count.
/// The result depends only on the graph structure, not on labels.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let mut queue: VecDeque<u32> = cells.iter().copied().collect();
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() > 1 {
                let mut buckets = [0u32; 33];
                let mut seen = 0u64;
                for v in iter_bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    seen |= 1 << c;
                }
                if seen.count_ones() > 1 {
                    let subcells: Vec<u32> = buckets.iter().copied().filter(|&b| b != 0).collect();
                    let added = subcells.len();
                    for &sc in &subcells {
                        queue.push_back(sc);
                    }
                    cells.splice(i..=i, subcells);
                    i += added;
                    continue;
                }
            }
            i += 1;
        }
    }
}

/// Union-find over unordered vertex pairs under a set of automorphism
/// generators: two pairs share an orbit iff some product of generators
/// maps one onto the other.
pub struct PairOrbits {
    parent: Vec<u16>,
    n: usize,
}

impl PairOrbits {
    pub fn new(n: usize, generators: &[Perm]) -> Self {
        let mut orbits = PairOrbits {
            parent: (0..(n * n) as u16).collect(),
            n,
        };
        for gen in generators {
            for v in 1..n {
                for u in 0..v {
                    let (a, b) = (gen[u] as usize, gen[v] as usize);
                    orbits.union(orbits.index(u, v), orbits.index(a.min(b), a.max(b)));
                }
            }
        }
        orbits
    }

    fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < self.n);
        u * self.n + v
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut c = x;
        while self.parent[c] as usize != c {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u16;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb as u16;
        }
    }

    /// Whether `{a.0, a.1}` and `{b.0, b.1}` lie in the same orbit.
    pub fn same_orbit(&mut self, a: (usize, usize), b: (usize, usize)) -> bool {
        let ia = self.index(a.0.min(a.1), a.0.max(a.1));
        let ib = self.index(b.0.min(b.1), b.0.max(b.1));
        self.find(ia) == self.find(ib)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{bt, cycle_graph, gn};

    #[test]
    fn relabelings_share_a_form() {
        let p3a = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let p3b = Graph::from_edges(3, [(2, 1), (1, 0)]);
        let p3c = Graph::from_edges(3, [(0, 2), (2, 1)]);
        assert_eq!(canonical_form(&p3a), canonical_form(&p3b));
        assert_eq!(canonical_form(&p3a), canonical_form(&p3c));
    }

    #[test]
    fn different_sizes_differ() {
        let c5 = cycle_graph(5).unwrap();
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_ne!(canonical_form(&c5), canonical_form(&p5));
        assert!(!are_isomorphic(&c5, &p5));
    }

    #[test]
    fn path_vs_star() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    #[test]
    fn bt_survives_relabeling() {
        let g = bt(8).unwrap();
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        let h = g.relabeled(&perm);
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn bt9_and_gn9_differ() {
        assert!(!are_isomorphic(&bt(9).unwrap(), &gn(9).unwrap()));
    }

    #[test]
    fn k33_vs_c6() {
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
        let c6 = cycle_graph(6).unwrap();
        assert!(!are_isomorphic(&k33, &c6));
    }

    #[test]
    fn k4_pairs_form_one_orbit() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let lab = canonical_labeling(&k4);
        let mut orbits = PairOrbits::new(4, &lab.generators);
        for v in 1..4 {
            for u in 0..v {
                assert!(orbits.same_orbit((0, 1), (u, v)), "({u},{v})");
            }
        }
    }

    #[test]
    fn zero_and_one_vertex() {
        assert_eq!(canonical_form(&Graph::empty(0)).as_bytes(), &[0]);
        assert_eq!(canonical_form(&Graph::empty(1)).as_bytes(), &[1]);
        assert!(are_isomorphic(&Graph::empty(0), &Graph::empty(0)));
    }
}
