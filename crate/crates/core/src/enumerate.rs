//! Isomorphism-free exhaustive generation of all graphs of a given order,
//! by canonical augmentation over edges within the fixed vertex set.
//!
//! The augmentation tree is rooted at the edgeless graph; the children of
//! a graph are obtained by adding one edge, and a child is kept iff the
//! edge just added lies in the automorphism orbit of the child's
//! canonical edge (the canonical-deletion test). Each isomorphism class
//! with `d` edges then appears exactly once at depth `d`, with no global
//! seen-set. Sweeps that want only dense graphs walk the complement side
//! instead: classes of size `m` on `n` vertices correspond to classes of
//! size `n(n-1)/2 - m` under complementation, so a filter like
//! "size >= b(n)" becomes a shallow walk.

use crate::canon::{canonical_labeling, CanonicalForm, PairOrbits};
use crate::graph::{bipartition, Graph, MAX_ORDER};
use rayon::prelude::*;

/// Which classes a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumFilter {
    order: usize,
    size_min: usize,
    size_max: usize,
    nonbipartite_only: bool,
    connected_only: bool,
}

/// `n*(n-1)/2`, the number of vertex pairs.
pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl EnumFilter {
    /// Every class of the given order, any size. Panics if `order > 32`.
    pub fn new(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds maximum {MAX_ORDER}");
        EnumFilter {
            order,
            size_min: 0,
            size_max: max_edges(order),
            nonbipartite_only: false,
            connected_only: false,
        }
    }

    /// Restricts to sizes in `min..=max`. Panics when the range is empty
    /// or exceeds `n(n-1)/2`; callers validating user input should check
    /// against [`max_edges`] first.
    pub fn size_range(mut self, min: usize, max: usize) -> Self {
        assert!(min <= max && max <= max_edges(self.order), "bad size range {min}:{max}");
        self.size_min = min;
        self.size_max = max;
        self
    }

    pub fn exact_size(self, m: usize) -> Self {
        self.size_range(m, m)
    }

    pub fn nonbipartite_only(mut self) -> Self {
        self.nonbipartite_only = true;
        self
    }

    pub fn connected_only(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size_min(&self) -> usize {
        self.size_min
    }

    pub fn size_max(&self) -> usize {
        self.size_max
    }
}

/// The children of `g` in the augmentation tree: one labeled
/// representative per isomorphism class obtainable by adding one edge,
/// each passing the canonical-deletion test.
fn accepted_children(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut parent_degs = [0usize; MAX_ORDER];
    for (v, slot) in parent_degs.iter_mut().enumerate().take(n) {
        *slot = g.degree(v);
    }
    let mut children: Vec<Graph> = Vec::new();
    let mut forms: Vec<CanonicalForm> = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                continue;
            }
            let child = g.with_edge(u, v);
            if let Some(form) = accept_inverse(&child, (u, v), &parent_degs) {
                // Isomorphic children of one parent come from
                // automorphism-equivalent edges; keep one of each.
                if !forms.contains(&form) {
                    forms.push(form);
                    children.push(child);
                }
            }
        }
    }
    children
}

/// Canonical-deletion test for `child = parent + added`. The canonical
/// edge is, among the edges whose endpoint-degree pair is maximal, the
/// one at the largest canonical triangle position; `added` must lie in
/// its automorphism orbit. Returns the child's canonical form when it
/// passes, so callers can deduplicate siblings for free.
fn accept_inverse(child: &Graph, added: (usize, usize), parent_degs: &[usize; MAX_ORDER]) -> Option<CanonicalForm> {
    let n = child.order();
    let deg = |x: usize| parent_degs[x] + usize::from(x == added.0 || x == added.1);
    let inv = |a: usize, b: usize| {
        let (da, db) = (deg(a), deg(b));
        (da.min(db), da.max(db))
    };
    let added_inv = inv(added.0, added.1);
    let mut max_inv = (0, 0);
    for (a, b) in child.edges() {
        max_inv = max_inv.max(inv(a, b));
    }
    if added_inv < max_inv {
        // Orbits preserve degrees, so the added edge cannot reach the
        // canonical one. Skips the canonical labeling entirely.
        return None;
    }
    let lab = canonical_labeling(child);
    let mut pos = [0usize; MAX_ORDER];
    for p in 0..n {
        pos[lab.ordering[p] as usize] = p;
    }
    let tri_index = |a: usize, b: usize| {
        let (i, j) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        j * (j - 1) / 2 + i
    };
    let mut canonical_edge: Option<(usize, (usize, usize))> = None;
    for (a, b) in child.edges() {
        if inv(a, b) == max_inv {
            let idx = tri_index(a, b);
            if canonical_edge.is_none_or(|(best, _)| idx > best) {
                canonical_edge = Some((idx, (a, b)));
            }
        }
    }
    let (_, target) = canonical_edge.expect("child has an edge");
    let mut orbits = PairOrbits::new(n, &lab.generators);
    orbits.same_orbit(added, target).then_some(lab.form)
}

/// How a filter maps onto the augmentation tree: which side to walk, how
/// deep, and which depths are delivered.
#[derive(Clone, Copy, Debug)]
struct WalkPlan {
    filter: EnumFilter,
    complement_side: bool,
    max_depth: usize,
    emit_lo: usize,
    emit_hi: usize,
}

impl WalkPlan {
    fn new(filter: EnumFilter) -> Self {
        let m = max_edges(filter.order);
        if m - filter.size_min < filter.size_max {
            WalkPlan {
                filter,
                complement_side: true,
                max_depth: m - filter.size_min,
                emit_lo: m - filter.size_max,
                emit_hi: m - filter.size_min,
            }
        } else {
            WalkPlan {
                filter,
                complement_side: false,
                max_depth: filter.size_max,
                emit_lo: filter.size_min,
                emit_hi: filter.size_max,
            }
        }
    }

    /// The class a tree node at `depth` stands for, if it passes the
    /// filter.
    fn deliver(&self, node: &Graph, depth: usize) -> Option<Graph> {
        if depth < self.emit_lo || depth > self.emit_hi {
            return None;
        }
        let g = if self.complement_side { node.complement() } else { *node };
        if self.filter.nonbipartite_only && bipartition(&g).is_some() {
            return None;
        }
        if self.filter.connected_only && !g.is_connected() {
            return None;
        }
        Some(g)
    }
}

/// Sequential walk: calls `visit` exactly once per isomorphism class
/// satisfying `filter`, in a deterministic order. Returns the visit
/// count.
pub fn for_each_class(filter: EnumFilter, mut visit: impl FnMut(&Graph)) -> u64 {
    let plan = WalkPlan::new(filter);
    let mut count = 0u64;
    walk_seq(&plan, &Graph::empty(filter.order), 0, &mut |g| {
        count += 1;
        visit(g);
    });
    count
}

fn walk_seq(plan: &WalkPlan, node: &Graph, depth: usize, visit: &mut impl FnMut(&Graph)) {
    if let Some(g) = plan.deliver(node, depth) {
        visit(&g);
    }
    if depth < plan.max_depth {
        for child in accepted_children(node) {
            walk_seq(plan, &child, depth + 1, visit);
        }
    }
}

/// Number of classes satisfying `filter` (sequential).
pub fn count_classes(filter: EnumFilter) -> u64 {
    for_each_class(filter, |_| {})
}

// Levels close to the root have few classes; splitting below this depth
// gives rayon enough independent subtrees to balance.
const PAR_DEPTH: usize = 10;

/// Parallel map-reduce over every class satisfying `filter`, using the
/// current rayon thread pool. `map` runs once per class; results merge
/// through the associative, commutative `reduce`.
pub fn par_mapreduce<R, M, F>(filter: EnumFilter, map: &M, reduce: &F, identity: R) -> R
where
    R: Send + Sync + Clone,
    M: Fn(&Graph) -> R + Sync,
    F: Fn(R, R) -> R + Sync,
{
    let plan = WalkPlan::new(filter);
    walk_par(&plan, &Graph::empty(filter.order), 0, map, reduce, &identity)
}

fn walk_par<R, M, F>(plan: &WalkPlan, node: &Graph, depth: usize, map: &M, reduce: &F, identity: &R) -> R
where
    R: Send + Sync + Clone,
    M: Fn(&Graph) -> R + Sync,
    F: Fn(R, R) -> R + Sync,
{
    let mut acc = match plan.deliver(node, depth) {
        Some(g) => map(&g),
        None => identity.clone(),
    };
    if depth < plan.max_depth {
        let children = accepted_children(node);
        if depth < PAR_DEPTH && children.len() > 1 {
            let sub = children
                .into_par_iter()
                .map(|c| walk_par(plan, &c, depth + 1, map, reduce, identity))
                .reduce(|| identity.clone(), reduce);
            acc = reduce(acc, sub);
        } else {
            for c in children {
                acc = reduce(acc, walk_par(plan, &c, depth + 1, map, reduce, identity));
            }
        }
    }
    acc
}

/// Class counts per edge count for order `n` (index = size). Satisfies
/// the complement symmetry `counts[m] == counts[max_edges(n) - m]`.
pub fn count_by_size(n: usize) -> Vec<u64> {
    let m = max_edges(n);
    let mut counts = vec![0u64; m + 1];
    for_each_class(EnumFilter::new(n), |g| counts[g.size()] += 1);
    counts
}

/// The canonical representatives at exactly `depth` edges, in DFS order;
/// the roots of the subtrees a stratified sweep shards over.
pub(crate) fn frontier_at_depth(n: usize, depth: usize) -> Vec<Graph> {
    fn rec(g: &Graph, left: usize, out: &mut Vec<Graph>) {
        if left == 0 {
            out.push(*g);
            return;
        }
        for c in accepted_children(g) {
            rec(&c, left - 1, out);
        }
    }
    let mut out = Vec::new();
    rec(&Graph::empty(n), depth, &mut out);
    out
}

/// Sequential map-reduce over the subtree rooted at a frontier node.
pub(crate) fn shard_mapreduce<R, M, F>(
    filter: EnumFilter,
    root: &Graph,
    root_depth: usize,
    map: &M,
    reduce: &F,
    identity: R,
) -> R
where
    R: Clone,
    M: Fn(&Graph) -> R,
    F: Fn(R, R) -> R,
{
    let plan = WalkPlan::new(filter);
    fn rec<R: Clone>(
        plan: &WalkPlan,
        node: &Graph,
        depth: usize,
        map: &impl Fn(&Graph) -> R,
        reduce: &impl Fn(R, R) -> R,
        acc: R,
    ) -> R {
        let mut acc = acc;
        if let Some(g) = plan.deliver(node, depth) {
            acc = reduce(acc, map(&g));
        }
        if depth < plan.max_depth {
            for c in accepted_children(node) {
                acc = rec(plan, &c, depth + 1, map, reduce, acc);
            }
        }
        acc
    }
    rec(&plan, root, root_depth, map, reduce, identity)
}
