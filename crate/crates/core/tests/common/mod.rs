//! Shared test oracles: exhaustive DFS enumeration of simple cycles and
//! paths, independent of the subset-DP production path, plus seeded
//! random graph generation.

// Each test binary uses its own slice of this module.
#![allow(dead_code)]

use cyclespec::graph::Graph;
use cyclespec::spectrum::LengthSet;
use rand::Rng;

/// Per-vertex cycle spectra by brute-force enumeration of every simple
/// cycle (rooted at its minimum vertex; both traversal directions are
/// harmless since only length sets are collected).
pub fn oracle_vertex_spectra(g: &Graph) -> Vec<LengthSet> {
    let mut spectra = vec![LengthSet::EMPTY; g.order()];
    for_each_cycle_path(g, &mut |path| {
        for &v in path {
            spectra[v].insert(path.len());
        }
    });
    spectra
}

pub fn oracle_graph_spectrum(g: &Graph) -> LengthSet {
    let mut out = LengthSet::EMPTY;
    for_each_cycle_path(g, &mut |path| out.insert(path.len()));
    out
}

/// Cycle lengths through the edge `{a, b}` by brute force.
pub fn oracle_edge_spectrum(g: &Graph, a: usize, b: usize) -> LengthSet {
    let mut out = LengthSet::EMPTY;
    for_each_cycle_path(g, &mut |path| {
        let k = path.len();
        for i in 0..k {
            let (u, v) = (path[i], path[(i + 1) % k]);
            if (u, v) == (a, b) || (u, v) == (b, a) {
                out.insert(k);
            }
        }
    });
    out
}

/// Lengths of simple `(u, w)`-paths by brute force.
pub fn oracle_path_spectrum(g: &Graph, u: usize, w: usize) -> LengthSet {
    assert_ne!(u, w);
    let mut out = LengthSet::EMPTY;
    let mut path = vec![u];
    let mut visited = 1u32 << u;
    path_dfs(g, w, &mut path, &mut visited, &mut out);
    out
}

fn path_dfs(g: &Graph, goal: usize, path: &mut Vec<usize>, visited: &mut u32, out: &mut LengthSet) {
    let here = *path.last().unwrap();
    if here == goal {
        out.insert(path.len() - 1);
        return;
    }
    for next in g.vertices() {
        if g.has_edge(here, next) && *visited & (1 << next) == 0 {
            path.push(next);
            *visited |= 1 << next;
            path_dfs(g, goal, path, visited, out);
            *visited &= !(1 << next);
            path.pop();
        }
    }
}

/// Visits every simple cycle as a vertex sequence starting at the cycle's
/// minimum vertex (each cycle appears twice, once per direction).
fn for_each_cycle_path(g: &Graph, visit: &mut impl FnMut(&[usize])) {
    for root in g.vertices() {
        let mut path = vec![root];
        let mut visited = 1u32 << root;
        cycle_dfs(g, root, &mut path, &mut visited, visit);
    }
}

fn cycle_dfs(g: &Graph, root: usize, path: &mut Vec<usize>, visited: &mut u32, visit: &mut impl FnMut(&[usize])) {
    let here = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(here, root) {
        visit(path);
    }
    for next in g.vertices() {
        if next > root && g.has_edge(here, next) && *visited & (1 << next) == 0 {
            path.push(next);
            *visited |= 1 << next;
            cycle_dfs(g, root, path, visited, visit);
            *visited &= !(1 << next);
            path.pop();
        }
    }
}

/// Random graph with each edge present independently with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                g = g.with_edge(u, v);
            }
        }
    }
    g
}

/// Random permutation of `0..n`.
pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Visits all permutations of `0..n` (Heap-style swap recursion).
pub fn for_each_perm(n: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            visit(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, visit);
            perm.swap(k, i);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    rec(&mut perm, 0, visit);
}

/// Isomorphism by trying every permutation.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut found = false;
    for_each_perm(g.order(), &mut |p| {
        if !found && g.relabeled(p) == *h {
            found = true;
        }
    });
    found
}

/// The lexicographically least graph6 string over all relabelings: a
/// brute-force canonical form.
pub fn brute_min_graph6(g: &Graph) -> String {
    let mut best: Option<String> = None;
    for_each_perm(g.order(), &mut |p| {
        let s = g.relabeled(p).to_graph6();
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    });
    best.unwrap_or_else(|| g.to_graph6())
}

/// Orbit representative per unordered vertex pair under the full
/// automorphism group, found by trying every permutation.
pub fn brute_pair_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let idx = |u: usize, v: usize| u.min(v) * n + u.max(v);
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != cur {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for_each_perm(n, &mut |p| {
        if g.relabeled(p) == *g {
            for v in 1..n {
                for u in 0..v {
                    let (a, b) = (find(&mut parent, idx(u, v)), find(&mut parent, idx(p[u], p[v])));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    });
    let mut roots = vec![vec![0usize; n]; n];
    for (u, row) in roots.iter_mut().enumerate() {
        for (v, slot) in row.iter_mut().enumerate() {
            if u != v {
                *slot = find(&mut parent, idx(u, v));
            }
        }
    }
    roots
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges)
}
