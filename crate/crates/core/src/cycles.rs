//! Explicit cycle listing by depth-first search. The spectrum module only
//! answers which lengths occur; this one hands back the cycles themselves,
//! which the harness needs when a claim quantifies over all longest cycles.

use crate::graph::{iter_bits, Graph};

/// Calls `visit` exactly once per simple cycle of `g` (one rotation, one
/// direction), passing the cycle's vertex set as a bitmask. Cycles are
/// rooted at their minimum vertex; the tie between the two traversal
/// directions is broken by requiring the root's successor to be smaller
/// than its predecessor.
pub fn for_each_cycle(g: &Graph, mut visit: impl FnMut(u32)) {
    for root in g.vertices() {
        let above = !0u32 << root;
        for second in iter_bits(g.neighbors(root) & above) {
            dfs(g, root, second, second, 1u32 << root | 1u32 << second, &mut visit);
        }
    }
}

fn dfs(g: &Graph, root: usize, second: usize, current: usize, members: u32, visit: &mut impl FnMut(u32)) {
    if members.count_ones() >= 3 && g.has_edge(current, root) && second < current {
        visit(members);
    }
    let above_root = !0u32 << root << 1;
    for next in iter_bits(g.neighbors(current) & above_root & !members) {
        dfs(g, root, second, next, members | 1 << next, visit);
    }
}

/// The circumference together with the vertex sets of all longest cycles,
/// deduplicated (two longest cycles on the same vertices count once).
/// `None` when `g` is acyclic.
pub fn longest_cycle_vertex_sets(g: &Graph) -> Option<(usize, Vec<u32>)> {
    let mut best_len = 0usize;
    let mut sets: Vec<u32> = Vec::new();
    for_each_cycle(g, |members| {
        let len = members.count_ones() as usize;
        if len > best_len {
            best_len = len;
            sets.clear();
        }
        if len == best_len {
            sets.push(members);
        }
    });
    if best_len == 0 {
        return None;
    }
    sets.sort_unstable();
    sets.dedup();
    Some((best_len, sets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_cycles_once() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let mut count = 0;
        for_each_cycle(&k4, |_| count += 1);
        // K4 has 4 triangles and 3 four-cycles.
        assert_eq!(count, 7);
    }

    #[test]
    fn longest_cycles_of_two_triangles() {
        // Two triangles sharing vertex 2.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let (len, sets) = longest_cycle_vertex_sets(&g).unwrap();
        assert_eq!(len, 3);
        assert_eq!(sets, vec![0b00111, 0b11100]);
    }

    #[test]
    fn acyclic_has_no_longest_cycle() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(longest_cycle_vertex_sets(&path), None);
    }
}
