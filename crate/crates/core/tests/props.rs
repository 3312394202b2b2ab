//! Property tests over randomized graphs: codec round-trips and
//! relabeling invariance.

use cyclespec::canon::canonical_form;
use cyclespec::graph::Graph;
use cyclespec::graph6::{from_graph6, to_graph6};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_from_seed(n: usize, seed: u64, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
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

fn perm_from_seed(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0.05f64..0.95).prop_map(|(n, seed, p)| graph_from_seed(n, seed, p))
}

proptest! {
    #[test]
    fn graph6_roundtrip_identity(g in arb_graph(32)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn size_is_relabeling_invariant(g in arb_graph(16), seed in any::<u64>()) {
        let perm = perm_from_seed(g.order(), seed);
        prop_assert_eq!(g.relabeled(&perm).size(), g.size());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let perm = perm_from_seed(g.order(), seed);
        prop_assert_eq!(canonical_form(&g.relabeled(&perm)), canonical_form(&g));
    }

    #[test]
    fn graph6_payload_bytes_are_printable(g in arb_graph(32)) {
        let s = to_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(s.as_bytes()[0] as usize, 63 + g.order());
    }
}
