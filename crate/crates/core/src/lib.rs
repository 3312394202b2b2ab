//! Exact cycle-spectrum and pancyclicity engine for small graphs.
//!
//! The crate computes, for any simple graph on at most 32 vertices, the
//! exact set of cycle lengths through each vertex and edge; classifies
//! pancyclic and weakly pancyclic vertices, edges and graphs; constructs
//! the extremal families `BT(n)` and `G_n`; enumerates isomorphism
//! classes by canonical augmentation; and runs exhaustive verification
//! sweeps over all graphs of a given order at desk scale (orders up to
//! about 10 for full sweeps; the data types allow 32).

pub mod canon;
pub mod construct;
pub mod cycles;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectrum;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use construct::{b_threshold, bt, complete_bipartite, cycle_graph, gn, ConstructError};
pub use enumerate::{count_by_size, count_classes, for_each_class, max_edges, par_mapreduce, EnumFilter};
pub use graph::{bipartition, classify_vertices, Bipartition, Graph, VertexClasses, MAX_ORDER};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use harness::{
    compute_f, scan_conjecture1, verify_lemma5, verify_lemma7, verify_theorem1, verify_theorem2,
    verify_theorem3, verify_theorem4, ExtremalRecord, HarnessError, SweepOptions, VerificationReport,
};
pub use spectrum::{
    classify_pancyclicity, cycle_spectrum, edge_cycle_lengths, path_length_spectrum,
    vertex_cycle_lengths, CycleSpectrum, LengthSet, PancyclicityReport,
};
