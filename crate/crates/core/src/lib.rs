//! Degree-based topological indices on simple connected graphs.
//!
//! The crate centers on the first Banhatti-Sombor index
//! `BSO(G) = sum over edges uv of sqrt(1/d_u^2 + 1/d_v^2)` and nine
//! companion vertex-degree-based indices, together with:
//!
//! * [`graph`] — an immutable simple-graph type with degree summaries,
//!   complements, and edge-type counts;
//! * [`codec`] — graph6 and edge-list parsing and encoding;
//! * [`indices`] — the ten index evaluators;
//! * [`bounds`] — a registry of twenty-seven inequalities relating BSO to
//!   the companion indices, each machine-checked with numeric equality
//!   detection and structural equality prediction;
//! * [`trees`] — exhaustive enumeration of non-isomorphic free and
//!   chemical trees with extremal search and the associated closed forms;
//! * [`corpus`] — structured families and a seeded random corpus for
//!   verification sweeps.
//!
//! All floating-point evaluation is deterministic: edge sums accumulate in
//! stored-edge order and every generator is seeded.

pub mod bounds;
pub mod codec;
pub mod corpus;
pub mod graph;
pub mod indices;
pub mod trees;

pub use bounds::{
    check_all_bounds, evaluate_bound, hypot_envelope, xi, BoundId, BoundOutcome, BoundRecord,
    BoundReport, EqualityCondition, SkipReason, DEFAULT_TOL,
};
pub use codec::{parse_edge_list, parse_graph6, to_graph6, ParseError};
pub use corpus::{
    complete, complete_bipartite, cycle, path, random_connected, star, verification_corpus,
    CorpusOptions,
};
pub use graph::{
    complement, degree_summary, edge_type_counts, is_semiregular_bipartite, DegreeSummary,
    EdgeTypeCounts, Graph, GraphError,
};
pub use indices::{
    all_indices, bso, bso_from_edge_types, classical_index, sombor, IndexError, IndexKind,
    IndexValue,
};
pub use trees::{
    chemical_bso_upper_bound, enumerate_chemical_trees, enumerate_trees, extremal_search,
    path_bso_closed_form, proof_fn_f, proof_fn_g, proof_fn_h, star_bso_closed_form, ExtremalRecord,
    ExtremalResult, TreeError, TreeFamily, TreeStream, MAX_TREE_ORDER,
};
