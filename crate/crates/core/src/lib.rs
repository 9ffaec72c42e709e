//! Dominance order on graphic degree sequences, realization enumeration,
//! and search for counterexamples to dominance monotonicity of
//! forbidden-induced-subgraph sets.

pub mod canon;
pub mod catalog;
pub mod error;
pub mod expr;
pub mod graph;
pub mod graph6;
pub mod graphic;
pub mod induced;
pub mod monotone;
pub mod order;
pub mod partition;

pub use canon::{canonical_code, canonical_form, canonical_labeling, is_isomorphic, CanonicalCode};
pub use error::{Error, Result};
pub use expr::{build_named, describe, parse_graph_list};
pub use graph::{SmallGraph, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use graphic::{
    forcibly_f_free, is_graphic, is_threshold, potential_witness, potentially_f, realizations, realizations_with,
    Limits, RealizationSet,
};
pub use induced::{contains_induced, find_induced, first_induced_member, is_f_free};
pub use order::{build_dominance_order, DominanceOrder};
pub use partition::{
    complement_sequence, down_neighbors, majorizes, parse_partition, partitions_of, strictly_majorizes, up_neighbors,
    Degrees, Partition,
};
