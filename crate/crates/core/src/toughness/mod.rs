//! Exact toughness, minimal toughness, and the edge-level conditions that
//! decide whether a graph is minimally tough.

mod condition;
mod exact;
mod flow;

pub use condition::{
    check_condition2, check_condition2_restricted, check_non_minimality_characterization, check_sufficient_condition,
    find_edge_witness_set, CharacterizationVerdict, Condition2Check, EdgeWitnessSet,
};
pub use exact::{
    is_minimally_tough, is_t_tough, toughness, toughness_with_witness, MinimalityVerdict, ToughnessWitness,
};
pub use flow::{connectivity, disjoint_path_count};
