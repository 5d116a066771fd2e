//! Constructions that raise the chromatic number while keeping the graph
//! triangle-free: Mycielski's and Droogendijk's, plus the drivers that
//! search for qualifying inputs.

mod droogendijk;
mod mycielski;
mod search;

pub use droogendijk::{
    droogendijk_condition_holds, droogendijk_construct, droogendijk_parts, DroogendijkError, DroogendijkParts,
};
pub use mycielski::mycielski;
pub use search::{
    explore_edge_perturbations, search_qualifying_sets, CandidateVerdict, IndependentSets, Perturbations,
    QualifyingCandidate, QualifyingSearchOptions, QualifyingSets, SearchItem,
};
