//! Exact graph invariants: clique number, chromatic number and partitions,
//! and set-chromatic numbers.

pub mod chromatic;
pub mod clique;
pub mod set_coloring;

pub use chromatic::{
    chromatic_number, chromatic_number_with, chromatic_partition, greedy_coloring, k_coloring, ChromaticResult,
    Coloring, Partition,
};
pub use clique::{clique_number, cliques_of_size, find_clique_in, has_clique_in, max_clique_in};
pub use set_coloring::{
    lemma5_set_coloring, set_chromatic_number, set_chromatic_number_with, validate_set_coloring, SetColoring,
};
