//! Constructions and exact verification of chromatic vertex Folkman graphs.
//!
//! A graph `G` arrows `(a_1, ..., a_r)^v` when every `r`-coloring of its
//! vertices contains, for some color `i`, a clique `K_{a_i}` in color `i`.
//! The crate builds the recursive, truncation, composition and apex
//! constructions of such graphs with small chromatic number and certifies
//! their clique number, chromatic number and arrowing by exhaustive search.

pub mod arrowing;
pub mod battery;
pub mod bitset;
pub mod certificate;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod search;

pub use arrowing::{arrows, arrows_with, folkman_membership, ArrowOutcome, ArrowSpec};
pub use bitset::VertexSet;
pub use certificate::{Certificate, CertificateKind, Witness};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use invariants::{chromatic_number, clique_number, Coloring, Partition, SetColoring};
pub use search::SearchLimits;
