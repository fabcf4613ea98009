//! Minimality certificates, realizability, move-space search and random
//! diagrams.

pub mod minimality;
pub mod random;
pub mod realize;
pub mod search;
pub mod witnesses;

pub use minimality::{lower_bound_knot, lower_bound_link2, MinimalityCertificate, Witness};
pub use random::{random_diagram, random_moves};
pub use realize::{intersection_graph, realizable, REALIZABLE_MAX_VERTICES};
pub use search::{bfs_equivalent, bfs_explore, SearchBudget, SearchReport};
