//! Prime graphs of pseudo T-solvable groups, where T ranges over the simple
//! groups whose order has exactly three prime divisors.
//!
//! The crate decides whether a graph can occur as a prime graph for a given
//! family, builds witness groups for admissible graphs, and checks both
//! directions against element enumeration and exact character tables.

pub mod arith;
pub mod chartab;
pub mod classifier;
pub mod constructor;
pub mod digraph;
pub mod error;
pub mod graph;
pub mod group;
pub mod realize;

pub use chartab::{CharacterTable, Cyclotomic};
pub use classifier::{classify, fixture, Family, Fixture, Verdict};
pub use constructor::{construct, eval_prime_graph, GroupRecipe, PrimeAssignment};
pub use digraph::{Ido, Orientation};
pub use error::{Error, Result};
pub use graph::{Coloring, Graph, Label, Triangle};
pub use group::{PermGroup, Permutation};
pub use realize::{realize, Realization};
