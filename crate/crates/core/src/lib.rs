//! Line graphs that are 3-polytopes.
//!
//! A connected graph `G` has a 3-polytopal line graph exactly when it is one
//! of seven small exceptional graphs or arises from a cubic 3-polytope by
//! subdividing some edges once and then attaching at most one pendant vertex
//! to each remaining degree-3 vertex. This crate decides that property from
//! either side, produces certificates, and enumerates the whole class up to
//! a size bound.
//!
//! ```
//! use linepoly::{classifier::classify_root, named};
//!
//! assert!(classify_root(&named::complete(4)).is_accepted());
//! assert!(!classify_root(&named::cycle(5)).is_accepted());
//! ```

pub mod canon;
pub mod catalog;
pub mod checks;
pub mod classifier;
pub mod cli;
pub mod derived;
pub mod generator;
pub mod graph;
pub mod io;
pub mod named;
pub mod planarity;
pub mod transforms;

pub use canon::{are_isomorphic, canonical_code, CanonicalCode};
pub use classifier::{classify_polytope, classify_root, Certificate};
pub use graph::{Graph, GraphError};
