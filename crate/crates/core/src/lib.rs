//! Exact verification tools for Ramsey arrowing, `K_t`-saturation and
//! co-criticality of small graphs.
//!
//! A graph `G` *arrows* `(K_{t_1}, ..., K_{t_k})` when every `k`-coloring of
//! its edges has, for some color `ℓ`, a `K_{t_ℓ}` all of whose edges have color
//! `ℓ`. A coloring without such a clique is *critical*. A non-complete graph
//! is *co-critical* when it does not arrow but every graph obtained by adding
//! one missing edge does.
//!
//! ```
//! use rck_core::{arrows, CliqueVector, Graph};
//!
//! let spec: CliqueVector = "3,3".parse()?;
//! assert!(arrows(&Graph::complete(6)?, &spec)?.arrows);
//! assert!(!arrows(&Graph::complete(5)?, &spec)?.arrows);
//! # Ok::<(), rck_core::Error>(())
//! ```

pub mod canon;
pub mod chromatic;
pub mod clique;
pub mod cocritical;
pub mod coloring;
pub mod constructions;
pub mod corpus;
pub mod engine;
mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod parallel;
pub mod saturation;
pub mod spec;

pub use canon::{canonical_form, CanonicalForm};
pub use coloring::{is_critical, EdgeColoring};
pub use engine::{
    arrows, arrows_with, enumerate_critical_colorings, extremal_critical_coloring, symmetry_breaking_seed,
    ArrowVerdict, Objective, SearchConfig, SearchStats,
};
pub use error::{Error, GraphError, Result};
pub use graph::{DegreeStats, Edge, Graph, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6};
pub use spec::CliqueVector;
