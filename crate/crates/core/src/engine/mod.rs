//! The exact arrowing decider.
//!
//! `G → (K_{t_1}, ..., K_{t_k})` holds iff `G` has no critical coloring. The
//! decider searches for one edge by edge: it always branches on the most
//! constrained uncolored edge, tries colors in ascending order and abandons a
//! branch as soon as some uncolored edge has no admissible color left. A
//! negative verdict always carries the coloring it found, re-verified with
//! [`is_critical`].
//!
//! Large instances are split into independent subtrees a few levels below the
//! root and searched on the rayon pool. The verdict, witness and statistics
//! depend only on the input and the [`SearchConfig`], never on the number of
//! threads.

mod enumerate;
mod extremal;
mod search;
mod seed;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_critical_colorings, CriticalColorings, Enumeration};
pub use extremal::{extremal_critical_coloring, Objective};
pub use seed::{symmetry_breaking_seed, SeedAssignment, SymmetrySeed};

use crate::coloring::{is_critical, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parallel::ordered_until_hit;
use crate::spec::CliqueVector;
use search::{expand_frontier, Dfs, Outcome, SearchState};

/// Edge count above which the search is split for parallel workers.
pub const SPLIT_EDGE_THRESHOLD: usize = 20;
/// Default number of decision levels expanded before splitting.
pub const DEFAULT_SPLIT_DEPTH: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Abort with [`Error::Indeterminate`] after this many search nodes.
    pub node_limit: Option<u64>,
    /// Decision levels expanded into independent subproblems. `None` uses
    /// [`DEFAULT_SPLIT_DEPTH`] when the graph has more than
    /// [`SPLIT_EDGE_THRESHOLD`] edges and no split otherwise.
    pub split_depth: Option<usize>,
    /// Apply [`symmetry_breaking_seed`] at the root.
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_limit: None,
            split_depth: None,
            symmetry_breaking: true,
        }
    }
}

/// Deterministic search counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchStats {
    /// Color assignments made.
    pub nodes: u64,
    /// Deepest partial coloring reached (number of colored edges).
    pub max_depth: usize,
    /// Independent subtrees the search was split into (1 when unsplit).
    pub subproblems: usize,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.subproblems += other.subproblems;
    }
}

/// Result of [`arrows`].
#[derive(Clone, Debug)]
pub struct ArrowVerdict {
    pub arrows: bool,
    /// A critical coloring; present iff `arrows` is false.
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
    pub elapsed: Duration,
}

/// Decides `g → (K_{t_1}, ..., K_{t_k})` with the default configuration.
pub fn arrows(g: &Graph, spec: &CliqueVector) -> Result<ArrowVerdict> {
    arrows_with(g, spec, &SearchConfig::default())
}

/// Decides `g → (K_{t_1}, ..., K_{t_k})`.
pub fn arrows_with(g: &Graph, spec: &CliqueVector, config: &SearchConfig) -> Result<ArrowVerdict> {
    let started = Instant::now();
    let edges = g.edges();
    let mut state = SearchState::new(&edges, spec);

    let restriction = if config.symmetry_breaking {
        symmetry_breaking_seed(g, spec).root_restriction(&edges)
    } else {
        None
    };
    let levels = config
        .split_depth
        .unwrap_or(if edges.len() > SPLIT_EDGE_THRESHOLD { DEFAULT_SPLIT_DEPTH } else { 0 });

    let (outcome, stats) = if levels == 0 {
        let mut dfs = Dfs {
            state: &mut state,
            nodes: 0,
            max_depth: 0,
            node_limit: config.node_limit,
            root_restriction: restriction,
            cancel: None,
        };
        let out = dfs.run(0);
        let stats = SearchStats {
            nodes: dfs.nodes,
            max_depth: dfs.max_depth,
            subproblems: 1,
        };
        (out, stats)
    } else {
        split_search(&mut state, levels, restriction, config.node_limit)
    };

    let witness = match outcome {
        Outcome::Found(colors) => Some(EdgeColoring::new(*g, spec.k(), colors)?),
        Outcome::Exhausted => None,
        Outcome::NodeLimit => return Err(Error::Indeterminate(stats)),
        Outcome::Cancelled => unreachable!("top-level search is never cancelled"),
    };
    if let Some(w) = &witness {
        if !is_critical(g, w, spec)? {
            panic!("search produced a non-critical witness {w:?}");
        }
    }
    Ok(ArrowVerdict {
        arrows: witness.is_none(),
        witness,
        stats,
        elapsed: started.elapsed(),
    })
}

fn split_search(
    state: &mut SearchState<'_>,
    levels: usize,
    restriction: Option<(usize, search::ColorMask)>,
    node_limit: Option<u64>,
) -> (Outcome, SearchStats) {
    let frontier = expand_frontier(state, levels, restriction);
    let mut stats = SearchStats {
        nodes: frontier.nodes,
        max_depth: frontier.paths.iter().map(Vec::len).max().unwrap_or(0),
        subproblems: frontier.paths.len(),
    };
    let budget = node_limit.map(|l| l.saturating_sub(frontier.nodes));
    let base: &SearchState<'_> = state;

    let results = ordered_until_hit(&frontier.paths, |i, path, stop| {
        let mut sub = base.clone();
        for &(index, color) in path {
            sub.assign(index, color);
        }
        let mut dfs = Dfs {
            state: &mut sub,
            nodes: 0,
            max_depth: 0,
            node_limit: budget,
            root_restriction: None,
            cancel: Some((stop, i)),
        };
        let out = dfs.run(path.len());
        let hit = matches!(out, Outcome::Found(_) | Outcome::NodeLimit);
        ((out, dfs.nodes, dfs.max_depth), hit)
    });

    for (out, nodes, depth) in results {
        stats.nodes += nodes;
        stats.max_depth = stats.max_depth.max(depth);
        if let Some(limit) = node_limit {
            if stats.nodes > limit || matches!(out, Outcome::NodeLimit) {
                return (Outcome::NodeLimit, stats);
            }
        }
        match out {
            Outcome::Exhausted => {}
            Outcome::Found(_) => return (out, stats),
            Outcome::NodeLimit | Outcome::Cancelled => {
                unreachable!("cancelled or limited subtrees end the evaluated prefix")
            }
        }
    }
    (Outcome::Exhausted, stats)
}
