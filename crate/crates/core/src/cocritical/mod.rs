//! Co-criticality, minimality, and structural checks on critical colorings
//! of co-critical graphs.
//!
//! A non-complete graph `G` is co-critical for `(K_{t_1}, ..., K_{t_k})` when
//! `G` does not arrow the vector but `G + e` does for every non-edge `e`.
//!
//! ```
//! use rck_core::cocritical::is_cocritical;
//! use rck_core::constructions::k6_minus;
//!
//! let report = is_cocritical(&k6_minus(), &"3,3".parse()?)?;
//! assert!(report.is_cocritical);
//! assert_eq!((report.delta, report.chi, report.ht_bound), (4, Some(5), Some(14)));
//! # Ok::<(), rck_core::Error>(())
//! ```

mod structure;

use serde::Serialize;

pub use structure::{
    check_chromatic_bound, check_coloring_structure, check_min_degree, max_clique_packing, run_checks, Clause,
    ColoringPolicy, Finding,
};

use crate::chromatic::CHROMATIC_MAX_VERTICES;
use crate::coloring::EdgeColoring;
use crate::constructions::{hanson_toft_edge_count, known_ramsey};
use crate::engine::{arrows_with, SearchConfig, SearchStats};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::parallel::ordered_until_hit;
use crate::spec::CliqueVector;

#[derive(Clone, Debug, Default)]
pub struct CocriticalOptions {
    pub search: SearchConfig,
    /// Ramsey number to use instead of the built-in table.
    pub ramsey: Option<usize>,
}

/// Verdict and invariants of one graph.
#[derive(Clone, Debug, Serialize)]
pub struct CocriticalReport {
    #[serde(skip)]
    pub graph: Graph,
    pub spec: CliqueVector,
    pub is_cocritical: bool,
    /// The graph itself already arrows.
    pub arrows: bool,
    /// Least non-edge `e` such that `G + e` does not arrow.
    pub failing_edge: Option<Edge>,
    /// A critical coloring of the graph, when it has one.
    pub base_witness: Option<EdgeColoring>,
    pub n: usize,
    pub delta: usize,
    pub max_degree: usize,
    /// Chromatic number, computed up to 16 vertices.
    pub chi: Option<usize>,
    pub edge_count: usize,
    /// Ramsey number used for `ht_bound`.
    pub r: Option<usize>,
    /// `(r - 2)(n - r + 2) + C(r - 2, 2)` when `r` is known and `n >= r`.
    pub ht_bound: Option<usize>,
    pub meets_ht: Option<bool>,
    /// Filled in by [`is_minimal_cocritical`] callers.
    pub is_minimal: Option<bool>,
    pub stats: SearchStats,
}

/// Decides co-criticality with the default search configuration.
pub fn is_cocritical(g: &Graph, spec: &CliqueVector) -> Result<CocriticalReport> {
    is_cocritical_with(g, spec, &CocriticalOptions::default())
}

/// Decides co-criticality. The arrowing checks on `G + e` run in parallel;
/// the reported failing edge and statistics cover exactly the non-edges up to
/// and including the least failing one, so they do not depend on scheduling.
pub fn is_cocritical_with(g: &Graph, spec: &CliqueVector, options: &CocriticalOptions) -> Result<CocriticalReport> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let base = arrows_with(g, spec, &options.search)?;
    let mut stats = base.stats;
    let mut failing_edge = None;
    if !base.arrows {
        let non_edges = g.non_edges();
        let checks = ordered_until_hit(&non_edges, |_, &e, _| {
            let verdict = g.add_edge(e).map_err(Error::from).and_then(|h| arrows_with(&h, spec, &options.search));
            let hit = !matches!(verdict, Ok(ref v) if v.arrows);
            (verdict, hit)
        });
        for (e, verdict) in non_edges.iter().zip(checks) {
            let verdict = verdict?;
            stats.absorb(&verdict.stats);
            if !verdict.arrows {
                failing_edge = Some(*e);
            }
        }
    }
    let n = g.n();
    let r = options.ramsey.or_else(|| known_ramsey(spec));
    let ht_bound = r.filter(|&r| r >= 3 && n >= r).map(|r| hanson_toft_edge_count(r, n));
    let chi = if n <= CHROMATIC_MAX_VERTICES {
        Some(g.chromatic_number()?)
    } else {
        None
    };
    Ok(CocriticalReport {
        graph: *g,
        spec: spec.clone(),
        is_cocritical: !base.arrows && failing_edge.is_none(),
        arrows: base.arrows,
        failing_edge,
        base_witness: base.witness,
        n,
        delta: g.min_degree(),
        max_degree: g.max_degree(),
        chi,
        edge_count: g.edge_count(),
        r,
        ht_bound,
        meets_ht: ht_bound.map(|b| g.edge_count() >= b),
        is_minimal: None,
        stats,
    })
}

/// True iff `g` is co-critical and no vertex-deleted subgraph is.
pub fn is_minimal_cocritical(g: &Graph, spec: &CliqueVector) -> Result<bool> {
    is_minimal_cocritical_with(g, spec, &CocriticalOptions::default())
}

pub fn is_minimal_cocritical_with(g: &Graph, spec: &CliqueVector, options: &CocriticalOptions) -> Result<bool> {
    if !is_cocritical_with(g, spec, options)?.is_cocritical {
        return Err(Error::Precondition("graph is not co-critical".into()));
    }
    for v in 0..g.n() {
        let h = g.delete_vertex(v)?;
        if !h.is_complete() && is_cocritical_with(&h, spec, options)?.is_cocritical {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hanson_toft, k6_minus};

    fn spec(s: &str) -> CliqueVector {
        s.parse().unwrap()
    }

    #[test]
    fn k6_minus_is_minimal() {
        let r = is_cocritical(&k6_minus(), &spec("3,3")).unwrap();
        assert!(r.is_cocritical && !r.arrows);
        assert_eq!(r.meets_ht, Some(true));
        assert!(is_minimal_cocritical(&k6_minus(), &spec("3,3")).unwrap());
    }

    #[test]
    fn pentagon_is_not_cocritical() {
        let r = is_cocritical(&Graph::cycle(5).unwrap(), &spec("3,3")).unwrap();
        assert!(!r.is_cocritical && !r.arrows);
        assert_eq!(r.failing_edge, Some(Edge::new(0, 2)));
        assert_eq!(r.ht_bound, None);
    }

    #[test]
    fn larger_hanson_toft_is_not_minimal() {
        let g = hanson_toft(&spec("3,3"), 7).unwrap();
        let r = is_cocritical(&g, &spec("3,3")).unwrap();
        assert!(r.is_cocritical);
        assert_eq!((r.edge_count, r.ht_bound), (18, Some(18)));
        assert!(!is_minimal_cocritical(&g, &spec("3,3")).unwrap());
    }

    #[test]
    fn complete_input_is_rejected() {
        assert!(matches!(
            is_cocritical(&Graph::complete(6).unwrap(), &spec("3,3")),
            Err(Error::CompleteGraph)
        ));
        assert!(is_minimal_cocritical(&Graph::cycle(5).unwrap(), &spec("3,3")).is_err());
    }

    #[test]
    fn arrowing_graph_is_not_cocritical() {
        let g = Graph::complete(7).unwrap().remove_edge(Edge::new(0, 1)).unwrap();
        let r = is_cocritical(&g, &spec("3,3")).unwrap();
        assert!(r.arrows && !r.is_cocritical && r.failing_edge.is_none() && r.base_witness.is_none());
    }
}
