//! `K_t`-freeness, `K_t`-saturation and Hajnal's degree dichotomy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Result of [`is_saturated`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub t: usize,
    pub is_free: bool,
    pub is_saturated: bool,
    /// Least non-edge whose addition still leaves the graph `K_t`-free.
    pub violating_non_edge: Option<Edge>,
    /// `Δ = n - 1` or `δ >= 2(t - 2)`; only meaningful when saturated.
    pub hajnal_holds: bool,
    /// The graph is complete and `K_t`-free, so saturated only vacuously.
    pub vacuous_complete: bool,
}

/// Decides whether `g` is `K_t`-saturated: `K_t`-free, and `g + e` contains
/// a `K_t` for every non-edge `e`.
///
/// A new `K_t` in `g + uv` must use `uv`, so each non-edge is tested by
/// looking for a `K_{t-2}` among the common neighbors of `u` and `v`.
///
/// ```
/// use rck_core::{saturation::is_saturated, Graph};
///
/// let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])?;
/// assert!(is_saturated(&star, 3)?.is_saturated);
/// let empty = is_saturated(&Graph::empty(5)?, 3)?;
/// assert_eq!(empty.violating_non_edge.map(|e| (e.u, e.v)), Some((0, 1)));
/// # Ok::<(), rck_core::Error>(())
/// ```
pub fn is_saturated(g: &Graph, t: usize) -> Result<SaturationReport> {
    if t < 2 {
        return Err(Error::Precondition(format!("clique size {t} must be at least 2")));
    }
    let is_free = !g.has_clique(t, g.vertices());
    let violating_non_edge = if is_free {
        g.non_edges()
            .into_iter()
            .find(|e| !g.has_clique(t - 2, g.neighbors(e.u) & g.neighbors(e.v)))
    } else {
        None
    };
    let is_saturated = is_free && violating_non_edge.is_none();
    Ok(SaturationReport {
        t,
        is_free,
        is_saturated,
        violating_non_edge,
        hajnal_holds: hajnal_dichotomy(g, t),
        vacuous_complete: is_free && g.is_complete(),
    })
}

/// Evaluates `Δ(g) = n - 1 or δ(g) >= 2(t - 2)` on a `K_t`-saturated graph.
/// Hajnal's theorem says this never returns `false`.
pub fn check_hajnal(g: &Graph, t: usize) -> Result<bool> {
    if !is_saturated(g, t)?.is_saturated {
        return Err(Error::Precondition(format!("graph is not K_{t}-saturated")));
    }
    Ok(hajnal_dichotomy(g, t))
}

fn hajnal_dichotomy(g: &Graph, t: usize) -> bool {
    g.max_degree() == g.n() - 1 || g.min_degree() >= 2 * (t - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_is_triangle_saturated() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = is_saturated(&star, 3).unwrap();
        assert!(r.is_free && r.is_saturated && r.hajnal_holds);
        assert_eq!(r.violating_non_edge, None);
        assert!(check_hajnal(&star, 3).unwrap());
    }

    #[test]
    fn pentagon_is_triangle_saturated() {
        // Each chord of C_5 joins two vertices with a common neighbor.
        let r = is_saturated(&Graph::cycle(5).unwrap(), 3).unwrap();
        assert!(r.is_free);
        assert!(r.is_saturated);
    }

    #[test]
    fn empty_graph_reports_first_non_edge() {
        let r = is_saturated(&Graph::empty(5).unwrap(), 3).unwrap();
        assert!(r.is_free && !r.is_saturated);
        assert_eq!(r.violating_non_edge, Some(Edge::new(0, 1)));
        assert!(check_hajnal(&Graph::empty(5).unwrap(), 3).is_err());
    }

    #[test]
    fn complete_graphs_are_flagged() {
        let r = is_saturated(&Graph::complete(3).unwrap(), 4).unwrap();
        assert!(r.is_saturated && r.vacuous_complete);
        let r = is_saturated(&Graph::complete(3).unwrap(), 3).unwrap();
        assert!(!r.is_free && !r.is_saturated && !r.vacuous_complete);
    }

    #[test]
    fn apex_join_is_k4_saturated() {
        let g = Graph::complete(2).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
        assert!(check_hajnal(&g, 4).unwrap());
    }
}
