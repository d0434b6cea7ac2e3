//! Root restrictions that remove symmetric copies of the search tree.

use serde::Serialize;

use super::search::ColorMask;
use crate::graph::{Edge, Graph};
use crate::spec::CliqueVector;

/// A forced initial decision: `edge` must take one of `colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedAssignment {
    pub edge: Edge,
    pub colors: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrySeed {
    pub assignments: Vec<SeedAssignment>,
    /// Some pair of colors has equal targets, so they may be swapped.
    pub color_swap: bool,
    /// The graph was declared vertex-transitive (complete), so the first
    /// decided edge is fixed as `(0, 1)`.
    pub vertex_fixed: bool,
}

impl SymmetrySeed {
    pub(crate) fn root_restriction(&self, edges: &[Edge]) -> Option<(usize, ColorMask)> {
        let a = self.assignments.first()?;
        let index = edges.binary_search(&a.edge).ok()?;
        let mask = a.colors.iter().fold(0, |m, &c| m | 1 << (c - 1));
        Some((index, mask))
    }
}

/// Restrictions that keep the search sound: a critical coloring exists
/// without them iff one exists with them.
///
/// When colors `ℓ < m` share a target, exchanging them maps critical
/// colorings to critical colorings, so the first edge may skip every color
/// that has an equal-target color below it. Complete graphs are
/// edge-transitive, which lets the first edge be `(0, 1)`.
pub fn symmetry_breaking_seed(g: &Graph, spec: &CliqueVector) -> SymmetrySeed {
    let sizes = spec.sizes();
    let representative = |c: usize| !sizes[..c].contains(&sizes[c]);
    let color_swap = (0..sizes.len()).any(|c| !representative(c));
    let vertex_fixed = g.n() >= 2 && g.is_complete();
    let mut assignments = Vec::new();
    if let Some(&first) = g.edges().first() {
        if color_swap || vertex_fixed {
            let colors = (0..sizes.len())
                .filter(|&c| representative(c))
                .map(|c| c as u8 + 1)
                .collect();
            assignments.push(SeedAssignment { edge: first, colors });
        }
    }
    SymmetrySeed {
        assignments,
        color_swap,
        vertex_fixed,
    }
}
