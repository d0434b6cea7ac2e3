//! All graphs on `n` vertices up to isomorphism, for exhaustive scans.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex to every
//! neighbor subset of every graph on `n - 1` vertices and keeping one
//! representative per canonical form. Output is the canonically labeled
//! representatives, sorted by canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm, CANON_MAX_VERTICES};
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::graph6::parse_graph6;

/// Number of unlabeled graphs on `n = 0, 1, ..., 10` vertices.
pub const UNLABELED_COUNTS: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

/// Every graph on `n` vertices up to isomorphism (`1 <= n <= 10`).
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > 10 || n > CANON_MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n, max: 10 });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for order in 2..=n {
        level = extend(&level, order)?;
    }
    Ok(level)
}

fn extend(smaller: &[Graph], order: usize) -> Result<Vec<Graph>, GraphError> {
    let found: Vec<BTreeSet<CanonicalForm>> = smaller
        .par_iter()
        .map(|g| -> Result<BTreeSet<CanonicalForm>, GraphError> {
            let mut out = BTreeSet::new();
            for nbrs in 0u32..(1 << (order - 1)) {
                out.insert(canonical_form(&attach(g, VertexSet::from_mask(nbrs))?)?);
            }
            Ok(out)
        })
        .collect::<Result<_, _>>()?;
    let all: BTreeSet<CanonicalForm> = found.into_iter().flatten().collect();
    all.iter().map(|c| parse_graph6(c.as_str())).collect()
}

// `g` plus one new vertex adjacent to `nbrs`.
fn attach(g: &Graph, nbrs: VertexSet) -> Result<Graph, GraphError> {
    let n = g.n();
    let mut masks: Vec<u32> = g.adjacency().to_vec();
    for v in nbrs {
        masks[v] |= 1 << n;
    }
    masks.push(nbrs.mask());
    Graph::from_adjacency(&masks)
}
