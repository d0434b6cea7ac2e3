//! Canonical labeling for graphs on at most 12 vertices.
//!
//! Colour refinement splits vertices by neighbor counts into an equitable
//! ordered partition; the search individualizes one vertex of the first
//! non-singleton cell at a time, refines again, and keeps the leaf labeling
//! whose relabeled adjacency word is largest. Automorphisms discovered at the
//! leaves prune equivalent children and let the search jump back to the point
//! where it left the first leaf's path.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 12;

/// Isomorphism-invariant encoding of a graph: the graph6 line of its
/// canonically relabeled copy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical form of `g`; equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let lab = canonical_labeling(g)?;
    let relabeled = g.relabel(&lab)?;
    Ok(CanonicalForm(to_graph6(&relabeled)))
}

/// The canonical labeling: vertex `v` of `g` receives label `lab[v]`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: CANON_MAX_VERTICES,
        });
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        first_path: Vec::new(),
        automorphisms: Vec::new(),
    };
    let root = refine(g, vec![(0..n).collect()]);
    search.descend(root, &mut Vec::new());
    Ok(search.best.expect("search reaches at least one leaf").1)
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        let mut next: Cells = Vec::with_capacity(g.n());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let adj = g.neighbors(v).mask();
                    (masks.iter().map(|m| (adj & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn individualize(cells: &Cells, at: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..at]);
    out.push(vec![v]);
    out.push(cells[at].iter().copied().filter(|&w| w != v).collect());
    out.extend_from_slice(&cells[at + 1..]);
    out
}

// Upper-triangle adjacency of the relabeled graph, most significant bit first.
fn leaf_key(g: &Graph, lab: &[usize]) -> u128 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &l) in lab.iter().enumerate() {
        inv[l] = v;
    }
    let mut key = 0u128;
    for j in 1..n {
        for i in 0..j {
            key = (key << 1) | g.has_edge(inv[i], inv[j]) as u128;
        }
    }
    key
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(u128, Vec<usize>)>,
    best: Option<(u128, Vec<usize>)>,
    first_path: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    // Returns `Some(level)` when an automorphism to the first leaf was found;
    // every node deeper than `level` then returns immediately.
    fn descend(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if explored.iter().any(|&w| self.same_orbit(path, v, w)) {
                continue;
            }
            let child = refine(self.g, individualize(&cells, target, v));
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let mut lab = vec![0; self.g.n()];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let key = leaf_key(self.g, &lab);
        let Some((first_key, first_lab)) = &self.first else {
            self.first = Some((key, lab.clone()));
            self.best = Some((key, lab));
            self.first_path = path.to_vec();
            return None;
        };
        if key == *first_key {
            let aut = compose_inverse(first_lab, &lab);
            self.automorphisms.push(aut);
            let common = path
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let (best_key, best_lab) = self.best.as_ref().unwrap();
        if key == *best_key {
            let aut = compose_inverse(best_lab, &lab);
            self.automorphisms.push(aut);
        } else if key > *best_key {
            self.best = Some((key, lab));
        }
        None
    }

    // Whether v and w share an orbit of the group generated by the known
    // automorphisms that fix every vertex of `path`.
    fn same_orbit(&self, path: &[usize], v: usize, w: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for aut in &self.automorphisms {
            if path.iter().any(|&p| aut[p] != p) {
                continue;
            }
            for (x, &y) in aut.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        find(&mut parent, v) == find(&mut parent, w)
    }
}

// Given labelings with identical relabeled graphs, returns the automorphism
// `v -> a^{-1}(b(v))`.
fn compose_inverse(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (v, &l) in a.iter().enumerate() {
        inv[l] = v;
    }
    b.iter().map(|&l| inv[l]).collect()
}
