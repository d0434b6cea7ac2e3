//! Exact chromatic number by branch-and-bound.

use crate::error::GraphError;
use crate::graph::Graph;

/// Largest order accepted by [`Graph::chromatic_number`].
pub const CHROMATIC_MAX_VERTICES: usize = 16;

impl Graph {
    /// Exact `χ(G)`.
    ///
    /// Vertices are colored in max-degree-first order (ties to the lowest
    /// index). The clique number is a lower bound and a greedy coloring in the
    /// same order is the starting upper bound; a branch is cut as soon as it
    /// would use as many colors as the best coloring found.
    pub fn chromatic_number(&self) -> Result<usize, GraphError> {
        let n = self.n();
        if n > CHROMATIC_MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: CHROMATIC_MAX_VERTICES,
            });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));

        let lower = self.clique_number();
        let mut colors = vec![usize::MAX; n];
        let mut best = greedy(self, &order);
        if best == lower {
            return Ok(best);
        }
        let mut search = Search {
            g: self,
            order: &order,
            colors: &mut colors,
            best: &mut best,
            lower,
        };
        search.color(0, 0);
        Ok(best)
    }
}

fn greedy(g: &Graph, order: &[usize]) -> usize {
    let mut colors = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in order {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colors: &'a mut [usize],
    best: &'a mut usize,
    lower: usize,
}

impl Search<'_> {
    // Returns true once the clique lower bound is met and the search can stop.
    fn color(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            *self.best = used;
            return used == self.lower;
        }
        let v = self.order[depth];
        let nbrs = self.g.neighbors(v);
        // A fresh color is only worth trying while it stays below the best.
        let limit = (used + 1).min(*self.best - 1);
        for c in 0..limit {
            if used.max(c + 1) >= *self.best {
                break;
            }
            if nbrs.iter().any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            let done = self.color(depth + 1, used.max(c + 1));
            self.colors[v] = usize::MAX;
            if done {
                return true;
            }
        }
        false
    }
}
