//! Exact clique search over neighbor masks.
//!
//! All routines take raw `u32` masks so the coloring engine can call them on
//! color-class adjacency without building a [`Graph`].

use crate::graph::{Graph, VertexSet};

/// True iff the vertices in `within` contain `t` pairwise-adjacent vertices
/// under the neighbor masks `adj`.
#[inline]
pub fn masks_have_clique(adj: &[u32], within: u32, t: usize) -> bool {
    match t {
        0 => true,
        1 => within != 0,
        2 => {
            let mut rest = within;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                if adj[v] & within != 0 {
                    return true;
                }
                rest &= rest - 1;
            }
            false
        }
        _ => {
            if (within.count_ones() as usize) < t {
                return false;
            }
            let mut rest = within;
            while rest != 0 {
                if (rest.count_ones() as usize) < t {
                    return false;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                // Only later vertices, so every clique is visited from its lowest member.
                if masks_have_clique(adj, adj[v] & rest, t - 1) {
                    return true;
                }
            }
            false
        }
    }
}

/// Size of a maximum clique inside `within`.
pub fn masks_clique_number(adj: &[u32], within: u32) -> usize {
    let mut best = 0;
    expand(adj, within, 0, &mut best);
    best
}

/// A maximum clique inside `within`, ties broken towards the first one found
/// in lowest-index-first order.
pub fn masks_max_clique(adj: &[u32], within: u32) -> VertexSet {
    let mut best = 0;
    let mut best_set = 0u32;
    expand_witness(adj, within, 0, 0, &mut best, &mut best_set);
    VertexSet::from_mask(best_set)
}

// Greedy coloring of the candidates: returns vertices in color-class order and
// the running color count, an upper bound on the clique number of each prefix.
fn color_sort(adj: &[u32], cand: u32, order: &mut Vec<usize>, bounds: &mut Vec<usize>) {
    order.clear();
    bounds.clear();
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
}

fn expand(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    color_sort(adj, cand, &mut order, &mut bounds);
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if size + bounds[i] <= *best {
            return;
        }
        let v = order[i];
        expand(adj, cand & adj[v], size + 1, best);
        cand &= !(1 << v);
    }
}

fn expand_witness(adj: &[u32], cand: u32, current: u32, size: usize, best: &mut usize, best_set: &mut u32) {
    if cand == 0 {
        if size > *best {
            *best = size;
            *best_set = current;
        }
        return;
    }
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    color_sort(adj, cand, &mut order, &mut bounds);
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if size + bounds[i] <= *best {
            return;
        }
        let v = order[i];
        expand_witness(adj, cand & adj[v], current | (1 << v), size + 1, best, best_set);
        cand &= !(1 << v);
    }
}

impl Graph {
    /// Exact clique number `ω(G)`.
    pub fn clique_number(&self) -> usize {
        masks_clique_number(self.adjacency(), self.vertices().mask())
    }

    /// A maximum clique of `G`.
    pub fn max_clique(&self) -> VertexSet {
        masks_max_clique(self.adjacency(), self.vertices().mask())
    }

    /// True iff `G[within]` contains a `K_t`.
    pub fn has_clique(&self, t: usize, within: VertexSet) -> bool {
        masks_have_clique(self.adjacency(), (within & self.vertices()).mask(), t)
    }

    /// True iff `set` is a clique of `G`.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.neighbors(v)))
    }
}
