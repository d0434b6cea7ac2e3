//! Enumeration of all critical colorings in lexicographic order of the color word.

use crate::clique::masks_have_clique;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};
use crate::spec::{CliqueVector, MAX_COLORS};

/// Edge count up to which an unlimited enumeration is accepted.
pub const ENUMERATION_MAX_EDGES: usize = 40;

/// Streams the critical colorings of a graph. Edges are colored in
/// lexicographic order with ascending colors, so colorings appear in
/// lexicographic order of their color words.
pub struct CriticalColorings {
    host: Graph,
    targets: Vec<usize>,
    edges: Vec<Edge>,
    colors: Vec<u8>,
    next_color: Vec<u8>,
    class_adj: [[u32; MAX_VERTICES]; MAX_COLORS],
    pos: usize,
    started: bool,
    done: bool,
}

impl CriticalColorings {
    pub fn new(g: &Graph, spec: &CliqueVector) -> Self {
        let edges = g.edges();
        let m = edges.len();
        CriticalColorings {
            host: *g,
            targets: spec.sizes().to_vec(),
            edges,
            colors: vec![0; m],
            next_color: vec![1; m + 1],
            class_adj: [[0; MAX_VERTICES]; MAX_COLORS],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn admissible(&self, i: usize, color: u8) -> bool {
        let e = self.edges[i];
        let adj = &self.class_adj[color as usize - 1];
        !masks_have_clique(adj, adj[e.u] & adj[e.v], self.targets[color as usize - 1] - 2)
    }

    fn toggle(&mut self, i: usize, color: u8) {
        let e = self.edges[i];
        let adj = &mut self.class_adj[color as usize - 1];
        adj[e.u] ^= 1 << e.v;
        adj[e.v] ^= 1 << e.u;
    }

    fn pop(&mut self) {
        self.pos -= 1;
        let c = self.colors[self.pos];
        self.toggle(self.pos, c);
        self.colors[self.pos] = 0;
    }

    fn advance(&mut self) -> bool {
        let m = self.edges.len();
        let k = self.targets.len() as u8;
        loop {
            if self.pos == m {
                return true;
            }
            let i = self.pos;
            let mut placed = false;
            while self.next_color[i] <= k {
                let c = self.next_color[i];
                self.next_color[i] += 1;
                if self.admissible(i, c) {
                    self.colors[i] = c;
                    self.toggle(i, c);
                    self.pos += 1;
                    self.next_color[self.pos] = 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                if i == 0 {
                    return false;
                }
                self.pop();
            }
        }
    }
}

impl Iterator for CriticalColorings {
    type Item = EdgeColoring;

    fn next(&mut self) -> Option<EdgeColoring> {
        if self.done {
            return None;
        }
        if self.started {
            if self.edges.is_empty() {
                self.done = true;
                return None;
            }
            self.pop();
        }
        self.started = true;
        if !self.advance() {
            self.done = true;
            return None;
        }
        Some(EdgeColoring::new(self.host, self.targets.len(), self.colors.clone()).expect("complete assignment"))
    }
}

/// Collected output of [`enumerate_critical_colorings`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub colorings: Vec<EdgeColoring>,
    /// More colorings exist beyond the limit.
    pub truncated: bool,
}

/// All critical colorings of `g` in lexicographic order, at most `limit` of
/// them. Without a limit the graph may have at most 40 edges.
pub fn enumerate_critical_colorings(
    g: &Graph,
    spec: &CliqueVector,
    limit: Option<usize>,
) -> Result<Enumeration> {
    if limit.is_none() && g.edge_count() > ENUMERATION_MAX_EDGES {
        return Err(Error::Precondition(format!(
            "{} edges exceeds {ENUMERATION_MAX_EDGES}; supply a limit",
            g.edge_count()
        )));
    }
    let mut colorings = Vec::new();
    let mut truncated = false;
    for c in CriticalColorings::new(g, spec) {
        if limit.is_some_and(|l| colorings.len() == l) {
            truncated = true;
            break;
        }
        colorings.push(c);
    }
    Ok(Enumeration { colorings, truncated })
}
