//! Edge colorings `τ: E(G) -> [k]` and their two-line text form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique::masks_have_clique;
use crate::error::Error;
use crate::graph::{Edge, Graph, VertexSet, MAX_VERTICES};
use crate::graph6::{parse_graph6, to_graph6};
use crate::spec::{CliqueVector, MAX_COLORS};

/// A `k`-edge coloring of a host graph. Colors are numbered `1..=k` and stored
/// in the host's lexicographic edge order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    host: Graph,
    k: usize,
    edges: Vec<Edge>,
    colors: Vec<u8>,
}

impl EdgeColoring {
    /// Builds a coloring from one color per edge, in lexicographic edge order.
    pub fn new(host: Graph, k: usize, colors: Vec<u8>) -> Result<Self, Error> {
        if k == 0 || k > MAX_COLORS {
            return Err(Error::Coloring(format!("{k} colors outside 1..={MAX_COLORS}")));
        }
        let edges = host.edges();
        if colors.len() != edges.len() {
            return Err(Error::Coloring(format!(
                "{} colors given for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c as usize > k) {
            return Err(Error::Coloring(format!("color {c} outside 1..={k}")));
        }
        Ok(EdgeColoring { host, k, edges, colors })
    }

    /// Builds a coloring from `(edge, color)` pairs covering every edge once.
    pub fn from_assignments(host: Graph, k: usize, pairs: &[(Edge, u8)]) -> Result<Self, Error> {
        let edges = host.edges();
        let mut colors = vec![0u8; edges.len()];
        for &(e, c) in pairs {
            let i = edges
                .binary_search(&e)
                .map_err(|_| Error::Coloring(format!("{e} is not an edge of the host")))?;
            if colors[i] != 0 {
                return Err(Error::Coloring(format!("{e} colored twice")));
            }
            colors[i] = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Coloring(format!("{} left uncolored", edges[i])));
        }
        EdgeColoring::new(host, k, colors)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Color of `e`, if `e` is an edge of the host.
    pub fn color_of(&self, e: Edge) -> Option<u8> {
        self.edges.binary_search(&e).ok().map(|i| self.colors[i])
    }

    /// `|E_ℓ|`.
    pub fn class_size(&self, color: usize) -> usize {
        self.colors.iter().filter(|&&c| c as usize == color).count()
    }

    /// The spanning subgraph `G_ℓ`: all host vertices, edges of color `ℓ`.
    pub fn class_graph(&self, color: usize) -> Graph {
        Graph::from_adjacency(&self.class_masks(color)[..self.host.n()]).expect("subgraph of a valid graph")
    }

    /// `N_ℓ(v)`.
    pub fn class_neighbors(&self, color: usize, v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (e, &c) in self.edges.iter().zip(&self.colors) {
            if c as usize == color {
                if e.u == v {
                    s.insert(e.v);
                } else if e.v == v {
                    s.insert(e.u);
                }
            }
        }
        s
    }

    pub(crate) fn class_masks(&self, color: usize) -> [u32; MAX_VERTICES] {
        let mut adj = [0u32; MAX_VERTICES];
        for (e, &c) in self.edges.iter().zip(&self.colors) {
            if c as usize == color {
                adj[e.u] |= 1 << e.v;
                adj[e.v] |= 1 << e.u;
            }
        }
        adj
    }

    /// The colors as a digit string, one digit per edge in lexicographic order.
    pub fn color_word(&self) -> String {
        self.colors.iter().map(|c| char::from(b'0' + c)).collect()
    }

    /// Two-line text form: the host's graph6 line, then the color word.
    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", to_graph6(&self.host), self.color_word())
    }

    /// Parses [`EdgeColoring::to_text`] output. `k` fixes the palette size.
    pub fn from_text(text: &str, k: usize) -> Result<Self, Error> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let g6 = lines
            .next()
            .ok_or_else(|| Error::Coloring("missing graph6 line".into()))?;
        let host = parse_graph6(g6)?;
        let word = lines.next().unwrap_or("");
        let colors = word
            .bytes()
            .map(|b| match b {
                b'1'..=b'9' => Ok(b - b'0'),
                _ => Err(Error::Coloring(format!("unexpected color character {:?}", b as char))),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        if lines.next().is_some() {
            return Err(Error::Coloring("trailing content after color line".into()));
        }
        EdgeColoring::new(host, k, colors)
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring({} | {})", to_graph6(&self.host), self.color_word())
    }
}

/// Serialized as the color word; the host travels separately in reports.
impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.color_word())
    }
}

/// A coloring as it appears inside a JSON report: host and color word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringRecord {
    pub g6: String,
    pub colors: String,
}

impl From<&EdgeColoring> for ColoringRecord {
    fn from(c: &EdgeColoring) -> Self {
        ColoringRecord {
            g6: to_graph6(c.host()),
            colors: c.color_word(),
        }
    }
}

/// True iff no color class `G_ℓ` contains `K_{t_ℓ}`.
///
/// Errors when the coloring is not on `g`, or its palette differs from `spec`.
pub fn is_critical(g: &Graph, coloring: &EdgeColoring, spec: &CliqueVector) -> Result<bool, Error> {
    if coloring.host() != g {
        return Err(Error::Coloring("coloring does not cover exactly the edges of the graph".into()));
    }
    if coloring.k() != spec.k() {
        return Err(Error::Coloring(format!(
            "coloring uses {} colors but the clique vector has {}",
            coloring.k(),
            spec.k()
        )));
    }
    let all = g.vertices().mask();
    Ok((1..=spec.k()).all(|c| {
        let adj = coloring.class_masks(c);
        !masks_have_clique(&adj[..g.n()], all, spec.t(c))
    }))
}
