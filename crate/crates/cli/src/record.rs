use std::fmt::Write as _;

use rck_core::cocritical::Finding;
use rck_core::{Edge, Graph, SearchStats};
use serde::Serialize;

/// One output line per input graph. Field order is part of the format.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub g6: String,
    pub spec: Vec<usize>,
    pub verdict: &'static str,
    pub delta: usize,
    pub chi: Option<usize>,
    pub edges: usize,
    pub ht_bound: Option<usize>,
    /// Color word of a critical coloring, in lexicographic edge order.
    pub witness: Option<String>,
    pub lemmas: Vec<Finding>,
    pub stats: Option<SearchStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_edge: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_non_edge: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hajnal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Record {
    pub fn new(g6: &str, graph: &Graph, spec: Vec<usize>, verdict: &'static str) -> Self {
        Record {
            g6: g6.to_string(),
            spec,
            verdict,
            delta: graph.min_degree(),
            chi: None,
            edges: graph.edge_count(),
            ht_bound: None,
            witness: None,
            lemmas: Vec::new(),
            stats: None,
            failing_edge: None,
            minimal: None,
            violating_non_edge: None,
            hajnal: None,
            elapsed_ms: None,
        }
    }

    pub fn to_text(&self) -> String {
        let spec: Vec<String> = self.spec.iter().map(|t| t.to_string()).collect();
        let mut line = format!(
            "{} [{}] {} delta={} edges={}",
            self.g6,
            spec.join(","),
            self.verdict,
            self.delta,
            self.edges
        );
        if let Some(chi) = self.chi {
            let _ = write!(line, " chi={chi}");
        }
        if let Some(b) = self.ht_bound {
            let _ = write!(line, " ht_bound={b}");
        }
        if let Some([u, v]) = self.failing_edge {
            let _ = write!(line, " failing_edge={u}-{v}");
        }
        if let Some([u, v]) = self.violating_non_edge {
            let _ = write!(line, " violating_non_edge={u}-{v}");
        }
        if let Some(m) = self.minimal {
            let _ = write!(line, " minimal={m}");
        }
        if let Some(h) = self.hajnal {
            let _ = write!(line, " hajnal={h}");
        }
        if let Some(w) = &self.witness {
            let _ = write!(line, " witness={w}");
        }
        if !self.lemmas.is_empty() {
            let failed = self.lemmas.iter().filter(|f| !f.holds).count();
            let _ = write!(line, " checks={} failed={failed}", self.lemmas.len());
        }
        if let Some(s) = &self.stats {
            let _ = write!(line, " nodes={}", s.nodes);
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(line, " ms={ms:.3}");
        }
        line
    }
}

pub fn pair(e: Edge) -> [usize; 2] {
    [e.u, e.v]
}
