//! The graph6 text encoding for graphs with at most 62 vertices.
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits per byte
//! (most significant first), zero padded, each group offset by 63.

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| GraphError::Graph6("empty line".into()))?;
    if !(OFFSET..=126).contains(&first) {
        return Err(GraphError::Graph6(format!("invalid size byte {first:#04x}")));
    }
    if first == 126 {
        return Err(GraphError::TooManyVertices {
            n: 63,
            max: MAX_VERTICES,
        });
    }
    let n = (first - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g_edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if read_bit(body, bit)? {
                g_edges.push((i, j));
            }
            bit += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if read_bit(body, pad)? {
            return Err(GraphError::Graph6("non-zero padding bits".into()));
        }
    }
    Graph::from_edges(n, &g_edges)
}

fn read_bit(body: &[u8], index: usize) -> Result<bool, GraphError> {
    let byte = body[index / 6];
    if !(OFFSET..=126).contains(&byte) {
        return Err(GraphError::Graph6(format!("invalid data byte {byte:#04x}")));
    }
    Ok(((byte - OFFSET) >> (5 - index % 6)) & 1 == 1)
}

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
