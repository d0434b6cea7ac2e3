//! Brute-force reference answers by enumerating every `k^|E|` coloring.
//!
//! This shares nothing with the search engine: cliques of the host are listed
//! once by subset enumeration and stored as edge-index bit masks, and a
//! coloring is critical iff no listed `K_{t_ℓ}` has all its edges in class `ℓ`.
//! It exists to cross-check the engine and is only practical for small edge
//! counts.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::CliqueVector;

/// Largest number of colorings the oracle will enumerate.
pub const ORACLE_MAX_COLORINGS: u64 = 1 << 24;

/// Summary of all critical colorings of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSummary {
    /// Number of critical colorings.
    pub critical: u64,
    /// Per color: smallest and largest class size over critical colorings.
    pub class_range: Vec<Option<(usize, usize)>>,
    /// The lexicographically least critical color word.
    pub first: Option<Vec<u8>>,
}

impl OracleSummary {
    pub fn arrows(&self) -> bool {
        self.critical == 0
    }
}

/// Enumerates all colorings of `g` and summarizes the critical ones.
pub fn brute_force(g: &Graph, spec: &CliqueVector) -> Result<OracleSummary> {
    let edges = g.edges();
    let m = edges.len();
    let k = spec.k();
    let total = (k as u64).checked_pow(m as u32).filter(|&t| t <= ORACLE_MAX_COLORINGS);
    let Some(total) = total else {
        return Err(Error::Precondition(format!(
            "{k}^{m} colorings exceeds the oracle budget"
        )));
    };
    let index_of = |a: usize, b: usize| edges.iter().position(|e| e.u == a && e.v == b);

    // For each color, the edge masks of every K_t in the host.
    let forbidden: Vec<Vec<u64>> = (1..=k)
        .map(|c| {
            let t = spec.t(c);
            subsets(g.n(), t)
                .into_iter()
                .filter_map(|vs| {
                    let mut mask = 0u64;
                    for (i, &a) in vs.iter().enumerate() {
                        for &b in &vs[i + 1..] {
                            mask |= 1 << index_of(a, b)?;
                        }
                    }
                    Some(mask)
                })
                .collect()
        })
        .collect();

    let mut summary = OracleSummary {
        critical: 0,
        class_range: vec![None; k],
        first: None,
    };
    let mut word = vec![1u8; m];
    let mut classes = vec![0u64; k];
    for code in 0..total {
        // Lexicographic order: the first edge is the most significant digit.
        let mut rest = code;
        for i in (0..m).rev() {
            word[i] = (rest % k as u64) as u8 + 1;
            rest /= k as u64;
        }
        classes.iter_mut().for_each(|c| *c = 0);
        for (i, &c) in word.iter().enumerate() {
            classes[c as usize - 1] |= 1 << i;
        }
        let critical = (0..k).all(|c| forbidden[c].iter().all(|&f| f & classes[c] != f));
        if !critical {
            continue;
        }
        summary.critical += 1;
        if summary.first.is_none() {
            summary.first = Some(word.clone());
        }
        for (c, range) in summary.class_range.iter_mut().enumerate() {
            let size = classes[c].count_ones() as usize;
            *range = Some(match *range {
                None => (size, size),
                Some((lo, hi)) => (lo.min(size), hi.max(size)),
            });
        }
    }
    Ok(summary)
}

fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, t, &mut Vec::new(), &mut out);
    out
}
