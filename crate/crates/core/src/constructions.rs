//! Named graphs, closed-form degree and edge bounds, and small Ramsey numbers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{is_critical, EdgeColoring};
use crate::engine::arrows;
use crate::error::{Error, GraphError, Result};
use crate::graph::{Edge, Graph};
use crate::spec::CliqueVector;

/// Where a Ramsey number came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// `K_r` arrows and `K_{r-1}` does not, both decided by the engine.
    VerifiedBySearch,
    /// Taken from the literature without a check.
    Cited,
    /// Supplied by the caller.
    UserSupplied,
}

/// A value of `r(K_{t_1}, ..., K_{t_k})`.
#[derive(Clone, Debug, Serialize)]
pub struct RamseyFact {
    pub spec: CliqueVector,
    pub r: usize,
    pub provenance: Provenance,
    /// A critical coloring of `K_{r-1}`, present when verified.
    pub witness: Option<EdgeColoring>,
}

impl RamseyFact {
    pub fn user_supplied(spec: &CliqueVector, r: usize) -> Self {
        RamseyFact {
            spec: spec.clone(),
            r,
            provenance: Provenance::UserSupplied,
            witness: None,
        }
    }

    /// Re-checks the stored witness; `true` when there is nothing to check.
    pub fn witness_holds(&self) -> Result<bool> {
        match &self.witness {
            None => Ok(true),
            Some(w) => Ok(w.host().is_complete()
                && w.host().n() + 1 == self.r
                && is_critical(w.host(), w, &self.spec)?),
        }
    }
}

// Values by sorted clique sizes, with whether the engine can confirm them.
const RAMSEY_TABLE: &[(&[usize], usize, bool)] = &[
    (&[2, 2], 2, true),
    (&[3, 3], 6, true),
    (&[3, 4], 9, true),
    (&[3, 3, 3], 17, false),
];

fn table_entry(spec: &CliqueVector) -> Option<(usize, bool)> {
    let sorted = spec.sorted();
    RAMSEY_TABLE
        .iter()
        .find(|(sizes, _, _)| *sizes == sorted.sizes())
        .map(|&(_, r, verifiable)| (r, verifiable))
}

/// The tabulated Ramsey number for `spec`, if any, without running a search.
pub fn known_ramsey(spec: &CliqueVector) -> Option<usize> {
    table_entry(spec).map(|(r, _)| r)
}

/// The Ramsey number of `spec`.
///
/// Small values are confirmed by search: `K_r` must arrow, and a critical
/// coloring of `K_{r-1}` is found and stored. Values beyond the search budget
/// are returned as [`Provenance::Cited`].
///
/// ```
/// use rck_core::constructions::{ramsey_fact, Provenance};
///
/// let fact = ramsey_fact(&"3,4".parse()?)?;
/// assert_eq!((fact.r, fact.provenance), (9, Provenance::VerifiedBySearch));
/// assert!(fact.witness_holds()?);
/// # Ok::<(), rck_core::Error>(())
/// ```
pub fn ramsey_fact(spec: &CliqueVector) -> Result<RamseyFact> {
    let (r, verifiable) = table_entry(spec).ok_or_else(|| Error::UnknownRamsey(spec.to_string()))?;
    if !verifiable {
        return Ok(RamseyFact {
            spec: spec.clone(),
            r,
            provenance: Provenance::Cited,
            witness: None,
        });
    }
    let upper = arrows(&Graph::complete(r)?, spec)?;
    let lower = arrows(&Graph::complete(r - 1)?, spec)?;
    if !upper.arrows || lower.arrows {
        return Err(Error::Precondition(format!("search disagrees with r({spec}) = {r}")));
    }
    Ok(RamseyFact {
        spec: spec.clone(),
        r,
        provenance: Provenance::VerifiedBySearch,
        witness: lower.witness,
    })
}

/// `K_{r-2} + K̄_{n-r+2}` for the tabulated `r` of `spec`.
pub fn hanson_toft(spec: &CliqueVector, n: usize) -> Result<Graph> {
    let r = known_ramsey(spec).ok_or_else(|| Error::UnknownRamsey(spec.to_string()))?;
    hanson_toft_for(r, n)
}

/// `K_{r-2} + K̄_{n-r+2}` for an explicit `r`.
pub fn hanson_toft_for(r: usize, n: usize) -> Result<Graph> {
    if r < 3 || n < r {
        return Err(Error::Precondition(format!("need 3 <= r <= n, got r = {r}, n = {n}")));
    }
    Ok(Graph::complete(r - 2)?.join(&Graph::empty(n - r + 2)?)?)
}

/// `(r - 2)(n - r + 2) + C(r - 2, 2)`, the edge count of the Hanson–Toft graph.
pub fn hanson_toft_edge_count(r: usize, n: usize) -> usize {
    let a = r - 2;
    a * (n - a) + a * a.saturating_sub(1) / 2
}

/// `K_6` minus the edge `{0, 1}`.
pub fn k6_minus() -> Graph {
    Graph::complete(6)
        .and_then(|g| g.remove_edge(Edge::new(0, 1)))
        .expect("K_6 has the edge 01")
}

/// `t_k - 2k - 1 + Σ t_i` for `t_k >= ... >= t_1 >= 3` given in ascending order.
///
/// ```
/// use rck_core::constructions::mindeg_bound;
///
/// assert_eq!(mindeg_bound(&"3,3".parse()?)?, 4);
/// assert_eq!(mindeg_bound(&"3,4".parse()?)?, 6);
/// assert_eq!(mindeg_bound(&"3,3,3".parse()?)?, 5);
/// # Ok::<(), rck_core::Error>(())
/// ```
pub fn mindeg_bound(spec: &CliqueVector) -> Result<usize> {
    if !spec.is_ascending() || spec.sizes()[0] < 3 || spec.k() < 2 {
        return Err(Error::Spec(format!(
            "{spec}: need at least two sizes, ascending, each at least 3"
        )));
    }
    let k = spec.k();
    let sum: usize = spec.sizes().iter().sum();
    Ok(spec.t(k) + sum - 2 * k - 1)
}

/// The best minimum-degree bound known for co-critical graphs of `spec`:
/// [`mindeg_bound`], raised to 7 for `(3, 4)`.
pub fn best_mindeg_bound(spec: &CliqueVector) -> Result<usize> {
    let bound = mindeg_bound(spec)?;
    Ok(if spec.sizes() == [3, 4] { bound.max(7) } else { bound })
}

/// `s(t - 1)`, the closed-form lower bound on `r(K_s, K_t)`.
///
/// The formula is reported as is; at `s = 2` it exceeds the true value
/// `r(K_2, K_t) = t`.
pub fn ramsey_lower_bound(s: usize, t: usize) -> Result<usize> {
    if s < 2 || t < 2 {
        return Err(Error::Precondition(format!("need s, t >= 2, got ({s}, {t})")));
    }
    Ok(s * (t - 1))
}

/// A graph addressable by name:
/// `hanson-toft:S,T[,..]:N`, `k6minus`, `kn:N`, `complete-multipartite:P1,P2,..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    HansonToft { spec: CliqueVector, n: usize },
    K6Minus,
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
}

impl Construction {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Construction::HansonToft { spec, n } => hanson_toft(spec, *n),
            Construction::K6Minus => Ok(k6_minus()),
            Construction::Complete(n) => Ok(Graph::complete(*n)?),
            Construction::CompleteMultipartite(parts) => Ok(Graph::complete_multipartite(parts)?),
        }
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Graph(GraphError::InvalidParameter(format!("unknown construction {s:?}")));
        let number = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let mut fields = s.trim().split(':');
        let name = fields.next().ok_or_else(bad)?;
        let args: Vec<&str> = fields.collect();
        match (name, args.as_slice()) {
            ("k6minus", []) => Ok(Construction::K6Minus),
            ("kn", [n]) => Ok(Construction::Complete(number(n)?)),
            ("hanson-toft", [spec, n]) => Ok(Construction::HansonToft {
                spec: spec.parse()?,
                n: number(n)?,
            }),
            ("complete-multipartite", [parts]) => Ok(Construction::CompleteMultipartite(
                parts.split(',').map(number).collect::<Result<_>>()?,
            )),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::HansonToft { spec, n } => write!(f, "hanson-toft:{spec}:{n}"),
            Construction::K6Minus => f.write_str("k6minus"),
            Construction::Complete(n) => write!(f, "kn:{n}"),
            Construction::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete-multipartite:{}", parts.join(","))
            }
        }
    }
}
