//! Checks that every co-critical graph and its critical colorings must pass.
//!
//! Throughout, `t_k >= ... >= t_1 >= 3`, color `k` is called blue, and for a
//! vertex `x` with `d(x) <= n - 2` the set `A_ℓ` is `N_ℓ(x)`. A failing
//! finding on a co-critical input means a bug in the engine or the checker.

use serde::Serialize;

use super::{is_cocritical_with, CocriticalOptions, CocriticalReport};
use crate::coloring::EdgeColoring;
use crate::constructions::best_mindeg_bound;
use crate::engine::{extremal_critical_coloring, Objective};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::saturation::is_saturated;

/// The property a [`Finding`] is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// `χ >= r - 1`, with equality only for a complete `(r-1)`-partite graph.
    ChromaticBound,
    /// `Δ(G_ℓ) <= n - 2` and `ω(G_ℓ[A_ℓ]) <= t_ℓ - 2`.
    ClassDegree,
    /// Each `u ∉ N[x]` is `ℓ`-complete to a `(t_ℓ-2)`-clique of `G_ℓ[A_ℓ]`,
    /// and `ω(G_ℓ[A_ℓ]) = t_ℓ - 2`.
    OutsideClique,
    /// With `|E_k|` maximum and `A_ℓ` blue-complete to `A_k`: the packings
    /// in `A_k` are large and `|A_k| >= (t_ℓ-1)(t_k-2)`.
    BlueCompletePacking,
    /// With `k = 2`, `|E_2|` maximum and `|A_1| = t_1 - 2`: `A_1` is
    /// blue-complete to `A_2` and `|A_2| >= (t_1-1)(t_2-2)+1`.
    SmallFirstNeighborhood,
    /// With `|E_k|` maximum, `G_k` is `K_{t_k}`-saturated.
    LastClassSaturated,
    /// With `k >= 3` and `|E_1|` minimum, `G ∖ E_1` is co-critical for
    /// `(t_2, ..., t_k)`.
    DropFirstClass,
    /// `δ` is at least the known lower bound for the clique vector.
    MinDegree,
}

/// One evaluated instance of a [`Clause`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub clause: Clause,
    pub holds: bool,
    /// The clause's hypothesis was false, so it holds trivially.
    pub vacuous: bool,
    pub x: Option<usize>,
    pub color: Option<usize>,
    pub detail: String,
}

impl Finding {
    fn new(clause: Clause, holds: bool, detail: String) -> Self {
        Finding {
            clause,
            holds,
            vacuous: false,
            x: None,
            color: None,
            detail,
        }
    }

    fn at(mut self, x: usize, color: usize) -> Self {
        self.x = Some(x);
        self.color = Some(color);
        self
    }

    fn vacuous(clause: Clause, detail: String) -> Self {
        Finding {
            vacuous: true,
            ..Finding::new(clause, true, detail)
        }
    }
}

/// Which critical coloring the structural checks run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringPolicy {
    /// The witness stored in the report.
    Witness,
    /// A coloring with `|E_k|` maximum.
    MaximizeLast,
    /// A coloring with `|E_1|` minimum.
    MinimizeFirst,
}

fn require_cocritical(report: &CocriticalReport) -> Result<()> {
    if report.is_cocritical {
        Ok(())
    } else {
        Err(Error::Precondition("graph is not co-critical".into()))
    }
}

fn require_sorted_spec(report: &CocriticalReport) -> Result<()> {
    let spec = &report.spec;
    if spec.k() < 2 || !spec.is_ascending() || spec.sizes()[0] < 3 {
        return Err(Error::Precondition(format!(
            "{spec}: structural checks need k >= 2 and 3 <= t_1 <= ... <= t_k"
        )));
    }
    Ok(())
}

/// `χ(G) >= r - 1`, and `χ(G) = r - 1` only for complete `(r-1)`-partite `G`.
pub fn check_chromatic_bound(report: &CocriticalReport) -> Result<Finding> {
    require_cocritical(report)?;
    let r = report.r.ok_or_else(|| Error::UnknownRamsey(report.spec.to_string()))?;
    let chi = match report.chi {
        Some(chi) => chi,
        None => report.graph.chromatic_number()?,
    };
    let (multipartite, parts) = report.graph.is_complete_multipartite();
    let holds = chi + 1 >= r && (chi + 1 != r || (multipartite && parts + 1 == r));
    Ok(Finding::new(
        Clause::ChromaticBound,
        holds,
        format!("chi = {chi}, r = {r}, complete multipartite = {multipartite} with {parts} parts"),
    ))
}

/// `δ(G)` against [`best_mindeg_bound`].
pub fn check_min_degree(report: &CocriticalReport) -> Result<Finding> {
    require_cocritical(report)?;
    let bound = best_mindeg_bound(&report.spec)?;
    Ok(Finding::new(
        Clause::MinDegree,
        report.delta >= bound,
        format!("delta = {}, bound = {bound}", report.delta),
    ))
}

/// Runs the per-vertex clauses on the coloring chosen by `policy` and
/// returns the findings with that coloring.
///
/// Every policy checks [`Clause::ClassDegree`] and [`Clause::OutsideClique`].
/// `MaximizeLast` adds the clauses that need `|E_k|` maximum, and
/// `MinimizeFirst` adds [`Clause::DropFirstClass`] when `k >= 3`.
pub fn check_coloring_structure(
    report: &CocriticalReport,
    policy: ColoringPolicy,
    options: &CocriticalOptions,
) -> Result<(EdgeColoring, Vec<Finding>)> {
    require_cocritical(report)?;
    require_sorted_spec(report)?;
    let g = &report.graph;
    let spec = &report.spec;
    let k = spec.k();
    let coloring = match policy {
        ColoringPolicy::Witness => report.base_witness.clone(),
        ColoringPolicy::MaximizeLast => extremal_critical_coloring(g, spec, Objective::Maximize(k))?,
        ColoringPolicy::MinimizeFirst => extremal_critical_coloring(g, spec, Objective::Minimize(1))?,
    }
    .ok_or_else(|| Error::Precondition("co-critical graph without a critical coloring".into()))?;

    let view = View::new(g, &coloring, spec.sizes());
    let mut findings = Vec::new();
    for x in (0..g.n()).filter(|&x| g.degree(x) + 2 <= g.n()) {
        for l in 1..=k {
            findings.push(view.class_degree(x, l));
            findings.push(view.outside_clique(x, l));
        }
        if policy == ColoringPolicy::MaximizeLast {
            for l in 1..k {
                findings.push(view.blue_complete_packing(x, l));
            }
            if k == 2 {
                findings.push(view.small_first_neighborhood(x));
            }
        }
    }
    if policy == ColoringPolicy::MaximizeLast {
        let sat = is_saturated(&view.classes[k - 1], spec.t(k))?;
        findings.push(Finding::new(
            Clause::LastClassSaturated,
            sat.is_saturated,
            format!("|E_k| = {}", coloring.class_size(k)),
        ));
    }
    if policy == ColoringPolicy::MinimizeFirst && k >= 3 {
        let rest = spec.without_first()?;
        let mut remaining = *g;
        for e in coloring.edges().iter().filter(|&&e| coloring.color_of(e) == Some(1)) {
            remaining = remaining.remove_edge(*e)?;
        }
        let sub_options = CocriticalOptions {
            search: options.search.clone(),
            ramsey: None,
        };
        let sub = is_cocritical_with(&remaining, &rest, &sub_options)?;
        findings.push(Finding::new(
            Clause::DropFirstClass,
            sub.is_cocritical,
            format!("|E_1| = {}, remaining graph has {} edges", coloring.class_size(1), remaining.edge_count()),
        ));
    }
    Ok((coloring, findings))
}

/// All applicable checks for a co-critical report: the chromatic bound when
/// `r` is known, the structural clauses on a coloring with `|E_k|` maximum
/// and, for `k >= 3`, on one with `|E_1|` minimum, and the degree bound.
pub fn run_checks(report: &CocriticalReport, options: &CocriticalOptions) -> Result<Vec<Finding>> {
    let mut findings = Vec::new();
    if report.r.is_some() {
        findings.push(check_chromatic_bound(report)?);
    }
    findings.extend(check_coloring_structure(report, ColoringPolicy::MaximizeLast, options)?.1);
    if report.spec.k() >= 3 {
        findings.extend(check_coloring_structure(report, ColoringPolicy::MinimizeFirst, options)?.1);
    }
    findings.push(check_min_degree(report)?);
    Ok(findings)
}

// A coloring split into class graphs.
struct View<'a> {
    g: &'a Graph,
    t: &'a [usize],
    classes: Vec<Graph>,
}

impl<'a> View<'a> {
    fn new(g: &'a Graph, coloring: &EdgeColoring, t: &'a [usize]) -> Self {
        View {
            g,
            t,
            classes: (1..=t.len()).map(|c| coloring.class_graph(c)).collect(),
        }
    }

    fn class(&self, l: usize) -> &Graph {
        &self.classes[l - 1]
    }

    fn a(&self, x: usize, l: usize) -> VertexSet {
        self.class(l).neighbors(x)
    }

    fn omega_within(&self, l: usize, set: VertexSet) -> usize {
        self.class(l).induced(set).map(|h| h.clique_number()).unwrap_or(0)
    }

    fn outside(&self, x: usize) -> VertexSet {
        self.g.vertices() - self.g.neighbors(x).with(x)
    }

    fn class_degree(&self, x: usize, l: usize) -> Finding {
        let n = self.g.n();
        let max_degree = self.class(l).max_degree();
        let omega = self.omega_within(l, self.a(x, l));
        Finding::new(
            Clause::ClassDegree,
            max_degree + 2 <= n && omega + 2 <= self.t[l - 1],
            format!("max class degree = {max_degree}, omega(A) = {omega}"),
        )
        .at(x, l)
    }

    fn outside_clique(&self, x: usize, l: usize) -> Finding {
        let t = self.t[l - 1];
        let a = self.a(x, l);
        let omega = self.omega_within(l, a);
        let uncovered: Vec<usize> = self
            .outside(x)
            .iter()
            .filter(|&u| !self.class(l).has_clique(t - 2, a & self.class(l).neighbors(u)))
            .collect();
        Finding::new(
            Clause::OutsideClique,
            uncovered.is_empty() && omega + 2 == t,
            format!("omega(A) = {omega}, vertices without a clique: {uncovered:?}"),
        )
        .at(x, l)
    }

    fn blue_complete(&self, from: VertexSet, to: VertexSet) -> bool {
        let k = self.t.len();
        from.iter().all(|v| (to - VertexSet::singleton(v)).is_subset(self.class(k).neighbors(v)))
    }

    fn blue_complete_packing(&self, x: usize, l: usize) -> Finding {
        let k = self.t.len();
        let (tl, tk) = (self.t[l - 1], self.t[k - 1]);
        let (al, ak) = (self.a(x, l), self.a(x, k));
        if !self.blue_complete(al, ak) {
            return Finding::vacuous(Clause::BlueCompletePacking, "A_l is not blue-complete to A_k".into()).at(x, l);
        }
        let p = max_clique_packing(self.class(l), ak, tl - 1);
        let q = max_clique_packing(self.class(k), ak, tk - 2);
        Finding::new(
            Clause::BlueCompletePacking,
            p + 2 >= tk && q + 1 >= tl && ak.len() >= (tl - 1) * (tk - 2),
            format!(
                "disjoint K_{} in color {l}: {p}, disjoint K_{} in color {k}: {q}, |A_k| = {}",
                tl - 1,
                tk - 2,
                ak.len()
            ),
        )
        .at(x, l)
    }

    fn small_first_neighborhood(&self, x: usize) -> Finding {
        let (t1, t2) = (self.t[0], self.t[1]);
        let (a1, a2) = (self.a(x, 1), self.a(x, 2));
        if a1.len() + 2 != t1 {
            return Finding::vacuous(Clause::SmallFirstNeighborhood, format!("|A_1| = {}", a1.len())).at(x, 1);
        }
        let complete = self.blue_complete(a1, a2);
        Finding::new(
            Clause::SmallFirstNeighborhood,
            complete && a2.len() > (t1 - 1) * (t2 - 2),
            format!("blue-complete = {complete}, |A_2| = {}", a2.len()),
        )
        .at(x, 1)
    }
}

/// Largest number of pairwise vertex-disjoint `K_s` in `g[within]`, by
/// exhaustive search.
pub fn max_clique_packing(g: &Graph, within: VertexSet, s: usize) -> usize {
    if s == 0 {
        return usize::MAX;
    }
    let mut best = 0;
    pack(g, within, s, 0, &mut best);
    best
}

fn pack(g: &Graph, within: VertexSet, s: usize, have: usize, best: &mut usize) {
    *best = (*best).max(have);
    if have + within.len() / s <= *best {
        return;
    }
    let Some(v) = within.first() else { return };
    let rest = within.without(v);
    let mut cliques = Vec::new();
    cliques_through(g, VertexSet::singleton(v), g.neighbors(v) & rest, s - 1, &mut cliques);
    for c in cliques {
        pack(g, within - c, s, have + 1, best);
    }
    pack(g, rest, s, have, best);
}

fn cliques_through(g: &Graph, clique: VertexSet, candidates: VertexSet, more: usize, out: &mut Vec<VertexSet>) {
    if more == 0 {
        out.push(clique);
        return;
    }
    for u in candidates {
        let later = VertexSet::from_mask(candidates.mask() & !(((2u64 << u) - 1) as u32));
        cliques_through(g, clique.with(u), later & g.neighbors(u), more - 1, out);
    }
}
