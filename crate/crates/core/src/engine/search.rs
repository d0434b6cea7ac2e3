//! Depth-first edge-coloring search shared by the arrowing decider, the
//! extremal optimizer and the frontier splitter.

use crate::clique::masks_have_clique;
use crate::graph::{Edge, MAX_VERTICES};
use crate::parallel::StopIndex;
use crate::spec::{CliqueVector, MAX_COLORS};

/// Bit `c - 1` set iff color `c` may be used.
pub(crate) type ColorMask = u8;

/// The next decision chosen by [`SearchState::select`].
pub(crate) enum Selection {
    /// Every edge is colored.
    Complete,
    /// Some uncolored edge has no admissible color.
    DeadEnd,
    /// Branch on edge `index` with the admissible colors in `allowed`.
    Branch { index: usize, allowed: ColorMask },
}

/// Partial coloring plus per-color adjacency masks.
#[derive(Clone)]
pub(crate) struct SearchState<'a> {
    pub edges: &'a [Edge],
    pub k: usize,
    targets: [usize; MAX_COLORS],
    /// 0 for uncolored, otherwise the color `1..=k`.
    pub colors: Vec<u8>,
    class_adj: [[u32; MAX_VERTICES]; MAX_COLORS],
    class_size: [usize; MAX_COLORS],
    pub colored: usize,
}

impl<'a> SearchState<'a> {
    pub fn new(edges: &'a [Edge], spec: &CliqueVector) -> Self {
        let mut targets = [0; MAX_COLORS];
        targets[..spec.k()].copy_from_slice(spec.sizes());
        SearchState {
            edges,
            k: spec.k(),
            targets,
            colors: vec![0; edges.len()],
            class_adj: [[0; MAX_VERTICES]; MAX_COLORS],
            class_size: [0; MAX_COLORS],
            colored: 0,
        }
    }

    #[inline]
    pub fn assign(&mut self, index: usize, color: u8) {
        debug_assert_eq!(self.colors[index], 0);
        let e = self.edges[index];
        let c = color as usize - 1;
        self.class_adj[c][e.u] |= 1 << e.v;
        self.class_adj[c][e.v] |= 1 << e.u;
        self.class_size[c] += 1;
        self.colors[index] = color;
        self.colored += 1;
    }

    #[inline]
    pub fn unassign(&mut self, index: usize) {
        let e = self.edges[index];
        let c = self.colors[index] as usize - 1;
        self.class_adj[c][e.u] &= !(1 << e.v);
        self.class_adj[c][e.v] &= !(1 << e.u);
        self.class_size[c] -= 1;
        self.colors[index] = 0;
        self.colored -= 1;
    }

    #[inline]
    pub fn class_size(&self, color: u8) -> usize {
        self.class_size[color as usize - 1]
    }

    /// Colors that would not complete a monochromatic target clique through
    /// edge `index`. Any new clique must contain the new edge, so only the
    /// common neighborhood of its endpoints inside the color class matters.
    #[inline]
    pub fn allowed(&self, index: usize) -> ColorMask {
        let e = self.edges[index];
        let mut mask = 0;
        for c in 0..self.k {
            let adj = &self.class_adj[c];
            let common = adj[e.u] & adj[e.v];
            if !masks_have_clique(adj, common, self.targets[c] - 2) {
                mask |= 1 << c;
            }
        }
        mask
    }

    // Size of the largest monochromatic common neighborhood of the endpoints.
    #[inline]
    fn pressure(&self, index: usize) -> u32 {
        let e = self.edges[index];
        (0..self.k)
            .map(|c| (self.class_adj[c][e.u] & self.class_adj[c][e.v]).count_ones())
            .max()
            .unwrap_or(0)
    }

    /// Picks the next edge: fewest admissible colors first, then the largest
    /// monochromatic common neighborhood, then the lowest edge index.
    /// `on_scan` sees every uncolored edge's admissible set (for bounds).
    pub fn select(&self, mut on_scan: impl FnMut(usize, ColorMask)) -> Selection {
        if self.colored == self.edges.len() {
            return Selection::Complete;
        }
        let mut best: Option<(u32, u32, usize, ColorMask)> = None;
        for i in 0..self.edges.len() {
            if self.colors[i] != 0 {
                continue;
            }
            let allowed = self.allowed(i);
            if allowed == 0 {
                return Selection::DeadEnd;
            }
            on_scan(i, allowed);
            let options = allowed.count_ones();
            let better = match best {
                None => true,
                Some((bo, bp, _, _)) => {
                    options < bo || (options == bo && self.pressure(i) > bp)
                }
            };
            if better {
                best = Some((options, self.pressure(i), i, allowed));
            }
        }
        let (_, _, index, allowed) = best.expect("an uncolored edge exists");
        Selection::Branch { index, allowed }
    }
}

/// Iterates the colors of a mask in ascending order.
#[inline]
pub(crate) fn colors_in(mask: ColorMask) -> impl Iterator<Item = u8> {
    (0..MAX_COLORS as u8).filter(move |c| mask >> c & 1 == 1).map(|c| c + 1)
}

pub(crate) enum Outcome {
    Exhausted,
    Found(Vec<u8>),
    NodeLimit,
    Cancelled,
}

/// Plain satisfiability search for a critical coloring.
pub(crate) struct Dfs<'s, 'a> {
    pub state: &'s mut SearchState<'a>,
    pub nodes: u64,
    pub max_depth: usize,
    pub node_limit: Option<u64>,
    /// Restriction on the very first decision: `(edge index, allowed colors)`.
    pub root_restriction: Option<(usize, ColorMask)>,
    pub cancel: Option<(&'s StopIndex, usize)>,
}

impl Dfs<'_, '_> {
    pub fn run(&mut self, depth: usize) -> Outcome {
        self.max_depth = self.max_depth.max(depth);
        let (index, mut allowed) = match self.state.select(|_, _| {}) {
            Selection::Complete => return Outcome::Found(self.state.colors.clone()),
            Selection::DeadEnd => return Outcome::Exhausted,
            Selection::Branch { index, allowed } => (index, allowed),
        };
        let index = match self.root_restriction.take() {
            Some((seed, mask)) => {
                allowed = self.state.allowed(seed) & mask;
                seed
            }
            None => index,
        };
        for color in colors_in(allowed) {
            if let Some(limit) = self.node_limit {
                if self.nodes >= limit {
                    return Outcome::NodeLimit;
                }
            }
            if let Some((stop, me)) = self.cancel {
                if self.nodes & 0x3ff == 0 && stop.superseded(me) {
                    return Outcome::Cancelled;
                }
            }
            self.nodes += 1;
            self.state.assign(index, color);
            let out = self.run(depth + 1);
            self.state.unassign(index);
            if !matches!(out, Outcome::Exhausted) {
                return out;
            }
        }
        Outcome::Exhausted
    }
}

/// Collects every partial assignment reached after `levels` decisions, in
/// depth-first order, so each can be searched independently.
pub(crate) struct Frontier {
    pub paths: Vec<Vec<(usize, u8)>>,
    pub nodes: u64,
}

pub(crate) fn expand_frontier(
    state: &mut SearchState<'_>,
    levels: usize,
    root_restriction: Option<(usize, ColorMask)>,
) -> Frontier {
    fn go(
        state: &mut SearchState<'_>,
        levels: usize,
        restriction: &mut Option<(usize, ColorMask)>,
        path: &mut Vec<(usize, u8)>,
        out: &mut Frontier,
    ) {
        if path.len() == levels {
            out.paths.push(path.clone());
            return;
        }
        let (index, mut allowed) = match state.select(|_, _| {}) {
            Selection::Complete => {
                out.paths.push(path.clone());
                return;
            }
            Selection::DeadEnd => return,
            Selection::Branch { index, allowed } => (index, allowed),
        };
        let index = match restriction.take() {
            Some((seed, mask)) => {
                allowed = state.allowed(seed) & mask;
                seed
            }
            None => index,
        };
        for color in colors_in(allowed) {
            out.nodes += 1;
            state.assign(index, color);
            path.push((index, color));
            go(state, levels, restriction, path, out);
            path.pop();
            state.unassign(index);
        }
    }
    let mut out = Frontier {
        paths: Vec::new(),
        nodes: 0,
    };
    let mut restriction = root_restriction;
    go(state, levels, &mut restriction, &mut Vec::new(), &mut out);
    out
}
