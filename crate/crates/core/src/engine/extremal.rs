//! Critical colorings with the largest or smallest possible color class.

use serde::{Deserialize, Serialize};

use super::search::{colors_in, ColorMask, SearchState, Selection};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::CliqueVector;

/// Which class size to optimize; colors are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "goal", content = "color")]
pub enum Objective {
    Maximize(usize),
    Minimize(usize),
}

impl Objective {
    pub fn color(self) -> usize {
        match self {
            Objective::Maximize(c) | Objective::Minimize(c) => c,
        }
    }
}

/// A critical coloring attaining the exact optimum of `|E_ℓ|`, or `None`
/// when `g` has no critical coloring at all.
///
/// Branch-and-bound over the arrowing search tree without symmetry breaking
/// (swapping colors would change the objective). The bound counts every
/// uncolored edge that could still take (for maximizing) or must take (for
/// minimizing) the objective color. The objective color is tried first when
/// maximizing and last when minimizing; among optimal colorings the first one
/// reached in that order is returned.
pub fn extremal_critical_coloring(
    g: &Graph,
    spec: &CliqueVector,
    objective: Objective,
) -> Result<Option<EdgeColoring>> {
    let color = objective.color();
    if color == 0 || color > spec.k() {
        return Err(Error::Spec(format!(
            "objective color {color} outside 1..={}",
            spec.k()
        )));
    }
    let edges = g.edges();
    let mut opt = Optimizer {
        state: SearchState::new(&edges, spec),
        color: color as u8,
        maximize: matches!(objective, Objective::Maximize(_)),
        best: None,
    };
    opt.run();
    opt.best
        .map(|(_, colors)| EdgeColoring::new(*g, spec.k(), colors))
        .transpose()
}

struct Optimizer<'a> {
    state: SearchState<'a>,
    color: u8,
    maximize: bool,
    best: Option<(usize, Vec<u8>)>,
}

impl Optimizer<'_> {
    fn run(&mut self) {
        let bit: ColorMask = 1 << (self.color - 1);
        let maximize = self.maximize;
        let mut potential = 0;
        let selection = self.state.select(|_, allowed| {
            let counts = if maximize {
                allowed & bit != 0
            } else {
                allowed == bit
            };
            potential += counts as usize;
        });
        let current = self.state.class_size(self.color);
        let (index, allowed) = match selection {
            Selection::DeadEnd => return,
            Selection::Complete => {
                let improves = match &self.best {
                    None => true,
                    Some((v, _)) => (maximize && current > *v) || (!maximize && current < *v),
                };
                if improves {
                    self.best = Some((current, self.state.colors.clone()));
                }
                return;
            }
            Selection::Branch { index, allowed } => (index, allowed),
        };
        if let Some((v, _)) = &self.best {
            let cut = if maximize {
                current + potential <= *v
            } else {
                current + potential >= *v
            };
            if cut {
                return;
            }
        }
        let preferred = allowed & bit;
        let others = allowed & !bit;
        let order = if maximize {
            [preferred, others]
        } else {
            [others, preferred]
        };
        for part in order {
            for c in colors_in(part) {
                self.state.assign(index, c);
                self.run();
                self.state.unassign(index);
            }
        }
    }
}
