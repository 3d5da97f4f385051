//! Tree automata over ranked alphabets. Holes (`_`) in a tree are
//! variables bound left to right, so a tree with k holes weighs as a
//! k-ary function of its variable assignment.

mod bottom_up;
mod container;
mod explore;
pub mod fixtures;
mod multiop;
mod top_down;
mod top_down_explore;

pub use bottom_up::BottomUpDetTA;
pub use container::{bu_determinize, BottomUpContainerTA};
pub use explore::{tree_explore, tree_to_dot, TreeExploration, TreeTransition, TreeTransitions};
pub use multiop::{MultiFun, MultiOpBUTA, StateFuns};
pub use top_down::{occurrence_automaton, TopDownContainerTA};
pub use top_down_explore::{top_down_explore, TopDownExploration, TopDownExploreResult, TopDownTransition};

use crate::algebra::{RankedSymbol, RankedTree};
use crate::{Error, Result};
use std::sync::Arc;

/// Transition of a bottom-up automaton: a symbol and the states of its
/// children.
pub type BottomUpStep<S, R> = Arc<dyn Fn(&RankedSymbol, &[S]) -> Result<R> + Send + Sync>;

/// Bottom-up fold of a tree whose holes read `vars` left to right.
pub(crate) fn fold_holes<V, T>(
    t: &RankedTree,
    vars: &[V],
    hole: &mut dyn FnMut(usize, &V) -> Result<T>,
    node: &mut dyn FnMut(&RankedSymbol, Vec<T>) -> Result<T>,
) -> Result<T> {
    let k = t.arity();
    if vars.len() != k {
        return Err(Error::Arity { expected: k, found: vars.len() });
    }
    let mut next = 0;
    go(t, vars, &mut next, hole, node)
}

fn go<V, T>(
    t: &RankedTree,
    vars: &[V],
    next: &mut usize,
    hole: &mut dyn FnMut(usize, &V) -> Result<T>,
    node: &mut dyn FnMut(&RankedSymbol, Vec<T>) -> Result<T>,
) -> Result<T> {
    match t {
        RankedTree::Hole => {
            let i = *next;
            *next += 1;
            hole(i, &vars[i])
        }
        RankedTree::Node(f, ts) => {
            if f.arity != ts.len() {
                return Err(Error::Arity { expected: f.arity, found: ts.len() });
            }
            let mut vals = Vec::with_capacity(ts.len());
            for c in ts {
                vals.push(go(c, vars, next, hole, node)?);
            }
            node(f, vals)
        }
    }
}

#[cfg(test)]
mod tests;
