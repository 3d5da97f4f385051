//! Weights, monoids, ranked trees and the fold promotions that extend
//! symbol-level maps to words and trees.

mod fold;
mod label;
mod monoid;
mod semiring;
mod tree;

pub use fold::{tree_fold, word_fold, word_fold_apply};
pub use label::Label;
pub use monoid::{Monoid, Product, Sum};
pub use semiring::StarSemiring;
pub use tree::{enumerate_trees, random_tree, RankedSymbol, RankedTree};

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

/// Bound shared by everything stored in a container or used as a state.
pub trait Elem: Clone + Ord + Hash + Debug + Send + Sync + 'static {}
impl<T: Clone + Ord + Hash + Debug + Send + Sync + 'static> Elem for T {}

/// Tagged disjoint sum, used for sum-of-automata state types.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Either<L, R> {
    Left(L),
    Right(R),
}

impl<L: Display, R: Display> Display for Either<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Either::Left(l) => write!(f, "L({l})"),
            Either::Right(r) => write!(f, "R({r})"),
        }
    }
}

/// A symbol occurrence tagged with its index in a linearized expression.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Positioned<S> {
    pub index: usize,
    pub base: S,
}

impl<S> Positioned<S> {
    pub fn new(index: usize, base: S) -> Self {
        Positioned { index, base }
    }
}

impl<S: Display> Display for Positioned<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, self.index)
    }
}

/// Ranked symbols and their positioned copies both expose an arity.
pub trait Ranked {
    fn arity(&self) -> usize;
}

impl Ranked for RankedSymbol {
    fn arity(&self) -> usize {
        self.arity
    }
}

impl<S: Ranked> Ranked for Positioned<S> {
    fn arity(&self) -> usize {
        self.base.arity()
    }
}
