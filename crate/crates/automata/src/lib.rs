//! Automata whose transitions produce effect containers.
//!
//! A word automaton here is an initial configuration, a transition map
//! `(symbol, state) -> C<state>` and a finality map, where `C` is one of the
//! containers in [`containers`]: optional values, finite sets, linear
//! combinations, boolean or function expression trees, monoid outputs. The
//! same container parameter drives the expression constructions in
//! [`word_expressions`] and [`enriched`], and the tree automata in
//! [`tree_automata`].

#![allow(clippy::type_complexity)]

pub mod algebra;
pub mod containers;
pub mod enriched;
pub mod error;
pub mod tree_automata;
pub mod validation;
pub mod word_automata;
pub mod word_expressions;

pub use error::{Error, Result};
