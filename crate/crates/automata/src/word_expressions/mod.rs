//! Rational word expressions with generic operators, and the three
//! container-parametric automaton constructions: inductive, positions and
//! derivation.

mod ast;
mod derivation;
mod glushkov;
mod inductive;
mod nullable;
mod oracle;
mod parse;
mod random;

pub use ast::{Fixity, FunOp, Operator, OperatorTable, PositionedExpr, WordExpr};
pub use derivation::{derivation_automaton, derive, derive_by_word, normalize, DerivConfig, Derivable, Expr};
pub use glushkov::{
    glushkov_functions, has_positions, linearize, linearize_from, position_automaton, GlushkovData,
    GlushkovState, PositionAutomaton,
};
pub use inductive::{inductive_automaton, InductiveAutomaton, InductiveState};
pub use nullable::nullable;
pub use oracle::{brute_force_language, oracle_weight};
pub use parse::{default_operators, parse_expression, parse_with, print_expression};
pub use random::{all_words, random_expression, random_expression_with, random_word, Palette};

#[cfg(test)]
mod tests;
