//! Enriched expressions: rational expressions over tree atoms `f(v1,...,vn)`
//! with substitution and iteration indexed by variables. Words are the
//! unary case with the single variable `()`.

mod analysis;
mod ast;
mod derivation;
mod inductive;
mod parse;
mod positions;
mod random;

pub use analysis::{final_symbols, final_weight, nullable_var, predecessors, substitute, variables_of};
pub use ast::{AtomOps, EnrichedExpr, TreeAtom, TreeExp, WordAtom, WordExp};
pub use derivation::{
    enriched_derive, left_derive, simplify, tree_derivation_automaton, word_derivation_automaton,
    word_left_derivation_automaton,
};
pub use inductive::{
    tree_inductive_automaton, word_inductive_automaton, EnrichedInductiveState, TreeInductiveAutomaton,
    WordInductiveAutomaton,
};
pub use parse::{from_word_expression, parse_tree_expression, print_tree_expression, to_word_expression};
pub use positions::{
    tree_position_automaton, word_position_automaton, word_position_automaton_forward, TreePositionState,
    WordPositionState,
};
pub use random::{
    default_tree_palette, random_member, random_tree_expression, random_tree_expression_with, random_word_expression,
};
