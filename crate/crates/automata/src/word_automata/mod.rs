//! Word automata over an arbitrary effect container, their semantics and
//! the classic constructions on them.

mod algorithms;
mod automaton;
mod combine;
mod explore;
pub mod fixtures;
mod pda;
mod writer;

pub use algorithms::{
    afa_to_complete_dfa, afa_to_nfa, bool_combination, complement, complete, determinize, dfa_and,
    dfa_or, dfa_product, modular_dfa, nfa_to_partial_dfa, to_k_dfa, Afa, Dfa, Nfa, PartialDfa,
};
pub use automaton::{chars, Delta, Finality, WordAutomaton};
pub use combine::{
    concatenate, epsilon_weight, hadamard, intersection, kleene_star, parallel_product,
    scale_left, scale_right, sum_weighted, union, ParallelProduct,
};
pub use explore::{explore, to_dot, Caps, ExploreError, ExploreResult, Exploration, TransitionRecord};
pub use pda::{make_pda, PushdownAutomaton, StackTrans};
pub use writer::{is_vowel, sequential_pair_automaton, CountOut};

#[cfg(test)]
mod tests;
