//! An alternating automaton waiting for every letter, and the NFA over its
//! clauses.

use kleisli_automata::word_automata::fixtures::afa_all_letters;
use kleisli_automata::word_automata::{afa_to_nfa, explore, Caps};

fn main() -> kleisli_automata::Result<()> {
    let letters = ['A', 'B', 'C', 'D', 'E'];
    let afa = afa_all_letters(&letters);
    let nfa = afa_to_nfa(&afa)?;
    for w in ["ABCDE", "EDCBA", "ABCD", "AABBCCDDE"] {
        let w: Vec<char> = w.chars().collect();
        println!("{}: afa {} nfa {}", w.iter().collect::<String>(), afa.recognizes(&w)?, nfa.recognizes(&w)?);
    }
    let afa_states = explore(&afa, &letters, Caps::default())?.states.len();
    let ex = explore(&nfa, &letters, Caps::default())?;
    println!("afa: {afa_states} states, clause nfa: {} states, {} edges", ex.states.len(), ex.edge_count());
    Ok(())
}
