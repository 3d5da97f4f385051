//! Pushdown automata as automata in a stack context: A^n B^(n+1)
//! deterministically, and A^n B^(2n+1) added nondeterministically.

use kleisli_automata::word_automata::fixtures::{dpda, npda};

fn main() -> kleisli_automata::Result<()> {
    let (det, nondet) = (dpda(), npda());
    for w in ["B", "ABB", "AABBB", "AB", "ABBB", "AABBBBB", "BA"] {
        let w: Vec<char> = w.chars().collect();
        println!(
            "{:8} deterministic {:5} nondeterministic {}",
            w.iter().collect::<String>(),
            det.empty_stack_recognizes(&w)?,
            nondet.empty_stack_recognizes(&w)?
        );
    }
    Ok(())
}
