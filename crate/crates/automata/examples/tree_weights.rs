//! Weights on trees: height times size with a multi-operator automaton, and
//! pattern occurrences counted top-down.

use kleisli_automata::algebra::{Monoid, Product};
use kleisli_automata::tree_automata::fixtures::{height_width_automaton, height_width_trees, occurrence_trees};
use kleisli_automata::tree_automata::occurrence_automaton;

fn main() -> kleisli_automata::Result<()> {
    let hw = height_width_automaton();
    let ([a1, a2, a3], var) = height_width_trees();
    println!("{a1}: {}", hw.weight(&a1)?.0);
    println!("{a2}: {}", hw.weight(&a2)?.0);
    // the hole reads the variable as height 1 and width its length
    let w3 = hw.weight_apply(&a3, std::slice::from_ref(&var), &[Product::neutral()])?;
    println!("{a3} with _ = {var:?}: {}", w3.0);

    let (subject, patterns) = occurrence_trees()?;
    let occ = occurrence_automaton(&subject)?;
    for p in &patterns {
        println!("occurrences of {p}: {}", occ.weight(p)?);
    }
    Ok(())
}
