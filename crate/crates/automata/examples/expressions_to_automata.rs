//! One word expression, three constructions, several weight semantics.

use kleisli_automata::containers::{BoolExprs, Linear, Sets};
use kleisli_automata::word_automata::{explore, Caps};
use kleisli_automata::word_expressions::{
    all_words, derivation_automaton, inductive_automaton, parse_expression, position_automaton,
};

fn main() -> kleisli_automata::Result<()> {
    let text = "(a+b)*.a.(a+b)";
    let alphabet = ['a', 'b'];

    let e = parse_expression::<bool>(text)?;
    let (pos, _) = position_automaton::<Sets, char>(&e)?.expect("simple expression");
    let der = derivation_automaton::<Sets, char>(&e);
    let ind = inductive_automaton::<Sets, char>(&e)?.expect("no function operator");
    for w in all_words(&alphabet, 3) {
        let s: String = w.iter().collect();
        println!("{s:4} positions {:5} derivation {:5} inductive {}", pos.weight(&w)?, der.weight(&w)?, ind.weight(&w)?);
    }
    print!("{}", explore(&der, &alphabet, Caps::default())?.to_dot());

    // counting runs instead of deciding membership
    let e = parse_expression::<i64>("([2]:a + b)*.a")?;
    let (pos, _) = position_automaton::<Linear<i64>, char>(&e)?.expect("simple expression");
    println!("int weight of aba: {}", pos.weight(&['a', 'b', 'a'])?);

    // complement and intersection through alternation
    let e = parse_expression::<bool>("~(a*) & (a+b)*")?;
    let alt = derivation_automaton::<BoolExprs, char>(&e);
    println!("~(a*) & (a+b)* on aa: {}, on ab: {}", alt.weight(&['a', 'a'])?, alt.weight(&['a', 'b'])?);
    Ok(())
}
