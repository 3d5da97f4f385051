//! The cross-method harness, clean and with a planted fault.

use kleisli_automata::validation::{validate_trees, validate_words, Fault, ValidationConfig};

fn main() {
    let words = ValidationConfig { instances: 20, ..ValidationConfig::words() };
    print!("{}", validate_words(&words));
    let trees = ValidationConfig { instances: 20, ..ValidationConfig::trees() };
    print!("{}", validate_trees(&trees));

    let broken = ValidationConfig { instances: 5, fault: Some(Fault::ShallowStar), ..ValidationConfig::words() };
    let report = validate_words(&broken);
    print!("{report}");
    println!("fault caught: {}", !report.passed());
}
