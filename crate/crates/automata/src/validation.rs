//! Cross-method validation: random expressions are turned into automata by
//! every applicable construction and weight semantics, and the weights are
//! compared on random probes.

use crate::algebra::{RankedSymbol, RankedTree, StarSemiring};
use crate::containers::{Linear, Semimodule, Sets};
use crate::enriched::{
    self, default_tree_palette, random_member, random_tree_expression_with, EnrichedExpr, TreeExp, WordExp,
};
use crate::word_expressions::{
    brute_force_language, derivation_automaton, inductive_automaton, position_automaton, print_expression,
    random_expression_with, random_word, Derivable, Operator, Palette, WordExpr,
};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarnessKind {
    Words,
    Trees,
}

impl fmt::Display for HarnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HarnessKind::Words => "word",
            HarnessKind::Trees => "tree",
        })
    }
}

/// Deliberate bugs for checking that the harness notices them. Each one
/// builds a single construction from a mutated clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// The word derivation automaton reads concatenations backwards.
    SwappedConcat,
    /// The word derivation automaton unfolds each star at most once.
    ShallowStar,
    /// The tree inductive automaton exchanges the operands of substitutions.
    SwappedSub,
    /// The tree inductive automaton unfolds each star at most once.
    ShallowTreeStar,
}

#[derive(Clone, Debug)]
pub struct ValidationConfig {
    pub instances: usize,
    pub probes: usize,
    pub seed: u64,
    /// Operators of word expressions, nodes of tree expressions (upper bound).
    pub size: usize,
    /// Word length or tree depth of the probes.
    pub max_probe: usize,
    pub alphabet: Vec<char>,
    pub palette: Vec<RankedSymbol>,
    pub fault: Option<Fault>,
}

impl ValidationConfig {
    pub fn words() -> Self {
        ValidationConfig {
            instances: 100,
            probes: 100,
            seed: 0,
            size: 10,
            max_probe: 10,
            alphabet: vec!['a', 'b', 'c'],
            palette: default_tree_palette(),
            fault: None,
        }
    }

    pub fn trees() -> Self {
        ValidationConfig { size: 8, max_probe: 5, ..Self::words() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub probe: String,
    pub first: (String, String),
    pub second: (String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Disagreement(Counterexample),
    Error(String),
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub index: usize,
    pub seed: u64,
    pub weights: &'static str,
    pub expression: String,
    pub methods: Vec<String>,
    pub probes: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub kind: HarnessKind,
    pub seed: u64,
    pub instances: Vec<InstanceReport>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.outcome == Outcome::Passed)
    }

    pub fn failures(&self) -> Vec<&InstanceReport> {
        self.instances.iter().filter(|i| i.outcome != Outcome::Passed).collect()
    }

    /// Number of (probe, method) weights compared against the first method.
    pub fn comparisons(&self) -> usize {
        self.instances.iter().map(|i| i.probes * i.methods.len().saturating_sub(1)).sum()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failures = self.failures();
        writeln!(
            f,
            "{} harness, seed {}: {} runs, {} passed, {} failed, {} comparisons",
            self.kind,
            self.seed,
            self.instances.len(),
            self.instances.len() - failures.len(),
            failures.len(),
            self.comparisons()
        )?;
        for i in failures {
            write!(f, "FAIL #{} {} seed={} {}: ", i.index, i.weights, i.seed, i.expression)?;
            match &i.outcome {
                Outcome::Disagreement(c) => writeln!(
                    f,
                    "on {} {} gives {} but {} gives {}",
                    c.probe, c.first.0, c.first.1, c.second.0, c.second.1
                )?,
                Outcome::Error(e) => writeln!(f, "{e}")?,
                Outcome::Passed => writeln!(f)?,
            }
        }
        Ok(())
    }
}

type Method<'a, P, W> = (String, Box<dyn Fn(&P) -> Result<W> + 'a>);

fn compare<P, W: PartialEq + fmt::Debug>(
    methods: &[Method<'_, P, W>],
    probes: &[P],
    show: &dyn Fn(&P) -> String,
) -> Outcome {
    for p in probes {
        let mut first: Option<(String, W)> = None;
        for (name, m) in methods {
            let w = match m(p) {
                Ok(w) => w,
                Err(e) => return Outcome::Error(format!("{name} on {}: {e}", show(p))),
            };
            match &first {
                None => first = Some((name.clone(), w)),
                Some((n0, w0)) if *w0 != w => {
                    return Outcome::Disagreement(Counterexample {
                        probe: show(p),
                        first: (n0.clone(), format!("{w0:?}")),
                        second: (name.clone(), format!("{w:?}")),
                    })
                }
                Some(_) => {}
            }
        }
    }
    Outcome::Passed
}

fn instance_seeds(cfg: &ValidationConfig) -> Vec<u64> {
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.instances).map(|_| master.gen()).collect()
}

/// Word harness: inductive, positions and derivation constructions, plus
/// the enriched constructions (both position variants, right and left
/// derivation, inductive) when the expression only uses sums, products and
/// stars. Each instance runs under boolean and integer weights; integer
/// expressions whose stars are undefined are redrawn.
pub fn validate_words(cfg: &ValidationConfig) -> ValidationReport {
    let mut out = Vec::new();
    for (index, seed) in instance_seeds(cfg).into_iter().enumerate() {
        out.push(word_instance::<Sets>(cfg, index, seed, "bool"));
        out.push(word_instance::<Linear<i64>>(cfg, index, seed, "int"));
    }
    ValidationReport { kind: HarnessKind::Words, seed: cfg.seed, instances: out }
}

fn word_instance<E: Semimodule + Derivable<char>>(
    cfg: &ValidationConfig,
    index: usize,
    seed: u64,
    weights: &'static str,
) -> InstanceReport
where
    E::Out: StarSemiring,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let palette = if index.is_multiple_of(2) { Palette::SIMPLE } else { Palette::WEIGHTED };
    let mut e: WordExpr<E::Out, char> = WordExpr::Empty;
    let mut found = false;
    for _ in 0..1000 {
        let ops = rng.gen_range(1..=cfg.size.max(1));
        e = random_expression_with(&mut rng, ops, &cfg.alphabet, palette);
        // the constant terms are computed exactly when the stars exist
        if brute_force_language(&e, &cfg.alphabet, 0).is_ok() {
            found = true;
            break;
        }
    }
    let mut report = InstanceReport {
        index,
        seed,
        weights,
        expression: print_expression(&e),
        methods: Vec::new(),
        probes: 0,
        outcome: Outcome::Passed,
    };
    if !found {
        report.outcome = Outcome::Error("no expression with defined stars".into());
        return report;
    }
    let methods = match word_methods::<E>(&e, cfg.fault) {
        Ok(m) => m,
        Err(err) => {
            report.outcome = Outcome::Error(format!("construction failed: {err}"));
            return report;
        }
    };
    let probes: Vec<Vec<char>> = (0..cfg.probes).map(|_| random_word(&mut rng, &cfg.alphabet, cfg.max_probe)).collect();
    report.methods = methods.iter().map(|m| m.0.clone()).collect();
    report.probes = probes.len();
    report.outcome = compare(&methods, &probes, &|w: &Vec<char>| format!("\"{}\"", w.iter().collect::<String>()));
    report
}

fn word_methods<E: Semimodule + Derivable<char>>(
    e: &WordExpr<E::Out, char>,
    fault: Option<Fault>,
) -> Result<Vec<Method<'static, Vec<char>, E::Out>>>
where
    E::Out: StarSemiring,
{
    let mut ms: Vec<Method<'static, Vec<char>, E::Out>> = Vec::new();
    let ind = inductive_automaton::<E, char>(e)?.ok_or_else(|| Error::Unsupported("inductive".into()))?;
    ms.push(("inductive".into(), Box::new(move |w| ind.weight(w))));
    if let Some((pos, _)) = position_automaton::<E, char>(e)? {
        ms.push(("positions".into(), Box::new(move |w| pos.weight(w))));
    }
    let target = match fault {
        Some(Fault::SwappedConcat) => mutate_word(e, Fault::SwappedConcat),
        Some(Fault::ShallowStar) => mutate_word(e, Fault::ShallowStar),
        _ => e.clone(),
    };
    let der = derivation_automaton::<E, char>(&target);
    ms.push(("derivation".into(), Box::new(move |w| der.weight(w))));
    if let Ok(en) = enriched::from_word_expression(e) {
        let en: WordExp<char> = en;
        let p = enriched::word_position_automaton::<E, char>(&en)?;
        ms.push(("enriched-positions".into(), Box::new(move |w| p.weight(w))));
        let p = enriched::word_position_automaton_forward::<E, char>(&en)?;
        ms.push(("enriched-positions-forward".into(), Box::new(move |w| p.weight(w))));
        let d = enriched::word_derivation_automaton::<E, char>(&en);
        ms.push(("enriched-derivation".into(), Box::new(move |w| d.weight(w))));
        let d = enriched::word_left_derivation_automaton::<E, char>(&en);
        ms.push(("enriched-left-derivation".into(), Box::new(move |w| d.weight(w))));
        let i = enriched::word_inductive_automaton::<E, char>(&en)?;
        ms.push(("enriched-inductive".into(), Box::new(move |w| i.weight(w))));
    }
    Ok(ms)
}

fn mutate_word<W: StarSemiring>(e: &WordExpr<W, char>, fault: Fault) -> WordExpr<W, char> {
    match e {
        WordExpr::Op(op, es) => {
            let es: Vec<_> = es.iter().map(|x| mutate_word(x, fault)).collect();
            match (op, fault) {
                (Operator::Concat, Fault::SwappedConcat) => WordExpr::concat(es[1].clone(), es[0].clone()),
                (Operator::Star, Fault::ShallowStar) => WordExpr::plus(WordExpr::Epsilon, es[0].clone()),
                _ => WordExpr::Op(op.clone(), es),
            }
        }
        other => other.clone(),
    }
}

type TreeProbe = (RankedTree, Vec<String>);

/// Tree harness: the top-down derivation and position automata and the
/// bottom-up inductive automaton, under boolean and integer weights. Half
/// of the probes are sampled from the language of the expression, the
/// other half are random trees; every probe has depth at most
/// `max_probe`. Even instances only denote trees without holes.
pub fn validate_trees(cfg: &ValidationConfig) -> ValidationReport {
    let mut out = Vec::new();
    for (index, seed) in instance_seeds(cfg).into_iter().enumerate() {
        out.push(tree_instance::<Sets>(cfg, index, seed, "bool"));
        out.push(tree_instance::<Linear<i64>>(cfg, index, seed, "int"));
    }
    ValidationReport { kind: HarnessKind::Trees, seed: cfg.seed, instances: out }
}

fn tree_instance<E: Semimodule>(cfg: &ValidationConfig, index: usize, seed: u64, weights: &'static str) -> InstanceReport
where
    E::Out: StarSemiring,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = ["x".to_string(), "y".to_string()];
    let closed = index.is_multiple_of(2);
    let mut report = InstanceReport {
        index,
        seed,
        weights,
        expression: String::new(),
        methods: Vec::new(),
        probes: 0,
        outcome: Outcome::Passed,
    };
    let mut built = None;
    for _ in 0..1000 {
        let size = rng.gen_range(1..=cfg.size.max(1));
        let e = random_tree_expression_with(&mut rng, size, &cfg.palette, &vars, closed);
        match tree_methods::<E>(&e, cfg.fault) {
            Ok(ms) => {
                built = Some((e, ms));
                break;
            }
            Err(Error::NotStarrable(_)) => continue,
            Err(err) => {
                report.expression = e.to_string();
                report.outcome = Outcome::Error(format!("construction failed: {err}"));
                return report;
            }
        }
    }
    let Some((e, methods)) = built else {
        report.outcome = Outcome::Error("no expression with defined stars".into());
        return report;
    };
    report.expression = e.to_string();
    let mut probes: Vec<TreeProbe> = Vec::new();
    while probes.len() < cfg.probes {
        let member = if probes.len().is_multiple_of(2) { random_member(&mut rng, &e, cfg.max_probe) } else { None };
        probes.push(member.unwrap_or_else(|| (crate::algebra::random_tree(&mut rng, &cfg.palette, cfg.max_probe), Vec::new())));
    }
    report.methods = methods.iter().map(|m| m.0.clone()).collect();
    report.probes = probes.len();
    report.outcome = compare(&methods, &probes, &|(t, sigma): &TreeProbe| {
        if sigma.is_empty() {
            t.to_string()
        } else {
            format!("{t} [{}]", sigma.join(","))
        }
    });
    report
}

fn tree_methods<E: Semimodule>(e: &TreeExp<String>, fault: Option<Fault>) -> Result<Vec<Method<'static, TreeProbe, E::Out>>>
where
    E::Out: StarSemiring,
{
    let td = enriched::tree_derivation_automaton::<E, String>(e);
    let tp = enriched::tree_position_automaton::<E, String>(e)?;
    let target = match fault {
        Some(f @ (Fault::SwappedSub | Fault::ShallowTreeStar)) => mutate_tree(e, f),
        _ => e.clone(),
    };
    let bu = enriched::tree_inductive_automaton::<E, String>(&target)?;
    Ok(vec![
        ("derivation".into(), Box::new(move |(t, s): &TreeProbe| td.weight_with_vars(t, s))),
        ("positions".into(), Box::new(move |(t, s): &TreeProbe| tp.weight_with_vars(t, s))),
        ("inductive".into(), Box::new(move |(t, s): &TreeProbe| bu.weight_with_vars(t, s))),
    ])
}

fn mutate_tree(e: &TreeExp<String>, fault: Fault) -> TreeExp<String> {
    let m = |x: &TreeExp<String>| mutate_tree(x, fault);
    match e {
        EnrichedExpr::Sum(a, b) => EnrichedExpr::sum(m(a), m(b)),
        EnrichedExpr::Sub(v, a, b) if fault == Fault::SwappedSub => EnrichedExpr::sub(v.clone(), m(b), m(a)),
        EnrichedExpr::Sub(v, a, b) => EnrichedExpr::sub(v.clone(), m(a), m(b)),
        EnrichedExpr::Star(v, a) if fault == Fault::ShallowTreeStar => {
            EnrichedExpr::sum(EnrichedExpr::Var(v.clone()), m(a))
        }
        EnrichedExpr::Star(v, a) => EnrichedExpr::star(v.clone(), m(a)),
        other => other.clone(),
    }
}
