use super::WordAutomaton;
use crate::algebra::{Elem, Label};
use crate::containers::Effect;
use crate::{Error, Result};
use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write;

/// Exploration budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_states: usize,
    pub max_depth: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_states: 100_000, max_depth: usize::MAX }
    }
}

impl Caps {
    pub fn states(max_states: usize) -> Self {
        Caps { max_states, ..Caps::default() }
    }
}

/// One computed transition.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionRecord<C, Sym, S> {
    pub source: S,
    pub symbol: Sym,
    pub target: C,
}

/// The accessible part of an automaton, in discovery order.
#[derive(Clone, Debug, PartialEq)]
pub struct Exploration<E: Effect, Sym: Elem, S: Elem> {
    pub initial: E::C<S>,
    pub states: Vec<S>,
    pub finals: Vec<E::Out>,
    pub transitions: Vec<TransitionRecord<E::C<S>, Sym, S>>,
    pub truncated: bool,
}

/// Exploration failure: either the budget ran out (the partial result is
/// kept) or a transition failed.
#[derive(Debug)]
pub enum ExploreError<X> {
    Truncated { partial: X, limit: usize },
    Failed(Error),
}

impl<X> From<Error> for ExploreError<X> {
    fn from(e: Error) -> Self {
        ExploreError::Failed(e)
    }
}

impl<X> std::fmt::Display for ExploreError<X> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExploreError::Truncated { limit, .. } => write!(f, "exploration stopped at the cap of {limit}"),
            ExploreError::Failed(e) => write!(f, "{e}"),
        }
    }
}

impl<X> From<ExploreError<X>> for Error {
    fn from(e: ExploreError<X>) -> Self {
        match e {
            ExploreError::Truncated { limit, .. } => Error::CapExceeded { found: limit + 1, limit },
            ExploreError::Failed(e) => e,
        }
    }
}

pub type ExploreResult<E, Sym, S> =
    std::result::Result<Exploration<E, Sym, S>, ExploreError<Exploration<E, Sym, S>>>;

/// Breadth-first closure of the states reachable from the initial
/// configuration.
pub fn explore<E: Effect, Sym: Elem, S: Elem>(
    aut: &WordAutomaton<E, Sym, S>,
    alphabet: &[Sym],
    caps: Caps,
) -> ExploreResult<E, Sym, S> {
    let mut index: BTreeMap<S, usize> = BTreeMap::new();
    let mut ex = Exploration {
        initial: aut.initial.clone(),
        states: Vec::new(),
        finals: Vec::new(),
        transitions: Vec::new(),
        truncated: false,
    };
    let mut queue = VecDeque::new();
    let mut overflow = false;
    let mut visit = |s: &S, depth: usize, ex: &mut Exploration<E, Sym, S>, queue: &mut VecDeque<(S, usize)>| -> Result<()> {
        if index.contains_key(s) {
            return Ok(());
        }
        if ex.states.len() >= caps.max_states || depth > caps.max_depth {
            overflow = true;
            return Ok(());
        }
        index.insert(s.clone(), ex.states.len());
        ex.states.push(s.clone());
        ex.finals.push(aut.final_weight(s)?);
        queue.push_back((s.clone(), depth));
        Ok(())
    };
    for s in E::support(&aut.initial) {
        visit(&s, 0, &mut ex, &mut queue)?;
    }
    while let Some((s, depth)) = queue.pop_front() {
        for sym in alphabet {
            let target = aut.step(sym, &s)?;
            for t in E::support(&target) {
                visit(&t, depth + 1, &mut ex, &mut queue)?;
            }
            ex.transitions.push(TransitionRecord { source: s.clone(), symbol: sym.clone(), target });
        }
    }
    if overflow {
        ex.truncated = true;
        let limit = caps.max_states.min(caps.max_depth);
        return Err(ExploreError::Truncated { partial: ex, limit });
    }
    Ok(ex)
}

impl<E: Effect, Sym: Elem + Label, S: Elem + Label> Exploration<E, Sym, S> {
    fn numbering(&self) -> (Vec<usize>, BTreeMap<S, usize>) {
        let mut order: Vec<usize> = (0..self.states.len()).collect();
        order.sort_by_key(|&i| (self.states[i].label(), i));
        let ids = order.iter().enumerate().map(|(n, &i)| (self.states[i].clone(), n)).collect();
        (order, ids)
    }

    /// Graphviz text: nodes sorted by label, numbered `n0, n1, ...`.
    pub fn to_dot(&self) -> String {
        let (order, ids) = self.numbering();
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        if !self.states.is_empty() {
            out.push_str("  init [shape=point];\n");
        }
        for (n, &i) in order.iter().enumerate() {
            let s = &self.states[i];
            let w = &self.finals[i];
            let shape = if E::out_is_zero(w) { "circle" } else { "doublecircle" };
            let _ = writeln!(
                out,
                "  n{n} [label=\"{}\", shape={shape}, final=\"{}\"];",
                escape(&s.label()),
                escape(&E::out_label(w))
            );
        }
        let mut inits: Vec<String> = E::edges(&self.initial)
            .into_iter()
            .filter_map(|(s, w)| ids.get(&s).map(|n| edge("init".into(), format!("n{n}"), None, w)))
            .collect();
        inits.sort();
        for line in inits {
            out.push_str(&line);
        }
        let mut lines = Vec::new();
        for t in &self.transitions {
            let src = ids[&t.source];
            for (tgt, w) in E::edges(&t.target) {
                if let Some(n) = ids.get(&tgt) {
                    lines.push((src, *n, edge(format!("n{src}"), format!("n{n}"), Some(t.symbol.label()), w)));
                }
            }
        }
        lines.sort();
        for (_, _, line) in lines {
            out.push_str(&line);
        }
        out.push_str("}\n");
        out
    }

    /// One line per transition and weight group: `src --sym/w--> {targets}`.
    pub fn dump(&self) -> String {
        let mut lines = Vec::new();
        for t in &self.transitions {
            for (w, targets) in E::dump_groups(&t.target, &|s: &S| s.label()) {
                let arrow = match w {
                    Some(w) => format!("{}/{}", t.symbol.label(), w),
                    None => t.symbol.label(),
                };
                lines.push(format!("{} --{}--> {}", t.source.label(), arrow, targets));
            }
        }
        lines.sort();
        let mut out = String::new();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.transitions.iter().map(|t| E::edges(&t.target).len()).sum()
    }
}

fn edge(src: String, dst: String, sym: Option<String>, w: Option<String>) -> String {
    let label = match (sym, w) {
        (Some(s), Some(w)) => format!("{s}/{w}"),
        (Some(s), None) => s,
        (None, Some(w)) => w,
        (None, None) => return format!("  {src} -> {dst};\n"),
    };
    format!("  {src} -> {dst} [label=\"{}\"];\n", escape(&label))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT of the accessible part, or empty graph text when the automaton has
/// no initial state.
pub fn to_dot<E: Effect, Sym: Elem + Label, S: Elem + Label>(
    aut: &WordAutomaton<E, Sym, S>,
    alphabet: &[Sym],
    caps: Caps,
) -> Result<String> {
    Ok(explore(aut, alphabet, caps)?.to_dot())
}
