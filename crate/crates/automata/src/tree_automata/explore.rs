use super::{BottomUpContainerTA, BottomUpDetTA};
use crate::algebra::{Elem, Label, RankedSymbol, StarSemiring};
use crate::containers::Effect;
use crate::word_automata::{Caps, ExploreError};
use crate::Result;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

/// Bottom-up transitions as seen by exploration.
pub trait TreeTransitions {
    type State: Elem + Label;

    /// Targets with optional weight labels.
    fn fire(&self, f: &RankedSymbol, qs: &[Self::State]) -> Result<Vec<(Self::State, Option<String>)>>;

    /// Final weight label, `None` when not final.
    fn final_label(&self, q: &Self::State) -> Result<Option<String>>;
}

impl<Var: 'static, S: Elem + Label, W: StarSemiring> TreeTransitions for BottomUpDetTA<Var, S, W> {
    type State = S;
    fn fire(&self, f: &RankedSymbol, qs: &[S]) -> Result<Vec<(S, Option<String>)>> {
        Ok(vec![((self.delta)(f, qs)?, None)])
    }
    fn final_label(&self, q: &S) -> Result<Option<String>> {
        let w = (self.finality)(q)?;
        Ok(if w.is_zero() { None } else { Some(w.to_string()) })
    }
}

impl<E: Effect, Var: 'static, S: Elem + Label> TreeTransitions for BottomUpContainerTA<E, Var, S> {
    type State = S;
    fn fire(&self, f: &RankedSymbol, qs: &[S]) -> Result<Vec<(S, Option<String>)>> {
        Ok(E::edges(&(self.delta)(f, qs)?))
    }
    fn final_label(&self, q: &S) -> Result<Option<String>> {
        let w = (self.finality)(q)?;
        Ok(if E::out_is_zero(&w) { None } else { Some(E::out_label(&w)) })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TreeTransition<S> {
    pub symbol: RankedSymbol,
    pub sources: Vec<S>,
    pub targets: Vec<(S, Option<String>)>,
}

/// Accessible states of a bottom-up automaton, in discovery order, with
/// every nonempty transition between them.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeExploration<S> {
    pub states: Vec<S>,
    pub finals: Vec<Option<String>>,
    pub transitions: Vec<TreeTransition<S>>,
    pub truncated: bool,
}

/// Saturation from the nullary symbols: symbols are fired over every
/// tuple of known states until no new state appears.
pub fn tree_explore<A: TreeTransitions>(
    aut: &A,
    alphabet: &[RankedSymbol],
    caps: Caps,
) -> std::result::Result<TreeExploration<A::State>, ExploreError<TreeExploration<A::State>>> {
    let mut ex = TreeExploration { states: Vec::new(), finals: Vec::new(), transitions: Vec::new(), truncated: false };
    let mut known: BTreeSet<A::State> = BTreeSet::new();
    let mut fired: BTreeSet<(RankedSymbol, Vec<A::State>)> = BTreeSet::new();
    let mut overflow = false;
    loop {
        let snapshot = ex.states.clone();
        let mut grew = false;
        for f in alphabet {
            for qs in tuples(&snapshot, f.arity) {
                if !fired.insert((f.clone(), qs.clone())) {
                    continue;
                }
                let targets = aut.fire(f, &qs)?;
                for (t, _) in &targets {
                    if known.contains(t) {
                        continue;
                    }
                    if ex.states.len() >= caps.max_states {
                        overflow = true;
                        continue;
                    }
                    known.insert(t.clone());
                    ex.finals.push(aut.final_label(t)?);
                    ex.states.push(t.clone());
                    grew = true;
                }
                if !targets.is_empty() {
                    ex.transitions.push(TreeTransition { symbol: f.clone(), sources: qs, targets });
                }
            }
        }
        if overflow {
            ex.truncated = true;
            return Err(ExploreError::Truncated { partial: ex, limit: caps.max_states });
        }
        if !grew {
            return Ok(ex);
        }
    }
}

fn tuples<S: Clone>(states: &[S], n: usize) -> Vec<Vec<S>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut grown = Vec::new();
        for t in &out {
            for s in states {
                let mut t2 = t.clone();
                t2.push(s.clone());
                grown.push(t2);
            }
        }
        out = grown;
    }
    out
}

impl<S: Elem + Label> TreeExploration<S> {
    fn ids(&self) -> BTreeMap<S, usize> {
        let mut order: Vec<usize> = (0..self.states.len()).collect();
        order.sort_by_key(|&i| (self.states[i].label(), i));
        order.iter().enumerate().map(|(n, &i)| (self.states[i].clone(), n)).collect()
    }

    fn sorted_transitions(&self) -> Vec<&TreeTransition<S>> {
        let mut ts: Vec<&TreeTransition<S>> = self.transitions.iter().collect();
        ts.sort_by_key(|t| (t.symbol.name.clone(), t.symbol.arity, t.sources.label()));
        ts
    }

    /// Graphviz text. Nullary transitions start from a point, unary ones
    /// are plain edges, and wider ones go through a fan node `t<i>` whose
    /// incoming edges are numbered by argument position.
    pub fn to_dot(&self) -> String {
        let ids = self.ids();
        let mut out = String::from("digraph tree_automaton {\n  rankdir=LR;\n");
        let mut nodes: Vec<(usize, String)> = Vec::new();
        for (i, s) in self.states.iter().enumerate() {
            let shape = if self.finals[i].is_some() { "doublecircle" } else { "circle" };
            let fin = self.finals[i].clone().unwrap_or_default();
            nodes.push((ids[s], format!("  n{} [label=\"{}\", shape={shape}, final=\"{}\"];\n", ids[s], escape(&s.label()), escape(&fin))));
        }
        nodes.sort();
        for (_, line) in nodes {
            out.push_str(&line);
        }
        for (i, t) in self.sorted_transitions().into_iter().enumerate() {
            let name = escape(&t.symbol.name);
            let mut targets: Vec<(usize, Option<String>)> =
                t.targets.iter().filter_map(|(q, w)| ids.get(q).map(|n| (*n, w.clone()))).collect();
            targets.sort();
            let label = |w: &Option<String>, base: &str| match w {
                Some(w) => format!(" [label=\"{}\"]", escape(&format!("{base}{w}"))),
                None if base.is_empty() => String::new(),
                None => format!(" [label=\"{}\"]", escape(base.trim_end_matches('/'))),
            };
            match t.sources.len() {
                0 => {
                    let _ = writeln!(out, "  t{i} [shape=point];");
                    for (n, w) in &targets {
                        let _ = writeln!(out, "  t{i} -> n{n}{};", label(w, &format!("{name}/")));
                    }
                }
                1 => {
                    let src = ids[&t.sources[0]];
                    for (n, w) in &targets {
                        let _ = writeln!(out, "  n{src} -> n{n}{};", label(w, &format!("{name}/")));
                    }
                }
                _ => {
                    let _ = writeln!(out, "  t{i} [shape=box, label=\"{name}\"];");
                    for (k, q) in t.sources.iter().enumerate() {
                        let _ = writeln!(out, "  n{} -> t{i} [label=\"{}\"];", ids[q], k + 1);
                    }
                    for (n, w) in &targets {
                        let _ = writeln!(out, "  t{i} -> n{n}{};", label(w, ""));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// One sorted line per transition and weight group:
    /// `(q1,...,qn) --f--> {targets}`.
    pub fn dump(&self) -> String {
        let mut lines = Vec::new();
        for t in &self.transitions {
            let mut groups: BTreeMap<Option<String>, Vec<String>> = BTreeMap::new();
            for (q, w) in &t.targets {
                groups.entry(w.clone()).or_default().push(q.label());
            }
            for (w, mut qs) in groups {
                qs.sort();
                let arrow = match w {
                    Some(w) => format!("{}/{}", t.symbol.name, w),
                    None => t.symbol.name.clone(),
                };
                lines.push(format!("{} --{}--> {{{}}}", t.sources.label(), arrow, qs.join(",")));
            }
        }
        lines.sort();
        lines.into_iter().map(|l| l + "\n").collect()
    }

    pub fn edge_count(&self) -> usize {
        self.transitions.iter().map(|t| t.targets.len()).sum()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT of the accessible part.
pub fn tree_to_dot<A: TreeTransitions>(aut: &A, alphabet: &[RankedSymbol], caps: Caps) -> Result<String> {
    Ok(tree_explore(aut, alphabet, caps)?.to_dot())
}
