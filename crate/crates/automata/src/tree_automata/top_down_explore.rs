use super::TopDownContainerTA;
use crate::algebra::{Elem, Label, RankedSymbol, StarSemiring};
use crate::containers::Effect;
use crate::word_automata::{Caps, ExploreError};
use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct TopDownTransition<S> {
    pub source: S,
    pub symbol: RankedSymbol,
    /// Child tuples with optional weight labels.
    pub targets: Vec<(Vec<S>, Option<String>)>,
}

/// States reachable from the initial configuration of a top-down
/// automaton, in discovery order. `holes[i]` renders the variables state
/// `i` may stop at, `None` when there are none.
#[derive(Clone, Debug, PartialEq)]
pub struct TopDownExploration<S> {
    pub initial: Vec<(S, Option<String>)>,
    pub states: Vec<S>,
    pub holes: Vec<Option<String>>,
    pub transitions: Vec<TopDownTransition<S>>,
    pub truncated: bool,
}

pub type TopDownExploreResult<S> = Result<TopDownExploration<S>, ExploreError<TopDownExploration<S>>>;

/// Breadth-first closure: every known state reads every symbol.
pub fn top_down_explore<E, Var, S>(aut: &TopDownContainerTA<E, Var, S>, alphabet: &[RankedSymbol], caps: Caps) -> TopDownExploreResult<S>
where
    E: Effect<Out: StarSemiring>,
    Var: Elem + Label,
    S: Elem + Label,
{
    let initial = E::edges(&aut.initial);
    let mut ex = TopDownExploration {
        initial: initial.clone(),
        states: Vec::new(),
        holes: Vec::new(),
        transitions: Vec::new(),
        truncated: false,
    };
    let mut index: BTreeMap<S, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut overflow = false;
    let mut discover = |q: &S, ex: &mut TopDownExploration<S>, queue: &mut VecDeque<S>| -> crate::Result<()> {
        if index.contains_key(q) {
            return Ok(());
        }
        if ex.states.len() >= caps.max_states {
            overflow = true;
            return Ok(());
        }
        index.insert(q.clone(), ex.states.len());
        let vars = (aut.var_weight)(q)?;
        ex.holes.push(if E::support(&vars).is_empty() { None } else { Some(E::render(&vars, &|v: &Var| v.label())) });
        ex.states.push(q.clone());
        queue.push_back(q.clone());
        Ok(())
    };
    for (q, _) in &initial {
        discover(q, &mut ex, &mut queue)?;
    }
    while let Some(q) = queue.pop_front() {
        for f in alphabet {
            let targets = E::edges(&(aut.delta)(f, &q)?);
            for (qs, _) in &targets {
                for c in qs {
                    discover(c, &mut ex, &mut queue)?;
                }
            }
            if !targets.is_empty() {
                ex.transitions.push(TopDownTransition { source: q.clone(), symbol: f.clone(), targets });
            }
        }
    }
    if overflow {
        ex.truncated = true;
        return Err(ExploreError::Truncated { partial: ex, limit: caps.max_states });
    }
    Ok(ex)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl<S: Elem + Label> TopDownExploration<S> {
    fn ids(&self) -> BTreeMap<S, usize> {
        let mut order: Vec<usize> = (0..self.states.len()).collect();
        order.sort_by_key(|&i| (self.states[i].label(), i));
        order.iter().enumerate().map(|(n, &i)| (self.states[i].clone(), n)).collect()
    }

    /// Graphviz text. The initial configuration hangs off a point; states
    /// that may stop at a hole are doubled and list their variables. A
    /// nullary symbol ends at a point, a unary one is a plain edge and a
    /// wider one goes through a fan node with numbered child edges.
    pub fn to_dot(&self) -> String {
        let ids = self.ids();
        let mut out = String::from("digraph top_down_automaton {\n  rankdir=TB;\n  init [shape=point];\n");
        let mut nodes: Vec<(usize, String)> = Vec::new();
        for (i, s) in self.states.iter().enumerate() {
            let (shape, vars) = match &self.holes[i] {
                Some(v) => ("doublecircle", v.clone()),
                None => ("circle", String::new()),
            };
            nodes.push((ids[s], format!("  n{} [label=\"{}\", shape={shape}, vars=\"{}\"];\n", ids[s], escape(&s.label()), escape(&vars))));
        }
        nodes.sort();
        for (_, line) in nodes {
            out.push_str(&line);
        }
        let mut init: Vec<(usize, Option<String>)> =
            self.initial.iter().filter_map(|(q, w)| ids.get(q).map(|n| (*n, w.clone()))).collect();
        init.sort();
        for (n, w) in init {
            match w {
                Some(w) => writeln!(out, "  init -> n{n} [label=\"{}\"];", escape(&w)).unwrap(),
                None => writeln!(out, "  init -> n{n};").unwrap(),
            }
        }
        let mut ts: Vec<&TopDownTransition<S>> = self.transitions.iter().collect();
        ts.sort_by_key(|t| (ids.get(&t.source).copied(), t.symbol.name.clone(), t.symbol.arity));
        let mut fan = 0;
        for t in ts {
            let src = ids[&t.source];
            let mut targets: Vec<(Vec<usize>, Option<String>)> =
                t.targets.iter().map(|(qs, w)| (qs.iter().map(|q| ids[q]).collect(), w.clone())).collect();
            targets.sort();
            for (qs, w) in targets {
                let label = escape(&match &w {
                    Some(w) => format!("{}/{}", t.symbol.name, w),
                    None => t.symbol.name.clone(),
                });
                if qs.len() == 1 {
                    writeln!(out, "  n{src} -> n{} [label=\"{label}\"];", qs[0]).unwrap();
                    continue;
                }
                if qs.is_empty() {
                    writeln!(out, "  t{fan} [shape=point];\n  n{src} -> t{fan} [label=\"{label}\"];").unwrap();
                } else {
                    writeln!(out, "  t{fan} [shape=box, label=\"{label}\"];\n  n{src} -> t{fan};").unwrap();
                    for (k, q) in qs.iter().enumerate() {
                        writeln!(out, "  t{fan} -> n{q} [label=\"{}\"];", k + 1).unwrap();
                    }
                }
                fan += 1;
            }
        }
        out.push_str("}\n");
        out
    }

    /// Sorted lines: `init --w--> q`, `q --f--> (q1,...)` and
    /// `q stops at {vars}`.
    pub fn dump(&self) -> String {
        let mut lines = Vec::new();
        for (q, w) in &self.initial {
            lines.push(match w {
                Some(w) => format!("init --{w}--> {}", q.label()),
                None => format!("init --> {}", q.label()),
            });
        }
        for (i, s) in self.states.iter().enumerate() {
            if let Some(v) = &self.holes[i] {
                lines.push(format!("{} stops at {v}", s.label()));
            }
        }
        for t in &self.transitions {
            for (qs, w) in &t.targets {
                let arrow = match w {
                    Some(w) => format!("{}/{}", t.symbol.name, w),
                    None => t.symbol.name.clone(),
                };
                lines.push(format!("{} --{arrow}--> {}", t.source.label(), qs.label()));
            }
        }
        lines.sort();
        lines.into_iter().map(|l| l + "\n").collect()
    }

    pub fn edge_count(&self) -> usize {
        self.transitions.iter().map(|t| t.targets.len()).sum()
    }
}
