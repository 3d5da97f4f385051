use crate::{Error, Result};
use rand::Rng;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankedSymbol {
    pub name: String,
    pub arity: usize,
}

impl RankedSymbol {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        RankedSymbol { name: name.into(), arity }
    }
}

impl fmt::Display for RankedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A tree over a ranked alphabet; holes make it k-ary.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RankedTree {
    Hole,
    Node(RankedSymbol, Vec<RankedTree>),
}

impl RankedTree {
    pub fn leaf(name: impl Into<String>) -> Self {
        RankedTree::Node(RankedSymbol::new(name, 0), Vec::new())
    }

    /// Node whose symbol arity is the number of children.
    pub fn node(name: impl Into<String>, children: Vec<RankedTree>) -> Self {
        RankedTree::Node(RankedSymbol::new(name, children.len()), children)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = TreeParser { src: text.as_bytes(), pos: 0 };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        Ok(t)
    }

    /// Number of holes.
    pub fn arity(&self) -> usize {
        match self {
            RankedTree::Hole => 1,
            RankedTree::Node(_, ts) => ts.iter().map(|t| t.arity()).sum(),
        }
    }

    pub fn is_nullary(&self) -> bool {
        self.arity() == 0
    }

    pub fn depth(&self) -> usize {
        match self {
            RankedTree::Hole => 0,
            RankedTree::Node(_, ts) => 1 + ts.iter().map(|t| t.depth()).max().unwrap_or(0),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            RankedTree::Hole => 0,
            RankedTree::Node(_, ts) => 1 + ts.iter().map(|t| t.size()).sum::<usize>(),
        }
    }

    /// Checks every node has as many children as its symbol's arity.
    pub fn well_formed(&self) -> bool {
        match self {
            RankedTree::Hole => true,
            RankedTree::Node(f, ts) => f.arity == ts.len() && ts.iter().all(|t| t.well_formed()),
        }
    }

    /// Replaces the holes, left to right, by `parts`.
    pub fn compose(&self, parts: &[RankedTree]) -> Result<RankedTree> {
        let k = self.arity();
        if parts.len() != k {
            return Err(Error::Arity { expected: k, found: parts.len() });
        }
        let mut it = parts.iter();
        Ok(self.plug(&mut it))
    }

    fn plug<'a>(&self, parts: &mut impl Iterator<Item = &'a RankedTree>) -> RankedTree {
        match self {
            RankedTree::Hole => parts.next().cloned().unwrap_or(RankedTree::Hole),
            RankedTree::Node(f, ts) => {
                RankedTree::Node(f.clone(), ts.iter().map(|t| t.plug(parts)).collect())
            }
        }
    }

    /// Every subtree, in preorder.
    pub fn subtrees(&self) -> Vec<&RankedTree> {
        let mut out = vec![self];
        if let RankedTree::Node(_, ts) = self {
            for t in ts {
                out.extend(t.subtrees());
            }
        }
        out
    }
}

impl fmt::Display for RankedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankedTree::Hole => write!(f, "_"),
            RankedTree::Node(s, ts) if ts.is_empty() => write!(f, "{}", s.name),
            RankedTree::Node(s, ts) => {
                write!(f, "{}(", s.name)?;
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct TreeParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn tree(&mut self) -> Result<RankedTree> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && !b"(),".contains(&self.src[self.pos]) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| Error::parse(start, "invalid utf-8"))?
            .trim()
            .to_string();
        if name.is_empty() {
            return Err(Error::parse(start, "expected a symbol"));
        }
        self.skip_ws();
        if self.pos < self.src.len() && self.src[self.pos] == b'(' {
            self.pos += 1;
            let mut children = vec![self.tree()?];
            loop {
                self.skip_ws();
                match self.src.get(self.pos) {
                    Some(b',') => {
                        self.pos += 1;
                        children.push(self.tree()?);
                    }
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(Error::parse(self.pos, "expected `,` or `)`")),
                }
            }
            Ok(RankedTree::node(name, children))
        } else if name == "_" {
            Ok(RankedTree::Hole)
        } else {
            Ok(RankedTree::leaf(name))
        }
    }
}

/// All nullary trees of depth at most `depth` (a leaf has depth 1).
pub fn enumerate_trees(alphabet: &[RankedSymbol], depth: usize) -> Vec<RankedTree> {
    let mut levels: Vec<RankedTree> = Vec::new();
    for _ in 0..depth {
        let mut next = Vec::new();
        for f in alphabet {
            let mut tuples: Vec<Vec<RankedTree>> = vec![Vec::new()];
            for _ in 0..f.arity {
                let mut grown = Vec::new();
                for t in &tuples {
                    for c in &levels {
                        let mut t2 = t.clone();
                        t2.push(c.clone());
                        grown.push(t2);
                    }
                }
                tuples = grown;
            }
            next.extend(tuples.into_iter().map(|ts| RankedTree::Node(f.clone(), ts)));
        }
        levels = next;
    }
    levels
}

/// A random nullary tree of depth at most `max_depth`.
pub fn random_tree(rng: &mut impl Rng, alphabet: &[RankedSymbol], max_depth: usize) -> RankedTree {
    let leaves: Vec<&RankedSymbol> = alphabet.iter().filter(|s| s.arity == 0).collect();
    let pick_leaf = |rng: &mut dyn rand::RngCore| leaves[rng.gen_range(0..leaves.len())].clone();
    if max_depth <= 1 || rng.gen_bool(0.3) {
        return RankedTree::Node(pick_leaf(rng), Vec::new());
    }
    let f = alphabet[rng.gen_range(0..alphabet.len())].clone();
    let children = (0..f.arity).map(|_| random_tree(rng, alphabet, max_depth - 1)).collect();
    RankedTree::Node(f, children)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RankedTree {
        RankedTree::parse(s).unwrap()
    }

    #[test]
    fn arity_examples() {
        assert_eq!(RankedTree::Hole.arity(), 1);
        assert_eq!(RankedTree::leaf("a").arity(), 0);
        assert_eq!(t("g(_,f(_))").arity(), 2);
    }

    #[test]
    fn compose_examples() {
        assert_eq!(RankedTree::Hole.compose(&[t("a")]).unwrap(), t("a"));
        assert_eq!(t("f(_)").compose(&[t("a")]).unwrap(), t("f(a)"));
        assert!(matches!(t("f(_)").compose(&[]), Err(Error::Arity { expected: 1, found: 0 })));
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["g(a,f(b))", "*(-(+(513,838)),37)", "g(_,_)", "a"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!(t("g(a,f(b))").well_formed());
        assert!(RankedTree::parse("g(a,").is_err());
    }

    #[test]
    fn enumeration_counts() {
        let sigma = [RankedSymbol::new("a", 0), RankedSymbol::new("f", 1), RankedSymbol::new("g", 2)];
        // one leaf; depth 2: a, f(a), g(a,a); depth 3: 1 + 3 + 9
        assert_eq!(enumerate_trees(&sigma, 1).len(), 1);
        assert_eq!(enumerate_trees(&sigma, 2).len(), 3);
        assert_eq!(enumerate_trees(&sigma, 3).len(), 13);
    }
}
