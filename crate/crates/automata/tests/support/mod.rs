//! Seeded generators and law checks shared by the law suites and the
//! acceptance runner. Every check returns the first violated law.
#![allow(dead_code)]

use kleisli_automata::algebra::{StarSemiring, Sum};
use kleisli_automata::containers::{
    bool_expr_to_clauses, BoolExpr, BoolExprs, Effect, FiniteSet, FunExpr, FunExprs, FunNode, Identity,
    LinComb, Linear, Optional, Semimodule, Sets, Writer,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Elements live in `0..ELEMS` so that bind tables cover them.
const ELEMS: u8 = 4;

pub trait ArbWeight: StarSemiring {
    fn arb(rng: &mut ChaCha8Rng) -> Self;
}

impl ArbWeight for bool {
    fn arb(rng: &mut ChaCha8Rng) -> Self {
        rng.gen()
    }
}

impl ArbWeight for i64 {
    fn arb(rng: &mut ChaCha8Rng) -> Self {
        if rng.gen_bool(0.2) {
            0
        } else {
            rng.gen_range(-6..=6)
        }
    }
}

/// A container kind with a generator and an equivalence.
pub trait Probe: Effect {
    fn arb(rng: &mut ChaCha8Rng, depth: u32) -> Self::C<u8>;

    fn same(x: &Self::C<u8>, y: &Self::C<u8>) -> bool {
        x == y
    }
}

/// Weighting functions used to compare expression containers.
fn weightings<W: StarSemiring>() -> Vec<[W; ELEMS as usize]> {
    (0..8u64)
        .map(|j| std::array::from_fn(|a| W::from_int(((j * 7 + a as u64 * 3 + j * a as u64) % 3) as i64)))
        .collect()
}

fn observe<E: Effect>(c: &E::C<u8>) -> Vec<Result<E::Out, String>>
where
    E::Out: StarSemiring,
{
    weightings::<E::Out>()
        .iter()
        .map(|w| E::weigh(c, &mut |a| Ok(w[*a as usize].clone())).map_err(|e| e.to_string()))
        .collect()
}

fn elem(rng: &mut ChaCha8Rng) -> u8 {
    rng.gen_range(0..ELEMS)
}

impl Probe for Identity {
    fn arb(rng: &mut ChaCha8Rng, _: u32) -> u8 {
        elem(rng)
    }
}

impl Probe for Optional {
    fn arb(rng: &mut ChaCha8Rng, _: u32) -> Option<u8> {
        rng.gen_bool(0.7).then(|| elem(rng))
    }
}

impl Probe for Sets {
    fn arb(rng: &mut ChaCha8Rng, _: u32) -> FiniteSet<u8> {
        let n = rng.gen_range(0..=3);
        (0..n).map(|_| elem(rng)).collect()
    }
}

impl<W: ArbWeight> Probe for Linear<W> {
    fn arb(rng: &mut ChaCha8Rng, _: u32) -> LinComb<W, u8> {
        let n = rng.gen_range(0..=3);
        (0..n).map(|_| (W::arb(rng), elem(rng))).collect()
    }
}

impl Probe for Writer<Sum> {
    fn arb(rng: &mut ChaCha8Rng, _: u32) -> (u8, Sum) {
        (elem(rng), Sum(rng.gen_range(-5..=5)))
    }
}

impl Probe for BoolExprs {
    fn arb(rng: &mut ChaCha8Rng, depth: u32) -> BoolExpr<u8> {
        if depth == 0 || rng.gen_bool(0.35) {
            return if rng.gen_bool(0.8) { BoolExpr::Var(elem(rng)) } else { BoolExpr::Const(rng.gen()) };
        }
        match rng.gen_range(0..3) {
            0 => BoolExpr::not(Self::arb(rng, depth - 1)),
            1 => BoolExpr::and(Self::arb(rng, depth - 1), Self::arb(rng, depth - 1)),
            _ => BoolExpr::or(Self::arb(rng, depth - 1), Self::arb(rng, depth - 1)),
        }
    }

    fn same(x: &BoolExpr<u8>, y: &BoolExpr<u8>) -> bool {
        observe::<Self>(x) == observe::<Self>(y)
    }
}

impl<W: ArbWeight> Probe for FunExprs<W> {
    fn arb(rng: &mut ChaCha8Rng, depth: u32) -> FunExpr<W, u8> {
        if depth == 0 || rng.gen_bool(0.35) {
            return if rng.gen_bool(0.8) { FunExpr::Var(elem(rng)) } else { FunExpr::Const(W::arb(rng)) };
        }
        match rng.gen_range(0..3) {
            0 => FunExpr::plus(Self::arb(rng, depth - 1), Self::arb(rng, depth - 1)),
            1 => FunExpr::scale(&W::arb(rng), Self::arb(rng, depth - 1), rng.gen()),
            _ => {
                let sq = FunNode::new("sq", 1, |ws: &[W]| Ok(ws[0].times(&ws[0])));
                FunExpr::apply(sq, vec![Self::arb(rng, depth - 1)])
            }
        }
    }

    fn same(x: &FunExpr<W, u8>, y: &FunExpr<W, u8>) -> bool {
        observe::<Self>(x) == observe::<Self>(y)
    }
}

fn table<E: Probe>(rng: &mut ChaCha8Rng) -> Vec<E::C<u8>> {
    (0..ELEMS).map(|_| E::arb(rng, 2)).collect()
}

fn bind_with<E: Effect>(c: &E::C<u8>, t: &[E::C<u8>]) -> E::C<u8> {
    E::bind(c, &mut |a| Ok(t[*a as usize].clone())).expect("table binds cannot fail")
}

macro_rules! law {
    ($ok:expr, $name:expr, $dbg:expr) => {
        if !$ok {
            return Err(format!("{}: {:?}", $name, $dbg));
        }
    };
}

/// Left and right unit laws and associativity of bind.
pub fn monad_laws<E: Probe>(rng: &mut ChaCha8Rng, probes: usize) -> Check {
    for _ in 0..probes {
        let c = E::arb(rng, 3);
        let f = table::<E>(rng);
        let g = table::<E>(rng);
        let a = elem(rng);
        law!(E::same(&bind_with::<E>(&E::unit(a), &f), &f[a as usize]), format!("{} left unit", E::name()), (a, &f));
        let back = E::bind(&c, &mut |x| Ok(E::unit(*x))).unwrap();
        law!(E::same(&back, &c), format!("{} right unit", E::name()), &c);
        let lhs = bind_with::<E>(&bind_with::<E>(&c, &f), &g);
        let fg: Vec<E::C<u8>> = f.iter().map(|fc| bind_with::<E>(fc, &g)).collect();
        let rhs = bind_with::<E>(&c, &fg);
        law!(E::same(&lhs, &rhs), format!("{} associativity", E::name()), (&c, &f, &g));
    }
    Ok(())
}

/// Weighing is a morphism: weighing after a bind is weighing the weights.
pub fn weigh_laws<E: Probe>(rng: &mut ChaCha8Rng, probes: usize) -> Check
where
    E::Out: StarSemiring,
{
    for _ in 0..probes {
        let c = E::arb(rng, 3);
        let f = table::<E>(rng);
        for w in weightings::<E::Out>() {
            let direct = E::weigh(&bind_with::<E>(&c, &f), &mut |a| Ok(w[*a as usize].clone())).unwrap();
            let inner: Vec<E::Out> =
                f.iter().map(|fc| E::weigh(fc, &mut |a| Ok(w[*a as usize].clone())).unwrap()).collect();
            let staged = E::weigh(&c, &mut |a| Ok(inner[*a as usize].clone())).unwrap();
            law!(direct == staged, format!("{} weigh after bind", E::name()), (&c, &f));
        }
    }
    Ok(())
}

/// Commutative monoid of containers with a left and a right action of the
/// weights, compatible with weighing.
pub fn semimodule_laws<E: Probe + Semimodule>(rng: &mut ChaCha8Rng, probes: usize) -> Check
where
    E::Out: ArbWeight,
{
    let n = E::name();
    for _ in 0..probes {
        let (x, y, z) = (E::arb(rng, 3), E::arb(rng, 3), E::arb(rng, 3));
        let (k, l) = (<E::Out as ArbWeight>::arb(rng), <E::Out as ArbWeight>::arb(rng));
        let plus = |a: &E::C<u8>, b: &E::C<u8>| E::combine(a.clone(), b.clone());
        law!(E::same(&plus(&plus(&x, &y), &z), &plus(&x, &plus(&y, &z))), format!("{n} sum associativity"), (&x, &y, &z));
        law!(E::same(&plus(&x, &y), &plus(&y, &x)), format!("{n} sum commutativity"), (&x, &y));
        law!(E::same(&plus(&x, &E::neutral()), &x), format!("{n} neutral"), &x);
        let act = |k: &E::Out, c: &E::C<u8>| E::act(k, c.clone());
        let act_r = |c: &E::C<u8>, k: &E::Out| E::act_right(c.clone(), k);
        law!(E::same(&act(&k, &plus(&x, &y)), &plus(&act(&k, &x), &act(&k, &y))), format!("{n} action on sums"), (&k, &x, &y));
        law!(E::same(&act(&k.plus(&l), &x), &plus(&act(&k, &x), &act(&l, &x))), format!("{n} sum of scalars"), (&k, &l, &x));
        law!(E::same(&act(&k.times(&l), &x), &act(&k, &act(&l, &x))), format!("{n} product of scalars"), (&k, &l, &x));
        law!(E::same(&act(&E::Out::one(), &x), &x), format!("{n} unit scalar"), &x);
        law!(E::same(&act(&E::Out::zero(), &x), &E::neutral()), format!("{n} zero scalar"), &x);
        law!(E::same(&act_r(&plus(&x, &y), &k), &plus(&act_r(&x, &k), &act_r(&y, &k))), format!("{n} right action on sums"), (&k, &x, &y));
        law!(E::same(&act_r(&x, &k.times(&l)), &act_r(&act_r(&x, &k), &l)), format!("{n} right product of scalars"), (&k, &l, &x));
        for w in weightings::<E::Out>() {
            let wf = |c: &E::C<u8>| E::weigh(c, &mut |a| Ok(w[*a as usize].clone())).unwrap();
            law!(wf(&plus(&x, &y)) == wf(&x).plus(&wf(&y)), format!("{n} weigh of sums"), (&x, &y));
            law!(wf(&act(&k, &x)) == k.times(&wf(&x)), format!("{n} weigh of left action"), (&k, &x));
            law!(wf(&act_r(&x, &k)) == wf(&x).times(&k), format!("{n} weigh of right action"), (&k, &x));
        }
    }
    Ok(())
}

/// Semiring axioms, plus `x* = 1 + x·x* = 1 + x*·x` wherever the star exists.
pub fn star_semiring_laws<W: ArbWeight>(rng: &mut ChaCha8Rng, probes: usize) -> Check {
    for _ in 0..probes {
        let (a, b, c) = (W::arb(rng), W::arb(rng), W::arb(rng));
        law!(a.plus(&b).plus(&c) == a.plus(&b.plus(&c)), "plus associativity", (&a, &b, &c));
        law!(a.plus(&b) == b.plus(&a), "plus commutativity", (&a, &b));
        law!(a.plus(&W::zero()) == a, "zero", &a);
        law!(a.times(&b).times(&c) == a.times(&b.times(&c)), "times associativity", (&a, &b, &c));
        law!(a.times(&W::one()) == a && W::one().times(&a) == a, "one", &a);
        law!(a.times(&W::zero()) == W::zero() && W::zero().times(&a) == W::zero(), "annihilation", &a);
        law!(a.times(&b.plus(&c)) == a.times(&b).plus(&a.times(&c)), "left distributivity", (&a, &b, &c));
        law!(a.plus(&b).times(&c) == a.times(&c).plus(&b.times(&c)), "right distributivity", (&a, &b, &c));
        if let Ok(s) = a.star() {
            law!(s == W::one().plus(&a.times(&s)), "left star unfolding", &a);
            law!(s == W::one().plus(&s.times(&a)), "right star unfolding", &a);
        }
    }
    law!(W::zero().star().map(|s| s == W::one()).unwrap_or(false), "star of zero", ());
    Ok(())
}

fn positive_formula(rng: &mut ChaCha8Rng, vars: u8, depth: u32) -> BoolExpr<u8> {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => BoolExpr::Const(rng.gen()),
            // negations of closed formulas are still positive
            1 => BoolExpr::not(BoolExpr::Const(rng.gen())),
            _ => BoolExpr::Var(rng.gen_range(0..vars)),
        };
    }
    let k = rng.gen_range(2..=3);
    let items = (0..k).map(|_| positive_formula(rng, vars, depth - 1)).collect();
    if rng.gen() {
        BoolExpr::and_all(items)
    } else {
        BoolExpr::or_all(items)
    }
}

/// Clause sets of random positive formulas against their truth tables,
/// over every assignment of 1 to 4 variables.
pub fn clause_truth_tables(rng: &mut ChaCha8Rng, probes: usize) -> Check {
    for _ in 0..probes {
        let vars = rng.gen_range(1..=4u8);
        let e = positive_formula(rng, vars, 4);
        let clauses = bool_expr_to_clauses(&e).map_err(|err| format!("{e:?}: {err}"))?;
        for mask in 0u32..(1 << vars) {
            let truth = |v: &u8| mask >> v & 1 == 1;
            let direct = e.eval(&mut |v| Ok(truth(v))).unwrap();
            let via = clauses.iter().any(|c| c.0.iter().all(truth));
            law!(direct == via, "clauses", (&e, mask));
        }
    }
    Ok(())
}
