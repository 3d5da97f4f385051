use clap::{Args, Parser, Subcommand, ValueEnum};
use kleisli_automata::algebra::{Monoid, Product, RankedSymbol, RankedTree};
use kleisli_automata::containers::{BoolExprs, FunExprs, Linear, Semimodule, Sets};
use kleisli_automata::enriched::{
    default_tree_palette, parse_tree_expression, print_tree_expression, random_tree_expression, tree_derivation_automaton,
    tree_inductive_automaton, tree_position_automaton, TreeExp,
};
use kleisli_automata::tree_automata::fixtures::{height_width_automaton, modular_rwta, ModVar};
use kleisli_automata::tree_automata::{occurrence_automaton, top_down_explore, tree_explore};
use kleisli_automata::validation::{validate_trees, validate_words, Fault, ValidationConfig};
use kleisli_automata::word_automata::fixtures::a4_combination;
use kleisli_automata::word_automata::{explore, Caps, ExploreError};
use kleisli_automata::word_expressions::{
    derivation_automaton, inductive_automaton, parse_expression, position_automaton, print_expression,
    random_expression, Derivable, Palette, WordExpr,
};
use kleisli_automata::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "kleisli", version, about = "Automata with pluggable transition effects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an automaton from an expression and print it.
    Build(BuildArgs),
    /// Weigh words or trees.
    Weight {
        #[command(subcommand)]
        target: WeightTarget,
    },
    /// Run the cross-method validation harness.
    Validate(ValidateArgs),
    /// Print a random expression.
    Random(RandomArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Word,
    Tree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Positions,
    Derivation,
    Inductive,
}

/// Weight semantics: `bool` is nondeterminism, `int` integer weights,
/// `boolexpr` alternation and `genexpr` function expressions over booleans.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Weights {
    Bool,
    Int,
    Boolexpr,
    Genexpr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Dump,
}

#[derive(Args)]
struct Construction {
    #[arg(long, value_enum, default_value = "derivation")]
    method: Method,
    #[arg(long, value_enum, default_value = "bool")]
    weights: Weights,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[command(flatten)]
    construction: Construction,
    /// Maximal number of explored states.
    #[arg(long, default_value_t = 10_000)]
    caps: usize,
    /// Letters for words (`abc`), `name/arity` list for trees (`a/0,g/2`).
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    /// Random expression instead of EXPR.
    #[arg(long, num_args = 2, value_names = ["SEED", "SIZE"], conflicts_with = "expr")]
    random: Option<Vec<u64>>,
    #[arg(required_unless_present = "random")]
    expr: Option<String>,
}

#[derive(Subcommand)]
enum WeightTarget {
    /// Weights of words in a word expression.
    Word {
        #[command(flatten)]
        construction: Construction,
        expr: String,
        /// Words to weigh; `""` is the empty word.
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Weight of a tree in a tree expression.
    Tree {
        #[command(flatten)]
        construction: Construction,
        expr: String,
        tree: String,
        /// Variables filling the holes of the tree, left to right.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
    },
    /// Weights computed by the built-in automata.
    Fixture {
        #[command(subcommand)]
        fixture: FixtureName,
    },
}

#[derive(Subcommand)]
enum FixtureName {
    /// (mod 2 and not mod 4) or mod 8 on word lengths.
    A4 {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Occurrences of each pattern in the subject.
    Occurrences {
        subject: String,
        #[arg(required = true)]
        patterns: Vec<String>,
    },
    /// Height times number of nodes; holes read the given variables.
    HeightWidth {
        tree: String,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
    },
    /// Arithmetic modulo N; holes read x1 = 65, x2 = 9 or x3 (unassigned).
    Rwta {
        #[arg(long, default_value_t = 19)]
        modulo: i64,
        tree: String,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultName {
    SwappedConcat,
    ShallowStar,
    SwappedSub,
    ShallowTreeStar,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 100)]
    probes: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Operators per word expression, nodes per tree expression.
    #[arg(long)]
    size: Option<usize>,
    /// Letters of the random words.
    #[arg(long)]
    alphabet: Option<String>,
    /// Break one construction on purpose.
    #[arg(long, value_enum)]
    fault: Option<FaultName>,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    size: usize,
    #[arg(long)]
    alphabet: Option<String>,
    /// Word expressions with scalar weights.
    #[arg(long)]
    weighted: bool,
    /// Tree expressions denoting only trees without holes.
    #[arg(long)]
    nullary: bool,
}

/// A failed command and its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Unsupported(_) | Error::NotStarrable(_) | Error::NotBoolean | Error::NonPositive => 3,
            Error::CapExceeded { .. } => 4,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl<X> From<ExploreError<X>> for Failure {
    fn from(e: ExploreError<X>) -> Self {
        Error::from(e).into()
    }
}

fn unsupported(what: &str) -> Failure {
    Error::Unsupported(what.to_string()).into()
}

type Run = Result<String, Failure>;
type Source<W> = (WordExpr<W, char>, Vec<char>);
type Weigher<'a, W> = Box<dyn Fn(&[char]) -> kleisli_automata::Result<W> + 'a>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(args) => build(&args),
        Command::Weight { target } => weight(&target),
        Command::Validate(args) => validate(&args),
        Command::Random(args) => random(&args),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

macro_rules! by_weights {
    ($w:expr, $f:ident($($arg:expr),*)) => {
        match $w {
            Weights::Bool => $f::<Sets>($($arg),*),
            Weights::Int => $f::<Linear<i64>>($($arg),*),
            Weights::Boolexpr => $f::<BoolExprs>($($arg),*),
            Weights::Genexpr => $f::<FunExprs<bool>>($($arg),*),
        }
    };
}

fn build(args: &BuildArgs) -> Run {
    let w = args.construction.weights;
    match args.kind {
        Kind::Word => by_weights!(w, build_word(args)),
        Kind::Tree => by_weights!(w, build_tree(args)),
    }
}

fn word_source<E: Semimodule>(args: &BuildArgs) -> Result<Source<E::Out>, Failure> {
    let letters = args.alphabet.as_ref().map(|a| a.chars().collect::<Vec<char>>());
    match (&args.random, &args.expr) {
        (Some(r), _) => {
            let letters = letters.unwrap_or_else(|| vec!['a', 'b', 'c']);
            let palette = if args.construction.weights == Weights::Int { Palette::WEIGHTED } else { Palette::SIMPLE };
            Ok((random_expression(r[0], r[1] as usize, &letters, palette), letters))
        }
        (None, Some(text)) => {
            let e = parse_expression::<E::Out>(text)?;
            let letters = letters.unwrap_or_else(|| e.alphabet());
            Ok((e, letters))
        }
        (None, None) => Err(unsupported("no expression given")),
    }
}

fn build_word<E: Derivable<char> + Semimodule>(args: &BuildArgs) -> Run {
    let (e, alphabet) = word_source::<E>(args)?;
    let caps = Caps::states(args.caps);
    let (dot, dump) = match args.construction.method {
        Method::Positions => {
            let (aut, _) = position_automaton::<E, char>(&e)?.ok_or_else(|| unsupported("no position automaton for this expression"))?;
            let ex = explore(&aut, &alphabet, caps)?;
            (ex.to_dot(), ex.dump())
        }
        Method::Derivation => {
            let ex = explore(&derivation_automaton::<E, char>(&e), &alphabet, caps)?;
            (ex.to_dot(), ex.dump())
        }
        Method::Inductive => {
            let aut = inductive_automaton::<E, char>(&e)?.ok_or_else(|| unsupported("no inductive automaton for function operators"))?;
            let ex = explore(&aut, &alphabet, caps)?;
            (ex.to_dot(), ex.dump())
        }
    };
    Ok(match args.format {
        Format::Dot => dot,
        Format::Dump => dump,
    })
}

fn parse_palette(text: &str) -> Result<Vec<RankedSymbol>, Failure> {
    text.split(',')
        .map(|item| {
            let (name, arity) = item.trim().split_once('/').ok_or_else(|| Error::parse(0, format!("`{item}` is not name/arity")))?;
            let arity = arity.parse::<usize>().map_err(|_| Error::parse(0, format!("bad arity in `{item}`")))?;
            Ok(RankedSymbol::new(name, arity))
        })
        .collect()
}

fn tree_vars() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

fn tree_source(args: &BuildArgs) -> Result<(TreeExp<String>, Vec<RankedSymbol>), Failure> {
    let mut palette = match &args.alphabet {
        Some(text) => parse_palette(text)?,
        None => default_tree_palette(),
    };
    let e = match (&args.random, &args.expr) {
        (Some(r), _) => random_tree_expression(r[0], r[1] as usize, &palette, &tree_vars(), false),
        (None, Some(text)) => parse_tree_expression(text)?,
        (None, None) => return Err(unsupported("no expression given")),
    };
    for s in e.symbols() {
        if !palette.contains(&s) {
            palette.push(s);
        }
    }
    Ok((e, palette))
}

fn build_tree<E: Semimodule>(args: &BuildArgs) -> Run {
    let (e, alphabet) = tree_source(args)?;
    let caps = Caps::states(args.caps);
    let (dot, dump) = match args.construction.method {
        Method::Positions => {
            let ex = top_down_explore(&tree_position_automaton::<E, String>(&e)?, &alphabet, caps)?;
            (ex.to_dot(), ex.dump())
        }
        Method::Derivation => {
            let ex = top_down_explore(&tree_derivation_automaton::<E, String>(&e), &alphabet, caps)?;
            (ex.to_dot(), ex.dump())
        }
        Method::Inductive => {
            let ex = tree_explore(&tree_inductive_automaton::<E, String>(&e)?, &alphabet, caps)?;
            (ex.to_dot(), ex.dump())
        }
    };
    Ok(match args.format {
        Format::Dot => dot,
        Format::Dump => dump,
    })
}

fn weight(target: &WeightTarget) -> Run {
    match target {
        WeightTarget::Word { construction, expr, words } => {
            by_weights!(construction.weights, weigh_words(construction.method, expr, words))
        }
        WeightTarget::Tree { construction, expr, tree, vars } => {
            by_weights!(construction.weights, weigh_tree(construction.method, expr, tree, vars))
        }
        WeightTarget::Fixture { fixture } => weigh_fixture(fixture),
    }
}

fn show_word(w: &str) -> String {
    if w.is_empty() {
        "\"\"".into()
    } else {
        w.to_string()
    }
}

fn weigh_words<E: Derivable<char> + Semimodule>(method: Method, expr: &str, words: &[String]) -> Run {
    let e = parse_expression::<E::Out>(expr)?;
    let weigher: Weigher<E::Out> = match method {
        Method::Positions => {
            let (aut, _) = position_automaton::<E, char>(&e)?.ok_or_else(|| unsupported("no position automaton for this expression"))?;
            Box::new(move |w| aut.weight(w))
        }
        Method::Derivation => {
            let aut = derivation_automaton::<E, char>(&e);
            Box::new(move |w| aut.weight(w))
        }
        Method::Inductive => {
            let aut = inductive_automaton::<E, char>(&e)?.ok_or_else(|| unsupported("no inductive automaton for function operators"))?;
            Box::new(move |w| aut.weight(w))
        }
    };
    let mut out = String::new();
    for w in words {
        let letters: Vec<char> = w.chars().collect();
        out.push_str(&format!("{} {}\n", show_word(w), E::out_label(&weigher(&letters)?)));
    }
    Ok(out)
}

fn weigh_tree<E: Semimodule>(method: Method, expr: &str, tree: &str, vars: &[String]) -> Run {
    let e = parse_tree_expression(expr)?;
    let t = RankedTree::parse(tree)?;
    let w = match method {
        Method::Positions => tree_position_automaton::<E, String>(&e)?.weight_with_vars(&t, vars)?,
        Method::Derivation => tree_derivation_automaton::<E, String>(&e).weight_with_vars(&t, vars)?,
        Method::Inductive => tree_inductive_automaton::<E, String>(&e)?.weight_with_vars(&t, vars)?,
    };
    Ok(format!("{}\n", E::out_label(&w)))
}

fn mod_var(name: &str) -> Result<ModVar, Failure> {
    match name {
        "x1" => Ok(ModVar::X1),
        "x2" => Ok(ModVar::X2),
        "x3" => Ok(ModVar::X3),
        _ => Err(Error::UnknownSymbol(name.to_string()).into()),
    }
}

fn weigh_fixture(fixture: &FixtureName) -> Run {
    let mut out = String::new();
    match fixture {
        FixtureName::A4 { words } => {
            let aut = a4_combination();
            for w in words {
                let letters: Vec<char> = w.chars().collect();
                out.push_str(&format!("{} {}\n", show_word(w), aut.recognizes(&letters)?));
            }
        }
        FixtureName::Occurrences { subject, patterns } => {
            let aut = occurrence_automaton(&RankedTree::parse(subject)?)?;
            for p in patterns {
                out.push_str(&format!("{p} {}\n", aut.weight(&RankedTree::parse(p)?)?));
            }
        }
        FixtureName::HeightWidth { tree, vars } => {
            let t = RankedTree::parse(tree)?;
            let args = vec![Product::neutral(); vars.len()];
            out.push_str(&format!("{}\n", height_width_automaton().weight_apply(&t, vars, &args)?.0));
        }
        FixtureName::Rwta { modulo, tree, vars } => {
            if *modulo <= 0 {
                return Err(unsupported("the modulus must be positive"));
            }
            let t = RankedTree::parse(tree)?;
            let vars = vars.iter().map(|v| mod_var(v)).collect::<Result<Vec<_>, _>>()?;
            match modular_rwta(*modulo).weight_with_vars(&t, &vars)? {
                Some(v) => out.push_str(&format!("{v}\n")),
                None => out.push_str("error\n"),
            }
        }
    }
    Ok(out)
}

fn validate(args: &ValidateArgs) -> Run {
    let mut cfg = match args.kind {
        Kind::Word => ValidationConfig::words(),
        Kind::Tree => ValidationConfig::trees(),
    };
    cfg.instances = args.instances;
    cfg.probes = args.probes;
    cfg.seed = args.seed;
    if let Some(size) = args.size {
        cfg.size = size;
    }
    if let Some(a) = &args.alphabet {
        cfg.alphabet = a.chars().collect();
    }
    cfg.fault = args.fault.map(|f| match f {
        FaultName::SwappedConcat => Fault::SwappedConcat,
        FaultName::ShallowStar => Fault::ShallowStar,
        FaultName::SwappedSub => Fault::SwappedSub,
        FaultName::ShallowTreeStar => Fault::ShallowTreeStar,
    });
    let report = match args.kind {
        Kind::Word => validate_words(&cfg),
        Kind::Tree => validate_trees(&cfg),
    };
    if report.passed() {
        Ok(report.to_string())
    } else {
        print!("{report}");
        Err(Failure { code: 1, message: String::new() })
    }
}

fn random(args: &RandomArgs) -> Run {
    match args.kind {
        Kind::Word => {
            let letters: Vec<char> = args.alphabet.as_deref().unwrap_or("abc").chars().collect();
            let text = if args.weighted {
                print_expression(&random_expression::<i64, char>(args.seed, args.size, &letters, Palette::WEIGHTED))
            } else {
                print_expression(&random_expression::<bool, char>(args.seed, args.size, &letters, Palette::SIMPLE))
            };
            Ok(format!("{text}\n"))
        }
        Kind::Tree => {
            let palette = match &args.alphabet {
                Some(text) => parse_palette(text)?,
                None => default_tree_palette(),
            };
            let e = random_tree_expression(args.seed, args.size, &palette, &tree_vars(), args.nullary);
            Ok(format!("{}\n", print_tree_expression(&e)))
        }
    }
}
