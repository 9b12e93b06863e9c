//! `bwfa`: evaluate, reduce, compare and combine weighted automata
//! stored as JSON documents.
//!
//! Exit codes: 0 success (equivalent / isomorphic), 1 negative verdict,
//! 2 parse error, 3 unknown symbol, 4 step budget exceeded, 5 violated
//! precondition. Results go to standard output, diagnostics to standard
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use bezout_wfa::{
    conjugator, distinguishing_word, hankel_rank, left_reduce, minimize, prefix_set,
    right_reduce, AutomatonDocument, AutomatonError, BezoutRing, LinearRepresentation, Matrix,
    MinimizeError, Polynomial, PuiseuxPoly, RingTag, StepBudget,
};

const EXIT_DIFFERENT: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_UNKNOWN_SYMBOL: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_PRECONDITION: u8 = 5;

#[derive(Parser)]
#[command(name = "bwfa", version, about = "Exact weighted-automaton toolkit")]
struct Cli {
    /// Cap on candidate words per prefix-set computation
    #[arg(long, global = true, default_value_t = 10_000)]
    max_steps: usize,

    /// Re-verify document invariants, including canonical scalar forms
    #[arg(long, global = true)]
    ring_check: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficient of WORD in the automaton's behavior
    Eval { file: PathBuf, word: String },
    /// Reduce an automaton and report the dimension change
    Minimize {
        file: PathBuf,
        /// Where to write the reduced document (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
    },
    /// Decide whether two automata have the same behavior
    Equiv { a: PathBuf, b: PathBuf },
    /// Test isomorphism over the coefficient ring of two minimal automata
    Iso { a: PathBuf, b: PathBuf },
    /// Write the Hadamard (pointwise) product of two automata
    Hadamard {
        a: PathBuf,
        b: PathBuf,
        /// Where to write the product document (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show ring, alphabet, dimension and the prefix-set summary
    Info { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Left,
    Right,
    Full,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("bwfa: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Runs `body` with the scalar type matching the document's ring tag.
macro_rules! with_ring {
    ($tag:expr, $R:ident, $body:block) => {
        match $tag {
            RingTag::Int => {
                type $R = BigInt;
                $body
            }
            RingTag::Rat => {
                type $R = BigRational;
                $body
            }
            RingTag::Poly => {
                type $R = Polynomial;
                $body
            }
            RingTag::FracPoly => {
                type $R = PuiseuxPoly;
                $body
            }
        }
    };
}

fn run(cli: &Cli) -> CmdResult {
    let budget = step_budget(cli.max_steps)?;
    match &cli.command {
        Command::Eval { file, word } => {
            let doc = load(file, cli.ring_check)?;
            with_ring!(doc.ring, R, {
                let rep = build::<R>(&doc, file)?;
                let word = parse_word(&rep, word)?;
                let value = rep.behavior(&word).expect("parsed words evaluate");
                println!("{value}");
                Ok(0)
            })
        }
        Command::Minimize { file, out, mode } => {
            let doc = load(file, cli.ring_check)?;
            with_ring!(doc.ring, R, {
                let rep = build::<R>(&doc, file)?;
                let reduced = match mode {
                    Mode::Left => left_reduce(&rep, budget),
                    Mode::Right => right_reduce(&rep, budget),
                    Mode::Full => minimize(&rep, budget),
                }
                .map_err(minimize_failure)?;
                println!("{} -> {}", rep.dim(), reduced.dim());
                let out_doc = AutomatonDocument::from_representation(doc.ring, &reduced);
                emit(out.as_deref(), &out_doc)?;
                Ok(0)
            })
        }
        Command::Equiv { a, b } => {
            let doc_a = load(a, cli.ring_check)?;
            let doc_b = load(b, cli.ring_check)?;
            check_same_ring(&doc_a, &doc_b)?;
            with_ring!(doc_a.ring, R, {
                let rep_a = build::<R>(&doc_a, a)?;
                let rep_b = build::<R>(&doc_b, b)?;
                let witness = distinguishing_word(&rep_a, &rep_b).map_err(|e| {
                    Failure::new(EXIT_PRECONDITION, e.to_string())
                })?;
                match witness {
                    None => {
                        println!("equivalent");
                        Ok(0)
                    }
                    Some(word) => {
                        println!("different");
                        println!("witness: \"{}\"", rep_a.alphabet().spell(&word));
                        Ok(EXIT_DIFFERENT)
                    }
                }
            })
        }
        Command::Iso { a, b } => {
            let doc_a = load(a, cli.ring_check)?;
            let doc_b = load(b, cli.ring_check)?;
            check_same_ring(&doc_a, &doc_b)?;
            with_ring!(doc_a.ring, R, {
                let rep_a = build::<R>(&doc_a, a)?;
                let rep_b = build::<R>(&doc_b, b)?;
                check_field_minimal(&rep_a, a)?;
                check_field_minimal(&rep_b, b)?;
                let s = conjugator(&rep_a, &rep_b).map_err(|e| match e {
                    MinimizeError::DimensionMismatch | MinimizeError::AlphabetMismatch => {
                        Failure::new(EXIT_PRECONDITION, e.to_string())
                    }
                    other => Failure::new(EXIT_PRECONDITION, other.to_string()),
                })?;
                match s {
                    None => {
                        println!("not isomorphic over K (not equivalent)");
                        Ok(EXIT_DIFFERENT)
                    }
                    Some(s) => {
                        let over_ring = ring_entries(&s);
                        let unit_conjugate =
                            over_ring.is_some_and(|m| m.determinant().is_unit());
                        if unit_conjugate {
                            println!("isomorphic over K");
                        } else {
                            println!("not isomorphic over K (conjugator requires fractions)");
                        }
                        println!("conjugator:");
                        print!("{s}");
                        Ok(if unit_conjugate { 0 } else { EXIT_DIFFERENT })
                    }
                }
            })
        }
        Command::Hadamard { a, b, out } => {
            let doc_a = load(a, cli.ring_check)?;
            let doc_b = load(b, cli.ring_check)?;
            check_same_ring(&doc_a, &doc_b)?;
            with_ring!(doc_a.ring, R, {
                let rep_a = build::<R>(&doc_a, a)?;
                let rep_b = build::<R>(&doc_b, b)?;
                let product = rep_a
                    .hadamard(&rep_b)
                    .map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
                let out_doc = AutomatonDocument::from_representation(doc_a.ring, &product);
                emit(out.as_deref(), &out_doc)?;
                Ok(0)
            })
        }
        Command::Info { file } => {
            let doc = load(file, cli.ring_check)?;
            with_ring!(doc.ring, R, {
                let rep = build::<R>(&doc, file)?;
                let prefix = prefix_set(&rep, budget).map_err(minimize_failure)?;
                println!("ring: {}", doc.ring);
                println!("alphabet: {}", rep.alphabet().symbols().join(" "));
                println!("dim: {}", rep.dim());
                println!("prefix set size: {}", prefix.words().len());
                println!("fractional subset size: {}", prefix.fractional().len());
                if rep.dim() <= 6 {
                    let spell = |words: &mut dyn Iterator<Item = &bezout_wfa::Word>| {
                        words
                            .map(|w| format!(" \"{}\"", rep.alphabet().spell(w)))
                            .collect::<String>()
                    };
                    println!("prefix set:{}", spell(&mut prefix.words().iter()));
                    println!("fractional subset:{}", spell(&mut prefix.fractional().iter()));
                }
                Ok(0)
            })
        }
    }
}

fn step_budget(max_steps: usize) -> Result<StepBudget, Failure> {
    if max_steps == 0 {
        return Err(Failure::new(EXIT_PARSE, "--max-steps must be positive"));
    }
    Ok(StepBudget::new(max_steps))
}

fn load(path: &Path, ring_check: bool) -> Result<AutomatonDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let doc = AutomatonDocument::from_json(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    if ring_check {
        doc.check_canonical()
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    }
    Ok(doc)
}

fn build<R: BezoutRing>(
    doc: &AutomatonDocument,
    path: &Path,
) -> Result<LinearRepresentation<R>, Failure> {
    doc.to_representation::<R>()
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn parse_word<R: BezoutRing>(
    rep: &LinearRepresentation<R>,
    text: &str,
) -> Result<bezout_wfa::Word, Failure> {
    rep.alphabet().word_from_text(text).map_err(|e| match e {
        AutomatonError::UnknownSymbol(_) => Failure::new(EXIT_UNKNOWN_SYMBOL, e.to_string()),
        other => Failure::new(EXIT_PARSE, other.to_string()),
    })
}

fn check_same_ring(a: &AutomatonDocument, b: &AutomatonDocument) -> Result<(), Failure> {
    if a.ring != b.ring {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            format!("ring mismatch: {} vs {}", a.ring, b.ring),
        ));
    }
    Ok(())
}

fn check_field_minimal<R: BezoutRing>(
    rep: &LinearRepresentation<R>,
    path: &Path,
) -> Result<(), Failure> {
    let rank = hankel_rank(rep, rep.dim());
    if rank != rep.dim() {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            format!(
                "{}: not minimal over the fraction field (dimension {}, Hankel rank {rank})",
                path.display(),
                rep.dim()
            ),
        ));
    }
    Ok(())
}

fn minimize_failure(error: MinimizeError) -> Failure {
    match error {
        MinimizeError::BudgetExceeded { .. } => Failure::new(EXIT_BUDGET, error.to_string()),
        other => Failure::new(EXIT_PRECONDITION, other.to_string()),
    }
}

/// The conjugator with entries read back into the ring, when possible.
fn ring_entries<R: BezoutRing>(
    s: &Matrix<bezout_wfa::Fraction<R>>,
) -> Option<Matrix<R>> {
    let mut entries = Vec::with_capacity(s.rows() * s.cols());
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            entries.push(s.at(i, j).as_ring()?.clone());
        }
    }
    Some(Matrix::from_fn(s.rows(), s.cols(), |i, j| {
        entries[i * s.cols() + j].clone()
    }))
}

fn emit(out: Option<&Path>, doc: &AutomatonDocument) -> Result<(), Failure> {
    let text = format!("{}\n", doc.to_json());
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
