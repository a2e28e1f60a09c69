use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use clutterbetti::betti::{betti_table_with_guard, linear_quotients_search_with_budget, resolution_diagnostics, BETTI_GUARD};
use clutterbetti::fixtures::{self, Fixture};
use clutterbetti::homology::{free_faces, homology_profile};
use clutterbetti::io::{self, TableFormat};
use clutterbetti::reduction::{
    chordality_search_with_budget, ek_betti, is_squarefree_stable, stable_to_sequence, subclutter_search_with_budget,
    verify_removal_sequence, ChordalMode, RemovalSequence,
};
use clutterbetti::verify::{self, SweepParams, Verifier};
use clutterbetti::{
    sampling, Error, Face, FieldSpec, SearchOutcome, SimplicialComplex, SquarefreeMonomialIdeal, UniformClutter,
    DEFAULT_SEARCH_BUDGET,
};

const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

/// Betti numbers, chordality and simplicial reductions of uniform clutters.
///
/// INPUT is a file path, `-` for stdin, or `fixtures:<name>`.
#[derive(Parser)]
#[command(name = "clutterbetti", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct FieldArg {
    /// Coefficients: q, gf:<p>, or z.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
}

#[derive(Args, Clone, Copy)]
struct BudgetArg {
    /// Maximum search states before giving up with "unknown".
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Deletion,
    EmptySubclutter,
}

#[derive(Subcommand)]
enum Command {
    /// Multigraded Betti table of an ideal (a clutter C stands for I(C̄)).
    Betti {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Refuse ground sets larger than this.
        #[arg(long, default_value_t = BETTI_GUARD)]
        max_n: u32,
    },
    /// Reduced homology of a complex (a clutter stands for its clique complex).
    Homology {
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Search for a simplicial order reducing the clutter.
    Chordal {
        input: String,
        #[arg(long, value_enum, default_value = "deletion")]
        mode: Mode,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Search for removal steps taking C to D.
    Subclutter {
        c: String,
        d: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Square-free stability, its removal sequence and linear-strand numbers.
    Stable { input: String },
    /// Search for an order of the generators with linear quotients.
    Quotients {
        input: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Maximal shifts, subadditivity and special shape of S/I.
    Diagnostics {
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Check a formula on one instance or on a seeded random sweep.
    Verify(VerifyArgs),
    /// List fixtures, or print one.
    Fixtures {
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Look for clutters on which the two chordality modes disagree.
    Hunt {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Directory receiving one fixture file per hit.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = parse_verifier)]
    verifier: Verifier,
    /// Clutter (theorem2, splitting, prop24), removal sequence JSON (strand), or ideal (theorem1, component).
    input: Option<String>,
    #[arg(long, value_parser = parse_face)]
    e: Option<Face>,
    #[arg(long, value_parser = parse_face)]
    f: Option<Face>,
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    n: u32,
    #[arg(long, default_value_t = 3)]
    d: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[command(flatten)]
    field: FieldArg,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_verifier(s: &str) -> Result<Verifier, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `1,2,3` or `123` (single digits only in the second form).
fn parse_face(s: &str) -> Result<Face, String> {
    let vs: Result<Vec<u32>, _> = if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<u32>()).collect()
    } else {
        s.chars().map(|c| c.to_string().parse::<u32>()).collect()
    };
    Face::from_vertices(&vs.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Refuted,
    Unknown,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

enum Input {
    Fixture(Fixture),
    Text(String),
}

fn read_input(arg: &str) -> Result<Input, Failure> {
    if let Some(name) = arg.strip_prefix("fixtures:") {
        return Ok(Input::Fixture(fixtures::load(name)?));
    }
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?
    };
    Ok(Input::Text(text))
}

fn with_path<T>(arg: &str, r: clutterbetti::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

/// Header width (or a `"d"` key in JSON) tells clutters from other inputs.
fn looks_like_clutter(text: &str) -> bool {
    let t = text.trim_start();
    if t.starts_with('{') {
        return serde_json::from_str::<serde_json::Value>(t).is_ok_and(|v| v.get("d").is_some());
    }
    t.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.split_whitespace().count() == 2)
}

fn load_clutter(arg: &str) -> Result<UniformClutter, Failure> {
    match read_input(arg)? {
        Input::Fixture(Fixture::Clutter(c)) => Ok(c),
        // A pure complex stands for the clutter of its facets.
        Input::Fixture(Fixture::Complex(c)) if c.is_pure() && !c.facets().is_empty() => {
            let d = c.facets()[0].len();
            Ok(UniformClutter::new(c.n(), d, c.facets().to_vec())?)
        }
        Input::Fixture(_) => Err(Failure::Usage(format!("{arg} is not a clutter"))),
        Input::Text(t) => with_path(arg, io::parse_clutter(&t)),
    }
}

fn load_ideal(arg: &str) -> Result<SquarefreeMonomialIdeal, Failure> {
    match read_input(arg)? {
        Input::Fixture(Fixture::Ideal(i)) => Ok(i),
        Input::Fixture(Fixture::Clutter(c)) => Ok(c.circuit_ideal_of_complement()),
        Input::Fixture(Fixture::Complex(c)) => Ok(c.stanley_reisner_ideal()),
        Input::Text(t) if looks_like_clutter(&t) => Ok(with_path(arg, io::parse_clutter(&t))?.circuit_ideal_of_complement()),
        Input::Text(t) => with_path(arg, io::parse_ideal(&t)),
    }
}

fn load_complex(arg: &str) -> Result<SimplicialComplex, Failure> {
    match read_input(arg)? {
        Input::Fixture(Fixture::Complex(c)) => Ok(c),
        Input::Fixture(Fixture::Clutter(c)) => Ok(c.clique_complex()?),
        Input::Fixture(Fixture::Ideal(i)) => Ok(i.stanley_reisner_complex()?),
        Input::Text(t) if looks_like_clutter(&t) => Ok(with_path(arg, io::parse_clutter(&t))?.clique_complex()?),
        Input::Text(t) => with_path(arg, io::parse_complex(&t)),
    }
}

fn fmt_opt<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn print_sequence(seq: &RemovalSequence) {
    for (k, s) in seq.steps.iter().enumerate() {
        let circuits: Vec<String> = s.circuits.iter().map(|f| f.to_string()).collect();
        println!("step {}\te={}\tremove {}", k + 1, s.e, circuits.join(" "));
    }
}

fn report_search<W>(outcome: SearchOutcome<W>, on_found: impl FnOnce(W)) -> Outcome {
    match outcome {
        SearchOutcome::Found(w) => {
            on_found(w);
            Ok(())
        }
        SearchOutcome::Refuted { reason } => {
            println!("refuted: {reason}");
            Err(Failure::Refuted)
        }
        SearchOutcome::Unknown { explored } => {
            println!("unknown: budget exhausted after {explored} states");
            Err(Failure::Unknown)
        }
    }
}

fn run_verify(a: VerifyArgs) -> Outcome {
    let field = a.field.field;
    let failure = if a.random {
        let p = SweepParams { seed: a.seed, n: a.n, d: a.d, trials: a.trials, field };
        let r = verify::sweep(a.verifier, p)?;
        println!("{}: {} trials, seed {}, {} failures", r.verifier, r.trials, r.seed, r.failures.len());
        r.failures.into_iter().next()
    } else {
        let input = a.input.as_deref().ok_or_else(|| Failure::Usage("give an INPUT or --random".into()))?;
        let need = |x: Option<Face>, flag: &str| x.ok_or_else(|| Failure::Usage(format!("{} needs --{flag}", a.verifier)));
        let r = match a.verifier {
            Verifier::Theorem2 => verify::check_theorem2(&load_clutter(input)?, need(a.e, "e")?, need(a.f, "f")?, field)?,
            Verifier::Splitting => verify::check_splitting(&load_clutter(input)?, need(a.e, "e")?, need(a.f, "f")?, field)?,
            Verifier::Prop24 => verify::check_prop24(&load_clutter(input)?, need(a.e, "e")?, need(a.f, "f")?, field)?,
            Verifier::Strand => {
                let Input::Text(t) = read_input(input)? else {
                    return Err(Failure::Usage("strand expects a removal sequence JSON file".into()));
                };
                let seq: RemovalSequence = serde_json::from_str(&t).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
                verify::check_strand(&seq, field)?
            }
            Verifier::Theorem1 => verify::check_theorem1(&load_ideal(input)?, need(a.f, "f")?, field)?,
            Verifier::Component => verify::check_component(&load_ideal(input)?, field)?,
        };
        println!("{}: {}", a.verifier, if r.is_none() { "verified" } else { "FAILED" });
        r
    };
    match failure {
        None => Ok(()),
        Some(msg) => {
            println!("{msg}");
            Err(Failure::Refuted)
        }
    }
}

fn run_hunt(seed: u64, n: u32, d: usize, trials: usize, out: PathBuf, budget: usize) -> Outcome {
    if d < 2 || d as u32 > n {
        return Err(Failure::Usage(format!("need 2 ≤ d ≤ n, got n={n} d={d}")));
    }
    let mut rng = sampling::rng(seed);
    let (mut hits, mut unknown) = (0, 0);
    for k in 0..trials {
        let c = sampling::random_clutter(&mut rng, n, d, 0.6);
        let del = chordality_search_with_budget(&c, ChordalMode::Deletion, budget);
        let sub = chordality_search_with_budget(&c, ChordalMode::EmptySubclutter, budget);
        if matches!(del, SearchOutcome::Unknown { .. }) || matches!(sub, SearchOutcome::Unknown { .. }) {
            unknown += 1;
            continue;
        }
        if del.is_found() != sub.is_found() {
            hits += 1;
            let path = out.join(format!("hunt-{seed}-{k}.txt"));
            let body = format!(
                "# deletion {}, empty subclutter {}\n{}",
                if del.is_found() { "found" } else { "refuted" },
                if sub.is_found() { "found" } else { "refuted" },
                io::emit_clutter(&c)
            );
            fs::write(&path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            println!("hit\t{}", path.display());
        }
    }
    println!("{trials} clutters, {hits} separating, {unknown} undecided within budget");
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Betti { input, field, format, max_n } => {
            let ideal = load_ideal(&input)?;
            let table = betti_table_with_guard(&ideal, field.field, max_n)?;
            match format {
                Format::Json => print!("{}", io::emit_betti_table(&table, TableFormat::Json)),
                Format::Tsv => {
                    print!("{}", io::emit_betti_table(&table, TableFormat::Tsv));
                    println!("reg(I)\t{}", fmt_opt(table.reg()));
                    println!("pd(S/I)\t{}", table.pd_quotient());
                }
            }
            Ok(())
        }
        Command::Homology { input, field } => {
            let complex = load_complex(&input)?;
            let p = homology_profile(&complex, field.field)?;
            println!("dim\trank\ttorsion");
            for (k, r) in p.ranks.iter().enumerate() {
                let torsion = p.torsion.get(k).filter(|t| !t.is_empty()).map(|t| format!("{t:?}")).unwrap_or_else(|| "-".into());
                println!("{}\t{r}\t{torsion}", k as i64 - 1);
            }
            println!("free faces\t{}", free_faces(&complex).len());
            Ok(())
        }
        Command::Chordal { input, mode, budget } => {
            let c = load_clutter(&input)?;
            let mode = match mode {
                Mode::Deletion => ChordalMode::Deletion,
                Mode::EmptySubclutter => ChordalMode::EmptySubclutter,
            };
            report_search(chordality_search_with_budget(&c, mode, budget.budget), |seq| {
                println!("chordal: order of length {}", seq.steps.len());
                print_sequence(&seq);
            })
        }
        Command::Subclutter { c, d, budget } => {
            let (c, d) = (load_clutter(&c)?, load_clutter(&d)?);
            report_search(subclutter_search_with_budget(&c, &d, budget.budget)?, |seq| {
                println!("simplicial subclutter: {} steps", seq.steps.len());
                print_sequence(&seq);
            })
        }
        Command::Stable { input } => {
            let ideal = load_ideal(&input)?;
            if !is_squarefree_stable(&ideal)? {
                println!("not square-free stable");
                return Err(Failure::Refuted);
            }
            let seq = stable_to_sequence(&ideal)?;
            verify_removal_sequence(&seq)?;
            println!("square-free stable: {} steps from the complete clutter", seq.steps.len());
            print_sequence(&seq);
            let ek: Vec<String> = ek_betti(&ideal)?.iter().map(u64::to_string).collect();
            println!("linear strand\t{}", ek.join(" "));
            Ok(())
        }
        Command::Quotients { input, budget } => {
            let ideal = load_ideal(&input)?;
            report_search(linear_quotients_search_with_budget(&ideal, budget.budget), |order| {
                let gens: Vec<String> = order.iter().map(|f| f.to_string()).collect();
                println!("linear quotients: {}", gens.join(" "));
            })
        }
        Command::Diagnostics { input, field } => {
            let ideal = load_ideal(&input)?;
            let dg = resolution_diagnostics(&ideal, field.field)?;
            println!("t\t{:?}", dg.t);
            println!("r\t{:?}", dg.r);
            println!("pd\t{}\nreg\t{}\ng\t{}", dg.pd, dg.reg, dg.g);
            println!("subadditive\t{}", dg.subadditive());
            println!("special shape\t{}", dg.special_shape());
            Ok(())
        }
        Command::Verify(a) => run_verify(a),
        Command::Fixtures { name: None, .. } => {
            for e in fixtures::CATALOG {
                println!("{}\t{:?}\t{}", e.name, e.kind, e.description);
            }
            println!("complete-N-D\tClutter\tall D-subsets of [N]");
            Ok(())
        }
        Command::Fixtures { name: Some(name), json } => {
            let fx = fixtures::load(&name)?;
            let text = match (&fx, json) {
                (Fixture::Clutter(c), false) => io::emit_clutter(c),
                (Fixture::Ideal(i), false) => io::emit_ideal(i),
                (Fixture::Complex(c), false) => io::emit_complex(c),
                (Fixture::Clutter(c), true) => serde_json::to_string(c).expect("plain data") + "\n",
                (Fixture::Ideal(i), true) => serde_json::to_string(i).expect("plain data") + "\n",
                (Fixture::Complex(c), true) => serde_json::to_string(c).expect("plain data") + "\n",
            };
            print!("{text}");
            Ok(())
        }
        Command::Hunt { seed, n, d, trials, out, budget } => run_hunt(seed, n, d, trials, out, budget.budget),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(EXIT_REFUTED),
        Err(Failure::Unknown) => ExitCode::from(EXIT_UNKNOWN),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
