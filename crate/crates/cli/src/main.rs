use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ifmagnify::harness::{run_suite, AlphaChoice, SampleSpec, SuiteConfig, TheoremId, MACHINE_HEADER};
use ifmagnify::io::{format_cayley, format_cayley_stream, format_ifs, parse_cayley, parse_ifs};
use ifmagnify::semigroup::{builtin_library, classify, enumerate_semigroups, lookup};
use ifmagnify::{if_product, magnify, parse_rational, Grade, IfSubset, Rational, Semigroup, TransformParams};

#[derive(Parser, Debug)]
#[command(name = "ifmagnify", version, about = "Magnified translations of intuitionistic fuzzy subsets of finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the regularity, archimedean and group flags of a Cayley table.
    Classify { cayley: PathBuf },
    /// Apply a magnified translation to a fuzzy subset.
    Transform {
        ifs: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        beta: Rational,
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        /// Check the subset against this table's carrier.
        #[arg(long)]
        cayley: Option<PathBuf>,
    },
    /// Print the sup-min product of two fuzzy subsets.
    Product { cayley: PathBuf, a: PathBuf, b: PathBuf },
    /// Run the theorem suite.
    Check(CheckArgs),
    /// Enumerate all labeled semigroups of an order.
    Enumerate {
        order: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// List the built-in semigroups, or print one as a Cayley table.
    Library { name: Option<String> },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Orders to enumerate exhaustively.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    orders: Vec<usize>,
    /// Theorems to check; repeat or separate with commas.
    #[arg(long, value_delimiter = ',')]
    theorem: Vec<TheoremId>,
    /// Check every theorem (the default when no --theorem is given).
    #[arg(long, conflicts_with = "theorem")]
    all: bool,
    /// Also check the built-in library semigroups.
    #[arg(long)]
    library: bool,
    /// Beta grid, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    beta: Vec<Rational>,
    /// Alpha choices: zero, midpoint, max, grid.
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha_choice)]
    alpha: Vec<AlphaChoice>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_parser = parse_rational)]
    grid_step: Option<Rational>,
    #[arg(long)]
    random_count: Option<usize>,
    #[arg(long)]
    max_pairs: Option<usize>,
    /// Emit tab-separated records instead of text.
    #[arg(long)]
    machine: bool,
}

fn parse_alpha_choice(text: &str) -> Result<AlphaChoice, String> {
    [AlphaChoice::Zero, AlphaChoice::Midpoint, AlphaChoice::Max, AlphaChoice::Grid]
        .into_iter()
        .find(|c| c.name() == text)
        .ok_or_else(|| format!("unknown alpha choice {text:?}; expected zero, midpoint, max or grid"))
}

enum Failure {
    /// Bad input or usage.
    Input(String),
    /// A theorem was refuted.
    Refuted,
}

impl From<ifmagnify::Error> for Failure {
    fn from(e: ifmagnify::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_cayley(path: &Path) -> Result<Semigroup, Failure> {
    parse_cayley(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_ifs(path: &Path) -> Result<IfSubset, Failure> {
    parse_ifs(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classify { cayley } => {
            let s = load_cayley(&cayley)?;
            let c = classify(&s);
            let identity = c.identity.map_or("none".to_string(), |e| e.to_string());
            println!(
                "regular: {}, intra-regular: {}, left-regular: {}, right-regular: {}, archimedean: {}, group: {}, identity: {identity}",
                yes_no(c.regular),
                yes_no(c.intra_regular),
                yes_no(c.left_regular),
                yes_no(c.right_regular),
                yes_no(c.archimedean),
                yes_no(c.is_group),
            );
        }
        Command::Transform { ifs, beta, alpha, cayley } => {
            let params = TransformParams::from_rationals(beta, alpha)?;
            let a = load_ifs(&ifs)?;
            if let Some(path) = cayley {
                let s = load_cayley(&path)?;
                if s.order() != a.carrier_order() {
                    return Err(Failure::Input(format!(
                        "table has order {} but the subset has {} elements",
                        s.order(),
                        a.carrier_order()
                    )));
                }
            }
            print!("{}", format_ifs(&magnify(&a, params)?));
        }
        Command::Product { cayley, a, b } => {
            let s = load_cayley(&cayley)?;
            let (a, b) = (load_ifs(&a)?, load_ifs(&b)?);
            print!("{}", format_ifs(&if_product(&s, &a, &b)?));
        }
        Command::Check(args) => return check(args),
        Command::Enumerate { order, count_only } => {
            let tables = enumerate_semigroups(order)?;
            if count_only {
                println!("{}", tables.count());
            } else {
                let all: Vec<Semigroup> = tables.collect();
                print!("{}", format_cayley_stream(&all));
            }
        }
        Command::Library { name: None } => {
            for entry in builtin_library() {
                println!("{}\torder {}\t{}", entry.name, entry.semigroup.order(), entry.semigroup);
            }
        }
        Command::Library { name: Some(name) } => {
            let entry = lookup(&name).ok_or_else(|| {
                let names: Vec<String> = builtin_library().into_iter().map(|e| e.name).collect();
                Failure::Input(format!("no library semigroup {name:?}; known: {}", names.join(", ")))
            })?;
            print!("{}", format_cayley(&entry.semigroup));
        }
    }
    Ok(())
}

fn check(args: CheckArgs) -> Result<(), Failure> {
    let mut spec = SampleSpec::default();
    if !args.beta.is_empty() {
        spec.beta_grid = args
            .beta
            .iter()
            .map(|&b| Grade::new(b).ok_or_else(|| Failure::Input(format!("beta = {b} is not in (0, 1]"))))
            .collect::<Result<_, _>>()?;
    }
    if !args.alpha.is_empty() {
        spec.alpha_choices = args.alpha;
    }
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    if let Some(step) = args.grid_step {
        spec.grid_step = step;
    }
    if let Some(count) = args.random_count {
        spec.random_count = count;
    }
    if let Some(max_pairs) = args.max_pairs {
        spec.max_pairs = max_pairs;
    }
    spec.validate()?;
    let theorems = if args.all || args.theorem.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        args.theorem
    };
    let config = SuiteConfig {
        orders: args.orders,
        include_library: args.library,
        theorems,
        spec,
    };
    let run = run_suite(&config)?;
    if args.machine {
        println!("{MACHINE_HEADER}");
        for r in &run.reports {
            println!("{}", r.render_machine());
        }
        println!("{}", run.summary.render_machine());
    } else {
        for r in &run.reports {
            println!("{}", r.render_text());
        }
        println!("{}", run.summary);
    }
    if run.summary.counterexamples > 0 {
        Err(Failure::Refuted)
    } else {
        Ok(())
    }
}
