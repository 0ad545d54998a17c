//! `gfgmin`: minimize and canonize GFG transition-based co-Büchi automata
//! given in HOA format.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gfgmin::canon::{alpha_maximize, alpha_maximize_homogeneous, canonical_relabel};
use gfgmin::oracle::{accepts, breakpoint_determinize, random_lassos, Containment};
use gfgmin::automaton::structural_report;
use gfgmin::{dot, hoa, iso, minimize, nice, random, safe, Tncw};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_PIPELINE: u8 = 4;

#[derive(Parser)]
#[command(name = "gfgmin", version, about = "Minimize and canonize GFG co-Büchi automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// HOA input file
    input: PathBuf,
    /// Complete a non-total input with a rejecting sink
    #[arg(long)]
    sink: bool,
}

#[derive(Args)]
struct Output {
    /// Write the automaton here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Emit Graphviz DOT instead of HOA
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Add every allowed transition to α
    Max,
    /// Only saturate pairs without a safe transition
    Hom,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize a GFG-tNCW
    ///
    /// The input must be safe deterministic. With --determinize, other inputs
    /// are first replaced by their breakpoint determinization, which may be
    /// exponentially larger before minimization shrinks it again.
    Minimize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Determinize inputs that are not safe deterministic
        #[arg(long)]
        determinize: bool,
    },
    /// Minimize, saturate and renumber canonically
    Canonize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Determinize inputs that are not safe deterministic
        #[arg(long)]
        determinize: bool,
    },
    /// Print structural and niceness flags as key=bool lines
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Decide language equivalence; exit 1 with a distinguishing lasso if not
    Equiv {
        a: PathBuf,
        b: PathBuf,
        /// Also compare acceptance on this many random lassos
        #[arg(long, default_value_t = 0)]
        lassos: usize,
        /// Seed for the lasso sample (default: $GFGMIN_SEED or 0)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        sink: bool,
    },
    /// Decide (safe) isomorphism; prints the bijection as i->j lines
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Only require ᾱ-transitions to be respected
        #[arg(long)]
        safe: bool,
        #[arg(long)]
        sink: bool,
    },
    /// Breakpoint determinization
    Determinize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Sizes and safe components
    Info {
        #[command(flatten)]
        input: Input,
    },
    /// Random total GFG-tNCW
    Gen {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        symbols: usize,
        /// Default: $GFGMIN_SEED or 0
        #[arg(long)]
        seed: Option<u64>,
        /// Skip the extra nondeterministic α-transitions
        #[arg(long)]
        deterministic: bool,
        #[command(flatten)]
        output: Output,
    },
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

impl From<gfgmin::Error> for Failure {
    fn from(e: gfgmin::Error) -> Self {
        let code = match e {
            gfgmin::Error::Parse(_) => EXIT_PARSE,
            _ => EXIT_PIPELINE,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn default_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("GFGMIN_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new(EXIT_USAGE, format!("GFGMIN_SEED is not an integer: {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn load(path: &Path, sink: bool) -> Result<Tncw, Failure> {
    let text = fs::read(path).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    hoa::parse_hoa(&text, sink).map_err(|e| Failure::new(EXIT_PARSE, format!("{}:{e}", path.display())))
}

fn write_automaton(a: &Tncw, out: &Output) -> Result<(), Failure> {
    let text = if out.dot { dot::to_dot(a) } else { hoa::emit_hoa(a) };
    match &out.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(EXIT_USAGE, e.to_string())),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Minimize {
            input,
            output,
            determinize,
        } => {
            let a = load(&input.input, input.sink)?;
            let m = minimize::minimize(&a, determinize)?;
            eprintln!("{} -> {} states", a.num_states(), m.num_states());
            write_automaton(&m, &output)?;
            Ok(0)
        }
        Command::Canonize {
            input,
            output,
            mode,
            determinize,
        } => {
            let a = load(&input.input, input.sink)?;
            let m = minimize::minimize(&a, determinize)?;
            let saturated = match mode {
                Mode::Max => alpha_maximize(&m),
                Mode::Hom => alpha_maximize_homogeneous(&m)?,
            };
            write_automaton(&canonical_relabel(&saturated)?, &output)?;
            Ok(0)
        }
        Command::Validate { input } => {
            let a = load(&input.input, input.sink)?;
            let s = structural_report(&a);
            let n = nice::validate_nice(&a, true);
            let structural = s.lines();
            for (k, v) in &structural {
                println!("{k}={v}");
            }
            for (k, v) in n.lines() {
                if let Some(v) = v.filter(|_| structural.iter().all(|(s, _)| *s != k)) {
                    println!("{k}={v}");
                }
            }
            println!("nice={}", n.is_nice());
            Ok(0)
        }
        Command::Equiv {
            a,
            b,
            lassos,
            seed,
            sink,
        } => {
            let (x, y) = (load(&a, sink)?, load(&b, sink)?);
            if x.alphabet() != y.alphabet() {
                return Err(gfgmin::Error::AlphabetMismatch.into());
            }
            let seed = default_seed(seed)?;
            for w in random_lassos(x.num_symbols(), lassos, 8, seed) {
                if accepts(&x, &w) != accepts(&y, &w) {
                    println!("distinguishing lasso: {}", w.display(x.alphabet()));
                    return Ok(EXIT_NEGATIVE);
                }
            }
            match Containment::compare(&x, &y) {
                Containment::Equivalent => {
                    println!("equivalent");
                    Ok(0)
                }
                Containment::OnlyLeft(w) | Containment::OnlyRight(w) => {
                    println!("distinguishing lasso: {}", w.display(x.alphabet()));
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Iso { a, b, safe, sink } => {
            let (x, y) = (load(&a, sink)?, load(&b, sink)?);
            let k = if safe {
                iso::safe_isomorphic(&x, &y)
            } else {
                iso::isomorphic(&x, &y)
            };
            match k {
                Some(k) => {
                    for (i, j) in k.forward.iter().enumerate() {
                        println!("{i}->{j}");
                    }
                    Ok(0)
                }
                None => {
                    println!("not {}isomorphic", if safe { "safe-" } else { "" });
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Determinize { input, output } => {
            let a = load(&input.input, input.sink)?;
            write_automaton(&breakpoint_determinize(&a), &output)?;
            Ok(0)
        }
        Command::Info { input } => {
            let a = load(&input.input, input.sink)?;
            let d = safe::safe_components(&a);
            println!("states={}", a.num_states());
            println!("symbols={}", a.num_symbols());
            println!("transitions={}", a.num_transitions());
            println!("alpha_transitions={}", a.num_alpha_transitions());
            println!("safe_components={}", d.len());
            let sizes: Vec<String> = d.sizes().iter().map(usize::to_string).collect();
            println!("component_sizes={}", sizes.join(","));
            Ok(0)
        }
        Command::Gen {
            states,
            symbols,
            seed,
            deterministic,
            output,
        } => {
            if states == 0 || symbols == 0 {
                return Err(Failure::new(EXIT_USAGE, "--states and --symbols must be positive"));
            }
            let a = random::random_tncw(states, symbols, default_seed(seed)?, deterministic);
            write_automaton(&a, &output)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("gfgmin: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
