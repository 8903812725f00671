//! latcode: operations on finite residuated lattices, their fuzzy ideals,
//! and the binary codes generated by ideal codewords.
//!
//! Results go to stdout, diagnostics to stderr. Exit status: 0 on success,
//! 1 on user errors (unreadable input, parse failures, violated
//! preconditions, negative validation verdicts), 2 on internal invariant
//! breaches, which indicate a bug in the library itself.

use clap::{Args, Parser, Subcommand};
use latcode::*;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const FORMATS_HELP: &str = "\
FILE FORMATS (lines starting with '#' and blank lines are ignored):

  Algebra file, Wajsberg kind: an `elements:` line, `kind: wajsberg`, a
  `circ:` block with one row per element (row x, column y holds x∘y), and a
  `neg:` line. Example (the four-element algebra):

      elements: 0 a b 1
      kind: wajsberg
      circ:
      1 1 1 1
      b 1 b 1
      a a 1 1
      0 a b 1
      neg: 1 b a 0

  Algebra file, residuated kind: `elements:`, `kind: residuated`, then
  `join:`, `meet:`, `prod:`, `impl:` blocks of the same shape, and
  `bottom: <name>`, `top: <name>` lines.

  Fuzzy subset file: one `element = grade` line per element, every element
  exactly once; grades are rationals like 2/3 (or integers 0 and 1).
  Example over the four-element algebra:

      0 = 1
      a = 1/2
      b = 0
      1 = 0

  Matrix file: one row per line, characters '0' and '1' only, all rows of
  equal length. Example:

      1100
      1010
";

#[derive(Parser)]
#[command(
    name = "latcode",
    version,
    about = "Finite residuated lattices, fuzzy ideals, and ideal-generated binary codes",
    after_long_help = FORMATS_HELP,
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of the algebra in FILE; exit 0 iff they all hold
    Validate {
        /// Algebra file (Wajsberg or residuated kind)
        file: PathBuf,
    },
    /// List the ideals of the algebra in FILE in canonical order
    Ideals {
        /// Algebra file (Wajsberg or residuated kind)
        file: PathBuf,
        /// Keep only proper ideals (excludes {0} and the whole algebra)
        #[arg(long)]
        proper: bool,
        /// Keep only prime ideals
        #[arg(long)]
        prime: bool,
        /// Print indicator bitstrings instead of element sets
        #[arg(long)]
        bits: bool,
    },
    /// Fuzzy-ideal operations
    #[command(subcommand)]
    Fuzzy(FuzzyCommand),
    /// Code constructions and matrix queries
    #[command(subcommand)]
    Code(CodeCommand),
    /// Push random messages through a binary symmetric channel and decode
    Simulate {
        /// Generator matrix file
        #[arg(long)]
        matrix: PathBuf,
        /// Bit-flip probability as an exact rational in [0, 1), e.g. 1/20
        #[arg(long)]
        p: String,
        /// Number of trials
        #[arg(long)]
        trials: u64,
        /// Base seed; trial t uses seed + t
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FuzzyCommand {
    /// Test a fuzzy subset against all fuzzy-ideal characterizations
    Check {
        /// Algebra file
        algebra: PathBuf,
        /// Fuzzy subset file
        fuzzy: PathBuf,
    },
    /// Print the least fuzzy ideal containing the given fuzzy subset
    Close {
        /// Algebra file
        algebra: PathBuf,
        /// Fuzzy subset file
        fuzzy: PathBuf,
    },
    /// Print the relative pseudocomplement of two fuzzy ideals over a grid
    Arrow {
        /// Algebra file
        algebra: PathBuf,
        /// Left fuzzy ideal file
        f1: PathBuf,
        /// Right fuzzy ideal file
        f2: PathBuf,
        #[command(flatten)]
        grid: GridArg,
    },
    /// Check the Heyting-algebra laws over all grid-valued fuzzy ideals
    Laws {
        /// Algebra file
        algebra: PathBuf,
        #[command(flatten)]
        grid: GridArg,
        /// Emit a tab-separated law/verdict/witness table
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Args)]
struct GridArg {
    /// Comma-separated grade grid, e.g. 0,1/2,1 (must contain 0 and 1)
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Generator matrix and parameters of the code spanned by ideal codewords
    FromIdeals {
        /// Algebra file
        algebra: PathBuf,
        /// Semicolon-separated ideals as comma-separated element lists,
        /// e.g. "0,a;0,b"; defaults to all proper ideals in canonical order
        #[arg(long)]
        ideals: Option<String>,
    },
    /// Build the Hadamard-type code of the n-fold product of the 2-element algebra
    Hadamard {
        /// Number of factors (2..=6)
        #[arg(long)]
        order: usize,
    },
    /// Rebuild the product algebra and its generating ideals from a block matrix
    Construct {
        /// Matrix file in block form
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Compute [n,k,d]_2 parameters of a matrix
    Params {
        /// Matrix file
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Print the canonical block-pattern matrix with the given row count
    BooleanForm {
        /// Number of rows (2..=16)
        #[arg(long)]
        order: usize,
    },
    /// Decide whether two matrices span the same row space
    Roweq {
        /// First matrix file
        m1: PathBuf,
        /// Second matrix file
        m2: PathBuf,
    },
    /// Code generated by all proper ideals (requires an even number of them)
    EvenIdeals {
        /// Algebra file
        algebra: PathBuf,
    },
}

/// Errors carry the exit status they map to: 1 for user errors, 2 for
/// internal invariant breaches.
struct CliError {
    status: u8,
    message: String,
}

impl CliError {
    fn user(message: impl Into<String>) -> CliError {
        CliError {
            status: 1,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> CliError {
        CliError {
            status: 2,
            message: message.into(),
        }
    }
}

macro_rules! user_error_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> CliError {
                CliError::user(e.to_string())
            }
        }
    )*};
}

user_error_from!(
    ParseError,
    StructureError,
    IdealError,
    FuzzyError,
    FuzzyLatticeError,
    CodeError,
    ChannelError,
    LatticeConversionError
);

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::user(format!("cannot read {}: {e}", path.display())))
}

/// Loads an algebra file of either kind as a residuated lattice, keeping the
/// Wajsberg table view when there is one (needed for the primality test).
fn load_lattice(path: &Path) -> Result<(FiniteResiduatedLattice, WajsbergAlgebra), CliError> {
    match parse_algebra(&read(path)?)? {
        AlgebraFile::Wajsberg(w) => {
            let l = w.to_residuated()?;
            Ok((l, w))
        }
        AlgebraFile::Residuated(l) => {
            let w = residuated_to_wajsberg(&l)?;
            Ok((l, w))
        }
    }
}

fn load_fuzzy(l: &FiniteResiduatedLattice, path: &Path) -> Result<FuzzySubset, CliError> {
    Ok(parse_fuzzy(l, &read(path)?)?)
}

fn load_matrix(path: &Path) -> Result<BinaryCode, CliError> {
    Ok(parse_matrix(&read(path)?)?)
}

/// Ideal listing format used by all subcommands: `{0,a,b}` without spaces.
fn ideal_string(l: &FiniteResiduatedLattice, s: ElemSet) -> String {
    let names: Vec<&str> = s.iter().map(|i| l.name(i)).collect();
    format!("{{{}}}", names.join(","))
}

fn parse_grid(spec: &GridArg, fallback: &[&FuzzySubset]) -> Result<ValueGrid, CliError> {
    match &spec.grid {
        None => Ok(ValueGrid::spanning(fallback)),
        Some(text) => {
            let values = text
                .split(',')
                .map(|t| parse_rational(0, t.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::user(format!("bad --grid value: {e}")))?;
            Ok(ValueGrid::new(values)?)
        }
    }
}

fn parse_ideal_list(
    l: &FiniteResiduatedLattice,
    text: &str,
) -> Result<Vec<IdealSet>, CliError> {
    text.split(';')
        .map(|group| {
            let mut members = ElemSet::EMPTY;
            for name in group.split(',') {
                let name = name.trim();
                let idx = l
                    .index_of(name)
                    .ok_or_else(|| CliError::user(format!("unknown element: {name}")))?;
                members.insert(idx);
            }
            Ok(IdealSet::new(l, members)?)
        })
        .collect()
}

fn print_code_and_params(code: &BinaryCode) -> Result<(), CliError> {
    for row in code.rows() {
        println!("{row}");
    }
    let params = code_params(code)?;
    println!("{params}");
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Validate { file } => {
            let report = match parse_algebra(&read(&file)?)? {
                AlgebraFile::Wajsberg(w) => w.validate(),
                AlgebraFile::Residuated(l) => l.validate(),
            };
            if report.ok() {
                println!("ok");
                Ok(0)
            } else {
                for v in &report.violations {
                    println!("{v}");
                }
                Ok(1)
            }
        }

        Command::Ideals {
            file,
            proper,
            prime,
            bits,
        } => {
            let (l, w) = load_lattice(&file)?;
            let ideals = if proper {
                proper_ideals(&l)
            } else {
                enumerate_ideals(&l)
            };
            for ideal in ideals {
                if prime && !is_prime_ideal(&w, &ideal, false)? {
                    continue;
                }
                if bits {
                    println!("{}", ideal.to_bitstring(&l));
                } else {
                    println!("{}", ideal_string(&l, ideal.members()));
                }
            }
            Ok(0)
        }

        Command::Fuzzy(cmd) => run_fuzzy(cmd),
        Command::Code(cmd) => run_code(cmd),

        Command::Simulate {
            matrix,
            p,
            trials,
            seed,
        } => {
            let code = load_matrix(&matrix)?;
            let flip_probability = parse_rational(0, &p)
                .map_err(|e| CliError::user(format!("bad --p value: {e}")))?;
            let config = ChannelConfig {
                flip_probability,
                trials,
                seed,
            };
            let report = run_channel(&code, &config)?;
            println!("{report}");
            Ok(0)
        }
    }
}

fn run_fuzzy(cmd: FuzzyCommand) -> Result<u8, CliError> {
    match cmd {
        FuzzyCommand::Check { algebra, fuzzy } => {
            let (l, _) = load_lattice(&algebra)?;
            let mu = load_fuzzy(&l, &fuzzy)?;
            let by_uplus = is_fuzzy_ideal(&l, &mu);
            let residual = is_fuzzy_ideal_residual(&l, &mu);
            let residual_impl = is_fuzzy_ideal_residual_impl(&l, &mu);
            let by_boxplus = is_fuzzy_ideal_boxplus(&l, &mu);
            let bound_unit = is_fuzzy_ideal_bound_unit(&l, &mu);
            let bound_below = is_fuzzy_ideal_bound_below(&l, &mu);
            let verdicts = [
                ("uplus", by_uplus),
                ("residual", residual && residual_impl),
                ("boxplus", by_boxplus),
                ("bound", bound_unit && bound_below),
            ];
            for (name, v) in verdicts {
                println!("{name}: {}", if v { "yes" } else { "no" });
            }
            let all = [
                by_uplus,
                residual,
                residual_impl,
                by_boxplus,
                bound_unit,
                bound_below,
            ];
            if all.iter().any(|&v| v != all[0]) {
                return Err(CliError::internal(format!(
                    "fuzzy-ideal characterizations disagree on {}: {all:?}",
                    fuzzy.display()
                )));
            }
            Ok(0)
        }

        FuzzyCommand::Close { algebra, fuzzy } => {
            let (l, _) = load_lattice(&algebra)?;
            let mu = load_fuzzy(&l, &fuzzy)?;
            let closed = fuzzy_closure(&l, &mu);
            print!("{}", serialize_fuzzy(&l, &closed));
            Ok(0)
        }

        FuzzyCommand::Arrow {
            algebra,
            f1,
            f2,
            grid,
        } => {
            let (l, _) = load_lattice(&algebra)?;
            let mu1 = load_fuzzy(&l, &f1)?;
            let mu2 = load_fuzzy(&l, &f2)?;
            let grid = parse_grid(&grid, &[&mu1, &mu2])?;
            let arrow = heyting_arrow(&l, &mu1, &mu2, &grid, DEFAULT_ENUM_BUDGET)?;
            print!("{}", serialize_fuzzy(&l, &arrow));
            Ok(0)
        }

        FuzzyCommand::Laws { algebra, grid, tsv } => {
            let (l, _) = load_lattice(&algebra)?;
            let grid = parse_grid(&grid, &[])?;
            let report = heyting_axioms_check(&l, &grid, DEFAULT_ENUM_BUDGET)?;
            if tsv {
                print!("{}", report.to_tsv());
            } else {
                print!("{report}");
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
    }
}

fn run_code(cmd: CodeCommand) -> Result<u8, CliError> {
    match cmd {
        CodeCommand::FromIdeals { algebra, ideals } => {
            let (l, _) = load_lattice(&algebra)?;
            let chosen = match ideals {
                Some(text) => parse_ideal_list(&l, &text)?,
                None => canonical_generator_order(proper_ideals(&l)),
            };
            if chosen.is_empty() {
                return Err(CliError::user("the algebra has no proper ideals"));
            }
            let code = generator_matrix(&l, &chosen)?;
            print_code_and_params(&code)?;
            Ok(0)
        }

        CodeCommand::Hadamard { order } => {
            let h = hadamard_from_boolean(order)?;
            for ideal in &h.ideals {
                println!("# ideal {}", ideal_string(&h.lattice, ideal.members()));
            }
            print_code_and_params(&h.code)?;
            Ok(0)
        }

        CodeCommand::Construct { matrix } => {
            let m = load_matrix(&matrix)?;
            let built = boolean_from_matrix(&m)?;
            print!("{}", serialize_wajsberg(&built.algebra));
            for ideal in &built.ideals {
                println!(
                    "# ideal {} codeword {}",
                    ideal_string(&built.lattice, ideal.members()),
                    codeword(&built.lattice, ideal).map_err(|e| CliError::user(e.to_string()))?
                );
            }
            Ok(0)
        }

        CodeCommand::Params { matrix } => {
            let code = load_matrix(&matrix)?;
            let params = code_params(&code)?;
            println!("{params}");
            Ok(0)
        }

        CodeCommand::BooleanForm { order } => {
            let code = boolean_form_matrix(order)?;
            print!("{}", serialize_matrix(&code));
            Ok(0)
        }

        CodeCommand::Roweq { m1, m2 } => {
            let a = load_matrix(&m1)?;
            let b = load_matrix(&m2)?;
            let eq = row_equivalent(&a, &b)?;
            println!("row-equivalent: {}", if eq { "yes" } else { "no" });
            Ok(0)
        }

        CodeCommand::EvenIdeals { algebra } => {
            let (l, _) = load_lattice(&algebra)?;
            let built = even_ideal_code(&l)?;
            for ideal in &built.ideals {
                println!("# ideal {}", ideal_string(&l, ideal.members()));
            }
            print_code_and_params(&built.code)?;
            println!(
                "distance>=3: {}",
                if built.distance_at_least_3 { "yes" } else { "no" }
            );
            Ok(0)
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status)
        }
    }
}
