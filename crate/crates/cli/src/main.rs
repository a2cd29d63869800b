mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

/// Counts and volumes of representation varieties Hom(Π, G).
#[derive(Debug, Parser)]
#[command(name = "repvol", version)]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Work cap for exhaustive enumeration.
    #[arg(long, global = true, env = "MP_BUDGET", default_value_t = repvol::homcount::DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "MP_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Finite group information and character tables.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Count homomorphisms from a presented group by enumeration.
    Homcount(PresentationArgs),
    /// Fiber sizes of a single relator over every conjugacy class.
    VolumeDist(PresentationArgs),
    /// Surface-group counts by enumeration and by characters.
    Surface(SurfaceArgs),
    /// Andrews–Curtis moves.
    #[command(subcommand)]
    Ac(AcCommand),
    /// Möbius graphs: surface type and group sums.
    #[command(subcommand)]
    Mobius(MobiusCommand),
    /// Witten zeta sums for compact Lie groups.
    Wzeta(WzetaArgs),
    /// Run every identity check over the catalog.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Order, conjugacy classes and character table.
    Info {
        /// `Zn`, `Dn`, `Sn`, `An`, `Q8`, `perm: (1 2), (1 2 3)` or `table: PATH`
        group: String,
        /// Print the character table in this format.
        #[arg(long, value_enum)]
        table: Option<TableFormat>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
struct PresentationSource {
    /// Presentation text, e.g. `<a, b | [a,b]>`.
    #[arg(long, short = 'p', group = "source")]
    presentation: Option<String>,
    /// File holding a presentation.
    #[arg(long, short = 'f', group = "source")]
    file: Option<String>,
}

#[derive(Debug, Args)]
struct PresentationArgs {
    #[arg(long, short = 'g')]
    group: String,
    #[command(flatten)]
    source: PresentationSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Brute,
    Character,
    Both,
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    #[arg(long, short = 'g')]
    group: String,
    /// Orientable genus.
    #[arg(long, conflicts_with = "crosscaps", required_unless_present = "crosscaps")]
    genus: Option<u32>,
    /// Number of cross-caps (non-orientable).
    #[arg(long)]
    crosscaps: Option<u32>,
    #[arg(long, value_enum, default_value_t = CountMethod::Both)]
    method: CountMethod,
    /// Also print the volume distribution over conjugacy classes.
    #[arg(long)]
    distribution: bool,
}

#[derive(Debug, Subcommand)]
enum AcCommand {
    /// Apply moves in order and print each presentation.
    Apply {
        #[command(flatten)]
        source: PresentationSource,
        /// `swap J`, `conjugate W`, `invert`, `multiply`, `add [NAME]`,
        /// `delete NAME`; repeat for a sequence.
        #[arg(long = "move", short = 'm', required = true)]
        moves: Vec<String>,
        /// Count homomorphisms into this group after every move.
        #[arg(long, short = 'g')]
        group: Option<String>,
    },
    /// Random move sequences; checks that counts never change.
    Fuzz {
        #[command(flatten)]
        source: PresentationSource,
        #[arg(long, short = 'g')]
        group: String,
        #[arg(long, default_value_t = 100)]
        sequences: usize,
        /// Longest sequence.
        #[arg(long, default_value_t = 8)]
        length: usize,
        #[arg(long, default_value_t = 4)]
        max_generators: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphMethod {
    Direct,
    Formula,
    Both,
}

#[derive(Debug, Subcommand)]
enum MobiusCommand {
    /// Vertices, edges, faces and surface type.
    Classify {
        /// Graph file, or the name of a built-in graph.
        graph: String,
    },
    /// The group sum over labelings of the graph.
    Eval {
        graph: String,
        #[arg(long, short = 'g')]
        group: String,
        #[arg(long, value_enum, default_value_t = GraphMethod::Both)]
        method: GraphMethod,
    },
}

#[derive(Debug, Args)]
struct WzetaArgs {
    /// `su2`, `su:N` or `torus:N`.
    #[arg(long)]
    family: String,
    #[arg(long, conflicts_with = "crosscaps", required_unless_present = "crosscaps")]
    genus: Option<u32>,
    #[arg(long)]
    crosscaps: Option<u32>,
    /// Bound on |value − limit|.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run only these criteria (1–10).
    #[arg(long, short = 'c')]
    criterion: Vec<u8>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("repvol:error:usage: {e}");
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    match commands::run(cli) {
        Ok(code) => code,
        Err(CliError { kind, message }) => {
            eprintln!("repvol:error:{}: {message}", kind.tag());
            ExitCode::from(kind.exit_code() as u8)
        }
    }
}
