use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use palindefect::cli::{self, Check, Command, OutputFormat, RunConfig, WordInput, EXIT_CONFIG};

#[derive(Parser)]
#[command(name = "palindefect", version, about = "Palindromic defect and complexity checks on words")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Table of C(n), P(n), T(n) with the defect and trusted range
    Profile(Opts),
    /// Finite identity plus any selected checks
    Verify(Opts),
    /// Defect stabilisation over a prefix schedule
    Harness(Opts),
    /// Export the special-factor graph for one length
    Graph(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Args)]
struct Opts {
    /// Word-spec file
    #[arg(long, conflicts_with = "text", required_unless_present = "text")]
    spec: Option<PathBuf>,
    /// Inline finite word; the alphabet is its distinct letters
    #[arg(long)]
    text: Option<String>,
    /// Prefix length for infinite sources
    #[arg(long)]
    len: Option<usize>,
    /// Largest factor length to profile [default: 30]
    #[arg(long)]
    nmax: Option<usize>,
    /// Length or inclusive range, e.g. 3 or 1..10
    #[arg(long)]
    n: Option<String>,
    /// Comma-separated prefix lengths
    #[arg(long)]
    schedule: Option<String>,
    /// lemma1|lemma2|prop41|lemma43|gn|alternation|nonneg (repeatable)
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Window start `q` for the counting checks
    #[arg(long)]
    q: Option<usize>,
    /// Prefix-sum bound `p` for the counting checks
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Override the seed of a random source
    #[arg(long)]
    seed: Option<u64>,
}

fn config(command: Command, o: Opts) -> palindefect::Result<RunConfig> {
    let input = match (o.spec, o.text) {
        (Some(path), _) => WordInput::Spec(path),
        (None, Some(text)) => WordInput::Text(text),
        (None, None) => unreachable!("clap requires one of --spec/--text"),
    };
    let mut c = RunConfig::new(input, command);
    c.len = o.len;
    c.n_max = o.nmax;
    c.n_range = o.n.as_deref().map(cli::parse_range).transpose()?;
    c.schedule = o.schedule.as_deref().map(cli::parse_schedule).transpose()?;
    c.checks = o.checks.iter().map(|s| s.parse::<Check>()).collect::<palindefect::Result<_>>()?;
    c.q = o.q;
    c.p = o.p;
    c.format = match o.format {
        Format::Table => OutputFormat::Table,
        Format::Json => OutputFormat::Json,
        Format::Csv => OutputFormat::Csv,
        Format::Dot => OutputFormat::Dot,
    };
    c.output = o.output;
    c.seed = o.seed;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG as u8 } else { 0 });
        }
    };
    let (command, opts) = match cli.command {
        Cmd::Profile(o) => (Command::Profile, o),
        Cmd::Verify(o) => (Command::Verify, o),
        Cmd::Harness(o) => (Command::Harness, o),
        Cmd::Graph(o) => (Command::Graph, o),
    };
    let outcome = config(command, opts).and_then(|c| cli::run(&c).map(|out| (c, out)));
    match outcome {
        Ok((c, out)) => {
            match &c.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &out.rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_CONFIG as u8);
                    }
                }
                None => print!("{}", out.rendered),
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}
