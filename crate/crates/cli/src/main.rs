use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use manin_forge::error::{CliError, EXIT_INPUT};
use manin_forge::examples::{self, Example};
use manin_forge::pipelines::{self, OperatorSource, Outcome};
use manin_forge::run::RunReport;
use manin_forge::workspace::Workspace;

#[derive(Parser)]
#[command(name = "manin-forge", version, about = "Build and verify Manin triples, O-operators and twilled extensions in exact arithmetic")]
struct Cli {
    /// Print a readable report instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Print nothing; only the exit status reports the result.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suite of a document's root object (or of every object).
    Verify { files: Vec<PathBuf> },
    /// Twist a Manin triple by (G, B) and split the result into ideals.
    Forward(ForwardArgs),
    /// Build a Manin triple from an anti-isomorphic pair and a θ on E⁺.
    Reverse {
        pair: PathBuf,
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in example and compare it with its expected tables.
    Example { name: ExampleName },
}

#[derive(Args)]
struct ForwardArgs {
    manin: PathBuf,
    /// An r-matrix on g₋.
    #[arg(long, conflicts_with_all = ["metric", "twist"], required_unless_present = "metric")]
    r: Option<PathBuf>,
    /// The metric part G: g₊ → g₋.
    #[arg(long, requires = "twist")]
    metric: Option<PathBuf>,
    /// The twist part B: g₊ → g₋.
    #[arg(long, requires = "metric")]
    twist: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum ExampleName {
    Sl2Forward,
    Sl2Reverse,
    Sl2Crosscheck,
}

impl From<ExampleName> for Example {
    fn from(e: ExampleName) -> Self {
        match e {
            ExampleName::Sl2Forward => Example::Sl2Forward,
            ExampleName::Sl2Reverse => Example::Sl2Reverse,
            ExampleName::Sl2Crosscheck => Example::Sl2Crosscheck,
        }
    }
}

fn display(paths: &[&Path]) -> Vec<String> {
    paths.iter().map(|p| p.display().to_string()).collect()
}

/// The only object of `kind` among the documents loaded from `path`.
fn root_in(path: &Path, kind: &str) -> Result<String, CliError> {
    Workspace::load(&[path])?.root_of_kind(kind)
}

fn load_with(base: &Path, extra: &[&Path]) -> Result<Workspace, CliError> {
    let mut all = vec![base];
    all.extend_from_slice(extra);
    Workspace::load(&all)
}

fn write_out(out: &Option<PathBuf>, outcome: &Outcome) -> Result<(), CliError> {
    if let (Some(path), Some(doc)) = (out, &outcome.outputs) {
        fs::write(path, doc.to_canonical()).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(RunReport, manin_forge_core::Report), CliError> {
    match &cli.command {
        Command::Verify { files } => {
            if files.is_empty() {
                return Err(CliError::Schema("verify needs at least one file".into()));
            }
            let paths: Vec<&Path> = files.iter().map(PathBuf::as_path).collect();
            let ws = Workspace::load(&paths)?;
            let report = pipelines::verify(&ws)?;
            Ok((RunReport::new("verify", display(&paths), &report, None), report))
        }
        Command::Forward(a) => {
            let triple = root_in(&a.manin, "manin_triple")?;
            let (ws, source, extra) = match (&a.r, &a.metric, &a.twist) {
                (Some(r), _, _) => {
                    let name = root_in(r, "r_matrix")?;
                    (load_with(&a.manin, &[r])?, OperatorSource::RMatrix(name), vec![r.as_path()])
                }
                (None, Some(m), Some(t)) => {
                    let ws = load_with(&a.manin, &[m, t])?;
                    let metric = root_in(m, "linear_map")?;
                    let twist = root_in(t, "linear_map")?;
                    (ws, OperatorSource::MetricTwist { metric, twist }, vec![m.as_path(), t.as_path()])
                }
                _ => return Err(CliError::Schema("forward needs --r or both --metric and --twist".into())),
            };
            let outcome = pipelines::forward(&ws, &triple, &source)?;
            write_out(&a.out, &outcome)?;
            let mut inputs = vec![a.manin.as_path()];
            inputs.extend(extra);
            let run = RunReport::new("forward", display(&inputs), &outcome.report, outcome.outputs.clone());
            Ok((run, outcome.report))
        }
        Command::Reverse { pair, theta, out } => {
            let pair_name = root_in(pair, "anti_iso_pair")?;
            let theta_name = root_in(theta, "linear_map")?;
            let ws = load_with(pair, &[theta])?;
            let outcome = pipelines::reverse(&ws, &pair_name, &theta_name)?;
            write_out(out, &outcome)?;
            let run = RunReport::new("reverse", display(&[pair, theta]), &outcome.report, outcome.outputs.clone());
            Ok((run, outcome.report))
        }
        Command::Example { name } => {
            let ex = Example::from(*name);
            let report = examples::run(ex)?;
            let run = RunReport::new(&format!("example {}", ex.name()), vec![], &report, None);
            Ok((run, report))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((run, report)) => {
            if !cli.quiet {
                if cli.human {
                    print!("{}", run.to_human(&report));
                } else {
                    print!("{}", run.to_json());
                }
            }
            ExitCode::from(run.exit_code as u8)
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e}");
                if let CliError::Check { report, .. } = &e {
                    eprint!("{report}");
                }
            }
            let code = e.exit_code();
            ExitCode::from(if code == 0 { EXIT_INPUT } else { code } as u8)
        }
    }
}
