use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use invcat::job::{Job, Overrides};
use invcat::{exit, pipeline, InputError};

#[derive(Parser)]
#[command(
    name = "invcat",
    version,
    about = "Invariant categories of quivers under finite group actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant quiver, check freeness and classify.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the input quiver's representation type.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare the character fast path with the general engine.
    SchurianCheck {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    verify_depth: Option<usize>,
    #[arg(long)]
    path_cap: Option<usize>,
    #[arg(long)]
    group_cap: Option<usize>,
}

impl Input {
    fn overrides(&self) -> Overrides {
        Overrides {
            max_degree: self.max_degree,
            verify_depth: self.verify_depth,
            path_cap: self.path_cap,
            group_cap: self.group_cap,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> InputError + '_ {
    move |err| InputError::Io {
        path: path.display().to_string(),
        err,
    }
}

fn load(path: &Path, overrides: &Overrides) -> Result<Job, InputError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    Job::from_json(&text, overrides)
}

/// Writes through a sibling temp file so a reader never sees a partial report.
fn write_atomic(path: &Path, contents: &str) -> Result<(), InputError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err(path))?;
    tmp.write_all(contents.as_bytes()).map_err(io_err(path))?;
    tmp.persist(path).map_err(|e| io_err(path)(e.error))?;
    Ok(())
}

fn run(cli: Cli) -> Result<i32, InputError> {
    match cli.command {
        Command::Compute { input, out } => {
            let job = load(&input.input, &input.overrides())?;
            let report = pipeline::compute(&job)?;
            print!("{}", report.summary());
            if let Some(out) = out {
                write_atomic(&out, &report.to_json())?;
            }
            Ok(if report.falsified() { exit::FALSIFIED } else { exit::OK })
        }
        Command::Classify { input } => {
            let job = load(&input, &Overrides::default())?;
            let c = pipeline::classify_job(&job);
            println!("{} [{}]", c.rep_type, c.components.join(", "));
            Ok(exit::OK)
        }
        Command::SchurianCheck { input } => {
            let job = load(&input.input, &input.overrides())?;
            let s = pipeline::schurian_check(&job)?;
            println!("{}", serde_json::to_string_pretty(&s).expect("serializes"));
            Ok(if s.holds() { exit::OK } else { exit::FALSIFIED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::INPUT as u8)
        }
    }
}
