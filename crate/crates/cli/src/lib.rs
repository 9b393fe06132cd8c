//! The `ratapprox` command line: `scan`, `table`, `cf`, `verify` and
//! `bench`, writing TSV, CSV or aligned text.

use std::io::{self, Write};

use ratapprox::cf::CfAlgorithm;
use ratapprox::render::Style;
use ratapprox::scan::{Kind, TableSelect};
use ratapprox::AlphaSpec;

pub mod args;
pub mod commands;
pub mod golden;
pub mod output;
pub mod verify;

pub use output::{Format, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precision(String),
    #[error("{0}")]
    Failed(String),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Precision(_) => EXIT_PRECISION,
            CliError::Failed(_) | CliError::Io(_) => EXIT_FAILED,
        }
    }
}

impl From<ratapprox::Error> for CliError {
    fn from(e: ratapprox::Error) -> Self {
        match e {
            ratapprox::Error::PrecisionExhausted(_) => CliError::Precision(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StyleChoice {
    Paper,
    Pretty,
}

/// Options shared by every subcommand, already validated.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub alphas: Vec<AlphaSpec>,
    /// `--max-q`; several only for `bench`.
    pub limits: Vec<u64>,
    pub kind: Kind,
    pub algorithm: CfAlgorithm,
    pub terms: usize,
    pub select: Option<TableSelect>,
    pub format: Format,
    pub digits: u32,
    pub style: Option<StyleChoice>,
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            alphas: Vec::new(),
            limits: vec![1000],
            kind: Kind::I,
            algorithm: CfAlgorithm::Regular,
            terms: 10,
            select: None,
            format: Format::Tsv,
            digits: 9,
            style: None,
            threads: 1,
        }
    }
}

impl RunConfig {
    pub fn alpha(&self) -> Result<&AlphaSpec, CliError> {
        match self.alphas.as_slice() {
            [a] => Ok(a),
            [] => Err(CliError::Usage("--alpha is required".into())),
            _ => Err(CliError::Usage("this command takes a single --alpha".into())),
        }
    }

    pub fn limit(&self) -> Result<u64, CliError> {
        match self.limits.as_slice() {
            [n] => Ok(*n),
            _ => Err(CliError::Usage("this command takes a single --max-q".into())),
        }
    }

    pub fn render_style(&self, default: StyleChoice) -> Style {
        match self.style.unwrap_or(default) {
            StyleChoice::Paper => Style::Paper,
            StyleChoice::Pretty => Style::Pretty { digits: self.digits },
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (command, config) = match args::parse(args) {
        Ok(parsed) => parsed,
        Err(args::ParseOutcome::Clap(e)) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
        Err(args::ParseOutcome::Invalid(e)) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let result = match command {
        args::CommandName::Scan => commands::cmd_scan(&config, out),
        args::CommandName::Table => commands::cmd_table(&config, out),
        args::CommandName::Cf => commands::cmd_cf(&config, out),
        args::CommandName::Verify => verify::cmd_verify(&config, out),
        args::CommandName::Bench => commands::cmd_bench(&config, out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
