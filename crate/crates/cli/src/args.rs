use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use ratapprox::alpha::parse_rational;
use ratapprox::scan::{Kind, TableSelect};
use ratapprox::AlphaSpec;

use crate::{CliError, Format, RunConfig, StyleChoice};

#[derive(Debug, Parser)]
#[command(name = "ratapprox", version, about = "Best rational approximations of irrational numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Constant: pi, e, phi, sqrt:<d>, quad:<a>,<b>,<c>,<d> or dec:<digits>[@<bound>]
    #[arg(long, global = true)]
    alpha: Vec<String>,

    /// Largest denominator (repeat for bench)
    #[arg(long = "max-q", global = true)]
    max_q: Vec<u64>,

    /// Approximation kind: I, II or III
    #[arg(long, global = true, default_value = "I")]
    kind: Kind,

    #[arg(long, global = true, value_enum, default_value_t = AlgorithmArg::Rcf)]
    algorithm: AlgorithmArg,

    /// Number of partial quotients
    #[arg(long, global = true, default_value_t = 10)]
    terms: usize,

    /// Keep the first k rows of the sorted table
    #[arg(long, global = true, conflicts_with = "below")]
    top: Option<usize>,

    /// Keep the rows whose key is below this rational
    #[arg(long, global = true)]
    below: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Tsv)]
    format: FormatArg,

    /// Significant digits for the pretty style
    #[arg(long, global = true, default_value_t = 9, value_parser = clap::value_parser!(u32).range(3..=30))]
    digits: u32,

    /// Number style; `table` defaults to paper, the rest to pretty
    #[arg(long, global = true, value_enum)]
    style: Option<StyleArg>,

    /// Worker threads for the denominator scan
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    threads: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Best approximations of one kind, in denominator order
    Scan,
    /// All denominators sorted by the kind's key
    Table,
    /// Regular or nearest-integer continued fraction
    Cf,
    /// Cross-checks every property and prints a pass/fail matrix
    Verify,
    /// Times the denominator scan against the continued fraction
    Bench,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Rcf,
    Nicf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Tsv,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StyleArg {
    Paper,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandName {
    Scan,
    Table,
    Cf,
    Verify,
    Bench,
}

#[derive(Debug)]
pub enum ParseOutcome {
    /// Help, version or a malformed command line.
    Clap(clap::Error),
    /// Well-formed but semantically invalid options.
    Invalid(CliError),
}

pub fn parse<I, T>(args: I) -> Result<(CommandName, RunConfig), ParseOutcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(ParseOutcome::Clap)?;
    build(cli).map_err(ParseOutcome::Invalid)
}

fn build(cli: Cli) -> Result<(CommandName, RunConfig), CliError> {
    let alphas = cli
        .alpha
        .iter()
        .map(|s| AlphaSpec::parse(s).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let limits = if cli.max_q.is_empty() { vec![1000] } else { cli.max_q };
    if limits.contains(&0) {
        return Err(CliError::Usage("--max-q must be >= 1".into()));
    }
    if cli.terms == 0 {
        return Err(CliError::Usage("--terms must be >= 1".into()));
    }
    let select = match (cli.top, cli.below) {
        (Some(k), _) => Some(TableSelect::Top(k)),
        (None, Some(b)) => {
            let t = parse_rational(&b).ok_or_else(|| CliError::Usage(format!("--below: not a rational: {b:?}")))?;
            Some(TableSelect::Below(t))
        }
        (None, None) => None,
    };
    let command = match cli.command {
        Command::Scan => CommandName::Scan,
        Command::Table => CommandName::Table,
        Command::Cf => CommandName::Cf,
        Command::Verify => CommandName::Verify,
        Command::Bench => CommandName::Bench,
    };
    let config = RunConfig {
        alphas,
        limits,
        kind: cli.kind,
        algorithm: match cli.algorithm {
            AlgorithmArg::Rcf => ratapprox::cf::CfAlgorithm::Regular,
            AlgorithmArg::Nicf => ratapprox::cf::CfAlgorithm::NearestInteger,
        },
        terms: cli.terms,
        select,
        format: match cli.format {
            FormatArg::Tsv => Format::Tsv,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        },
        digits: cli.digits,
        style: cli.style.map(|s| match s {
            StyleArg::Paper => StyleChoice::Paper,
            StyleArg::Pretty => StyleChoice::Pretty,
        }),
        threads: cli.threads as usize,
    };
    Ok((command, config))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> (CommandName, RunConfig) {
        parse(std::iter::once("ratapprox").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults() {
        let (c, cfg) = ok(&["scan", "--alpha", "pi"]);
        assert_eq!(c, CommandName::Scan);
        assert_eq!((cfg.limits, cfg.kind, cfg.digits, cfg.threads), (vec![1000], Kind::I, 9, 1));
    }

    #[test]
    fn global_flags_before_subcommand() {
        let (_, cfg) = ok(&["--alpha", "phi", "--alpha", "pi", "verify", "--max-q", "50"]);
        assert_eq!(cfg.alphas.len(), 2);
        assert_eq!(cfg.limits, [50]);
    }

    #[test]
    fn invalid_values() {
        let parse = |a: &[&str]| parse(std::iter::once("ratapprox").chain(a.iter().copied()));
        assert!(matches!(parse(&["scan", "--digits", "2"]), Err(ParseOutcome::Clap(_))));
        assert!(matches!(parse(&["scan", "--kind", "IV"]), Err(ParseOutcome::Clap(_))));
        assert!(matches!(parse(&["scan", "--alpha", "sqrt:4"]), Err(ParseOutcome::Invalid(CliError::Usage(_)))));
        assert!(matches!(parse(&["scan", "--max-q", "0"]), Err(ParseOutcome::Invalid(CliError::Usage(_)))));
        assert!(matches!(parse(&["table", "--below", "x"]), Err(ParseOutcome::Invalid(_))));
    }
}
