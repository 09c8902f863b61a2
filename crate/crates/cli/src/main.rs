use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use zeta_exact::exact::{parse_rational, Rational};
use zeta_exact::numeric::Precision;
use zeta_exact::verify::Suite;
use zeta_exact::{Error, ExecMode};
use zeta_exact_cli::commands::{self, TableKind};
use zeta_exact_cli::OutputRecord;

#[derive(Parser)]
#[command(name = "zetacalc", version, about = "Exact values of zeta and L-functions at integers")]
struct Cli {
    /// Output format; csv is accepted by `table` only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// zeta(-m)
    ZetaNeg { m: u64 },
    /// zeta(2m) as c * pi^(2m)
    ZetaEven { m: u64 },
    /// zeta(-m, alpha) at a rational alpha, or as a polynomial in alpha
    Hurwitz {
        m: u64,
        #[arg(long, value_parser = rational, required_unless_present = "poly", conflicts_with = "poly")]
        alpha: Option<Rational>,
        #[arg(long)]
        poly: bool,
    },
    /// Bernoulli number B_n, or the polynomial B_n(a)
    Bernoulli {
        n: u64,
        #[arg(long)]
        poly: bool,
    },
    /// Dirichlet characters mod q in index order
    Characters { q: u64 },
    /// L(n, chi): closed form for n >= 1 of matching parity, exact value for n <= 0
    Lvalue {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        q: u64,
        index: usize,
    },
    /// L(1, chi) for odd primitive chi
    L1 { q: u64, index: usize },
    /// Lerch zeta at s = -m for rational lambda, or as a polynomial in alpha
    Lerch {
        #[arg(value_parser = rational)]
        lambda: Rational,
        m: u64,
        #[arg(long)]
        poly: bool,
    },
    /// r-fold sum Z_r(-m, alpha); --literal compares with the literal expansion
    Multi {
        r: u64,
        m: u64,
        #[arg(long)]
        literal: bool,
    },
    /// Run verification suites (all when --suite is absent)
    Verify {
        #[arg(long, value_parser = suite)]
        suite: Vec<Suite>,
        /// Significant digits for numeric checks
        #[arg(long, env = "ZETACALC_PREC", default_value_t = 50, value_parser = clap::value_parser!(u32).range(10..))]
        prec: u32,
        /// Run checks on the calling thread
        #[arg(long)]
        sequential: bool,
    },
    /// Table of values for indices up to --max
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 10)]
        max: u64,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite '{s}' (expected one of {})", names.join(", "))
    })
}

fn emit(records: &[OutputRecord], format: Format) -> io::Result<()> {
    let mut out = io::stdout().lock();
    for r in records {
        match format {
            Format::Json => writeln!(out, "{}", r.to_json())?,
            _ => writeln!(out, "{r}")?,
        }
    }
    Ok(())
}

fn emit_table(rows: &[(u64, OutputRecord)], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["n", "value"])?;
            for (n, r) in rows {
                w.write_record([n.to_string(), r.text.clone()])?;
            }
            w.flush()
        }
        Format::Json => emit(&rows.iter().map(|(_, r)| r.clone()).collect::<Vec<_>>(), format),
        Format::Text => {
            let mut out = io::stdout().lock();
            for (n, r) in rows {
                writeln!(out, "{n:>4}  {r}")?;
            }
            Ok(())
        }
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_domain() { 2 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format == Format::Csv && !matches!(cli.cmd, Cmd::Table { .. }) {
        Cli::command()
            .error(ErrorKind::ArgumentConflict, "--format csv is only available for `table`")
            .exit();
    }
    let result = match cli.cmd {
        Cmd::ZetaNeg { m } => Ok(commands::zeta_neg_cmd(m)),
        Cmd::ZetaEven { m } => commands::zeta_even_cmd(m),
        Cmd::Hurwitz { m, alpha, .. } => Ok(commands::hurwitz_cmd(m, alpha.as_ref())),
        Cmd::Bernoulli { n, poly } => Ok(commands::bernoulli_cmd(n, poly)),
        Cmd::Characters { q } => commands::characters_cmd(q),
        Cmd::Lvalue { n, q, index } => commands::lvalue_cmd(n, q, index),
        Cmd::L1 { q, index } => commands::l1_cmd(q, index),
        Cmd::Lerch { lambda, m, poly } => commands::lerch_cmd(&lambda, m, poly),
        Cmd::Multi { r, m, literal } => commands::multi_cmd(r, m, literal),
        Cmd::Verify { suite, prec, sequential } => {
            let suites = if suite.is_empty() { Suite::ALL.to_vec() } else { suite };
            let mode = if sequential { ExecMode::Sequential } else { ExecMode::default() };
            let (records, ok) = commands::verify_cmd(&suites, Precision::digits(prec), mode);
            if emit(&records, cli.format).is_err() {
                return ExitCode::from(1);
            }
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
        Cmd::Table { kind, max } => {
            let rows = commands::table_cmd(kind, max);
            return match emit_table(&rows, cli.format) {
                Ok(()) => ExitCode::SUCCESS,
                Err(_) => ExitCode::from(1),
            };
        }
    };
    match result {
        Ok(records) => match emit(&records, cli.format) {
            Ok(()) => ExitCode::SUCCESS,
            Err(_) => ExitCode::from(1),
        },
        Err(e) => fail(&e),
    }
}
