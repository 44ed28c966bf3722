use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use triclique::commands::{self, Arity, Convention, Method, Outcome};
use triclique::{load, resolve_size_cap, CliError, Generator, Source};

#[derive(Parser)]
#[command(name = "triclique", version, about = "Triconcepts, switching generators and CCS diagnostics for triadic contexts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Context (CSV or JSON) or database (JSON) file.
    #[arg(required_unless_present = "gen", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Built-in context: `power:N` or `diag:M`.
    #[arg(long)]
    gen: Option<Generator>,
    /// Maximum entities per axis for exhaustive searches.
    #[arg(long)]
    size_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// List triconcepts.
    Triconcepts {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// List switching generators and their count.
    Switching {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Convention::Product)]
        count_convention: Convention,
        #[arg(long, value_enum, default_value_t = Arity::Pairwise)]
        arity: Arity,
    },
    /// Maximal complete connected sets, phantom hyperedges and repairs.
    Mccs {
        #[command(flatten)]
        common: Common,
    },
    /// Closure-property table.
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Print the tripartite encoding of a context as a database document.
    Encode {
        #[command(flatten)]
        common: Common,
    },
}

fn source(c: &Common) -> Source {
    match (&c.input, c.gen) {
        (_, Some(g)) => Source::Gen(g),
        (Some(p), None) => Source::File(p.clone()),
        (None, None) => unreachable!("clap requires one of them"),
    }
}

fn echo(name: &str, flags: &[String], src: &Source) -> String {
    let mut parts = vec![name.to_string()];
    parts.extend(flags.iter().cloned());
    parts.push(src.to_string());
    parts.join(" ")
}

fn emit(out: Outcome, format: Format) -> i32 {
    match format {
        Format::Structured => print!("{}", out.report.to_json()),
        Format::Table => print!("{}", out.table),
    }
    out.status
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Triconcepts { common, method } => {
            let src = source(&common);
            let cap = resolve_size_cap(common.size_cap)?;
            let loaded = load(&src)?;
            let flag = format!("--method {}", method.to_possible_value().expect("named").get_name());
            let out = commands::triconcepts(&loaded, echo("triconcepts", &[flag], &src), method, cap)?;
            Ok(emit(out, common.format))
        }
        Command::Switching { common, count_convention, arity } => {
            let src = source(&common);
            let cap = resolve_size_cap(common.size_cap)?;
            let loaded = load(&src)?;
            let flags = [
                format!("--count-convention {}", count_convention.to_possible_value().expect("named").get_name()),
                format!("--arity {}", arity.to_possible_value().expect("named").get_name()),
            ];
            let out = commands::switching(&loaded, echo("switching", &flags, &src), count_convention, arity, cap)?;
            Ok(emit(out, common.format))
        }
        Command::Mccs { common } => {
            let src = source(&common);
            let cap = resolve_size_cap(common.size_cap)?;
            let loaded = load(&src)?;
            let out = commands::mccs(&loaded, echo("mccs", &[], &src), cap)?;
            Ok(emit(out, common.format))
        }
        Command::Check { common } => {
            let src = source(&common);
            let cap = resolve_size_cap(common.size_cap)?;
            let loaded = load(&src)?;
            let out = commands::check(&loaded, echo("check", &[], &src), cap)?;
            Ok(emit(out, common.format))
        }
        Command::Encode { common } => {
            let doc = commands::encode(&load(&source(&common))?)?;
            println!("{}", serde_json::to_string_pretty(&doc).expect("documents serialise"));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("triclique: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
