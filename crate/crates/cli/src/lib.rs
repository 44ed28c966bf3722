//! File formats, reports and subcommands behind the `triclique` binary.

pub mod commands;
pub mod formats;
pub mod report;

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use triclique_core::{diagonal_context, power_context, PowerVariant, SizeCap};

pub use formats::Input;
pub use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Resource(String),
    #[error("oracle disagreement: {0}")]
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Resource(_) => 3,
            CliError::Disagreement(_) => 4,
        }
    }
}

impl From<triclique_core::Error> for CliError {
    fn from(e: triclique_core::Error) -> Self {
        match e {
            triclique_core::Error::SizeCap { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

/// Built-in context families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Power(usize),
    Diagonal(usize),
}

impl std::str::FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| format!("expected `power:N` or `diag:M`, got `{s}`"))?;
        let n: usize = n.parse().map_err(|_| format!("bad size in `{s}`"))?;
        if n == 0 {
            return Err("generated contexts need at least one entity per axis".into());
        }
        match kind {
            "power" => Ok(Generator::Power(n)),
            "diag" => Ok(Generator::Diagonal(n)),
            _ => Err(format!("unknown generator `{kind}`")),
        }
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::Power(n) => write!(f, "power:{n}"),
            Generator::Diagonal(m) => write!(f, "diag:{m}"),
        }
    }
}

/// Where the input comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Gen(Generator),
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::File(p) => write!(f, "{}", p.display()),
            Source::Gen(g) => write!(f, "--gen {g}"),
        }
    }
}

/// A parsed input together with its content digest.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub input: Input,
    pub digest: String,
    pub generator: Option<Generator>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn load_file(path: &Path) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(Loaded {
        input: formats::parse_input(text)?,
        digest: sha256_hex(&bytes),
        generator: None,
    })
}

pub fn load(source: &Source) -> Result<Loaded, CliError> {
    match source {
        Source::File(p) => load_file(p),
        Source::Gen(g) => {
            let ctx = match *g {
                Generator::Power(n) => power_context(n, PowerVariant::NotAllEqual)?,
                Generator::Diagonal(m) => diagonal_context(m)?,
            };
            Ok(Loaded {
                input: Input::Context(ctx),
                digest: sha256_hex(g.to_string().as_bytes()),
                generator: Some(*g),
            })
        }
    }
}

pub const SIZE_CAP_ENV: &str = "TRICLIQUE_SIZE_CAP";

/// Flag first, then the environment, then the default.
pub fn resolve_size_cap(flag: Option<usize>) -> Result<SizeCap, CliError> {
    if let Some(n) = flag {
        return Ok(SizeCap::new(n));
    }
    match std::env::var(SIZE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(SizeCap::new)
            .map_err(|_| CliError::Parse(format!("{SIZE_CAP_ENV}=`{v}` is not a number"))),
        Err(_) => Ok(SizeCap::DEFAULT),
    }
}
