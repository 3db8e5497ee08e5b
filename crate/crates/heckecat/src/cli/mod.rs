//! Command-line front end. The binary only parses arguments and calls [`main_with`].

mod commands;
mod config;
mod output;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use config::{parse_config, parse_weight, parse_word, Format, RunConfig};
pub use output::Output;

use crate::error::Error;

#[derive(Parser, Debug)]
#[command(name = "heckecat", version, about = "Hecke category computations in characteristic p")]
pub struct Cli {
    /// key = value file with the same keys as the flags; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Root datum preset: A1, A2, A2-adj
    #[arg(long = "type", global = true)]
    pub datum_type: Option<String>,
    /// Root datum file (keys: cartan, rank, form)
    #[arg(long, global = true)]
    pub datum_file: Option<PathBuf>,
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Word in the generators 0..=rank, e.g. 0101 or 0,1,0,1
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Comma-separated weight coordinates
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub weight: Option<String>,
    #[arg(long, global = true)]
    pub bound: Option<i64>,
    #[arg(long, global = true)]
    pub max_len: Option<usize>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub field_ext: Option<u32>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Restrict element tables to the finite Weyl group
    #[arg(long, global = true)]
    pub finite: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orbits, stabilizers, alcove data and reduced words
    Weyl {
        #[arg(value_enum)]
        query: WeylQuery,
    },
    /// Table of p-canonical coefficients next to Kazhdan–Lusztig coefficients
    Pcan,
    /// SL2 tilting characters, engine against oracle
    Tilt,
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum WeylQuery {
    Orbit,
    Stab,
    Alcove,
    Word,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Weyl,
    Realization,
    Sbim,
    Hecke,
    Modrep,
    All,
}

impl Cli {
    pub fn run_config(&self) -> crate::Result<RunConfig> {
        let s = |x: &Option<String>| x.clone();
        let n = |x: Option<String>| x;
        RunConfig::resolve(
            self.config.as_deref(),
            &[
                ("type", s(&self.datum_type)),
                ("datum-file", self.datum_file.as_ref().map(|p| p.display().to_string())),
                ("p", self.p.map(|x| x.to_string())),
                ("word", s(&self.word)),
                ("weight", s(&self.weight)),
                ("bound", self.bound.map(|x| x.to_string())),
                ("max-len", self.max_len.map(|x| x.to_string())),
                ("samples", self.samples.map(|x| x.to_string())),
                ("field-ext", self.field_ext.map(|x| x.to_string())),
                ("seed", self.seed.map(|x| x.to_string())),
                ("format", self.format.map(|f| format!("{f:?}").to_lowercase())),
                ("out", self.out.as_ref().map(|p| p.display().to_string())),
                ("finite", n(self.finite.then(|| "true".to_string()))),
            ],
        )
    }
}

pub fn execute(cli: &Cli) -> crate::Result<(RunConfig, Output)> {
    let cfg = cli.run_config()?;
    let out = match &cli.command {
        Command::Weyl { query } => commands::weyl(&cfg, *query)?,
        Command::Pcan => commands::pcan(&cfg)?,
        Command::Tilt => commands::tilt(&cfg)?,
        Command::Verify { suite } => suites::verify(&cfg, *suite)?,
    };
    Ok((cfg, out))
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Precondition(_) | Error::RootDatum(_) | Error::NotAffine => 2,
        _ => 1,
    }
}

/// Runs the CLI on `args` and returns the process exit code: 0 pass, 1 check failure, 2 usage error.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((cfg, out)) => {
            let text = out.render(cfg.format);
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &text).map_err(Error::from),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) if out.pass => 0,
                Ok(()) => 1,
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code(&e)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
