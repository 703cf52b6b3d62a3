use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "du2",
    version,
    about = "Deformed u(2) symmetry of the m:n anisotropic oscillator"
)]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lowest energy levels with their irrep labels and degeneracies.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
    },
    /// Energy, structure function, matrices and identity residuals of one irrep.
    Irrep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Eigenvalues and eigenvectors of L0 on one irrep.
    Angular {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Full invariant suite over every irrep up to a level.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long = "N-max")]
        n_max: u32,
    },
}

#[derive(Debug, Clone, ClapArgs)]
pub struct Common {
    /// Frequency ratio `m:n`.
    #[arg(long, value_parser = parse_ratio)]
    pub ratio: (u32, u32),
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Overrides every floating-point tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ClapArgs)]
pub struct LabelArgs {
    #[arg(long = "N")]
    pub level: u32,
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Spectrum { common, .. }
            | Command::Irrep { common, .. }
            | Command::Angular { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

fn parse_ratio(s: &str) -> Result<(u32, u32), String> {
    let (m, n) = s.split_once(':').ok_or_else(|| format!("expected M:N, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad ratio {s:?}: {e}"));
    Ok((parse(m)?, parse(n)?))
}
