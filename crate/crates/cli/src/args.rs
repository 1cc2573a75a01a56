use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "chsh-exact", version, about = "Exact CHSH correlations on rational descriptor grids")]
pub struct Cli {
    /// Flat `key = value` file; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout (relative paths resolve under OUT_DIR).
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify cos(aπ/b) as rational or irrational.
    Niven {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        b: u64,
    },
    /// Classify cos c = cos A cos B + sin A sin B cos γ with γ = aπ/b.
    ClassifySide {
        #[arg(allow_negative_numbers = true)]
        cos_a: String,
        #[arg(allow_negative_numbers = true)]
        cos_b: String,
        #[arg(allow_negative_numbers = true)]
        gamma_a: i64,
        gamma_b: u64,
    },
    /// CHSH evaluation, scans, simulation and the singular-limit table.
    Chsh {
        #[command(subcommand)]
        command: ChshCommand,
    },
    /// State-space metric and Pythagorean primes.
    Gp {
        #[command(subcommand)]
        command: GpCommand,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct Modulus {
    /// Descriptor modulus (4 | N, N + 1 prime).
    #[arg(long = "N", value_name = "N")]
    pub n: Option<u64>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Grid {
    /// Grid step as `G` or `1/G` (step π/G).
    #[arg(long, value_name = "G")]
    pub grid: Option<String>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Positions {
    /// Setting positions a0,a1,b0,b1 as multiples of π (e.g. `0,1/2,1/4,7/4`).
    #[arg(long, value_name = "A0,A1,B0,B1", allow_hyphen_values = true)]
    pub positions: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ChshCommand {
    /// Best realizable frame on the grid.
    Scan {
        #[command(flatten)]
        modulus: Modulus,
        #[command(flatten)]
        grid: Grid,
    },
    /// Evaluate a frame at its exact angles and after snapping.
    Eval {
        #[command(flatten)]
        modulus: Modulus,
        #[command(flatten)]
        positions: Positions,
    },
    /// Simulate sub-ensembles for a frame.
    Sim {
        #[command(flatten)]
        modulus: Modulus,
        /// Outcome pairs per setting pair (default N, the exact mode).
        #[arg(long = "M", value_name = "M")]
        m: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        positions: Positions,
    },
    /// The textbook configuration at exact angles.
    Exact,
    /// Scan maximum and gap to 2√2 for several moduli.
    LimitTable {
        /// Comma-separated moduli.
        #[arg(long = "Ns", value_name = "N,...")]
        ns: Option<String>,
        #[command(flatten)]
        grid: Grid,
    },
}

#[derive(Subcommand, Debug)]
pub enum GpCommand {
    /// Two-square decomposition of a prime p ≡ 1 (mod 4).
    Prime { p: u64 },
    /// Distance between two points given by `--on` digits or `--off` coordinates.
    Dist {
        /// Cantor digits, comma separated (repeatable).
        #[arg(long, value_name = "D1,D2,...")]
        on: Vec<String>,
        /// Off-set coordinates `x,y` (repeatable).
        #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
        off: Vec<String>,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Planar embedding of a Cantor point.
    Embed {
        #[arg(long, value_name = "D1,D2,...")]
        on: String,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GeometryArgs {
    /// Pythagorean prime (default N + 1).
    #[arg(long)]
    pub p: Option<u64>,
    /// Contraction ratio (default 1/(2N)).
    #[arg(long)]
    pub s: Option<String>,
}
