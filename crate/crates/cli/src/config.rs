use std::path::Path;

use chsh_exact::bell::DEFAULT_GRID;
use chsh_exact::hilbert::validate_modulus;
use chsh_exact::padic_geometry::DEFAULT_DEPTH;
use chsh_exact::Rational;

use crate::args::Format;
use crate::error::CliError;

/// Settings shared by all commands: defaults, then the config file, then flags.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n: u64,
    pub depth: usize,
    /// `None` means `1/(2N)`.
    pub contraction: Option<Rational>,
    pub seed: u64,
    pub format: Format,
    pub m: Option<u64>,
    pub grid: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 520,
            depth: DEFAULT_DEPTH,
            contraction: None,
            seed: 0,
            format: Format::Json,
            m: None,
            grid: DEFAULT_GRID,
        }
    }
}

fn bad(key: &str, value: &str) -> CliError {
    CliError::Usage(format!("invalid value {value:?} for {key}"))
}

pub fn parse_grid(text: &str) -> Result<u64, CliError> {
    let g = match text.split_once('/') {
        Some(("1", g)) => g.trim().parse().ok(),
        Some(_) => None,
        None => text.trim().parse().ok(),
    };
    g.filter(|&g| g > 0).ok_or_else(|| bad("grid", text))
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            cfg.apply_text(&text)?;
        }
        Ok(cfg)
    }

    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", lineno + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "N" => self.n = value.parse().map_err(|_| bad(key, value))?,
            "depth" | "J" => {
                self.depth = value.parse().ok().filter(|&d| d > 0).ok_or_else(|| bad(key, value))?
            }
            "s" | "contraction" => self.contraction = Some(value.parse().map_err(|_| bad(key, value))?),
            "seed" => self.seed = value.parse().map_err(|_| bad(key, value))?,
            "M" => self.m = Some(value.parse().ok().filter(|&m| m > 0).ok_or_else(|| bad(key, value))?),
            "grid" => self.grid = parse_grid(value)?,
            "format" => {
                self.format = match value {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    _ => return Err(bad(key, value)),
                }
            }
            _ => return Err(CliError::Usage(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    /// Checks the modulus and the contraction bound.
    pub fn validate(&self) -> Result<(), CliError> {
        validate_modulus(self.n)?;
        if let Some(s) = &self.contraction {
            let max = Rational::frac(1, 2 * self.n as i64);
            if !s.is_positive() || *s > max {
                return Err(CliError::Usage(format!("contraction {s} outside (0, {max}]")));
            }
        }
        Ok(())
    }

    pub fn contraction(&self) -> Rational {
        self.contraction
            .clone()
            .unwrap_or_else(|| Rational::frac(1, 2 * self.n as i64))
    }
}
