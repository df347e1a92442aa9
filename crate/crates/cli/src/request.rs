use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use demazure_core::{RootDatum, Weight, WeylWord};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Graded character of D(ℓ, λ, m)
    DemazureChar,
    /// Dimension of D(ℓ, λ)
    DemazureDim,
    /// Graded character of the local Weyl module W(λ) and its level-1 flag
    WeylChar,
    /// Level-1 flag of W(λ) alone
    Flag,
    /// Level-ℓ′ flag of D(ℓ, λ) (simply laced only)
    LevelFlag,
    /// Character of W(ϖ) for a dominant ℓ-weight given by --factor
    LocalWeyl,
    /// Compare the path-model Demazure set with the Demazure operators
    CrystalCheck,
    /// Highest-weight elements of b_μ ⊗ B^σ(Λ)
    Joseph,
    /// Weyl character of the finite-dimensional irreducible V(λ)
    WeylFinite,
    /// dim W(λ) against the product over fundamental weights
    DimCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::DemazureChar => "demazure-char",
            Command::DemazureDim => "demazure-dim",
            Command::WeylChar => "weyl-char",
            Command::Flag => "flag",
            Command::LevelFlag => "level-flag",
            Command::LocalWeyl => "local-weyl",
            Command::CrystalCheck => "crystal-check",
            Command::Joseph => "joseph",
            Command::WeylFinite => "weyl-finite",
            Command::DimCheck => "dim-check",
        }
    }

    /// (required, optional) parameters.
    fn schema(self) -> (&'static [Param], &'static [Param]) {
        use Param::*;
        match self {
            Command::DemazureChar => (&[Lambda, Level], &[Grade]),
            Command::DemazureDim => (&[Lambda, Level], &[]),
            Command::WeylChar | Command::Flag | Command::WeylFinite | Command::DimCheck => {
                (&[Lambda], &[])
            }
            Command::LevelFlag => (&[Lambda, Level, ToLevel], &[]),
            Command::LocalWeyl => (&[Factor], &[]),
            Command::CrystalCheck => (&[Lambda, Sigma], &[Grade]),
            Command::Joseph => (&[Mu, Lambda, Sigma], &[Grade]),
        }
    }

    /// Whether `--lambda` (and `--mu`) carry affine h-values, `h_0` first.
    fn affine_input(self) -> bool {
        matches!(self, Command::CrystalCheck | Command::Joseph)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "table",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Param {
    Lambda,
    Level,
    ToLevel,
    Grade,
    Sigma,
    Mu,
    Factor,
}

impl Param {
    fn flag(self) -> &'static str {
        match self {
            Param::Lambda => "--lambda",
            Param::Level => "--level",
            Param::ToLevel => "--to-level",
            Param::Grade => "--grade",
            Param::Sigma => "--sigma",
            Param::Mu => "--mu",
            Param::Factor => "--factor",
        }
    }
}

/// Characters, dimensions and Demazure flags of affine Demazure modules and
/// graded local Weyl modules.
///
/// Weights are given as comma-separated h-values in Bourbaki node order
/// (`--lambda 2,0` is 2ω_1 in C2). For `crystal-check` and `joseph` they are
/// affine: `h_0` comes first.
#[derive(Parser, Debug, Clone)]
#[command(name = "demazure", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Root datum label: A1..A8, B2..B8, C2..C8, D4..D8, E6..E8, F4, G2
    #[arg(long = "type", value_name = "LABEL")]
    pub datum: String,
    #[arg(long, value_name = "H,..", allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub level: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub to_level: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub grade: Option<i64>,
    /// Weyl group word, applied right to left
    #[arg(long, value_name = "I,..")]
    pub sigma: Option<String>,
    #[arg(long, value_name = "H,..", allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Factor of a dominant ℓ-weight as `h,..@point`; repeatable
    #[arg(long, value_name = "H,..@POINT", allow_hyphen_values = true)]
    pub factor: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
}

/// A request whose parameters have been checked against the command schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandRequest {
    pub command: Command,
    pub datum: RootDatum,
    pub lambda: Option<Weight>,
    pub level: Option<i64>,
    pub to_level: Option<i64>,
    pub grade: i64,
    pub sigma: Option<WeylWord>,
    pub mu: Option<Weight>,
    pub factors: Vec<(Weight, String)>,
    pub format: Format,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn parse_ints(flag: &str, s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| invalid(format!("{flag}: '{t}' is not an integer")))
        })
        .collect()
}

fn parse_h(flag: &str, s: &str, expected: usize) -> Result<Vec<i64>> {
    let h = parse_ints(flag, s)?;
    if h.len() != expected {
        return Err(invalid(format!(
            "{flag}: expected {expected} h-values, got {}",
            h.len()
        )));
    }
    Ok(h)
}

impl CommandRequest {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let datum = RootDatum::from_label(&cli.datum).map_err(|e| invalid(e.to_string()))?;
        let n = datum.rank();
        let command = cli.command;

        let given: Vec<Param> = [
            (Param::Lambda, cli.lambda.is_some()),
            (Param::Level, cli.level.is_some()),
            (Param::ToLevel, cli.to_level.is_some()),
            (Param::Grade, cli.grade.is_some()),
            (Param::Sigma, cli.sigma.is_some()),
            (Param::Mu, cli.mu.is_some()),
            (Param::Factor, !cli.factor.is_empty()),
        ]
        .into_iter()
        .filter_map(|(p, on)| on.then_some(p))
        .collect();
        let (required, optional) = command.schema();
        for p in required {
            if !given.contains(p) {
                return Err(invalid(format!("{command} requires {}", p.flag())));
            }
        }
        for p in &given {
            if !required.contains(p) && !optional.contains(p) {
                return Err(invalid(format!("{command} does not take {}", p.flag())));
            }
        }

        let affine = command.affine_input();
        let width = if affine { n + 1 } else { n };
        let grade = cli.grade.unwrap_or(0);
        let lambda = cli
            .lambda
            .as_deref()
            .map(|s| -> Result<Weight> {
                let h = parse_h("--lambda", s, width)?;
                Ok(if affine { Weight::new(h, grade) } else { Weight::classical(h) })
            })
            .transpose()?;
        let mu = cli
            .mu
            .as_deref()
            .map(|s| parse_h("--mu", s, n + 1).map(|h| Weight::new(h, 0)))
            .transpose()?;
        let sigma = cli
            .sigma
            .as_deref()
            .map(|s| -> Result<WeylWord> {
                if s.trim().is_empty() {
                    return Ok(WeylWord::empty());
                }
                let letters = parse_ints("--sigma", s)?;
                letters
                    .into_iter()
                    .map(|i| {
                        usize::try_from(i)
                            .ok()
                            .filter(|&i| i <= n)
                            .ok_or_else(|| invalid(format!("--sigma: no node {i} in {}^(1)", cli.datum)))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(WeylWord)
            })
            .transpose()?;
        let factors = cli
            .factor
            .iter()
            .map(|f| -> Result<(Weight, String)> {
                let (h, point) = f
                    .rsplit_once('@')
                    .ok_or_else(|| invalid(format!("--factor: '{f}' is not of the form h,..@point")))?;
                let point = point.trim();
                if point.is_empty() || point.contains(char::is_whitespace) {
                    return Err(invalid(format!("--factor: bad evaluation point in '{f}'")));
                }
                Ok((Weight::classical(parse_h("--factor", h, n)?), point.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(Self {
            command,
            datum,
            lambda,
            level: cli.level,
            to_level: cli.to_level,
            grade,
            sigma,
            mu,
            factors,
            format: cli.format,
        })
    }

    /// Normalized `key=value` list; equal requests give equal strings.
    pub fn canonical_params(&self) -> String {
        let join = |h: &[i64]| h.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if let Some(l) = &self.lambda {
            parts.push(format!("lambda={}", join(&l.h)));
        }
        if let Some(l) = self.level {
            parts.push(format!("level={l}"));
        }
        if let Some(l) = self.to_level {
            parts.push(format!("to_level={l}"));
        }
        let (required, optional) = self.command.schema();
        if required.contains(&Param::Grade) || optional.contains(&Param::Grade) {
            parts.push(format!("grade={}", self.grade));
        }
        if let Some(w) = &self.sigma {
            let letters: Vec<i64> = w.letters().iter().map(|&i| i as i64).collect();
            parts.push(format!("sigma={}", join(&letters)));
        }
        if let Some(m) = &self.mu {
            parts.push(format!("mu={}", join(&m.h)));
        }
        // factor order does not change the product
        let mut factors: Vec<String> = self
            .factors
            .iter()
            .map(|(w, a)| format!("factor={}@{a}", join(&w.h)))
            .collect();
        factors.sort();
        parts.extend(factors);
        parts.join(";")
    }
}
