use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cophenet::distance::MergeRule;

#[derive(Parser, Debug)]
#[command(name = "cophenet", version, about = "Persistent homology, cophenetic matroids and ramification forests")]
pub struct Cli {
    /// key=value file with defaults for any long option; flags win
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a filtered complex and write it as a filtration file
    Build(Common),
    /// Compute barcodes (csv, json or svg)
    Persist(Common),
    /// Build the ramification forest (newick, dot, svg or json)
    Forest {
        #[command(flatten)]
        common: Common,
        /// Explicit root: comma-separated generator labels, optionally `@scale`
        #[arg(long = "seed")]
        seeds: Vec<String>,
    },
    /// Cophenetic distance matrix as CSV
    Distmat {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        dist: DistArgs,
    },
    /// Run the submodularity, functoriality and ultrametric validators
    Check {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct DistArgs {
    /// Scale ε the distances start from
    #[arg(long)]
    pub at: Option<f64>,
    /// same-span (ultrametric) or rank-drop (literal pair-rank test)
    #[arg(long)]
    pub rule: Option<String>,
    /// Comma-separated generator labels; defaults to every nonzero class at ε
    #[arg(long)]
    pub ids: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    Triangles,
    SEpsilon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    CsvPoints,
    Filtration,
    Graph,
    Cover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    Rips,
    Cech,
    Clique,
    Nerve,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Common {
    /// Input file (points CSV, filtration, graph or cover)
    pub input: Option<PathBuf>,
    /// Built-in dataset instead of an input file
    #[arg(long, value_enum)]
    pub demo: Option<Demo>,
    #[arg(long, group = "kind")]
    pub rips: bool,
    #[arg(long, group = "kind")]
    pub cech: bool,
    #[arg(long, group = "kind")]
    pub clique: bool,
    #[arg(long, group = "kind")]
    pub nerve: bool,
    /// Input format; inferred from the extension when absent
    #[arg(long, value_enum)]
    pub input_kind: Option<InputKind>,
    #[arg(long)]
    pub max_dim: Option<usize>,
    #[arg(long)]
    pub max_scale: Option<f64>,
    /// rational or gf(p) for p in 2, 3, 5, 7, 11, 13
    #[arg(long)]
    pub field: Option<String>,
    /// Homology degree k
    #[arg(short = 'k', long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub format: Option<String>,
    /// Write data here instead of stdout
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Gf(u64),
}

pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

impl FromStr for Field {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "rational" || s == "q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("gf"))
            .and_then(|p| p.parse::<u64>().ok());
        match p {
            Some(p) if PRIMES.contains(&p) => Ok(Field::Gf(p)),
            Some(p) => bail!("gf({p}) is not supported; choose p from {PRIMES:?}"),
            None => bail!("unknown field {s:?}; expected rational or gf(p)"),
        }
    }
}

/// Every option after merging flags over the config file.
#[derive(Debug, Clone)]
pub struct Settings {
    pub input: Option<PathBuf>,
    pub demo: Option<Demo>,
    pub complex: Option<ComplexKind>,
    pub input_kind: Option<InputKind>,
    pub max_dim: Option<usize>,
    pub max_scale: f64,
    pub field: Field,
    pub degree: usize,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
    pub at: Option<f64>,
    pub rule: MergeRule,
    pub ids: Option<String>,
    pub seeds: Vec<String>,
}

const CONFIG_KEYS: [&str; 14] = [
    "input", "demo", "complex", "input-kind", "max-dim", "max-scale", "field", "degree", "format",
    "output", "at", "rule", "ids", "seed",
];

/// Reads `key = value` lines; `#` starts a comment line.
pub fn parse_config(text: &str) -> Result<HashMap<String, String>> {
    let mut out = HashMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .with_context(|| format!("config line {}: expected key=value, got {line:?}", n + 1))?;
        let k = k.trim().replace('_', "-");
        if !CONFIG_KEYS.contains(&k.as_str()) {
            bail!("config line {}: unknown key {k:?}", n + 1);
        }
        out.insert(k, v.trim().trim_matches('"').to_string());
    }
    Ok(out)
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| anyhow::anyhow!("config {key} = {value:?}: {e}"))
}

fn value_enum<T: ValueEnum>(key: &str, value: &str) -> Result<T> {
    T::from_str(value, true).map_err(|e| anyhow::anyhow!("config {key} = {value:?}: {e}"))
}

impl Settings {
    pub fn resolve(
        common: Common,
        dist: DistArgs,
        seeds: Vec<String>,
        config: Option<&Path>,
    ) -> Result<Self> {
        let cfg = match config {
            Some(p) => parse_config(
                &std::fs::read_to_string(p)
                    .with_context(|| format!("cannot read config {}", p.display()))?,
            )?,
            None => HashMap::new(),
        };
        let get = |k: &str| cfg.get(k).map(String::as_str);

        let flag_kind = [
            (common.rips, ComplexKind::Rips),
            (common.cech, ComplexKind::Cech),
            (common.clique, ComplexKind::Clique),
            (common.nerve, ComplexKind::Nerve),
        ]
        .into_iter()
        .find(|(set, _)| *set)
        .map(|(_, k)| k);

        let field = match common.field.as_deref().or(get("field")) {
            Some(f) => f.parse()?,
            None => Field::Rational,
        };
        let rule = match dist.rule.as_deref().or(get("rule")) {
            Some(r) => r.parse()?,
            None => MergeRule::default(),
        };
        let seeds = if seeds.is_empty() {
            get("seed")
                .map(|s| s.split(';').map(|x| x.trim().to_string()).collect())
                .unwrap_or_default()
        } else {
            seeds
        };
        Ok(Settings {
            input: common.input.or_else(|| get("input").map(PathBuf::from)),
            demo: match common.demo {
                Some(d) => Some(d),
                None => get("demo").map(|v| value_enum("demo", v)).transpose()?,
            },
            complex: match flag_kind {
                Some(k) => Some(k),
                None => get("complex").map(|v| value_enum("complex", v)).transpose()?,
            },
            input_kind: match common.input_kind {
                Some(k) => Some(k),
                None => get("input-kind").map(|v| value_enum("input-kind", v)).transpose()?,
            },
            max_dim: match common.max_dim {
                Some(d) => Some(d),
                None => get("max-dim").map(|v| parse_value("max-dim", v)).transpose()?,
            },
            max_scale: match common.max_scale {
                Some(s) => s,
                None => get("max-scale")
                    .map(|v| parse_value("max-scale", v))
                    .transpose()?
                    .unwrap_or(f64::INFINITY),
            },
            field,
            degree: match common.degree {
                Some(k) => k,
                None => get("degree")
                    .map(|v| parse_value("degree", v))
                    .transpose()?
                    .unwrap_or(1),
            },
            format: common.format.or_else(|| get("format").map(str::to_string)),
            output: common.output.or_else(|| get("output").map(PathBuf::from)),
            at: match dist.at {
                Some(a) => Some(a),
                None => get("at").map(|v| parse_value("at", v)).transpose()?,
            },
            rule,
            ids: dist.ids.or_else(|| get("ids").map(str::to_string)),
            seeds,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gf(3)".parse::<Field>().unwrap(), Field::Gf(3));
        assert_eq!("GF2".parse::<Field>().unwrap(), Field::Gf(2));
        assert!("gf(4)".parse::<Field>().is_err());
        assert!("reals".parse::<Field>().is_err());
    }

    #[test]
    fn config_lines() {
        let c = parse_config("# defaults\nmax_dim = 3\nfield=gf(2)\n").unwrap();
        assert_eq!(c["max-dim"], "3");
        assert_eq!(c["field"], "gf(2)");
        assert!(parse_config("colour = red").is_err());
        assert!(parse_config("just words").is_err());
    }

    #[test]
    fn flags_win_over_config() {
        let dir = std::env::temp_dir().join(format!("cophenet-cfg-{}", std::process::id()));
        std::fs::write(&dir, "max-dim = 3\ndegree = 0\ncomplex = cech\n").unwrap();
        let common = Common {
            max_dim: Some(1),
            ..Default::default()
        };
        let s = Settings::resolve(common, DistArgs::default(), Vec::new(), Some(&dir)).unwrap();
        std::fs::remove_file(&dir).unwrap();
        assert_eq!(s.max_dim, Some(1));
        assert_eq!(s.degree, 0);
        assert_eq!(s.complex, Some(ComplexKind::Cech));
    }
}
