//! Parameter grids from a TOML file.
//!
//! ```toml
//! [[run]]
//! command = "zf"
//! args = ["--mode", "exact"]
//! [run.grid]
//! family = ["hamming"]
//! n = [1, 2]
//! q = [2, 3, 4]
//! ```
//!
//! Each grid point becomes a command line for the same parser: `family`
//! is positional, one-letter keys become `-x`, longer keys `--key`, `true`
//! is a bare flag, `false` omits it, and arrays are joined with commas.
//! `family` varies slowest, then the other keys in sorted order with the
//! last fastest; runs follow file order. One row per grid point; failures are recorded in the row.

use super::{execute, Cli, Output, SweepFormat};
use crate::config::Caps;
use crate::error::{Error, Result};
use clap::Parser;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Deserialize)]
struct SweepConfig {
    run: Vec<RunSpec>,
}

#[derive(Debug, Deserialize)]
struct RunSpec {
    command: String,
    #[serde(default)]
    args: Vec<String>,
    #[serde(default)]
    grid: toml::Table,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub row: usize,
    /// Command line of this grid point, without the program name.
    pub instance: String,
    pub exit_code: i32,
    pub passed: bool,
    /// Compact JSON of the report's values.
    pub values: String,
    pub error: String,
}

fn scalar(v: &toml::Value) -> Result<String> {
    Ok(match v {
        toml::Value::String(s) => s.clone(),
        toml::Value::Integer(i) => i.to_string(),
        toml::Value::Float(f) => f.to_string(),
        toml::Value::Array(a) => a.iter().map(scalar).collect::<Result<Vec<_>>>()?.join(","),
        other => return Err(Error::Invalid(format!("unsupported grid value {other}"))),
    })
}

fn flag_args(key: &str, v: &toml::Value) -> Result<Vec<String>> {
    if key == "family" {
        return Ok(vec![scalar(v)?]);
    }
    let flag = if key.chars().count() == 1 { format!("-{key}") } else { format!("--{key}") };
    Ok(match v {
        toml::Value::Boolean(true) => vec![flag],
        toml::Value::Boolean(false) => vec![],
        v => vec![flag, scalar(v)?],
    })
}

/// Expands one run into argument vectors, last key varying fastest.
fn expand(run: &RunSpec) -> Result<Vec<Vec<String>>> {
    if run.command == "sweep" {
        return Err(Error::Invalid("a sweep cannot run sweeps".into()));
    }
    let mut keys: Vec<(&String, Vec<toml::Value>)> = run
        .grid
        .iter()
        .map(|(k, v)| {
            let options = match v {
                toml::Value::Array(a) => a.clone(),
                v => vec![v.clone()],
            };
            (k, options)
        })
        .collect();
    keys.sort_by(|a, b| (a.0 != "family", a.0).cmp(&(b.0 != "family", b.0)));
    let mut out: Vec<Vec<String>> = vec![vec![]];
    for (key, options) in &keys {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for opt in options {
                let mut argv = prefix.clone();
                argv.extend(flag_args(key, opt)?);
                next.push(argv);
            }
        }
        out = next;
    }
    Ok(out
        .into_iter()
        .map(|grid_args| {
            let mut argv = vec![run.command.clone()];
            // the positional family has to come before the flags
            let (family, rest): (Vec<_>, Vec<_>) = grid_args
                .into_iter()
                .enumerate()
                .partition(|(i, _)| *i == 0 && run.grid.contains_key("family"));
            argv.extend(family.into_iter().map(|(_, a)| a));
            argv.extend(run.args.iter().cloned());
            argv.extend(rest.into_iter().map(|(_, a)| a));
            argv
        })
        .collect())
}

fn run_row(row: usize, argv: Vec<String>, caps: &Caps) -> SweepRow {
    let instance = argv.join(" ");
    let mut out = SweepRow { row, instance, exit_code: 0, passed: false, values: String::new(), error: String::new() };
    let full: Vec<String> = std::iter::once("zfgraph".to_string()).chain(argv.iter().cloned()).collect();
    let cli = match Cli::try_parse_from(&full) {
        Ok(c) => c,
        Err(e) => {
            out.exit_code = 1;
            out.error = e.to_string().lines().next().unwrap_or_default().to_string();
            return out;
        }
    };
    match execute(&cli, &argv, caps) {
        Ok(Output::Report(r, code)) => {
            out.exit_code = code;
            out.passed = code == 0 && r.passed();
            out.values = serde_json::Value::Object(r.values).to_string();
        }
        Ok(Output::Text(_, code)) => out.exit_code = code,
        Err(e) => {
            out.exit_code = e.exit_code();
            out.error = e.to_string();
        }
    }
    out
}

/// Runs every row of a sweep file in order.
pub fn run_sweep(config: &Path, caps: &Caps) -> Result<Vec<SweepRow>> {
    let text = std::fs::read_to_string(config)?;
    let cfg: SweepConfig =
        toml::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", config.display())))?;
    let mut rows = Vec::new();
    for run in &cfg.run {
        for argv in expand(run)? {
            let i = rows.len();
            rows.push(run_row(i, argv, caps));
        }
    }
    Ok(rows)
}

pub(crate) fn run(config: &Path, format: SweepFormat, out: Option<&Path>, caps: &Caps) -> Result<Output> {
    let rows = run_sweep(config, caps)?;
    let text = match format {
        SweepFormat::Json => serde_json::to_string_pretty(&rows)? + "\n",
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(|e| Error::Format(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Format(e.to_string()))?)
                .map_err(|e| Error::Format(e.to_string()))?
        }
    };
    if let Some(path) = out {
        std::fs::write(path, &text)?;
    }
    let code = if rows.iter().all(|r| r.exit_code == 0) { 0 } else { 1 };
    Ok(Output::Text(text, code))
}
