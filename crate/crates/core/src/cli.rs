//! Command-line front end: `construct`, `verify`, `bound`, `search`, `catalog`.
//!
//! Standard output carries only graph6 or JSON (or plain text with
//! `--format text`); diagnostics go to standard error. Exit codes: 0
//! success, 2 invalid arguments, 3 construction or validation failure,
//! 4 search budget exhausted.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{all_bounds, equality56_feasible, BoundResult, Feasibility};
use crate::constructions::{recipe, RecipeArgs, RECIPES};
use crate::error::{Error, Result};
use crate::geometry::BiaffineKind;
use crate::graph::{graph6, verify_babi, BabiParams};
use crate::named::ASSET_ENV;
use crate::search::{exhaustive_min, SearchMode, SearchSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_FAILED: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "babi", version, about = "Balanced biregular graphs of prescribed girth")]
pub struct Cli {
    /// Directory holding graph6 data assets (overrides $BABI_DATA_DIR, then ./data)
    #[arg(long, global = true, value_name = "DIR")]
    pub data_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Graph6,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from a named recipe (see `catalog`)
    Construct {
        recipe: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Field order for plane-based recipes
        #[arg(long)]
        q: Option<u32>,
        /// Biaffine plane type: 1 or 2
        #[arg(long = "type", value_name = "KIND")]
        kind: Option<BiaffineKind>,
        /// Graph copied onto each amalgamation class: a named graph, `matching` or `cycle`
        #[arg(long)]
        gamma: Option<String>,
        /// Write the graph in graph6 format to this file
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// What to print: the certificate (json), the graph (graph6) or a summary (text)
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a graph6 file against (r,s;g); exit 0 iff it is a babi-graph
    Verify {
        file: PathBuf,
        /// Parameters as r,s,g
        #[arg(long)]
        params: BabiParams,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print every applicable bound for (r,s;g)
    Bound {
        r: usize,
        s: usize,
        g: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exhaustive search for the smallest (r,s;g)-babi-graph up to --vmax
    Search {
        r: usize,
        s: usize,
        g: usize,
        #[arg(long)]
        vmax: usize,
        /// Start from s+1 instead of the closed-form lower bound
        #[arg(long)]
        prove_min: bool,
        /// Start at this order instead (rounded up to an admissible one)
        #[arg(long)]
        vmin: Option<usize>,
        /// Checkpoint file, read if present and updated as subtrees finish
        #[arg(long, value_name = "FILE")]
        resume: Option<PathBuf>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Time limit in seconds
        #[arg(long)]
        time_limit: Option<u64>,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        threads: Option<usize>,
        /// Also write the witness in graph6 format to this file
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// List the construction recipes
    Catalog {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParams(_) | Error::NotPrimePower(_) | Error::UnknownGraph(_) | Error::Checkpoint(_) => {
            EXIT_INVALID
        }
        Error::Io(_) => EXIT_INVALID,
        Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_FAILED,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        // reader went away, as with `babi ... | head`
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::AssetMissing(_)) {
                let _ = writeln!(err, "hint: pass --data-dir or set {ASSET_ENV}");
            }
            exit_code(&e)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Construct { recipe: name, r, s, q, kind, gamma, output, format } => {
            let args = RecipeArgs { r, s, q, kind, gamma, asset_dir: cli.data_dir };
            let c = (recipe(&name)?.build)(&args)?;
            if let Some(path) = output {
                std::fs::write(path, format!("{}\n", graph6::encode_string(&c.graph)))?;
            }
            match format {
                Format::Json => writeln!(out, "{}", c.certificate.to_json())?,
                Format::Graph6 => writeln!(out, "{}", graph6::encode_string(&c.graph))?,
                Format::Text => {
                    let cert = &c.certificate;
                    writeln!(out, "{} babi-graph of order {}, girth {}", cert.params, cert.order, cert.girth)?;
                    if let Some(census) = cert.census {
                        writeln!(out, "fat {} thin {} mixed {}", census.fat, census.thin, census.mixed)?;
                    }
                    writeln!(out, "{}", cert.provenance)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, params, format } => {
            let bytes = std::fs::read(&file)?;
            let g = graph6::decode(&bytes)?;
            let cert = verify_babi(&g, &params).with_provenance(format!("{}", file.display()));
            match format {
                Format::Text => writeln!(
                    out,
                    "{}: order {}, girth {}, degrees {:?}, balanced {}, babi {}",
                    params, cert.order, cert.girth, cert.degrees, cert.balanced, cert.babi
                )?,
                _ => writeln!(out, "{}", cert.to_json())?,
            }
            if !cert.babi {
                writeln!(err, "not a {params}-babi-graph")?;
                return Ok(EXIT_FAILED);
            }
            Ok(EXIT_OK)
        }
        Command::Bound { r, s, g, format } => {
            let p = BabiParams::new(r, s, g)?;
            let bounds = all_bounds(r, s, g)?;
            let equality = if g == 5 || g == 6 { Some(equality56_feasible(r, s, g)?) } else { None };
            match format {
                Format::Text => {
                    for (name, b) in &bounds {
                        writeln!(out, "{name:22} {:>12} {:?} ({})", b.value, b.kind, b.source)?;
                    }
                    if let Some(e) = equality {
                        writeln!(out, "{:22} {:>12}", "equality_feasible", e.feasible)?;
                    }
                }
                _ => writeln!(out, "{}", serde_json::to_string_pretty(&BoundReport::new(p, bounds, equality))?)?,
            }
            Ok(EXIT_OK)
        }
        Command::Search { r, s, g, vmax, prove_min, vmin, resume, node_limit, time_limit, threads, output } => {
            let mut spec = SearchSpec::new(BabiParams::new(r, s, g)?, vmax)
                .mode(if prove_min { SearchMode::ProveMin } else { SearchMode::FindFirst });
            spec.v_min = vmin;
            spec.node_limit = node_limit;
            spec.time_limit = time_limit.map(Duration::from_secs);
            spec.threads = threads;
            spec.checkpoint = resume;
            let outcome = exhaustive_min(&spec)?;
            if let (Some(path), Some(w)) = (output, &outcome.witness) {
                std::fs::write(path, format!("{}\n", graph6::encode_string(w)))?;
            }
            writeln!(out, "{}", outcome.to_json())?;
            if let Some(reason) = &outcome.budget_exhausted {
                writeln!(err, "search stopped: {reason}")?;
                return Ok(EXIT_BUDGET);
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { format } => {
            match format {
                Format::Text => {
                    for r in RECIPES {
                        writeln!(out, "{:12} {:10} order {:36} {}", r.name, r.params, r.order, r.domain)?;
                    }
                }
                _ => writeln!(out, "{}", serde_json::to_string_pretty(RECIPES)?)?,
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct NamedBound {
    name: &'static str,
    #[serde(flatten)]
    bound: BoundResult,
}

#[derive(Serialize)]
struct BoundReport {
    params: BabiParams,
    bounds: Vec<NamedBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equality_feasible: Option<Feasibility>,
}

impl BoundReport {
    fn new(params: BabiParams, bounds: Vec<(&'static str, BoundResult)>, equality: Option<Feasibility>) -> Self {
        BoundReport {
            params,
            bounds: bounds.into_iter().map(|(name, bound)| NamedBound { name, bound }).collect(),
            equality_feasible: equality,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("babi").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bound_prints_json() {
        let (code, out, _) = call(&["bound", "2", "3", "5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let lower = v["bounds"].as_array().unwrap().iter().find(|b| b["name"] == "babi_lower").unwrap();
        assert_eq!(lower["value"], 8);
        assert_eq!(v["equality_feasible"]["feasible"], true);
    }

    #[test]
    fn invalid_arguments_exit_2() {
        assert_eq!(call(&["bound", "3", "3", "5"]).0, 2);
        assert_eq!(call(&["construct", "no-such-recipe"]).0, 2);
        assert_eq!(call(&["construct", "g6-pair", "--q", "6"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["search", "2", "3", "5", "--vmax", "10"]).0, 2);
    }

    #[test]
    fn construct_writes_graph6_and_certificate() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.g6");
        let (code, out, _) = call(&["construct", "g6-pair", "--q", "2", "-o", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["babi"], true);
        assert_eq!(v["schema"], 1);
        let g = graph6::decode(std::fs::read(&path).unwrap().as_slice()).unwrap();
        assert_eq!(g.order(), 12);
        let (code, _, err) = call(&["verify", path.to_str().unwrap(), "--params", "2,3,6"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(call(&["verify", path.to_str().unwrap(), "--params", "2,3,5"]).0, 3);
    }

    #[test]
    fn missing_asset_exits_3() {
        let dir = tempfile::tempdir().unwrap();
        let (code, _, err) = call(&["--data-dir", dir.path().to_str().unwrap(), "construct", "babi-565"]);
        assert_eq!(code, 3);
        assert!(err.contains("not found"));
    }

    #[test]
    fn search_budget_exits_4() {
        let (code, out, _) = call(&["search", "2", "3", "6", "--vmax", "12", "--node-limit", "3"]);
        assert_eq!(code, 4);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["exhaustive"], false);
    }

    #[test]
    fn output_is_reproducible() {
        let a = call(&["search", "2", "3", "5", "--vmax", "12", "--prove-min"]);
        let b = call(&["search", "2", "3", "5", "--vmax", "12", "--prove-min", "--threads", "1"]);
        assert_eq!(a.0, 0);
        assert_eq!(a.1, b.1);
        assert_eq!(call(&["catalog"]).1, call(&["catalog"]).1);
    }
}
