//! Command-line front end: `gen`, `transform`, `index`, `nk` and `verify`.
//!
//! Exit codes: 0 on success or MATCH, 1 on any usage/input error, 2 when an
//! oracle/formula comparison disagrees (or `verify` finds a mismatch that is
//! not allowlisted).

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::formulas::{self, BoundOutcome, FormulaError};
use crate::graph::{self, Family, Graph, GraphError};
use crate::indices::{self, IndexReport};
use crate::transform::{build, TransformError, TransformKind};
use crate::verify::{
    self, Allowlist, CorpusSpec, EnumerationRange, FamilyRange, NamedFamily, VerifyError,
};
use crate::{BigNat, ExactRational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input {path}: {source}")]
    Unreadable {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse input {input}: {source}")]
    Parse { input: String, source: GraphError },
    #[error(transparent)]
    Variant(#[from] TransformError),
    #[error(transparent)]
    Generator(GraphError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "transgraph",
    version,
    about = "Transformation graphs and exact Narumi-Katayama indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a generated graph as an edge list (or DOT).
    Gen {
        /// Generator spec: cycle:7, complete:5, path:4, star:6, bipartite:3,4, empty:3, gnm:10,15[,seed]
        spec: String,
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a transformation graph.
    Transform {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        dot: bool,
        /// Degree sequence by role as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Degree-based indices of the input graph.
    Index {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        json: bool,
    },
    /// NK index of a transformation graph by construction, closed form and/or bound.
    Nk {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        formula: bool,
        #[arg(long)]
        bound: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare construction with every closed form over a graph corpus.
    Verify {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        connected_only: bool,
        /// Largest n for the cycle/complete/path/star families (0 disables them).
        #[arg(long, default_value_t = 10)]
        family_max: usize,
        /// Restrict to these variants (repeatable); default is all fifteen.
        #[arg(long = "variant")]
        variants: Vec<String>,
        /// Known-errata file; defaults to the built-in list.
        #[arg(long)]
        allowlist: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct InputArg {
    /// Edge-list file, `-` for stdin, or a generator spec such as cycle:5.
    input: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct Target {
    #[command(flatten)]
    input: InputArg,
    /// Variant name: total, t1, t2, g++, g+-, g-+, g--, g+++, ..., g---
    variant_pos: Option<String>,
    #[arg(long = "variant")]
    variant_flag: Option<String>,
}

impl Target {
    fn kind(&self) -> Result<TransformKind, CliError> {
        match (&self.variant_pos, &self.variant_flag) {
            (Some(_), Some(_)) => Err(CliError::Usage("give the variant once".into())),
            (None, None) => Err(CliError::Usage("missing variant".into())),
            (Some(v), None) | (None, Some(v)) => Ok(v.parse()?),
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Gen { spec, dot, seed } => {
            let g = graph::generate(Family::parse(&spec, seed).map_err(CliError::Generator)?)
                .map_err(CliError::Generator)?;
            out.write_all(if dot { g.to_dot() } else { g.to_edge_list() }.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Transform { target, dot, json } => {
            let kind = target.kind()?;
            let g = load_input(&target.input)?;
            let t = build(&g, kind);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&t.degree_dump()).expect("serialisable")
                )?;
            } else if dot {
                out.write_all(t.to_dot().as_bytes())?;
            } else {
                out.write_all(t.graph.to_edge_list().as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Index { input, json } => {
            let report = IndexReport::new(&load_input(&input)?);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serialisable")
                )?;
            } else {
                out.write_all(report.to_text().as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Nk {
            target,
            oracle,
            formula,
            bound,
            json,
        } => {
            let kind = target.kind()?;
            let g = load_input(&target.input)?;
            let (oracle, formula) = if !(oracle || formula || bound) {
                (true, true)
            } else {
                (oracle, formula)
            };
            cmd_nk(
                &g,
                kind,
                NkModes {
                    oracle,
                    formula,
                    bound,
                },
                json,
                out,
            )
        }
        Command::Verify {
            min_n,
            max_n,
            connected_only,
            family_max,
            variants,
            allowlist,
            json,
        } => {
            let mut spec = CorpusSpec {
                enumerate: Vec::new(),
                families: Vec::new(),
            };
            if max_n > 0 {
                spec.enumerate.push(EnumerationRange {
                    min_n,
                    max_n,
                    connected_only,
                });
            }
            if family_max >= 3 {
                spec.families = NamedFamily::ALL
                    .iter()
                    .map(|&family| FamilyRange {
                        family,
                        min_n: 3,
                        max_n: family_max,
                    })
                    .collect();
            }
            let variants = if variants.is_empty() {
                TransformKind::ALL.to_vec()
            } else {
                variants
                    .iter()
                    .map(|v| v.parse())
                    .collect::<Result<Vec<_>, _>>()?
            };
            let allowlist = match allowlist {
                Some(path) => Allowlist::parse(&read_file(&path)?)?,
                None => Allowlist::known_errata(),
            };
            let report = verify::run_suite(&spec, &variants, &allowlist)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                out.write_all(report.to_table().as_bytes())?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct NkModes {
    oracle: bool,
    formula: bool,
    bound: bool,
}

#[derive(Debug, Serialize)]
struct NkOutput {
    variant: TransformKind,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "crate::serde_decimal_opt"
    )]
    oracle: Option<BigNat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound_outcome: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
}

fn cmd_nk(
    g: &Graph,
    kind: TransformKind,
    modes: NkModes,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let oracle = modes.oracle.then(|| indices::nk(&build(g, kind).graph));
    let formula = modes.formula.then(|| formulas::nk_exact(kind, g));
    let bound = modes.bound.then(|| formulas::nk_bound(kind, g));

    let mut mismatch = false;
    let verdict = match (&oracle, &formula) {
        (Some(o), Some(Ok(f))) => {
            mismatch |= o != f;
            Some(if o == f { "MATCH" } else { "MISMATCH" })
        }
        (Some(_), Some(Err(_))) => Some("NOT_APPLICABLE"),
        _ => None,
    };
    let bound_outcome = match &bound {
        Some(Ok(b)) => Some(match b.outcome() {
            BoundOutcome::Tight => "TIGHT",
            BoundOutcome::Strict => "STRICT",
            BoundOutcome::Violated => {
                mismatch = true;
                "VIOLATED"
            }
        }),
        _ => None,
    };

    let show = |r: &Result<BigNat, FormulaError>| match r {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    };
    let show_bound = |r: &Result<formulas::BoundResult, FormulaError>| match r {
        Ok(b) => rational(&b.bound),
        Err(e) => e.to_string(),
    };
    let output = NkOutput {
        variant: kind,
        oracle,
        formula: formula.as_ref().map(show),
        bound: bound.as_ref().map(show_bound),
        bound_outcome,
        verdict,
    };

    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&output).expect("serialisable")
        )?;
    } else {
        let selected = [modes.oracle, modes.formula, modes.bound]
            .iter()
            .filter(|&&m| m)
            .count();
        if selected == 1 {
            let value = output
                .oracle
                .as_ref()
                .map(ToString::to_string)
                .or(output.formula.clone())
                .or(output.bound.clone())
                .unwrap_or_default();
            writeln!(out, "{value}")?;
        } else {
            if let Some(o) = &output.oracle {
                writeln!(out, "oracle {o}")?;
            }
            if let Some(f) = &output.formula {
                writeln!(out, "formula {f}")?;
            }
            if let Some(b) = &output.bound {
                writeln!(out, "bound {b}")?;
            }
            if let Some(b) = output.bound_outcome {
                writeln!(out, "bound_outcome {b}")?;
            }
            if let Some(v) = output.verdict {
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(if mismatch { EXIT_MISMATCH } else { EXIT_OK })
}

fn rational(q: &ExactRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{q} (~{:.6e})", formulas::approx(q))
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Unreadable {
        path: path.to_path_buf(),
        source,
    })
}

fn load_input(arg: &InputArg) -> Result<Graph, CliError> {
    let input = arg.input.as_str();
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if Path::new(input).exists() {
        read_file(Path::new(input))?
    } else if input.contains(':') {
        let family = Family::parse(input, arg.seed).map_err(CliError::Generator)?;
        return graph::generate(family).map_err(CliError::Generator);
    } else {
        read_file(Path::new(input))?
    };
    graph::parse_edge_list(&text).map_err(|source| CliError::Parse {
        input: input.to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("transgraph").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn nk_formula_for_cycle() {
        let (code, out, _) = run_args(&["nk", "cycle:5", "g--", "--formula"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "759375");
    }

    #[test]
    fn nk_oracle_and_formula() {
        let (code, out, _) = run_args(&["nk", "path:3", "g+++", "--oracle", "--formula"]);
        assert_eq!(code, 0);
        assert_eq!(out, "oracle 144\nformula 144\nMATCH\n");
    }

    #[test]
    fn nk_bound_json() {
        let (code, out, _) = run_args(&[
            "nk",
            "path:3",
            "--variant",
            "g--+",
            "--bound",
            "--formula",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["bound"], "32");
        assert_eq!(v["bound_outcome"], "TIGHT");
    }

    #[test]
    fn index_of_k4() {
        let (code, out, _) = run_args(&["index", "complete:4"]);
        assert_eq!(code, 0);
        assert!(out.contains("NK 81\n"));
        assert!(out.contains("M1 36\n"));
        assert!(out.contains("Pi1star 46656\n"));
    }

    #[test]
    fn gen_round_trips() {
        let (code, out, _) = run_args(&["gen", "gnm:8,12,3"]);
        assert_eq!(code, 0);
        let g = graph::parse_edge_list(&out).unwrap();
        let direct = graph::generate(Family::Gnm {
            n: 8,
            m: 12,
            seed: 3,
        })
        .unwrap();
        assert_eq!(g.content_hash(), direct.content_hash());
    }

    #[test]
    fn errors_exit_one_with_distinct_messages() {
        let (code, _, err) = run_args(&["nk", "cycle:5", "g+"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown transformation"));

        let (code, _, err) = run_args(&["index", "/nonexistent/graph.txt"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read input"));

        let (code, _, err) = run_args(&["index", "wheel:5"]);
        assert_eq!(code, 1);
        assert!(err.contains("generator"));

        let (code, _, _) = run_args(&["frobnicate"]);
        assert_eq!(code, 1);

        let (code, _, err) = run_args(&["nk", "cycle:5"]);
        assert_eq!(code, 1);
        assert!(err.contains("missing variant"));
    }

    #[test]
    fn parse_failure_from_file() {
        let dir = std::env::temp_dir().join(format!("transgraph-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("loop.txt");
        std::fs::write(&path, "2 1\n0 0\n").unwrap();
        let (code, _, err) = run_args(&["index", path.to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot parse input"));
        assert!(err.contains("self-loop"));
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn transform_outputs() {
        let (code, out, _) = run_args(&["transform", "path:2", "t1", "--dot"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"v0\" -- \"e0-1\""));
        let (_, out, _) = run_args(&["transform", "cycle:3", "t1"]);
        assert!(out.starts_with("6 9\n"));
        let (_, out, _) = run_args(&["transform", "cycle:3", "g---", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degrees"][0]["degree"], 1);
    }

    #[test]
    fn verify_small_corpus() {
        let (code, out, _) = run_args(&["verify", "--max-n", "4", "--family-max", "5"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));

        let dir = std::env::temp_dir().join(format!("transgraph-allow-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("empty.txt");
        std::fs::write(&path, "# nothing allowed\n").unwrap();
        let (code, _, _) = run_args(&[
            "verify",
            "--max-n",
            "4",
            "--family-max",
            "5",
            "--allowlist",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 2);
        std::fs::remove_dir_all(dir).unwrap();
    }
}
