use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crit_core::critical::{
    assemble_with, extract_critical, Copies, CriticalError, CrossingOracle, DeletionOrder, GadgetStyle, FAMILY_GADGET_T,
};
use crit_core::drawing::codec::{decode_cert, encode_cert};
use crit_core::drawing::layout::{layout, OuterFace};
use crit_core::drawing::svg::render_svg;
use crit_core::drawing::{validate_with, Normalization};
use crit_core::family::{build_family, canonical_drawing, deleted_edge_drawing, CANONICAL_CROSSINGS};
use crit_core::graph::json::{decode_graph, encode_graph};
use crit_core::graph::{EdgeId, SpecialGraph};
use crit_core::solver::{solve_exact, solve_with_upper_bound, CrValue, SolveLimits};

#[derive(Parser)]
#[command(name = "ccrit", version, about = "Crossing-critical graph constructions, drawing certificates and an exact crossing-number solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the family graph for degree parameter d.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        d: i64,
        /// Graph JSON destination (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Role table destination. Defaults to `<out>.roles.json` when
        /// `--out` is given.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Emit a drawing certificate of the family.
    Cert {
        #[arg(value_enum)]
        kind: CertKind,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        d: i64,
        /// Index of the deleted spoke, 1..=d (deleted drawings only).
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a certificate; exit 0 iff valid.
    Verify {
        /// Certificate file, or `-` for stdin.
        #[arg(default_value = "-")]
        cert: String,
        /// Accept a pair of edges crossing more than once.
        #[arg(long)]
        allow_repeated_pairs: bool,
    },
    /// Lay out a certificate and write it as SVG.
    Draw {
        cert: String,
        #[arg(long)]
        svg: PathBuf,
        /// Base edge that must border the outer face.
        #[arg(long)]
        outer_edge: Option<u32>,
    },
    /// Compute the crossing number of a special graph.
    Solve {
        graph: String,
        #[command(flatten)]
        limits: LimitArgs,
        /// A valid certificate for the graph, used as an upper bound.
        #[arg(long)]
        hint: Option<PathBuf>,
    },
    /// Shrink a graph to a k-crossing-critical subgraph keeping all
    /// k-critical edges.
    Extract {
        graph: String,
        #[arg(long)]
        k: usize,
        /// Try deletions in a shuffled order with this seed instead of by id.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Write an assembly bundle directory certifying k crossings.
    Assemble {
        #[arg(long, value_parser = clap::value_parser!(u64).range(CANONICAL_CROSSINGS as u64..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        d: i64,
        /// `auto` for floor(k/171), or an explicit number of family copies.
        #[arg(long, default_value = "auto", value_parser = parse_copies)]
        copies: Copies,
        #[arg(long, value_enum, default_value_t = Style::K2t)]
        style: Style,
        #[arg(long, default_value_t = FAMILY_GADGET_T, value_parser = parse_positive)]
        gadget_t: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Canonical,
    Deleted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Parallel,
    K2t,
}

impl From<Style> for GadgetStyle {
    fn from(s: Style) -> Self {
        match s {
            Style::Parallel => GadgetStyle::Parallel,
            Style::K2t => GadgetStyle::K2t,
        }
    }
}

#[derive(Args)]
struct LimitArgs {
    /// Largest crossing count to try.
    #[arg(long)]
    max_k: Option<usize>,
    /// Search budget such as `30s` or `2m`, converted to a node cap.
    #[arg(long, value_parser = humantime::parse_duration)]
    budget: Option<Duration>,
    /// Node cap for the search.
    #[arg(long)]
    nodes: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Also search drawings where two edges cross twice.
    #[arg(long)]
    relaxed: bool,
}

impl LimitArgs {
    fn limits(&self) -> SolveLimits {
        SolveLimits {
            max_k: self.max_k.unwrap_or(usize::MAX),
            time_budget: self.budget,
            node_cap: self.nodes,
            workers: self.workers.max(1),
            relaxed: self.relaxed,
        }
    }
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(t) if t >= 1 => Ok(t),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn parse_copies(s: &str) -> Result<Copies, String> {
    if s == "auto" {
        return Ok(Copies::Auto);
    }
    parse_positive(s)
        .map(Copies::Explicit)
        .map_err(|_| format!("expected `auto` or a positive integer, got {s:?}"))
}

/// How a command ends when it does not succeed.
enum Failure {
    /// Bad flag combination: exit 2.
    Usage(String),
    /// Invalid input or a negative answer, with a JSON report on stdout.
    Report(Value),
    /// Anything else that went wrong: exit 1.
    Error(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Report(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Generate { d, out, roles } => {
            let inst = build_family(d).map_err(|e| anyhow!(e))?;
            let roles_path = roles.or_else(|| out.as_ref().map(|p| p.with_extension("roles.json")));
            emit(out.as_deref(), &encode_graph(&inst.special))?;
            if let Some(path) = roles_path {
                let table = serde_json::to_string_pretty(&inst.role_table()).map_err(|e| anyhow!(e))?;
                write_file(&path, &table)?;
            }
            Ok(())
        }
        Command::Cert { kind, d, k, out } => {
            let cert = match (kind, k) {
                (CertKind::Canonical, None) => None,
                (CertKind::Canonical, Some(_)) => {
                    return Err(Failure::Usage("--k applies to deleted certificates only".into()))
                }
                (CertKind::Deleted, None) => return Err(Failure::Usage("--k is required for deleted certificates".into())),
                (CertKind::Deleted, Some(k)) if k < 1 || k > d => {
                    return Err(Failure::Usage(format!("--k must be between 1 and --d ({d}), got {k}")))
                }
                (CertKind::Deleted, Some(k)) => Some(k),
            };
            let inst = build_family(d).map_err(|e| anyhow!(e))?;
            let cert = match cert {
                None => canonical_drawing(&inst),
                Some(k) => deleted_edge_drawing(&inst, k),
            }
            .map_err(|e| anyhow!(e))?;
            emit(out.as_deref(), &encode_cert(&cert))
        }
        Command::Verify {
            cert,
            allow_repeated_pairs,
        } => {
            let text = read_input(&cert)?;
            let cert = match decode_cert(&text) {
                Ok(c) => c,
                Err(e) => {
                    return Err(Failure::Report(json!({
                        "valid": false,
                        "error": "schema",
                        "message": e.to_string(),
                    })))
                }
            };
            let mode = if allow_repeated_pairs {
                Normalization::RepeatedPairs
            } else {
                Normalization::Good
            };
            let report = validate_with(&cert, mode);
            let v = serde_json::to_value(&report).map_err(|e| anyhow!(e))?;
            if report.valid {
                println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
                Ok(())
            } else {
                Err(Failure::Report(v))
            }
        }
        Command::Draw { cert, svg, outer_edge } => {
            let cert = decode_cert(&read_input(&cert)?).map_err(|e| anyhow!(e))?;
            let outer = outer_edge.map_or(OuterFace::Largest, |e| OuterFace::Touching(EdgeId(e)));
            let l = layout::<f64>(&cert, outer).map_err(|e| anyhow!(e))?;
            write_file(&svg, &render_svg(&cert, &l))
        }
        Command::Solve { graph, limits, hint } => {
            let sg = read_graph(&graph)?;
            let limits = limits.limits();
            let out = match hint {
                None => solve_exact(&sg, &limits),
                Some(path) => {
                    let cert = decode_cert(&read_input(&path.to_string_lossy())?).map_err(|e| anyhow!(e))?;
                    solve_with_upper_bound(&sg, &limits, &cert).map_err(|e| anyhow!(e))?
                }
            };
            emit(None, &serde_json::to_string_pretty(&out.to_json()).expect("outcome serializes"))
        }
        Command::Extract {
            graph,
            k,
            seed,
            out,
            limits,
        } => {
            let sg = read_graph(&graph)?;
            let oracle = CrossingOracle::exact(limits.limits());
            let order = seed.map_or(DeletionOrder::Ascending, DeletionOrder::Shuffled);
            match extract_critical(&sg, k, &oracle, order) {
                Ok(h) => emit(out.as_deref(), &encode_graph(&h)),
                Err(e) => Err(Failure::Report(critical_diagnostic(&e))),
            }
        }
        Command::Assemble {
            k,
            d,
            copies,
            style,
            gadget_t,
            out,
        } => {
            let k = k as usize;
            if let Copies::Explicit(t) = copies {
                if t * CANONICAL_CROSSINGS > k {
                    return Err(Failure::Usage(format!(
                        "--copies {t} needs --k of at least {}",
                        t * CANONICAL_CROSSINGS
                    )));
                }
            }
            let bundle = assemble_with(k, d, copies, style.into(), gadget_t).map_err(|e| anyhow!(e))?;
            bundle.check().map_err(|e| anyhow!(e))?;
            bundle
                .write_dir(&out)
                .map_err(|e| anyhow!(e))
                .with_context(|| format!("writing {}", out.display()))?;
            let summary = json!({
                "out": out.display().to_string(),
                "k": bundle.k,
                "copies": bundle.copies,
                "k5_copies": bundle.k5_copies(),
                "certified_total": bundle.certified_total(),
            });
            emit(None, &serde_json::to_string_pretty(&summary).expect("summary serializes"))
        }
    }
}

fn value_json(v: &CrValue) -> Value {
    match *v {
        CrValue::Exact(n) => json!({"outcome": "exact", "n": n}),
        CrValue::AtLeast(n) => json!({"outcome": "atleast", "n": n}),
        CrValue::Infinite => json!({"outcome": "infinite", "n": null}),
    }
}

fn critical_diagnostic(e: &CriticalError) -> Value {
    let mut v = match e {
        CriticalError::OracleInconclusive { edge, k, value } => json!({
            "error": "oracle_inconclusive",
            "edge": edge.map(|e| e.0),
            "k": k,
            "value": value_json(value),
        }),
        CriticalError::NotAboveThreshold { k, value } => json!({
            "error": "not_above_threshold",
            "k": k,
            "value": value_json(value),
        }),
        CriticalError::ThickEdge(x) | CriticalError::UnknownEdge(x) => json!({ "error": "critical", "edge": x.0 }),
        _ => json!({ "error": "critical" }),
    };
    v["message"] = json!(e.to_string());
    v
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    Ok(fs::read_to_string(path).with_context(|| format!("reading {path}"))?)
}

fn read_graph(path: &str) -> Result<SpecialGraph, Failure> {
    decode_graph(&read_input(path)?).map_err(|e| {
        Failure::Report(json!({
            "error": "schema",
            "message": e.to_string(),
        }))
    })
}

fn write_file(path: &Path, text: &str) -> Outcome {
    let mut body = text.to_owned();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => write_file(p, text),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}").context("writing stdout")?;
            Ok(())
        }
    }
}
