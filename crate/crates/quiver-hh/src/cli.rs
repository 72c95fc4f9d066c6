//! Command-line dispatch: one verb per library capability, reports in JSON
//! or text, exit codes 0 (success), 1 (validation error), 2 (resource cap).

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::corpus::{run_corpus_checks, CorpusParams};
use crate::cycles::{build_window_graph, find_truncated_cycles, minimal_two_truncated};
use crate::error::{Error, Result};
use crate::hochschild::{certify_nonvanishing, hh0_direct, hh_dimensions, BoundaryStatus, ResourceCaps};
use crate::presentation::parse_presentation;
use crate::report::{algebra_summary, input_digest, Report};
use crate::resolutions::{
    default_cutoff, gldim_cutoff, gldim_monomial, pd_simple_cutoff, pd_simple_monomial, PdBound,
    PdValue,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Verb {
    Validate,
    Basis,
    Cycles,
    Hh,
    Certify,
    Gldim,
    Pd,
    Compare,
    Corpus,
}

impl Verb {
    fn name(self) -> &'static str {
        match self {
            Verb::Validate => "validate",
            Verb::Basis => "basis",
            Verb::Cycles => "cycles",
            Verb::Hh => "hh",
            Verb::Certify => "certify",
            Verb::Gldim => "gldim",
            Verb::Pd => "pd",
            Verb::Compare => "compare",
            Verb::Corpus => "corpus",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Hochschild homology, truncated cycles, and global dimension for bounded
/// quiver algebras presented as `.quiver` files.
#[derive(Parser, Debug)]
#[command(name = "quiver-hh", version, disable_help_subcommand = true)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    verb: Verb,

    /// Input presentation file (not used by `corpus`).
    input: Option<PathBuf>,

    /// Coefficient field override: `q` or `fp:<prime>`.
    #[arg(long)]
    field: Option<String>,

    /// Truncation order for `cycles`/`compare`; repetition count for `certify`.
    #[arg(long)]
    m: Option<usize>,

    /// Repetition count for `certify` (alias of --m there).
    #[arg(long)]
    repetitions: Option<usize>,

    /// Largest homology degree to compute.
    #[arg(long)]
    max_degree: Option<usize>,

    /// Longest cycle length to search.
    #[arg(long)]
    max_length: Option<usize>,

    /// Syzygy iteration bound for the general-algebra route.
    #[arg(long)]
    cutoff: Option<usize>,

    /// Base seed for `corpus`.
    #[arg(long)]
    seed: Option<u64>,

    /// Number of generated algebras for `corpus`.
    #[arg(long)]
    count: Option<usize>,

    /// Property selection for `corpus` (only `all` is defined).
    #[arg(long)]
    check: Option<String>,

    /// Chain-space cap: largest tuple count any degree may reach.
    #[arg(long)]
    max_tuples: Option<usize>,

    /// Wall-clock budget per operation, in milliseconds.
    #[arg(long)]
    time_budget_ms: Option<u64>,

    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn flag_error(message: String) -> Error {
    Error::Parse { line: 0, message }
}

/// Replaces the `field:` directive so an override is honored by the same
/// parsing path as a file that declared it.
fn override_field_line(text: &str, field: &str) -> Result<String> {
    let directive = match field.to_ascii_lowercase().as_str() {
        "q" => "field: Q".to_string(),
        other => match other.strip_prefix("fp:") {
            Some(p) => format!("field: Fp {p}"),
            None => {
                return Err(flag_error(format!(
                    "--field must be `q` or `fp:<prime>`, got `{field}`"
                )))
            }
        },
    };
    let mut replaced = false;
    let out: Vec<String> = text
        .lines()
        .map(|line| {
            if !replaced && line.trim_start().starts_with("field:") {
                replaced = true;
                directive.clone()
            } else {
                line.to_string()
            }
        })
        .collect();
    if !replaced {
        return Err(flag_error("input file has no `field:` line to override".into()));
    }
    Ok(out.join("\n"))
}

fn arrow_names(algebra: &Algebra, arrows: &[usize]) -> Vec<String> {
    arrows
        .iter()
        .map(|&a| algebra.quiver().arrow(a).name.clone())
        .collect()
}

fn caps_from(cli: &Cli) -> ResourceCaps {
    let mut caps = ResourceCaps::default();
    if let Some(t) = cli.max_tuples {
        caps.max_chain_tuples = t;
    }
    if let Some(ms) = cli.time_budget_ms {
        caps.time_budget = Some(std::time::Duration::from_millis(ms));
    }
    caps
}

fn pd_bound_json(b: &PdBound) -> Value {
    match b {
        PdBound::Exact(d) => json!({ "exact": d }),
        PdBound::AtLeast(d) => json!({ "at_least": d }),
    }
}

fn run_verb(cli: &Cli, algebra: &Algebra) -> Result<Value> {
    let caps = caps_from(cli);
    match cli.verb {
        Verb::Validate => {
            let r = algebra.validation_report();
            Ok(json!({
                "dim": r.dim,
                "nilpotency": r.nilpotency,
                "monomial": r.monomial,
                "vertices": r.vertices,
                "arrows": r.arrows,
                "relations": r.relations,
            }))
        }
        Verb::Basis => {
            let paths: Vec<String> = algebra
                .basis()
                .paths()
                .iter()
                .map(|p| p.display(algebra.quiver()))
                .collect();
            Ok(json!({ "dim": algebra.dim(), "paths": paths }))
        }
        Verb::Cycles => {
            let m = cli.m.unwrap_or(2);
            if m < 2 {
                return Err(flag_error("--m must be at least 2 for cycle detection".into()));
            }
            let graph = build_window_graph(algebra, m);
            let max_length = cli.max_length.unwrap_or_else(|| graph.default_max_len());
            let witnesses: Vec<Value> = find_truncated_cycles(algebra, m, max_length)
                .iter()
                .map(|w| {
                    json!({
                        "cycle": arrow_names(algebra, w.cycle.arrows()),
                        "length": w.cycle.len(),
                        "aperiodic": w.cycle.is_aperiodic(),
                        "zero_windows": w.zero_windows.iter()
                            .map(|win| arrow_names(algebra, win).join("*")).collect::<Vec<_>>(),
                        "nonzero_windows": w.nonzero_windows.iter()
                            .map(|win| arrow_names(algebra, win).join("*")).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({
                "m": m,
                "max_length": max_length,
                "window_nodes": graph.nodes.len(),
                "witnesses": witnesses,
            }))
        }
        Verb::Hh => {
            let q_max = cli.max_degree.unwrap_or(4);
            let dims = hh_dimensions(algebra, q_max, &caps)?;
            Ok(json!({
                "max_degree": q_max,
                "hh_dimensions": dims,
                "hh0_direct": hh0_direct(algebra),
            }))
        }
        Verb::Certify => {
            let m = cli.repetitions.or(cli.m).unwrap_or(1);
            if m < 1 {
                return Err(flag_error("--repetitions must be at least 1".into()));
            }
            let cycle = minimal_two_truncated(algebra).ok_or(Error::NoTwoTruncatedCycle)?;
            let cert = certify_nonvanishing(algebra, &cycle, m, &caps)?;
            let xi: Vec<Value> = cert
                .xi
                .iter()
                .map(|(t, c)| {
                    json!({
                        "tuple": t.display(algebra),
                        "coefficient": algebra.field().format_scalar(c),
                    })
                })
                .collect();
            Ok(json!({
                "cycle": arrow_names(algebra, cert.cycle.arrows()),
                "repetitions": cert.repetitions,
                "degree": cert.degree,
                "xi": xi,
                "is_cycle": cert.is_cycle,
                "boundary_status": match cert.boundary_status {
                    BoundaryStatus::NotInImage => "not_in_image",
                    BoundaryStatus::InImage { .. } => "in_image",
                },
                "hh_lower_bound": cert.hh_lower_bound,
            }))
        }
        Verb::Gldim => {
            if algebra.is_monomial() {
                let g = gldim_monomial(algebra)?;
                Ok(json!({
                    "route": "monomial",
                    "value": match g.value {
                        PdValue::Finite(d) => json!(d),
                        PdValue::Infinite => json!("infinite"),
                    },
                    "witness": g.display_witness(algebra),
                }))
            } else {
                let cutoff = cli.cutoff.unwrap_or_else(|| default_cutoff(algebra));
                let report = gldim_cutoff(algebra, cutoff);
                let per_vertex: Vec<Value> = report
                    .per_vertex
                    .iter()
                    .enumerate()
                    .map(|(i, b)| json!({ "vertex": i + 1, "pd": pd_bound_json(b) }))
                    .collect();
                Ok(json!({
                    "route": "cutoff",
                    "cutoff": cutoff,
                    "per_vertex": per_vertex,
                    "aggregate": pd_bound_json(&report.aggregate),
                }))
            }
        }
        Verb::Pd => {
            if algebra.is_monomial() {
                let per_vertex: Vec<Value> = algebra
                    .quiver()
                    .vertices()
                    .map(|v| {
                        let pd = pd_simple_monomial(algebra, v).expect("monomial checked");
                        json!({
                            "vertex": v,
                            "value": match pd.value {
                                PdValue::Finite(d) => json!(d),
                                PdValue::Infinite => json!("infinite"),
                            },
                            "witness": pd.display_witness(algebra),
                        })
                    })
                    .collect();
                Ok(json!({ "route": "monomial", "per_vertex": per_vertex }))
            } else {
                let cutoff = cli.cutoff.unwrap_or_else(|| default_cutoff(algebra));
                let per_vertex: Vec<Value> = algebra
                    .quiver()
                    .vertices()
                    .map(|v| {
                        json!({
                            "vertex": v,
                            "pd": pd_bound_json(&pd_simple_cutoff(algebra, v, cutoff)),
                        })
                    })
                    .collect();
                Ok(json!({ "route": "cutoff", "cutoff": cutoff, "per_vertex": per_vertex }))
            }
        }
        Verb::Compare => {
            let m = cli.m.unwrap_or(2);
            if m < 2 {
                return Err(flag_error("--m must be at least 2 for the comparison".into()));
            }
            let q_max = cli.max_degree.unwrap_or(4);
            let graph = build_window_graph(algebra, m);
            let max_length = cli.max_length.unwrap_or_else(|| graph.default_max_len());
            let witnesses = find_truncated_cycles(algebra, m, max_length);
            match witnesses.first() {
                None => Ok(json!({ "m": m, "witness_found": false })),
                Some(w) => {
                    let report = crate::hochschild::hh_compare_summand(algebra, w, q_max, &caps)?;
                    Ok(json!({
                        "m": report.m,
                        "witness_found": true,
                        "cycle": arrow_names(algebra, w.cycle.arrows()),
                        "l": report.l,
                        "max_degree": q_max,
                        "hh_dimensions": report.dims_algebra,
                        "cycle_algebra_hh_dimensions": report.dims_cycle_algebra,
                        "dominated": report.dominated,
                    }))
                }
            }
        }
        Verb::Corpus => unreachable!("corpus is dispatched before algebra construction"),
    }
}

fn run_corpus(cli: &Cli) -> Result<Value> {
    if let Some(check) = &cli.check {
        if check != "all" {
            return Err(flag_error(format!("--check supports only `all`, got `{check}`")));
        }
    }
    let seed = cli.seed.unwrap_or(0);
    let count = cli.count.unwrap_or(50);
    let q_max = cli.max_degree.unwrap_or(3);
    let caps = caps_from(cli);
    let report = run_corpus_checks(seed, count, &CorpusParams::default(), q_max, &caps)?;
    let outcomes: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "seed": o.seed,
                "dim": o.dim,
                "witness_bearing": o.witness_bearing,
                "checks_run": o.checks_run,
                "skipped": o.skipped,
                "violations": o.violations,
            })
        })
        .collect();
    Ok(json!({
        "algebras": report.algebras,
        "witness_bearing": report.witness_bearing,
        "violations": report.violation_count,
        "outcomes": outcomes,
    }))
}

fn command_echo(cli: &Cli) -> Value {
    let mut m = Map::new();
    m.insert("verb".into(), json!(cli.verb.name()));
    m.insert(
        "input".into(),
        match &cli.input {
            Some(p) => json!(p.display().to_string()),
            None => Value::Null,
        },
    );
    let mut options = Map::new();
    if let Some(f) = &cli.field {
        options.insert("field".into(), json!(f));
    }
    if let Some(v) = cli.m {
        options.insert("m".into(), json!(v));
    }
    if let Some(v) = cli.repetitions {
        options.insert("repetitions".into(), json!(v));
    }
    if let Some(v) = cli.max_degree {
        options.insert("max_degree".into(), json!(v));
    }
    if let Some(v) = cli.max_length {
        options.insert("max_length".into(), json!(v));
    }
    if let Some(v) = cli.cutoff {
        options.insert("cutoff".into(), json!(v));
    }
    if let Some(v) = cli.seed {
        options.insert("seed".into(), json!(v));
    }
    if let Some(v) = cli.count {
        options.insert("count".into(), json!(v));
    }
    if let Some(v) = &cli.check {
        options.insert("check".into(), json!(v));
    }
    if let Some(v) = cli.max_tuples {
        options.insert("max_tuples".into(), json!(v));
    }
    if let Some(v) = cli.time_budget_ms {
        options.insert("time_budget_ms".into(), json!(v));
    }
    m.insert("options".into(), Value::Object(options));
    Value::Object(m)
}

fn error_results(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let started = Instant::now();

    let mut digest = None;
    let mut algebra_json = Value::Null;
    let mut exit = 0;

    let results = if cli.verb == Verb::Corpus {
        run_corpus(&cli)
    } else {
        match &cli.input {
            None => Err(flag_error(format!(
                "verb `{}` needs an input file",
                cli.verb.name()
            ))),
            Some(path) => match std::fs::read_to_string(path) {
                Err(e) => Err(Error::Io(e)),
                Ok(raw) => {
                    digest = Some(input_digest(&raw));
                    let with_field = match &cli.field {
                        Some(f) => override_field_line(&raw, f),
                        None => Ok(raw),
                    };
                    with_field
                        .and_then(parse_presentation_text)
                        .and_then(Algebra::new)
                        .and_then(|algebra| {
                            algebra_json = algebra_summary(&algebra);
                            run_verb(&cli, &algebra)
                        })
                }
            },
        }
    };

    let results = match results {
        Ok(v) => v,
        Err(e) => {
            exit = e.exit_code();
            error_results(&e)
        }
    };

    let report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        input_digest: digest,
        algebra: algebra_json,
        command: command_echo(&cli),
        results,
        timing_ms: started.elapsed().as_millis(),
    };
    let rendered = match cli.format {
        Format::Json => report.emit_json(),
        Format::Text => report.emit_text(),
    };
    match &cli.output {
        None => print!("{rendered}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("cannot write report to {}: {e}", path.display());
                return 1;
            }
        }
    }
    exit
}

fn parse_presentation_text(text: String) -> Result<crate::presentation::AlgebraPresentation> {
    parse_presentation(&text)
}
