//! Batch front end: parse a JSON instance, run the requested check or
//! construction, emit one JSON document, and encode the verdict in the exit
//! code (0 feasible/constructed, 2 infeasible with certificate, 1 bad
//! input, 3 internal defect).

mod io;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gsynth_core::branchings::{self, BranchingBounds, PackingRequest};
use gsynth_core::ext::Ext;
use gsynth_core::forests;
use gsynth_core::graph::Bigraph;
use gsynth_core::oracle::{self, DegreeRequirement, GraphPredicate, OracleBudget, RawCondition};
use gsynth_core::realize::{self, DegreeBounds, DegreeSpec};
use gsynth_core::setfn::MasterFunction;
use gsynth_core::termrank;
use gsynth_core::{Error, Outcome};

use io::InputError;

#[derive(Parser)]
#[command(
    name = "gsynth",
    version,
    about = "Decide and construct degree-constrained bigraphs covering supermodular demands, \
             branching packings, max term rank matrices, and wooded hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the output document to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Include the maximizing violator sets in certificates.
    #[arg(long, global = true)]
    certificate: bool,
    /// Output format for constructed graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Step budget override for the exhaustive oracle sweeps.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for the randomized self-test suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Feasibility checks: verdicts and certificates, no construction.
    Check {
        #[command(subcommand)]
        family: CheckFamily,
    },
    /// Constructions; every witness is re-verified before it is printed.
    Realize {
        #[command(subcommand)]
        family: RealizeFamily,
    },
    /// Bigraphs / 0-1 matrices with matching number at least ell.
    Termrank {
        /// Exact degree specification (JSON or file).
        #[arg(long, conflicts_with = "bounds")]
        spec: Option<String>,
        /// Degree bounds with optional edge interval (JSON or file).
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long)]
        ell: i64,
        /// Check feasibility only.
        #[arg(long)]
        check_only: bool,
        /// For bounds: stop after lifting to an exact degree specification.
        #[arg(long)]
        lift_only: bool,
    },
    /// Arc-disjoint branchings with prescribed or bounded shapes.
    Branchings {
        /// Digraph (JSON or file).
        #[arg(long)]
        digraph: String,
        #[arg(long, value_enum)]
        mode: BranchMode,
        /// Branching count; defaults to the length of --mu.
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated sizes, e.g. 2,2 (modes sizes / sizes-indeg).
        #[arg(long)]
        mu: Option<String>,
        /// Comma-separated union indegrees (mode sizes-indeg).
        #[arg(long)]
        m_in: Option<String>,
        #[arg(long)]
        size_lo: Option<String>,
        #[arg(long)]
        size_hi: Option<String>,
        #[arg(long)]
        indeg_lo: Option<String>,
        #[arg(long)]
        indeg_hi: Option<String>,
        #[arg(long)]
        total_lo: Option<i64>,
        #[arg(long)]
        total_hi: Option<i64>,
        #[arg(long)]
        check_only: bool,
    },
    /// Degree-exact forests inside bigraphs.
    Forest {
        #[command(subcommand)]
        action: ForestAction,
    },
    /// Uniform wooded hypergraphs fitting a degree specification.
    Wooded {
        /// Comma-separated vertex degrees.
        #[arg(long)]
        m_s: String,
        /// Hyperedge size (>= 2).
        #[arg(long)]
        ell: i64,
    },
    /// Exhaustive reference sweeps (slow, desk scale only).
    Oracle {
        #[command(subcommand)]
        what: OracleWhat,
    },
    /// Seeded desk-scale property suites.
    Selftest,
}

#[derive(Subcommand)]
enum CheckFamily {
    /// Simple bigraph fitting an exact degree specification.
    GaleRyser {
        #[arg(long)]
        spec: String,
    },
    /// Simple bigraph with exact S-degrees covering a demand.
    CoverS {
        #[arg(long)]
        m_s: String,
        #[arg(long)]
        p: String,
    },
    /// Simple bigraph with exact degrees on both sides covering a demand.
    CoverFull {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        p: String,
    },
    /// Simple bigraph covering a demand inside degree bounds.
    Bounds {
        #[arg(long)]
        bounds: String,
        #[arg(long)]
        p: String,
        /// Also check the edge-count interval.
        #[arg(long)]
        edges: bool,
    },
    /// Membership of (m_s, -m_t) in the master 0-base-polyhedron.
    MemberB0 {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        p: String,
    },
    /// Arc-disjoint branchings with prescribed root-sets.
    Edmonds {
        #[arg(long)]
        digraph: String,
        /// Root-sets as a JSON array of index arrays, e.g. [[0],[0,1]].
        #[arg(long)]
        roots: String,
    },
    /// Forest with prescribed T-degrees inside a given bigraph.
    T2Forest {
        #[arg(long)]
        bigraph: String,
        /// Defaults to 2 everywhere.
        #[arg(long)]
        m_for: Option<String>,
    },
}

#[derive(Subcommand)]
enum RealizeFamily {
    GaleRyser {
        #[arg(long)]
        spec: String,
    },
    CoverS {
        #[arg(long)]
        m_s: String,
        #[arg(long)]
        p: String,
    },
    CoverFull {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        p: String,
    },
    Bounds {
        #[arg(long)]
        bounds: String,
        #[arg(long)]
        p: String,
    },
}

#[derive(Subcommand)]
enum ForestAction {
    /// Does the bigraph contain a forest with the prescribed T-degrees?
    Check {
        #[arg(long)]
        bigraph: String,
        #[arg(long)]
        m_for: Option<String>,
    },
    /// Extract such a forest.
    Extract {
        #[arg(long)]
        bigraph: String,
        #[arg(long)]
        m_for: Option<String>,
    },
    /// Build a degree-exact bigraph containing such a forest.
    Realize {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        m_for: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchMode {
    Sizes,
    SizesIndeg,
    Bounds,
}

#[derive(Subcommand)]
enum OracleWhat {
    /// Enumerate simple bigraphs under a degree requirement.
    Bigraphs {
        #[arg(long, conflicts_with = "bounds")]
        spec: Option<String>,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long, value_enum, default_value_t = OraclePredicate::Any)]
        predicate: OraclePredicate,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        ell: Option<i64>,
        #[arg(long)]
        m_for: Option<String>,
    },
    /// Enumerate branching packings.
    Pack {
        #[arg(long)]
        digraph: String,
        #[arg(long, value_enum)]
        mode: BranchMode,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        m_in: Option<String>,
        #[arg(long)]
        size_lo: Option<String>,
        #[arg(long)]
        size_hi: Option<String>,
        #[arg(long)]
        indeg_lo: Option<String>,
        #[arg(long)]
        indeg_hi: Option<String>,
        #[arg(long)]
        total_lo: Option<i64>,
        #[arg(long)]
        total_hi: Option<i64>,
    },
    /// Raw full-domain sweep of a named inequality.
    Condition {
        /// One of: gale_ryser, cover_parts, cover_mixed, cover_full, ftgs,
        /// fsgt, galfa, fbeta, term_rank, term_rank_ftgs, term_rank_fsgt,
        /// term_rank_galfa, term_rank_fbeta, forest_fit.
        #[arg(long)]
        id: String,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        m_s: Option<String>,
        #[arg(long)]
        ell: Option<i64>,
        #[arg(long)]
        m_for: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OraclePredicate {
    Any,
    Covers,
    Matching,
    Forest,
}

/// Outcome of one dispatch: exit code and the JSON payload (without stats).
struct Run {
    code: u8,
    doc: Value,
}

fn feasible(witness: Value) -> Run {
    Run {
        code: 0,
        doc: json!({"status": "feasible", "witness": witness}),
    }
}

fn infeasible(certificate: Value) -> Run {
    Run {
        code: 2,
        doc: json!({"status": "infeasible", "certificate": certificate}),
    }
}

fn error_run(kind: &str, code: u8, message: String) -> Run {
    Run {
        code,
        doc: json!({"status": "error", "error": {"kind": kind, "message": message}}),
    }
}

impl From<Error> for Run {
    fn from(e: Error) -> Run {
        match e {
            Error::InvalidInput(m) => error_run("input", 1, m),
            Error::Precondition(m) => error_run("precondition", 1, m),
            Error::Capacity(m) => error_run("capacity", 1, m),
            Error::Defect(m) => error_run("defect", 3, m),
        }
    }
}

impl From<InputError> for Run {
    fn from(e: InputError) -> Run {
        error_run("input", 1, e.0)
    }
}

macro_rules! run_try {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Run::from(e),
        }
    };
}

fn parse_i64_list(arg: &str) -> Result<Vec<i64>, InputError> {
    let trimmed = arg.trim();
    if trimmed.starts_with('[') {
        return io::int_vec(&io::load_value(arg)?, "list");
    }
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| InputError(format!("bad integer \"{tok}\": {e}")))
        })
        .collect()
}

fn graph_witness(g: &Bigraph, format: Format) -> Value {
    match format {
        Format::Json => json!({"bigraph": io::bigraph_json(g)}),
        Format::Matrix => io::matrix_json(g),
    }
}

fn oracle_budget(budget: Option<u64>) -> OracleBudget {
    let mut b = OracleBudget::default();
    if let Some(steps) = budget {
        b.max_steps = steps;
    }
    b
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print normally; usage errors exit 1, keeping
            // exit code 2 reserved for infeasibility.
            let code = match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = Instant::now();
    let mut run = dispatch(&cli);
    if let Some(obj) = run.doc.as_object_mut() {
        obj.insert(
            "stats".into(),
            json!({"elapsed_ms": started.elapsed().as_millis() as u64}),
        );
    }
    let text = serde_json::to_string_pretty(&run.doc).expect("document serializes");
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(run.code)
}

fn dispatch(cli: &Cli) -> Run {
    let full_cert = cli.certificate;
    match &cli.command {
        Command::Check { family } => check_cmd(family, full_cert),
        Command::Realize { family } => realize_cmd(family, cli.format, full_cert),
        Command::Termrank {
            spec,
            bounds,
            ell,
            check_only,
            lift_only,
        } => termrank_cmd(spec, bounds, *ell, *check_only, *lift_only, cli.format, full_cert),
        Command::Branchings {
            digraph,
            mode,
            k,
            mu,
            m_in,
            size_lo,
            size_hi,
            indeg_lo,
            indeg_hi,
            total_lo,
            total_hi,
            check_only,
        } => {
            let req = run_try!(build_request(
                digraph, *mode, *k, mu, m_in, size_lo, size_hi, indeg_lo, indeg_hi, *total_lo,
                *total_hi
            ));
            branchings_cmd(&req, *check_only, full_cert)
        }
        Command::Forest { action } => forest_cmd(action, cli.format, full_cert),
        Command::Wooded { m_s, ell } => wooded_cmd(m_s, *ell),
        Command::Oracle { what } => oracle_cmd(what, cli, full_cert),
        Command::Selftest => selftest::run(cli.seed),
    }
}

fn check_cmd(family: &CheckFamily, full: bool) -> Run {
    match family {
        CheckFamily::GaleRyser { spec } => {
            let spec = run_try!(parse_spec_arg(spec));
            match run_try!(realize::check_gale_ryser(&spec)) {
                Outcome::Feasible(()) => feasible(json!({"fits": true})),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        CheckFamily::CoverS { m_s, p } => {
            let m_s = run_try!(parse_i64_list(m_s));
            let p = run_try!(parse_setfn_arg(p));
            match run_try!(realize::check_cover_s(&m_s, &p)) {
                Outcome::Feasible(()) => feasible(json!({"covers": true})),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        CheckFamily::CoverFull { spec, p } => {
            let spec = run_try!(parse_spec_arg(spec));
            let p = run_try!(parse_setfn_arg(p));
            match run_try!(realize::check_cover_full(&spec, &p)) {
                Outcome::Feasible(()) => feasible(json!({"covers": true})),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        CheckFamily::Bounds { bounds, p, edges } => {
            let b = run_try!(parse_bounds_arg(bounds));
            let p = run_try!(parse_setfn_arg(p));
            let verdict = if *edges {
                run_try!(realize::check_bounds_edges(&b, &p))
            } else {
                run_try!(realize::check_bounds(&b, &p))
            };
            match verdict {
                Outcome::Feasible(()) => feasible(json!({"covers": true})),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        CheckFamily::MemberB0 { spec, p } => {
            let spec = run_try!(parse_spec_arg(spec));
            let p = run_try!(parse_setfn_arg(p));
            let Some(m_t) = spec.m_t() else {
                return error_run("input", 1, "membership needs m_t".into());
            };
            let master = run_try!(MasterFunction::new(spec.s_size(), &p));
            match run_try!(master.member_in_b0(spec.m_s(), m_t)) {
                Outcome::Feasible(()) => feasible(json!({"member": true})),
                Outcome::Infeasible(v) => {
                    infeasible(io::b0_violation_json(&v, spec.s_size(), full))
                }
            }
        }
        CheckFamily::Edmonds { digraph, roots } => {
            let d = run_try!(parse_digraph_arg(digraph));
            let roots_v = run_try!(io::load_value(roots));
            let root_masks = run_try!(parse_masks(&roots_v));
            match run_try!(branchings::check_edmonds(&d, &root_masks)) {
                Outcome::Feasible(()) => feasible(json!({"packable": true})),
                Outcome::Infeasible(c) => infeasible(io::pack_certificate_json(&c, full)),
            }
        }
        CheckFamily::T2Forest { bigraph, m_for } => {
            let g = run_try!(parse_bigraph_arg(bigraph));
            let m_for = run_try!(forest_degrees(m_for, g.t_size()));
            match run_try!(forests::check_forest_degrees(&g, &m_for)) {
                Outcome::Feasible(()) => feasible(json!({"forest_exists": true})),
                Outcome::Infeasible(y) => infeasible(json!({
                    "condition": "neighbourhood_deficiency",
                    "y": io::mask_json(y),
                })),
            }
        }
    }
}

fn realize_cmd(family: &RealizeFamily, format: Format, full: bool) -> Run {
    match family {
        RealizeFamily::GaleRyser { spec } => {
            let spec = run_try!(parse_spec_arg(spec));
            match run_try!(realize::construct_gale_ryser(&spec)) {
                Outcome::Feasible(g) => feasible(graph_witness(&g, format)),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        RealizeFamily::CoverS { m_s, p } => {
            let m_s = run_try!(parse_i64_list(m_s));
            let p = run_try!(parse_setfn_arg(p));
            match run_try!(realize::construct_cover_s(&m_s, &p)) {
                Outcome::Feasible(g) => feasible(graph_witness(&g, format)),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        RealizeFamily::CoverFull { spec, p } => {
            let spec = run_try!(parse_spec_arg(spec));
            let p = run_try!(parse_setfn_arg(p));
            match run_try!(realize::construct_cover_full(&spec, &p)) {
                Outcome::Feasible(g) => feasible(graph_witness(&g, format)),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        RealizeFamily::Bounds { bounds, p } => {
            let b = run_try!(parse_bounds_arg(bounds));
            let p = run_try!(parse_setfn_arg(p));
            match run_try!(realize::construct_bounds(&b, &p)) {
                Outcome::Feasible(g) => feasible(graph_witness(&g, format)),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
    }
}

fn termrank_cmd(
    spec: &Option<String>,
    bounds: &Option<String>,
    ell: i64,
    check_only: bool,
    lift_only: bool,
    format: Format,
    full: bool,
) -> Run {
    match (spec, bounds) {
        (Some(spec), None) => {
            let spec = run_try!(parse_spec_arg(spec));
            if check_only {
                return match run_try!(termrank::check_termrank(&spec, ell)) {
                    Outcome::Feasible(()) => feasible(json!({"reachable": true})),
                    Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
                };
            }
            match run_try!(termrank::construct_termrank(&spec, ell)) {
                Outcome::Feasible(g) => feasible(graph_witness(&g, format)),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        (None, Some(bounds)) => {
            let b = run_try!(parse_bounds_arg(bounds));
            if check_only {
                return match run_try!(termrank::check_termrank_bounds(&b, ell)) {
                    Outcome::Feasible(()) => feasible(json!({"reachable": true})),
                    Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
                };
            }
            if lift_only {
                return match run_try!(termrank::lift_bounds(&b, ell)) {
                    Outcome::Feasible(spec) => feasible(json!({"spec": io::spec_json(&spec)})),
                    Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
                };
            }
            match run_try!(termrank::construct_termrank_bounds(&b, ell)) {
                Outcome::Feasible(g) => feasible(graph_witness(&g, format)),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
        _ => error_run("input", 1, "give exactly one of --spec or --bounds".into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn build_request(
    digraph: &str,
    mode: BranchMode,
    k: Option<usize>,
    mu: &Option<String>,
    m_in: &Option<String>,
    size_lo: &Option<String>,
    size_hi: &Option<String>,
    indeg_lo: &Option<String>,
    indeg_hi: &Option<String>,
    total_lo: Option<i64>,
    total_hi: Option<i64>,
) -> Result<PackingRequest, InputError> {
    let d = parse_digraph_arg(digraph)?;
    let n = d.node_count();
    match mode {
        BranchMode::Sizes => {
            let mu = mu
                .as_ref()
                .ok_or_else(|| InputError("mode sizes needs --mu".into()))?;
            Ok(PackingRequest::sizes(d, parse_i64_list(mu)?))
        }
        BranchMode::SizesIndeg => {
            let mu = mu
                .as_ref()
                .ok_or_else(|| InputError("mode sizes-indeg needs --mu".into()))?;
            let m_in = m_in
                .as_ref()
                .ok_or_else(|| InputError("mode sizes-indeg needs --m-in".into()))?;
            Ok(PackingRequest::sizes_indeg(
                d,
                parse_i64_list(mu)?,
                parse_i64_list(m_in)?,
            ))
        }
        BranchMode::Bounds => {
            let k = k.ok_or_else(|| InputError("mode bounds needs --k".into()))?;
            let parse_or = |arg: &Option<String>, default: Vec<i64>| -> Result<Vec<i64>, InputError> {
                match arg {
                    None => Ok(default),
                    Some(s) => parse_i64_list(s),
                }
            };
            let bounds = BranchingBounds {
                size_lo: parse_or(size_lo, vec![0; k])?,
                size_hi: parse_or(size_hi, vec![n as i64 - 1; k])?,
                indeg_lo: parse_or(indeg_lo, vec![0; n])?,
                indeg_hi: parse_or(indeg_hi, vec![k as i64; n])?,
                total_lo: total_lo.unwrap_or(0),
                total_hi: total_hi.map_or(Ext::PosInf, Ext::Fin),
            };
            Ok(PackingRequest::bounds(d, k, bounds))
        }
    }
}

fn branchings_cmd(req: &PackingRequest, check_only: bool, full: bool) -> Run {
    if check_only {
        return match run_try!(branchings::check(req)) {
            Outcome::Feasible(()) => feasible(json!({"packable": true})),
            Outcome::Infeasible(c) => infeasible(io::pack_certificate_json(&c, full)),
        };
    }
    match run_try!(branchings::pack(req)) {
        Outcome::Feasible(packing) => feasible(json!({"packing": io::packing_json(&packing)})),
        Outcome::Infeasible(c) => infeasible(io::pack_certificate_json(&c, full)),
    }
}

fn forest_cmd(action: &ForestAction, format: Format, full: bool) -> Run {
    match action {
        ForestAction::Check { bigraph, m_for } => {
            let g = run_try!(parse_bigraph_arg(bigraph));
            let m_for = run_try!(forest_degrees(m_for, g.t_size()));
            match run_try!(forests::check_forest_degrees(&g, &m_for)) {
                Outcome::Feasible(()) => feasible(json!({"forest_exists": true})),
                Outcome::Infeasible(y) => infeasible(json!({
                    "condition": "neighbourhood_deficiency",
                    "y": io::mask_json(y),
                })),
            }
        }
        ForestAction::Extract { bigraph, m_for } => {
            let g = run_try!(parse_bigraph_arg(bigraph));
            let m_for = run_try!(forest_degrees(m_for, g.t_size()));
            match run_try!(forests::extract_forest(&g, &m_for)) {
                Outcome::Feasible(f) => {
                    feasible(json!({"forest": io::forest_json(g.s_size(), g.t_size(), &f)}))
                }
                Outcome::Infeasible(y) => infeasible(json!({
                    "condition": "neighbourhood_deficiency",
                    "y": io::mask_json(y),
                })),
            }
        }
        ForestAction::Realize { spec, m_for } => {
            let spec = run_try!(parse_spec_arg(spec));
            let t = spec.t_size().unwrap_or(0);
            let m_for = run_try!(forest_degrees(m_for, t));
            let notes = forests::classical_hypothesis_notes(&spec, &m_for);
            match run_try!(forests::realize_with_forest(&spec, &m_for)) {
                Outcome::Feasible((g, f)) => feasible(json!({
                    "bigraph": match format {
                        Format::Json => io::bigraph_json(&g),
                        Format::Matrix => io::matrix_json(&g),
                    },
                    "forest": io::forest_json(g.s_size(), g.t_size(), &f),
                    "notes": notes,
                })),
                Outcome::Infeasible(c) => infeasible(io::certificate_json(&c, full)),
            }
        }
    }
}

fn wooded_cmd(m_s: &str, ell: i64) -> Run {
    let m_s = run_try!(parse_i64_list(m_s));
    match run_try!(forests::realize_wooded_uniform(&m_s, ell)) {
        Outcome::Feasible((h, pairs)) => feasible(json!({
            "hypergraph": io::hypergraph_json(&h),
            "trimmed_forest": pairs.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })),
        Outcome::Infeasible(w) => infeasible(io::wooded_infeasible_json(&w)),
    }
}

fn oracle_cmd(what: &OracleWhat, cli: &Cli, full: bool) -> Run {
    let budget = oracle_budget(cli.budget);
    match what {
        OracleWhat::Bigraphs {
            spec,
            bounds,
            predicate,
            p,
            ell,
            m_for,
        } => {
            let p_fn = match p {
                Some(arg) => Some(run_try!(parse_setfn_arg(arg))),
                None => None,
            };
            let m_for_vec = match m_for {
                Some(arg) => Some(run_try!(parse_i64_list(arg))),
                None => None,
            };
            let pred = match predicate {
                OraclePredicate::Any => GraphPredicate::Any,
                OraclePredicate::Covers => match &p_fn {
                    Some(p) => GraphPredicate::Covers(p),
                    None => return error_run("input", 1, "predicate covers needs --p".into()),
                },
                OraclePredicate::Matching => match ell {
                    Some(l) => GraphPredicate::MatchingAtLeast(*l),
                    None => return error_run("input", 1, "predicate matching needs --ell".into()),
                },
                OraclePredicate::Forest => match &m_for_vec {
                    Some(v) => GraphPredicate::HasDegreeForest(v),
                    None => return error_run("input", 1, "predicate forest needs --m-for".into()),
                },
            };
            let result = match (spec, bounds) {
                (Some(spec), None) => {
                    let spec = run_try!(parse_spec_arg(spec));
                    let Some(m_t) = spec.m_t() else {
                        return error_run("input", 1, "oracle needs m_t in --spec".into());
                    };
                    let req = DegreeRequirement::Exact {
                        m_s: spec.m_s(),
                        m_t,
                    };
                    run_try!(oracle::oracle_bigraphs(&req, &pred, &budget))
                }
                (None, Some(bounds)) => {
                    let b = run_try!(parse_bounds_arg(bounds));
                    let (f_s, g_s, f_t, g_t, alpha, beta) = finite_box(&b);
                    let req = DegreeRequirement::Box {
                        f_s: &f_s,
                        g_s: &g_s,
                        f_t: &f_t,
                        g_t: &g_t,
                        alpha,
                        beta,
                    };
                    run_try!(oracle::oracle_bigraphs(&req, &pred, &budget))
                }
                _ => return error_run("input", 1, "give exactly one of --spec or --bounds".into()),
            };
            match result {
                Some(g) => feasible(graph_witness(&g, cli.format)),
                None => infeasible(json!({"exhausted": true})),
            }
        }
        OracleWhat::Pack {
            digraph,
            mode,
            k,
            mu,
            m_in,
            size_lo,
            size_hi,
            indeg_lo,
            indeg_hi,
            total_lo,
            total_hi,
        } => {
            let req = run_try!(build_request(
                digraph, *mode, *k, mu, m_in, size_lo, size_hi, indeg_lo, indeg_hi, *total_lo,
                *total_hi
            ));
            match run_try!(oracle::oracle_pack_branchings(&req, &budget)) {
                Some(packing) => feasible(json!({"packing": io::packing_json(&packing)})),
                None => infeasible(json!({"exhausted": true})),
            }
        }
        OracleWhat::Condition {
            id,
            spec,
            bounds,
            p,
            m_s,
            ell,
            m_for,
        } => {
            let spec_v = match spec {
                Some(arg) => Some(run_try!(parse_spec_arg(arg))),
                None => None,
            };
            let bounds_v = match bounds {
                Some(arg) => Some(run_try!(parse_bounds_arg(arg))),
                None => None,
            };
            let p_v = match p {
                Some(arg) => Some(run_try!(parse_setfn_arg(arg))),
                None => None,
            };
            let m_s_v = match m_s {
                Some(arg) => Some(run_try!(parse_i64_list(arg))),
                None => None,
            };
            let m_for_v = match m_for {
                Some(arg) => Some(run_try!(parse_i64_list(arg))),
                None => None,
            };
            let viol = run_try!(raw_condition(
                id, &spec_v, &bounds_v, &p_v, &m_s_v, *ell, &m_for_v
            ));
            let doc = json!({
                "gap": viol.gap,
                "lhs": viol.lhs,
                "rhs": viol.rhs,
                "x": io::mask_json(viol.x),
                "y": io::mask_json(viol.y),
                "parts": viol.parts.iter().map(|&p| io::mask_json(p)).collect::<Vec<_>>(),
            });
            let _ = full;
            if viol.gap <= 0 {
                feasible(json!({"holds": true, "max_violation": doc}))
            } else {
                infeasible(doc)
            }
        }
    }
}

fn raw_condition(
    id: &str,
    spec: &Option<DegreeSpec>,
    bounds: &Option<DegreeBounds>,
    p: &Option<gsynth_core::setfn::SetFunctionOnT>,
    m_s: &Option<Vec<i64>>,
    ell: Option<i64>,
    m_for: &Option<Vec<i64>>,
) -> Result<gsynth_core::oracle::RawViolation, Error> {
    let need = |what: &str| Error::invalid(format!("condition {id} needs {what}"));
    let spec_pair = || -> Result<(&[i64], &[i64]), Error> {
        let s = spec.as_ref().ok_or_else(|| need("--spec"))?;
        let m_t = s.m_t().ok_or_else(|| need("m_t"))?;
        Ok((s.m_s(), m_t))
    };
    let b = || bounds.as_ref().ok_or_else(|| need("--bounds"));
    let pf = || p.as_ref().ok_or_else(|| need("--p"));
    let l = || ell.ok_or_else(|| need("--ell"));
    let cond = match id {
        "gale_ryser" => {
            let (m_s, m_t) = spec_pair()?;
            RawCondition::Fitting { m_s, m_t }
        }
        "cover_parts" => RawCondition::CoverParts {
            m_s: m_s.as_deref().ok_or_else(|| need("--m-s"))?,
            p: pf()?,
        },
        "cover_mixed" => RawCondition::CoverMixed {
            m_s: m_s.as_deref().ok_or_else(|| need("--m-s"))?,
            p: pf()?,
        },
        "cover_full" => {
            let (m_s, m_t) = spec_pair()?;
            RawCondition::CoverFull { m_s, m_t, p: pf()? }
        }
        "ftgs" => RawCondition::Ftgs { b: b()?, p: pf()? },
        "fsgt" => RawCondition::Fsgt { b: b()?, p: pf()? },
        "galfa" => RawCondition::Galfa { b: b()?, p: pf()? },
        "fbeta" => RawCondition::Fbeta { b: b()?, p: pf()? },
        "term_rank" => {
            let (m_s, m_t) = spec_pair()?;
            RawCondition::TermRank { m_s, m_t, ell: l()? }
        }
        "term_rank_ftgs" => RawCondition::TermRankFtgs { b: b()?, ell: l()? },
        "term_rank_fsgt" => RawCondition::TermRankFsgt { b: b()?, ell: l()? },
        "term_rank_galfa" => RawCondition::TermRankGalfa { b: b()?, ell: l()? },
        "term_rank_fbeta" => RawCondition::TermRankFbeta { b: b()?, ell: l()? },
        "forest_fit" => {
            let (m_s, m_t) = spec_pair()?;
            RawCondition::ForestFit {
                m_s,
                m_t,
                m_for: m_for.as_deref().ok_or_else(|| need("--m-for"))?,
            }
        }
        other => return Err(Error::invalid(format!("unknown condition id \"{other}\""))),
    };
    oracle::oracle_condition(&cond)
}

/// Clamp a bounds instance to the finite box the oracle enumerates.
fn finite_box(b: &DegreeBounds) -> (Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>, i64, i64) {
    let s = b.s_size() as i64;
    let t = b.t_size() as i64;
    let cl = |v: &[Ext], hi: i64| -> Vec<i64> {
        v.iter().map(|e| e.clamp_finite(0, hi)).collect()
    };
    (
        cl(&b.f_s, t),
        cl(&b.g_s, t),
        cl(&b.f_t, s),
        cl(&b.g_t, s),
        b.alpha.clamp_finite(0, s * t),
        b.beta.clamp_finite(0, s * t),
    )
}

fn parse_spec_arg(arg: &str) -> Result<DegreeSpec, InputError> {
    io::parse_spec(&io::load_value(arg)?)
}

fn parse_bounds_arg(arg: &str) -> Result<DegreeBounds, InputError> {
    io::parse_bounds(&io::load_value(arg)?)
}

fn parse_setfn_arg(arg: &str) -> Result<gsynth_core::setfn::SetFunctionOnT, InputError> {
    io::parse_setfn(&io::load_value(arg)?)
}

fn parse_digraph_arg(arg: &str) -> Result<gsynth_core::graph::Digraph, InputError> {
    io::parse_digraph(&io::load_value(arg)?)
}

fn parse_bigraph_arg(arg: &str) -> Result<Bigraph, InputError> {
    io::parse_bigraph(&io::load_value(arg)?)
}

fn parse_masks(v: &Value) -> Result<Vec<u64>, InputError> {
    v.as_array()
        .ok_or_else(|| InputError("root-sets must be an array of index arrays".into()))?
        .iter()
        .map(|set| {
            let indices = io::int_vec(set, "root-set")?;
            let mut mask = 0u64;
            for i in indices {
                if !(0..64).contains(&i) {
                    return Err(InputError(format!("index {i} out of range")));
                }
                mask |= 1 << i;
            }
            Ok(mask)
        })
        .collect()
}

fn forest_degrees(m_for: &Option<String>, t_size: usize) -> Result<Vec<i64>, InputError> {
    match m_for {
        None => Ok(vec![2; t_size]),
        Some(arg) => {
            let v = parse_i64_list(arg)?;
            if v.len() != t_size {
                return Err(InputError(format!(
                    "--m-for must have {t_size} entries, got {}",
                    v.len()
                )));
            }
            Ok(v)
        }
    }
}
