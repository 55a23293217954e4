//! `bdmp` command-line tool: solve, verify, reduce, generate and inspect.
//!
//! Exit codes: 0 success or decision YES, 1 decision NO or failed
//! verification, 2 usage / parse / precondition errors, 3 internal
//! invariant violations.

use bdmp_core::{
    brute_force_bd, brute_force_mp, classify, generate, io, reduce_hs_to_bd, reduce_is_to_mp,
    reduce_is_to_mp_single_source, reduce_mds_to_bd_v1, reduce_mds_to_bd_v2, reduce_mis_to_mp,
    reduce_x3c_to_bd, solve_bd_auto_with_limit, solve_bd_diameter, solve_bd_fpt_dag,
    solve_bd_layered, solve_bd_outdeg, solve_bd_vertex_cover, solve_mp_auto_with_limit,
    solve_mp_diameter, solve_mp_layered, solve_mp_outdeg_with_limit, solve_mp_vertex_cover,
    verify_broadcast, verify_broadcast_layered, verify_multipacking, verify_multipacking_layered,
    BroadcastCheck, BroadcastFunction, Digraph, DistanceOracle, Error, GraphKind, Multipacking,
    MultipackingCheck, ReductionOutput, SolveOutcome, SourceInstance, INFINITE,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Past this size the quadratic general verifiers are skipped in favor of
/// the linear layered checks (and `info` omits distance statistics).
const ORACLE_SIZE_LIMIT: usize = 2048;

#[derive(Parser)]
#[command(name = "bdmp", version, about = "Exact broadcast domination and multipacking solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance from a digraph file
    Solve {
        problem: Problem,
        /// Input digraph file
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Decision target: cost at most k (bd) or size at least k (mp)
        #[arg(short)]
        k: Option<u32>,
        /// Write the witness to this path
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Emit a JSON report instead of plain text
        #[arg(long)]
        json: bool,
        /// Exhaustive-search size guardrail
        #[arg(long)]
        max_brute: Option<usize>,
    },
    /// Check a witness file against an instance
    Verify {
        problem: Problem,
        file: PathBuf,
        witness: PathBuf,
    },
    /// Generate a hardness-reduction gadget from a source instance
    Reduce {
        #[arg(value_enum)]
        reduction: Reduction,
        /// Source instance file
        src: PathBuf,
        #[arg(short)]
        k: Option<u32>,
        /// Output digraph file (role map included as comments)
        #[arg(short)]
        output: PathBuf,
    },
    /// Generate a random digraph
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        output: PathBuf,
    },
    /// Print structure and distance metrics for a digraph
    Info { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Bd,
    Mp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Auto,
    Brute,
    FptDag,
    Layered,
    Diam,
    Outdeg,
    Vc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    X3cBd,
    MdsBd1,
    MdsBd2,
    HsBd,
    IsMp,
    IsMpSs,
    MisMp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Dag,
    Layered,
    SsLayered,
    Sym,
}

pub fn run(args: &[String]) -> i32 {
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_with_output(args, &mut stdout, &mut stderr)
}

pub fn run_with_output(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

/// Failed-run exit code: violated internal invariants are 3, everything
/// else (usage, parsing, precondition, size guards) is 2.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Solve {
            problem,
            file,
            algo,
            k,
            witness,
            json,
            max_brute,
        } => solve(problem, &file, algo, k, witness.as_deref(), json, max_brute, out),
        Command::Verify {
            problem,
            file,
            witness,
        } => verify(problem, &file, &witness, out),
        Command::Reduce {
            reduction,
            src,
            k,
            output,
        } => reduce(reduction, &src, k, &output, out),
        Command::Gen {
            kind,
            n,
            p,
            seed,
            output,
        } => {
            let kind = match kind {
                Kind::Dag => GraphKind::Dag,
                Kind::Layered => GraphKind::Layered,
                Kind::SsLayered => GraphKind::SsLayered,
                Kind::Sym => GraphKind::Symmetric,
            };
            let d = generate(kind, n, p, seed)?;
            write_file(&output, &io::serialize_digraph(&d))?;
            writeln!(out, "wrote {} vertices, {} arcs", d.vertex_count(), d.arc_count())
                .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Info { file } => info(&file, out),
    }
}

#[allow(clippy::too_many_arguments)]
fn solve(
    problem: Problem,
    file: &Path,
    algo: Algo,
    k: Option<u32>,
    witness_path: Option<&Path>,
    json: bool,
    max_brute: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let d = read_digraph(file)?;
    let started = Instant::now();
    let (report, decision) = match problem {
        Problem::Bd => {
            let limit = max_brute.unwrap_or(bdmp_core::broadcast::DEFAULT_BD_BRUTE_LIMIT);
            let outcome = solve_bd(&d, algo, k, limit)?;
            let witness_text = bd_witness(&d, &outcome)?;
            if let (Some(path), Some(text)) = (witness_path, witness_text.as_ref()) {
                write_file(path, text)?;
            }
            (
                io::Report {
                    problem: "bd".into(),
                    optimum: outcome.optimum,
                    decision: outcome.decision.map(yes_no),
                    witness: witness_text,
                    algorithm: outcome.algorithm.as_str().into(),
                    nodes_explored: outcome.nodes_explored,
                    elapsed_ms: started.elapsed().as_millis() as u64,
                },
                outcome.decision,
            )
        }
        Problem::Mp => {
            let limit = max_brute.unwrap_or(bdmp_core::multipacking::DEFAULT_MP_BRUTE_LIMIT);
            let outcome = solve_mp(&d, algo, k, limit)?;
            let witness_text = mp_witness(&d, &outcome)?;
            if let (Some(path), Some(text)) = (witness_path, witness_text.as_ref()) {
                write_file(path, text)?;
            }
            (
                io::Report {
                    problem: "mp".into(),
                    optimum: outcome.optimum,
                    decision: outcome.decision.map(yes_no),
                    witness: witness_text,
                    algorithm: outcome.algorithm.as_str().into(),
                    nodes_explored: outcome.nodes_explored,
                    elapsed_ms: started.elapsed().as_millis() as u64,
                },
                outcome.decision,
            )
        }
    };
    if json {
        writeln!(out, "{}", report.to_json()).map_err(io_err)?;
    } else {
        match report.optimum {
            Some(opt) => writeln!(out, "optimum: {opt}").map_err(io_err)?,
            None => writeln!(out, "optimum: unknown").map_err(io_err)?,
        }
        if let Some(dec) = &report.decision {
            writeln!(out, "decision: {dec}").map_err(io_err)?;
        }
        writeln!(out, "algorithm: {}", report.algorithm).map_err(io_err)?;
        writeln!(out, "nodes: {}", report.nodes_explored).map_err(io_err)?;
    }
    Ok(if decision == Some(false) { EXIT_NO } else { EXIT_OK })
}

fn solve_bd(
    d: &Digraph,
    algo: Algo,
    k: Option<u32>,
    limit: usize,
) -> Result<SolveOutcome<BroadcastFunction>, Error> {
    match algo {
        Algo::Auto => solve_bd_auto_with_limit(d, k, limit),
        Algo::Brute => {
            guard_size(d, limit)?;
            Ok(brute_force_bd(d, k))
        }
        Algo::FptDag => solve_bd_fpt_dag(d, k),
        Algo::Layered => {
            let mut out = solve_bd_layered(d)?;
            out.decision = k.map(|k| out.optimum.unwrap() <= k);
            Ok(out)
        }
        Algo::Diam => solve_bd_diameter(d, k),
        Algo::Outdeg => {
            let k = k.ok_or_else(|| Error::InvalidParam("outdeg needs -k".into()))?;
            guard_size(d, limit.max(64))?;
            Ok(solve_bd_outdeg(d, k))
        }
        Algo::Vc => {
            let mut out = solve_bd_vertex_cover(d, None)?;
            out.decision = k.map(|k| out.optimum.unwrap() <= k);
            Ok(out)
        }
    }
}

fn solve_mp(
    d: &Digraph,
    algo: Algo,
    k: Option<u32>,
    limit: usize,
) -> Result<SolveOutcome<Multipacking>, Error> {
    match algo {
        Algo::Auto => solve_mp_auto_with_limit(d, k, limit),
        Algo::Brute => {
            guard_size(d, limit)?;
            Ok(brute_force_mp(d, k))
        }
        Algo::FptDag => Err(Error::InvalidParam(
            "fpt-dag applies to broadcast domination only".into(),
        )),
        Algo::Layered => {
            let mut out = solve_mp_layered(d)?;
            out.decision = k.map(|k| out.optimum.unwrap() >= k);
            Ok(out)
        }
        Algo::Diam => solve_mp_diameter(d, k),
        Algo::Outdeg => {
            let k = k.ok_or_else(|| Error::InvalidParam("outdeg needs -k".into()))?;
            solve_mp_outdeg_with_limit(d, k, limit)
        }
        Algo::Vc => {
            let mut out = solve_mp_vertex_cover(d, None)?;
            out.decision = k.map(|k| out.optimum.unwrap() >= k);
            Ok(out)
        }
    }
}

fn guard_size(d: &Digraph, limit: usize) -> Result<(), Error> {
    if d.vertex_count() > limit {
        return Err(Error::InstanceTooLarge {
            n: d.vertex_count(),
            limit,
        });
    }
    Ok(())
}

/// Serializes and re-verifies a broadcast witness before it leaves the
/// process; big layered instances use the linear check.
fn bd_witness(
    d: &Digraph,
    outcome: &SolveOutcome<BroadcastFunction>,
) -> Result<Option<String>, Error> {
    let f = match &outcome.witness {
        None => return Ok(None),
        Some(f) => f,
    };
    let valid = if d.vertex_count() <= ORACLE_SIZE_LIMIT {
        verify_broadcast(d, f).is_valid()
    } else {
        verify_broadcast_layered(d, f)?
    };
    if !valid {
        return Err(Error::Internal("emitted broadcast witness is invalid".into()));
    }
    Ok(Some(io::serialize_witness_bd(f)))
}

fn mp_witness(d: &Digraph, outcome: &SolveOutcome<Multipacking>) -> Result<Option<String>, Error> {
    let s = match &outcome.witness {
        None => return Ok(None),
        Some(s) => s,
    };
    let valid = if d.vertex_count() <= ORACLE_SIZE_LIMIT {
        verify_multipacking(d, s).is_valid()
    } else {
        verify_multipacking_layered(d, s)?
    };
    if !valid {
        return Err(Error::Internal("emitted packing witness is invalid".into()));
    }
    Ok(Some(io::serialize_witness_mp(s)))
}

fn verify(problem: Problem, file: &Path, witness: &Path, out: &mut dyn Write) -> Result<i32, Error> {
    let d = read_digraph(file)?;
    let text = read_file(witness)?;
    match problem {
        Problem::Bd => {
            let f = io::parse_witness_bd(&text, d.vertex_count())?;
            match verify_broadcast(&d, &f) {
                BroadcastCheck::Valid => {
                    writeln!(out, "valid: dominating broadcast of cost {}", f.cost())
                        .map_err(io_err)?;
                    Ok(EXIT_OK)
                }
                BroadcastCheck::Uncovered(v) => {
                    writeln!(out, "invalid: vertex {v} is uncovered").map_err(io_err)?;
                    Ok(EXIT_NO)
                }
            }
        }
        Problem::Mp => {
            let s = io::parse_witness_mp(&text, d.vertex_count())?;
            match verify_multipacking(&d, &s) {
                MultipackingCheck::Valid => {
                    writeln!(out, "valid: multipacking of size {}", s.size()).map_err(io_err)?;
                    Ok(EXIT_OK)
                }
                MultipackingCheck::Violation { vertex, radius } => {
                    writeln!(
                        out,
                        "invalid: ball of radius {radius} at vertex {vertex} is overfull"
                    )
                    .map_err(io_err)?;
                    Ok(EXIT_NO)
                }
            }
        }
    }
}

fn reduce(
    reduction: Reduction,
    src: &Path,
    k: Option<u32>,
    output: &Path,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let text = read_file(src)?;
    let need_k = || k.ok_or_else(|| Error::InvalidParam("this reduction needs -k".into()));
    let (result, source_decision): (ReductionOutput, Option<bool>) = match reduction {
        Reduction::X3cBd => {
            let inst = io::parse_x3c(&text)?;
            let decision = SourceInstance::X3c(inst.clone()).decide().ok();
            (reduce_x3c_to_bd(&inst)?, decision)
        }
        Reduction::MdsBd1 => {
            let inst = io::parse_colored(&text)?;
            let decision = SourceInstance::MulticoloredDominatingSet(inst.clone())
                .decide()
                .ok();
            (reduce_mds_to_bd_v1(&inst)?, decision)
        }
        Reduction::MdsBd2 => {
            let inst = io::parse_colored(&text)?;
            let decision = SourceInstance::MulticoloredDominatingSet(inst.clone())
                .decide()
                .ok();
            (reduce_mds_to_bd_v2(&inst)?, decision)
        }
        Reduction::HsBd => {
            let inst = io::parse_hitting_set(&text)?;
            let decision = SourceInstance::HittingSet(inst.clone()).decide().ok();
            (reduce_hs_to_bd(&inst)?, decision)
        }
        Reduction::IsMp => {
            let inst = io::parse_undirected(&text)?;
            let k = need_k()?;
            let decision = SourceInstance::IndependentSet(inst.clone(), k).decide().ok();
            (reduce_is_to_mp(&inst, k)?, decision)
        }
        Reduction::IsMpSs => {
            let inst = io::parse_undirected(&text)?;
            let k = need_k()?;
            let decision = SourceInstance::IndependentSet(inst.clone(), k).decide().ok();
            (reduce_is_to_mp_single_source(&inst, k)?, decision)
        }
        Reduction::MisMp => {
            let inst = io::parse_colored(&text)?;
            let decision = SourceInstance::MulticoloredIndependentSet(inst.clone())
                .decide()
                .ok();
            (reduce_mis_to_mp(&inst)?, decision)
        }
    };
    let mut body = String::new();
    body.push_str(&format!("# k_target = {}\n", result.k_target));
    for note in &result.notes {
        body.push_str(&format!("# note: {note}\n"));
    }
    for (label, vertex) in &result.roles {
        body.push_str(&format!("# role {label} = {vertex}\n"));
    }
    body.push_str(&io::serialize_digraph(&result.digraph));
    write_file(output, &body)?;
    writeln!(
        out,
        "k_target: {} ({} vertices, {} arcs)",
        result.k_target,
        result.digraph.vertex_count(),
        result.digraph.arc_count()
    )
    .map_err(io_err)?;
    if let Some(decision) = source_decision {
        writeln!(out, "source decision: {}", yes_no(decision)).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn info(file: &Path, out: &mut dyn Write) -> Result<i32, Error> {
    let d = read_digraph(file)?;
    let report = classify(&d);
    writeln!(out, "vertices: {}", d.vertex_count()).map_err(io_err)?;
    writeln!(out, "arcs: {}", d.arc_count()).map_err(io_err)?;
    writeln!(out, "dag: {}", report.is_dag).map_err(io_err)?;
    writeln!(out, "layered: {}", report.is_layered).map_err(io_err)?;
    writeln!(out, "single_sourced: {}", report.single_sourced).map_err(io_err)?;
    writeln!(out, "strongly_connected: {}", report.strongly_connected).map_err(io_err)?;
    writeln!(out, "sources: {:?}", report.sources).map_err(io_err)?;
    writeln!(out, "sinks: {:?}", report.sinks).map_err(io_err)?;
    writeln!(
        out,
        "weak_components: {}",
        report.weakly_connected_components.len()
    )
    .map_err(io_err)?;
    writeln!(out, "max_out_degree: {}", report.max_out_degree).map_err(io_err)?;
    writeln!(out, "max_total_degree: {}", report.max_total_degree).map_err(io_err)?;
    if let Some(lp) = &report.layer_partition {
        writeln!(out, "layers: {}", lp.layers.len()).map_err(io_err)?;
    }
    if d.vertex_count() <= ORACLE_SIZE_LIMIT {
        let oracle = DistanceOracle::new(&d);
        writeln!(out, "mfd: {}", oracle.mfd()).map_err(io_err)?;
        if oracle.diameter() == INFINITE {
            writeln!(out, "diameter: infinite").map_err(io_err)?;
        } else {
            writeln!(out, "diameter: {}", oracle.diameter()).map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn yes_no(b: bool) -> String {
    if b { "YES".into() } else { "NO".into() }
}

fn read_digraph(path: &Path) -> Result<Digraph, Error> {
    io::parse_digraph(&read_file(path)?)
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, content: &str) -> Result<(), Error> {
    std::fs::write(path, content).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse {
        line: 0,
        msg: e.to_string(),
    }
}
