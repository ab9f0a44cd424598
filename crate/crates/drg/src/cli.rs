//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use drg_core::array::parse_array;
use drg_core::enumerate::{enumerate_with_progress, SearchError, SearchSpec};
use drg_core::graph::verify_drg;
use drg_core::rules::evaluate_with;
use drg_core::spectra::spectrum;
use drg_core::{derive, Assumption, Overall, Params, Precision, RuleSet};

use crate::catalog::{builtin_graph, entries};
use crate::crosscheck::cross_check;
use crate::format::load_graph;
use crate::report::{CatalogEntryJson, DeriveJson, GraphJson, ReportJson, SearchJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the interval width `2^-bits`.
pub const PRECISION_VAR: &str = "DRG_PRECISION_BITS";

#[derive(Parser, Debug)]
#[command(
    name = "drg",
    version,
    about = "Feasibility checks for distance-regular graph intersection arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate every rule on one intersection array.
    Check {
        /// Array such as "{6,5,4,3,2,1;1,2,3,4,5,6}".
        array: String,
        #[arg(long, value_enum)]
        assume: Option<AssumeArg>,
        #[arg(long)]
        json: bool,
    },
    /// Derived parameters of one intersection array.
    Derive {
        array: String,
        #[arg(long)]
        spectrum: bool,
        #[arg(long)]
        pnumbers: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search all arrays of one diameter up to a valency bound.
    Enumerate(EnumerateArgs),
    /// Operations on concrete graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// The catalog of known arrays.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    diameter: usize,
    #[arg(long)]
    max_k: u32,
    #[arg(long, default_value_t = 3)]
    min_k: u32,
    /// Conjunction of integer comparisons, e.g. "3*c2 > k".
    #[arg(long, default_value = "")]
    filter: String,
    #[arg(long, value_enum)]
    assume: Option<AssumeArg>,
    /// "all" or a comma-separated list such as "R0,R3,R5q".
    #[arg(long, default_value = "all")]
    rules: String,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    progress: bool,
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Decide distance-regularity of a builtin graph or a graph file.
    Verify {
        /// Builtin name (e.g. "6-cube", "foster") or a path to a graph file.
        graph: String,
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// One line per catalog entry.
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AssumeArg {
    Quadrangle,
    QuadrangleFree,
}

fn assumption(a: Option<AssumeArg>) -> Assumption {
    match a {
        None => Assumption::None,
        Some(AssumeArg::Quadrangle) => Assumption::ContainsQuadrangle,
        Some(AssumeArg::QuadrangleFree) => Assumption::QuadrangleFree,
    }
}

/// Failure before any report is produced.
struct Usage(String);

fn precision(var: Option<&str>) -> Result<Precision, Usage> {
    let Some(text) = var else {
        return Ok(Precision::default());
    };
    match text.trim().parse::<u32>() {
        Ok(bits) if (1..=drg_core::algebraic::MAX_PRECISION_BITS).contains(&bits) => Ok(Precision::new(bits)),
        _ => Err(Usage(format!(
            "{PRECISION_VAR} must be an integer in 1..={}, got `{text}`",
            drg_core::algebraic::MAX_PRECISION_BITS
        ))),
    }
}

/// A closed pipe (`drg ... | head`) ends output quietly.
fn emit<T: serde::Serialize>(out: &mut dyn Write, json: bool, doc: &T, text: String) -> Result<(), Usage> {
    let written = if json {
        serde_json::to_writer_pretty(&mut *out, doc)
            .map_err(std::io::Error::from)
            .and_then(|()| writeln!(out))
    } else {
        out.write_all(text.as_bytes())
    };
    match written {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Usage(format!("cannot write output: {e}"))),
        _ => Ok(()),
    }
}

/// Runs one command. `precision_var` is the value of [`PRECISION_VAR`], if set.
pub fn run<I, T>(args: I, precision_var: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
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
    let result = precision(precision_var).and_then(|prec| dispatch(cli.command, prec, out, err));
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, prec: Precision, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    match cmd {
        Command::Check { array, assume, json } => {
            let arr = parse_array(&array).map_err(|e| Usage(format!("bad array `{array}`: {e}")))?;
            let report = evaluate_with(&Params::new(&arr), assumption(assume), RuleSet::all(), prec);
            let doc = ReportJson::new(&report);
            emit(out, json, &doc, doc.text())?;
            Ok(match report.overall {
                Overall::FeasibleSoFar => EXIT_OK,
                Overall::Infeasible => EXIT_INFEASIBLE,
                Overall::Undecided => EXIT_UNDECIDED,
            })
        }
        Command::Derive {
            array,
            spectrum: with_spectrum,
            pnumbers,
            json,
        } => {
            let arr = parse_array(&array).map_err(|e| Usage(format!("bad array `{array}`: {e}")))?;
            let dp = derive(&arr);
            let sp = with_spectrum.then(|| spectrum(&dp, prec));
            let doc = DeriveJson::new(&dp, sp.as_ref(), pnumbers);
            emit(out, json, &doc, doc.text())?;
            Ok(EXIT_OK)
        }
        Command::Enumerate(args) => cmd_enumerate(args, prec, out, err),
        Command::Graph(GraphCommand::Verify {
            graph,
            cross_check: cross,
            json,
        }) => {
            let (name, source, g) = resolve_graph(&graph, err)?;
            let verdict = verify_drg(&g);
            let checks = match (&verdict, cross) {
                (Ok(cert), true) => Some(cross_check(&g, cert, prec)),
                _ => None,
            };
            let failed = verdict.is_err() || checks.iter().flatten().any(|c| !c.pass);
            let doc = GraphJson::new(&name, source, g.n(), &verdict, checks);
            emit(out, json, &doc, doc.text())?;
            Ok(if failed { EXIT_INFEASIBLE } else { EXIT_OK })
        }
        Command::Catalog(CatalogCommand::List { json }) => {
            let docs: Vec<CatalogEntryJson> = entries().iter().map(CatalogEntryJson::new).collect();
            let text = docs.iter().map(|d| d.line() + "\n").collect();
            emit(out, json, &docs, text)?;
            Ok(EXIT_OK)
        }
    }
}

fn resolve_graph(arg: &str, err: &mut dyn Write) -> Result<(String, &'static str, drg_core::Graph), Usage> {
    let path = Path::new(arg);
    if let Some(g) = builtin_graph(arg) {
        if path.exists() {
            let _ = writeln!(
                err,
                "warning: `{arg}` is a builtin graph name; ignoring the file of that name"
            );
        }
        return Ok((arg.to_string(), "builtin", g));
    }
    let named = load_graph(path).map_err(|e| Usage(format!("cannot load graph `{arg}`: {e}")))?;
    Ok((named.name, "file", named.graph))
}

fn cmd_enumerate(args: EnumerateArgs, prec: Precision, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let rules = RuleSet::parse(&args.rules).ok_or_else(|| Usage(format!("bad rule list `{}`", args.rules)))?;
    let mut spec = SearchSpec::new(args.diameter, args.max_k)
        .with_filter(&args.filter)
        .map_err(|e| Usage(format!("bad filter `{}`: {e}", args.filter)))?
        .with_rules(rules)
        .with_assumption(assumption(args.assume))
        .with_k_min(args.min_k);
    spec.precision = prec;
    let start = Instant::now();
    let result = enumerate_with_progress(&spec, &mut |p| {
        if args.progress {
            let _ = writeln!(
                err,
                "progress: {} nodes, k = {}, {} survivors",
                p.nodes, p.k, p.survivors
            );
        }
    });
    let r = match result {
        Ok(r) => r,
        Err(e @ SearchError::BudgetExceeded { .. }) => {
            let _ = writeln!(err, "error: {e}");
            return Ok(EXIT_UNDECIDED);
        }
        Err(e) => return Err(Usage(e.to_string())),
    };
    if args.progress {
        let _ = writeln!(err, "done: {} nodes in {:.3} s", r.nodes, start.elapsed().as_secs_f64());
    }
    let doc = SearchJson::new(&spec, &r);
    emit(out, args.json, &doc, doc.text())?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_variable() {
        assert_eq!(precision(None).ok().map(|p| p.bits()), Some(40));
        assert_eq!(precision(Some("64")).ok().map(|p| p.bits()), Some(64));
        for bad in ["0", "201", "-3", "many", ""] {
            assert!(precision(Some(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
