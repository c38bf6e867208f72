//! Batch command-line front end with stable JSON input and output.
//!
//! Every subcommand reads JSON documents (inline, from a file path, or from
//! standard input when the argument is `-`) and writes a single JSON
//! document to standard output or `--output`. Exit codes: 0 success,
//! 1 invalid input, 2 negative mathematical outcome (e.g. a non-polar
//! form), 3 search guard exceeded.

use crate::cocycle::{
    classify, cohomologous, find_coboundary_witness, AbelianCocycle3, DEFAULT_BOX,
};
use crate::doc::{
    element_table_doc, BilinearFormDoc, ClassOutput, CocycleDoc, CohomologousOutput,
    EnumerateOutput, FormValidateOutput, IsPolarOutput, ModelCheckOutput, PolarCoverOutput,
    QuadraticFormDoc, StrictifyOutput, TraceOutput, ValidateOutput, WitnessDoc,
};
use crate::error::AlgebraError;
use crate::model::{example_koszul, example_nonpolar, SkeletalModel};
use crate::strictify::{can_strictify, polar_cover};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;

pub const DEFAULT_MAX_CANDIDATES: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "braidcat", version, about = "Exact toolkit for braided categorical groups: abelian 3-cocycles, quadratic forms, strictification and polar covers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Sample-box bound for checks over infinite groups.
    #[arg(long = "box", global = true, default_value_t = DEFAULT_BOX)]
    bound: u64,

    /// Guard on exhaustive-search candidate counts.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: u64,

    /// Worker count for partitioned searches (deterministic output
    /// regardless of the value).
    #[arg(long, global = true)]
    parallel: Option<usize>,

    /// Write the JSON document here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bilinear and quadratic form operations.
    Forms {
        #[command(subcommand)]
        cmd: FormsCmd,
    },
    /// Abelian 3-cocycle operations.
    Cocycle {
        #[command(subcommand)]
        cmd: CocycleCmd,
    },
    /// Decide strict skeletalization; emits a strictifying cocycle when the
    /// trace is polar, exits 2 otherwise.
    Strictify {
        /// Cocycle document (path, inline JSON, or `-` for stdin).
        #[arg(long, default_value = "-")]
        cocycle: String,
    },
    /// Lift to a free base group where the trace becomes polar.
    PolarCover {
        #[arg(long, default_value = "-")]
        cocycle: String,
    },
    /// Skeletal model construction and coherence checking.
    Model {
        #[command(subcommand)]
        cmd: ModelCmd,
    },
    /// Run the built-in acceptance suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
enum FormsCmd {
    /// Decide polarity; emits a witness on success, exits 2 otherwise.
    IsPolar {
        /// Quadratic form document (path, inline JSON, or `-` for stdin).
        #[arg(long, default_value = "-")]
        form: String,
    },
    /// Emit the polarization bilinear form.
    Polarize {
        #[arg(long, default_value = "-")]
        form: String,
    },
    /// Check well-definedness and the quadratic identities.
    Validate {
        #[arg(long, default_value = "-")]
        form: String,
    },
}

#[derive(Debug, Subcommand)]
enum CocycleCmd {
    /// Check the cocycle, normalization and hexagon identities.
    Validate {
        #[arg(long, default_value = "-")]
        cocycle: String,
    },
    /// Emit the trace quadratic form (with a full table on finite groups).
    Trace {
        #[arg(long, default_value = "-")]
        cocycle: String,
    },
    /// Compare cohomology classes; exits 2 when they differ.
    Cohomologous {
        #[arg(long, default_value = "-")]
        cocycle: String,
        #[arg(long)]
        other: String,
    },
    /// Enumerate all valid cocycles on a finite pair and classify by trace.
    Enumerate {
        /// Group document, e.g. '{"orders":[2]}'.
        #[arg(long)]
        group: String,
        /// Coefficient group document.
        #[arg(long)]
        coeffs: String,
    },
}

#[derive(Debug, Subcommand)]
enum ModelCmd {
    /// Build the skeletal model and run pentagon/hexagon/unit checks.
    Check {
        #[arg(long, default_value = "-")]
        cocycle: String,
    },
    /// Emit a built-in instance (`nonpolar` or `koszul`) as a cocycle
    /// document.
    Example { name: String },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::SearchSpaceTooLarge { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::invalid(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::invalid(format!("reading {arg}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| {
        Failure::invalid(format!(
            "malformed JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn load_cocycle(arg: &str) -> Result<AbelianCocycle3, Failure> {
    let doc: CocycleDoc = parse_json(&read_input(arg)?)?;
    Ok(doc.into_cocycle()?)
}

fn load_quadratic(arg: &str) -> Result<crate::forms::QuadraticForm, Failure> {
    let doc: QuadraticFormDoc = parse_json(&read_input(arg)?)?;
    Ok(doc.into_form()?)
}

fn emit<T: Serialize>(value: &T, output: &Option<PathBuf>) -> Result<(), Failure> {
    let json = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::invalid(format!("serializing output: {e}")))?;
    match output {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| Failure::invalid(format!("writing {}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

/// Runs the command line given explicit arguments; returns the exit code.
pub fn run_from<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version via this path with code 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(k) = cli.parallel {
        // best effort; a pool may already exist in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global();
    }
    match execute(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Runs with the process arguments.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

fn execute(cli: &Cli) -> Result<i32, Failure> {
    let bound = cli.bound;
    let guard = cli.max_candidates as u128;
    let out = &cli.output;
    match &cli.command {
        Command::Forms { cmd } => match cmd {
            FormsCmd::IsPolar { form } => {
                let q = load_quadratic(form)?;
                let witness = q.is_polar();
                let polar = witness.is_some();
                emit(
                    &IsPolarOutput {
                        polar,
                        witness: witness.as_ref().map(BilinearFormDoc::from_form),
                    },
                    out,
                )?;
                Ok(if polar { 0 } else { 2 })
            }
            FormsCmd::Polarize { form } => {
                let q = load_quadratic(form)?;
                emit(&BilinearFormDoc::from_form(&q.polarization()), out)?;
                Ok(0)
            }
            FormsCmd::Validate { form } => {
                // construction has already enforced the congruences; verify
                // the quadratic identities pointwise as well
                let q = load_quadratic(form)?;
                let g = q.source();
                let m = q.target();
                let (dom, exhaustive): (Vec<_>, bool) = match g.enumerate() {
                    Ok(it) => (it.collect(), true),
                    Err(_) => (g.sample_box(bound).collect(), false),
                };
                let mut valid = dom.iter().all(|x| q.eval(&g.neg(x)) == q.eval(x));
                if valid {
                    'outer: for x in &dom {
                        for y in &dom {
                            for z in &dom {
                                let lhs = [
                                    q.eval(&g.add(&g.add(x, y), z)),
                                    q.eval(x),
                                    q.eval(y),
                                    q.eval(z),
                                ];
                                let rhs = [
                                    q.eval(&g.add(y, z)),
                                    q.eval(&g.add(z, x)),
                                    q.eval(&g.add(x, y)),
                                ];
                                let l = lhs.iter().fold(m.zero(), |a, v| m.add(&a, v));
                                let r = rhs.iter().fold(m.zero(), |a, v| m.add(&a, v));
                                if l != r {
                                    valid = false;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                emit(
                    &FormValidateOutput {
                        valid,
                        bound,
                        exhaustive,
                    },
                    out,
                )?;
                Ok(if valid { 0 } else { 2 })
            }
        },
        Command::Cocycle { cmd } => match cmd {
            CocycleCmd::Validate { cocycle } => {
                let kappa = load_cocycle(cocycle)?;
                let report = kappa.validate(bound);
                let valid = report.is_valid();
                emit(&ValidateOutput { valid, report }, out)?;
                Ok(if valid { 0 } else { 2 })
            }
            CocycleCmd::Trace { cocycle } => {
                let kappa = load_cocycle(cocycle)?;
                let form = kappa.trace_form()?;
                let table = kappa.trace_table().ok().map(|t| element_table_doc(&t));
                emit(
                    &TraceOutput {
                        form: QuadraticFormDoc::from_form(&form),
                        table,
                    },
                    out,
                )?;
                Ok(0)
            }
            CocycleCmd::Cohomologous { cocycle, other } => {
                let k1 = load_cocycle(cocycle)?;
                let k2 = load_cocycle(other)?;
                let same = cohomologous(&k1, &k2, bound)?;
                let (witness, witness_search) =
                    if k1.group().is_finite() && k1.coeffs().is_finite() {
                        match find_coboundary_witness(&k1, &k2, guard) {
                            Ok(w) => (w.as_ref().map(WitnessDoc::from_witness), None),
                            Err(AlgebraError::SearchSpaceTooLarge { candidates, .. }) => (
                                None,
                                Some(format!(
                                    "skipped: {candidates} candidates exceed --max-candidates {guard}"
                                )),
                            ),
                            Err(e) => return Err(e.into()),
                        }
                    } else {
                        (None, Some("skipped: infinite group".to_string()))
                    };
                emit(
                    &CohomologousOutput {
                        cohomologous: same,
                        bound,
                        witness,
                        witness_search,
                    },
                    out,
                )?;
                Ok(if same { 0 } else { 2 })
            }
            CocycleCmd::Enumerate { group, coeffs } => {
                let g: crate::abgroup::FgAbGroup = parse_json(&read_input(group)?)?;
                let m: crate::abgroup::FgAbGroup = parse_json(&read_input(coeffs)?)?;
                let cls = classify(&g, &m, guard)?;
                let classes = cls
                    .classes
                    .iter()
                    .map(|(trace, members)| ClassOutput {
                        trace: element_table_doc(trace),
                        size: members.len(),
                        representative: CocycleDoc::from_cocycle(&cls.cocycles[members[0]]),
                    })
                    .collect();
                emit(
                    &EnumerateOutput {
                        cocycles: cls.cocycles.len(),
                        classes,
                        quadratic_tables: cls.quadratic_tables.len(),
                        surjective: cls.is_surjective(),
                        max_candidates: guard,
                    },
                    out,
                )?;
                Ok(0)
            }
        },
        Command::Strictify { cocycle } => {
            let kappa = load_cocycle(cocycle)?;
            let decision = can_strictify(&kappa)?;
            let (witness_t, strict_cocycle) = match &decision.witness {
                Some((t, strict)) => (
                    Some(BilinearFormDoc::from_form(t)),
                    Some(CocycleDoc::from_cocycle(strict)),
                ),
                None => (None, None),
            };
            emit(
                &StrictifyOutput {
                    polar: decision.polar,
                    witness_t,
                    strict_cocycle,
                },
                out,
            )?;
            Ok(if decision.polar { 0 } else { 2 })
        }
        Command::PolarCover { cocycle } => {
            let kappa = load_cocycle(cocycle)?;
            let result = polar_cover(&kappa, guard)?;
            emit(&PolarCoverOutput::from_result(&result, guard), out)?;
            Ok(0)
        }
        Command::Model { cmd } => match cmd {
            ModelCmd::Check { cocycle } => {
                let kappa = load_cocycle(cocycle)?;
                let model = match SkeletalModel::build(kappa, bound) {
                    Ok(model) => model,
                    Err(e) => {
                        return Err(Failure {
                            code: 2,
                            message: e.to_string(),
                        })
                    }
                };
                let report = model.check(bound);
                let all = report.all_passed();
                let signature_table = model
                    .kappa()
                    .trace_table()
                    .ok()
                    .map(|t| element_table_doc(&t));
                emit(
                    &ModelCheckOutput {
                        report,
                        pi0: model.pi0().clone(),
                        pi1: model.pi1().clone(),
                        signature_table,
                    },
                    out,
                )?;
                Ok(if all { 0 } else { 2 })
            }
            ModelCmd::Example { name } => {
                let kappa = match name.as_str() {
                    "nonpolar" => example_nonpolar(),
                    "koszul" => example_koszul(),
                    other => {
                        return Err(Failure::invalid(format!(
                            "unknown example {other:?}; available: nonpolar, koszul"
                        )))
                    }
                };
                emit(&CocycleDoc::from_cocycle(&kappa), out)?;
                Ok(0)
            }
        },
        Command::Selftest => {
            let outcomes = crate::acceptance::run_all();
            let mut all = true;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                println!("criterion {}: {} [{}] {}", o.id, o.name, status, o.detail);
                all &= o.passed;
            }
            Ok(if all { 0 } else { 2 })
        }
    }
}
