//! `hopfint` — exact computations in finite-dimensional Hopf algebras
//! given by structure constants.
//!
//! Exit codes follow one contract everywhere: 0 when every requested
//! check passes, 1 when the input is mathematically deficient (an axiom,
//! identity or evaluation fails), 2 when the input itself is unusable
//! (missing file, malformed document, unknown name).  `--machine` prints
//! one JSON document instead of human-readable text; its bytes are
//! deterministic across runs.  Setting `HOPFINT_COLOR=0` disables all
//! styling.

use std::fmt::Write as _;
use std::io::IsTerminal;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hopfint_core::crosscheck::diagram_cross_checks;
use hopfint_core::diagram::{
    self, builtin_diagram_names, builtin_diagram_text, Bindings, Diagram, TensorValue,
};
use hopfint_core::hopf::{
    builtin, builtin_names, load_algebra, to_json, AlgebraError, HopfAlgebra,
};
use hopfint_core::integrals::{self, Side};
use hopfint_core::matrix::Mat;
use hopfint_core::report::CheckReport;
use hopfint_core::scalar::{FieldSpec, Scalar};

#[derive(Parser)]
#[command(
    name = "hopfint",
    version,
    about = "Exact integrals, projection endomorphisms and diagram evaluation \
             for finite-dimensional Hopf algebras given by structure constants"
)]
struct CliTop {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the seven defining axiom families of an algebra
    Verify(AlgebraArgs),
    /// Print bases of the four integral spaces and the normalized pairs
    Integrals(GuardedArgs),
    /// Print the projection endomorphisms P and Q and trace(P)
    Kuperberg(GuardedArgs),
    /// Run the axiom suite, the identity suite and the diagram cross-checks
    #[command(name = "check-paper")]
    CheckPaper(GuardedArgs),
    /// Evaluate a diagram file against an algebra
    Eval(EvalArgs),
    /// Print a bundled algebra document or diagram source; no name lists all
    Builtin(BuiltinArgs),
}

#[derive(Args)]
struct AlgebraArgs {
    /// Path to an algebra file, or a builtin name such as sweedler, group:q8, taft:3
    algebra: String,
    /// Field used when ALGEBRA is a builtin name: rational or prime:P
    #[arg(long, default_value = "rational")]
    field: String,
    /// Print one JSON document instead of text
    #[arg(long)]
    machine: bool,
}

#[derive(Args)]
struct GuardedArgs {
    #[command(flatten)]
    common: AlgebraArgs,
    /// Skip the axiom check that normally guards this command
    #[arg(long)]
    skip_verify: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Path to an algebra file, or a builtin name such as sweedler, group:q8, taft:3
    algebra: String,
    /// Path to a diagram file, or builtin:NAME for a bundled diagram
    diagram: String,
    /// Matrices for endo boxes, as NAME=FILE with FILE holding a JSON
    /// array of rows of scalar literals
    #[arg(value_name = "NAME=FILE")]
    bindings: Vec<String>,
    /// Field used when ALGEBRA is a builtin name: rational or prime:P
    #[arg(long, default_value = "rational")]
    field: String,
    /// Print one JSON document instead of text
    #[arg(long)]
    machine: bool,
    /// Skip the axiom check that normally guards this command
    #[arg(long)]
    skip_verify: bool,
    /// Use the brute-force evaluator instead of the planned one
    #[arg(long)]
    naive: bool,
}

#[derive(Args)]
struct BuiltinArgs {
    /// Builtin algebra (trivial, sweedler, taft, group:*) or diagram name
    name: Option<String>,
    /// Field of the emitted algebra: rational or prime:P
    #[arg(long, default_value = "rational")]
    field: String,
    /// Size parameter for taft
    #[arg(long)]
    n: Option<usize>,
}

/// A command failure with its exit code already decided.
enum CmdError {
    /// Unusable input: missing file, malformed document, unknown name.
    Input(String),
    /// Mathematically deficient input or a failed check.
    Math(String),
}

use CmdError::{Input, Math};

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe closes early (for example
    // `hopfint builtin | head`): Rust ignores SIGPIPE by default, which
    // would otherwise surface as a stdout panic.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = CliTop::parse();
    let outcome = match cli.command {
        Command::Verify(a) => cmd_verify(&a),
        Command::Integrals(a) => cmd_integrals(&a),
        Command::Kuperberg(a) => cmd_kuperberg(&a),
        Command::CheckPaper(a) => cmd_check_paper(&a),
        Command::Eval(a) => cmd_eval(&a),
        Command::Builtin(a) => cmd_builtin(&a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Math(msg)) => {
            eprintln!("hopfint: {msg}");
            ExitCode::from(1)
        }
        Err(Input(msg)) => {
            eprintln!("hopfint: {msg}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------
// Input loading

fn parse_field(text: &str) -> Result<FieldSpec, CmdError> {
    if text == "rational" {
        return Ok(FieldSpec::rational());
    }
    if let Some(p) = text.strip_prefix("prime:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Input(format!("bad prime {p:?} in field spec {text:?}")))?;
        return FieldSpec::prime(p).map_err(|e| Input(e.to_string()));
    }
    Err(Input(format!("bad field {text:?} (expected rational or prime:P)")))
}

/// Loads the ALGEBRA argument: an existing path is read as an algebra
/// file, anything else is tried as a builtin name over `--field`.
fn load_algebra_arg(spec: &str, field: &str) -> Result<HopfAlgebra, CmdError> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Input(format!("cannot read {spec}: {e}")))?;
        return load_algebra(&text).map_err(|e| match e {
            // The document parsed but its antipode is not invertible:
            // that is a mathematical defect, not an input-format one.
            AlgebraError::SingularAntipode => Math(format!("{spec}: {e}")),
            other => Input(format!("{spec}: {other}")),
        });
    }
    let field = parse_field(field)?;
    builtin(spec, field).map_err(|e| match e {
        AlgebraError::UnknownBuiltin(_) => {
            Input(format!("{spec}: no such file, and not a builtin name ({e})"))
        }
        AlgebraError::SingularAntipode => Math(format!("{spec}: {e}")),
        other => Input(format!("{spec}: {other}")),
    })
}

/// Runs the axiom checker and turns failures into exit code 1, unless
/// the command was asked to skip the guard.
fn axiom_guard(h: &HopfAlgebra, skip: bool) -> Result<(), CmdError> {
    if skip {
        return Ok(());
    }
    let report = h.verify_axioms();
    if report.all_pass() {
        return Ok(());
    }
    let mut msg = format!("{} is not a Hopf algebra:\n", h.name());
    for entry in report.failures() {
        let _ = writeln!(
            msg,
            "  {}{}{}",
            entry.id,
            match &entry.counterexample {
                Some(cx) => format!(" at {cx:?}"),
                None => String::new(),
            },
            match &entry.note {
                Some(note) => format!(": {note}"),
                None => String::new(),
            }
        );
    }
    msg.push_str("  (--skip-verify runs the command anyway)");
    Err(Math(msg))
}

// ---------------------------------------------------------------------
// Output helpers

fn styling_enabled() -> bool {
    std::env::var("HOPFINT_COLOR").map(|v| v != "0").unwrap_or(true)
        && std::io::stdout().is_terminal()
}

/// `id<TAB>status[...]` report lines, with the status colored on a
/// terminal unless HOPFINT_COLOR=0.
fn print_report_lines(report: &CheckReport, indent: &str) {
    let style = styling_enabled();
    for line in report.to_lines().lines() {
        let line = if style {
            line.replacen("\tpass", "\t\x1b[32mpass\x1b[0m", 1)
                .replacen("\tFAIL", "\t\x1b[31mFAIL\x1b[0m", 1)
        } else {
            line.to_string()
        };
        println!("{indent}{line}");
    }
}

fn header(h: &HopfAlgebra) -> String {
    format!("algebra {}: dim {} over {}", h.name(), h.dim(), h.field())
}

/// Rows of scalar literals, the machine form of a matrix.
fn mat_json(m: &Mat) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::to_string).collect())
        .collect();
    json!(rows)
}

fn vec_json(v: &[Scalar]) -> serde_json::Value {
    json!(v.iter().map(Scalar::to_string).collect::<Vec<_>>())
}

/// Column-aligned human form of a matrix.
fn mat_lines(m: &Mat, indent: &str) -> String {
    let text: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::to_string).collect())
        .collect();
    let mut width = vec![1usize; m.cols()];
    for row in &text {
        for (c, cell) in row.iter().enumerate() {
            width[c] = width[c].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &text {
        let _ = write!(out, "{indent}[");
        for (c, cell) in row.iter().enumerate() {
            let sep = if c == 0 { "" } else { "  " };
            let _ = write!(out, "{sep}{cell:>w$}", w = width[c]);
        }
        out.push_str("]\n");
    }
    out
}

/// Renders a coordinate vector as a combination of basis labels,
/// e.g. `x + 2·gx` or `(x)*` on the dual side.
fn lincomb(labels: &[String], v: &[Scalar], dual: bool) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let label = if dual { format!("({})*", labels[i]) } else { labels[i].clone() };
        let lit = c.to_string();
        let (sign, mag) = match lit.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", lit),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        if mag == "1" {
            out.push_str(&label);
        } else {
            let _ = write!(out, "{mag}·{label}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn emit_json(doc: serde_json::Value) {
    println!("{doc}");
}

// ---------------------------------------------------------------------
// Commands

fn cmd_verify(args: &AlgebraArgs) -> Result<(), CmdError> {
    let h = load_algebra_arg(&args.algebra, &args.field)?;
    let report = h.verify_axioms();
    if args.machine {
        emit_json(json!({
            "command": "verify",
            "algebra": h.name(),
            "field": h.field().to_string(),
            "dim": h.dim(),
            "entries": report.entries,
            "all_pass": report.all_pass(),
        }));
    } else {
        println!("{}", header(&h));
        print_report_lines(&report, "  ");
    }
    if report.all_pass() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.failures().map(|e| e.id.as_str()).collect();
        Err(Math(format!("axiom check failed: {}", failed.join(", "))))
    }
}

struct IntegralData {
    left: Vec<Vec<Scalar>>,
    right: Vec<Vec<Scalar>>,
    dual_left: Vec<Vec<Scalar>>,
    dual_right: Vec<Vec<Scalar>>,
    /// Normalized (lambda, Lambda) for Lambda on each side, when the
    /// pairing is nonzero.
    pair_with_left: Option<(Vec<Scalar>, Vec<Scalar>)>,
    pair_with_right: Option<(Vec<Scalar>, Vec<Scalar>)>,
}

fn integral_data(h: &HopfAlgebra) -> IntegralData {
    let left = integrals::integral_space(h, Side::Left);
    let right = integrals::integral_space(h, Side::Right);
    let dual_left = integrals::dual_integral_space(h, Side::Left);
    let dual_right = integrals::dual_integral_space(h, Side::Right);
    let pair = |elems: &[Vec<Scalar>]| -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let [lambda] = &dual_right[..] else { return None };
        let [big] = elems else { return None };
        integrals::normalize_pair(h, lambda, big)
    };
    IntegralData {
        pair_with_left: pair(&left),
        pair_with_right: pair(&right),
        left,
        right,
        dual_left,
        dual_right,
    }
}

fn cmd_integrals(args: &GuardedArgs) -> Result<(), CmdError> {
    let h = load_algebra_arg(&args.common.algebra, &args.common.field)?;
    axiom_guard(&h, args.skip_verify)?;
    let data = integral_data(&h);
    let labels = h.basis_labels();

    let dims_ok = [&data.left, &data.right, &data.dual_left, &data.dual_right]
        .iter()
        .all(|space| space.len() == 1);
    let pairs_ok = data.pair_with_left.is_some() && data.pair_with_right.is_some();

    if args.common.machine {
        let space = |vs: &[Vec<Scalar>]| {
            json!(vs.iter().map(|v| vec_json(v)).collect::<Vec<_>>())
        };
        let pair = |p: &Option<(Vec<Scalar>, Vec<Scalar>)>| match p {
            Some((lambda, big)) => json!({
                "lambda": vec_json(lambda),
                "big_lambda": vec_json(big),
            }),
            None => json!(null),
        };
        emit_json(json!({
            "command": "integrals",
            "algebra": h.name(),
            "field": h.field().to_string(),
            "dim": h.dim(),
            "left_integrals": space(&data.left),
            "right_integrals": space(&data.right),
            "left_dual_integrals": space(&data.dual_left),
            "right_dual_integrals": space(&data.dual_right),
            "normalized_right_dual_with_left": pair(&data.pair_with_left),
            "normalized_right_dual_with_right": pair(&data.pair_with_right),
            "all_pass": dims_ok && pairs_ok,
        }));
    } else {
        println!("{}", header(&h));
        let show = |title: &str, vs: &[Vec<Scalar>], dual: bool| {
            println!("  {title} (dim {}):", vs.len());
            for v in vs {
                println!("    {}", lincomb(labels, v, dual));
            }
        };
        println!("integrals in the algebra");
        show("left ", &data.left, false);
        show("right", &data.right, false);
        println!("integrals in the dual");
        show("left ", &data.dual_left, true);
        show("right", &data.dual_right, true);
        println!("normalized pairs, lambda scaled so that lambda(Lambda) = 1");
        let show_pair = |title: &str, p: &Option<(Vec<Scalar>, Vec<Scalar>)>| match p {
            Some((lambda, big)) => {
                println!(
                    "  {title}: lambda = {}, Lambda = {}",
                    lincomb(labels, lambda, true),
                    lincomb(labels, big, false)
                );
            }
            None => println!("  {title}: unavailable (zero or undefined pairing)"),
        };
        show_pair("right dual with left integral ", &data.pair_with_left);
        show_pair("right dual with right integral", &data.pair_with_right);
    }

    if !dims_ok {
        return Err(Math("an integral space does not have dimension 1".into()));
    }
    if !pairs_ok {
        return Err(Math("a lambda(Lambda) pairing is zero; normalization impossible".into()));
    }
    Ok(())
}

fn cmd_kuperberg(args: &GuardedArgs) -> Result<(), CmdError> {
    let h = load_algebra_arg(&args.common.algebra, &args.common.field)?;
    axiom_guard(&h, args.skip_verify)?;
    let p = integrals::kuperberg_p(&h);
    let q = integrals::kuperberg_q(&h);
    if args.common.machine {
        emit_json(json!({
            "command": "kuperberg",
            "algebra": h.name(),
            "field": h.field().to_string(),
            "dim": h.dim(),
            "p": mat_json(&p),
            "q": mat_json(&q),
            "trace_p": p.trace().to_string(),
            "trace_q": q.trace().to_string(),
        }));
    } else {
        println!("{}", header(&h));
        println!("P =");
        print!("{}", mat_lines(&p, "  "));
        println!("Q =");
        print!("{}", mat_lines(&q, "  "));
        println!("trace(P) = {}", p.trace());
        println!("trace(Q) = {}", q.trace());
    }
    Ok(())
}

fn cmd_check_paper(args: &GuardedArgs) -> Result<(), CmdError> {
    let h = load_algebra_arg(&args.common.algebra, &args.common.field)?;
    let axioms = if args.skip_verify { None } else { Some(h.verify_axioms()) };
    let identities = integrals::check_suite(&h);
    let diagrams = diagram_cross_checks(&h);

    let sections: Vec<(&str, &CheckReport)> = axioms
        .iter()
        .map(|r| ("axioms", r))
        .chain([("identity suite", &identities), ("diagram cross-checks", &diagrams)])
        .collect();
    let total: usize = sections.iter().map(|(_, r)| r.entries.len()).sum();
    let failed: usize =
        sections.iter().map(|(_, r)| r.failures().count()).sum();

    if args.common.machine {
        emit_json(json!({
            "command": "check-paper",
            "algebra": h.name(),
            "field": h.field().to_string(),
            "dim": h.dim(),
            "axioms": axioms.as_ref().map(|r| &r.entries),
            "identities": identities.entries,
            "diagrams": diagrams.entries,
            "checks": total,
            "failures": failed,
            "all_pass": failed == 0,
        }));
    } else {
        println!("{}", header(&h));
        for (title, report) in &sections {
            println!("{title}");
            print_report_lines(report, "  ");
        }
        println!("{total} checks, {} passed, {failed} failed", total - failed);
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Math(format!("{failed} of {total} checks failed")))
    }
}

/// Reads a `NAME=FILE` binding: FILE holds a JSON array of rows of
/// scalar literals (strings or plain integers).
fn read_binding(h: &HopfAlgebra, arg: &str) -> Result<(String, Mat), CmdError> {
    let (name, path) = arg
        .split_once('=')
        .ok_or_else(|| Input(format!("binding {arg:?} is not NAME=FILE")))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Input(format!("cannot read binding file {path}: {e}")))?;
    let rows: Vec<Vec<serde_json::Value>> = serde_json::from_str(&text)
        .map_err(|e| Input(format!("{path}: expected a JSON array of rows: {e}")))?;
    let field = h.field();
    let n_cols = rows.first().map(Vec::len).unwrap_or(0);
    if rows.is_empty() || rows.iter().any(|r| r.len() != n_cols) {
        return Err(Input(format!("{path}: rows must be non-empty and equal length")));
    }
    let mut cells = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            let scalar = match cell {
                serde_json::Value::String(lit) => field
                    .parse(lit)
                    .map_err(|e| Input(format!("{path}: bad scalar literal {lit:?}: {e}")))?,
                serde_json::Value::Number(k) if k.is_i64() => {
                    field.from_i64(k.as_i64().expect("checked"))
                }
                other => {
                    return Err(Input(format!(
                        "{path}: matrix entries must be scalar literals, got {other}"
                    )));
                }
            };
            out.push(scalar);
        }
        cells.push(out);
    }
    Ok((name.to_string(), Mat::from_rows(field, cells)))
}

fn load_diagram(spec: &str) -> Result<Diagram, CmdError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return diagram::builtin_diagram(name).map_err(|e| Input(e.to_string()));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Input(format!("cannot read diagram {spec}: {e}")))?;
    diagram::parse_one(&text).map_err(|e| Input(format!("{spec}: {e}")))
}

fn cmd_eval(args: &EvalArgs) -> Result<(), CmdError> {
    let h = load_algebra_arg(&args.algebra, &args.field)?;
    axiom_guard(&h, args.skip_verify)?;
    let d = load_diagram(&args.diagram)?;
    let mut bindings = Bindings::new();
    for arg in &args.bindings {
        let (name, mat) = read_binding(&h, arg)?;
        bindings.insert(&name, mat);
    }
    // From here on, failures are evaluation errors (exit 1): the inputs
    // were all well-formed.
    let value: TensorValue = if args.naive {
        diagram::evaluate_naive(&h, &d, &bindings)
    } else {
        diagram::evaluate(&h, &d, &bindings)
    }
    .map_err(|e| match e {
        AlgebraError::Invalid(msg) => Math(msg),
        other => Math(other.to_string()),
    })?;

    if args.machine {
        emit_json(json!({
            "command": "eval",
            "algebra": h.name(),
            "field": h.field().to_string(),
            "diagram": d.name,
            "inputs": value.inputs(),
            "outputs": value.outputs(),
            "n": value.n(),
            "entries": mat_json(value.mat()),
        }));
    } else {
        println!(
            "diagram {} : {} -> {} over {} (dim {})",
            d.name,
            value.inputs(),
            value.outputs(),
            h.name(),
            h.dim()
        );
        match value.scalar() {
            Some(s) => println!("value = {s}"),
            None => {
                println!(
                    "matrix ({} rows x {} cols, row = outputs, col = inputs):",
                    value.mat().rows(),
                    value.mat().cols()
                );
                print!("{}", mat_lines(value.mat(), "  "));
            }
        }
    }
    Ok(())
}

fn cmd_builtin(args: &BuiltinArgs) -> Result<(), CmdError> {
    let Some(name) = &args.name else {
        println!("algebras (emit with: hopfint builtin NAME [--field rational|prime:P] [--n N]):");
        for name in builtin_names() {
            println!("  {name}");
        }
        println!("diagrams (print with: hopfint builtin NAME; evaluate with: hopfint eval ALGEBRA builtin:NAME):");
        for name in builtin_diagram_names() {
            println!("  {name}");
        }
        return Ok(());
    };
    if builtin_diagram_names().contains(&name.as_str()) {
        let text = builtin_diagram_text(name).map_err(|e| Input(e.to_string()))?;
        // Reprint in canonical form so the output parses cleanly even
        // when the bundled source uses the compact style.
        let d = diagram::parse_one(text).map_err(|e| Input(e.to_string()))?;
        print!("{d}");
        return Ok(());
    }
    let field = parse_field(&args.field)?;
    let resolved = match (name.as_str(), args.n) {
        ("taft", Some(n)) => format!("taft:{n}"),
        ("taft", None) => {
            return Err(Input("taft needs --n N (the algebra has dimension N²)".into()));
        }
        (other, _) => other.to_string(),
    };
    let h = builtin(&resolved, field).map_err(|e| Input(e.to_string()))?;
    println!("{}", to_json(&h));
    Ok(())
}
