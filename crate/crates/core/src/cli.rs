//! The `ckforms` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 dimension or degree error.

use std::io::Write;

use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::ck::{self, KernelAnalysis};
use crate::error::Error;
use crate::expr::{parse_form, ParseContext};
use crate::multivector::Form;
use crate::structures::{G2Model, Spin7Model};
use crate::verify::{self, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

/// Environment variable overriding the seed of sampled checks.
pub const SEED_VAR: &str = "CKFORMS_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "ckforms",
    version,
    about = "Exact exterior algebra for G2 and Spin7 conformal-Killing computations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    G2,
    Spin7,
    Axioms,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Λ² of ℝ⁷ into Λ²₇ ⊕ Λ²₁₄
    #[value(name = "lambda2-g2")]
    Lambda2G2,
    /// Λ³ of ℝ⁸ into Λ³₈ ⊕ Λ³₄₈
    #[value(name = "lambda3-spin7")]
    Lambda3Spin7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    T3,
    T4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replay the published computations and report each check
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate an expression, then apply --wedge/--star/--interior in the order given
    Eval {
        #[arg(allow_hyphen_values = true)]
        expression: String,
        /// Wedge on the right with an expression
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        wedge: Vec<String>,
        /// Hodge star
        #[arg(long, num_args = 0, default_missing_value = "*")]
        star: Vec<String>,
        /// Contract with a vector, e.g. e3
        #[arg(long, value_name = "VECTOR", allow_hyphen_values = true)]
        interior: Vec<String>,
        /// Ambient dimension (7 or 8), inferred when omitted
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Split a form into its irreducible components
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact rank and kernel of T3 on T*⊗Λ³₇ or T4 on T*⊗Λ⁴₇
    Rank {
        #[arg(value_enum)]
        operator: Operator,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Op {
    Wedge(String),
    Star,
    Interior(String),
}

/// Recovers the command-line order of the eval operations.
fn ordered_ops(m: &ArgMatches) -> Vec<Op> {
    let mut ops: Vec<(usize, Op)> = Vec::new();
    let indexed = |name: &str| -> Vec<usize> { m.indices_of(name).map(|i| i.collect()).unwrap_or_default() };
    let values = |name: &str| -> Vec<String> {
        m.get_many::<String>(name)
            .map(|v| v.cloned().collect())
            .unwrap_or_default()
    };
    for (i, v) in indexed("wedge").into_iter().zip(values("wedge")) {
        ops.push((i, Op::Wedge(v)));
    }
    for (i, v) in indexed("interior").into_iter().zip(values("interior")) {
        ops.push((i, Op::Interior(v)));
    }
    for i in indexed("star") {
        ops.push((i, Op::Star));
    }
    ops.sort_by_key(|(i, _)| *i);
    ops.into_iter().map(|(_, op)| op).collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_SEMANTIC,
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Parse { position, message } => {
            format!("parse error at character {position}: {message}")
        }
        other => other.to_string(),
    }
}

/// Reads the seed override, if any.
pub fn seed_from_env() -> std::result::Result<u64, String> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_VAR} must be an unsigned integer, got '{s}'")),
        Err(_) => Ok(verify::DEFAULT_SEED),
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> VerificationReport {
    match suite {
        Suite::G2 => verify::run_g2_suite(),
        Suite::Spin7 => verify::run_spin7_suite(),
        Suite::Axioms => verify::run_axiom_suite_with_seed(seed),
        Suite::All => verify::run_all(seed),
    }
}

fn eval(expression: &str, dim: Option<usize>, ops: &[Op]) -> crate::Result<Form> {
    let mut form = parse_form(
        expression,
        ParseContext {
            dim,
            degree: None,
        },
    )?;
    for op in ops {
        let here = ParseContext::dim(form.dim());
        form = match op {
            Op::Wedge(e) => form.wedge(&parse_form(e, here)?)?,
            Op::Star => form.hodge(),
            Op::Interior(v) => form.contract(&parse_form(v, here.with_degree(1))?)?,
        };
    }
    Ok(form)
}

struct Component {
    name: &'static str,
    value: Form,
}

struct Decomposition {
    input: Form,
    components: Vec<Component>,
    residuals: Vec<Component>,
    /// The covector X with the Λ³₈ part equal to `*(ψ ∧ X)`.
    coordinate: Option<Form>,
}

fn decompose(expression: &str, space: Space) -> crate::Result<Decomposition> {
    match space {
        Space::Lambda2G2 => {
            let g2 = G2Model::standard();
            let b = parse_form(expression, ParseContext::dim(7).with_degree(2))?;
            let (b7, b14) = g2.lambda2_split(&b)?;
            let r7 = b7.hodge().scale(&crate::linalg::qi(2)).sub(&b7.wedge(g2.phi0())?)?;
            let r14 = b14.hodge().add(&b14.wedge(g2.phi0())?)?;
            let sum = b.sub(&b7)?.sub(&b14)?;
            Ok(Decomposition {
                input: b,
                components: vec![
                    Component {
                        name: "lambda2_7",
                        value: b7,
                    },
                    Component {
                        name: "lambda2_14",
                        value: b14,
                    },
                ],
                residuals: vec![
                    Component {
                        name: "2*(*b7) - b7^phi0",
                        value: r7,
                    },
                    Component {
                        name: "*b14 + b14^phi0",
                        value: r14,
                    },
                    Component {
                        name: "b - b7 - b14",
                        value: sum,
                    },
                ],
                coordinate: None,
            })
        }
        Space::Lambda3Spin7 => {
            let s7 = Spin7Model::standard();
            let b = parse_form(expression, ParseContext::dim(8).with_degree(3))?;
            let (b8, b48) = s7.lambda3_split8(&b)?;
            let x = s7.lambda3_8_coordinate(&b8)?;
            let r8 = b8.sub(&s7.lambda3_8_element(&x)?)?;
            let r48 = b48.wedge(s7.psi0())?;
            let sum = b.sub(&b8)?.sub(&b48)?;
            Ok(Decomposition {
                input: b,
                components: vec![
                    Component {
                        name: "lambda3_8",
                        value: b8,
                    },
                    Component {
                        name: "lambda3_48",
                        value: b48,
                    },
                ],
                residuals: vec![
                    Component {
                        name: "b8 - *(psi0^X)",
                        value: r8,
                    },
                    Component {
                        name: "b48^psi0",
                        value: r48,
                    },
                    Component {
                        name: "b - b8 - b48",
                        value: sum,
                    },
                ],
                coordinate: Some(x),
            })
        }
    }
}

fn render_decomposition(d: &Decomposition, format: Format) -> String {
    match format {
        Format::Json => {
            let entries = |cs: &[Component]| -> serde_json::Value {
                cs.iter()
                    .map(|c| json!({"name": c.name, "value": c.value.to_string(), "factored": c.value.factored()}))
                    .collect()
            };
            let v = json!({
                "input": d.input.to_string(),
                "components": entries(&d.components),
                "residuals": entries(&d.residuals),
                "coordinate": d.coordinate.as_ref().map(Form::to_string),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Format::Text => {
            let width = d
                .components
                .iter()
                .chain(&d.residuals)
                .map(|c| c.name.len())
                .max()
                .unwrap_or(0)
                .max("input".len());
            let mut s = format!("{:<width$}  {}\n", "input", d.input.factored());
            for c in &d.components {
                s.push_str(&format!("{:<width$}  {}\n", c.name, c.value.factored()));
            }
            if let Some(x) = &d.coordinate {
                s.push_str(&format!("{:<width$}  {}\n", "X", x.factored()));
            }
            for c in &d.residuals {
                s.push_str(&format!("{:<width$}  {}\n", c.name, c.value.factored()));
            }
            s
        }
    }
}

fn render_rank(op: Operator, a: &KernelAnalysis, format: Format) -> String {
    let name = match op {
        Operator::T3 => "t3",
        Operator::T4 => "t4",
    };
    match format {
        Format::Json => {
            let kernel: Vec<Vec<String>> = a
                .kernel
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect())
                .collect();
            let elements: Vec<String> = a.kernel_elements.iter().map(ToString::to_string).collect();
            let v = json!({
                "operator": name,
                "domain_dim": a.domain_dim,
                "codomain_dim": a.codomain_dim,
                "rank": a.rank,
                "kernel_dim": a.kernel.len(),
                "kernel": kernel,
                "kernel_elements": elements,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Format::Text => {
            let domain = match op {
                Operator::T3 => "T*⊗Λ³₇ (basis e^i⊗*(e^j∧phi0))",
                Operator::T4 => "T*⊗Λ⁴₇ (basis e^i⊗(e^j∧i_{e_j'}psi0 - e^j'∧i_{e_j}psi0))",
            };
            let mut s = format!(
                "operator: {name} on {domain}\ndomain dimension: {}\ncodomain dimension: {}\nrank: {}\nkernel dimension: {}\n",
                a.domain_dim,
                a.codomain_dim,
                a.rank,
                a.kernel.len()
            );
            for (v, e) in a.kernel.iter().zip(&a.kernel_elements) {
                let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
                s.push_str(&format!("kernel vector: [{}]\n", coords.join(", ")));
                s.push_str(&format!("kernel element: {e}\n"));
            }
            s
        }
    }
}

fn render_form(f: &Form, format: Format) -> String {
    match format {
        Format::Text => format!("{f}\n"),
        Format::Json => {
            let v = json!({
                "dim": f.dim(),
                "degree": f.degree(),
                "form": f.to_string(),
                "factored": f.factored(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    }
}

/// Runs the command line `args` (program name first), writing to `out` and
/// `err`, and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                if !text.contains("Usage:") {
                    let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                }
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };

    let fail = |err: &mut dyn Write, e: Error| {
        let _ = writeln!(err, "error: {}", describe(&e));
        exit_code(&e)
    };

    match cli.command {
        Command::Verify { suite, format } => {
            let seed = match seed_from_env() {
                Ok(s) => s,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    return EXIT_USAGE;
                }
            };
            let report = run_suite(suite, seed);
            let text = match format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => report.to_text(),
            };
            let _ = write!(out, "{text}");
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Command::Eval {
            expression,
            dim,
            format,
            ..
        } => {
            let sub = matches.subcommand_matches("eval").expect("eval matches");
            match eval(&expression, dim, &ordered_ops(sub)) {
                Ok(f) => {
                    let _ = write!(out, "{}", render_form(&f, format));
                    EXIT_OK
                }
                Err(e) => fail(err, e),
            }
        }
        Command::Decompose {
            expression,
            space,
            format,
        } => match decompose(&expression, space) {
            Ok(d) => {
                let _ = write!(out, "{}", render_decomposition(&d, format));
                EXIT_OK
            }
            Err(e) => fail(err, e),
        },
        Command::Rank { operator, format } => {
            let analysis = match operator {
                Operator::T3 => ck::analyze_t3(G2Model::standard()),
                Operator::T4 => ck::analyze_t4(Spin7Model::standard()),
            };
            let _ = write!(out, "{}", render_rank(operator, &analysis, format));
            EXIT_OK
        }
    }
}

/// [`run`] on the process arguments and standard streams.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["ckforms"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_applies_ops_in_order() {
        assert_eq!(call(&["eval", "e123", "--star"]).1, "e4567\n");
        assert_eq!(call(&["eval", "phi0", "--wedge", "phi0"]).1, "0\n");
        assert_eq!(
            call(&["eval", "e2", "--wedge", "phi0", "--star"]).1,
            "-e147 - e156 - e345 - e367\n"
        );
        assert_eq!(call(&["eval", "e1", "--star", "--interior", "e2"]).1, "e34567\n");
        assert_eq!(call(&["eval", "e1", "--interior", "e2", "--star"]).1, "0\n");
        assert_eq!(call(&["eval", "e1", "--wedge", "e2", "--interior", "e1"]).1, "e2\n");
        assert_eq!(call(&["eval", "e1", "--interior", "e1", "--wedge", "e2"]).1, "e2\n");
        assert_eq!(call(&["eval", "-e12", "--star", "--star", "--wedge", "-e3"]).1, "e123\n");
        assert_eq!(call(&["eval", "-e12", "--star", "--wedge", "-e3", "--star"]).1, "0\n");
    }

    #[test]
    fn eval_exit_codes() {
        let (code, _, err) = call(&["eval", "e12 + $"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("character 6"), "{err}");
        assert_eq!(call(&["eval", "e1 + e12"]).0, EXIT_SEMANTIC);
        assert_eq!(call(&["eval", "phi0", "--wedge", "psi0"]).0, EXIT_SEMANTIC);
        assert_eq!(call(&["eval", "e1", "--dim", "9"]).0, EXIT_SEMANTIC);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "--suite", "bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["rank", "t5"]).0, EXIT_USAGE);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn decompose_e12() {
        let (code, out, _) = call(&["decompose", "e12", "--space", "lambda2-g2"]);
        assert_eq!(code, 0);
        assert!(out.contains("1/3*(e12 - e47 - e56)"), "{out}");
        let (_, out, _) = call(&["decompose", "0", "--space", "lambda2-g2"]);
        assert!(out.lines().all(|l| l.trim_end().ends_with(" 0")), "{out}");
    }
}
