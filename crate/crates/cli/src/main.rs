//! `multdisc`: classify root multiplicities, print gamma-discriminants, and
//! run the property sweeps from the command line.
//!
//! Coefficients are always given in descending order (`a_n` first).

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multdisc::classifier::{classify_trace, conditions, ClassificationTrace};
use multdisc::degrees::{degree_table, to_csv};
use multdisc::engine::{
    build_matrix, build_symbolic_matrix, disc_symbolic, disc_value, DetStrategy, SymbolicConfig,
};
use multdisc::selftest::{self, SweepConfig};
use multdisc::{Error, Partition, UniPoly};

#[derive(Parser, Debug)]
#[command(name = "multdisc", version, about = "Root multiplicity structure via gamma-discriminants")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only the result line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicity vector of a polynomial.
    Classify {
        /// Descending coefficients, e.g. "1,-5,7,1,-8,4" or "1/2,0,-3".
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        coeffs: Option<String>,
        /// One coefficient list per line; one result per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Show every discriminant evaluated.
        #[arg(long)]
        trace: bool,
    },
    /// A single gamma-discriminant as a matrix, LaTeX, polynomial or value.
    Discriminant {
        #[arg(long)]
        n: usize,
        /// Partition of n, e.g. "3,2".
        #[arg(long)]
        gamma: Partition,
        #[arg(long, value_enum)]
        format: Format,
        /// Concrete polynomial (descending); required for --format value.
        #[arg(long)]
        coeffs: Option<String>,
        /// Largest n for symbolic expansion.
        #[arg(long, default_value_t = SymbolicConfig::default().cap)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Strategy::Bareiss)]
        strategy: Strategy,
    },
    /// The vanishing/nonvanishing condition for every multiplicity vector.
    Conditions {
        #[arg(long)]
        n: usize,
    },
    /// Maximal degrees of three condition systems, as CSV.
    DegreeTable {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Randomized property sweeps; exits 1 on any violation.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Matrix,
    Latex,
    Poly,
    Value,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Strategy {
    Bareiss,
    Minors,
}

/// Exit status 1: a property sweep found a violation.
const EXIT_VIOLATION: u8 = 1;
/// Exit status 2: bad arguments or unparsable input.
const EXIT_USAGE: u8 = 2;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    print!("{}", out);
    io::stdout().flush().ok();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    match &cli.command {
        Command::Classify { coeffs, file, trace } => match (coeffs, file) {
            (Some(c), _) => {
                let f = UniPoly::parse_descending(c)?;
                let t = classify_trace(&f)?;
                out.push_str(&render_trace(&t, cli, *trace));
                Ok(())
            }
            (None, Some(path)) => classify_batch(path, cli, *trace, out),
            (None, None) => Err(usage("either --coeffs or --file is required")),
        },
        Command::Discriminant { n, gamma, format, coeffs, cap, strategy } => {
            let config = SymbolicConfig {
                cap: *cap,
                strategy: match strategy {
                    Strategy::Bareiss => DetStrategy::Bareiss,
                    Strategy::Minors => DetStrategy::Minors,
                },
            };
            discriminant(*n, gamma, *format, coeffs.as_deref(), &config, cli, out)
        }
        Command::Conditions { n } => {
            let conds = conditions(*n)?;
            if cli.json {
                let v = Value::Array(conds.iter().map(|c| c.to_json()).collect());
                push_json(out, &v);
            } else {
                for c in &conds {
                    let mut clauses: Vec<String> = c.vanishing.iter().map(|g| format!("D({}) = 0", g)).collect();
                    clauses.push(format!("D({}) != 0", c.nonzero));
                    out.push_str(&format!("{}: {}\n", c.mu, clauses.join(", ")));
                }
            }
            Ok(())
        }
        Command::DegreeTable { max_n } => {
            let rows = degree_table(*max_n)?;
            if cli.json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|r| json!({ "n": r.n, "d_yhz": r.d_yhz, "d_hy21": r.d_hy21, "d_hy22": r.d_hy22 }))
                    .collect();
                push_json(out, &Value::Array(v));
            } else {
                out.push_str(&to_csv(&rows));
            }
            Ok(())
        }
        Command::Selftest { max_n, trials, seed } => {
            if *max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            let report = selftest::run(&SweepConfig { max_n: *max_n, trials: *trials, seed: *seed });
            if cli.json {
                let props: Vec<Value> = report
                    .properties
                    .iter()
                    .map(|p| json!({ "name": p.name, "checked": p.checked, "failures": p.failures, "first_failure": p.first_failure }))
                    .collect();
                push_json(out, &json!({ "checked": report.checked(), "failures": report.failures(), "properties": props }));
            } else if cli.quiet {
                let text = report.to_string();
                out.push_str(text.lines().last().unwrap_or_default());
                out.push('\n');
            } else {
                out.push_str(&report.to_string());
                out.push('\n');
            }
            if report.ok() {
                Ok(())
            } else {
                Err(Failure { code: EXIT_VIOLATION, message: String::new() })
            }
        }
    }
}

fn push_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string(v).expect("serializable"));
    out.push('\n');
}

fn render_trace(t: &ClassificationTrace, cli: &Cli, trace: bool) -> String {
    if cli.json {
        return format!("{}\n", serde_json::to_string(&t.to_json()).expect("serializable"));
    }
    let mut s = String::new();
    if trace && !cli.quiet {
        for step in &t.steps {
            if step.nonzero {
                s.push_str(&format!("D({}) = {} != 0\n", step.gamma, step.value));
            } else {
                s.push_str(&format!("D({}) = 0\n", step.gamma));
            }
        }
    }
    s.push_str(&format!("{}\n", t.result));
    s
}

fn classify_batch(path: &PathBuf, cli: &Cli, trace: bool, out: &mut String) -> Result<(), Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {}", path.display(), e)))?;
    let mut bad = 0;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match UniPoly::parse_descending(line).and_then(|f| classify_trace(&f)) {
            Ok(t) => out.push_str(&render_trace(&t, cli, trace)),
            Err(e) => {
                bad += 1;
                if cli.json {
                    push_json(out, &json!({ "line": lineno + 1, "error": e.to_string() }));
                } else {
                    out.push_str(&format!("error: line {}: {}\n", lineno + 1, e));
                }
            }
        }
    }
    if bad > 0 {
        return Err(usage(format!("{} line(s) failed to parse", bad)));
    }
    Ok(())
}

fn discriminant(
    n: usize,
    gamma: &Partition,
    format: Format,
    coeffs: Option<&str>,
    config: &SymbolicConfig,
    cli: &Cli,
    out: &mut String,
) -> Result<(), Failure> {
    if gamma.n() != n {
        return Err(Error::NotAPartitionOf { parts: gamma.parts().to_vec(), n }.into());
    }
    let poly = coeffs.map(UniPoly::parse_descending).transpose()?;
    if let Some(f) = &poly {
        if f.degree() != Some(n) {
            return Err(usage(format!("--coeffs has degree {:?} but --n is {}", f.degree().unwrap_or(0), n)));
        }
    }
    match format {
        Format::Matrix => {
            let v = match &poly {
                Some(f) => build_matrix(f, gamma)?.to_json(),
                None => build_symbolic_matrix(n, gamma)?.to_json(),
            };
            push_json(out, &v);
        }
        Format::Latex => {
            let tex = match &poly {
                Some(f) => build_matrix(f, gamma)?.to_latex(),
                None => build_symbolic_matrix(n, gamma)?.to_latex(),
            };
            if cli.json {
                push_json(out, &json!({ "n": n, "gamma": gamma.parts(), "latex": tex }));
            } else {
                out.push_str(&tex);
                out.push('\n');
            }
        }
        Format::Poly => {
            let d = disc_symbolic(n, gamma, config)?;
            if cli.json {
                push_json(out, &d.to_json());
            } else {
                out.push_str(&format!("{}\n", d.value));
            }
        }
        Format::Value => {
            let f = poly.ok_or_else(|| usage("--format value requires --coeffs"))?;
            let d = disc_value(&f, gamma)?;
            if cli.json {
                push_json(out, &d.to_json());
            } else {
                out.push_str(&format!("{}\n", d.value));
            }
        }
    }
    Ok(())
}
