use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

mod commands;

/// Exterior algebras, Plücker vectors and matroids over ordered blueprints.
#[derive(Parser, Debug)]
#[command(name = "ordblue", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Preset name (f1pm, gf3, rational, boolean, maxplus) or JSON descriptor
    #[arg(long)]
    pub preset: Option<String>,
    /// Input file, `-` for stdin, or inline JSON
    #[arg(long = "in", default_value = "-")]
    pub input: String,
    /// Output file, `-` for stdout
    #[arg(long = "out", default_value = "-")]
    pub output: String,
    /// State budget for the closure engine
    #[arg(long)]
    pub budget: Option<usize>,
    /// Cap on the number of enumerated candidates
    #[arg(long)]
    pub cap: Option<u128>,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for randomized suites
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wedge product of a list of exterior elements
    Wedge(#[command(flatten)] Common),
    /// Check the Grassmann-Plücker conditions for a function
    CheckGp(#[command(flatten)] Common),
    /// Check whether an exterior element is a Plücker vector
    CheckPlucker {
        #[command(flatten)]
        common: Common,
        /// Rank; defaults to the grade of the input
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Enumerate canonical GP functions over a finite preset
    EnumerateGp {
        #[command(flatten)]
        common: Common,
        n: usize,
        d: usize,
    },
    /// Maximal minors of a matrix over a field preset
    Realize(#[command(flatten)] Common),
    /// Image of an exterior element in the classical exterior algebra
    Hull(#[command(flatten)] Common),
    /// Image of an exterior element in the tropical Grassmann algebra
    Idem(#[command(flatten)] Common),
    /// Run the differential suites against the reference oracles
    OracleCompare {
        #[command(flatten)]
        common: Common,
        /// Run a single suite
        #[arg(long)]
        suite: Option<String>,
        /// Sample-count multiplier
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// Search for a derivation of lhs <= rhs
    Closure(#[command(flatten)] Common),
}

/// Exit statuses.
pub const OK: u8 = 0;
pub const VERDICT_FALSE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const UNKNOWN: u8 = 3;

pub struct Failure {
    pub kind: String,
    pub message: String,
}

impl From<ordblue::Error> for Failure {
    fn from(e: ordblue::Error) -> Self {
        let kind = format!("{e:?}");
        let kind = kind.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
        Failure { kind, message: e.to_string() }
    }
}

impl Failure {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        Failure { kind: kind.into(), message: message.into() }
    }
}

pub fn read_input(source: &str) -> Result<Value, Failure> {
    let text = match source.trim_start().chars().next() {
        Some('{') | Some('[') => source.to_string(),
        _ if source == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::new("Io", e.to_string()))?;
            s
        }
        _ => fs::read_to_string(PathBuf::from(source)).map_err(|e| Failure::new("Io", format!("{source}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| Failure::new("Parse", e.to_string()))
}

fn write_output(dest: &str, v: &Value) -> io::Result<()> {
    let mut text = serde_json::to_string(v).expect("json value serializes");
    text.push('\n');
    if dest == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        fs::write(dest, text)
    }
}

fn error_json(f: &Failure) -> Value {
    json!({ "error": { "kind": f.kind, "message": f.message } })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = write_output("-", &error_json(&Failure::new("Usage", e.render().to_string())));
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let (out, result) = match &cli.command {
        Command::Wedge(c) => (c.output.clone(), commands::wedge(c)),
        Command::CheckGp(c) => (c.output.clone(), commands::check_gp(c)),
        Command::CheckPlucker { common, rank } => (common.output.clone(), commands::check_plucker(common, *rank)),
        Command::EnumerateGp { common, n, d } => (common.output.clone(), commands::enumerate(common, *n, *d)),
        Command::Realize(c) => (c.output.clone(), commands::realize(c)),
        Command::Hull(c) => (c.output.clone(), commands::hull(c)),
        Command::Idem(c) => (c.output.clone(), commands::idem(c)),
        Command::OracleCompare { common, suite, scale } => {
            (common.output.clone(), commands::oracle_compare(common, suite.as_deref(), *scale))
        }
        Command::Closure(c) => (c.output.clone(), commands::closure(c)),
    };
    let (value, code) = match result {
        Ok(pair) => pair,
        Err(f) => (error_json(&f), INPUT_ERROR),
    };
    if let Err(e) = write_output(&out, &value) {
        eprintln!("ordblue: cannot write {out}: {e}");
        return ExitCode::from(INPUT_ERROR);
    }
    ExitCode::from(code)
}
