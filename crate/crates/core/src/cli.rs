//! Command-line front end. Machine-readable output goes to stdout, the
//! human-readable report to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{build_relations, check_hopf, counit, diamond_check, parse_poly, set_step_budget, Rewriter};
use crate::error::{Error, Result};
use crate::examples::{classical, glq, solve_n1, N1Constraints, Want};
use crate::functionals::{evaluate, generator_images, index_label};
use crate::qgdata::{check_axioms, implication_suite, Mode};
use crate::report::Report;
use crate::scalar::parse_scalar;
use crate::Data;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qhopf", version, about = "Exact workbench for inhomogeneous quantum groups over Q(q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    LambdaZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    Classical,
    Glq,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the consistency conditions on a data file (`-` reads stdin).
    Check {
        file: String,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Also run the implication suite.
        #[arg(long)]
        implications: bool,
    },
    /// Print the normal form of an expression.
    Normalize {
        file: String,
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Evaluate the functional representation on an expression.
    EvalFunctional {
        file: String,
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Resolve all overlap ambiguities up to the given degree.
    Diamond {
        file: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Check counit, coproduct and antipode compatibility.
    Hopf {
        file: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Print a built-in data file.
    EmitExample {
        #[arg(value_enum)]
        name: ExampleName,
        n: usize,
    },
    /// Enumerate N = 1 solutions.
    SolveN1 {
        /// Require these unknowns to be nonzero, e.g. `Z,T`.
        #[arg(long, value_delimiter = ',')]
        nonzero: Vec<String>,
        /// Require these unknowns to vanish.
        #[arg(long, value_delimiter = ',')]
        zero: Vec<String>,
        /// Fix lambda instead of scanning the grid.
        #[arg(long)]
        lambda: Option<String>,
        /// Write one file per solution instead of a JSON array on stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn read_data(file: &str, stdin: &mut dyn Read) -> Result<Data> {
    let text = if file == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(file).map_err(|e| Error::Io(format!("{file}: {e}")))?
    };
    Data::from_json(&text)
}

fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn emit_report(rep: &Report, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{}", rep.to_json())?;
    write!(err, "{}", rep.human())?;
    Ok(if rep.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn constraint(name: &str, nonzero: &[String], zero: &[String]) -> Result<Want> {
    let hit = |v: &[String]| v.iter().any(|x| x.trim().eq_ignore_ascii_case(name));
    match (hit(nonzero), hit(zero)) {
        (true, true) => Err(Error::InvalidData(format!("{name} cannot be both zero and nonzero"))),
        (true, false) => Ok(Want::Nonzero),
        (false, true) => Ok(Want::Zero),
        (false, false) => Ok(Want::Any),
    }
}

fn run_command(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Check {
            file,
            mode,
            implications,
        } => {
            let data = read_data(&file, stdin)?;
            let mode = match mode {
                ModeArg::Strict => Mode::Strict,
                ModeArg::LambdaZero => Mode::LambdaZero,
            };
            let mut rep = check_axioms(&data, mode)?;
            if implications {
                rep.extend(implication_suite(&data)?);
            }
            emit_report(&rep, out, err)
        }
        Command::Normalize { file, expr } => {
            let data = read_data(&file, stdin)?;
            let poly = parse_poly(&expr, data.n)?;
            let rels = build_relations(&data, poly.uses_extended())?;
            let nf = Rewriter::compile(&rels)?.normalize(&poly)?;
            writeln!(out, "{nf}")?;
            Ok(EXIT_PASS)
        }
        Command::EvalFunctional { file, expr } => {
            let data = read_data(&file, stdin)?;
            let poly = parse_poly(&expr, data.n)?;
            let rep = generator_images(&data)?;
            let m = evaluate(&rep, &poly)?;
            let eps = counit(&poly);
            let labels: Vec<String> = (0..m.dim()).map(|j| index_label(data.n, j)).collect();
            let rows: Vec<Vec<String>> = m
                .rows()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect();
            let doc = json!({
                "dim": m.dim(),
                "index": labels,
                "matrix": rows,
                "epsilon": eps.to_string(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            writeln!(err, "Φ({expr}) on J = {}:", labels.join(" "))?;
            write!(err, "{m}")?;
            writeln!(err, "ε({expr}) = {eps}")?;
            Ok(EXIT_PASS)
        }
        Command::Diamond { file, degree } => {
            let data = read_data(&file, stdin)?;
            emit_report(&diamond_check(&data, degree)?, out, err)
        }
        Command::Hopf { file, degree } => {
            let data = read_data(&file, stdin)?;
            emit_report(&check_hopf(&data, degree)?, out, err)
        }
        Command::EmitExample { name, n } => {
            let data = match name {
                ExampleName::Classical if n >= 1 => classical(n),
                ExampleName::Classical => return Err(Error::InvalidData("N must be at least 1".into())),
                ExampleName::Glq => glq(n)?,
            };
            writeln!(out, "{}", data.to_json())?;
            Ok(EXIT_PASS)
        }
        Command::SolveN1 {
            nonzero,
            zero,
            lambda,
            out_dir,
        } => {
            for name in nonzero.iter().chain(&zero) {
                if !["z", "t"].contains(&name.trim().to_ascii_lowercase().as_str()) {
                    return Err(Error::InvalidData(format!("unknown unknown `{name}`, expected Z or T")));
                }
            }
            let c = N1Constraints {
                lambda: lambda.as_deref().map(parse_scalar).transpose()?,
                z: constraint("Z", &nonzero, &zero)?,
                t: constraint("T", &nonzero, &zero)?,
            };
            let sols = solve_n1(&c)?;
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                    for (i, d) in sols.iter().enumerate() {
                        let path = dir.join(format!("n1-{:03}.json", i + 1));
                        fs::write(&path, d.to_json() + "\n")
                            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                        writeln!(out, "{}", path.display())?;
                    }
                }
                None => {
                    let docs: Vec<_> = sols.iter().map(|d| d.to_json_value()).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&docs)?)?;
                }
            }
            writeln!(err, "{} solutions", sols.len())?;
            Ok(EXIT_PASS)
        }
    }
}

/// Runs one invocation and returns the exit status. `args` includes the
/// program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            };
        }
    };
    if let Ok(v) = std::env::var("QHOPF_STEP_BUDGET") {
        match v.trim().parse::<usize>() {
            Ok(b) => set_step_budget(b),
            Err(_) => {
                let _ = writeln!(err, "error: QHOPF_STEP_BUDGET must be a nonnegative integer, got `{v}`");
                return EXIT_INPUT;
            }
        }
    }
    match run_command(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for_error(&e)
        }
    }
}
