//! Command-line workflows over `bredon-core`: computing homology reports,
//! checking them against the reference tables, and moving complexes,
//! character tables and matrices in and out as JSON.
//!
//! [`run`] executes a parsed command and returns what the binary should print.

pub mod cli;
pub mod render;

use std::io::Read;
use std::path::Path;

use bredon_core::chartab::{build_table, FiniteGroupTable, GroupId};
use bredon_core::gcw::{validate, EquivariantComplex};
use bredon_core::homology::{compute_homology, HomologyReport};
use bredon_core::intlinalg::{smith_normal_form, IntegerMatrix};
use bredon_core::reference::{
    builtin_reports, check_homology_types, check_induced_characters, check_reference_bases, CheckOutcome,
};
use bredon_core::wallpaper::{get_group, list_groups};

use cli::{Cli, Command, ComputeArgs, DumpArgs, Format, SnfArgs, VerifyArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) | CliError::Internal(_) => EXIT_INPUT,
        }
    }
}

/// What a command wants printed, and its exit status.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Verify(args) => verify(&args),
        Command::Dump(args) => dump(&args),
        Command::Snf(args) => snf(&args),
    };
    result.unwrap_or_else(|e| Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") })
}

fn builtin_complex(name: &str) -> Result<EquivariantComplex, CliError> {
    get_group(name).map(|(c, _)| c).map_err(|e| CliError::Usage(e.to_string()))
}

fn read_input(source: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if source == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Input(format!("standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(source).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    }
    Ok(text)
}

/// Parses and validates a complex file.
pub fn load_complex(path: &Path) -> Result<EquivariantComplex, CliError> {
    let shown = path.display().to_string();
    let text = read_input(&shown)?;
    let complex: EquivariantComplex =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    let problems = validate(&complex);
    if !problems.is_empty() {
        return Err(CliError::Input(format!("{shown}: invalid complex:\n  {}", problems.join("\n  "))));
    }
    Ok(complex)
}

fn homology(complex: &EquivariantComplex) -> Result<HomologyReport, CliError> {
    compute_homology(complex).map_err(|e| CliError::Input(format!("{}: {e}", complex.group_name)))
}

/// Computes each group on its own thread; the result keeps the input order.
pub fn compute_all(complexes: &[EquivariantComplex]) -> Result<Vec<HomologyReport>, CliError> {
    std::thread::scope(|s| {
        let handles: Vec<_> = complexes.iter().map(|c| s.spawn(move || homology(c))).collect();
        handles.into_iter().map(|h| h.join().map_err(|_| CliError::Internal("worker panicked".into()))?).collect()
    })
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn report_output(
    reports: &[HomologyReport],
    single: bool,
    format: Format,
    differentials: bool,
    snf: bool,
) -> Result<String, CliError> {
    match format {
        Format::Json if single => to_json(&reports[0]),
        Format::Json => to_json(reports),
        Format::Text => {
            let mut out = render::homology_table(reports);
            for r in reports {
                if snf {
                    out.push('\n');
                    out.push_str(&render::invariant_factors(r));
                }
                if differentials {
                    out.push('\n');
                    out.push_str(&render::differentials(r));
                }
            }
            Ok(out)
        }
    }
}

fn compute(args: &ComputeArgs) -> Result<Outcome, CliError> {
    let complexes = if args.all {
        list_groups().into_iter().map(builtin_complex).collect::<Result<Vec<_>, _>>()?
    } else if let Some(path) = &args.from_file {
        vec![load_complex(path)?]
    } else {
        let name = args.group.as_deref().unwrap_or_default();
        vec![builtin_complex(name)?]
    };
    let reports = compute_all(&complexes)?;
    let text = report_output(&reports, !args.all, args.format, args.show_differentials, args.show_snf)?;
    Ok(Outcome::ok(text))
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let everything = !(args.table3 || args.table4 || args.bases);
    let mut sections: Vec<(&str, Vec<CheckOutcome>)> = Vec::new();
    if args.table3 || everything {
        let rows = check_induced_characters().map_err(|e| CliError::Internal(e.to_string()))?;
        sections.push(("table3", rows));
    }
    if args.table4 || args.bases || everything {
        let reports = builtin_reports().map_err(|e| CliError::Internal(e.to_string()))?;
        if args.table4 || everything {
            sections.push(("table4", check_homology_types(&reports)));
        }
        if args.bases || everything {
            let rows = check_reference_bases(&reports).map_err(|e| CliError::Internal(e.to_string()))?;
            sections.push(("bases", rows));
        }
    }
    let mut out = String::new();
    for (title, rows) in &sections {
        out.push_str(&render::outcomes(title, rows));
    }
    let pass = sections.iter().all(|(_, rows)| rows.iter().all(|r| r.pass));
    Ok(Outcome { code: if pass { EXIT_OK } else { EXIT_MISMATCH }, stdout: out, stderr: String::new() })
}

pub fn all_tables() -> Vec<FiniteGroupTable> {
    GroupId::ALL.into_iter().map(build_table).collect()
}

fn dump(args: &DumpArgs) -> Result<Outcome, CliError> {
    if let Some(name) = &args.dump_complex {
        return Ok(Outcome::ok(to_json(&builtin_complex(name)?)?));
    }
    if args.dump_tables {
        return Ok(Outcome::ok(to_json(&all_tables())?));
    }
    let path = args.from_file.as_deref().ok_or_else(|| CliError::Usage("nothing to dump".into()))?;
    let report = homology(&load_complex(path)?)?;
    Ok(Outcome::ok(report_output(&[report], true, args.format, false, false)?))
}

/// Reads a matrix given as a JSON array of integer rows.
pub fn parse_matrix(text: &str, source: &str) -> Result<IntegerMatrix, CliError> {
    let rows: Vec<Vec<serde_json::Value>> =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    let mut parsed: Vec<Vec<num_bigint::BigInt>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, v) in row.iter().enumerate() {
            let digits = match v {
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                serde_json::Value::String(s) => s.trim().to_owned(),
                _ => {
                    return Err(CliError::Input(format!(
                        "{source}: entry ({}, {}) is not an integer: {v}",
                        i + 1,
                        j + 1
                    )))
                }
            };
            out.push(digits.parse().map_err(|_| {
                CliError::Input(format!("{source}: entry ({}, {}) is not an integer: {v}", i + 1, j + 1))
            })?);
        }
        parsed.push(out);
    }
    IntegerMatrix::from_rows(&parsed).map_err(|e| CliError::Input(format!("{source}: {e}")))
}

fn snf(args: &SnfArgs) -> Result<Outcome, CliError> {
    let source = if args.input == "-" { "standard input" } else { args.input.as_str() };
    let matrix = parse_matrix(&read_input(&args.input)?, source)?;
    let s = smith_normal_form(&matrix);
    let text = match args.format {
        Format::Json => to_json(&s)?,
        Format::Text => render::snf(&s),
    };
    Ok(Outcome::ok(text))
}
