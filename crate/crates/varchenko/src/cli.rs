//! Command-line surface. Exit codes: 0 all checks pass, 1 structural or
//! usage error, 2 a verification found a discrepancy.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::geometry::Arrangement;
use crate::matrix::PolyMat;
use crate::models::{ModelId, ModelSpec};
use crate::snf::{self, verify_model};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISCREPANCY: i32 = 2;

#[derive(Parser)]
#[command(
    name = "varchenko",
    about = "q-Varchenko matrices of symmetric arrangements: build, verify, cross-check",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a model's q-Varchenko matrix and claimed diagonal manifest.
    Build {
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the full verification report for a model (or every model).
    Verify {
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Enumerate regions from first principles and compare with the
    /// closed form (for catalogue models) or report a user arrangement.
    Oracle {
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Invariant factors over Q[q] of a square matrix in the JSON format.
    Snf {
        #[arg(long)]
        file: PathBuf,
    },
    /// Poincare polynomial of a model's (or file's) intersection poset.
    Poincare {
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// List the model families.
    List,
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code conflicts with the discrepancy code
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            if !output.text.is_empty() {
                println!("{}", output.text.trim_end());
            }
            output.exit
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_ERROR
        }
    }
}

#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub exit: i32,
}

fn ok(text: String) -> Result<Output, String> {
    Ok(Output {
        text,
        exit: EXIT_OK,
    })
}

fn build_spec(model: &str, n: Option<usize>) -> Result<ModelSpec, String> {
    let id = ModelId::parse(model, n).map_err(|e| e.to_string())?;
    ModelSpec::build(id).map_err(|e| e.to_string())
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn execute(command: Command) -> Result<Output, String> {
    match command {
        Command::Build { model, n, format } => {
            let spec = build_spec(&model, n)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "manifest": spec.manifest(),
                    "varchenko": spec.varchenko.to_json(),
                }))
                .expect("serializable"),
                Format::Csv => spec.varchenko.to_csv(),
                Format::Pretty => format!(
                    "{}\n{}",
                    serde_json::to_string_pretty(&spec.manifest()).expect("serializable"),
                    spec.varchenko.to_pretty()
                ),
            };
            ok(text)
        }
        Command::Verify {
            model,
            n,
            all,
            format,
        } => {
            let ids: Vec<ModelId> = if all {
                ModelId::catalogue()
            } else {
                let name = model.ok_or("verify needs --model <id> or --all")?;
                vec![ModelId::parse(&name, n).map_err(|e| e.to_string())?]
            };
            let mut text = String::new();
            let mut worst = EXIT_OK;
            let mut reports = Vec::new();
            for id in ids {
                let spec = ModelSpec::build(id).map_err(|e| e.to_string())?;
                let report = verify_model(&spec);
                if report.has_discrepancy() {
                    worst = EXIT_DISCREPANCY;
                }
                match format {
                    Format::Json => reports.push(report.to_json()),
                    Format::Pretty | Format::Csv => {
                        text.push_str(&report.summary());
                        text.push('\n');
                    }
                }
            }
            if format == Format::Json {
                text = serde_json::to_string_pretty(&serde_json::Value::Array(reports))
                    .expect("serializable");
            }
            Ok(Output { text, exit: worst })
        }
        Command::Oracle { model, n, file } => match (model, file) {
            (Some(_), Some(_)) => Err("give either --model or --file, not both".into()),
            (Some(name), None) => {
                let spec = build_spec(&name, n)?;
                let regions = spec
                    .arrangement
                    .regions()
                    .map_err(|e| e.to_string())?;
                let base = spec
                    .arrangement
                    .region_containing(&spec.base_point)
                    .map_err(|e| e.to_string())?;
                let enumerator = spec
                    .arrangement
                    .distance_enumerator(&base)
                    .map_err(|e| e.to_string())?;
                let oracle = snf::oracle_matrix(&spec).map_err(|e| e.to_string())?;
                let agrees = oracle == spec.varchenko;
                let text = format!(
                    "model {}\nregions: {}\ndistance enumerator: {}\noracle matrix equals closed form: {}",
                    spec.id,
                    regions.len(),
                    enumerator,
                    if agrees { "yes" } else { "NO" }
                );
                Ok(Output {
                    text,
                    exit: if agrees { EXIT_OK } else { EXIT_DISCREPANCY },
                })
            }
            (None, Some(path)) => {
                let arrangement =
                    Arrangement::from_json(&read_json(&path)?).map_err(|e| e.to_string())?;
                let regions = arrangement.regions().map_err(|e| e.to_string())?;
                let base = regions.first().ok_or("arrangement has no regions")?;
                let enumerator = arrangement
                    .distance_enumerator(base)
                    .map_err(|e| e.to_string())?;
                let matrix = arrangement
                    .varchenko_matrix(&regions)
                    .map_err(|e| e.to_string())?;
                ok(format!(
                    "regions: {}\ndistance enumerator (from first region): {}\n{}",
                    regions.len(),
                    enumerator,
                    matrix.to_pretty()
                ))
            }
            (None, None) => Err("oracle needs --model <id> or --file <path>".into()),
        },
        Command::Snf { file } => {
            let matrix = PolyMat::from_json(&read_json(&file)?).map_err(|e| e.to_string())?;
            if !matrix.is_square() {
                return Err(format!(
                    "snf expects a square matrix, got {}x{}",
                    matrix.rows(),
                    matrix.cols()
                ));
            }
            let factors = snf::snf_over_field(&matrix);
            let mut text = String::from("invariant factors over Q[q]:\n");
            for (i, f) in factors.iter().enumerate() {
                text.push_str(&format!("  d_{} = {}\n", i + 1, f));
            }
            ok(text)
        }
        Command::Poincare { model, n, file } => {
            let arrangement = match (model, file) {
                (Some(_), Some(_)) => {
                    return Err("give either --model or --file, not both".into())
                }
                (Some(name), None) => build_spec(&name, n)?.arrangement,
                (None, Some(path)) => {
                    Arrangement::from_json(&read_json(&path)?).map_err(|e| e.to_string())?
                }
                (None, None) => return Err("poincare needs --model <id> or --file <path>".into()),
            };
            let poincare = arrangement.intersection_poset().poincare_polynomial();
            ok(format!("poincare polynomial (in t): {poincare}"))
        }
        Command::List => {
            let mut text = String::from("model families:\n");
            for name in ModelId::family_names() {
                let needs_n = matches!(*name, "cyclic" | "dihedral");
                if needs_n {
                    text.push_str(&format!("  {name} (--n <int>, n >= 3)\n"));
                } else {
                    text.push_str(&format!("  {name}\n"));
                }
            }
            ok(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cmd(cmd: Command) -> Output {
        execute(cmd).unwrap()
    }

    #[test]
    fn list_names_all_families() {
        let out = run_cmd(Command::List);
        for name in ModelId::family_names() {
            assert!(out.text.contains(name), "missing {name}");
        }
    }

    #[test]
    fn build_validates_n() {
        let err = execute(Command::Build {
            model: "cyclic".into(),
            n: Some(2),
            format: Format::Json,
        })
        .unwrap_err();
        assert!(err.contains("at least 3"));
        let err = execute(Command::Build {
            model: "nonagon".into(),
            n: None,
            format: Format::Json,
        })
        .unwrap_err();
        assert!(err.contains("unknown model"));
    }

    #[test]
    fn build_round_trips_through_json() {
        let out = run_cmd(Command::Build {
            model: "cyclic".into(),
            n: Some(4),
            format: Format::Json,
        });
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        let matrix = PolyMat::from_json(&v["varchenko"]).unwrap();
        assert_eq!(matrix.rows(), 9);
        let again = matrix.to_json();
        assert_eq!(again, v["varchenko"]);
    }

    #[test]
    fn exit_code_contract() {
        assert_eq!(
            run(["varchenko", "verify", "--model", "tetrahedron"]).max(0),
            EXIT_OK
        );
        assert_eq!(run(["varchenko", "build", "--model", "bogus"]), EXIT_ERROR);
    }
}
