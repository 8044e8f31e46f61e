//! Command-line front end for `specladder-core`: closed-form spectra,
//! oracle verification and consistency checks of user data.

pub mod args;
pub mod config;
pub mod consistency;
pub mod error;
pub mod render;
pub mod verify;

use std::fmt::Write as _;

use specladder_core::Model;

use args::{Cli, Command, Format, ModelArgs, OracleKind, RunConfig};
use config::Config;
use error::CliError;

/// Everything a command writes, and its exit code. Buffered so that
/// concurrent runs can be emitted whole.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn failed(err: &CliError) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
        }
    }
}

pub fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Spectrum { model, args } => spectrum(model.into(), &args),
        Command::Perturb { args } => spectrum(Model::PerturbedHo, &args),
        Command::Verify { all: true, args, .. } => verify_all(&args),
        Command::Verify { model, args, .. } => {
            let model = model.expect("clap requires a model without --all");
            resolved(model.into(), &args, true).unwrap_or_else(|e| Output::failed(&e))
        }
        Command::Consistency {
            file,
            format,
            tol_abs,
            tol_rel,
        } => consistency_cmd(&file, format, tol_abs, tol_rel).unwrap_or_else(|e| Output::failed(&e)),
    }
}

fn spectrum(model: Model, args: &ModelArgs) -> Output {
    resolved(model, args, false).unwrap_or_else(|e| Output::failed(&e))
}

fn resolved(model: Model, args: &ModelArgs, verify: bool) -> Result<Output, CliError> {
    let run = RunConfig::resolve(model, args, verify)?;
    if run.oracle == OracleKind::Off {
        let spec = verify::model_spectrum(&run)?;
        return Ok(Output {
            stdout: render::spectrum(&spec, run.format, run.physical),
            ..Output::default()
        });
    }
    Ok(verify_one(&run, &Config::load()?))
}

/// Verifies one model; errors become part of the output.
pub fn verify_one(run: &RunConfig, config: &Config) -> Output {
    match verify::verify(run, config) {
        Ok((spec, v)) => {
            let mut stderr = String::new();
            for w in &v.report.warnings {
                let _ = writeln!(stderr, "warning: {}: {w}", run.model);
            }
            Output {
                stdout: render::verification(&spec, &v, run.format),
                stderr,
                code: if v.pass() { 0 } else { 1 },
            }
        }
        Err(e) => Output::failed(&e),
    }
}

fn verify_all(args: &ModelArgs) -> Output {
    let only_format = ModelArgs {
        format: args.format,
        ..ModelArgs::default()
    };
    if format!("{args:?}") != format!("{only_format:?}") {
        return Output::failed(&CliError::invalid("all", "only --format may be combined with --all"));
    }
    let config = match Config::load() {
        Ok(c) => c,
        Err(e) => return Output::failed(&e),
    };
    let runs: Vec<RunConfig> = Model::ALL
        .iter()
        .map(|&m| {
            let mut run = RunConfig::defaults(m, args.format);
            run.oracle = args::default_oracle(m);
            run
        })
        .collect();
    let outputs: Vec<Output> = std::thread::scope(|scope| {
        let handles: Vec<_> = runs
            .iter()
            .map(|run| scope.spawn(|| verify_one(run, &config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Output::failed(&CliError::Input("verification panicked".into()))))
            .collect()
    });
    let mut all = Output::default();
    for (run, out) in runs.iter().zip(outputs) {
        match args.format {
            Format::Json => {
                // One compact document per line.
                if let Ok(value) = serde_json::from_str::<serde_json::Value>(&out.stdout) {
                    all.stdout.push_str(&value.to_string());
                    all.stdout.push('\n');
                }
            }
            _ => {
                let _ = writeln!(all.stdout, "== {} ==", run.model);
                all.stdout.push_str(&out.stdout);
                all.stdout.push('\n');
            }
        }
        all.stderr.push_str(&out.stderr);
        all.code = all.code.max(out.code);
    }
    all
}

fn consistency_cmd(
    file: &std::path::Path,
    format: Format,
    tol_abs: Option<f64>,
    tol_rel: Option<f64>,
) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
    let input = consistency::parse(&text)?;
    let base = Config::load()?.consistency.tolerance();
    let tol = specladder_core::Tolerance::new(tol_abs.unwrap_or(base.abs), tol_rel.unwrap_or(base.rel));
    let report = consistency::check(&input, &tol)?;
    Ok(Output {
        stdout: consistency::render(&report, format),
        stderr: String::new(),
        code: if report.consistent { 0 } else { 1 },
    })
}
