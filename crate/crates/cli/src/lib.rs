//! Experiment harness for the `mofa` optimizer: seeded multi-run
//! experiments, pooled fronts, trace and front files, and benchmark tables.
//!
//! Files written by `run` into `--out`:
//! `<problem>_seed<s>_front.<ext>`, `<problem>_seed<s>_trace.<ext>`,
//! `<problem>_pooled_front.<ext>` and `<problem>_summary.json`.
//! `bench` writes `bench.csv`, `bench.json` and `bench.txt`.

pub mod args;
pub mod bench;
mod error;
pub mod experiment;
pub mod output;

use std::io::Write;
use std::path::{Path, PathBuf};

pub use args::{BenchArgs, Cli, Command, Format, FrontArgs, RunArgs};
pub use error::CliError;
pub use experiment::{pool_fronts, run_experiment, Experiment, ExperimentSpec, Summary};

use mofa::problem_by_name;

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => cmd_run(&args, out).map(|_| ()),
        Command::Front(args) => cmd_front(&args, out),
        Command::Bench(args) => cmd_bench(&args, out).map(|_| ()),
    }
}

fn say(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

fn sci(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.3e}")).unwrap_or_else(|| "-".into())
}

pub fn front_path(dir: &Path, problem: &str, seed: u64, format: Format) -> PathBuf {
    dir.join(format!("{problem}_seed{seed}_front.{}", format.extension()))
}

pub fn trace_path(dir: &Path, problem: &str, seed: u64, format: Format) -> PathBuf {
    dir.join(format!("{problem}_seed{seed}_trace.{}", format.extension()))
}

pub fn pooled_path(dir: &Path, problem: &str, format: Format) -> PathBuf {
    dir.join(format!("{problem}_pooled_front.{}", format.extension()))
}

pub fn summary_path(dir: &Path, problem: &str) -> PathBuf {
    dir.join(format!("{problem}_summary.json"))
}

pub fn cmd_run(args: &RunArgs, out: &mut dyn Write) -> Result<Summary, CliError> {
    let spec = ExperimentSpec {
        problem: args.problem.clone(),
        config: args.tuning.config(),
        runs: args.runs,
        reference_samples: args.output.samples,
        trace: args.output.trace_enabled(),
    };
    let experiment = run_experiment(&spec)?;
    let dir = &args.output.out;
    let format = args.output.format;
    for r in &experiment.runs {
        output::write_front(&front_path(dir, &spec.problem, r.seed, format), &r.front(), format)?;
        output::write_trace(
            &trace_path(dir, &spec.problem, r.seed, format),
            &r.trace,
            experiment.has_reference(),
            format,
        )?;
    }
    output::write_front(&pooled_path(dir, &spec.problem, format), &experiment.pooled, format)?;
    let summary = experiment.summary(args.output.timing)?;
    output::write_json(&summary_path(dir, &spec.problem), &summary)?;

    for r in &summary.per_run {
        let metric = if experiment.has_reference() {
            format!("dg {}  ef {}", sci(r.dg), sci(r.ef))
        } else {
            format!("best_psi {}", sci(r.best_psi))
        };
        say(out, &format!("{} seed {}: {} points, {metric}\n", summary.problem, r.seed, r.archive_size))?;
    }
    say(
        out,
        &format!(
            "{}: {} runs, median dg {}, pooled front {} points (dg {}), written to {}\n",
            summary.problem,
            summary.runs,
            sci(summary.dg_median),
            summary.pooled_points,
            sci(summary.pooled_dg),
            dir.display()
        ),
    )?;
    Ok(summary)
}

pub fn cmd_front(args: &FrontArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let problem = problem_by_name::<f64>(&args.problem)?;
    let front = problem.reference_front(args.samples)?;
    match &args.out {
        Some(path) => output::write_front(path, &front, args.format),
        None => say(out, &output::front_text(&front, args.format)),
    }
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<Vec<bench::BenchRow>, CliError> {
    let problems: Vec<&str> = args.problems.iter().map(|p| p.trim()).filter(|p| !p.is_empty()).collect();
    if problems.is_empty() {
        return Err(CliError::Usage("the benchmark suite is empty; pass --problems".into()));
    }
    // Reject typos before spending time on the earlier problems.
    for p in &problems {
        problem_by_name::<f64>(p)?;
    }
    let mut rows = Vec::new();
    for p in problems {
        let spec = ExperimentSpec {
            problem: p.to_string(),
            config: args.tuning.config(),
            runs: args.runs,
            reference_samples: args.output.samples,
            trace: args.output.trace_enabled(),
        };
        let summary = run_experiment(&spec)?.summary(args.output.timing)?;
        rows.push(bench::BenchRow::new(&summary));
    }
    let dir = &args.output.out;
    let table = bench::render_table(&rows);
    output::write_text(&dir.join("bench.txt"), &table)?;
    output::write_text(&dir.join("bench.csv"), &bench::render_csv(&rows))?;
    output::write_json(&dir.join("bench.json"), &rows)?;
    say(out, &table)?;
    Ok(rows)
}
