//! Seeded multi-run experiments and the pooled M-point front.

use std::sync::Arc;
use std::time::Instant;

use mofa::pareto::non_dominated_filter;
use mofa::{problem_by_name, Config, DynProblem, Mofa, Outcome, ParetoArchive, Reference};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub problem: String,
    /// Configuration of the first run; run `k` uses `seed + k`.
    pub config: Config,
    pub runs: usize,
    pub reference_samples: usize,
    pub trace: bool,
}

pub struct Experiment {
    pub spec: ExperimentSpec,
    pub problem: DynProblem,
    pub reference: Option<Arc<Reference>>,
    /// Results in seed order.
    pub runs: Vec<Outcome>,
    /// Non-dominated union of the run archives, truncated to `runs * n`
    /// points and sorted by `f1`.
    pub pooled: Vec<Vec<f64>>,
    pub wall_seconds: f64,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<DynProblem, CliError> {
        let problem = problem_by_name::<f64>(&self.problem)?;
        if self.runs == 0 {
            return Err(CliError::Usage("--runs must be at least 1".into()));
        }
        if self.reference_samples < 2 {
            return Err(CliError::Usage("--samples must be at least 2".into()));
        }
        self.config.validate()?;
        Ok(problem)
    }

    pub fn seed(&self, k: usize) -> u64 {
        self.config.seed.wrapping_add(k as u64)
    }
}

/// Runs every seed of `spec`, in parallel.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Experiment, CliError> {
    let started = Instant::now();
    let problem = spec.validate()?;
    let reference = if problem.has_reference_front() {
        let points = problem.reference_front(spec.reference_samples)?;
        Some(Arc::new(Reference::new(&points)?))
    } else {
        None
    };
    let runs = (0..spec.runs)
        .into_par_iter()
        .map(|k| {
            let config = Config { seed: spec.seed(k), ..spec.config.clone() };
            Mofa::new(problem.as_ref(), config)
                .with_reference(reference.clone())
                .with_trace(spec.trace)
                .run()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let fronts: Vec<Vec<Vec<f64>>> = runs.iter().map(Outcome::front).collect();
    let pooled = pool_fronts(&fronts, spec.runs * spec.config.population)?;
    Ok(Experiment {
        spec: spec.clone(),
        problem,
        reference,
        runs,
        pooled,
        wall_seconds: started.elapsed().as_secs_f64(),
    })
}

/// Non-dominated union of `fronts`, duplicates removed. When more than
/// `limit` points survive, the least crowded are dropped the same way the
/// run archives truncate. Sorted by `f1`.
pub fn pool_fronts(fronts: &[Vec<Vec<f64>>], limit: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let union: Vec<&Vec<f64>> = fronts.iter().flatten().collect();
    if union.is_empty() {
        return Ok(Vec::new());
    }
    let keep = non_dominated_filter(&union)?;
    let mut archive = ParetoArchive::new(limit.max(1))?;
    for i in keep {
        archive.insert(&[], union[i])?;
    }
    let mut pooled: Vec<Vec<f64>> = archive.objectives().map(<[f64]>::to_vec).collect();
    pooled.sort_by(|a, b| a.partial_cmp(b).expect("finite objectives"));
    Ok(pooled)
}

fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[m] } else { (v[m - 1] + v[m]) / 2.0 })
}

/// Median of the values that are present; `None` unless every run has one.
fn median_all(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let v: Option<Vec<f64>> = values.collect();
    v.and_then(|v| median(&v))
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunRecord {
    pub seed: u64,
    pub archive_size: usize,
    pub dg: Option<f64>,
    pub ef: Option<f64>,
    pub dg_500: Option<f64>,
    pub ef_1000: Option<f64>,
    pub ef_2500: Option<f64>,
    pub best_psi: Option<f64>,
    pub evaluations: u64,
    pub infeasible_moves: u64,
    pub retries: u64,
    pub reverts: u64,
    pub rollbacks: u64,
    pub wall_seconds: Option<f64>,
}

/// The per-problem summary record.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Summary {
    pub problem: String,
    pub n: usize,
    pub iters: usize,
    pub runs: usize,
    pub seed: u64,
    pub reference_samples: usize,
    pub dg_median: Option<f64>,
    pub dg_best: Option<f64>,
    pub dg_worst: Option<f64>,
    /// D_g at iteration 500, when the run was that long and traced.
    pub dg_500_median: Option<f64>,
    pub dg_500_best: Option<f64>,
    pub ef_median: Option<f64>,
    pub ef_1000_median: Option<f64>,
    pub ef_2500_median: Option<f64>,
    pub pooled_points: usize,
    pub pooled_dg: Option<f64>,
    pub pooled_ef: Option<f64>,
    /// Only filled when timing is requested, so summaries stay reproducible.
    pub wall_seconds: Option<f64>,
    pub per_run: Vec<RunRecord>,
}

impl Experiment {
    pub fn has_reference(&self) -> bool {
        self.reference.is_some()
    }

    pub fn summary(&self, timing: bool) -> Result<Summary, CliError> {
        let ef_at = |r: &Outcome, t: usize| r.trace_at(t).and_then(|p| p.ef);
        let per_run: Vec<RunRecord> = self
            .runs
            .iter()
            .map(|r| {
                let last = r.final_trace();
                RunRecord {
                    seed: r.seed,
                    archive_size: r.archive.len(),
                    dg: last.and_then(|p| p.dg),
                    ef: last.and_then(|p| p.ef),
                    dg_500: r.trace_at(500).and_then(|p| p.dg),
                    ef_1000: ef_at(r, 1000),
                    ef_2500: ef_at(r, 2500),
                    best_psi: last.and_then(|p| p.best_psi),
                    evaluations: r.diagnostics.evaluations,
                    infeasible_moves: r.diagnostics.infeasible_moves,
                    retries: r.diagnostics.retries,
                    reverts: r.diagnostics.reverts,
                    rollbacks: r.diagnostics.rollbacks,
                    wall_seconds: timing.then_some(r.wall_seconds),
                }
            })
            .collect();
        let dgs: Option<Vec<f64>> = per_run.iter().map(|r| r.dg).collect();
        let dg_500: Option<Vec<f64>> = per_run.iter().map(|r| r.dg_500).collect();
        let (pooled_dg, pooled_ef) = match (&self.reference, self.pooled.is_empty()) {
            (Some(reference), false) => (
                Some(reference.generational_distance(&self.pooled)?),
                Some(reference.front_error(&self.pooled)?),
            ),
            _ => (None, None),
        };
        let min = |v: &[f64]| v.iter().cloned().reduce(f64::min);
        let max = |v: &[f64]| v.iter().cloned().reduce(f64::max);
        Ok(Summary {
            problem: self.spec.problem.clone(),
            n: self.spec.config.population,
            iters: self.spec.config.iterations,
            runs: self.spec.runs,
            seed: self.spec.config.seed,
            reference_samples: self.spec.reference_samples,
            dg_median: dgs.as_deref().and_then(median),
            dg_best: dgs.as_deref().and_then(min),
            dg_worst: dgs.as_deref().and_then(max),
            dg_500_median: dg_500.as_deref().and_then(median),
            dg_500_best: dg_500.as_deref().and_then(min),
            ef_median: median_all(per_run.iter().map(|r| r.ef)),
            ef_1000_median: median_all(per_run.iter().map(|r| r.ef_1000)),
            ef_2500_median: median_all(per_run.iter().map(|r| r.ef_2500)),
            pooled_points: self.pooled.len(),
            pooled_dg,
            pooled_ef,
            wall_seconds: timing.then_some(self.wall_seconds),
            per_run,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median(&[3.0]), Some(3.0));
        assert_eq!(median(&[3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), Some(2.5));
        assert_eq!(median(&[]), None);
        assert_eq!(median_all([Some(1.0), None].into_iter()), None);
    }

    #[test]
    fn pooling_filters_and_truncates() {
        let a = vec![vec![0.0, 1.0], vec![0.5, 0.5], vec![1.0, 0.0]];
        let b = vec![vec![0.4, 0.4], vec![0.0, 1.0], vec![0.9, 0.2]];
        let pooled = pool_fronts(&[a.clone(), b], 10).unwrap();
        assert_eq!(pooled, vec![vec![0.0, 1.0], vec![0.4, 0.4], vec![0.9, 0.2], vec![1.0, 0.0]]);
        let small = pool_fronts(&[a], 2).unwrap();
        assert_eq!(small, vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!(pool_fronts(&[], 5).unwrap().is_empty());
    }
}
