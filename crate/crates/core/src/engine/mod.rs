//! The multiobjective firefly iteration.
//!
//! Each iteration draws one random weight vector and picks the scalarized best
//! `g*`. Every ordered pair `(i, j)` of feasible fireflies is then compared:
//! when `j` dominates `i`, firefly `i` moves towards `j` and is re-evaluated on
//! the spot. Fireflies that nothing dominated take a random walk, by default
//! around their own position and kept only when not dominated by where they
//! were (see [`WalkCentre`] and [`WalkAcceptance`]). Every feasible evaluation
//! is offered to the Pareto archive.

mod bounds;
mod config;
mod ops;

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use bounds::BoundsBox;
pub use config::{MofaConfig, WalkAcceptance, WalkCentre};
pub use ops::{
    attractiveness, decay_alpha, find_best_scalarized, move_towards, random_walk_best,
    scale_params, ScaledParams,
};

use crate::error::{Error, Result};
use crate::pareto::{
    dominates_unchecked, random_weights, scalarize_unchecked, ArchiveEntry, ParetoArchive,
    ReferenceFront,
};
use crate::problems::{is_feasible, Problem};
use crate::scalar::{all_finite, Scalar};

/// Reference-front resolution used when a run builds its own reference.
pub const DEFAULT_REFERENCE_SAMPLES: usize = 1_000_000;

/// Metrics are recorded every iteration up to this one, then every
/// [`TRACE_STRIDE`] iterations.
pub const TRACE_DENSE_UNTIL: usize = 1000;
pub const TRACE_STRIDE: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct Firefly<T> {
    pub position: Vec<T>,
    pub objectives: Vec<T>,
    /// All inequality constraints hold.
    pub feasible: bool,
}

/// Counters describing how a run dealt with infeasible and invalid moves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub evaluations: u64,
    /// Moves that landed outside the feasible region.
    pub infeasible_moves: u64,
    /// Uniform redraws attempted after infeasible moves.
    pub retries: u64,
    /// Moves abandoned because every redraw was infeasible.
    pub reverts: u64,
    /// Moves rolled back because the evaluator failed or returned non-finite values.
    pub rollbacks: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TracePoint<T> {
    /// Completed iterations when the point was recorded.
    pub iteration: usize,
    /// Generational distance of the archive (problems with a reference front).
    pub dg: Option<T>,
    /// Front error of the archive (problems with a reference front).
    pub ef: Option<T>,
    /// `psi(g*)` under that iteration's weights (problems without one).
    pub best_psi: Option<T>,
}

#[derive(Debug, Clone)]
pub struct RunResult<T> {
    pub archive: Vec<ArchiveEntry<T>>,
    pub trace: Vec<TracePoint<T>>,
    pub diagnostics: Diagnostics,
    pub wall_seconds: f64,
    pub seed: u64,
}

impl<T: Scalar> RunResult<T> {
    pub fn front(&self) -> Vec<Vec<T>> {
        self.archive.iter().map(|e| e.objectives.clone()).collect()
    }

    /// Trace point recorded at exactly `iteration`, if any.
    pub fn trace_at(&self, iteration: usize) -> Option<&TracePoint<T>> {
        self.trace
            .binary_search_by_key(&iteration, |p| p.iteration)
            .ok()
            .map(|i| &self.trace[i])
    }

    pub fn final_trace(&self) -> Option<&TracePoint<T>> {
        self.trace.last()
    }

    /// Everything except wall time, for determinism checks.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.archive == other.archive
            && self.trace == other.trace
            && self.diagnostics == other.diagnostics
            && self.seed == other.seed
    }
}

/// Whether iteration `t` (completed count) is a trace checkpoint for a run of
/// `total` iterations.
pub fn is_checkpoint(t: usize, total: usize) -> bool {
    t <= TRACE_DENSE_UNTIL || t % TRACE_STRIDE == 0 || t == total
}

/// Mutable state of one run.
#[derive(Debug, Clone)]
pub struct EngineState<T> {
    pub population: Vec<Firefly<T>>,
    pub archive: ParetoArchive<T>,
    /// Completed iterations.
    pub iteration: usize,
    /// Scalarized best of the latest iteration.
    pub g_star: Vec<T>,
    /// `psi(g*)` of the latest iteration.
    pub best_psi: Option<T>,
    pub diagnostics: Diagnostics,
    params: ScaledParams<T>,
    rng: ChaCha8Rng,
}

enum Evaluation<T> {
    Valid { objectives: Vec<T>, feasible: bool },
    Invalid,
}

fn evaluate<T: Scalar, P: Problem<T> + ?Sized>(
    problem: &P,
    x: &[T],
    diagnostics: &mut Diagnostics,
) -> Evaluation<T> {
    diagnostics.evaluations += 1;
    let objectives = match problem.evaluate(x) {
        Ok(f) if all_finite(&f) => f,
        _ => return Evaluation::Invalid,
    };
    let feasible = match problem.constraints(x) {
        Ok(g) => is_feasible(&g),
        Err(_) => return Evaluation::Invalid,
    };
    Evaluation::Valid { objectives, feasible }
}

impl<T: Scalar> EngineState<T> {
    /// Draws the initial population uniformly inside the bounds.
    ///
    /// Each firefly is redrawn up to `feasibility_retries` times until it is
    /// feasible; infeasible fireflies are kept when no redraw succeeds. Fails
    /// only if not a single feasible design turned up.
    pub fn initialize<P: Problem<T> + ?Sized>(problem: &P, config: &MofaConfig<T>) -> Result<Self> {
        config.validate()?;
        let k = problem.objective_count();
        if k < 2 {
            return Err(Error::invalid("at least two objectives are required"));
        }
        let bounds = problem.bounds();
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut diagnostics = Diagnostics::default();
        let mut archive = ParetoArchive::new(config.archive_capacity)?;
        let mut population = Vec::with_capacity(config.population);
        let attempts = config.feasibility_retries + 1;
        let mut any_feasible = false;

        for _ in 0..config.population {
            let mut fallback = None;
            let mut chosen = None;
            for _ in 0..attempts {
                let x = bounds.sample_uniform(&mut rng);
                match evaluate(problem, &x, &mut diagnostics) {
                    Evaluation::Valid { objectives, feasible: true } => {
                        archive.insert(&x, &objectives)?;
                        chosen = Some(Firefly { position: x, objectives, feasible: true });
                        break;
                    }
                    Evaluation::Valid { objectives, feasible: false } => {
                        fallback = Some(Firefly { position: x, objectives, feasible: false });
                    }
                    Evaluation::Invalid => {}
                }
            }
            match chosen.or(fallback) {
                Some(f) => {
                    any_feasible |= f.feasible;
                    population.push(f);
                }
                None => {
                    return Err(Error::InitializationFailed {
                        problem: problem.name().to_string(),
                        draws: config.population * attempts,
                    })
                }
            }
        }
        if !any_feasible {
            return Err(Error::InitializationFailed {
                problem: problem.name().to_string(),
                draws: config.population * attempts,
            });
        }

        let g_star = population[0].position.clone();
        Ok(Self {
            population,
            archive,
            iteration: 0,
            g_star,
            best_psi: None,
            diagnostics,
            params: scale_params(bounds, config),
            rng,
        })
    }

    /// Runs one full iteration.
    pub fn step<P: Problem<T> + ?Sized>(&mut self, problem: &P, config: &MofaConfig<T>) -> Result<()> {
        let bounds = problem.bounds();
        let n = self.population.len();
        let alpha_t = decay_alpha(config.alpha0, self.iteration, config.decay_theta).max(config.alpha_min);

        let w = random_weights::<T, _>(problem.objective_count(), &mut self.rng)?;
        let best = find_best_scalarized(&self.population, &w)?;
        self.g_star = self.population[best].position.clone();
        self.best_psi = Some(scalarize_unchecked(&self.population[best].objectives, &w));

        let mut dominated = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (fi, fj) = (&self.population[i], &self.population[j]);
                if !(fi.feasible && fj.feasible) || !dominates_unchecked(&fj.objectives, &fi.objectives) {
                    continue;
                }
                dominated[i] = true;
                let candidate = move_towards(
                    &fi.position,
                    &fj.position,
                    alpha_t,
                    &self.params.alpha_vec,
                    self.params.gamma,
                    config.beta0,
                    bounds,
                    &mut self.rng,
                )?;
                self.relocate(i, candidate, problem, config)?;
            }
        }

        for i in (0..n).filter(|&i| !dominated[i]) {
            let centre = match config.walk_centre {
                WalkCentre::Own => &self.population[i].position,
                WalkCentre::Best => &self.g_star,
            };
            let candidate = random_walk_best(centre, alpha_t, &self.params.alpha_vec, bounds, &mut self.rng)?;
            match config.walk_acceptance {
                WalkAcceptance::Always => self.relocate(i, candidate, problem, config)?,
                WalkAcceptance::UnlessDominated => self.try_walk(i, candidate, problem)?,
            }
        }

        self.iteration += 1;
        Ok(())
    }

    /// Moves firefly `i` to `candidate`, applying the redraw-then-revert
    /// policy for infeasible moves and rolling back invalid evaluations.
    fn relocate<P: Problem<T> + ?Sized>(
        &mut self,
        i: usize,
        candidate: Vec<T>,
        problem: &P,
        config: &MofaConfig<T>,
    ) -> Result<()> {
        match evaluate(problem, &candidate, &mut self.diagnostics) {
            Evaluation::Invalid => {
                self.diagnostics.rollbacks += 1;
                Ok(())
            }
            Evaluation::Valid { objectives, feasible: true } => self.accept(i, candidate, objectives),
            Evaluation::Valid { .. } => {
                self.diagnostics.infeasible_moves += 1;
                for _ in 0..config.feasibility_retries {
                    self.diagnostics.retries += 1;
                    let x = problem.bounds().sample_uniform(&mut self.rng);
                    if let Evaluation::Valid { objectives, feasible: true } =
                        evaluate(problem, &x, &mut self.diagnostics)
                    {
                        return self.accept(i, x, objectives);
                    }
                }
                self.diagnostics.reverts += 1;
                Ok(())
            }
        }
    }

    /// Keeps `candidate` unless it is infeasible, invalid, or dominated by
    /// firefly `i`. Feasible candidates reach the archive either way.
    fn try_walk<P: Problem<T> + ?Sized>(&mut self, i: usize, candidate: Vec<T>, problem: &P) -> Result<()> {
        match evaluate(problem, &candidate, &mut self.diagnostics) {
            Evaluation::Invalid => {
                self.diagnostics.rollbacks += 1;
                Ok(())
            }
            Evaluation::Valid { objectives, feasible: true } => {
                let current = &self.population[i];
                if current.feasible && dominates_unchecked(&current.objectives, &objectives) {
                    self.archive.insert(&candidate, &objectives)?;
                    Ok(())
                } else {
                    self.accept(i, candidate, objectives)
                }
            }
            Evaluation::Valid { .. } => {
                self.diagnostics.infeasible_moves += 1;
                self.diagnostics.reverts += 1;
                Ok(())
            }
        }
    }

    fn accept(&mut self, i: usize, position: Vec<T>, objectives: Vec<T>) -> Result<()> {
        self.archive.insert(&position, &objectives)?;
        self.population[i] = Firefly {
            position,
            objectives,
            feasible: true,
        };
        Ok(())
    }
}

/// A configured run: problem, parameters, and optional reference front for
/// the convergence trace.
pub struct Mofa<'a, T: Scalar, P: Problem<T> + ?Sized> {
    problem: &'a P,
    config: MofaConfig<T>,
    reference: Option<Arc<ReferenceFront<T>>>,
    trace: bool,
}

impl<'a, T: Scalar, P: Problem<T> + ?Sized> Mofa<'a, T, P> {
    pub fn new(problem: &'a P, config: MofaConfig<T>) -> Self {
        Self {
            problem,
            config,
            reference: None,
            trace: true,
        }
    }

    /// Reference front used for the `dg`/`ef` trace.
    pub fn with_reference(mut self, reference: Option<Arc<ReferenceFront<T>>>) -> Self {
        self.reference = reference;
        self
    }

    /// Builds the reference front from the problem's analytic form, if it has one.
    pub fn with_problem_reference(mut self, samples: usize) -> Result<Self> {
        self.reference = if self.problem.has_reference_front() {
            let points = self.problem.reference_front(samples)?;
            Some(Arc::new(ReferenceFront::new(&points)?))
        } else {
            None
        };
        Ok(self)
    }

    /// When disabled only the final iteration is recorded.
    pub fn with_trace(mut self, trace: bool) -> Self {
        self.trace = trace;
        self
    }

    pub fn config(&self) -> &MofaConfig<T> {
        &self.config
    }

    pub fn run(&self) -> Result<RunResult<T>> {
        let started = Instant::now();
        let mut state = EngineState::initialize(self.problem, &self.config)?;
        let total = self.config.iterations;
        let mut trace = Vec::new();
        let record = |state: &EngineState<T>, trace: &mut Vec<TracePoint<T>>| -> Result<()> {
            trace.push(self.trace_point(state)?);
            Ok(())
        };
        if self.trace || total == 0 {
            record(&state, &mut trace)?;
        }
        while state.iteration < total {
            state.step(self.problem, &self.config)?;
            let t = state.iteration;
            if (self.trace && is_checkpoint(t, total)) || t == total {
                record(&state, &mut trace)?;
            }
        }
        Ok(RunResult {
            archive: state.archive.into_entries(),
            trace,
            diagnostics: state.diagnostics,
            wall_seconds: started.elapsed().as_secs_f64(),
            seed: self.config.seed,
        })
    }

    fn trace_point(&self, state: &EngineState<T>) -> Result<TracePoint<T>> {
        let mut point = TracePoint {
            iteration: state.iteration,
            dg: None,
            ef: None,
            best_psi: None,
        };
        match &self.reference {
            Some(reference) if !state.archive.is_empty() => {
                let front: Vec<&[T]> = state.archive.objectives().collect();
                let ef = reference.front_error(&front)?;
                point.ef = Some(ef);
                point.dg = Some(ef.sqrt() / T::lit(front.len() as f64));
            }
            Some(_) => {}
            None => point.best_psi = state.best_psi,
        }
        Ok(point)
    }
}

/// Runs `problem` with `config`, tracing against a
/// [`DEFAULT_REFERENCE_SAMPLES`]-point reference front when one exists.
pub fn run<T: Scalar, P: Problem<T> + ?Sized>(problem: &P, config: &MofaConfig<T>) -> Result<RunResult<T>> {
    Mofa::new(problem, config.clone())
        .with_problem_reference(DEFAULT_REFERENCE_SAMPLES)?
        .run()
}
