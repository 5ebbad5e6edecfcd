use std::sync::Arc;

use mofa::engine::DEFAULT_REFERENCE_SAMPLES;
use mofa::pareto::non_dominated_filter;
use mofa::{
    problem_by_name, BoundsBox, Config, ConfigF32, EngineState, Error, Mofa, Problem, ReferenceFront,
    Result,
};

fn sorted(mut front: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    front.sort_by(|a, b| a.partial_cmp(b).unwrap());
    front
}

fn brute_dg(front: &[Vec<f64>], reference: &[Vec<f64>]) -> f64 {
    let ef: f64 = front
        .iter()
        .map(|p| {
            reference
                .iter()
                .map(|r| (p[0] - r[0]).powi(2) + (p[1] - r[1]).powi(2))
                .fold(f64::INFINITY, f64::min)
        })
        .sum();
    ef.sqrt() / front.len() as f64
}

fn check_state(problem: &dyn Problem<f64>, state: &EngineState<f64>) {
    for f in &state.population {
        assert!(problem.bounds().contains(&f.position), "{}: position left the box", problem.name());
        let again = problem.evaluate(&f.position).unwrap();
        assert!(again.iter().zip(&f.objectives).all(|(a, b)| a.to_bits() == b.to_bits()));
    }
    for e in state.archive.entries() {
        let again = problem.evaluate(&e.design).unwrap();
        assert!(again.iter().zip(&e.objectives).all(|(a, b)| a.to_bits() == b.to_bits()));
        let g = problem.constraints(&e.design).unwrap();
        assert!(g.iter().all(|&v| v <= 1e-9), "{}: infeasible archive entry {g:?}", problem.name());
    }
}

#[test]
fn every_step_keeps_bounds_cache_and_feasibility() {
    for name in mofa::PROBLEM_NAMES {
        let p = problem_by_name::<f64>(name).unwrap();
        let config = Config::default().with_population(20).with_seed(9);
        let mut state = EngineState::initialize(p.as_ref(), &config).unwrap();
        check_state(p.as_ref(), &state);
        for _ in 0..40 {
            state.step(p.as_ref(), &config).unwrap();
            check_state(p.as_ref(), &state);
            assert_eq!(state.population.len(), 20);
        }
        assert_eq!(state.iteration, 40);
    }
}

#[test]
fn literal_schedule_keeps_the_same_invariants() {
    let p = problem_by_name::<f64>("beam").unwrap();
    let config = Config::literal().with_population(20).with_seed(4);
    let mut state = EngineState::initialize(p.as_ref(), &config).unwrap();
    for _ in 0..40 {
        state.step(p.as_ref(), &config).unwrap();
        check_state(p.as_ref(), &state);
    }
}

#[test]
fn same_seed_same_result() {
    let p = problem_by_name::<f64>("zdt3").unwrap();
    let config = Config::default().with_iterations(60).with_seed(42);
    let a = Mofa::new(p.as_ref(), config.clone()).with_problem_reference(2000).unwrap().run().unwrap();
    let b = Mofa::new(p.as_ref(), config.clone()).with_problem_reference(2000).unwrap().run().unwrap();
    assert!(a.same_outcome(&b));
    let c = Mofa::new(p.as_ref(), config.with_seed(43)).with_problem_reference(2000).unwrap().run().unwrap();
    assert!(!a.same_outcome(&c));
}

#[test]
fn zero_iterations_keep_the_initial_non_dominated_set() {
    let p = problem_by_name::<f64>("sch").unwrap();
    let config = Config::default().with_iterations(0).with_seed(1);
    let state = EngineState::initialize(p.as_ref(), &config).unwrap();
    let objectives: Vec<Vec<f64>> = state.population.iter().map(|f| f.objectives.clone()).collect();
    let mut expected: Vec<Vec<f64>> = non_dominated_filter(&objectives).unwrap().into_iter().map(|i| objectives[i].clone()).collect();
    expected = sorted(expected);
    expected.dedup();

    let result = Mofa::new(p.as_ref(), config).run().unwrap();
    assert_eq!(sorted(result.front()), expected);
    assert_eq!(result.trace.len(), 1);
    assert_eq!(result.trace[0].iteration, 0);
}

#[test]
fn no_randomness_and_no_attraction_means_no_motion() {
    let p = problem_by_name::<f64>("zdt1").unwrap();
    let frozen = Config::default().with_alpha0(0.0).with_beta0(0.0).with_seed(5);
    let before = Mofa::new(p.as_ref(), frozen.clone().with_iterations(0)).run().unwrap();
    let after = Mofa::new(p.as_ref(), frozen.with_iterations(30)).run().unwrap();
    assert_eq!(sorted(before.front()), sorted(after.front()));

    let mut state = EngineState::initialize(p.as_ref(), &Config::default().with_alpha0(0.0).with_beta0(0.0)).unwrap();
    let start: Vec<Vec<f64>> = state.population.iter().map(|f| f.position.clone()).collect();
    for _ in 0..5 {
        state.step(p.as_ref(), &Config::default().with_alpha0(0.0).with_beta0(0.0)).unwrap();
    }
    let end: Vec<Vec<f64>> = state.population.iter().map(|f| f.position.clone()).collect();
    assert_eq!(start, end);
}

#[test]
fn identical_population_triggers_no_attraction() {
    let p = problem_by_name::<f64>("zdt2").unwrap();
    let config = Config::default().with_population(10).with_alpha0(0.0);
    let mut state = EngineState::initialize(p.as_ref(), &config).unwrap();
    let first = state.population[0].clone();
    for f in state.population.iter_mut() {
        *f = first.clone();
    }
    state.archive = mofa::ParetoArchive::new(config.archive_capacity).unwrap();
    let evaluations = state.diagnostics.evaluations;
    state.step(p.as_ref(), &config).unwrap();
    // Only the ten random walks were evaluated.
    assert_eq!(state.diagnostics.evaluations - evaluations, 10);
    assert_eq!(state.archive.len(), 1);
    assert!(state.population.iter().all(|f| *f == first));
}

#[test]
fn single_firefly_walks_on_its_own() {
    let p = problem_by_name::<f64>("zdt1").unwrap();
    let result = Mofa::new(p.as_ref(), Config::default().with_population(1).with_iterations(50)).run().unwrap();
    assert!(!result.archive.is_empty());
    assert_eq!(result.diagnostics.evaluations, 51);
}

#[test]
fn hundred_iterations_beat_the_initial_population_on_zdt1() {
    let p = problem_by_name::<f64>("zdt1").unwrap();
    let reference = p.reference_front(2000).unwrap();
    let config = Config::default().with_seed(0);
    let state = EngineState::initialize(p.as_ref(), &config).unwrap();
    let objectives: Vec<Vec<f64>> = state.population.iter().map(|f| f.objectives.clone()).collect();
    let initial: Vec<Vec<f64>> = non_dominated_filter(&objectives).unwrap().into_iter().map(|i| objectives[i].clone()).collect();

    let result = Mofa::new(p.as_ref(), config.with_iterations(100)).with_trace(false).run().unwrap();
    let before = brute_dg(&initial, &reference);
    let after = brute_dg(&result.front(), &reference);
    assert!(after < before, "{after} !< {before}");
}

#[test]
fn sch_reaches_the_published_magnitude() {
    let p = problem_by_name::<f64>("sch").unwrap();
    let reference = Arc::new(ReferenceFront::new(&p.reference_front(DEFAULT_REFERENCE_SAMPLES).unwrap()).unwrap());
    let hits = (0..11)
        .filter(|&seed| {
            let config = Config::default().with_iterations(500).with_seed(seed);
            let r = Mofa::new(p.as_ref(), config).with_reference(Some(reference.clone())).with_trace(false).run().unwrap();
            r.final_trace().unwrap().dg.unwrap() <= 5e-5
        })
        .count();
    assert!(hits >= 8, "only {hits} of 11 seeds reached 5e-5");
}

#[test]
fn trace_follows_the_checkpoint_cadence() {
    let p = problem_by_name::<f64>("zdt1").unwrap();
    let r = Mofa::new(p.as_ref(), Config::default().with_iterations(1035)).with_problem_reference(1000).unwrap().run().unwrap();
    let iters: Vec<usize> = r.trace.iter().map(|t| t.iteration).collect();
    let mut expected: Vec<usize> = (0..=1000).collect();
    expected.extend([1010, 1020, 1030, 1035]);
    assert_eq!(iters, expected);
    assert!(r.trace.iter().all(|t| t.dg.is_some() && t.ef.is_some() && t.best_psi.is_none()));

    let beam = problem_by_name::<f64>("beam").unwrap();
    let r = Mofa::new(beam.as_ref(), Config::default().with_iterations(5)).run().unwrap();
    assert!(r.trace.iter().skip(1).all(|t| t.best_psi.is_some() && t.dg.is_none()));
}

#[test]
fn single_precision_runs() {
    let p = problem_by_name::<f32>("zdt1").unwrap();
    let r = Mofa::new(p.as_ref(), ConfigF32::default().with_iterations(100)).with_problem_reference(1000).unwrap().run().unwrap();
    assert!(r.archive.iter().all(|e| p.bounds().contains(&e.design)));
    assert!(r.final_trace().unwrap().dg.unwrap() < 0.1);
}

/// ZDT1 whose evaluator returns NaN whenever `x1 > 0.9`.
struct Holey {
    inner: Box<dyn Problem<f64>>,
}

impl Problem<f64> for Holey {
    fn name(&self) -> &str {
        "holey"
    }
    fn bounds(&self) -> &BoundsBox<f64> {
        self.inner.bounds()
    }
    fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x[0] > 0.9 {
            Ok(vec![f64::NAN, 0.0])
        } else {
            self.inner.evaluate(x)
        }
    }
}

#[test]
fn invalid_evaluations_are_rolled_back() {
    let p = Holey { inner: problem_by_name("zdt1").unwrap() };
    let r = Mofa::new(&p, Config::default().with_iterations(100).with_seed(2)).run().unwrap();
    assert!(r.diagnostics.rollbacks > 0);
    assert!(r.archive.iter().all(|e| e.objectives.iter().all(|v| v.is_finite()) && e.design[0] <= 0.9));
}

/// Every point violates its single constraint.
struct Impossible {
    bounds: BoundsBox<f64>,
}

impl Problem<f64> for Impossible {
    fn name(&self) -> &str {
        "impossible"
    }
    fn bounds(&self) -> &BoundsBox<f64> {
        &self.bounds
    }
    fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        Ok(vec![x[0], 1.0 - x[0]])
    }
    fn constraints(&self, _x: &[f64]) -> Result<Vec<f64>> {
        Ok(vec![1.0])
    }
}

#[test]
fn infeasible_problem_fails_initialization() {
    let p = Impossible { bounds: BoundsBox::uniform(2, 0.0, 1.0).unwrap() };
    let config = Config::default().with_population(4);
    match Mofa::new(&p, config).run() {
        Err(Error::InitializationFailed { problem, draws }) => {
            assert_eq!(problem, "impossible");
            assert_eq!(draws, 4 * 11);
        }
        other => panic!("expected initialization failure, got {other:?}"),
    }
}
