//! Multiobjective firefly optimization.
//!
//! * [`pareto`]: dominance, non-dominated filtering, the bounded archive,
//!   random weights and front metrics.
//! * [`engine`]: the firefly moves and the iteration loop.
//! * [`problems`]: SCH, ZDT1-3, LZ, welded beam and disc brake.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`.

pub mod engine;
mod error;
pub mod pareto;
pub mod problems;
mod scalar;

pub use engine::{
    run, BoundsBox, Diagnostics, EngineState, Firefly, Mofa, MofaConfig, RunResult, TracePoint, WalkAcceptance, WalkCentre,
};
pub use error::{Error, Result};
pub use pareto::{ParetoArchive, ReferenceFront, WeightVector};
pub use problems::{problem_by_name, Problem, PROBLEM_NAMES};
pub use scalar::Scalar;

pub type Config = MofaConfig<f64>;
pub type Archive = ParetoArchive<f64>;
pub type Outcome = RunResult<f64>;
pub type Reference = ReferenceFront<f64>;
pub type Bounds = BoundsBox<f64>;
pub type Weights = WeightVector<f64>;
pub type DynProblem = Box<dyn Problem<f64>>;

pub type ConfigF32 = MofaConfig<f32>;
pub type ArchiveF32 = ParetoArchive<f32>;
pub type OutcomeF32 = RunResult<f32>;
