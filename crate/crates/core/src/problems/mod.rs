//! Benchmark problems: SCH, ZDT1-3 and LZ with analytic fronts, plus the
//! constrained welded-beam and disc-brake designs.

mod brake;
mod lz;
mod sch;
mod welded_beam;
mod zdt;

pub use brake::{disc_brake_constraints, disc_brake_evaluate, DiscBrake};
pub use lz::{lz_evaluate, Lz};
pub use sch::{sch_evaluate, Sch};
pub use welded_beam::{welded_beam_constraints, welded_beam_evaluate, BeamQuantities, WeldedBeam};
pub use zdt::{zdt1_evaluate, zdt2_evaluate, zdt3_evaluate, Zdt, ZdtVariant};

use crate::engine::BoundsBox;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Registry identifiers, in presentation order.
pub const PROBLEM_NAMES: [&str; 7] = ["sch", "zdt1", "zdt2", "zdt3", "lz", "beam", "brake"];

/// A box-bounded minimization problem with optional inequality constraints
/// `g_i(x) <= 0`. Implementations must be pure.
pub trait Problem<T: Scalar>: Send + Sync {
    fn name(&self) -> &str;

    fn bounds(&self) -> &BoundsBox<T>;

    fn dimension(&self) -> usize {
        self.bounds().dim()
    }

    fn objective_count(&self) -> usize {
        2
    }

    /// Objective vector at `x`. Errors when `x` is outside the bounds.
    fn evaluate(&self, x: &[T]) -> Result<Vec<T>>;

    /// Constraint values `g_i(x)`; empty for unconstrained problems.
    fn constraints(&self, _x: &[T]) -> Result<Vec<T>> {
        Ok(Vec::new())
    }

    fn is_constrained(&self) -> bool {
        false
    }

    fn has_reference_front(&self) -> bool {
        false
    }

    /// `samples` points of the analytic Pareto front, sorted by `f1` and
    /// mutually non-dominated.
    fn reference_front(&self, _samples: usize) -> Result<Vec<Vec<T>>> {
        Err(Error::Unsupported(format!(
            "`{}` has no analytic reference front",
            self.name()
        )))
    }
}

/// True when every constraint value is finite and `<= 0`.
pub fn is_feasible<T: Scalar>(constraints: &[T]) -> bool {
    constraints.iter().all(|g| *g <= T::zero())
}

/// Looks a problem up by registry name using default dimensions.
pub fn problem_by_name<T: Scalar>(name: &str) -> Result<Box<dyn Problem<T>>> {
    Ok(match name {
        "sch" => Box::new(Sch::new()),
        "zdt1" => Box::new(Zdt::new(ZdtVariant::Zdt1)),
        "zdt2" => Box::new(Zdt::new(ZdtVariant::Zdt2)),
        "zdt3" => Box::new(Zdt::new(ZdtVariant::Zdt3)),
        "lz" => Box::new(Lz::new()),
        "beam" => Box::new(WeldedBeam::new()),
        "brake" => Box::new(DiscBrake::new()),
        other => return Err(Error::UnknownProblem(other.to_string())),
    })
}

pub(crate) fn check_samples(samples: usize) -> Result<()> {
    if samples < 2 {
        return Err(Error::invalid("a reference front needs at least two samples"));
    }
    Ok(())
}

/// `samples` evenly spaced values covering `[lo, hi]`, endpoints included.
pub(crate) fn linspace<T: Scalar>(lo: f64, hi: f64, samples: usize) -> impl Iterator<Item = T> {
    let step = (hi - lo) / (samples - 1) as f64;
    (0..samples).map(move |k| {
        if k + 1 == samples {
            T::lit(hi)
        } else {
            T::lit(lo + step * k as f64)
        }
    })
}
