use super::{check_samples, linspace, Problem};
use crate::engine::BoundsBox;
use crate::error::Result;
use crate::scalar::Scalar;

/// Schaffer's min-min problem: `(x^2, (x - 2)^2)` on `[-1000, 1000]`.
#[derive(Debug, Clone)]
pub struct Sch<T> {
    bounds: BoundsBox<T>,
}

impl<T: Scalar> Sch<T> {
    pub fn new() -> Self {
        Self {
            bounds: BoundsBox::uniform(1, T::lit(-1000.0), T::lit(1000.0)).expect("valid box"),
        }
    }
}

impl<T: Scalar> Default for Sch<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn objectives<T: Scalar>(x: T) -> Vec<T> {
    let two = T::lit(2.0);
    vec![x * x, (x - two) * (x - two)]
}

pub fn sch_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    Sch::new().evaluate(x)
}

impl<T: Scalar> Problem<T> for Sch<T> {
    fn name(&self) -> &str {
        "sch"
    }

    fn bounds(&self) -> &BoundsBox<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        Ok(objectives(x[0]))
    }

    fn has_reference_front(&self) -> bool {
        true
    }

    /// Pareto set is `x ∈ [0, 2]`, sampled uniformly.
    fn reference_front(&self, samples: usize) -> Result<Vec<Vec<T>>> {
        check_samples(samples)?;
        Ok(linspace(0.0, 2.0, samples).map(objectives).collect())
    }
}
