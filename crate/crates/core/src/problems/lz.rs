use std::f64::consts::PI;

use super::{check_samples, linspace, Problem};
use crate::engine::BoundsBox;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const LZ_DEFAULT_DIM: usize = 30;

/// Two-objective problem whose Pareto set is the curve
/// `x_j = sin(6π x_1 + jπ/d)`, `j = 2..d`; front `f2 = 1 - sqrt(f1)`.
///
/// `x_1 ∈ [0, 1]`; tail variables live in `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct Lz<T> {
    bounds: BoundsBox<T>,
}

impl<T: Scalar> Lz<T> {
    pub fn new() -> Self {
        Self::with_dim(LZ_DEFAULT_DIM).expect("default dimension is valid")
    }

    pub fn with_dim(dim: usize) -> Result<Self> {
        Ok(Self {
            bounds: lz_bounds(dim)?,
        })
    }

    /// Point of the Pareto set with first coordinate `x1`.
    pub fn pareto_set_point(&self, x1: T) -> Vec<T> {
        let d = self.bounds.dim();
        let mut x = vec![x1; d];
        for (idx, v) in x.iter_mut().enumerate().skip(1) {
            *v = pareto_coordinate(x1, idx + 1, d);
        }
        x
    }
}

impl<T: Scalar> Default for Lz<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn lz_bounds<T: Scalar>(dim: usize) -> Result<BoundsBox<T>> {
    // |J1| = 0 below three variables.
    if dim < 3 {
        return Err(Error::invalid("LZ needs at least three variables"));
    }
    let mut lower = vec![-T::one(); dim];
    lower[0] = T::zero();
    BoundsBox::new(lower, vec![T::one(); dim])
}

/// `sin(6π x1 + jπ/d)` for the 1-based index `j`.
fn pareto_coordinate<T: Scalar>(x1: T, j: usize, d: usize) -> T {
    (T::lit(6.0 * PI) * x1 + T::lit(j as f64 * PI / d as f64)).sin()
}

pub fn lz_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    lz_bounds(x.len())?.check(x)?;
    Ok(objectives(x))
}

fn objectives<T: Scalar>(x: &[T]) -> Vec<T> {
    let d = x.len();
    let x1 = x[0];
    let (mut odd, mut n_odd) = (T::zero(), 0usize);
    let (mut even, mut n_even) = (T::zero(), 0usize);
    for (idx, &xj) in x.iter().enumerate().skip(1) {
        let j = idx + 1;
        let r = xj - pareto_coordinate(x1, j, d);
        if j % 2 == 1 {
            odd = odd + r * r;
            n_odd += 1;
        } else {
            even = even + r * r;
            n_even += 1;
        }
    }
    let two = T::lit(2.0);
    vec![
        x1 + two * odd / T::lit(n_odd as f64),
        T::one() - x1.sqrt() + two * even / T::lit(n_even as f64),
    ]
}

impl<T: Scalar> Problem<T> for Lz<T> {
    fn name(&self) -> &str {
        "lz"
    }

    fn bounds(&self) -> &BoundsBox<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        Ok(objectives(x))
    }

    fn has_reference_front(&self) -> bool {
        true
    }

    fn reference_front(&self, samples: usize) -> Result<Vec<Vec<T>>> {
        check_samples(samples)?;
        Ok(linspace::<T>(0.0, 1.0, samples)
            .map(|f1| vec![f1, T::one() - f1.sqrt()])
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pareto_set_examples() {
        let lz = Lz::<f64>::new();
        let f = lz.evaluate(&lz.pareto_set_point(0.25)).unwrap();
        assert!((f[0] - 0.25).abs() < 1e-15 && (f[1] - 0.5).abs() < 1e-15);
        let f = lz.evaluate(&lz.pareto_set_point(0.0)).unwrap();
        assert_eq!(f, vec![0.0, 1.0]);
    }

    #[test]
    fn perturbation_raises_both_objectives() {
        let lz = Lz::<f64>::new();
        let mut x = lz.pareto_set_point(0.25);
        for v in x.iter_mut().skip(1) {
            // Stay inside [-1, 1].
            *v = if *v > 0.0 { *v - 0.1 } else { *v + 0.1 };
        }
        let f = lz_evaluate(&x).unwrap();
        assert!(f[0] > 0.25 && f[1] > 0.5);
    }

    #[test]
    fn bounds_are_enforced() {
        let mut x = Lz::<f64>::new().pareto_set_point(0.5);
        x[0] = -0.01;
        assert!(lz_evaluate(&x).is_err());
        assert!(lz_evaluate(&[0.5, 0.0]).is_err());
    }
}
