//! Random convex weights and weighted-sum scalarization.

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Non-negative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector<T>(Vec<T>);

impl<T: Scalar> WeightVector<T> {
    /// Normalizes raw non-negative draws so they sum to one.
    pub fn from_draws(draws: &[T]) -> Result<Self> {
        if draws.len() < 2 {
            return Err(Error::invalid("weight vector needs at least two components"));
        }
        if draws.iter().any(|p| !p.is_finite() || *p < T::zero()) {
            return Err(Error::invalid("weight draws must be finite and non-negative"));
        }
        let total: T = draws.iter().copied().sum();
        if total <= T::zero() {
            return Err(Error::invalid("weight draws sum to zero"));
        }
        Ok(Self(draws.iter().map(|&p| p / total).collect()))
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Draws `k` uniform numbers in `[0, 1)` and rescales them to sum to one.
pub fn random_weights<T: Scalar, R: Rng + ?Sized>(k: usize, rng: &mut R) -> Result<WeightVector<T>> {
    if k < 2 {
        return Err(Error::invalid(format!("random weights need K >= 2, got {k}")));
    }
    loop {
        let draws: Vec<T> = (0..k).map(|_| T::lit(rng.random::<f64>())).collect();
        if draws.iter().copied().sum::<T>() > T::zero() {
            return WeightVector::from_draws(&draws);
        }
    }
}

/// `ψ = Σ w_k f_k`.
pub fn weighted_scalarize<T: Scalar>(objectives: &[T], w: &WeightVector<T>) -> Result<T> {
    if objectives.len() != w.len() {
        return Err(Error::invalid(format!(
            "objective count {} does not match weight count {}",
            objectives.len(),
            w.len()
        )));
    }
    Ok(scalarize_unchecked(objectives, w))
}

#[inline]
pub(crate) fn scalarize_unchecked<T: Scalar>(objectives: &[T], w: &WeightVector<T>) -> T {
    objectives
        .iter()
        .zip(&w.0)
        .fold(T::zero(), |acc, (&f, &wk)| acc + wk * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn normalization_examples() {
        assert_eq!(WeightVector::from_draws(&[0.2, 0.2]).unwrap().as_slice(), &[0.5, 0.5]);
        let w = WeightVector::<f64>::from_draws(&[0.3, 0.1]).unwrap();
        assert!((w.as_slice()[0] - 0.75).abs() < 1e-12);
        assert!((w.as_slice()[1] - 0.25).abs() < 1e-12);
    }

    #[test]
    fn random_weights_are_convex() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 2..6 {
            for _ in 0..200 {
                let w: WeightVector<f64> = random_weights(k, &mut rng).unwrap();
                let sum: f64 = w.as_slice().iter().sum();
                assert!((sum - 1.0).abs() < 1e-12);
                assert!(w.as_slice().iter().all(|&x| (0.0..=1.0).contains(&x)));
            }
        }
    }

    #[test]
    fn random_weights_reject_single_objective() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(random_weights::<f64, _>(1, &mut rng).is_err());
    }

    #[test]
    fn scalarization_examples() {
        let half = WeightVector::from_draws(&[1.0, 1.0]).unwrap();
        assert_eq!(weighted_scalarize(&[2.0, 4.0], &half).unwrap(), 3.0);
        let first = WeightVector::from_draws(&[1.0, 0.0]).unwrap();
        assert_eq!(weighted_scalarize(&[2.0, 4.0], &first).unwrap(), 2.0);
        assert_eq!(weighted_scalarize(&[0.0, 0.0], &half).unwrap(), 0.0);
        assert!(weighted_scalarize(&[1.0, 2.0, 3.0], &half).is_err());
    }
}
