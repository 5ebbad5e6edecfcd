use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Axis-aligned search box `lower[i] <= x[i] <= upper[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsBox<T> {
    lower: Vec<T>,
    upper: Vec<T>,
}

impl<T: Scalar> BoundsBox<T> {
    pub fn new(lower: Vec<T>, upper: Vec<T>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::invalid(format!(
                "bounds need matching non-empty lower/upper vectors (got {} and {})",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            let width = hi - lo;
            if !(lo < hi) || !width.is_finite() {
                return Err(Error::invalid(format!(
                    "dimension {i}: need lower < upper with a finite width, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval repeated over `dim` dimensions.
    pub fn uniform(dim: usize, lower: T, upper: T) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    /// Side lengths `L[i] = upper[i] - lower[i]`.
    pub fn widths(&self) -> Vec<T> {
        self.lower.iter().zip(&self.upper).map(|(&l, &u)| u - l).collect()
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Errors unless `x` has the right dimension and lies inside the box.
    pub fn check(&self, x: &[T]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::invalid(format!(
                "expected a {}-dimensional design, got {}",
                self.dim(),
                x.len()
            )));
        }
        if let Some(i) = (0..x.len()).find(|&i| !(self.lower[i] <= x[i] && x[i] <= self.upper[i])) {
            return Err(Error::invalid(format!(
                "x[{i}] = {} lies outside [{}, {}]",
                x[i], self.lower[i], self.upper[i]
            )));
        }
        Ok(())
    }

    /// Projects `x` onto the box componentwise. NaN components go to the lower bound.
    pub fn clamp(&self, x: &mut [T]) {
        for (v, (&lo, &hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = if v.is_nan() { lo } else { v.max(lo).min(hi) };
        }
    }

    pub fn sample_uniform<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<T> {
        let mut x: Vec<T> = self
            .lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| lo + (hi - lo) * T::lit(rng.random::<f64>()))
            .collect();
        // Rounding in f32 can land just past the upper bound.
        self.clamp(&mut x);
        x
    }
}
