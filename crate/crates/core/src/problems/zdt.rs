use std::f64::consts::PI;

use super::{check_samples, linspace, Problem};
use crate::engine::BoundsBox;
use crate::error::{Error, Result};
use crate::pareto::non_dominated_filter;
use crate::scalar::Scalar;

pub const ZDT_DEFAULT_DIM: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZdtVariant {
    /// Convex front `f2 = 1 - sqrt(f1)`.
    Zdt1,
    /// Non-convex front `f2 = 1 - f1^2`.
    Zdt2,
    /// Disconnected front.
    Zdt3,
}

impl ZdtVariant {
    fn name(self) -> &'static str {
        match self {
            ZdtVariant::Zdt1 => "zdt1",
            ZdtVariant::Zdt2 => "zdt2",
            ZdtVariant::Zdt3 => "zdt3",
        }
    }

    /// `f2` as a function of `f1` and `g`.
    fn f2<T: Scalar>(self, f1: T, g: T) -> T {
        let ratio = f1 / g;
        match self {
            ZdtVariant::Zdt1 => g * (T::one() - ratio.sqrt()),
            ZdtVariant::Zdt2 => g * (T::one() - ratio * ratio),
            ZdtVariant::Zdt3 => {
                g * (T::one() - ratio.sqrt() - ratio * (T::lit(10.0 * PI) * f1).sin())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Zdt<T> {
    variant: ZdtVariant,
    bounds: BoundsBox<T>,
}

impl<T: Scalar> Zdt<T> {
    /// The 30-dimensional instance.
    pub fn new(variant: ZdtVariant) -> Self {
        Self::with_dim(variant, ZDT_DEFAULT_DIM).expect("default dimension is valid")
    }

    pub fn with_dim(variant: ZdtVariant, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::invalid("ZDT problems need at least two variables"));
        }
        Ok(Self {
            variant,
            bounds: BoundsBox::uniform(dim, T::zero(), T::one())?,
        })
    }

    pub fn variant(&self) -> ZdtVariant {
        self.variant
    }
}

/// `g = 1 + 9 * sum(x[1..]) / (d - 1)`.
fn zdt_g<T: Scalar>(x: &[T]) -> T {
    let tail: T = x[1..].iter().copied().sum();
    T::one() + T::lit(9.0) * tail / T::lit((x.len() - 1) as f64)
}

fn evaluate_variant<T: Scalar>(variant: ZdtVariant, x: &[T]) -> Result<Vec<T>> {
    if x.len() < 2 {
        return Err(Error::invalid("ZDT problems need at least two variables"));
    }
    if let Some(i) = x.iter().position(|v| !(*v >= T::zero() && *v <= T::one())) {
        return Err(Error::invalid(format!("x[{i}] = {} lies outside [0, 1]", x[i])));
    }
    let f1 = x[0];
    Ok(vec![f1, variant.f2(f1, zdt_g(x))])
}

pub fn zdt1_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    evaluate_variant(ZdtVariant::Zdt1, x)
}

pub fn zdt2_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    evaluate_variant(ZdtVariant::Zdt2, x)
}

pub fn zdt3_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    evaluate_variant(ZdtVariant::Zdt3, x)
}

impl<T: Scalar> Problem<T> for Zdt<T> {
    fn name(&self) -> &str {
        self.variant.name()
    }

    fn bounds(&self) -> &BoundsBox<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        evaluate_variant(self.variant, x)
    }

    fn has_reference_front(&self) -> bool {
        true
    }

    /// The `g = 1` curve on a uniform `f1` grid. For ZDT3 the dominated parts
    /// of the curve are filtered out, so fewer than `samples` points remain.
    fn reference_front(&self, samples: usize) -> Result<Vec<Vec<T>>> {
        check_samples(samples)?;
        let curve: Vec<Vec<T>> = linspace::<T>(0.0, 1.0, samples)
            .map(|f1| vec![f1, self.variant.f2(f1, T::one())])
            .collect();
        if self.variant != ZdtVariant::Zdt3 {
            return Ok(curve);
        }
        let keep = non_dominated_filter(&curve)?;
        Ok(keep.into_iter().map(|i| curve[i].clone()).collect())
    }
}
