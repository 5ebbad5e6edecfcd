use super::Problem;
use crate::engine::BoundsBox;
use crate::error::Result;
use crate::scalar::Scalar;

/// Multiple-disc brake over `x = (r, R, F, s)`: inner and outer radius,
/// engaging force and number of friction surfaces. Minimizes mass and
/// stopping time.
///
/// `s` is searched as a real number and rounded to the nearest integer
/// before every evaluation.
#[derive(Debug, Clone)]
pub struct DiscBrake<T> {
    bounds: BoundsBox<T>,
}

impl<T: Scalar> DiscBrake<T> {
    pub fn new() -> Self {
        let lit = T::lit;
        Self {
            bounds: BoundsBox::new(
                vec![lit(55.0), lit(75.0), lit(1000.0), lit(2.0)],
                vec![lit(80.0), lit(110.0), lit(3000.0), lit(20.0)],
            )
            .expect("valid box"),
        }
    }
}

impl<T: Scalar> Default for DiscBrake<T> {
    fn default() -> Self {
        Self::new()
    }
}

struct Terms<T> {
    r: T,
    big_r: T,
    force: T,
    s: T,
    /// `R^2 - r^2`
    area: T,
    /// `R^3 - r^3`
    cube: T,
}

impl<T: Scalar> Terms<T> {
    fn at(x: &[T]) -> Self {
        let (r, big_r, force) = (x[0], x[1], x[2]);
        Self {
            r,
            big_r,
            force,
            s: x[3].round(),
            area: big_r * big_r - r * r,
            cube: big_r * big_r * big_r - r * r * r,
        }
    }
}

pub fn disc_brake_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    DiscBrake::new().evaluate(x)
}

pub fn disc_brake_constraints<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    DiscBrake::new().constraints(x)
}

impl<T: Scalar> Problem<T> for DiscBrake<T> {
    fn name(&self) -> &str {
        "brake"
    }

    fn bounds(&self) -> &BoundsBox<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        let t = Terms::at(x);
        let mass = T::lit(4.9e-5) * t.area * (t.s - T::one());
        let time = T::lit(9.82e6) * t.area / (t.force * t.s * t.cube);
        Ok(vec![mass, time])
    }

    fn constraints(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        let lit = T::lit;
        let t = Terms::at(x);
        Ok(vec![
            lit(20.0) - (t.big_r - t.r),
            lit(2.5) * (t.s + T::one()) - lit(30.0),
            t.force / (lit(3.14) * t.area) - lit(0.4),
            lit(2.22e-3) * t.force * t.cube / (t.area * t.area) - T::one(),
            lit(900.0) - lit(0.0266) * t.force * t.s * t.cube / t.area,
        ])
    }

    fn is_constrained(&self) -> bool {
        true
    }
}
