use super::Problem;
use crate::engine::BoundsBox;
use crate::error::Result;
use crate::scalar::Scalar;

/// Welded beam design over `x = (w, L, d, h)`: weld width and length, beam
/// depth and thickness. Minimizes fabrication cost and end deflection.
#[derive(Debug, Clone)]
pub struct WeldedBeam<T> {
    bounds: BoundsBox<T>,
}

impl<T: Scalar> WeldedBeam<T> {
    pub fn new() -> Self {
        let lit = T::lit;
        Self {
            bounds: BoundsBox::new(
                vec![lit(0.125), lit(0.1), lit(0.1), lit(0.125)],
                vec![lit(2.0), lit(10.0), lit(10.0), lit(2.0)],
            )
            .expect("valid box"),
        }
    }
}

impl<T: Scalar> Default for WeldedBeam<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Intermediate quantities of the beam model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamQuantities<T> {
    /// Bending stress.
    pub sigma: T,
    pub q: T,
    pub d_half_diag: T,
    /// Polar moment of inertia of the weld group.
    pub j: T,
    /// End deflection.
    pub delta: T,
    /// Primary shear stress (written `α` in the usual statement).
    pub alpha_shear: T,
    /// Secondary shear stress (written `β`).
    pub beta_shear: T,
    pub tau: T,
    /// Buckling load.
    pub p_c: T,
}

impl<T: Scalar> BeamQuantities<T> {
    pub fn at(x: &[T]) -> Self {
        let lit = T::lit;
        let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
        let sqrt2 = lit(2.0).sqrt();
        let wd2 = (w + d) * (w + d);
        let sigma = lit(504_000.0) / (h * d * d);
        let q = lit(6000.0) * (lit(14.0) + l / lit(2.0));
        let d_half_diag = lit(0.5) * (l * l + wd2).sqrt();
        let j = sqrt2 * w * l * (l * l / lit(6.0) + wd2 / lit(2.0));
        let delta = lit(65_856.0) / (lit(30_000.0) * h * d * d * d);
        let beta_shear = q * d_half_diag / j;
        let alpha_shear = lit(6000.0) / (sqrt2 * w * l);
        let tau = (alpha_shear * alpha_shear
            + alpha_shear * beta_shear * l / d_half_diag
            + beta_shear * beta_shear)
            .sqrt();
        let p_c = lit(0.61423e6) * (d * h * h * h / lit(6.0))
            * (T::one() - d * lit(30.0 / 48.0).sqrt() / lit(28.0));
        Self {
            sigma,
            q,
            d_half_diag,
            j,
            delta,
            alpha_shear,
            beta_shear,
            tau,
            p_c,
        }
    }
}

fn cost<T: Scalar>(x: &[T]) -> T {
    let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
    T::lit(1.10471) * w * w * l + T::lit(0.04811) * d * h * (T::lit(14.0) + l)
}

/// `(cost, deflection)`.
pub fn welded_beam_evaluate<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    WeldedBeam::new().evaluate(x)
}

/// `g1..g7`, feasible iff all are `<= 0`.
pub fn welded_beam_constraints<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    WeldedBeam::new().constraints(x)
}

impl<T: Scalar> Problem<T> for WeldedBeam<T> {
    fn name(&self) -> &str {
        "beam"
    }

    fn bounds(&self) -> &BoundsBox<T> {
        &self.bounds
    }

    fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        Ok(vec![cost(x), BeamQuantities::at(x).delta])
    }

    fn constraints(&self, x: &[T]) -> Result<Vec<T>> {
        self.bounds.check(x)?;
        let lit = T::lit;
        let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
        let q = BeamQuantities::at(x);
        Ok(vec![
            w - h,
            q.delta - lit(0.25),
            q.tau - lit(13_600.0),
            q.sigma - lit(30_000.0),
            lit(0.10471) * w * w + lit(0.04811) * h * d * (lit(14.0) + l) - lit(5.0),
            lit(0.125) - w,
            lit(6000.0) - q.p_c,
        ])
    }

    fn is_constrained(&self) -> bool {
        true
    }
}
