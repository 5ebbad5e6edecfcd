use crate::error::{Error, Result};
use crate::pareto::DEFAULT_ARCHIVE_CAPACITY;
use crate::scalar::Scalar;

/// Where a firefly that nothing dominates takes its random walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WalkCentre {
    /// Around its own position, so non-dominated fireflies refine their part
    /// of the front independently.
    #[default]
    Own,
    /// Around the iteration's scalarized best `g*`. Pulls every
    /// non-dominated firefly into one cluster.
    Best,
}

/// Whether a random-walk candidate replaces the walking firefly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WalkAcceptance {
    /// Keep the candidate unless the current position dominates it.
    /// Infeasible candidates are discarded.
    #[default]
    UnlessDominated,
    /// Always move, with the same redraw-then-revert handling as attraction moves.
    Always,
}

/// Parameters of one optimizer run.
///
/// Randomization: the per-dimension step at iteration `t` is
/// `max(alpha0 * decay_theta^t, alpha_min) * walk_scale * L[i] * eps`, with
/// `eps` standard Gaussian and `L[i]` the width of the search box.
///
/// Attraction: `beta0 * exp(-gamma * r^2)`, where
/// `gamma = gamma_base * mean_i(0.5 / L[i]^2)`. The characteristic distance
/// over which attraction falls by a factor `e` is `1 / sqrt(gamma)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MofaConfig<T> {
    /// Number of fireflies `n`.
    pub population: usize,
    /// Number of iterations `T`.
    pub iterations: usize,
    /// Initial randomness factor.
    pub alpha0: T,
    /// Attractiveness at zero distance.
    pub beta0: T,
    /// Multiplier on the box-scaled absorption coefficient.
    pub gamma_base: T,
    /// Geometric decay base of the randomness factor.
    pub decay_theta: T,
    /// Fraction of the box width used as the unit random-walk step.
    pub walk_scale: T,
    /// Floor on the decayed randomness factor.
    pub alpha_min: T,
    pub walk_centre: WalkCentre,
    pub walk_acceptance: WalkAcceptance,
    pub archive_capacity: usize,
    /// Uniform redraws tried after a move lands outside the feasible region.
    pub feasibility_retries: usize,
    pub seed: u64,
}

impl<T: Scalar> Default for MofaConfig<T> {
    fn default() -> Self {
        Self {
            population: 50,
            iterations: 2500,
            alpha0: T::lit(0.25),
            beta0: T::one(),
            gamma_base: T::one(),
            decay_theta: T::lit(0.975),
            walk_scale: T::lit(0.2),
            alpha_min: T::zero(),
            walk_centre: WalkCentre::Own,
            walk_acceptance: WalkAcceptance::UnlessDominated,
            archive_capacity: DEFAULT_ARCHIVE_CAPACITY,
            feasibility_retries: 10,
            seed: 0,
        }
    }
}

impl<T: Scalar> MofaConfig<T> {
    pub fn with_population(mut self, n: usize) -> Self {
        self.population = n;
        self
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn with_alpha0(mut self, alpha0: T) -> Self {
        self.alpha0 = alpha0;
        self
    }

    pub fn with_beta0(mut self, beta0: T) -> Self {
        self.beta0 = beta0;
        self
    }

    pub fn with_gamma_base(mut self, gamma: T) -> Self {
        self.gamma_base = gamma;
        self
    }

    pub fn with_decay_theta(mut self, theta: T) -> Self {
        self.decay_theta = theta;
        self
    }

    pub fn with_walk_scale(mut self, scale: T) -> Self {
        self.walk_scale = scale;
        self
    }

    pub fn with_walk(mut self, centre: WalkCentre, acceptance: WalkAcceptance) -> Self {
        self.walk_centre = centre;
        self.walk_acceptance = acceptance;
        self
    }

    /// The walk exactly as printed: every non-dominated firefly jumps to a
    /// perturbation of `g*`, `alpha = 0.25 * 0.9^t * 0.01 * L`.
    pub fn literal() -> Self {
        Self {
            decay_theta: T::lit(0.9),
            walk_scale: T::lit(0.01),
            walk_centre: WalkCentre::Best,
            walk_acceptance: WalkAcceptance::Always,
            ..Self::default()
        }
    }

    pub fn with_archive_capacity(mut self, capacity: usize) -> Self {
        self.archive_capacity = capacity;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |v: T| v >= T::zero() && v <= T::one();
        let fail = |msg: &str| Err(Error::invalid(msg.to_string()));
        if self.population == 0 {
            return fail("population must be positive");
        }
        if !unit(self.alpha0) {
            return fail("alpha0 must lie in [0, 1]");
        }
        if !unit(self.beta0) {
            return fail("beta0 must lie in [0, 1]");
        }
        if !(self.gamma_base.is_finite() && self.gamma_base >= T::zero()) {
            return fail("gamma_base must be finite and non-negative");
        }
        if !(self.decay_theta > T::zero() && self.decay_theta < T::one()) {
            return fail("decay_theta must lie in (0, 1)");
        }
        if !(self.walk_scale.is_finite() && self.walk_scale > T::zero()) {
            return fail("walk_scale must be positive");
        }
        if !(self.alpha_min.is_finite() && self.alpha_min >= T::zero()) {
            return fail("alpha_min must be non-negative");
        }
        if self.archive_capacity == 0 {
            return fail("archive capacity must be positive");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = MofaConfig::<f64>::default();
        assert_eq!(c.population, 50);
        assert_eq!(c.iterations, 2500);
        assert_eq!(c.alpha0, 0.25);
        assert_eq!(c.beta0, 1.0);
        assert_eq!(c.gamma_base, 1.0);
        assert_eq!(c.decay_theta, 0.975);
        assert_eq!(c.walk_scale, 0.2);
        assert_eq!(c.walk_centre, WalkCentre::Own);
        assert_eq!(c.walk_acceptance, WalkAcceptance::UnlessDominated);
        assert_eq!(c.archive_capacity, 100);
        assert_eq!(c.feasibility_retries, 10);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn literal_schedule() {
        let c = MofaConfig::<f64>::literal();
        assert_eq!((c.decay_theta, c.walk_scale), (0.9, 0.01));
        assert_eq!((c.walk_centre, c.walk_acceptance), (WalkCentre::Best, WalkAcceptance::Always));
        assert_eq!(c.alpha0, 0.25);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn validation_catches_bad_fields() {
        let base = MofaConfig::<f64>::default();
        assert!(base.clone().with_population(0).validate().is_err());
        assert!(base.clone().with_alpha0(1.5).validate().is_err());
        assert!(base.clone().with_beta0(-0.1).validate().is_err());
        assert!(base.clone().with_gamma_base(f64::NAN).validate().is_err());
        assert!(base.clone().with_archive_capacity(0).validate().is_err());
        let mut c = base.clone();
        c.decay_theta = 1.0;
        assert!(c.validate().is_err());
        let mut c = base;
        c.walk_scale = 0.0;
        assert!(c.validate().is_err());
    }
}
