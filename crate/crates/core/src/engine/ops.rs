//! The elementary firefly moves.

use rand::Rng;
use rand_distr::StandardNormal;

use super::bounds::BoundsBox;
use super::config::MofaConfig;
use super::Firefly;
use crate::error::{Error, Result};
use crate::pareto::{scalarize_unchecked, WeightVector};
use crate::scalar::Scalar;

/// `beta0 * exp(-gamma * r^2)`.
pub fn attractiveness<T: Scalar>(r: T, beta0: T, gamma: T) -> Result<T> {
    if !(r >= T::zero()) {
        return Err(Error::invalid(format!("distance must be non-negative, got {r}")));
    }
    Ok(beta0 * (-gamma * r * r).exp())
}

/// Box-derived step and absorption parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledParams<T> {
    /// `walk_scale * L[i]`.
    pub alpha_vec: Vec<T>,
    /// `0.5 / L[i]^2`.
    pub gamma_vec: Vec<T>,
    /// Scalar absorption used in the attraction term:
    /// `gamma_base * mean(gamma_vec)`.
    pub gamma: T,
}

pub fn scale_params<T: Scalar>(bounds: &BoundsBox<T>, config: &MofaConfig<T>) -> ScaledParams<T> {
    let widths = bounds.widths();
    let half = T::lit(0.5);
    let alpha_vec: Vec<T> = widths.iter().map(|&l| config.walk_scale * l).collect();
    let gamma_vec: Vec<T> = widths.iter().map(|&l| half / (l * l)).collect();
    let mean = gamma_vec.iter().copied().sum::<T>() / T::lit(gamma_vec.len() as f64);
    ScaledParams {
        alpha_vec,
        gamma_vec,
        gamma: config.gamma_base * mean,
    }
}

/// `alpha0 * theta^t`.
pub fn decay_alpha<T: Scalar>(alpha0: T, t: usize, theta: T) -> T {
    alpha0 * theta.powf(T::lit(t as f64))
}

fn perturb<T: Scalar, R: Rng + ?Sized>(x: &mut [T], alpha_t: T, alpha_vec: &[T], rng: &mut R) {
    for (v, &a) in x.iter_mut().zip(alpha_vec) {
        let eps: f64 = rng.sample(StandardNormal);
        *v = *v + alpha_t * a * T::lit(eps);
    }
}

/// Moves `xi` towards the brighter `xj`:
/// `xi + beta(r) * (xj - xi) + alpha_t * alpha_vec ∘ eps`, clamped to `bounds`.
#[allow(clippy::too_many_arguments)]
pub fn move_towards<T: Scalar, R: Rng + ?Sized>(
    xi: &[T],
    xj: &[T],
    alpha_t: T,
    alpha_vec: &[T],
    gamma: T,
    beta0: T,
    bounds: &BoundsBox<T>,
    rng: &mut R,
) -> Result<Vec<T>> {
    let d = bounds.dim();
    if xi.len() != d || xj.len() != d || alpha_vec.len() != d {
        return Err(Error::invalid(format!(
            "dimension mismatch: xi {}, xj {}, alpha {}, bounds {d}",
            xi.len(),
            xj.len(),
            alpha_vec.len()
        )));
    }
    let r2 = xi
        .iter()
        .zip(xj)
        .fold(T::zero(), |acc, (&a, &b)| acc + (a - b) * (a - b));
    let beta = attractiveness(r2.sqrt(), beta0, gamma)?;
    let mut out: Vec<T> = xi
        .iter()
        .zip(xj)
        .map(|(&a, &b)| a + beta * (b - a))
        .collect();
    perturb(&mut out, alpha_t, alpha_vec, rng);
    bounds.clamp(&mut out);
    Ok(out)
}

/// Random walk around the scalarized best: `g_star + alpha_t * alpha_vec ∘ eps`, clamped.
pub fn random_walk_best<T: Scalar, R: Rng + ?Sized>(
    g_star: &[T],
    alpha_t: T,
    alpha_vec: &[T],
    bounds: &BoundsBox<T>,
    rng: &mut R,
) -> Result<Vec<T>> {
    if g_star.len() != bounds.dim() || alpha_vec.len() != bounds.dim() {
        return Err(Error::invalid("dimension mismatch in random walk"));
    }
    let mut out = g_star.to_vec();
    perturb(&mut out, alpha_t, alpha_vec, rng);
    bounds.clamp(&mut out);
    Ok(out)
}

/// Index of the firefly minimizing `psi` under `w`, restricted to feasible
/// fireflies when there are any. Ties go to the lowest index.
pub fn find_best_scalarized<T: Scalar>(population: &[Firefly<T>], w: &WeightVector<T>) -> Result<usize> {
    if population.is_empty() {
        return Err(Error::invalid("population must not be empty"));
    }
    if population.iter().any(|f| f.objectives.len() != w.len()) {
        return Err(Error::invalid("weight count does not match objective count"));
    }
    let any_feasible = population.iter().any(|f| f.feasible);
    let mut best: Option<(usize, T)> = None;
    for (i, f) in population.iter().enumerate() {
        if any_feasible && !f.feasible {
            continue;
        }
        let psi = scalarize_unchecked(&f.objectives, w);
        match best {
            Some((_, b)) if !(psi < b) => {}
            _ => best = Some((i, psi)),
        }
    }
    Ok(best.map(|(i, _)| i).unwrap_or(0))
}
