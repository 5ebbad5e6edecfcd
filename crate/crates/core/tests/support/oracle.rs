//! Independent oracles shared by the test targets. Nothing here calls into
//! the library.
#![allow(dead_code)]

// Dominance written straight from the definition.
pub fn oracle_dominates(u: &[f64], v: &[f64]) -> bool {
    let mut strict = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return false;
        }
        if a < b {
            strict = true;
        }
    }
    strict
}

pub fn oracle_filter(points: &[Vec<f64>]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| !(0..points.len()).any(|j| j != i && oracle_dominates(&points[j], &points[i])))
        .collect()
}

pub fn oracle_front_error(est: &[Vec<f64>], reference: &[Vec<f64>]) -> f64 {
    est.iter()
        .map(|e| {
            reference
                .iter()
                .map(|r| e.iter().zip(r).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
        })
        .sum()
}

// Standalone evaluators typed in from the printed formulas.
pub fn beam(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
    let sigma = 504000.0 / (h * d * d);
    let q = 6000.0 * (14.0 + l / 2.0);
    let dd = 0.5 * (l * l + (w + d) * (w + d)).sqrt();
    let j = 2f64.sqrt() * w * l * (l * l / 6.0 + (w + d) * (w + d) / 2.0);
    let delta = 65856.0 / (30000.0 * h * d * d * d);
    let beta = q * dd / j;
    let alpha = 6000.0 / (2f64.sqrt() * w * l);
    let tau = (alpha * alpha + alpha * beta * l / dd + beta * beta).sqrt();
    let p = 0.61423e6 * (d * h * h * h / 6.0) * (1.0 - d * (30.0f64 / 48.0).sqrt() / 28.0);
    let f = vec![1.10471 * w * w * l + 0.04811 * d * h * (14.0 + l), delta];
    let g = vec![
        w - h,
        delta - 0.25,
        tau - 13600.0,
        sigma - 30000.0,
        0.10471 * w * w + 0.04811 * h * d * (14.0 + l) - 5.0,
        0.125 - w,
        6000.0 - p,
    ];
    (f, g)
}

pub fn brake(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let (r, rr, force, s) = (x[0], x[1], x[2], x[3].round());
    let a2 = rr.powi(2) - r.powi(2);
    let a3 = rr.powi(3) - r.powi(3);
    let f = vec![4.9e-5 * a2 * (s - 1.0), 9.82e6 * a2 / (force * s * a3)];
    let g = vec![
        20.0 - (rr - r),
        2.5 * (s + 1.0) - 30.0,
        force / (3.14 * a2) - 0.4,
        2.22e-3 * force * a3 / (a2 * a2) - 1.0,
        900.0 - 0.0266 * force * s * a3 / a2,
    ];
    (f, g)
}
