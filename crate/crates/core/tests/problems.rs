use mofa::pareto::{generational_distance, non_dominated_filter};
use mofa::problems::{Lz, Zdt, ZdtVariant};
use mofa::{problem_by_name, Problem, PROBLEM_NAMES};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[path = "support/oracle.rs"]
mod oracle;

fn sample(problem: &dyn Problem<f64>, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let b = problem.bounds();
    b.lower().iter().zip(b.upper()).map(|(&lo, &hi)| rng.random_range(lo..=hi)).collect()
}

fn assert_close(actual: &[f64], expected: &[f64], what: &str) {
    assert_eq!(actual.len(), expected.len(), "{what}");
    for (a, e) in actual.iter().zip(expected) {
        let rel = (a - e).abs() / e.abs().max(f64::MIN_POSITIVE);
        assert!(rel <= 1e-10 || a == e, "{what}: {a} vs {e} (rel {rel:e})");
    }
}

#[test]
fn beam_matches_standalone_oracle() {
    let beam = problem_by_name::<f64>("beam").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..100 {
        let x = sample(beam.as_ref(), &mut rng);
        let (f, g) = oracle::beam(&x);
        assert_close(&beam.evaluate(&x).unwrap(), &f, "beam objectives");
        assert_close(&beam.constraints(&x).unwrap(), &g, "beam constraints");
    }
    let (f, g) = oracle::beam(&[0.5, 5.0, 5.0, 0.5]);
    assert_close(&beam.evaluate(&[0.5, 5.0, 5.0, 0.5]).unwrap(), &f, "beam fixed point");
    assert_close(&beam.constraints(&[0.5, 5.0, 5.0, 0.5]).unwrap(), &g, "beam fixed point");
}

#[test]
fn brake_matches_standalone_oracle() {
    let brake = problem_by_name::<f64>("brake").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..100 {
        let x = sample(brake.as_ref(), &mut rng);
        let (f, g) = oracle::brake(&x);
        assert_close(&brake.evaluate(&x).unwrap(), &f, "brake objectives");
        assert_close(&brake.constraints(&x).unwrap(), &g, "brake constraints");
    }
}

#[test]
fn evaluators_are_pure() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in PROBLEM_NAMES {
        let p = problem_by_name::<f64>(name).unwrap();
        for _ in 0..20 {
            let x = sample(p.as_ref(), &mut rng);
            let (f1, f2) = (p.evaluate(&x).unwrap(), p.evaluate(&x).unwrap());
            assert!(f1.iter().zip(&f2).all(|(a, b)| a.to_bits() == b.to_bits()), "{name}");
            let (g1, g2) = (p.constraints(&x).unwrap(), p.constraints(&x).unwrap());
            assert!(g1.iter().zip(&g2).all(|(a, b)| a.to_bits() == b.to_bits()), "{name}");
        }
    }
}

#[test]
fn out_of_bounds_is_rejected() {
    for name in PROBLEM_NAMES {
        let p = problem_by_name::<f64>(name).unwrap();
        let mut x = p.bounds().upper().to_vec();
        x[0] += 1.0;
        assert!(p.evaluate(&x).is_err(), "{name}");
    }
}

#[test]
fn pareto_sets_land_on_their_fronts() {
    let zdt1 = Zdt::<f64>::new(ZdtVariant::Zdt1);
    let zdt2 = Zdt::<f64>::new(ZdtVariant::Zdt2);
    let lz = Lz::<f64>::new();
    for i in 0..=200 {
        let x1 = i as f64 / 200.0;
        let mut x = vec![0.0; 30];
        x[0] = x1;
        let f = zdt1.evaluate(&x).unwrap();
        assert!((f[0] - x1).abs() <= 1e-12 && (f[1] - (1.0 - x1.sqrt())).abs() <= 1e-12);
        let f = zdt2.evaluate(&x).unwrap();
        assert!((f[0] - x1).abs() <= 1e-12 && (f[1] - (1.0 - x1 * x1)).abs() <= 1e-12);

        // x_j = sin(6 pi x1 + j pi / d), with 1-based j.
        let ps: Vec<f64> = (1..=30)
            .map(|j| if j == 1 { x1 } else { (6.0 * std::f64::consts::PI * x1 + j as f64 * std::f64::consts::PI / 30.0).sin() })
            .collect();
        let f = lz.evaluate(&ps).unwrap();
        assert!((f[0] - x1).abs() <= 1e-12, "lz f1 at {x1}: {}", f[0]);
        assert!((f[1] - (1.0 - x1.sqrt())).abs() <= 1e-12, "lz f2 at {x1}: {}", f[1]);
        assert_eq!(lz.pareto_set_point(x1), ps);
    }
}

proptest! {
    #[test]
    fn lz_is_monotone_off_the_pareto_set(
        x1 in 0.0..=1.0f64,
        j in 1usize..30,
        delta in -0.5..0.5f64,
    ) {
        let lz = Lz::<f64>::new();
        let on = lz.pareto_set_point(x1);
        let mut off = on.clone();
        off[j] = (off[j] + delta).clamp(-1.0, 1.0);
        let (a, b) = (lz.evaluate(&on).unwrap(), lz.evaluate(&off).unwrap());
        prop_assert!(b[0] >= a[0] && b[1] >= a[1]);
    }
}

#[test]
fn lz_perturbation_raises_both_objectives() {
    let lz = Lz::<f64>::new();
    let x: Vec<f64> = lz.pareto_set_point(0.25).into_iter().enumerate().map(|(i, v)| if i == 0 { v } else { (v + 0.1).min(1.0) }).collect();
    let f = lz.evaluate(&x).unwrap();
    assert!(f[0] > 0.25 && f[1] > 0.5, "{f:?}");
}

#[test]
fn reference_fronts_are_sorted_and_non_dominated() {
    for name in ["sch", "zdt1", "zdt2", "zdt3", "lz"] {
        let p = problem_by_name::<f64>(name).unwrap();
        let front = p.reference_front(500).unwrap();
        assert!(front.windows(2).all(|w| w[0][0] <= w[1][0]), "{name} not sorted by f1");
        if name != "zdt3" {
            assert_eq!(front.len(), 500);
            assert!(front.windows(2).all(|w| w[0][1] > w[1][1]), "{name} f2 not decreasing");
        } else {
            assert!(front.len() <= 500);
            for f in &front {
                assert!((0.0..=0.852).contains(&f[0]), "{f:?}");
                assert!((-0.774..=1.0).contains(&f[1]), "{f:?}");
            }
        }
        assert_eq!(non_dominated_filter(&front).unwrap().len(), front.len(), "{name}");
    }
    let zdt1 = problem_by_name::<f64>("zdt1").unwrap().reference_front(3).unwrap();
    assert_eq!(zdt1.first().unwrap(), &vec![0.0, 1.0]);
    assert_eq!(zdt1.last().unwrap(), &vec![1.0, 0.0]);
}

#[test]
fn coarse_reference_is_close_to_dense_one() {
    // Every coarse point lies on the curve, so its distance to the dense
    // sampling is at most half the dense spacing; bound that spacing by the
    // largest gap between consecutive dense points.
    let m = 250;
    for name in ["sch", "zdt1", "zdt2", "zdt3", "lz"] {
        let p = problem_by_name::<f64>(name).unwrap();
        let coarse = p.reference_front(m).unwrap();
        let dense = p.reference_front(4 * m).unwrap();
        let gap = dense
            .windows(2)
            .map(|w| ((w[0][0] - w[1][0]).powi(2) + (w[0][1] - w[1][1]).powi(2)).sqrt())
            .filter(|&g| name != "zdt3" || g < 0.05)
            .fold(0.0, f64::max);
        let dg = generational_distance(&coarse, &dense).unwrap();
        let bound = (coarse.len() as f64).sqrt() * gap / 2.0 / coarse.len() as f64;
        assert!(dg <= bound, "{name}: {dg} > {bound}");
    }
}

#[test]
fn constrained_problems_have_no_reference_front() {
    for name in ["beam", "brake"] {
        assert!(problem_by_name::<f64>(name).unwrap().reference_front(10).is_err());
    }
}
