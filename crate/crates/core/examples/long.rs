use mofa::*;
use std::sync::Arc;
fn env(k: &str, d: f64) -> f64 { std::env::var(k).ok().map(|s| s.parse().unwrap()).unwrap_or(d) }
fn med(mut v: Vec<f64>) -> f64 { v.sort_by(|a, b| a.partial_cmp(b).unwrap()); v[v.len() / 2] }
fn main() {
    let args: Vec<String> = std::env::args().collect();
    for name in &args[1..] {
        let p = problem_by_name::<f64>(name).unwrap();
        let reference = Some(Arc::new(ReferenceFront::new(&p.reference_front(1_000_000).unwrap()).unwrap()));
        let rs: Vec<_> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..11).map(|seed| { let p = &p; let reference = reference.clone(); s.spawn(move || {
                let mut c = Config::default().with_iterations(env("ITERS", 2500.0) as usize).with_seed(seed);
                c.walk_scale = env("W", 0.2); c.decay_theta = env("TH", 0.975); c.alpha_min = env("AMIN", 0.0);
                Mofa::new(p.as_ref(), c).with_reference(reference).run().unwrap()
            })}).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let dg500 = med(rs.iter().map(|r| r.trace_at(500).unwrap().dg.unwrap()).collect());
        let ok = rs.iter().filter(|r| r.trace_at(2500).map(|b| b.ef.unwrap() <= r.trace_at(1000).unwrap().ef.unwrap()).unwrap_or(false)).count();
        let ef = med(rs.iter().map(|r| r.trace_at(2500).map(|b| b.ef.unwrap()).unwrap_or(f64::NAN)).collect());
        let fig2 = rs.iter().filter(|r| r.trace_at(500).unwrap().dg.unwrap() < r.trace_at(10).unwrap().dg.unwrap()).count();
        for r in &rs { print!("{:.3e}/{:.3e} ", r.trace_at(1000).unwrap().ef.unwrap(), r.trace_at(2500).unwrap().ef.unwrap()); }
        println!("{name:5} dg500 {dg500:.2e}  trend {ok}/11  ef2500 {ef:.2e}  fig2 {fig2}/11");
    }
}
