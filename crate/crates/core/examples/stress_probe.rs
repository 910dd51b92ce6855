use dtop_core::engine::{Budget, Engine};
use dtop_core::generate::random_sphere;
use dtop_core::recognize::SphereOutcome;
use std::time::Instant;

fn main() {
    let e = Engine::new();
    for (n, steps) in [(2usize, 10usize), (2, 14), (3, 2), (3, 4)] {
        let t = Instant::now();
        let (m, _) = random_sphere(&e, n, steps, 5).unwrap();
        let gen_t = t.elapsed();
        let t = Instant::now();
        let out = e.is_n_sphere(&m, n, &Budget::new(500_000_000)).unwrap();
        let ok = matches!(out, SphereOutcome::Sphere(_));
        let rec_t = t.elapsed();
        let t = Instant::now();
        if let SphereOutcome::Sphere(cert) = &out {
            e.verify_sphere_certificate(&m, cert).unwrap();
        }
        println!(
            "n={n} steps={steps} size={} gen={gen_t:.2?} recognize={rec_t:.2?} verify={:.2?} sphere={ok}",
            m.len(), t.elapsed()
        );
    }
}
