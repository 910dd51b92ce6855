//! Property suites over the exhaustive small-graph corpus and the generated
//! sphere/manifold corpora.

use std::sync::OnceLock;

use dtop_core::canon::{canonical_key, colored_canonical_key};
use dtop_core::engine::{Budget, Engine};
use dtop_core::generate::{cycle, enumerate_connected_graphs, minimal_sphere, random_sphere, torus_grid};
use dtop_core::invariants::{betti_gf2, euler_characteristic, profile};
use dtop_core::pairs::{self, SplitSpec};
use dtop_core::recognize::{disk_decomposition, is_minimal_n_sphere};
use dtop_core::separation::{separate, SeparationOutcome};
use dtop_core::simply::{enumerate_simple_closed_curves, LscVerdict, ScVerdict, SearchLimits};
use dtop_core::space::{join, DigitalSpace, VertexSet};

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

fn corpus7() -> &'static Vec<DigitalSpace> {
    static CORPUS: OnceLock<Vec<DigitalSpace>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_connected_graphs(7).unwrap())
}

fn budget() -> Budget {
    Budget::new(50_000_000)
}

fn contractible(g: &DigitalSpace) -> bool {
    engine().is_contractible(g).unwrap().is_contractible()
}

/// Brute-force contractibility oracle, independent of the engine: no
/// memoization, no canonical keys, no greedy pass.
fn oracle_contractible(g: &DigitalSpace) -> bool {
    if g.len() == 1 {
        return true;
    }
    for v in g.vertex_names() {
        let rim = g.rim(v).unwrap();
        if rim.is_empty() || !oracle_contractible(&rim) {
            continue;
        }
        if oracle_contractible(&g.delete_vertex(v).unwrap()) {
            return true;
        }
    }
    false
}

#[test]
fn engine_matches_brute_force_oracle_up_to_six_vertices() {
    for g in corpus7().iter().filter(|g| g.len() <= 6) {
        assert_eq!(
            contractible(g),
            oracle_contractible(g),
            "oracle mismatch on {g:?}"
        );
    }
}

#[test]
fn contractible_implies_connected_including_disconnected_inputs() {
    // all graphs on 5 labeled vertices, including disconnected ones
    let names = ["a", "b", "c", "d", "e"];
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
        .collect();
    for mask in 0u32..(1 << 10) {
        let edges: Vec<(&str, &str)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << *k) != 0)
            .map(|(_, &(i, j))| (names[i], names[j]))
            .collect();
        let g = DigitalSpace::new(names, &edges).unwrap();
        if contractible(&g) {
            assert!(g.is_connected(), "contractible but disconnected: {g:?}");
        }
    }
}

#[test]
fn contractible_graphs_have_at_least_two_simple_points() {
    for g in corpus7() {
        if g.len() > 1 && contractible(g) {
            let simple = g
                .vertex_names()
                .iter()
                .filter(|v| engine().is_simple_point(g, v).unwrap())
                .count();
            assert!(simple >= 2, "only {simple} simple points in {g:?}");
        }
    }
}

#[test]
fn every_cone_is_contractible() {
    for g in corpus7().iter().filter(|g| g.len() <= 6) {
        let cone = join(&DigitalSpace::point("zz.apex"), g);
        assert!(contractible(&cone), "non-contractible cone over {g:?}");
    }
}

#[test]
fn suspension_of_contractible_is_contractible() {
    let s0 = minimal_sphere(0);
    for g in corpus7().iter().filter(|g| g.len() <= 6) {
        if contractible(g) {
            let susp = join(&s0, g);
            assert!(contractible(&susp), "suspension failed on {g:?}");
        }
    }
}

#[test]
fn deleting_a_simple_edge_preserves_contractibility() {
    for g in corpus7() {
        if !contractible(g) {
            continue;
        }
        for (u, v) in g.edges() {
            if engine().is_simple_edge(g, &u, &v).unwrap() {
                let smaller = g.delete_edge(&u, &v).unwrap();
                assert!(
                    contractible(&smaller),
                    "deleting simple edge ({u},{v}) broke contractibility of {g:?}"
                );
            }
        }
    }
}

#[test]
fn contractibility_is_isomorphism_invariant() {
    // relabel every 5-vertex graph along a nontrivial permutation and
    // compare answers
    for g in corpus7().iter().filter(|g| g.len() == 5) {
        let names = g.vertex_names();
        let relabeled: Vec<String> = (0..g.len()).map(|i| format!("w{}", (i + 2) % 5)).collect();
        let edges: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let ui = names.iter().position(|n| *n == u).unwrap();
                let vi = names.iter().position(|n| *n == v).unwrap();
                (relabeled[ui].clone(), relabeled[vi].clone())
            })
            .collect();
        let h = DigitalSpace::new(relabeled.clone(), &edges).unwrap();
        assert_eq!(canonical_key(g).unwrap(), canonical_key(&h).unwrap());
        assert_eq!(contractible(g), contractible(&h));
    }
}

#[test]
fn split_contract_round_trip_over_the_small_corpus() {
    // every valid split of every graph on ≤ 7 vertices contracts back to an
    // isomorphic copy
    let e = engine();
    let mut valid_splits = 0u64;
    for g in corpus7() {
        let gkey = canonical_key(g).unwrap();
        for z in g.vertex_names() {
            let rim: Vec<String> = g.rim(z).unwrap().vertex_names().to_vec();
            let r = rim.len();
            for mask in 0..3usize.pow(r as u32) {
                let mut part_x = Vec::new();
                let mut part_y = Vec::new();
                let mut digits = mask;
                for name in &rim {
                    match digits % 3 {
                        0 => part_x.push(name.clone()),
                        1 => part_y.push(name.clone()),
                        _ => {
                            part_x.push(name.clone());
                            part_y.push(name.clone());
                        }
                    }
                    digits /= 3;
                }
                let spec = SplitSpec::new(g, z, part_x, part_y).unwrap();
                let split = pairs::split_point(e, g, &spec);
                let Ok((result, record)) = split else {
                    continue;
                };
                valid_splits += 1;
                let (back, _) = pairs::contract_pair(e, &result, &spec.x, &spec.y).unwrap();
                assert_eq!(
                    canonical_key(&back).unwrap(),
                    gkey,
                    "round trip failed on {g:?} with {spec:?}"
                );
                // the split certificate replays
                let replayed = e.replay(g, &record.certificate).unwrap();
                assert_eq!(replayed, result);
            }
        }
    }
    assert!(valid_splits > 10_000, "only {valid_splits} valid splits seen");
}

#[test]
fn contraction_preserves_euler_and_betti_and_replays() {
    let e = engine();
    for g in corpus7().iter().filter(|g| g.len() <= 6) {
        for (x, y) in g.edges() {
            if !pairs::is_simple_pair(g, &x, &y).unwrap() {
                continue;
            }
            let before = profile(g).unwrap();
            let (contracted, record) = pairs::contract_pair(e, g, &x, &y).unwrap();
            let after = profile(&contracted).unwrap();
            assert_eq!(before.euler, after.euler, "euler changed on {g:?}");
            assert_eq!(before.betti, after.betti, "betti changed on {g:?}");
            assert_eq!(record.certificate.steps.len(), 3);
            let replayed = e.replay(g, &record.certificate).unwrap();
            assert_eq!(replayed, contracted);
        }
    }
}

#[test]
fn simple_pairs_are_inherited_by_induced_subgraphs() {
    for g in corpus7().iter().filter(|g| g.len() <= 6) {
        let n = g.len();
        for (x, y) in g.edges() {
            if !pairs::is_simple_pair(g, &x, &y).unwrap() {
                continue;
            }
            let xi = g.index_of(&x).unwrap();
            let yi = g.index_of(&y).unwrap();
            let others: Vec<usize> = (0..n).filter(|&i| i != xi && i != yi).collect();
            for mask in 0u32..(1 << others.len()) {
                let mut names = vec![x.clone(), y.clone()];
                for (k, &i) in others.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        names.push(g.name(i).to_string());
                    }
                }
                let set = VertexSet::new(g, names).unwrap();
                let h = g.induced(&set).unwrap();
                assert!(
                    pairs::is_simple_pair(&h, &x, &y).unwrap(),
                    "inheritance failed: pair ({x},{y}) of {g:?} in subgraph {h:?}"
                );
            }
        }
    }
}

#[test]
fn union_of_balls_of_a_simple_pair_is_contractible() {
    for g in corpus7() {
        for (x, y) in g.edges() {
            if !pairs::is_simple_pair(g, &x, &y).unwrap() {
                continue;
            }
            let mut names: Vec<String> = g.ball(&x).unwrap().vertex_names().to_vec();
            names.extend(g.ball(&y).unwrap().vertex_names().to_vec());
            let set = VertexSet::new(g, names).unwrap();
            let b = g.induced(&set).unwrap();
            assert!(contractible(&b), "U(x) ∪ U(y) not contractible in {g:?}");
        }
    }
}

#[test]
fn homology_is_invariant_under_elementary_steps() {
    let e = engine();
    for g in corpus7().iter().filter(|g| g.len() <= 6) {
        let before = profile(g).unwrap();
        for v in g.vertex_names() {
            if e.is_simple_point(g, v).unwrap() {
                let after = profile(&g.delete_vertex(v).unwrap()).unwrap();
                assert_eq!(before.euler, after.euler);
                assert_eq!(before.betti, after.betti);
            }
        }
        for (u, v) in g.edges() {
            if e.is_simple_edge(g, &u, &v).unwrap() {
                let after = profile(&g.delete_edge(&u, &v).unwrap()).unwrap();
                assert_eq!(before.euler, after.euler);
                assert_eq!(before.betti, after.betti);
            }
        }
    }
}

fn sphere_corpus2() -> Vec<DigitalSpace> {
    let e = engine();
    let mut out = vec![minimal_sphere(2), join(&minimal_sphere(0), &cycle(5))];
    for (seed, steps) in [(11u64, 2usize), (12, 3), (13, 4), (14, 2)] {
        out.push(random_sphere(e, 2, steps, seed).unwrap().0);
    }
    out
}

#[test]
fn contracting_a_simple_pair_of_a_sphere_gives_a_sphere_with_sphere_link() {
    let e = engine();
    for m in sphere_corpus2() {
        for (x, y) in m.edges() {
            if !pairs::is_simple_pair(&m, &x, &y).unwrap() {
                continue;
            }
            // U(x) ∪ U(y) − {x,y} is a 1-sphere
            let mut names: Vec<String> = m.ball(&x).unwrap().vertex_names().to_vec();
            names.extend(m.ball(&y).unwrap().vertex_names().to_vec());
            names.retain(|n| *n != x && *n != y);
            let link = m.induced(&VertexSet::new(&m, names).unwrap()).unwrap();
            assert!(e.is_n_sphere_fact(&link, 1, &budget()).unwrap());
            // and the contracted space is again a 2-sphere
            let (contracted, _) = pairs::contract_pair(e, &m, &x, &y).unwrap();
            assert!(e.is_n_sphere_fact(&contracted, 2, &budget()).unwrap());
        }
    }
}

#[test]
fn sphere_minus_a_vertex_is_contractible() {
    for m in sphere_corpus2() {
        for v in m.vertex_names() {
            assert!(contractible(&m.delete_vertex(v).unwrap()));
        }
    }
    let s3 = minimal_sphere(3);
    for v in s3.vertex_names() {
        assert!(contractible(&s3.delete_vertex(v).unwrap()));
    }
}

#[test]
fn large_disk_interiors_contain_a_simple_pair() {
    for m in sphere_corpus2() {
        for v in m.vertex_names() {
            let d = disk_decomposition(&m, v).unwrap();
            if d.interior.len() <= 1 {
                continue;
            }
            let inside = &d.interior;
            let found = d.disk.edges().into_iter().any(|(a, b)| {
                inside.contains(&a)
                    && inside.contains(&b)
                    && pairs::is_simple_pair(&d.disk, &a, &b).unwrap()
            });
            assert!(found, "no simple pair inside Int(M − {v}) of {m:?}");
        }
    }
}

#[test]
fn sphere_minus_contractible_subspace_is_contractible() {
    // exhaustive over all induced contractible subspaces of the small
    // 2-sphere corpus
    for m in sphere_corpus2().into_iter().filter(|m| m.len() <= 9) {
        let n = m.len();
        for mask in 1u32..(1 << n) {
            if mask.count_ones() as usize == n {
                continue;
            }
            let names: Vec<&str> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| m.name(i))
                .collect();
            let set = VertexSet::new(&m, names).unwrap();
            let sub = m.induced(&set).unwrap();
            if !sub.is_connected() || !contractible(&sub) {
                continue;
            }
            let rest = m.induced(&m.full_vertex_set().difference(&set)).unwrap();
            assert!(
                contractible(&rest),
                "M − G not contractible for G = {set:?} in {m:?}"
            );
        }
    }
}

#[test]
fn disk_interiors_are_contractible() {
    for m in sphere_corpus2() {
        for v in m.vertex_names() {
            let d = disk_decomposition(&m, v).unwrap();
            let int = d.disk.induced(&d.interior).unwrap();
            assert!(contractible(&int));
        }
    }
}

#[test]
fn contracting_a_pair_inside_a_disk_yields_a_disk() {
    let e = engine();
    for m in sphere_corpus2().into_iter().filter(|m| m.len() <= 9) {
        let v = m.name(0).to_string();
        let d = disk_decomposition(&m, &v).unwrap();
        for (x, y) in d.disk.edges() {
            if !pairs::is_simple_pair(&d.disk, &x, &y).unwrap() {
                continue;
            }
            // per the coning construction: contract inside the re-coned
            // sphere, then strip the apex again
            let coned = d
                .disk
                .add_vertex("zz.apex", d.boundary.names())
                .unwrap();
            if !pairs::is_simple_pair(&coned, &x, &y).unwrap() {
                continue;
            }
            let (contracted_sphere, _) = pairs::contract_pair(e, &coned, &x, &y).unwrap();
            assert!(e.is_n_sphere_fact(&contracted_sphere, 2, &budget()).unwrap());
            let dd = disk_decomposition(&contracted_sphere, "zz.apex").unwrap();
            assert!(e
                .is_n_disk(&dd.disk, &dd.boundary, 2, &budget())
                .unwrap());
        }
    }
}

#[test]
fn sphere_criterion_via_separation_both_directions() {
    let e = engine();
    // spheres: some embedded 1-sphere separates into two disks
    for m in sphere_corpus2().into_iter().filter(|m| m.len() <= 9) {
        let curves = enumerate_simple_closed_curves(&m, &SearchLimits::default()).unwrap();
        let found = curves.0.iter().any(|s| {
            e.verify_sphere_separation(&m, s, 2, &budget())
                .map(|r| r.holds)
                .unwrap_or(false)
        });
        assert!(found, "no disk-pair separation found in sphere {m:?}");
    }
    // the torus: no embedded 1-sphere separates it into two disk sides
    let t = torus_grid(4, 4).unwrap();
    let curves = enumerate_simple_closed_curves(&t, &SearchLimits::default()).unwrap();
    for s in &curves.0 {
        if let SeparationOutcome::Separated(sep) = separate(&t, s).unwrap() {
            let a_disk = e
                .is_n_disk(&t.induced(&sep.a.union(s)).unwrap(), s, 2, &budget())
                .unwrap();
            let b_disk = e
                .is_n_disk(&t.induced(&sep.b.union(s)).unwrap(), s, 2, &budget())
                .unwrap();
            assert!(
                !(a_disk && b_disk),
                "torus separated into two disks along {s:?}"
            );
        }
    }
}

#[test]
fn removing_contractible_subspaces_of_a_manifold_is_homotopy_stable() {
    // every small contractible G ⊆ M leaves the same Betti vector as a
    // single-vertex deletion
    for m in [torus_grid(4, 4).unwrap(), minimal_sphere(2)] {
        let reference = betti_gf2(&m.delete_vertex(m.name(0)).unwrap()).unwrap();
        let n = m.len();
        let idx: Vec<usize> = (0..n).collect();
        for size in 1..=3usize {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let names: Vec<&str> = combo.iter().map(|&i| m.name(idx[i])).collect();
                let set = VertexSet::new(&m, names).unwrap();
                let sub = m.induced(&set).unwrap();
                if sub.is_connected() && contractible(&sub) {
                    let rest = m.induced(&m.full_vertex_set().difference(&set)).unwrap();
                    assert_eq!(
                        betti_gf2(&rest).unwrap(),
                        reference,
                        "Betti drifted for G = {set:?}"
                    );
                }
                if !advance(&mut combo, n) {
                    break;
                }
            }
        }
    }
}

fn advance(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[test]
fn torus_grids_are_two_manifolds_for_all_small_dimensions() {
    let e = engine();
    for m in 4..=6usize {
        for n in 4..=6usize {
            let t = torus_grid(m, n).unwrap();
            assert!(
                e.is_n_manifold(&t, 2, &budget()).unwrap(),
                "torus {m}x{n} failed the manifold check"
            );
        }
    }
}

#[test]
fn torus_minus_a_vertex_is_not_contractible() {
    let t = torus_grid(4, 4).unwrap();
    let rest = t.delete_vertex("t0.0").unwrap();
    assert!(!contractible(&rest));
}

#[test]
fn lsc_is_stable_under_pair_contraction_on_spheres() {
    let e = engine();
    let limits = SearchLimits::default();
    for (m, label) in [
        (minimal_sphere(2), "octahedron"),
        (join(&minimal_sphere(0), &cycle(5)), "7-point sphere"),
        (random_sphere(e, 2, 2, 21).unwrap().0, "8-point sphere"),
    ] {
        let before = e.is_locally_simply_connected(&m, &limits).unwrap();
        for (x, y) in m.edges() {
            if !pairs::is_simple_pair(&m, &x, &y).unwrap() {
                continue;
            }
            let (contracted, _) = pairs::contract_pair(e, &m, &x, &y).unwrap();
            let after = e.is_locally_simply_connected(&contracted, &limits).unwrap();
            assert_eq!(before, after, "LSC drifted under contraction on {label}");
        }
    }
}

#[test]
fn separation_sides_of_lsc_manifolds_are_simply_connected() {
    let e = engine();
    let limits = SearchLimits::default();
    for seed in [31u64, 32] {
        let (m, _) = random_sphere(e, 2, 3, seed).unwrap();
        let sep = e.equator_separation(&m, &budget()).unwrap();
        for side in [&sep.a, &sep.b] {
            let closed = m.induced(&side.union(&sep.s)).unwrap();
            assert_eq!(
                e.is_simply_connected(&closed, &limits).unwrap(),
                ScVerdict::SimplyConnected,
                "side {side:?} of seed {seed}"
            );
        }
    }
}

#[test]
fn lsc_implies_simply_connected_on_the_corpus() {
    let e = engine();
    let limits = SearchLimits::default();
    let wheel = join(&DigitalSpace::point("hub"), &cycle(4));
    for m in [
        minimal_sphere(2),
        join(&minimal_sphere(0), &cycle(5)),
        torus_grid(4, 4).unwrap(),
        wheel,
    ] {
        let lsc = e.is_locally_simply_connected(&m, &limits).unwrap();
        if lsc == LscVerdict::LocallySimplyConnected {
            assert_eq!(
                e.is_simply_connected(&m, &limits).unwrap(),
                ScVerdict::SimplyConnected
            );
        }
    }
}

#[test]
fn no_proper_subspace_of_a_small_manifold_is_a_manifold() {
    let e = engine();
    let m = join(&minimal_sphere(0), &cycle(5));
    let n = m.len();
    for mask in 1u32..((1 << n) - 1) {
        let names: Vec<&str> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| m.name(i))
            .collect();
        let sub = m
            .induced(&VertexSet::new(&m, names).unwrap())
            .unwrap();
        assert!(
            !e.is_n_manifold(&sub, 2, &budget()).unwrap(),
            "proper subspace is a 2-manifold: {sub:?}"
        );
    }
}

#[test]
fn colored_keys_respect_color_preserving_isomorphism_only() {
    let g = cycle(6);
    let c1: Vec<u32> = vec![1, 0, 0, 0, 0, 0];
    let c2: Vec<u32> = vec![0, 0, 0, 1, 0, 0];
    let k1 = colored_canonical_key(&g, &c1, 24).unwrap();
    let k2 = colored_canonical_key(&g, &c2, 24).unwrap();
    assert_eq!(k1, k2); // rotation maps one coloring onto the other
    let c3: Vec<u32> = vec![1, 1, 0, 0, 0, 0];
    assert_ne!(k1, colored_canonical_key(&g, &c3, 24).unwrap());
}

#[test]
fn shared_memo_tables_never_change_answers() {
    // differential check: a long-lived engine full of memoized facts from a
    // mixed corpus must agree with fresh engines on every query
    let shared = Engine::new();
    let limits = SearchLimits::default();
    let mut corpus: Vec<DigitalSpace> = vec![
        minimal_sphere(0),
        minimal_sphere(1),
        minimal_sphere(2),
        minimal_sphere(3),
        cycle(3),
        cycle(5),
        cycle(7),
        torus_grid(4, 4).unwrap(),
        join(&DigitalSpace::point("hub"), &cycle(5)),
        join(&minimal_sphere(0), &cycle(6)),
    ];
    corpus.extend(corpus7().iter().filter(|g| g.len() == 6).take(20).cloned());
    for seed in [71u64, 72, 73] {
        corpus.push(random_sphere(&shared, 2, 3, seed).unwrap().0);
    }

    // first pass fills the shared tables in one order...
    for g in &corpus {
        let _ = shared.is_contractible(g);
        let _ = shared.is_n_sphere_fact(g, 2, &budget());
    }
    // ...then every answer is compared against an isolated engine
    for g in &corpus {
        let fresh = Engine::new();
        assert_eq!(
            shared.is_contractible(g).map(|c| c.is_contractible()),
            fresh.is_contractible(g).map(|c| c.is_contractible()),
            "contractibility drifted on {g:?}"
        );
        for n in 1..=2usize {
            assert_eq!(
                shared.is_n_sphere_fact(g, n, &budget()),
                fresh.is_n_sphere_fact(g, n, &budget()),
                "sphere fact drifted on {g:?} at n = {n}"
            );
        }
        if g.len() <= 12 {
            assert_eq!(
                shared.is_simply_connected(g, &limits).unwrap(),
                fresh.is_simply_connected(g, &limits).unwrap(),
                "simple connectedness drifted on {g:?}"
            );
        }
    }
}

#[test]
fn disconnected_hosts_evaluate_the_curve_condition_directly() {
    // two disjoint 4-cycles: each curve lacks a spanning disk
    let e = engine();
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (prefix, offset) in [("a", 0), ("b", 4)] {
        for i in 0..4usize {
            vertices.push(format!("{prefix}{}", i + offset));
        }
        for i in 0..4usize {
            edges.push((
                format!("{prefix}{}", i + offset),
                format!("{prefix}{}", (i + 1) % 4 + offset),
            ));
        }
    }
    let g = DigitalSpace::new(vertices, &edges).unwrap();
    assert_eq!(g.components().len(), 2);
    match e.is_simply_connected(&g, &SearchLimits::default()).unwrap() {
        ScVerdict::NotSimplyConnected { witness_curve } => {
            assert_eq!(witness_curve.len(), 4);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn no_greedy_gaps_or_divergent_contractions_recorded() {
    // run after plenty of searches elsewhere in this process; also drive a
    // couple of fresh ones through an isolated engine
    let e = Engine::new();
    for g in enumerate_connected_graphs(5).unwrap() {
        let _ = e.is_contractible(&g).unwrap();
    }
    let (m, _) = random_sphere(&e, 2, 3, 99).unwrap();
    let _ = e.is_n_sphere(&m, 2, &budget()).unwrap();
    assert_eq!(e.stats.greedy_gaps(), 0);
    assert_eq!(e.stats.divergent_contractions(), 0);
}

#[test]
fn certificate_and_fact_routes_agree() {
    let e = engine();
    let mut spaces = vec![
        minimal_sphere(2),
        cycle(4),
        cycle(3),
        torus_grid(4, 4).unwrap(),
        join(&DigitalSpace::point("hub"), &cycle(4)),
        join(&minimal_sphere(0), &cycle(5)),
    ];
    for seed in [61u64, 62] {
        spaces.push(random_sphere(e, 2, 3, seed).unwrap().0);
    }
    for g in &spaces {
        for n in 1..=2usize {
            let fact = e.is_n_sphere_fact(g, n, &budget()).unwrap();
            let cert = e.is_n_sphere(g, n, &budget()).unwrap().is_sphere();
            assert_eq!(fact, cert, "routes disagree on {g:?} at n = {n}");
        }
    }
}

#[test]
fn contractible_graphs_have_point_homology() {
    for g in corpus7() {
        if contractible(g) {
            assert_eq!(betti_gf2(g).unwrap(), vec![1], "nontrivial homology on {g:?}");
        }
    }
}

#[test]
fn euler_of_wheel_and_cycles_sanity() {
    assert_eq!(euler_characteristic(&cycle(5)).unwrap(), 0);
    let wheel = join(&DigitalSpace::point("hub"), &cycle(5));
    assert_eq!(euler_characteristic(&wheel).unwrap(), 1);
}

#[test]
fn every_contractible_subspace_of_a_contractible_host_is_reachable() {
    // exhaustive over hosts on ≤ 5 vertices: deletion always reaches any
    // contractible induced subspace of a contractible space
    let e = engine();
    for g in corpus7().iter().filter(|g| g.len() <= 5) {
        if !contractible(g) {
            continue;
        }
        let n = g.len();
        for mask in 1u32..(1 << n) {
            let names: Vec<&str> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| g.name(i))
                .collect();
            let target = VertexSet::new(g, names).unwrap();
            let sub = g.induced(&target).unwrap();
            if !sub.is_connected() || !contractible(&sub) {
                continue;
            }
            match e.reduce_onto(g, &target).unwrap() {
                dtop_core::Reduction::Reduced(cert) => {
                    let end = e.replay(g, &cert).unwrap();
                    assert_eq!(end.vertex_names(), target.names());
                }
                dtop_core::Reduction::No => {
                    panic!("no reduction from {g:?} onto {target:?}")
                }
            }
        }
    }
}

#[test]
fn reduction_certificates_replay_on_contractible_pairs() {
    let e = engine();
    for g in corpus7().iter().filter(|g| g.len() == 5) {
        if !contractible(g) {
            continue;
        }
        // reduce onto each single contractible vertex
        let target = VertexSet::new(g, [g.name(0)]).unwrap();
        match e.reduce_onto(g, &target).unwrap() {
            dtop_core::Reduction::Reduced(cert) => {
                let end = e.replay(g, &cert).unwrap();
                assert_eq!(end.vertex_names(), target.names());
            }
            dtop_core::Reduction::No => {
                panic!("reduction onto a vertex failed for contractible {g:?}")
            }
        }
    }
}

#[test]
fn random_spheres_stay_spheres_and_minimal_detection_agrees() {
    let e = engine();
    for seed in 41..46u64 {
        let (m, history) = random_sphere(e, 2, 3, seed).unwrap();
        assert_eq!(m.len(), 6 + history.len());
        assert!(e.is_n_sphere_fact(&m, 2, &budget()).unwrap());
        assert_eq!(is_minimal_n_sphere(&m), None);
    }
    for seed in [5u64, 6] {
        let (c, _) = random_sphere(e, 1, 2, seed).unwrap();
        assert_eq!(
            canonical_key(&c).unwrap(),
            canonical_key(&cycle(6)).unwrap(),
            "1-sphere splits only grow the cycle"
        );
    }
}
