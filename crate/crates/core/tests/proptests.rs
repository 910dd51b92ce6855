//! Randomized structural invariants of the space primitives.

use proptest::prelude::*;

use dtop_core::canon::canonical_key;
use dtop_core::space::{join, DigitalSpace, VertexSet};

/// Random graph on up to 9 vertices, as (n, edge bitmask).
fn arb_space() -> impl Strategy<Value = DigitalSpace> {
    (1usize..=9, any::<u64>()).prop_map(|(n, mask)| {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask & (1u64 << (bit % 64)) != 0 {
                    edges.push((names[i].clone(), names[j].clone()));
                }
                bit += 1;
            }
        }
        DigitalSpace::new(names, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn rim_is_ball_restricted_to_neighbors(g in arb_space()) {
        for v in g.vertex_names() {
            let ball = g.ball(v).unwrap();
            let neighbors: Vec<String> = g.rim(v).unwrap().vertex_names().to_vec();
            let restricted = ball
                .induced(&VertexSet::new(&ball, neighbors.clone()).unwrap())
                .unwrap();
            prop_assert_eq!(g.rim(v).unwrap(), restricted);
        }
    }

    #[test]
    fn join_is_associative_up_to_isomorphism(
        a in arb_space(),
        b in arb_space(),
        c in arb_space(),
    ) {
        // keep the canonical labeling cap comfortable
        prop_assume!(a.len() + b.len() + c.len() <= 18);
        let left = join(&join(&a, &b), &c);
        let right = join(&a, &join(&b, &c));
        prop_assert_eq!(
            canonical_key(&left).unwrap(),
            canonical_key(&right).unwrap()
        );
    }

    #[test]
    fn join_counts(a in arb_space(), b in arb_space()) {
        let j = join(&a, &b);
        prop_assert_eq!(j.len(), a.len() + b.len());
        prop_assert_eq!(
            j.edge_count(),
            a.edge_count() + b.edge_count() + a.len() * b.len()
        );
    }

    #[test]
    fn components_partition_without_cross_edges(g in arb_space()) {
        let comps = g.components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, g.len());
        for (i, ci) in comps.iter().enumerate() {
            for cj in comps.iter().skip(i + 1) {
                for u in ci.names() {
                    for v in cj.names() {
                        prop_assert!(!g.are_adjacent(u, v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_key_is_stable_under_relabeling(g in arb_space(), offset in 0usize..7) {
        let n = g.len();
        let names = g.vertex_names();
        // cyclic rotation of names composed with reversal: a nontrivial
        // relabeling scheme
        let relabel: Vec<String> = (0..n)
            .map(|i| format!("w{}", (n - 1 - i + offset) % n))
            .collect();
        let edges: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let ui = names.iter().position(|x| *x == u).unwrap();
                let vi = names.iter().position(|x| *x == v).unwrap();
                (relabel[ui].clone(), relabel[vi].clone())
            })
            .collect();
        let h = DigitalSpace::new(relabel.clone(), &edges).unwrap();
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn serde_round_trip_preserves_the_space(g in arb_space()) {
        let json = serde_json::to_string(&g).unwrap();
        let back: DigitalSpace = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(g, back);
    }
}
