//! Constructors for the working corpus: minimal spheres, cycles, random
//! spheres grown by splittings, triangulated torus grids, and exhaustive
//! small-graph enumeration.
//!
//! Figure-drawn spaces from the source material are replaced by parametric
//! or seeded-random equivalents with the same asserted properties; nothing
//! here claims fidelity to any particular drawing.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, canonical_space, CanonKey};
use crate::engine::{Budget, Engine};
use crate::error::TopoError;
use crate::pairs::{random_split, SplitSpec};
use crate::recognize::SphereOutcome;
use crate::rng::XorShift64;
use crate::space::DigitalSpace;

/// Minimal n-sphere: the join of `n + 1` two-point edgeless spaces, on
/// `2n + 2` vertices. Vertices `p{i}` and `q{i}` are the i-th antipodal
/// pair; every other pair is adjacent.
pub fn minimal_sphere(n: usize) -> DigitalSpace {
    let mut vertices = Vec::with_capacity(2 * n + 2);
    let mut edges = Vec::new();
    for i in 0..=n {
        vertices.push(format!("p{i}"));
        vertices.push(format!("q{i}"));
    }
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            // skip the antipodal pair p{k} / q{k}
            if vertices[i][1..] == vertices[j][1..] {
                continue;
            }
            edges.push((vertices[i].clone(), vertices[j].clone()));
        }
    }
    DigitalSpace::new(vertices, &edges).expect("minimal sphere construction")
}

/// Cycle on `k ≥ 3` vertices `c0 .. c{k-1}`. `k = 3` is the triangle, which
/// is NOT a digital 1-sphere (its rims are single points).
pub fn cycle(k: usize) -> DigitalSpace {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    let vertices: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
    let edges: Vec<(String, String)> = (0..k)
        .map(|i| (vertices[i].clone(), vertices[(i + 1) % k].clone()))
        .collect();
    DigitalSpace::new(vertices, &edges).expect("cycle construction")
}

/// Triangulated torus on the grid `Z_m × Z_n` with adjacency offsets
/// `(±1,0), (0,±1), (1,1), (−1,−1)`. Every rim is an induced 6-cycle, so
/// the result is a digital 2-manifold for all `m, n ≥ 4`.
pub fn torus_grid(m: usize, n: usize) -> Result<DigitalSpace, TopoError> {
    if m < 4 || n < 4 {
        return Err(TopoError::Precondition(
            "torus grid requires both dimensions ≥ 4".into(),
        ));
    }
    let name = |i: usize, j: usize| format!("t{i}.{j}");
    let mut vertices = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            vertices.push(name(i, j));
        }
    }
    let offsets: [(isize, isize); 3] = [(1, 0), (0, 1), (1, 1)];
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            for (di, dj) in offsets {
                let ni = (i as isize + di).rem_euclid(m as isize) as usize;
                let nj = (j as isize + dj).rem_euclid(n as isize) as usize;
                edges.push((name(i, j), name(ni, nj)));
            }
        }
    }
    DigitalSpace::new(vertices, &edges)
}

/// Grows a random digital n-sphere from the minimal one by `steps` seeded
/// splittings, each validated to still be an n-sphere (invalid proposals are
/// rejected and resampled from the same stream). Returns the space and the
/// replayable split history.
pub fn random_sphere(
    engine: &Engine,
    n: usize,
    steps: usize,
    seed: u64,
) -> Result<(DigitalSpace, Vec<SplitSpec>), TopoError> {
    if n < 1 {
        return Err(TopoError::Precondition(
            "random_sphere requires dimension ≥ 1".into(),
        ));
    }
    let mut rng = XorShift64::new(seed);
    let mut space = minimal_sphere(n);
    let mut history = Vec::with_capacity(steps);
    // Sphere-preserving splits are a small fraction of definition-valid
    // ones (for a 3-sphere roughly one in a hundred), so the per-step
    // rejection allowance is generous. Failed proposals are cheap: they
    // die on the first rim check.
    for _ in 0..steps {
        let mut accepted = false;
        for _attempt in 0..4000 {
            let (candidate, spec) = random_split(&space, rng.next_u64())?;
            let budget = Budget::new(2_000_000);
            if let Ok(SphereOutcome::Sphere(_)) = engine.is_n_sphere(&candidate, n, &budget) {
                space = candidate;
                history.push(spec);
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(TopoError::NoValidSplit);
        }
    }
    Ok((space, history))
}

/// Every connected graph on `1..=max_vertices` vertices up to isomorphism,
/// in canonical labeling, ordered by vertex count then canonical key.
///
/// Generation grows graphs one vertex at a time (every connected graph has
/// a non-cut vertex, so deleting one always lands in the previous level)
/// and deduplicates by canonical key.
pub fn enumerate_connected_graphs(max_vertices: usize) -> Result<Vec<DigitalSpace>, TopoError> {
    const ENUM_CAP: usize = 7;
    if max_vertices > ENUM_CAP {
        return Err(TopoError::CapExceeded {
            what: "connected graph enumeration",
            size: max_vertices,
            cap: ENUM_CAP,
        });
    }
    let mut out = Vec::new();
    if max_vertices == 0 {
        return Ok(out);
    }
    let mut level: Vec<DigitalSpace> = vec![canonical_space(&DigitalSpace::point("v"), ENUM_CAP)?];
    out.extend(level.iter().cloned());
    for n in 2..=max_vertices {
        let mut reps: std::collections::BTreeMap<CanonKey, DigitalSpace> =
            std::collections::BTreeMap::new();
        for g in &level {
            let names: Vec<String> = g.vertex_names().to_vec();
            for mask in 1u32..(1 << (n - 1)) {
                let rim: Vec<String> = names
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, s)| s.clone())
                    .collect();
                let grown = g.add_vertex("zz.new", &rim)?;
                let key = canonical_key(&grown)?;
                reps.entry(key)
                    .or_insert_with(|| canonical_space(&grown, ENUM_CAP).expect("within cap"));
            }
        }
        level = reps.into_values().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// Parameter record for the corpus constructors, used by the command-line
/// front end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorRecipe {
    MinimalSphere { n: usize },
    Cycle { k: usize },
    RandomSphere { n: usize, steps: usize, seed: u64 },
    TorusGrid { m: usize, n: usize },
    Enumerate { max_vertices: usize },
}

/// Builds the spaces a recipe describes, validating parameter ranges.
pub fn build(engine: &Engine, recipe: &GeneratorRecipe) -> Result<Vec<DigitalSpace>, TopoError> {
    match recipe {
        GeneratorRecipe::MinimalSphere { n } => Ok(vec![minimal_sphere(*n)]),
        GeneratorRecipe::Cycle { k } => {
            if *k < 3 {
                return Err(TopoError::Precondition("cycle requires k ≥ 3".into()));
            }
            Ok(vec![cycle(*k)])
        }
        GeneratorRecipe::RandomSphere { n, steps, seed } => {
            Ok(vec![random_sphere(engine, *n, *steps, *seed)?.0])
        }
        GeneratorRecipe::TorusGrid { m, n } => Ok(vec![torus_grid(*m, *n)?]),
        GeneratorRecipe::Enumerate { max_vertices } => enumerate_connected_graphs(*max_vertices),
    }
}
