//! Simple pairs of adjacent points, contraction of a pair into one point,
//! and the inverse splitting of a point into a pair.
//!
//! An adjacent pair `{x, y}` is simple when no point of `U(x) − U(y)` is
//! adjacent to any point of `U(y) − U(x)`. Contracting a simple pair
//! replaces `x, y` by a fresh point `z` with `O(z) = U(x) ∪ U(y) − {x, y}`;
//! splitting is the exact inverse. Both directions come with replayable
//! three-step certificates (attach the fused/split points as simple points,
//! then delete what they replace).

use serde::{Deserialize, Serialize};

use crate::engine::Engine;
use crate::error::TopoError;
use crate::homotopy::{Certificate, TransformStep};
use crate::rng::XorShift64;
use crate::space::DigitalSpace;

/// Record of one pair contraction, with its homotopy certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairContraction {
    pub x: String,
    pub y: String,
    pub z: String,
    pub certificate: Certificate,
}

/// A splitting instruction: replace `z` by adjacent fresh points `x, y`
/// whose rims are `part_x ∪ {y}` and `part_y ∪ {x}`. The parts must cover
/// `O(z)`; overlap is allowed and becomes the joint rim of the new edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub z: String,
    pub x: String,
    pub y: String,
    pub part_x: Vec<String>,
    pub part_y: Vec<String>,
}

impl SplitSpec {
    /// Builds a spec with deterministically derived fresh names `z.x`, `z.y`
    /// (suffix-escalated on collision).
    pub fn new(
        g: &DigitalSpace,
        z: &str,
        part_x: Vec<String>,
        part_y: Vec<String>,
    ) -> Result<SplitSpec, TopoError> {
        if !g.contains(z) {
            return Err(TopoError::UnknownVertex(z.to_string()));
        }
        let x = fresh_name(g, &format!("{z}.x"));
        let mut y = fresh_name(g, &format!("{z}.y"));
        if y == x {
            y = fresh_name(g, &format!("{z}.y#1"));
        }
        Ok(SplitSpec {
            z: z.to_string(),
            x,
            y,
            part_x,
            part_y,
        })
    }
}

/// Record of one splitting, with its homotopy certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSplit {
    pub spec: SplitSpec,
    pub certificate: Certificate,
}

/// First free name of the form `base`, `base#1`, `base#2`, ...
pub(crate) fn fresh_name(g: &DigitalSpace, base: &str) -> String {
    if !g.contains(base) {
        return base.to_string();
    }
    for k in 1.. {
        let candidate = format!("{base}#{k}");
        if !g.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Decides whether `{x, y}` is a simple pair: adjacent, with no adjacency
/// between `U(x) − U(y)` and `U(y) − U(x)`.
pub fn is_simple_pair(g: &DigitalSpace, x: &str, y: &str) -> Result<bool, TopoError> {
    if !g.are_adjacent(x, y)? {
        return Err(TopoError::NotAnEdge(x.to_string(), y.to_string()));
    }
    let xi = g.index_of(x).unwrap();
    let yi = g.index_of(y).unwrap();
    let mut ball_x = g.neighbors(xi).clone();
    ball_x.insert(xi);
    let mut ball_y = g.neighbors(yi).clone();
    ball_y.insert(yi);
    let only_x = ball_x.difference(&ball_y);
    let only_y = ball_y.difference(&ball_x);
    for v in only_x.iter() {
        if !g.neighbors(v).is_disjoint(&only_y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Names of `U(x) ∪ U(y) − {x, y}` in the source space: the rim of the fused
/// point after contraction.
fn fused_rim(g: &DigitalSpace, x: &str, y: &str) -> Vec<String> {
    let xi = g.index_of(x).unwrap();
    let yi = g.index_of(y).unwrap();
    let mut union = g.neighbors(xi).union(g.neighbors(yi));
    union.remove(xi);
    union.remove(yi);
    union.iter().map(|i| g.name(i).to_string()).collect()
}

/// Raw contraction: replace `x, y` by `z` with `O(z) = U(x) ∪ U(y) − {x,y}`.
/// Does not check simplicity; `z` must be fresh.
pub(crate) fn contract_pair_named(
    g: &DigitalSpace,
    x: &str,
    y: &str,
    z: &str,
) -> Result<DigitalSpace, TopoError> {
    if !g.are_adjacent(x, y)? {
        return Err(TopoError::NotAnEdge(x.to_string(), y.to_string()));
    }
    if g.contains(z) {
        return Err(TopoError::DuplicateVertex(z.to_string()));
    }
    let rim = fused_rim(g, x, y);
    let reduced = g.delete_vertex(x)?.delete_vertex(y)?;
    reduced.add_vertex(z, &rim)
}

/// Contracts a simple pair, returning the new space and a replayable record.
///
/// The certificate is the three-step witness: attach `z` as a simple point
/// with rim `U(x) ∪ U(y)`, then delete `x`, then delete `y`.
pub fn contract_pair(
    engine: &Engine,
    g: &DigitalSpace,
    x: &str,
    y: &str,
) -> Result<(DigitalSpace, PairContraction), TopoError> {
    if !is_simple_pair(g, x, y)? {
        return Err(TopoError::PairNotSimple(x.to_string(), y.to_string()));
    }
    let z = fresh_name(g, &format!("{x}+{y}"));
    let result = contract_pair_named(g, x, y, &z)?;

    let xi = g.index_of(x).unwrap();
    let yi = g.index_of(y).unwrap();
    let mut glue = g.neighbors(xi).union(g.neighbors(yi));
    glue.insert(xi);
    glue.insert(yi);
    let glue_names: Vec<String> = glue.iter().map(|i| g.name(i).to_string()).collect();

    let certificate = Certificate {
        start_key: engine.key(g)?.to_hex(),
        end_key: engine.key(&result)?.to_hex(),
        steps: vec![
            TransformStep::AddPoint {
                v: z.clone(),
                rim: glue_names,
            },
            TransformStep::DeletePoint { v: x.to_string() },
            TransformStep::DeletePoint { v: y.to_string() },
        ],
    };
    Ok((
        result,
        PairContraction {
            x: x.to_string(),
            y: y.to_string(),
            z,
            certificate,
        },
    ))
}

/// Raw splitting: replace `z` by `x ~ y` with rims `part_x ∪ {y}` and
/// `part_y ∪ {x}`. Validates the cover and the cross-adjacency condition on
/// the constructed result; invalid specs are rejected.
pub(crate) fn apply_split(
    g: &DigitalSpace,
    z: &str,
    x: &str,
    y: &str,
    part_x: &[String],
    part_y: &[String],
) -> Result<DigitalSpace, TopoError> {
    let rim = g.rim(z)?;
    for p in part_x.iter().chain(part_y.iter()) {
        if !rim.contains(p) {
            return Err(TopoError::CoverViolated(z.to_string()));
        }
    }
    let covered = rim
        .vertex_names()
        .iter()
        .all(|r| part_x.contains(r) || part_y.contains(r));
    if !covered {
        return Err(TopoError::CoverViolated(z.to_string()));
    }
    if g.contains(x) || g.contains(y) || x == y {
        return Err(TopoError::DuplicateVertex(x.to_string()));
    }

    let without = g.delete_vertex(z)?;
    let mut rim_x: Vec<String> = part_x.to_vec();
    rim_x.sort();
    rim_x.dedup();
    let with_x = without.add_vertex(x, &rim_x)?;
    let mut rim_y: Vec<String> = part_y.to_vec();
    rim_y.push(x.to_string());
    rim_y.sort();
    rim_y.dedup();
    let result = with_x.add_vertex(y, &rim_y)?;

    // Post-hoc validation per the definition: {x, y} must be a simple pair
    // of the result.
    let xi = result.index_of(x).unwrap();
    let yi = result.index_of(y).unwrap();
    let only_x = result.neighbors(xi).difference(result.neighbors(yi));
    let only_y = result.neighbors(yi).difference(result.neighbors(xi));
    for v in only_x.iter() {
        if v == yi {
            continue;
        }
        for u in only_y.iter() {
            if u == xi {
                continue;
            }
            if result.neighbors(v).contains(u) {
                return Err(TopoError::CrossAdjacency(
                    result.name(v).to_string(),
                    result.name(u).to_string(),
                ));
            }
        }
    }
    Ok(result)
}

/// Splits a point along the given instruction, returning the new space and
/// the inverse record: its certificate replays from the source to the split
/// space, and contracting `{x, y}` in the result returns an isomorphic copy
/// of the source.
pub fn split_point(
    engine: &Engine,
    g: &DigitalSpace,
    spec: &SplitSpec,
) -> Result<(DigitalSpace, PairSplit), TopoError> {
    let result = apply_split(g, &spec.z, &spec.x, &spec.y, &spec.part_x, &spec.part_y)?;

    let mut rim_x: Vec<String> = spec.part_x.clone();
    rim_x.push(spec.z.clone());
    rim_x.sort();
    rim_x.dedup();
    let mut rim_y: Vec<String> = spec.part_y.clone();
    rim_y.push(spec.z.clone());
    rim_y.push(spec.x.clone());
    rim_y.sort();
    rim_y.dedup();

    let certificate = Certificate {
        start_key: engine.key(g)?.to_hex(),
        end_key: engine.key(&result)?.to_hex(),
        steps: vec![
            TransformStep::AddPoint {
                v: spec.x.clone(),
                rim: rim_x,
            },
            TransformStep::AddPoint {
                v: spec.y.clone(),
                rim: rim_y,
            },
            TransformStep::DeletePoint {
                v: spec.z.clone(),
            },
        ],
    };
    Ok((
        result,
        PairSplit {
            spec: spec.clone(),
            certificate,
        },
    ))
}

/// Samples a valid split by seeded rejection: up to 64 random `(z, parts)`
/// proposals drawn from the fixed xorshift stream, then a deterministic
/// fallback sweep (each vertex with both parts equal to its full rim, which
/// always satisfies the definition). Deterministic for a fixed seed.
pub fn random_split(
    g: &DigitalSpace,
    seed: u64,
) -> Result<(DigitalSpace, SplitSpec), TopoError> {
    if g.len() < 2 {
        return Err(TopoError::Precondition(
            "random_split requires at least two vertices".into(),
        ));
    }
    let mut rng = XorShift64::new(seed);
    for _ in 0..64 {
        let zi = rng.below(g.len());
        let z = g.name(zi).to_string();
        let rim: Vec<String> = g.rim(&z)?.vertex_names().to_vec();
        let mut part_x = Vec::new();
        let mut part_y = Vec::new();
        for r in &rim {
            match rng.below(3) {
                0 => part_x.push(r.clone()),
                1 => part_y.push(r.clone()),
                _ => {
                    part_x.push(r.clone());
                    part_y.push(r.clone());
                }
            }
        }
        let spec = SplitSpec::new(g, &z, part_x, part_y)?;
        if let Ok(result) = apply_split(g, &spec.z, &spec.x, &spec.y, &spec.part_x, &spec.part_y) {
            return Ok((result, spec));
        }
    }
    for zi in 0..g.len() {
        let z = g.name(zi).to_string();
        let rim: Vec<String> = g.rim(&z)?.vertex_names().to_vec();
        let spec = SplitSpec::new(g, &z, rim.clone(), rim)?;
        if let Ok(result) = apply_split(g, &spec.z, &spec.x, &spec.y, &spec.part_x, &spec.part_y) {
            return Ok((result, spec));
        }
    }
    Err(TopoError::NoValidSplit)
}
