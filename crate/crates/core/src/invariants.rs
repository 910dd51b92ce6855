//! Homotopy-invariant audits over the clique complex: clique counts, Euler
//! characteristic, and GF(2) Betti numbers.
//!
//! GF(2) coefficients are deliberate: torsion is invisible to the Euler
//! characteristic, but `b_1` over GF(2) still separates, say, a projective
//! plane from a sphere, and elimination over the two-element field keeps the
//! audit exact with no integer growth.

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::TopoError;
use crate::space::DigitalSpace;

/// Vertex cap for clique enumeration.
pub const DEFAULT_CLIQUE_CAP: usize = 20;

/// The full audit record for one space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// `clique_counts[k-1]` = number of complete subgraphs on `k` vertices.
    pub clique_counts: Vec<u64>,
    /// Alternating sum of the clique counts.
    pub euler: i64,
    /// GF(2) Betti numbers `b_0 .. b_d` of the clique complex.
    pub betti: Vec<u64>,
}

/// Exact clique counts by size, via vertex-ordered branch enumeration with
/// bit-set intersections.
pub fn clique_vector(g: &DigitalSpace) -> Result<Vec<u64>, TopoError> {
    clique_vector_capped(g, DEFAULT_CLIQUE_CAP)
}

pub fn clique_vector_capped(g: &DigitalSpace, cap: usize) -> Result<Vec<u64>, TopoError> {
    if g.len() > cap {
        return Err(TopoError::CapExceeded {
            what: "clique enumeration",
            size: g.len(),
            cap,
        });
    }
    let mut counts = Vec::new();
    let all: BitSet = (0..g.len()).collect();
    walk(g, &all, 0, &mut counts);
    Ok(counts)
}

fn walk(g: &DigitalSpace, cand: &BitSet, depth: usize, counts: &mut Vec<u64>) {
    for v in cand.iter() {
        if counts.len() <= depth {
            counts.push(0);
        }
        counts[depth] += 1;
        let mut next = cand.intersection(g.neighbors(v));
        for u in next.clone().iter() {
            if u <= v {
                next.remove(u);
            } else {
                break;
            }
        }
        if !next.is_empty() {
            walk(g, &next, depth + 1, counts);
        }
    }
}

/// Euler characteristic: alternating sum over the clique vector.
pub fn euler_characteristic(g: &DigitalSpace) -> Result<i64, TopoError> {
    Ok(euler_from_cliques(&clique_vector(g)?))
}

pub fn euler_from_cliques(counts: &[u64]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// GF(2) Betti numbers of the clique complex, via boundary matrices and
/// Gaussian elimination.
pub fn betti_gf2(g: &DigitalSpace) -> Result<Vec<u64>, TopoError> {
    betti_gf2_capped(g, DEFAULT_CLIQUE_CAP)
}

pub fn betti_gf2_capped(g: &DigitalSpace, cap: usize) -> Result<Vec<u64>, TopoError> {
    if g.len() > cap {
        return Err(TopoError::CapExceeded {
            what: "clique homology",
            size: g.len(),
            cap,
        });
    }
    if g.is_empty() {
        return Ok(Vec::new());
    }
    // simplices[d] = all (d+1)-cliques as sorted index tuples, in
    // lexicographic order (the enumeration is ascending by construction).
    let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
    let all: BitSet = (0..g.len()).collect();
    collect(g, &all, &mut Vec::new(), &mut simplices);
    let dim = simplices.len() - 1;

    // rank of each boundary map ∂_d : C_d -> C_{d-1}, d = 1..=dim
    let mut ranks = vec![0u64; dim + 2];
    for d in 1..=dim {
        let rows = &simplices[d - 1];
        let index_of = |facet: &[usize]| -> usize {
            rows.binary_search_by(|r| r.as_slice().cmp(facet)).unwrap()
        };
        let mut pivots: Vec<(usize, BitSet)> = Vec::new();
        for simplex in &simplices[d] {
            let mut col = BitSet::with_capacity(rows.len());
            let mut facet = Vec::with_capacity(d);
            for skip in 0..simplex.len() {
                facet.clear();
                facet.extend(simplex.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v));
                col.insert(index_of(&facet));
            }
            for (lead, pivot) in &pivots {
                if col.contains(*lead) {
                    col.xor_with(pivot);
                }
            }
            if let Some(lead) = col.first() {
                pivots.push((lead, col));
                pivots.sort_by_key(|(l, _)| *l);
            }
        }
        ranks[d] = pivots.len() as u64;
    }

    let mut betti = Vec::with_capacity(dim + 1);
    for d in 0..=dim {
        let nd = simplices[d].len() as u64;
        betti.push(nd - ranks[d] - ranks[d + 1]);
    }
    // Betti numbers above the complex dimension are zero by convention;
    // trimming them makes the vector a homotopy invariant outright (the
    // complex dimension itself is not one).
    while betti.len() > 1 && betti.last() == Some(&0) {
        betti.pop();
    }
    Ok(betti)
}

fn collect(
    g: &DigitalSpace,
    cand: &BitSet,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    for v in cand.iter() {
        prefix.push(v);
        if out.len() < prefix.len() {
            out.push(Vec::new());
        }
        out[prefix.len() - 1].push(prefix.clone());
        let mut next = cand.intersection(g.neighbors(v));
        for u in next.clone().iter() {
            if u <= v {
                next.remove(u);
            } else {
                break;
            }
        }
        if !next.is_empty() {
            collect(g, &next, prefix, out);
        }
        prefix.pop();
    }
}

/// Computes the whole audit at once.
pub fn profile(g: &DigitalSpace) -> Result<HomologyProfile, TopoError> {
    let clique_counts = clique_vector(g)?;
    let euler = euler_from_cliques(&clique_counts);
    let betti = betti_gf2(g)?;
    Ok(HomologyProfile {
        clique_counts,
        euler,
        betti,
    })
}
