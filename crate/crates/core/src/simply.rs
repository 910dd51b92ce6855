//! Simple closed curves, spanning-disk search, and (local) simple
//! connectedness, bounded-exhaustively at desk scale.
//!
//! A simple closed curve is a digital 1-sphere. Operationally that is an
//! induced cycle of length ≥ 4: a digital 1-sphere is connected with every
//! rim a two-point edgeless space, which for finite graphs forces a single
//! chordless cycle on at least four vertices, and conversely every such
//! cycle has those rims (the proof sketch is spelled out in the README).
//!
//! All three predicates are three-valued: `Unknown` is returned whenever a
//! budget or size limit kept some sub-search from being exhaustive, so
//! resource exhaustion can never masquerade as a topological fact.

use serde::{Deserialize, Serialize};

use crate::engine::{Budget, Engine};
use crate::error::TopoError;
use crate::recognize::DiskDecomposition;
use crate::space::{DigitalSpace, VertexSet};

/// All simple closed curves found in a host, deterministically ordered by
/// length then vertex names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSet(pub Vec<VertexSet>);

/// Limits for the bounded-exhaustive searches. With the defaults every
/// search on a host of at most 16 vertices is exhaustive, so true/false
/// answers at that scale are theorem-grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_curve_len: usize,
    pub max_disk_size: usize,
    pub max_contractible_size: usize,
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_curve_len: 16,
            max_disk_size: 17,
            max_contractible_size: 16,
            node_budget: 200_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum DiskSearch {
    Found(DiskDecomposition),
    /// Exhaustive failure: no induced subspace within limits spans the curve.
    NoDisk,
    /// A limit or budget truncated the search.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ScVerdict {
    SimplyConnected,
    NotSimplyConnected { witness_curve: VertexSet },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum LscVerdict {
    LocallySimplyConnected,
    NotLocallySimplyConnected {
        witness_subspace: VertexSet,
        witness_curve: VertexSet,
    },
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tri {
    Yes,
    No,
    Unknown,
}

/// Enumerates every induced cycle of length `4 ..= max_curve_len`, each
/// exactly once.
pub fn enumerate_simple_closed_curves(
    m: &DigitalSpace,
    limits: &SearchLimits,
) -> Result<CurveSet, TopoError> {
    let budget = Budget::new(limits.node_budget);
    enumerate_curves_budgeted(m, limits, &budget)
}

fn enumerate_curves_budgeted(
    m: &DigitalSpace,
    limits: &SearchLimits,
    budget: &Budget,
) -> Result<CurveSet, TopoError> {
    let mut found = Vec::new();
    let mut path = Vec::new();
    for start in 0..m.len() {
        path.clear();
        path.push(start);
        extend_cycle(m, &mut path, limits.max_curve_len, budget, &mut found)?;
    }
    let mut curves: Vec<VertexSet> = found
        .into_iter()
        .map(|cycle| VertexSet::from_indices(m, &cycle.into_iter().collect()))
        .collect();
    curves.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.names().cmp(b.names())));
    Ok(CurveSet(curves))
}

fn extend_cycle(
    m: &DigitalSpace,
    path: &mut Vec<usize>,
    max_len: usize,
    budget: &Budget,
    found: &mut Vec<Vec<usize>>,
) -> Result<(), TopoError> {
    budget.spend()?;
    let start = path[0];
    let last = *path.last().unwrap();
    for next in m.neighbors(last).iter() {
        // `start` is the smallest vertex of the cycle and the walk direction
        // is fixed by `path[1] < closing vertex`, so each induced cycle is
        // produced exactly once.
        if next <= start || path.contains(&next) {
            continue;
        }
        let chord = path
            .iter()
            .skip(1)
            .take(path.len().saturating_sub(2))
            .any(|&p| m.neighbors(next).contains(p));
        if chord {
            continue;
        }
        // adjacency to `start` is the path edge itself on the first step,
        // and a closure afterwards
        if path.len() >= 2 && m.neighbors(next).contains(start) {
            if path.len() >= 3 && path.len() < max_len && path[1] < next {
                let mut cycle = path.clone();
                cycle.push(next);
                found.push(cycle);
            }
            // extending past a start-adjacent vertex would leave a chord
            continue;
        }
        if path.len() + 2 > max_len {
            continue;
        }
        path.push(next);
        extend_cycle(m, path, max_len, budget, found)?;
        path.pop();
    }
    Ok(())
}

/// Searches for an induced 2-disk inside `m` whose boundary is exactly the
/// given curve: candidate vertex sets containing the curve are enumerated
/// by size then lexicographically and tested by coning. `NoDisk` is claimed
/// only when the enumeration was exhaustive.
pub fn find_spanning_disk(
    engine: &Engine,
    m: &DigitalSpace,
    curve: &VertexSet,
    limits: &SearchLimits,
) -> Result<DiskSearch, TopoError> {
    let budget = Budget::new(limits.node_budget);
    let curve_space = m.induced(curve)?;
    if !engine.is_n_sphere_fact(&curve_space, 1, &budget)? {
        return Err(TopoError::Precondition(
            "boundary is not a simple closed curve in the host".into(),
        ));
    }
    let free: Vec<usize> = (0..m.len())
        .filter(|i| !curve.contains(m.name(*i)))
        .collect();
    let max_extra = limits.max_disk_size.saturating_sub(curve.len()).min(free.len());
    let exhaustive = limits.max_disk_size >= m.len();

    for k in 0..=max_extra {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            match budget.spend() {
                Ok(()) => {}
                Err(TopoError::BudgetExhausted) => return Ok(DiskSearch::Unknown),
                Err(e) => return Err(e),
            }
            let mut names: Vec<String> = curve.names().to_vec();
            for &c in &combo {
                names.push(m.name(free[c]).to_string());
            }
            let candidate = VertexSet::new(m, names)?;
            let disk_space = m.induced(&candidate)?;
            match engine.is_n_disk(&disk_space, curve, 2, &budget) {
                Ok(true) => {
                    let interior = candidate.difference(curve);
                    return Ok(DiskSearch::Found(DiskDecomposition {
                        disk: disk_space,
                        boundary: curve.clone(),
                        interior,
                    }));
                }
                Ok(false) => {}
                Err(TopoError::BudgetExhausted) => return Ok(DiskSearch::Unknown),
                Err(e) => return Err(e),
            }
            if !next_combination(&mut combo, free.len()) {
                break;
            }
        }
    }
    Ok(if exhaustive {
        DiskSearch::NoDisk
    } else {
        DiskSearch::Unknown
    })
}

/// Advances a k-combination over `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    if k == 0 {
        return false;
    }
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

impl Engine {
    /// Existence-only spanning-disk check with memoization on the colored
    /// canonical key (curve marked). Facts are cached only when the search
    /// was exhaustive.
    fn has_spanning_disk(
        &self,
        m: &DigitalSpace,
        curve: &VertexSet,
        limits: &SearchLimits,
        budget: &Budget,
    ) -> Result<Tri, TopoError> {
        let exhaustive = limits.max_disk_size >= m.len();
        let cache_key = if exhaustive && m.len() <= self.caps.canon_cap {
            let colors: Vec<u32> = m
                .vertex_names()
                .iter()
                .map(|n| u32::from(curve.contains(n)))
                .collect();
            let key = crate::canon::colored_canonical_key(m, &colors, self.caps.canon_cap)?;
            if let Some(hit) = self.spanning_disk.get(&key) {
                return Ok(if *hit.value() { Tri::Yes } else { Tri::No });
            }
            Some(key)
        } else {
            None
        };

        let free: Vec<usize> = (0..m.len())
            .filter(|i| !curve.contains(m.name(*i)))
            .collect();
        let max_extra = limits
            .max_disk_size
            .saturating_sub(curve.len())
            .min(free.len());
        for k in 0..=max_extra {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                match budget.spend() {
                    Ok(()) => {}
                    Err(TopoError::BudgetExhausted) => return Ok(Tri::Unknown),
                    Err(e) => return Err(e),
                }
                let mut names: Vec<String> = curve.names().to_vec();
                for &c in &combo {
                    names.push(m.name(free[c]).to_string());
                }
                let candidate = m.induced(&VertexSet::new(m, names)?)?;
                match self.is_n_disk(&candidate, curve, 2, budget) {
                    Ok(true) => {
                        if let Some(key) = cache_key {
                            self.spanning_disk.insert(key, true);
                        }
                        return Ok(Tri::Yes);
                    }
                    Ok(false) => {}
                    Err(TopoError::BudgetExhausted) => return Ok(Tri::Unknown),
                    Err(e) => return Err(e),
                }
                if !next_combination(&mut combo, free.len()) {
                    break;
                }
            }
        }
        if exhaustive {
            if let Some(key) = cache_key {
                self.spanning_disk.insert(key, false);
            }
            Ok(Tri::No)
        } else {
            Ok(Tri::Unknown)
        }
    }

    /// Does every simple closed curve in `m` bound a 2-disk inside `m`?
    /// `Unknown` whenever a limit truncated any sub-search and no witness
    /// was found.
    pub fn is_simply_connected(
        &self,
        m: &DigitalSpace,
        limits: &SearchLimits,
    ) -> Result<ScVerdict, TopoError> {
        let budget = Budget::new(limits.node_budget);
        self.simply_connected_inner(m, limits, &budget)
    }

    fn simply_connected_inner(
        &self,
        m: &DigitalSpace,
        limits: &SearchLimits,
        budget: &Budget,
    ) -> Result<ScVerdict, TopoError> {
        let curves_complete = limits.max_curve_len >= m.len();
        let cache_key = if curves_complete
            && limits.max_disk_size >= m.len()
            && m.len() <= self.caps.canon_cap
        {
            let key = self.key(m)?;
            if self.simply_connected.get(&key).map(|e| *e.value()) == Some(true) {
                return Ok(ScVerdict::SimplyConnected);
            }
            Some(key)
        } else {
            None
        };

        let curves = match enumerate_curves_budgeted(m, limits, budget) {
            Ok(c) => c,
            Err(TopoError::BudgetExhausted) => return Ok(ScVerdict::Unknown),
            Err(e) => return Err(e),
        };
        let mut unknown_seen = false;
        for curve in &curves.0 {
            match self.has_spanning_disk(m, curve, limits, budget)? {
                Tri::Yes => {}
                Tri::No => {
                    if let Some(key) = cache_key {
                        self.simply_connected.insert(key, false);
                    }
                    return Ok(ScVerdict::NotSimplyConnected {
                        witness_curve: curve.clone(),
                    });
                }
                Tri::Unknown => unknown_seen = true,
            }
        }
        if unknown_seen || !curves_complete {
            return Ok(ScVerdict::Unknown);
        }
        if let Some(key) = cache_key {
            self.simply_connected.insert(key, true);
        }
        Ok(ScVerdict::SimplyConnected)
    }

    /// Does removing any contractible subspace leave a simply connected
    /// space? Contractible subspaces are enumerated by size then
    /// lexicographically, exhaustively when the host fits the limit.
    pub fn is_locally_simply_connected(
        &self,
        m: &DigitalSpace,
        limits: &SearchLimits,
    ) -> Result<LscVerdict, TopoError> {
        let budget = Budget::new(limits.node_budget);
        let exhaustive = limits.max_contractible_size >= m.len();
        let max_size = limits.max_contractible_size.min(m.len());
        let mut unknown_seen = false;
        let names = m.vertex_names().to_vec();

        for size in 1..=max_size {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                match budget.spend() {
                    Ok(()) => {}
                    Err(TopoError::BudgetExhausted) => return Ok(LscVerdict::Unknown),
                    Err(e) => return Err(e),
                }
                let subset = VertexSet::new(m, combo.iter().map(|&i| names[i].as_str()))?;
                let sub_space = m.induced(&subset)?;
                // contractible subspaces are connected; cheap reject first
                if sub_space.is_connected() {
                    let contractible = self.is_contractible(&sub_space)?.is_contractible();
                    if contractible {
                        let rest = m.induced(&m.full_vertex_set().difference(&subset))?;
                        match self.simply_connected_inner(&rest, limits, &budget)? {
                            ScVerdict::SimplyConnected => {}
                            ScVerdict::NotSimplyConnected { witness_curve } => {
                                return Ok(LscVerdict::NotLocallySimplyConnected {
                                    witness_subspace: subset,
                                    witness_curve,
                                });
                            }
                            ScVerdict::Unknown => unknown_seen = true,
                        }
                    }
                }
                if !next_combination(&mut combo, names.len()) {
                    break;
                }
            }
        }
        if unknown_seen || !exhaustive {
            Ok(LscVerdict::Unknown)
        } else {
            Ok(LscVerdict::LocallySimplyConnected)
        }
    }
}
