//! Simple points and edges, contractibility with certificates, and
//! certificate replay.
//!
//! A space is contractible when sequential deletion of simple points reduces
//! it to a single vertex. The decision procedure is complete backtracking
//! over deletion orders: a greedy pass (always delete the first simple
//! point) is tried first as an accelerator, but a greedy failure always
//! falls back to the full search before a negative answer is given, since
//! greedy deletion is not known to be confluent.

use serde::{Deserialize, Serialize};


use crate::canon::colored_canonical_key;
use crate::engine::Engine;
use crate::error::TopoError;
use crate::pairs;
use crate::space::{DigitalSpace, VertexSet};

/// One elementary move. Every step kind is invertible and carries enough
/// payload to be applied by name against a concrete space; a step is
/// applicable only if its simplicity precondition holds at application time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TransformStep {
    DeletePoint {
        v: String,
    },
    AddPoint {
        v: String,
        rim: Vec<String>,
    },
    DeleteEdge {
        u: String,
        v: String,
    },
    AddEdge {
        u: String,
        v: String,
    },
    ContractPair {
        x: String,
        y: String,
        z: String,
    },
    SplitPoint {
        z: String,
        x: String,
        y: String,
        part_x: Vec<String>,
        part_y: Vec<String>,
    },
}

impl TransformStep {
    /// The paired inverse step, with payloads resolved against the space the
    /// step is about to be applied to.
    pub fn inverse_in(&self, g: &DigitalSpace) -> Result<TransformStep, TopoError> {
        Ok(match self {
            TransformStep::DeletePoint { v } => TransformStep::AddPoint {
                v: v.clone(),
                rim: g.rim(v)?.vertex_names().to_vec(),
            },
            TransformStep::AddPoint { v, .. } => TransformStep::DeletePoint { v: v.clone() },
            TransformStep::DeleteEdge { u, v } => TransformStep::AddEdge {
                u: u.clone(),
                v: v.clone(),
            },
            TransformStep::AddEdge { u, v } => TransformStep::DeleteEdge {
                u: u.clone(),
                v: v.clone(),
            },
            TransformStep::ContractPair { x, y, z } => {
                let part_x: Vec<String> = g
                    .rim(x)?
                    .vertex_names()
                    .iter()
                    .filter(|n| *n != y)
                    .cloned()
                    .collect();
                let part_y: Vec<String> = g
                    .rim(y)?
                    .vertex_names()
                    .iter()
                    .filter(|n| *n != x)
                    .cloned()
                    .collect();
                TransformStep::SplitPoint {
                    z: z.clone(),
                    x: x.clone(),
                    y: y.clone(),
                    part_x,
                    part_y,
                }
            }
            TransformStep::SplitPoint { z, x, y, .. } => TransformStep::ContractPair {
                x: x.clone(),
                y: y.clone(),
                z: z.clone(),
            },
        })
    }
}

/// Replayable witness of a homotopy equivalence: an ordered list of steps
/// together with the canonical keys of the spaces it starts and ends at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub start_key: String,
    pub end_key: String,
    pub steps: Vec<TransformStep>,
}

/// Outcome of the contractibility decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contractibility {
    Contractible(Certificate),
    /// Exhaustive-search witness: no deletion order succeeds.
    /// `explored_classes` counts the isomorphism classes the search closed.
    NotContractible { explored_classes: usize },
}

impl Contractibility {
    pub fn is_contractible(&self) -> bool {
        matches!(self, Contractibility::Contractible(_))
    }
}

/// Outcome of reducing a contractible space onto a contractible subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Reduced(Certificate),
    No,
}

impl Engine {
    /// A point is simple iff its rim is contractible. An isolated vertex is
    /// never simple (the empty space is not contractible).
    pub fn is_simple_point(&self, g: &DigitalSpace, v: &str) -> Result<bool, TopoError> {
        let rim = g.rim(v)?;
        if rim.is_empty() {
            return Ok(false);
        }
        Ok(self.is_contractible(&rim)?.is_contractible())
    }

    /// An edge is simple iff the joint rim `O(u) ∩ O(v)` is contractible.
    pub fn is_simple_edge(&self, g: &DigitalSpace, u: &str, v: &str) -> Result<bool, TopoError> {
        if !g.are_adjacent(u, v)? {
            return Err(TopoError::NotAnEdge(u.to_string(), v.to_string()));
        }
        let ui = g.index_of(u).unwrap();
        let vi = g.index_of(v).unwrap();
        let joint = g.neighbors(ui).intersection(g.neighbors(vi));
        if joint.is_empty() {
            return Ok(false);
        }
        let sub = g.induced_by_indices(&joint);
        Ok(self.is_contractible(&sub)?.is_contractible())
    }

    /// Decides contractibility with a delete-point certificate on success.
    ///
    /// Greedy deletion is attempted first; on greedy failure the decision
    /// falls to complete backtracking over all deletion orders, memoized on
    /// canonical keys. A negative answer is therefore exhaustive.
    pub fn is_contractible(&self, g: &DigitalSpace) -> Result<Contractibility, TopoError> {
        if g.is_empty() {
            return Err(TopoError::EmptySpace);
        }
        self.check_search_cap("contractibility search", g.len())?;
        if g.len() == 1 {
            let key = self.key(g)?.to_hex();
            return Ok(Contractibility::Contractible(Certificate {
                start_key: key.clone(),
                end_key: key,
                steps: Vec::new(),
            }));
        }
        if let Some(order) = self.greedy_deletions(g)? {
            return Ok(Contractibility::Contractible(self.deletion_certificate(g, order)?));
        }
        let mut explored = 0usize;
        match self.backtrack_deletions(g, &mut explored)? {
            Some(order) => {
                // Greedy failed yet backtracking succeeded: evidence that
                // greedy deletion is incomplete. Record it.
                self.stats
                    .greedy_gaps
                    .fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                Ok(Contractibility::Contractible(self.deletion_certificate(g, order)?))
            }
            None => Ok(Contractibility::NotContractible {
                explored_classes: explored,
            }),
        }
    }

    fn deletion_certificate(
        &self,
        g: &DigitalSpace,
        order: Vec<String>,
    ) -> Result<Certificate, TopoError> {
        let mut end = g.clone();
        for v in &order {
            end = end.delete_vertex(v)?;
        }
        Ok(Certificate {
            start_key: self.key(g)?.to_hex(),
            end_key: self.key(&end)?.to_hex(),
            steps: order
                .into_iter()
                .map(|v| TransformStep::DeletePoint { v })
                .collect(),
        })
    }

    /// Greedy pass: repeatedly delete the first simple point in canonical
    /// order. Returns the deletion order on success, `None` when stuck.
    fn greedy_deletions(&self, g: &DigitalSpace) -> Result<Option<Vec<String>>, TopoError> {
        let mut state = g.clone();
        let mut order = Vec::new();
        while state.len() > 1 {
            let mut deleted = false;
            for i in 0..state.len() {
                let v = state.name(i).to_string();
                if self.is_simple_point(&state, &v)? {
                    state = state.delete_vertex(&v)?;
                    order.push(v);
                    deleted = true;
                    break;
                }
            }
            if !deleted {
                return Ok(None);
            }
        }
        Ok(Some(order))
    }

    fn backtrack_deletions(
        &self,
        g: &DigitalSpace,
        explored: &mut usize,
    ) -> Result<Option<Vec<String>>, TopoError> {
        if g.len() == 1 {
            return Ok(Some(Vec::new()));
        }
        // Deletion never reconnects components and an isolated vertex is
        // never simple, so a disconnected state is a dead end.
        if !g.is_connected() {
            return Ok(None);
        }
        let key = self.key(g)?;
        if let Some(known) = self.contractible.get(&key).map(|e| *e.value()) {
            if !known {
                return Ok(None);
            }
            // Known contractible: the successful chain below is cheap to
            // re-walk because every child on it is memoized.
        }
        for i in 0..g.len() {
            let v = g.name(i).to_string();
            if !self.is_simple_point(g, &v)? {
                continue;
            }
            let child = g.delete_vertex(&v)?;
            if let Some(mut rest) = self.backtrack_deletions(&child, explored)? {
                self.contractible.insert(key, true);
                rest.insert(0, v);
                return Ok(Some(rest));
            }
        }
        *explored += 1;
        self.contractible.insert(key, false);
        Ok(None)
    }

    /// Transforms a contractible `g` onto the contractible induced subspace
    /// on `target` by deleting simple points, or reports exhaustive failure.
    pub fn reduce_onto(&self, g: &DigitalSpace, target: &VertexSet) -> Result<Reduction, TopoError> {
        self.check_search_cap("reduction search", g.len())?;
        let sub = g.induced(target)?;
        if sub.is_empty() {
            return Err(TopoError::EmptySpace);
        }
        if !self.is_contractible(g)?.is_contractible() {
            return Err(TopoError::Precondition(
                "reduce_onto requires a contractible host".into(),
            ));
        }
        if !self.is_contractible(&sub)?.is_contractible() {
            return Err(TopoError::Precondition(
                "reduce_onto requires a contractible target subspace".into(),
            ));
        }
        let mut failed: std::collections::HashSet<crate::canon::CanonKey> =
            std::collections::HashSet::new();
        match self.reduce_search(g, target, &mut failed)? {
            Some(order) => {
                let cert = Certificate {
                    start_key: self.key(g)?.to_hex(),
                    end_key: self.key(&sub)?.to_hex(),
                    steps: order
                        .into_iter()
                        .map(|v| TransformStep::DeletePoint { v })
                        .collect(),
                };
                Ok(Reduction::Reduced(cert))
            }
            None => Ok(Reduction::No),
        }
    }

    fn reduce_search(
        &self,
        g: &DigitalSpace,
        target: &VertexSet,
        failed: &mut std::collections::HashSet<crate::canon::CanonKey>,
    ) -> Result<Option<Vec<String>>, TopoError> {
        if g.len() == target.len() {
            return Ok(Some(Vec::new()));
        }
        // Memo on the colored canonical key: the target vertices are pinned,
        // so plain isomorphism would be unsound here.
        let colors: Vec<u32> = g
            .vertex_names()
            .iter()
            .map(|n| u32::from(target.contains(n)))
            .collect();
        let key = colored_canonical_key(g, &colors, self.caps.canon_cap)?;
        if failed.contains(&key) {
            return Ok(None);
        }
        for i in 0..g.len() {
            let v = g.name(i).to_string();
            if target.contains(&v) || !self.is_simple_point(g, &v)? {
                continue;
            }
            let child = g.delete_vertex(&v)?;
            if let Some(mut rest) = self.reduce_search(&child, target, failed)? {
                rest.insert(0, v);
                return Ok(Some(rest));
            }
        }
        failed.insert(key);
        Ok(None)
    }

    /// Applies one step after verifying its precondition.
    pub fn apply_step(
        &self,
        g: &DigitalSpace,
        step: &TransformStep,
    ) -> Result<DigitalSpace, TopoError> {
        match step {
            TransformStep::DeletePoint { v } => {
                if !self.is_simple_point(g, v)? {
                    return Err(TopoError::Precondition(format!("point `{v}` is not simple")));
                }
                g.delete_vertex(v)
            }
            TransformStep::AddPoint { v, rim } => {
                let rim_set = VertexSet::new(g, rim.iter().map(String::as_str))?;
                let attached = g.induced(&rim_set)?;
                if attached.is_empty()
                    || !self.is_contractible(&attached)?.is_contractible()
                {
                    return Err(TopoError::Precondition(format!(
                        "attachment rim of `{v}` is not contractible"
                    )));
                }
                g.add_vertex(v, rim_set.names())
            }
            TransformStep::DeleteEdge { u, v } => {
                if !self.is_simple_edge(g, u, v)? {
                    return Err(TopoError::Precondition(format!(
                        "edge ({u},{v}) is not simple"
                    )));
                }
                g.delete_edge(u, v)
            }
            TransformStep::AddEdge { u, v } => {
                let with = g.add_edge(u, v)?;
                if !self.is_simple_edge(&with, u, v)? {
                    return Err(TopoError::Precondition(format!(
                        "edge ({u},{v}) would not be simple after attachment"
                    )));
                }
                Ok(with)
            }
            TransformStep::ContractPair { x, y, z } => {
                if !pairs::is_simple_pair(g, x, y)? {
                    return Err(TopoError::PairNotSimple(x.clone(), y.clone()));
                }
                pairs::contract_pair_named(g, x, y, z)
            }
            TransformStep::SplitPoint {
                z,
                x,
                y,
                part_x,
                part_y,
            } => pairs::apply_split(g, z, x, y, part_x, part_y),
        }
    }

    /// Replays a certificate against a space, re-verifying every step's
    /// precondition and both canonical keys.
    pub fn replay(&self, g: &DigitalSpace, cert: &Certificate) -> Result<DigitalSpace, TopoError> {
        if self.key(g)?.to_hex() != cert.start_key {
            return Err(TopoError::StartKeyMismatch);
        }
        let mut state = g.clone();
        for (index, step) in cert.steps.iter().enumerate() {
            state = self.apply_step(&state, step).map_err(|e| {
                TopoError::StepPrecondition {
                    index,
                    reason: e.to_string(),
                }
            })?;
        }
        if self.key(&state)?.to_hex() != cert.end_key {
            return Err(TopoError::EndKeyMismatch);
        }
        Ok(state)
    }
}

/// Inverse certificate: replays from the end space back to the start space.
pub fn invert_certificate(
    engine: &Engine,
    start: &DigitalSpace,
    cert: &Certificate,
) -> Result<Certificate, TopoError> {
    let mut state = start.clone();
    let mut inverse_steps = Vec::with_capacity(cert.steps.len());
    for step in &cert.steps {
        inverse_steps.push(step.inverse_in(&state)?);
        state = engine.apply_step(&state, step)?;
    }
    inverse_steps.reverse();
    Ok(Certificate {
        start_key: cert.end_key.clone(),
        end_key: cert.start_key.clone(),
        steps: inverse_steps,
    })
}
