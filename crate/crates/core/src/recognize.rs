//! Recognition of digital n-spheres, minimal spheres, n-manifolds and
//! n-disks, with replayable certificates.
//!
//! A digital n-sphere is a connected space whose every rim is an
//! (n−1)-sphere and which contracts to the minimal n-sphere by simple-pair
//! contractions. The contraction clause is decided by complete backtracking
//! over pair choices — confluence of contraction sequences is not assumed —
//! memoized on canonical keys. Budget exhaustion is an error, distinct from
//! a negative answer: a `No` is always exhaustive.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_space;
use crate::engine::{Budget, Engine};
use crate::error::TopoError;
use crate::pairs::{self, PairContraction};
use crate::space::{DigitalSpace, VertexSet};

/// Exactly two vertices, no edge.
pub fn is_zero_sphere(g: &DigitalSpace) -> bool {
    g.len() == 2 && g.edge_count() == 0
}

/// A space is the minimal n-sphere iff its complement is a perfect matching:
/// `2n + 2` vertices, each adjacent to all but exactly one other. Exact and
/// quadratic; no isomorphism search involved.
pub fn is_minimal_n_sphere(g: &DigitalSpace) -> Option<usize> {
    let m = g.len();
    if m < 2 || !m.is_multiple_of(2) {
        return None;
    }
    for i in 0..m {
        if g.degree(i) != m - 2 {
            return None;
        }
    }
    Some(m / 2 - 1)
}

/// Advisory only: walks rims until reaching a two-point edgeless space.
/// Callers of the recognizers always supply the dimension themselves.
pub fn infer_dimension(g: &DigitalSpace) -> Option<usize> {
    if is_zero_sphere(g) {
        return Some(0);
    }
    if g.is_empty() {
        return None;
    }
    let rim = g.rim(g.name(0)).ok()?;
    if rim.is_empty() {
        return None;
    }
    infer_dimension(&rim).map(|d| d + 1)
}

/// Witness that a space is a digital n-sphere: a simple-pair contraction
/// sequence down to the minimal n-sphere, plus a recursive (n−1)-sphere
/// witness for every rim. Rim witnesses are stated on canonically relabeled
/// representatives and shared across isomorphic rims via their canonical
/// key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereCertificate {
    pub dimension: usize,
    pub start_key: String,
    pub end_key: String,
    pub contractions: Vec<PairContraction>,
    /// vertex name → canonical key (hex) of its rim
    pub rims: BTreeMap<String, String>,
    /// rim canonical key (hex) → witness for the canonical representative
    pub rim_witnesses: BTreeMap<String, SphereCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereOutcome {
    Sphere(SphereCertificate),
    /// Exhaustive negative answer.
    No,
}

impl SphereOutcome {
    pub fn is_sphere(&self) -> bool {
        matches!(self, SphereOutcome::Sphere(_))
    }
}

/// An n-sphere minus one vertex: the disk, its boundary (the removed
/// vertex's rim) and its interior. Also reused for manifolds with spherical
/// boundary, where the interior excludes the whole ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskDecomposition {
    pub disk: DigitalSpace,
    pub boundary: VertexSet,
    pub interior: VertexSet,
}

/// `M − v` with boundary `O(v)` and interior `M − U(v)`. The caller vouches
/// that `M` is an n-sphere (or n-manifold for the boundary variant); this
/// operation itself only rearranges vertices.
pub fn disk_decomposition(m: &DigitalSpace, v: &str) -> Result<DiskDecomposition, TopoError> {
    let disk = m.delete_vertex(v)?;
    let boundary = VertexSet::new(&disk, m.rim(v)?.vertex_names().to_vec())?;
    let interior = disk.full_vertex_set().difference(&boundary);
    Ok(DiskDecomposition {
        disk,
        boundary,
        interior,
    })
}

/// `M − v` as an n-manifold with spherical boundary `O(v)` and interior
/// `M − U(v)`. Identical shape to `disk_decomposition`; on an n-sphere the
/// two agree.
pub fn manifold_with_boundary(m: &DigitalSpace, v: &str) -> Result<DiskDecomposition, TopoError> {
    disk_decomposition(m, v)
}

impl Engine {
    /// Boolean n-sphere predicate: same decision as [`Engine::is_n_sphere`]
    /// without certificate construction. Used by the inner loops of disk and
    /// manifold checks.
    pub fn is_n_sphere_fact(
        &self,
        g: &DigitalSpace,
        n: usize,
        budget: &Budget,
    ) -> Result<bool, TopoError> {
        budget.spend()?;
        match n {
            0 => Ok(is_zero_sphere(g)),
            1 => Ok(one_sphere_shape(g)),
            _ => {
                if !g.is_connected() {
                    return Ok(false);
                }
                self.check_search_cap("sphere recognition", g.len())?;
                let key = self.key(g)?;
                if let Some(known) = self.sphere_fact.get(&(n, key.clone())) {
                    return Ok(*known.value());
                }
                let mut ok = true;
                for v in g.vertex_names() {
                    if !self.is_n_sphere_fact(&g.rim(v)?, n - 1, budget)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    ok = self
                        .contraction_search(g, n, budget, &mut 0)?
                        .is_some();
                }
                self.sphere_fact.insert((n, key), ok);
                Ok(ok)
            }
        }
    }

    /// Full recognition: certificate on success, exhaustive `No` otherwise.
    pub fn is_n_sphere(
        &self,
        g: &DigitalSpace,
        n: usize,
        budget: &Budget,
    ) -> Result<SphereOutcome, TopoError> {
        budget.spend()?;
        let key_hex = |g: &DigitalSpace| -> Result<String, TopoError> {
            Ok(self.key(g)?.to_hex())
        };
        if n == 0 {
            if is_zero_sphere(g) {
                let k = key_hex(g)?;
                return Ok(SphereOutcome::Sphere(SphereCertificate {
                    dimension: 0,
                    start_key: k.clone(),
                    end_key: k,
                    contractions: Vec::new(),
                    rims: BTreeMap::new(),
                    rim_witnesses: BTreeMap::new(),
                }));
            }
            return Ok(SphereOutcome::No);
        }
        if !g.is_connected() {
            return Ok(SphereOutcome::No);
        }
        if n >= 2 {
            self.check_search_cap("sphere recognition", g.len())?;
            let key = self.key(g)?;
            if self.sphere_fact.get(&(n, key)).map(|e| *e.value()) == Some(false) {
                return Ok(SphereOutcome::No);
            }
        } else if !one_sphere_shape(g) {
            return Ok(SphereOutcome::No);
        }

        // Rim witnesses, shared by canonical key.
        let mut rims = BTreeMap::new();
        let mut rim_witnesses = BTreeMap::new();
        for v in g.vertex_names() {
            let rim = g.rim(v)?;
            let rkey = self.key(&rim)?;
            let hex = rkey.to_hex();
            rims.insert(v.clone(), hex.clone());
            if rim_witnesses.contains_key(&hex) {
                continue;
            }
            match self.rim_witness(&rim, n - 1, budget)? {
                Some(w) => {
                    rim_witnesses.insert(hex, (*w).clone());
                }
                None => {
                    if n >= 2 {
                        self.sphere_fact.insert((n, self.key(g)?), false);
                    }
                    return Ok(SphereOutcome::No);
                }
            }
        }

        // Contraction sequence.
        let mut dead_ends = 0usize;
        let path = match self.contraction_search(g, n, budget, &mut dead_ends)? {
            Some(p) => p,
            None => {
                if n >= 2 {
                    self.sphere_fact.insert((n, self.key(g)?), false);
                }
                return Ok(SphereOutcome::No);
            }
        };
        if dead_ends > 0 {
            self.stats
                .divergent_contractions
                .fetch_add(dead_ends as u64, std::sync::atomic::Ordering::Relaxed);
        }
        let mut contractions = Vec::with_capacity(path.len());
        let mut state = g.clone();
        for (x, y) in path {
            let (next, record) = pairs::contract_pair(self, &state, &x, &y)?;
            contractions.push(record);
            state = next;
        }
        debug_assert_eq!(is_minimal_n_sphere(&state), Some(n));
        if n >= 2 {
            self.sphere_fact.insert((n, self.key(g)?), true);
        }
        Ok(SphereOutcome::Sphere(SphereCertificate {
            dimension: n,
            start_key: key_hex(g)?,
            end_key: key_hex(&state)?,
            contractions,
            rims,
            rim_witnesses,
        }))
    }

    /// Certificate for a rim, computed on its canonical relabeling so the
    /// same witness serves every isomorphic rim. Cached by canonical key.
    fn rim_witness(
        &self,
        rim: &DigitalSpace,
        n: usize,
        budget: &Budget,
    ) -> Result<Option<Arc<SphereCertificate>>, TopoError> {
        let rkey = self.key(rim)?;
        if let Some(w) = self.sphere_witness.get(&(n, rkey.clone())) {
            return Ok(Some(w.value().clone()));
        }
        let rcanon = canonical_space(rim, self.caps.canon_cap)?;
        match self.is_n_sphere(&rcanon, n, budget)? {
            SphereOutcome::Sphere(cert) => {
                let arc = Arc::new(cert);
                self.sphere_witness.insert((n, rkey), arc.clone());
                Ok(Some(arc))
            }
            SphereOutcome::No => Ok(None),
        }
    }

    /// Backtracking over simple-pair contractions, memoized on canonical
    /// keys: does this space contract to the minimal n-sphere? Returns the
    /// pair sequence on success. `dead_ends` counts states with no simple
    /// pair that are not minimal.
    fn contraction_search(
        &self,
        g: &DigitalSpace,
        n: usize,
        budget: &Budget,
        dead_ends: &mut usize,
    ) -> Result<Option<Vec<(String, String)>>, TopoError> {
        budget.spend()?;
        if is_minimal_n_sphere(g) == Some(n) {
            return Ok(Some(Vec::new()));
        }
        if g.len() <= 2 * n + 2 {
            // contraction only shrinks; smaller than minimal can never work
            return Ok(None);
        }
        let key = self.key(g)?;
        if self
            .contracts_minimal
            .get(&(n, key.clone()))
            .map(|e| *e.value())
            == Some(false)
        {
            return Ok(None);
        }
        let mut any_pair = false;
        for (x, y) in g.edges() {
            if !pairs::is_simple_pair(g, &x, &y)? {
                continue;
            }
            any_pair = true;
            let z = pairs::fresh_name(g, &format!("{x}+{y}"));
            let child = pairs::contract_pair_named(g, &x, &y, &z)?;
            if let Some(mut rest) = self.contraction_search(&child, n, budget, dead_ends)? {
                self.contracts_minimal.insert((n, key), true);
                rest.insert(0, (x, y));
                return Ok(Some(rest));
            }
        }
        if !any_pair {
            *dead_ends += 1;
        }
        self.contracts_minimal.insert((n, key), false);
        Ok(None)
    }

    /// A digital n-manifold: connected, every rim an (n−1)-sphere.
    pub fn is_n_manifold(
        &self,
        g: &DigitalSpace,
        n: usize,
        budget: &Budget,
    ) -> Result<bool, TopoError> {
        if n == 0 {
            return Ok(is_zero_sphere(g));
        }
        if g.is_empty() || !g.is_connected() {
            return Ok(false);
        }
        for v in g.vertex_names() {
            if !self.is_n_sphere_fact(&g.rim(v)?, n - 1, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A space is an n-disk with the given boundary iff coning a fresh apex
    /// onto exactly the boundary produces an n-sphere.
    pub fn is_n_disk(
        &self,
        d: &DigitalSpace,
        boundary: &VertexSet,
        n: usize,
        budget: &Budget,
    ) -> Result<bool, TopoError> {
        // validates boundary ⊆ d
        let _ = d.induced(boundary)?;
        let apex = pairs::fresh_name(d, "apex");
        let coned = d.add_vertex(&apex, boundary.names())?;
        self.is_n_sphere_fact(&coned, n, budget)
    }

    /// Replays a sphere certificate against a space: start key, every
    /// contraction step (through full certificate replay), the minimal end
    /// state, and every rim witness (recursively, once per distinct key).
    pub fn verify_sphere_certificate(
        &self,
        g: &DigitalSpace,
        cert: &SphereCertificate,
    ) -> Result<(), TopoError> {
        if self.key(g)?.to_hex() != cert.start_key {
            return Err(TopoError::StartKeyMismatch);
        }
        if cert.dimension == 0 {
            if !is_zero_sphere(g) {
                return Err(TopoError::Inconsistency(
                    "dimension-0 certificate on a non-zero-sphere".into(),
                ));
            }
            return Ok(());
        }

        let mut state = g.clone();
        for (index, pc) in cert.contractions.iter().enumerate() {
            if !pairs::is_simple_pair(&state, &pc.x, &pc.y)? {
                return Err(TopoError::StepPrecondition {
                    index,
                    reason: format!("pair {{{}, {}}} is not simple", pc.x, pc.y),
                });
            }
            state = self.replay(&state, &pc.certificate).map_err(|e| {
                TopoError::StepPrecondition {
                    index,
                    reason: e.to_string(),
                }
            })?;
        }
        if is_minimal_n_sphere(&state) != Some(cert.dimension) {
            return Err(TopoError::Inconsistency(
                "contraction sequence does not end at the minimal sphere".into(),
            ));
        }
        if self.key(&state)?.to_hex() != cert.end_key {
            return Err(TopoError::EndKeyMismatch);
        }

        let mut verified: std::collections::BTreeSet<&str> = std::collections::BTreeSet::new();
        for v in g.vertex_names() {
            let rim = g.rim(v)?;
            let hex = self.key(&rim)?.to_hex();
            let recorded = cert.rims.get(v).ok_or_else(|| {
                TopoError::Inconsistency(format!("no rim key recorded for `{v}`"))
            })?;
            if *recorded != hex {
                return Err(TopoError::Inconsistency(format!(
                    "rim key mismatch at `{v}`"
                )));
            }
            let witness = cert.rim_witnesses.get(&hex).ok_or_else(|| {
                TopoError::Inconsistency(format!("no rim witness for key of `{v}`"))
            })?;
            if witness.dimension + 1 != cert.dimension {
                return Err(TopoError::Inconsistency(format!(
                    "rim witness at `{v}` has dimension {} in a dimension-{} certificate",
                    witness.dimension, cert.dimension
                )));
            }
            if verified.insert(cert.rims.get(v).unwrap()) {
                let rcanon = canonical_space(&rim, self.caps.canon_cap)?;
                self.verify_sphere_certificate(&rcanon, witness)?;
            }
        }
        Ok(())
    }
}

/// Fast exact test for digital 1-spheres: connected, 2-regular, and no
/// vertex's two neighbors adjacent — i.e. an induced cycle of length ≥ 4.
pub(crate) fn one_sphere_shape(g: &DigitalSpace) -> bool {
    if g.len() < 4 || !g.is_connected() {
        return false;
    }
    for i in 0..g.len() {
        let nb: Vec<usize> = g.neighbors(i).iter().collect();
        if nb.len() != 2 || g.neighbors(nb[0]).contains(nb[1]) {
            return false;
        }
    }
    true
}
