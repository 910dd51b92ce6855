//! Shared search context: configured caps plus memo tables of canonical
//! facts.
//!
//! Every memo entry is keyed by a (possibly colored) canonical key and
//! records an isomorphism-invariant fact, so inserts are idempotent and the
//! tables are safe to share across threads: results do not depend on
//! interleaving.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;

use crate::canon::{canonical_key_capped, CanonKey};
use crate::error::TopoError;
use crate::recognize::SphereCertificate;
use crate::space::DigitalSpace;

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Vertex cap for backtracking searches (contractibility, sphere
    /// recognition, reductions). Exceeding it is an explicit error, never a
    /// silent heuristic answer.
    pub search_cap: usize,
    /// Vertex cap for canonical labeling.
    pub canon_cap: usize,
    /// Vertex cap for clique enumeration.
    pub clique_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            search_cap: 20,
            canon_cap: 24,
            clique_cap: 20,
        }
    }
}

/// Counters for the experiment hooks: places where the underlying theory
/// leaves an open question and the engine records what actually happened.
#[derive(Default, Debug)]
pub struct EngineStats {
    /// Spaces where greedy simple-point deletion got stuck but full
    /// backtracking still proved contractibility. None have ever been
    /// observed; a nonzero count would settle the greedy-completeness
    /// question in the negative.
    pub greedy_gaps: AtomicU64,
    /// States reached during sphere recognition that had no simple pair but
    /// were not minimal, inside a search that eventually succeeded — i.e.
    /// maximal contraction sequences that diverge.
    pub divergent_contractions: AtomicU64,
}

impl EngineStats {
    pub fn greedy_gaps(&self) -> u64 {
        self.greedy_gaps.load(Ordering::Relaxed)
    }
    pub fn divergent_contractions(&self) -> u64 {
        self.divergent_contractions.load(Ordering::Relaxed)
    }
}

/// Search engine with shared memoization.
#[derive(Default)]
pub struct Engine {
    pub caps: Caps,
    pub stats: EngineStats,
    /// canonical key -> is the space contractible
    pub(crate) contractible: DashMap<CanonKey, bool>,
    /// (n, key) -> contracts via simple pairs to the minimal n-sphere
    pub(crate) contracts_minimal: DashMap<(usize, CanonKey), bool>,
    /// (n, key) -> full digital-n-sphere predicate
    pub(crate) sphere_fact: DashMap<(usize, CanonKey), bool>,
    /// (n, key) -> certificate for the canonical representative of the class
    pub(crate) sphere_witness: DashMap<(usize, CanonKey), Arc<SphereCertificate>>,
    /// key -> simply connected (recorded only when fully exhaustive)
    pub(crate) simply_connected: DashMap<CanonKey, bool>,
    /// colored key (curve marked) -> a spanning disk exists (exhaustive only)
    pub(crate) spanning_disk: DashMap<CanonKey, bool>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    pub fn with_caps(caps: Caps) -> Self {
        Engine {
            caps,
            ..Engine::default()
        }
    }

    /// Canonical key under the engine's canonicalization cap.
    pub fn key(&self, g: &DigitalSpace) -> Result<CanonKey, TopoError> {
        canonical_key_capped(g, self.caps.canon_cap)
    }

    pub(crate) fn check_search_cap(
        &self,
        what: &'static str,
        size: usize,
    ) -> Result<(), TopoError> {
        if size > self.caps.search_cap {
            Err(TopoError::CapExceeded {
                what,
                size,
                cap: self.caps.search_cap,
            })
        } else {
            Ok(())
        }
    }
}

/// Node-expansion budget shared across one top-level search, including its
/// nested sub-searches. Once drained, the whole search aborts with
/// `BudgetExhausted`; that outcome is always kept distinct from a negative
/// answer.
pub struct Budget {
    remaining: AtomicU64,
}

impl Budget {
    pub fn new(nodes: u64) -> Self {
        Budget {
            remaining: AtomicU64::new(nodes),
        }
    }

    pub fn spend(&self) -> Result<(), TopoError> {
        let prev = self.remaining.fetch_sub(1, Ordering::Relaxed);
        if prev == 0 {
            self.remaining.store(0, Ordering::Relaxed);
            return Err(TopoError::BudgetExhausted);
        }
        Ok(())
    }
}
