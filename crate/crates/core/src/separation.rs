//! Separation of a manifold by an embedded sphere, and the equator
//! construction for 2-spheres.
//!
//! A separation is a partition `M = A ∪ S ∪ B` with `A`, `B` nonempty and no
//! edge between `A` and `B`. `separate` reports the exact component
//! structure of `M − S`: one component is not a separation, two are, and
//! more than two is surfaced as its own result kind rather than hidden —
//! inputs outside the theory's hypotheses must not be misreported.

use serde::{Deserialize, Serialize};

use crate::engine::{Budget, Engine};
use crate::error::TopoError;
use crate::pairs;
use crate::space::{DigitalSpace, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub host: DigitalSpace,
    pub a: VertexSet,
    pub s: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    /// Re-checks the defining invariants: `A, S, B` partition the host,
    /// `A` and `B` are nonempty, and no `A`–`B` edge exists.
    pub fn verify(&self) -> Result<(), TopoError> {
        if self.a.is_empty() || self.b.is_empty() {
            return Err(TopoError::Inconsistency("empty separation side".into()));
        }
        let total = self.a.len() + self.s.len() + self.b.len();
        if total != self.host.len() {
            return Err(TopoError::Inconsistency(
                "separation does not partition the host".into(),
            ));
        }
        let union = self.a.union(&self.s).union(&self.b);
        if union.len() != self.host.len() {
            return Err(TopoError::Inconsistency(
                "separation parts overlap".into(),
            ));
        }
        for u in self.a.names() {
            for v in self.b.names() {
                if self.host.are_adjacent(u, v)? {
                    return Err(TopoError::Inconsistency(format!(
                        "separation sides adjacent at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SeparationOutcome {
    Separated(Separation),
    /// `M − S` stayed connected.
    NotSeparating,
    /// `M − S` fell into more than two components.
    MultiSplit { components: Vec<VertexSet> },
}

impl SeparationOutcome {
    pub fn is_separated(&self) -> bool {
        matches!(self, SeparationOutcome::Separated(_))
    }
}

/// Splits a connected space along a cut set: if `M − S` has exactly two
/// components they become `A` and `B` (in order of their smallest vertex
/// name).
pub fn separate(m: &DigitalSpace, s: &VertexSet) -> Result<SeparationOutcome, TopoError> {
    if s.is_empty() || s.len() >= m.len() {
        return Err(TopoError::NotAProperSubset);
    }
    if !m.is_connected() {
        return Err(TopoError::Precondition("separate requires a connected host".into()));
    }
    let rest = m.induced(&m.full_vertex_set().difference(s))?;
    let mut components = rest.components();
    match components.len() {
        1 => Ok(SeparationOutcome::NotSeparating),
        2 => {
            let b = components.pop().unwrap();
            let a = components.pop().unwrap();
            let sep = Separation {
                host: m.clone(),
                a,
                s: s.clone(),
                b,
            };
            sep.verify()?;
            Ok(SeparationOutcome::Separated(sep))
        }
        _ => Ok(SeparationOutcome::MultiSplit { components }),
    }
}

/// Verdicts for one sphere-separation check: the cut must separate and both
/// closed sides must be n-disks with boundary `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereSeparationReport {
    pub outcome: SeparationOutcome,
    pub side_a_is_disk: bool,
    pub side_b_is_disk: bool,
    pub holds: bool,
}

/// Separation report for the torus-style manifold statement: both closed
/// sides must be n-manifolds with spherical boundary `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldSeparationReport {
    pub outcome: SeparationOutcome,
    pub side_a_is_bounded_manifold: bool,
    pub side_b_is_bounded_manifold: bool,
    pub holds: bool,
}

impl Engine {
    /// Checks that an embedded (n−1)-sphere `S` separates the n-sphere `M`
    /// into two disks. Preconditions (`M` an n-sphere, `S` inducing an
    /// (n−1)-sphere) are verified and violations are errors.
    pub fn verify_sphere_separation(
        &self,
        m: &DigitalSpace,
        s: &VertexSet,
        n: usize,
        budget: &Budget,
    ) -> Result<SphereSeparationReport, TopoError> {
        if !self.is_n_sphere_fact(m, n, budget)? {
            return Err(TopoError::Precondition("host is not an n-sphere".into()));
        }
        if n == 0 || !self.is_n_sphere_fact(&m.induced(s)?, n - 1, budget)? {
            return Err(TopoError::Precondition(
                "cut does not induce an (n−1)-sphere".into(),
            ));
        }
        let outcome = separate(m, s)?;
        let (side_a_is_disk, side_b_is_disk) = match &outcome {
            SeparationOutcome::Separated(sep) => (
                self.is_n_disk(&m.induced(&sep.a.union(s))?, s, n, budget)?,
                self.is_n_disk(&m.induced(&sep.b.union(s))?, s, n, budget)?,
            ),
            _ => (false, false),
        };
        let holds = outcome.is_separated() && side_a_is_disk && side_b_is_disk;
        Ok(SphereSeparationReport {
            outcome,
            side_a_is_disk,
            side_b_is_disk,
            holds,
        })
    }

    /// Constructive equator of a 2-sphere with more than 7 points: an
    /// embedded 1-sphere separating it into two sides of size ≥ 2.
    ///
    /// Take the first simple pair `{x, y}` and cut along
    /// `C = U(x) ∪ U(y) − {x, y}`. If the far side has at least two points
    /// that cut already works with `A = {x, y}`. If the far side is a single
    /// point `z`, re-route the equator through `z` and the two seam vertices
    /// where the rims of `x` and `y` meet, keeping whichever of `x, y` has
    /// the larger rim arc so both sides stay ≥ 2.
    pub fn equator_separation(
        &self,
        m: &DigitalSpace,
        budget: &Budget,
    ) -> Result<Separation, TopoError> {
        if m.len() <= 7 {
            return Err(TopoError::Precondition(
                "equator construction requires more than 7 points".into(),
            ));
        }
        if !self.is_n_sphere_fact(m, 2, budget)? {
            return Err(TopoError::Precondition("host is not a 2-sphere".into()));
        }
        let pair = m
            .edges()
            .into_iter()
            .find(|(x, y)| pairs::is_simple_pair(m, x, y).unwrap_or(false))
            .ok_or_else(|| {
                TopoError::Inconsistency("2-sphere with more than 7 points has no simple pair".into())
            })?;
        let (x, y) = pair;
        let xi = m.index_of(&x).unwrap();
        let yi = m.index_of(&y).unwrap();
        let mut glued = m.neighbors(xi).union(m.neighbors(yi));
        glued.insert(xi);
        glued.insert(yi);
        let mut cut = glued.clone();
        cut.remove(xi);
        cut.remove(yi);
        let cut_set = VertexSet::from_indices(m, &cut);

        let far: Vec<usize> = (0..m.len()).filter(|i| !glued.contains(*i)).collect();
        let chosen = if far.len() >= 2 {
            cut_set
        } else if far.len() == 1 {
            let z = m.name(far[0]).to_string();
            // cyclic order of the equator C (an induced cycle)
            let c_space = m.induced(&cut_set)?;
            let order = induced_cycle_order(&c_space).ok_or_else(|| {
                TopoError::Inconsistency("equator cut is not an induced cycle".into())
            })?;
            let on_x: Vec<bool> = order
                .iter()
                .map(|name| m.are_adjacent(name, &x).unwrap())
                .collect();
            let on_y: Vec<bool> = order
                .iter()
                .map(|name| m.are_adjacent(name, &y).unwrap())
                .collect();
            let seams: Vec<&String> = order
                .iter()
                .zip(on_x.iter().zip(on_y.iter()))
                .filter(|(_, (&ax, &ay))| ax && ay)
                .map(|(name, _)| name)
                .collect();
            if seams.len() != 2 {
                return Err(TopoError::Inconsistency(
                    "rims of the simple pair do not meet the equator in two seams".into(),
                ));
            }
            let arc_y = on_y.iter().filter(|&&b| b).count();
            let kept = if arc_y >= 4 { y.clone() } else { x.clone() };
            VertexSet::new(m, [kept, seams[0].clone(), seams[1].clone(), z])?
        } else {
            return Err(TopoError::Inconsistency(
                "simple-pair balls cover the whole 2-sphere".into(),
            ));
        };

        if !crate::recognize::one_sphere_shape(&m.induced(&chosen)?) {
            return Err(TopoError::Inconsistency(
                "constructed equator does not induce a 1-sphere".into(),
            ));
        }
        match separate(m, &chosen)? {
            SeparationOutcome::Separated(sep) => {
                if sep.a.len() < 2 || sep.b.len() < 2 {
                    return Err(TopoError::Inconsistency(
                        "equator left a side with fewer than 2 points".into(),
                    ));
                }
                Ok(sep)
            }
            _ => Err(TopoError::Inconsistency(
                "constructed equator does not two-side the sphere".into(),
            )),
        }
    }

    /// Separation check on an n-manifold: the cut must induce an
    /// (n−1)-sphere; when it separates, both closed sides are checked to be
    /// n-manifolds with spherical boundary `S` (re-coning an apex onto `S`
    /// must give an n-manifold).
    pub fn manifold_separation_check(
        &self,
        m: &DigitalSpace,
        s: &VertexSet,
        n: usize,
        budget: &Budget,
    ) -> Result<ManifoldSeparationReport, TopoError> {
        if !self.is_n_manifold(m, n, budget)? {
            return Err(TopoError::Precondition("host is not an n-manifold".into()));
        }
        if n == 0 || !self.is_n_sphere_fact(&m.induced(s)?, n - 1, budget)? {
            return Err(TopoError::Precondition(
                "cut does not induce an (n−1)-sphere".into(),
            ));
        }
        let outcome = separate(m, s)?;
        let (side_a, side_b) = match &outcome {
            SeparationOutcome::Separated(sep) => (
                self.side_is_bounded_manifold(m, &sep.a, s, n, budget)?,
                self.side_is_bounded_manifold(m, &sep.b, s, n, budget)?,
            ),
            _ => (false, false),
        };
        let holds = outcome.is_separated() && side_a && side_b;
        Ok(ManifoldSeparationReport {
            outcome,
            side_a_is_bounded_manifold: side_a,
            side_b_is_bounded_manifold: side_b,
            holds,
        })
    }

    fn side_is_bounded_manifold(
        &self,
        m: &DigitalSpace,
        side: &VertexSet,
        s: &VertexSet,
        n: usize,
        budget: &Budget,
    ) -> Result<bool, TopoError> {
        let closed = m.induced(&side.union(s))?;
        let apex = pairs::fresh_name(&closed, "apex");
        let coned = closed.add_vertex(&apex, s.names())?;
        self.is_n_manifold(&coned, n, budget)
    }
}

/// Cyclic vertex order of an induced cycle, by name; `None` if the space is
/// not a single induced cycle of length ≥ 3.
pub(crate) fn induced_cycle_order(g: &DigitalSpace) -> Option<Vec<String>> {
    let n = g.len();
    if n < 3 || !g.is_connected() {
        return None;
    }
    if (0..n).any(|i| g.degree(i) != 2) {
        return None;
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    while order.len() < n {
        let last = *order.last().unwrap();
        let next = g
            .neighbors(last)
            .iter()
            .find(|&u| u != prev && !order.contains(&u))?;
        prev = last;
        order.push(next);
    }
    Some(order.into_iter().map(|i| g.name(i).to_string()).collect())
}
