//! Finite simple graphs as digital spaces.
//!
//! A [`DigitalSpace`] is an immutable finite simple graph with named
//! vertices. Vertices are kept in canonical (lexicographic) name order and
//! adjacency is stored as bit sets indexed by that order, so every iteration
//! in the crate is deterministic. All operations are pure: they return new
//! spaces and never mutate their input.

use crate::bits::BitSet;
use crate::error::TopoError;
use serde::{Deserialize, Serialize};

/// A digital space: a finite simple graph with string-named vertices.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpaceRepr", into = "SpaceRepr")]
pub struct DigitalSpace {
    names: Vec<String>,
    adj: Vec<BitSet>,
}

#[derive(Serialize, Deserialize)]
struct SpaceRepr {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl From<DigitalSpace> for SpaceRepr {
    fn from(g: DigitalSpace) -> SpaceRepr {
        SpaceRepr {
            edges: g.edges(),
            vertices: g.names,
        }
    }
}

impl TryFrom<SpaceRepr> for DigitalSpace {
    type Error = TopoError;
    fn try_from(r: SpaceRepr) -> Result<Self, TopoError> {
        DigitalSpace::new(r.vertices, &r.edges)
    }
}

impl DigitalSpace {
    /// Builds a space from vertex names and edges. Duplicate vertex names,
    /// self-loops and edges with undeclared endpoints are rejected; repeated
    /// edges collapse silently (adjacency is a set).
    pub fn new<S: Into<String>, E: AsRef<str>>(
        vertices: impl IntoIterator<Item = S>,
        edges: &[(E, E)],
    ) -> Result<Self, TopoError> {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(TopoError::DuplicateVertex(w[0].clone()));
        }
        let n = names.len();
        let mut adj = vec![BitSet::with_capacity(n); n];
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let ui = names
                .binary_search_by(|x| x.as_str().cmp(u))
                .map_err(|_| TopoError::UnknownVertex(u.to_string()))?;
            let vi = names
                .binary_search_by(|x| x.as_str().cmp(v))
                .map_err(|_| TopoError::UnknownVertex(v.to_string()))?;
            if ui == vi {
                return Err(TopoError::SelfLoop(u.to_string()));
            }
            adj[ui].insert(vi);
            adj[vi].insert(ui);
        }
        Ok(DigitalSpace { names, adj })
    }

    /// Space with a single vertex and no edges.
    pub fn point(name: &str) -> Self {
        DigitalSpace::new([name], &[] as &[(&str, &str)]).expect("single point")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|b| b.count()).sum::<usize>() / 2
    }

    /// Vertex names in canonical (lexicographic) order.
    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    fn index_or_err(&self, name: &str) -> Result<usize, TopoError> {
        self.index_of(name)
            .ok_or_else(|| TopoError::UnknownVertex(name.to_string()))
    }

    /// Adjacency row of a vertex, by index.
    pub fn neighbors(&self, index: usize) -> &BitSet {
        &self.adj[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adj[index].count()
    }

    pub fn are_adjacent(&self, u: &str, v: &str) -> Result<bool, TopoError> {
        let ui = self.index_or_err(u)?;
        let vi = self.index_or_err(v)?;
        Ok(self.adj[ui].contains(vi))
    }

    /// All edges as name pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.len() {
            for j in self.adj[i].iter() {
                if j > i {
                    out.push((self.names[i].clone(), self.names[j].clone()));
                }
            }
        }
        out
    }

    /// Induced subspace on the given index set.
    pub(crate) fn induced_by_indices(&self, keep: &BitSet) -> DigitalSpace {
        let idx: Vec<usize> = keep.iter().collect();
        let names: Vec<String> = idx.iter().map(|&i| self.names[i].clone()).collect();
        let n = idx.len();
        let mut adj = vec![BitSet::with_capacity(n); n];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                if self.adj[i].contains(j) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        DigitalSpace { names, adj }
    }

    /// Rim (neighborhood) of `v`: the induced subspace on the vertices
    /// adjacent to `v`, excluding `v` itself.
    pub fn rim(&self, v: &str) -> Result<DigitalSpace, TopoError> {
        let vi = self.index_or_err(v)?;
        Ok(self.induced_by_indices(&self.adj[vi]))
    }

    /// Ball of `v`: the induced subspace on `v` and its neighbors.
    pub fn ball(&self, v: &str) -> Result<DigitalSpace, TopoError> {
        let vi = self.index_or_err(v)?;
        let mut keep = self.adj[vi].clone();
        keep.insert(vi);
        Ok(self.induced_by_indices(&keep))
    }

    /// Induced subspace on a vertex set.
    pub fn induced(&self, s: &VertexSet) -> Result<DigitalSpace, TopoError> {
        let keep = s.indices_in(self)?;
        Ok(self.induced_by_indices(&keep))
    }

    /// Space with one vertex removed.
    pub fn delete_vertex(&self, v: &str) -> Result<DigitalSpace, TopoError> {
        let vi = self.index_or_err(v)?;
        let mut keep = BitSet::with_capacity(self.len());
        for i in 0..self.len() {
            if i != vi {
                keep.insert(i);
            }
        }
        Ok(self.induced_by_indices(&keep))
    }

    pub fn delete_edge(&self, u: &str, v: &str) -> Result<DigitalSpace, TopoError> {
        let ui = self.index_or_err(u)?;
        let vi = self.index_or_err(v)?;
        if !self.adj[ui].contains(vi) {
            return Err(TopoError::NotAnEdge(u.to_string(), v.to_string()));
        }
        let mut g = self.clone();
        g.adj[ui].remove(vi);
        g.adj[vi].remove(ui);
        Ok(g)
    }

    pub fn add_edge(&self, u: &str, v: &str) -> Result<DigitalSpace, TopoError> {
        let ui = self.index_or_err(u)?;
        let vi = self.index_or_err(v)?;
        if ui == vi {
            return Err(TopoError::SelfLoop(u.to_string()));
        }
        if self.adj[ui].contains(vi) {
            return Err(TopoError::AlreadyAdjacent(u.to_string(), v.to_string()));
        }
        let mut g = self.clone();
        g.adj[ui].insert(vi);
        g.adj[vi].insert(ui);
        Ok(g)
    }

    /// Space with a fresh vertex attached to the named rim.
    pub fn add_vertex(&self, v: &str, rim: &[String]) -> Result<DigitalSpace, TopoError> {
        if self.contains(v) {
            return Err(TopoError::DuplicateVertex(v.to_string()));
        }
        let mut vertices: Vec<String> = self.names.clone();
        vertices.push(v.to_string());
        let mut edges = self.edges();
        for r in rim {
            if !self.contains(r) {
                return Err(TopoError::UnknownVertex(r.clone()));
            }
            edges.push((v.to_string(), r.clone()));
        }
        DigitalSpace::new(vertices, &edges)
    }

    pub fn is_connected(&self) -> bool {
        self.components_indices().len() <= 1
    }

    fn components_indices(&self) -> Vec<BitSet> {
        let n = self.len();
        let mut seen = BitSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = BitSet::with_capacity(n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(i) = stack.pop() {
                for j in self.adj[i].iter() {
                    if !seen.contains(j) {
                        seen.insert(j);
                        comp.insert(j);
                        stack.push(j);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Connected components as vertex sets, ordered by their smallest
    /// vertex name.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_indices()
            .into_iter()
            .map(|c| VertexSet::from_indices(self, &c))
            .collect()
    }

    /// Set of all vertices of this space.
    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet {
            names: self.names.clone(),
        }
    }
}

impl std::fmt::Debug for DigitalSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "DigitalSpace({} vertices, {} edges: {:?})",
            self.len(),
            self.edge_count(),
            self.edges()
        )
    }
}

/// A subset of a space's vertices, stored as sorted names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet {
    names: Vec<String>,
}

impl VertexSet {
    /// Checked constructor: every name must belong to `host`.
    pub fn new<S: Into<String>>(
        host: &DigitalSpace,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, TopoError> {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        names.dedup();
        for n in &names {
            if !host.contains(n) {
                return Err(TopoError::StrayVertex(n.clone()));
            }
        }
        Ok(VertexSet { names })
    }

    pub(crate) fn from_indices(host: &DigitalSpace, idx: &BitSet) -> Self {
        VertexSet {
            names: idx.iter().map(|i| host.name(i).to_string()).collect(),
        }
    }

    pub(crate) fn indices_in(&self, host: &DigitalSpace) -> Result<BitSet, TopoError> {
        let mut b = BitSet::with_capacity(host.len());
        for n in &self.names {
            match host.index_of(n) {
                Some(i) => b.insert(i),
                None => return Err(TopoError::StrayVertex(n.clone())),
            }
        }
        Ok(b)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.binary_search_by(|x| x.as_str().cmp(name)).is_ok()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        names.sort();
        names.dedup();
        VertexSet { names }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            names: self
                .names
                .iter()
                .filter(|n| !other.contains(n))
                .cloned()
                .collect(),
        }
    }
}

/// Record of a vertex renamed while forming a join.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinRename {
    pub original: String,
    pub renamed: String,
}

/// Join of two spaces: both spaces plus every cross edge. Name collisions are
/// resolved by appending `#1` to the left copy and `#2` to the right copy
/// (escalating deterministically if the suffixed name is itself taken);
/// every rename is recorded.
pub fn join_recorded(g: &DigitalSpace, h: &DigitalSpace) -> (DigitalSpace, Vec<JoinRename>) {
    let mut renames = Vec::new();
    let mut taken: std::collections::BTreeSet<String> = g
        .vertex_names()
        .iter()
        .chain(h.vertex_names())
        .cloned()
        .collect();

    let resolve = |name: &str, suffix: &str, taken: &mut std::collections::BTreeSet<String>| {
        let mut candidate = format!("{name}{suffix}");
        while taken.contains(&candidate) {
            candidate.push_str(suffix);
        }
        taken.insert(candidate.clone());
        candidate
    };

    let mut left: Vec<String> = g.vertex_names().to_vec();
    let mut right: Vec<String> = h.vertex_names().to_vec();
    for name in &mut left {
        if h.contains(name) {
            let fresh = resolve(name, "#1", &mut taken);
            renames.push(JoinRename {
                original: name.clone(),
                renamed: fresh.clone(),
            });
            *name = fresh;
        }
    }
    for name in &mut right {
        if g.contains(name) {
            let fresh = resolve(name, "#2", &mut taken);
            renames.push(JoinRename {
                original: name.clone(),
                renamed: fresh.clone(),
            });
            *name = fresh;
        }
    }

    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, j) in g.edges() {
        let ii = g.index_of(&i).unwrap();
        let jj = g.index_of(&j).unwrap();
        edges.push((left[ii].clone(), left[jj].clone()));
    }
    for (i, j) in h.edges() {
        let ii = h.index_of(&i).unwrap();
        let jj = h.index_of(&j).unwrap();
        edges.push((right[ii].clone(), right[jj].clone()));
    }
    for l in &left {
        for r in &right {
            edges.push((l.clone(), r.clone()));
        }
    }
    let mut vertices = left;
    vertices.extend(right);
    let space = DigitalSpace::new(vertices, &edges).expect("join of valid spaces is valid");
    (space, renames)
}

/// Join of two spaces, discarding the rename record.
pub fn join(g: &DigitalSpace, h: &DigitalSpace) -> DigitalSpace {
    join_recorded(g, h).0
}
