//! Canonical labeling of digital spaces.
//!
//! `canonical_key` produces a byte string that is equal for two spaces iff
//! they are isomorphic. It is a full canonical form (equitable refinement
//! plus individualization backtracking, taking the minimal leaf), not a
//! hash: the key doubles as a memoization key for the search engines, where
//! a false merge would corrupt soundness.
//!
//! The colored variant restricts to color-preserving isomorphisms; it backs
//! memo tables for searches that pin a distinguished vertex subset.


use crate::error::TopoError;
use crate::space::DigitalSpace;

/// Vertex count cap for canonical labeling.
pub const DEFAULT_CANON_CAP: usize = 24;

/// Canonical form of a space as an opaque byte string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Box<[u8]>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in self.0.iter() {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn from_hex(hex: &str) -> Option<CanonKey> {
        if !hex.len().is_multiple_of(2) {
            return None;
        }
        let mut out = Vec::with_capacity(hex.len() / 2);
        for i in (0..hex.len()).step_by(2) {
            out.push(u8::from_str_radix(&hex[i..i + 2], 16).ok()?);
        }
        Some(CanonKey(out.into_boxed_slice()))
    }
}

impl std::fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonKey({})", self.to_hex())
    }
}

/// Canonical key with the default cap.
pub fn canonical_key(g: &DigitalSpace) -> Result<CanonKey, TopoError> {
    canonical_key_capped(g, DEFAULT_CANON_CAP)
}

pub fn canonical_key_capped(g: &DigitalSpace, cap: usize) -> Result<CanonKey, TopoError> {
    Ok(labeling(g, None, cap)?.0)
}

/// Canonical key of a vertex-colored space: keys are equal iff there is a
/// color-preserving isomorphism. `colors[i]` is the color of vertex `i` in
/// canonical name order.
pub fn colored_canonical_key(
    g: &DigitalSpace,
    colors: &[u32],
    cap: usize,
) -> Result<CanonKey, TopoError> {
    assert_eq!(colors.len(), g.len());
    Ok(labeling(g, Some(colors), cap)?.0)
}

/// Canonical key plus the labeling permutation achieving it:
/// `perm[i]` is the canonical position of vertex index `i`.
pub fn canonical_labeling(
    g: &DigitalSpace,
    cap: usize,
) -> Result<(CanonKey, Vec<usize>), TopoError> {
    labeling(g, None, cap)
}

/// Relabels a space onto standard names `k00, k01, ...` in canonical order.
/// Isomorphic spaces relabel to the *identical* space, which lets witnesses
/// built for one representative be replayed against any isomorphic copy.
pub fn canonical_space(g: &DigitalSpace, cap: usize) -> Result<DigitalSpace, TopoError> {
    let (_, perm) = canonical_labeling(g, cap)?;
    let n = g.len();
    let name_of = |pos: usize| format!("k{pos:02}");
    let mut vertices = Vec::with_capacity(n);
    for pos in 0..n {
        vertices.push(name_of(pos));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in g.neighbors(i).iter() {
            if j > i {
                edges.push((name_of(perm[i]), name_of(perm[j])));
            }
        }
    }
    DigitalSpace::new(vertices, &edges)
}

fn labeling(
    g: &DigitalSpace,
    colors: Option<&[u32]>,
    cap: usize,
) -> Result<(CanonKey, Vec<usize>), TopoError> {
    let n = g.len();
    if n > cap {
        return Err(TopoError::CapExceeded {
            what: "canonical labeling",
            size: n,
            cap,
        });
    }
    if n == 0 {
        return Ok((CanonKey(Box::new([0u8])), Vec::new()));
    }

    // Initial ordered partition: one cell per distinct color, ascending.
    let class_of: Vec<u8> = match colors {
        None => vec![0; n],
        Some(cs) => {
            let mut distinct: Vec<u32> = cs.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            cs.iter()
                .map(|c| distinct.binary_search(c).unwrap() as u8)
                .collect()
        }
    };
    let nclasses = *class_of.iter().max().unwrap() as usize + 1;
    let mut initial: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
    for (v, &c) in class_of.iter().enumerate() {
        initial[c as usize].push(v);
    }
    initial.retain(|c| !c.is_empty());

    let mut search = Search {
        g,
        class_of: &class_of,
        best: None,
    };
    let cells = refine(g, initial);
    search.descend(cells);
    let (key, perm) = search.best.expect("at least one leaf");
    Ok((CanonKey(key.into_boxed_slice()), perm))
}

struct Search<'a> {
    g: &'a DigitalSpace,
    class_of: &'a [u8],
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        match cells.iter().position(|c| c.len() > 1) {
            None => self.leaf(&cells),
            Some(t) => {
                for &v in &cells[t] {
                    let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
                    for (i, cell) in cells.iter().enumerate() {
                        if i == t {
                            child.push(vec![v]);
                            child.push(cell.iter().copied().filter(|&u| u != v).collect());
                        } else {
                            child.push(cell.clone());
                        }
                    }
                    self.descend(refine(self.g, child));
                }
            }
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.len();
        let mut perm = vec![0usize; n];
        let mut at = vec![0usize; n]; // vertex at each canonical position
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
            at[pos] = cell[0];
        }
        let mut key = Vec::with_capacity(1 + n + n * n / 16);
        key.push(n as u8);
        for &v in &at {
            key.push(self.class_of[v]);
        }
        let mut acc = 0u8;
        let mut nbits = 0u8;
        for i in 0..n {
            for j in (i + 1)..n {
                acc <<= 1;
                if self.g.neighbors(at[i]).contains(at[j]) {
                    acc |= 1;
                }
                nbits += 1;
                if nbits == 8 {
                    key.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            key.push(acc << (8 - nbits));
        }
        match &self.best {
            Some((b, _)) if *b <= key => {}
            _ => self.best = Some((key, perm)),
        }
    }
}

/// Equitable refinement: repeatedly split cells by the multiset of neighbor
/// cells until stable. Cell order is preserved, with split parts ordered by
/// their neighbor-count signature, so the result is isomorphism-equivariant.
fn refine(g: &DigitalSpace, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.len();
    loop {
        let ncells = cells.len();
        if ncells == n {
            return cells;
        }
        let mut color = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v] = ci;
            }
        }
        let mut sig: Vec<Vec<u32>> = vec![Vec::new(); n];
        for cell in &cells {
            if cell.len() < 2 {
                continue;
            }
            for &v in cell {
                let mut counts = vec![0u32; ncells];
                for u in g.neighbors(v).iter() {
                    counts[color[u]] += 1;
                }
                sig[v] = counts;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(ncells);
        for cell in &cells {
            if cell.len() < 2 {
                next.push(cell.clone());
                continue;
            }
            let mut members = cell.clone();
            members.sort_by(|&a, &b| sig[a].cmp(&sig[b]).then(a.cmp(&b)));
            let mut start = 0;
            for i in 1..=members.len() {
                if i == members.len() || sig[members[i]] != sig[members[start]] {
                    next.push(members[start..i].to_vec());
                    start = i;
                }
            }
        }
        let changed = next.len() != cells.len();
        cells = next;
        if !changed {
            return cells;
        }
    }
}
