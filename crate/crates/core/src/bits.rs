//! Small growable bit set used for adjacency rows and vertex subsets.
//!
//! Iteration is always in ascending index order, which together with the
//! canonical (lexicographic) vertex ordering of [`crate::space::DigitalSpace`]
//! makes every traversal in the crate deterministic.

const BLOCK_BITS: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSet {
    blocks: Vec<u64>,
}

impl BitSet {
    pub fn new() -> Self {
        BitSet { blocks: Vec::new() }
    }

    /// Empty set pre-sized to hold indices `0..n`.
    pub fn with_capacity(n: usize) -> Self {
        BitSet {
            blocks: vec![0; n.div_ceil(BLOCK_BITS)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        let block = i / BLOCK_BITS;
        if block >= self.blocks.len() {
            self.blocks.resize(block + 1, 0);
        }
        self.blocks[block] |= 1u64 << (i % BLOCK_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        let block = i / BLOCK_BITS;
        if block < self.blocks.len() {
            self.blocks[block] &= !(1u64 << (i % BLOCK_BITS));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        let block = i / BLOCK_BITS;
        block < self.blocks.len() && self.blocks[block] & (1u64 << (i % BLOCK_BITS)) != 0
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        for (k, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(k * BLOCK_BITS + b.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &BitSet) {
        if other.blocks.len() > self.blocks.len() {
            self.blocks.resize(other.blocks.len(), 0);
        }
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (k, a) in self.blocks.iter_mut().enumerate() {
            *a &= other.blocks.get(k).copied().unwrap_or(0);
        }
    }

    pub fn xor_with(&mut self, other: &BitSet) {
        if other.blocks.len() > self.blocks.len() {
            self.blocks.resize(other.blocks.len(), 0);
        }
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a ^= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(k, a)| a & !other.blocks.get(k).copied().unwrap_or(0) == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            block: 0,
            bits: self.blocks.first().copied().unwrap_or(0),
        }
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        BitSet::from_indices(iter)
    }
}

pub struct Iter<'a> {
    set: &'a BitSet,
    block: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.block * BLOCK_BITS + tz);
            }
            self.block += 1;
            if self.block >= self.set.blocks.len() {
                return None;
            }
            self.bits = self.set.blocks[self.block];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = BitSet::new();
        s.insert(3);
        s.insert(70);
        assert!(s.contains(3));
        assert!(s.contains(70));
        assert!(!s.contains(4));
        s.remove(3);
        assert!(!s.contains(3));
        assert_eq!(s.count(), 1);
    }

    #[test]
    fn iter_ascending() {
        let s = BitSet::from_indices([65, 2, 64, 0]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 64, 65]);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices([1, 2, 3]);
        let b = BitSet::from_indices([3, 4]);
        assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 2]);
        assert!(!a.is_disjoint(&b));
        assert!(BitSet::from_indices([3]).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn subset_across_block_boundary() {
        let a = BitSet::from_indices([100]);
        let b = BitSet::from_indices([1]);
        assert!(!a.is_subset(&b));
        assert!(b.is_subset(&BitSet::from_indices([1, 100])));
    }
}
