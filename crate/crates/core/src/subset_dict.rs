//! Dictionaries keyed by small vertex sets.
//!
//! [`SubsetDictionary`] is a prefix trie over strictly increasing key
//! sequences (vertex ranks), so a key `X` is reached in `O(|X|)` steps.
//! [`LocalTable`] is a dense table over all subsets of a small universe,
//! indexed by bitmask, on which the superset Möbius and zeta transforms run.

use std::collections::BTreeMap;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest universe a [`LocalTable`] accepts.
pub const MAX_LOCAL_BITS: usize = 30;

#[derive(Debug, Clone)]
struct Node<V> {
    // Sorted by label.
    children: SmallVec<[(u32, u32); 2]>,
    value: V,
}

impl<V: Default> Node<V> {
    fn new() -> Self {
        Node {
            children: SmallVec::new(),
            value: V::default(),
        }
    }
}

/// Trie-backed map from increasing `u32` sequences to values; absent keys
/// read as `V::default()`.
///
/// Keys of length one with a small label live in a dense array indexed by
/// the label, which also points at the node holding their children. A
/// position in the trie is either a node index or `VIRTUAL | label` for
/// such a dense slot.
#[derive(Debug, Clone)]
pub struct SubsetDictionary<V = i64> {
    nodes: Vec<Node<V>>,
    root: Vec<RootSlot<V>>,
}

#[derive(Debug, Clone)]
struct RootSlot<V> {
    // ABSENT, LEAF, or the node holding this key's children.
    node: u32,
    value: V,
}

impl<V: Default> RootSlot<V> {
    fn absent() -> Self {
        RootSlot {
            node: ABSENT,
            value: V::default(),
        }
    }
}

const ABSENT: u32 = u32::MAX;
const LEAF: u32 = u32::MAX - 1;
const DENSE_ROOT: u32 = 1 << 24;
const VIRTUAL: u32 = 1 << 31;

impl<V: Default> Default for SubsetDictionary<V> {
    fn default() -> Self {
        Self::new()
    }
}

fn check_key(key: &[u32]) -> Result<()> {
    if key.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::UnsortedKey)
    }
}

impl<V: Default> SubsetDictionary<V> {
    pub fn new() -> Self {
        SubsetDictionary {
            nodes: vec![Node::new()],
            root: Vec::new(),
        }
    }

    /// Makes room for `nodes` more keys and root labels below `labels`.
    pub(crate) fn reserve(&mut self, nodes: usize, labels: usize) {
        self.nodes.reserve(nodes);
        let labels = labels.min(DENSE_ROOT as usize);
        if labels > self.root.len() {
            self.root.resize_with(labels, RootSlot::absent);
        }
    }

    /// Number of stored keys, the empty key included.
    pub fn node_count(&self) -> usize {
        let helpers = self.root.iter().filter(|r| r.node != ABSENT && r.node != LEAF).count();
        let dense = self.root.iter().filter(|r| r.node != ABSENT).count();
        self.nodes.len() - helpers + dense
    }

    fn value(&self, pos: u32) -> &V {
        if pos & VIRTUAL != 0 {
            &self.root[(pos & !VIRTUAL) as usize].value
        } else {
            &self.nodes[pos as usize].value
        }
    }

    fn value_mut(&mut self, pos: u32) -> &mut V {
        if pos & VIRTUAL != 0 {
            &mut self.root[(pos & !VIRTUAL) as usize].value
        } else {
            &mut self.nodes[pos as usize].value
        }
    }

    /// Node holding the children of `pos`, if it has one.
    fn children_node(&self, pos: u32) -> Option<u32> {
        if pos & VIRTUAL == 0 {
            return Some(pos);
        }
        match self.root[(pos & !VIRTUAL) as usize].node {
            ABSENT | LEAF => None,
            n => Some(n),
        }
    }

    fn child(&self, pos: u32, label: u32) -> Option<u32> {
        if pos == 0 && label < DENSE_ROOT {
            let slot = self.root.get(label as usize)?;
            return (slot.node != ABSENT).then_some(VIRTUAL | label);
        }
        let children = &self.nodes[self.children_node(pos)? as usize].children;
        children
            .binary_search_by_key(&label, |&(l, _)| l)
            .ok()
            .map(|i| children[i].1)
    }

    fn find(&self, key: &[u32]) -> Option<u32> {
        key.iter().try_fold(0u32, |pos, &label| self.child(pos, label))
    }

    /// Mutable slot for `key`, creating the path if needed.
    pub fn entry(&mut self, key: &[u32]) -> Result<&mut V> {
        check_key(key)?;
        Ok(self.entry_unchecked(key))
    }

    pub(crate) fn entry_unchecked(&mut self, key: &[u32]) -> &mut V {
        let mut pos = 0u32;
        for &label in key {
            pos = self.child_or_insert(pos, label);
        }
        self.value_mut(pos)
    }

    /// Calls `f` on the slot of every subset of `labels` (strictly increasing)
    /// whose size lies in `min_size..=max_size`, creating slots as needed.
    /// Each subset costs one child step from its parent prefix.
    pub(crate) fn visit_subsets_mut<F: FnMut(&mut V)>(
        &mut self,
        labels: &[u32],
        min_size: usize,
        max_size: usize,
        mut f: F,
    ) {
        let mut stack: SmallVec<[(u32, usize, usize); 16]> = SmallVec::new();
        stack.push((0, 0, 0));
        while let Some((pos, depth, next)) = stack.pop() {
            if depth >= min_size {
                f(self.value_mut(pos));
            }
            if depth == max_size {
                continue;
            }
            for j in next..labels.len() {
                // Too few labels left to ever reach min_size.
                if depth + 1 + (labels.len() - j - 1) < min_size {
                    break;
                }
                let child = self.child_or_insert(pos, labels[j]);
                stack.push((child, depth + 1, j + 1));
            }
        }
    }

    fn child_or_insert(&mut self, pos: u32, label: u32) -> u32 {
        if pos == 0 && label < DENSE_ROOT {
            let l = label as usize;
            if l >= self.root.len() {
                self.root.resize_with(l + 1, RootSlot::absent);
            }
            if self.root[l].node == ABSENT {
                self.root[l].node = LEAF;
            }
            return VIRTUAL | label;
        }
        let node = match self.children_node(pos) {
            Some(n) => n,
            None => {
                let n = self.nodes.len() as u32;
                self.nodes.push(Node::new());
                self.root[(pos & !VIRTUAL) as usize].node = n;
                n
            }
        };
        let next_index = self.nodes.len() as u32;
        let children = &mut self.nodes[node as usize].children;
        match children.binary_search_by_key(&label, |&(l, _)| l) {
            Ok(i) => children[i].1,
            Err(i) => {
                children.insert(i, (label, next_index));
                self.nodes.push(Node::new());
                next_index
            }
        }
    }

    /// Value stored for `key`, `None` when the key was never inserted.
    pub fn get(&self, key: &[u32]) -> Result<Option<&V>> {
        check_key(key)?;
        Ok(self.get_unchecked(key))
    }

    pub(crate) fn get_unchecked(&self, key: &[u32]) -> Option<&V> {
        self.find(key).map(|pos| self.value(pos))
    }

    /// Calls `f(mask, value)` for every stored key that is a subset of
    /// `universe` (strictly increasing, at most 32 labels). Bit `i` of `mask`
    /// stands for `universe[i]`. Subsets with no trie path are skipped, so
    /// the walk shares prefixes and prunes absent branches.
    pub fn for_each_subset<F: FnMut(u32, &V)>(&self, universe: &[u32], mut f: F) -> Result<()> {
        check_key(universe)?;
        if universe.len() > 32 {
            return Err(Error::Capacity {
                requested: universe.len(),
                limit: 32,
            });
        }
        let mut stack: SmallVec<[(u32, u32, usize); 16]> = SmallVec::new();
        stack.push((0, 0, 0));
        while let Some((pos, mask, next)) = stack.pop() {
            f(mask, self.value(pos));
            for (j, &label) in universe.iter().enumerate().skip(next) {
                if let Some(child) = self.child(pos, label) {
                    stack.push((child, mask | 1 << j, j + 1));
                }
            }
        }
        Ok(())
    }

    /// All stored keys with their values, in key order.
    pub fn entries(&self) -> BTreeMap<Vec<u32>, &V> {
        let mut out = BTreeMap::new();
        let mut stack: Vec<(u32, Vec<u32>)> = vec![(0, Vec::new())];
        while let Some((pos, key)) = stack.pop() {
            let mut children: Vec<(u32, u32)> = self
                .children_node(pos)
                .map(|n| self.nodes[n as usize].children.to_vec())
                .unwrap_or_default();
            if pos == 0 {
                children.extend(
                    self.root
                        .iter()
                        .enumerate()
                        .filter(|(_, r)| r.node != ABSENT)
                        .map(|(l, _)| (l as u32, VIRTUAL | l as u32)),
                );
            }
            for (label, child) in children {
                let mut k = key.clone();
                k.push(label);
                stack.push((child, k));
            }
            out.insert(key, self.value(pos));
        }
        out
    }
}

impl SubsetDictionary<i64> {
    pub fn add(&mut self, key: &[u32], delta: i64) -> Result<()> {
        *self.entry(key)? += delta;
        Ok(())
    }

    pub fn lookup(&self, key: &[u32]) -> Result<i64> {
        Ok(self.get(key)?.copied().unwrap_or(0))
    }

    /// Keys with a nonzero value.
    pub fn nonzero(&self) -> BTreeMap<Vec<u32>, i64> {
        self.entries()
            .into_iter()
            .filter(|(_, v)| **v != 0)
            .map(|(k, v)| (k, *v))
            .collect()
    }
}

/// Dense table over the subsets of a universe of `bits` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalTable {
    bits: usize,
    values: Vec<i64>,
}

impl LocalTable {
    pub fn zeros(bits: usize) -> Result<Self> {
        if bits > MAX_LOCAL_BITS {
            return Err(Error::Capacity {
                requested: bits,
                limit: MAX_LOCAL_BITS,
            });
        }
        Ok(LocalTable {
            bits,
            values: vec![0; 1 << bits],
        })
    }

    /// Wraps `values`, whose length must be a power of two.
    pub fn from_values(values: Vec<i64>) -> Result<Self> {
        if !values.len().is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "table length {} is not a power of two",
                values.len()
            )));
        }
        let bits = values.len().trailing_zeros() as usize;
        if bits > MAX_LOCAL_BITS {
            return Err(Error::Capacity {
                requested: bits,
                limit: MAX_LOCAL_BITS,
            });
        }
        Ok(LocalTable { bits, values })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.bits) - 1) as u32
    }

    pub fn get(&self, mask: u32) -> i64 {
        self.values[mask as usize]
    }

    pub fn set(&mut self, mask: u32, value: i64) {
        self.values[mask as usize] = value;
    }

    pub fn add(&mut self, mask: u32, delta: i64) {
        self.values[mask as usize] += delta;
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `O[X] = Σ_{Y ⊇ X} (-1)^{|Y \ X|} T[Y]`, in `bits · 2^bits` steps.
    pub fn mobius_invert_up(&self) -> LocalTable {
        let mut out = self.clone();
        out.mobius_in_place();
        out
    }

    pub(crate) fn mobius_in_place(&mut self) {
        for i in 0..self.bits {
            let bit = 1usize << i;
            for mask in 0..self.values.len() {
                if mask & bit == 0 {
                    self.values[mask] -= self.values[mask | bit];
                }
            }
        }
    }

    /// `Z[X] = Σ_{Y ⊇ X} T[Y]`; the inverse of [`Self::mobius_invert_up`].
    pub fn zeta_up(&self) -> LocalTable {
        let mut out = self.clone();
        for i in 0..out.bits {
            let bit = 1usize << i;
            for mask in 0..out.values.len() {
                if mask & bit == 0 {
                    out.values[mask] += out.values[mask | bit];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    #[test]
    fn empty_key_accumulates() {
        let mut d = SubsetDictionary::new();
        d.add(&[], 1).unwrap();
        d.add(&[], 1).unwrap();
        assert_eq!(d.lookup(&[]).unwrap(), 2);
    }

    #[test]
    fn absent_keys_read_zero() {
        let mut d = SubsetDictionary::new();
        assert_eq!(d.lookup(&[4, 9]).unwrap(), 0);
        d.add(&[3, 7], 1).unwrap();
        assert_eq!(d.lookup(&[3, 7]).unwrap(), 1);
        assert_eq!(d.lookup(&[3]).unwrap(), 0);
        d.add(&[1], 5).unwrap();
        assert_eq!(d.lookup(&[1]).unwrap(), 5);
    }

    #[test]
    fn unsorted_keys_are_rejected() {
        let mut d = SubsetDictionary::new();
        assert!(matches!(d.add(&[7, 3], 1), Err(Error::UnsortedKey)));
        assert!(matches!(d.lookup(&[2, 2]), Err(Error::UnsortedKey)));
    }

    #[test]
    fn subset_walk_visits_stored_subsets() {
        let mut d = SubsetDictionary::new();
        for key in [&[][..], &[1], &[1, 5], &[5], &[2, 5], &[1, 2, 5]] {
            d.add(key, 1).unwrap();
        }
        let mut seen = Vec::new();
        d.for_each_subset(&[1, 5], |mask, &v| seen.push((mask, v))).unwrap();
        seen.sort();
        assert_eq!(seen, vec![(0, 1), (1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn mobius_examples() {
        let t = LocalTable::from_values(vec![7]).unwrap();
        assert_eq!(t.mobius_invert_up().values(), &[7]);
        // Direct alternating sums over the four masks.
        let t = LocalTable::from_values(vec![4, 2, 2, 1]).unwrap();
        assert_eq!(t.mobius_invert_up().values(), &[1, 1, 1, 1]);
    }

    #[test]
    fn local_table_capacity() {
        assert!(LocalTable::zeros(MAX_LOCAL_BITS + 1).is_err());
        assert!(LocalTable::from_values(vec![0; 3]).is_err());
    }

    fn naive_mobius(t: &[i64]) -> Vec<i64> {
        (0..t.len())
            .map(|x| {
                (0..t.len())
                    .filter(|y| y & x == x)
                    .map(|y| {
                        let sign = if (y ^ x).count_ones() % 2 == 0 { 1 } else { -1 };
                        sign * t[y]
                    })
                    .sum()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn mobius_matches_naive(bits in 0usize..8, seed in proptest::collection::vec(-50i64..50, 256)) {
            let values = seed[..1 << bits].to_vec();
            let t = LocalTable::from_values(values.clone()).unwrap();
            let inverted = t.mobius_invert_up();
            prop_assert_eq!(inverted.values(), &naive_mobius(&values)[..]);
        }

        #[test]
        fn zeta_inverts_mobius(bits in 0usize..10, seed in proptest::collection::vec(-1000i64..1000, 1024)) {
            let t = LocalTable::from_values(seed[..1 << bits].to_vec()).unwrap();
            prop_assert_eq!(t.mobius_invert_up().zeta_up(), t.clone());
            let total: i64 = t.mobius_invert_up().values().iter().sum();
            prop_assert_eq!(total, t.get(0));
        }

        #[test]
        fn trie_matches_reference_map(ops in proptest::collection::vec(
            (proptest::collection::btree_set(0u32..40, 0..5), -5i64..5, any::<bool>()), 0..300)
        ) {
            let mut d = SubsetDictionary::new();
            let mut reference: HashMap<Vec<u32>, i64> = HashMap::new();
            for (key, delta, is_add) in ops {
                let key: Vec<u32> = key.into_iter().collect();
                if is_add {
                    d.add(&key, delta).unwrap();
                    *reference.entry(key).or_default() += delta;
                } else {
                    prop_assert_eq!(d.lookup(&key).unwrap(), reference.get(&key).copied().unwrap_or(0));
                }
            }
            for (key, v) in &reference {
                prop_assert_eq!(d.lookup(key).unwrap(), *v);
            }
        }
    }
}
