//! Left-subset counts and exact-neighbourhood witness tables.
//!
//! [`LeftSubsetCounter`] stores, for every small set `X`, how many vertices
//! have `X` inside their left neighbourhood. From it an
//! [`ExactNeighborhoodTable`] over a query set `S` is obtained by restricting
//! to the subsets of `S`, inverting upwards and then moving every vertex with
//! a right neighbour in `S` from its left-trace bucket to its full-trace
//! bucket.

use crate::error::{Error, Result};
use crate::graph::{Graph, OrderedGraph, Vertex};
use crate::subset_dict::{LocalTable, SubsetDictionary, MAX_LOCAL_BITS};

/// `dict[X] = |{ v : X ⊆ N⁻(v) }|` for every `X` with `|X| <= max_key_size`,
/// keys given as rank sequences.
#[derive(Debug, Clone)]
pub struct LeftSubsetCounter<'g> {
    og: &'g OrderedGraph,
    dict: SubsetDictionary<i64>,
    max_key_size: usize,
    // Indexed by vertex id; keys only use admitted vertices.
    key_filter: Option<Vec<bool>>,
}

impl<'g> LeftSubsetCounter<'g> {
    /// Counts every left-neighbourhood subset of size at most `max_key_size`
    /// (clamped to the degeneracy of the ordering).
    pub fn build(og: &'g OrderedGraph, max_key_size: usize) -> Self {
        Self::build_filtered(og, max_key_size, None)
    }

    /// As [`Self::build`], but keys only contain vertices `v` with
    /// `filter[v]`. Counts for keys inside the filter are unaffected.
    pub fn build_filtered(og: &'g OrderedGraph, max_key_size: usize, filter: Option<Vec<bool>>) -> Self {
        let mut r = LeftSubsetCounter {
            og,
            dict: SubsetDictionary::new(),
            max_key_size: 0,
            key_filter: filter,
        };
        let cap = max_key_size.min(og.degeneracy());
        r.insert_sizes(0, cap);
        r.max_key_size = cap;
        r
    }

    fn insert_sizes(&mut self, min_size: usize, max_size: usize) {
        // Keys per vertex are bounded by the binomial sums of its left degree.
        let bound: usize = (0..self.og.n() as u32)
            .map(|r| {
                let l = self.og.left_ranks_at(r).len();
                (min_size.max(1)..=max_size.min(l)).map(|i| binomial(l, i)).sum::<usize>()
            })
            .sum();
        self.dict.reserve(bound.min(1 << 24), self.og.n());
        let mut labels = Vec::new();
        for (rank, &u) in self.og.order().iter().enumerate() {
            labels.clear();
            match &self.key_filter {
                Some(filter) => labels.extend(
                    self.og
                        .left_neighbors(u)
                        .iter()
                        .filter(|&&w| filter[w as usize])
                        .map(|&w| self.og.rank(w)),
                ),
                None => labels.extend_from_slice(self.og.left_ranks_at(rank as u32)),
            }
            self.dict
                .visit_subsets_mut(&labels, min_size, max_size, |v| *v += 1);
        }
    }

    /// Adds the keys of sizes `(max_key_size, new_max]`. Shrinking is a no-op.
    pub fn extend(&mut self, new_max: usize) {
        let new_max = new_max.min(self.og.degeneracy());
        if new_max <= self.max_key_size {
            return;
        }
        self.insert_sizes(self.max_key_size + 1, new_max);
        self.max_key_size = new_max;
    }

    pub fn ordered_graph(&self) -> &'g OrderedGraph {
        self.og
    }

    pub fn max_key_size(&self) -> usize {
        self.max_key_size
    }

    /// True when no vertex has a left neighbourhood larger than the cap, so
    /// every nonzero count is stored whatever the key size.
    pub fn is_complete(&self) -> bool {
        self.max_key_size >= self.og.degeneracy()
    }

    pub fn dict(&self) -> &SubsetDictionary<i64> {
        &self.dict
    }

    pub fn admits(&self, v: Vertex) -> bool {
        self.key_filter.as_ref().is_none_or(|f| f[v as usize])
    }

    /// `|{ v : X ⊆ N⁻(v) }|` for a set of vertex ids in any order.
    pub fn count_containing(&self, vertices: &[Vertex]) -> Result<i64> {
        let mut ranks = self.og.ranks_of(vertices);
        ranks.sort_unstable();
        ranks.dedup();
        if ranks.len() > self.max_key_size && !self.is_complete() {
            return Err(Error::Capacity {
                requested: ranks.len(),
                limit: self.max_key_size,
            });
        }
        Ok(self.dict.lookup(&ranks)?)
    }

    fn check_universe(&self, universe: &[Vertex]) -> Result<()> {
        if universe.len() > MAX_LOCAL_BITS {
            return Err(Error::Capacity {
                requested: universe.len(),
                limit: MAX_LOCAL_BITS,
            });
        }
        if universe.len() > self.max_key_size && !self.is_complete() {
            return Err(Error::Capacity {
                requested: universe.len(),
                limit: self.max_key_size,
            });
        }
        if let Some(&v) = universe.iter().find(|&&v| !self.admits(v)) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is outside the key filter of this counter"
            )));
        }
        Ok(())
    }
}

/// `table[X] = |{ v ∈ V(G) : N(v) ∩ S = X }|` over a rank-ordered universe
/// `S`; bit `i` of a mask stands for `universe[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactNeighborhoodTable {
    universe: Vec<Vertex>,
    table: LocalTable,
}

impl ExactNeighborhoodTable {
    pub fn build(r: &LeftSubsetCounter<'_>, s: &[Vertex]) -> Result<Self> {
        let og = r.ordered_graph();
        for &v in s {
            og.graph().check_vertex(v)?;
        }
        let mut universe = s.to_vec();
        og.sort_by_rank(&mut universe);
        r.check_universe(&universe)?;

        // Restriction of R to the subsets of S.
        let ranks = og.ranks_of(&universe);
        let mut table = LocalTable::zeros(universe.len())?;
        r.dict().for_each_subset(&ranks, |mask, &v| table.set(mask, v))?;

        // Now table[X] = |{ v : N⁻(v) ∩ S = X }|.
        table.mobius_in_place();

        // Vertices with a right neighbour in S sit in the wrong bucket.
        for (ru, right) in right_traces(og, &ranks) {
            let left = left_trace(og, &ranks, ru);
            table.add(left, -1);
            table.add(left | right, 1);
        }

        Ok(ExactNeighborhoodTable { universe, table })
    }

    pub fn universe(&self) -> &[Vertex] {
        &self.universe
    }

    pub fn table(&self) -> &LocalTable {
        &self.table
    }

    pub fn full_mask(&self) -> u32 {
        self.table.full_mask()
    }

    pub fn lookup(&self, mask: u32) -> Result<i64> {
        if mask & !self.full_mask() != 0 {
            return Err(Error::InvalidArgument(format!(
                "mask {mask:#b} has bits outside a universe of {}",
                self.universe.len()
            )));
        }
        Ok(self.table.get(mask))
    }

    /// Bitmask of `vs ∩ universe`.
    pub fn mask_of(&self, vs: &[Vertex]) -> u32 {
        self.universe
            .iter()
            .enumerate()
            .filter(|(_, u)| vs.contains(u))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn vertices_of(&self, mask: u32) -> Vec<Vertex> {
        self.universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Removes the members of the universe from their own buckets, leaving
    /// only vertices outside `S`.
    pub fn without_members(&self, og: &OrderedGraph) -> LocalTable {
        let mut t = self.table.clone();
        let ranks = og.ranks_of(&self.universe);
        let right = right_traces(og, &ranks);
        for &rz in &ranks {
            let r = right.binary_search_by_key(&rz, |&(u, _)| u).map_or(0, |i| right[i].1);
            t.add(left_trace(og, &ranks, rz) | r, -1);
        }
        t
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Mask of `N⁻(u) ∩ S` for the vertex `u` at rank `ru`, given the ascending
/// ranks of `S`.
pub(crate) fn left_trace(og: &OrderedGraph, ranks: &[u32], ru: u32) -> u32 {
    let left = og.left_ranks_at(ru);
    let (mut i, mut j, mut mask) = (0, 0, 0);
    while i < ranks.len() && j < left.len() {
        match ranks[i].cmp(&left[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                mask |= 1 << i;
                i += 1;
                j += 1;
            }
        }
    }
    mask
}

/// Smallest vertex outside `exclude` with each trace on `s`, indexed by the
/// trace mask. Only neighbours of `s` are inspected, plus a scan for the
/// first vertex that sees none of `s`.
pub(crate) fn first_witnesses(g: &Graph, s: &[Vertex], exclude: &[Vertex]) -> Vec<Option<Vertex>> {
    let mut marks: Vec<(Vertex, u32)> = s
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| g.neighbors(x).iter().map(move |&v| (v, 1u32 << i)))
        .collect();
    marks.sort_unstable();
    let mut first: Vec<Option<Vertex>> = vec![None; 1 << s.len()];
    for run in marks.chunk_by(|a, b| a.0 == b.0) {
        if !exclude.contains(&run[0].0) {
            let mask = run.iter().fold(0, |m, &(_, b)| m | b);
            first[mask as usize].get_or_insert(run[0].0);
        }
    }
    first[0] = g
        .vertices()
        .find(|v| !exclude.contains(v) && marks.binary_search_by_key(v, |&(w, _)| w).is_err());
    first
}

/// Rank of every vertex with a right neighbour in `S` (given by its
/// ascending ranks), with the mask of those right neighbours.
pub(crate) fn right_traces(og: &OrderedGraph, ranks: &[u32]) -> Vec<(u32, u32)> {
    let mut pairs: Vec<(u32, u32)> = ranks
        .iter()
        .enumerate()
        .flat_map(|(i, &rx)| og.left_ranks_at(rx).iter().map(move |&w| (w, 1 << i)))
        .collect();
    pairs.sort_unstable();
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
    for (w, bit) in pairs {
        match out.last_mut() {
            Some(last) if last.0 == w => last.1 |= bit,
            _ => out.push((w, bit)),
        }
    }
    out
}

/// Left-subset dictionary that keeps the ranks of the counted vertices, so
/// counts can be restricted to a rank interval.
#[derive(Debug, Clone)]
pub struct RankedLeftSubsets<'g> {
    og: &'g OrderedGraph,
    // Ranks ascending, because vertices are inserted in rank order.
    dict: SubsetDictionary<Vec<u32>>,
    max_key_size: usize,
}

impl<'g> RankedLeftSubsets<'g> {
    pub fn build(og: &'g OrderedGraph, max_key_size: usize) -> Self {
        let cap = max_key_size.min(og.degeneracy());
        let mut dict: SubsetDictionary<Vec<u32>> = SubsetDictionary::new();
        for rank in 0..og.n() {
            dict.visit_subsets_mut(og.left_ranks_at(rank as u32), 1, cap, |list| list.push(rank as u32));
        }
        RankedLeftSubsets {
            og,
            dict,
            max_key_size: cap,
        }
    }

    pub fn ordered_graph(&self) -> &'g OrderedGraph {
        self.og
    }

    fn is_complete(&self) -> bool {
        self.max_key_size >= self.og.degeneracy()
    }
}

/// Exact-trace counts split by position: `slots[s][X]` counts vertices
/// `v ∉ Z` with `N(v) ∩ Z = X` that lie after exactly `s` members of the
/// rank-ordered set `Z`.
#[derive(Debug, Clone)]
pub struct SlotTables {
    universe: Vec<Vertex>,
    slots: Vec<LocalTable>,
}

impl SlotTables {
    pub fn build(r: &RankedLeftSubsets<'_>, z: &[Vertex]) -> Result<Self> {
        let og = r.ordered_graph();
        let mut universe = z.to_vec();
        og.sort_by_rank(&mut universe);
        let k = universe.len();
        if k > MAX_LOCAL_BITS || (k > r.max_key_size && !r.is_complete()) {
            return Err(Error::Capacity {
                requested: k,
                limit: r.max_key_size.min(MAX_LOCAL_BITS),
            });
        }
        let ranks = og.ranks_of(&universe);
        let n = og.n() as u32;

        let mut slots = Vec::with_capacity(k + 1);
        for s in 0..=k {
            let lo = if s == 0 { 0 } else { ranks[s - 1] + 1 };
            let hi = if s == k { n } else { ranks[s] };
            // Only members before the slot can be left neighbours inside it.
            let mut local = LocalTable::zeros(s)?;
            r.dict.for_each_subset(&ranks[..s], |mask, list| {
                let count = if mask == 0 {
                    hi.saturating_sub(lo) as usize
                } else {
                    list.partition_point(|&x| x < hi) - list.partition_point(|&x| x < lo)
                };
                local.set(mask, count as i64);
            })?;
            local.mobius_in_place();
            let mut table = LocalTable::zeros(k)?;
            for (mask, &v) in local.values().iter().enumerate() {
                table.set(mask as u32, v);
            }
            slots.push(table);
        }

        for (ru, right) in right_traces(og, &ranks) {
            if ranks.binary_search(&ru).is_ok() {
                continue;
            }
            let slot = ranks.partition_point(|&x| x < ru);
            let left = left_trace(og, &ranks, ru);
            slots[slot].add(left, -1);
            slots[slot].add(left | right, 1);
        }

        Ok(SlotTables { universe, slots })
    }

    pub fn universe(&self) -> &[Vertex] {
        &self.universe
    }

    pub fn get(&self, slot: usize, mask: u32) -> i64 {
        self.slots[slot].get(mask)
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }
}
