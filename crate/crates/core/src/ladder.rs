//! Factor-2 approximation of the ladder index.
//!
//! A ladder of size `k` is a pair of sequences `a_1..a_k`, `b_1..b_k` with
//! `a_i b_j` an edge exactly when `i > j`. Equivalently, `A = {a_i}` has
//! outside witnesses whose traces on `A` form a chain `∅ = M_0 ⊂ M_1 ⊂ … ⊂
//! M_{k-1}` with `|M_i| = i`. Some vertex always has at least half of a
//! maximum ladder's side in its left neighbourhood, so searching the subsets
//! of left neighbourhoods finds a ladder of at least half the optimum.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::control::Control;
use crate::counter::Combinations;
use crate::error::Result;
use crate::graph::{degeneracy_order, Graph, OrderedGraph, Vertex};
use crate::subset_dict::LocalTable;
use crate::witness::{first_witnesses, ExactNeighborhoodTable, LeftSubsetCounter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderLevel {
    /// `M_i`, the witness's exact neighbourhood inside the side.
    pub set: Vec<Vertex>,
    pub witness: Vertex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderResult {
    pub k: usize,
    /// `a_1..a_k`; the witness `b_j` of level `k - j` sees exactly `a_{j+1}..a_k`.
    pub side: Vec<Vertex>,
    /// Levels `0..k`, level `i` holding `M_i`.
    pub levels: Vec<LadderLevel>,
    pub degeneracy: usize,
    pub elapsed: Duration,
    pub sets_tested: u64,
}

impl LadderResult {
    /// `(a_1..a_k, b_1..b_k)` in ladder order.
    pub fn sequences(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        let b = self.levels.iter().rev().map(|l| l.witness).collect();
        (self.side.clone(), b)
    }

    /// Checks the ladder against the adjacency of `g` directly.
    pub fn verify(&self, g: &Graph) -> bool {
        let (a, b) = self.sequences();
        if a.len() != self.k || b.len() != self.k {
            return false;
        }
        let mut all: Vec<Vertex> = a.iter().chain(&b).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * self.k {
            return false;
        }
        (0..self.k).all(|i| (0..self.k).all(|j| g.has_edge(a[i], b[j]) == (i > j)))
    }
}

/// Finds a nested chain `M_0 ⊂ … ⊂ M_{k-1}` of positive buckets below the
/// full mask of a `k`-bit table. Returns the masks by level.
pub fn chain_exists(table: &LocalTable) -> Option<Vec<u32>> {
    let k = table.bits();
    if k == 0 {
        return None;
    }
    // 0 unknown, 1 reachable from ∅, 2 dead.
    let mut memo = vec![0u8; table.len()];
    let full = table.full_mask();
    let top = (0..k).map(|b| full & !(1 << b)).find(|&m| descend(table, m, &mut memo))?;
    let mut chain = vec![top];
    let mut m = top;
    while m != 0 {
        m = bits(m).map(|b| m & !(1 << b)).find(|&s| memo[s as usize] == 1).expect("memo records a path");
        chain.push(m);
    }
    chain.reverse();
    Some(chain)
}

fn bits(m: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |b| m >> b & 1 == 1)
}

fn descend(table: &LocalTable, m: u32, memo: &mut [u8]) -> bool {
    match memo[m as usize] {
        1 => return true,
        2 => return false,
        _ => {}
    }
    let ok = table.get(m) > 0 && (m == 0 || bits(m).any(|b| descend(table, m & !(1 << b), memo)));
    memo[m as usize] = if ok { 1 } else { 2 };
    ok
}

pub fn ladder_approx(g: &Graph) -> Result<LadderResult> {
    ladder_approx_with(g, &Control::unbounded())
}

/// Subsets are tried by decreasing size and a vertex is abandoned at the
/// first success, since smaller subsets cannot improve on it.
pub fn ladder_approx_with(g: &Graph, ctl: &Control) -> Result<LadderResult> {
    search(g, ctl, true)
}

/// Tries every subset of every left neighbourhood.
pub fn ladder_approx_unpruned(g: &Graph) -> Result<LadderResult> {
    search(g, &Control::unbounded(), false)
}

fn search(g: &Graph, ctl: &Control, pruned: bool) -> Result<LadderResult> {
    let start = Instant::now();
    let og = degeneracy_order(g);
    let r = LeftSubsetCounter::build(&og, og.degeneracy());
    let mut best: Option<(Vec<Vertex>, Vec<u32>)> = None;
    let mut tested = 0u64;

    for &u in og.order() {
        let best_k = best.as_ref().map_or(0, |b| b.0.len());
        // The side lies inside one left neighbourhood.
        if pruned && best_k == og.degeneracy() {
            break;
        }
        ctl.check()?;
        let left = og.left_neighbors(u);
        let floor = if pruned { best_k + 1 } else { 1 };
        for size in (floor..=left.len()).rev() {
            let mut hit = false;
            for pick in Combinations::new(left.len(), size) {
                let set: Vec<Vertex> = pick.iter().map(|&i| left[i]).collect();
                let q = ExactNeighborhoodTable::build(&r, &set)?;
                tested += 1;
                if let Some(chain) = chain_exists(&q.without_members(&og)) {
                    if best.as_ref().is_none_or(|b| b.0.len() < size) {
                        best = Some((q.universe().to_vec(), chain));
                    }
                    hit = true;
                    if pruned {
                        break;
                    }
                }
            }
            if hit && pruned {
                break;
            }
        }
    }

    let (side, levels) = match best {
        Some((universe, chain)) => certificate(g, &universe, &chain),
        None => (Vec::new(), Vec::new()),
    };
    Ok(LadderResult {
        k: side.len(),
        side,
        levels,
        degeneracy: og.degeneracy(),
        elapsed: start.elapsed(),
        sets_tested: tested,
    })
}

fn certificate(g: &Graph, universe: &[Vertex], chain: &[u32]) -> (Vec<Vertex>, Vec<LadderLevel>) {
    let k = universe.len();
    let full = ((1u64 << k) - 1) as u32;
    let members = |m: u32| -> Vec<Vertex> { bits(m).map(|b| universe[b as usize]).collect() };
    // a_1 is missing from M_{k-1}, a_k is the only element of M_1.
    let mut side = Vec::with_capacity(k);
    let mut prev = full;
    for &m in chain.iter().rev() {
        side.push(universe[(prev & !m).trailing_zeros() as usize]);
        prev = m;
    }
    let first = first_witnesses(g, universe, universe);
    let levels = chain
        .iter()
        .map(|&m| LadderLevel {
            set: members(m),
            witness: first[m as usize].expect("positive bucket has a witness"),
        })
        .collect();
    (side, levels)
}

/// Largest possible ladder in a graph of degeneracy `d`.
pub fn ladder_upper_bound(og: &OrderedGraph) -> usize {
    2 * og.degeneracy() + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn complete_graphs_have_no_certified_ladder() {
        for n in 1..7 {
            assert_eq!(ladder_approx(&fixtures::complete(n)).unwrap().k, 0);
        }
    }

    #[test]
    fn ladder_fixtures() {
        for t in [2, 4, 6] {
            let g = fixtures::ladder(t);
            let res = ladder_approx(&g).unwrap();
            assert!(res.k >= t / 2 && res.k <= t, "L_{t}: {}", res.k);
            assert!(res.verify(&g));
        }
    }

    #[test]
    fn chain_examples() {
        // k = 1: the single level is ∅.
        let t = LocalTable::from_values(vec![1, 0]).unwrap();
        assert_eq!(chain_exists(&t), Some(vec![0]));
        let t = LocalTable::from_values(vec![0, 5]).unwrap();
        assert_eq!(chain_exists(&t), None);
        // k = 2: ∅ then {1}.
        let t = LocalTable::from_values(vec![1, 0, 2, 0]).unwrap();
        assert_eq!(chain_exists(&t), Some(vec![0, 0b10]));
        assert_eq!(chain_exists(&LocalTable::zeros(0).unwrap()), None);
    }

    #[test]
    fn pruning_keeps_the_value() {
        for g in [fixtures::petersen(), fixtures::ladder(5), fixtures::cycle(8), fixtures::crown(4)] {
            let a = ladder_approx(&g).unwrap();
            let b = ladder_approx_unpruned(&g).unwrap();
            assert_eq!(a.k, b.k);
            assert!(a.verify(&g) && b.verify(&g));
        }
    }

    #[test]
    fn certificate_order() {
        let g = fixtures::ladder(4);
        let res = ladder_approx(&g).unwrap();
        let (a, b) = res.sequences();
        for (i, level) in res.levels.iter().enumerate() {
            assert_eq!(level.set.len(), i);
        }
        assert_eq!((a.len(), b.len()), (res.k, res.k));
    }
}
