//! Exact counting and detection of bipartite patterns in degenerate graphs.
//!
//! An occurrence of a pattern with sides `X`, `Y` is a pair `(A, B)` of
//! disjoint vertex sets with `|A| = |X|`, `|B| = |Y|` for which some pair of
//! bijections `X → A`, `Y → B` sends black pairs to edges and red pairs to
//! non-edges. When `|X| = |Y|` the pairs `(A, B)` and `(B, A)` are counted
//! separately.
//!
//! Candidate sets `Z` are drawn from closed left neighbourhoods `N⁻[C]` of
//! `lc`-sets `C`. For a fixed `Z` the opposite side is counted from witness
//! tables that record every vertex's trace on `Z` together with its position
//! among the members of `Z`. Positions fix the cover numbers of both sides
//! of an occurrence, and the occurrence is credited to the side with the
//! smaller cover (side `X` on ties), so it is counted exactly once.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::control::Control;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph, OrderedGraph, Vertex};
use crate::pattern::{analyze, completed_signatures, low_bits, min_cover, Pattern, Side, Signature};
use crate::subset_dict::MAX_LOCAL_BITS;
use crate::witness::{RankedLeftSubsets, SlotTables};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternCountResult {
    #[serde(serialize_with = "serialize_biguint")]
    pub count: BigUint,
    pub elapsed: Duration,
    /// Distinct candidate sets evaluated.
    pub candidates_examined: u64,
}

fn serialize_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// What the engine needs to know about a pattern: the cover bound and, per
/// side, every trace multiset a valid opposite side can leave on it.
#[derive(Debug, Clone)]
pub struct CountPlan {
    lc: usize,
    sizes: [usize; 2],
    traces: [Vec<Signature>; 2],
}

impl CountPlan {
    /// Plans with the left-covering number from a full pattern analysis.
    pub fn new(p: &Pattern) -> Result<Self> {
        check_countable(p)?;
        let lc = analyze(p)?.lc;
        Self::with_cover_bound(p, lc)
    }

    /// Plans with a caller-supplied cover bound, which must be at least the
    /// left-covering number of `p` for the counts to be exact.
    pub fn with_cover_bound(p: &Pattern, lc: usize) -> Result<Self> {
        check_countable(p)?;
        if lc == 0 {
            return Err(Error::InvalidArgument("cover bound must be positive".into()));
        }
        let traces = [
            completed_signatures(p, Side::X)?.into_iter().collect(),
            completed_signatures(p, Side::Y)?.into_iter().collect(),
        ];
        Ok(CountPlan {
            lc,
            sizes: [p.side_len(Side::X), p.side_len(Side::Y)],
            traces,
        })
    }

    pub fn cover_bound(&self) -> usize {
        self.lc
    }
}

fn check_countable(p: &Pattern) -> Result<()> {
    let (nx, ny) = (p.side_len(Side::X), p.side_len(Side::Y));
    if nx < 2 || ny < 2 {
        return Err(Error::UnsupportedPattern(
            "a side of size 1 is not handled here; use count_bicliques or count edges directly".into(),
        ));
    }
    if nx.max(ny) > MAX_LOCAL_BITS {
        return Err(Error::Capacity {
            requested: nx.max(ny),
            limit: MAX_LOCAL_BITS,
        });
    }
    Ok(())
}

pub fn count_pattern(g: &Graph, p: &Pattern) -> Result<PatternCountResult> {
    count_pattern_with(g, p, &Control::unbounded())
}

pub fn count_pattern_with(g: &Graph, p: &Pattern, ctl: &Control) -> Result<PatternCountResult> {
    let plan = CountPlan::new(p)?;
    let og = degeneracy_order(g);
    run_plan(&og, &plan, ctl, false)
}

pub fn decide_pattern(g: &Graph, p: &Pattern) -> Result<bool> {
    decide_pattern_with(g, p, &Control::unbounded())
}

pub fn decide_pattern_with(g: &Graph, p: &Pattern, ctl: &Control) -> Result<bool> {
    let plan = CountPlan::new(p)?;
    let og = degeneracy_order(g);
    Ok(run_plan(&og, &plan, ctl, true)?.count > BigUint::ZERO)
}

/// Counts with a prepared plan on a prepared ordering. With `stop_at_first`
/// the returned count is only guaranteed to be nonzero iff an occurrence
/// exists.
pub fn run_plan(og: &OrderedGraph, plan: &CountPlan, ctl: &Control, stop_at_first: bool) -> Result<PatternCountResult> {
    let start = Instant::now();
    let max_side = plan.sizes[0].max(plan.sizes[1]);
    let ranked = RankedLeftSubsets::build(og, max_side);
    let mut engine = Engine {
        plan,
        verdicts: HashMap::new(),
    };

    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut total = BigUint::ZERO;
    let mut examined = 0u64;
    let n = og.n();
    let lc = plan.lc.min(n);
    let mut sizes: Vec<usize> = plan.sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();

    'outer: for cover in Combinations::new(n, lc) {
        ctl.check()?;
        let cover: Vec<Vertex> = cover.iter().map(|&i| og.vertex_at(i as u32)).collect();
        let pool = og.closed_left_neighborhood(&cover)?;
        for &k in &sizes {
            for pick in Combinations::new(pool.len(), k) {
                let z: Vec<Vertex> = pick.iter().map(|&i| pool[i]).collect();
                if !seen.insert(z.clone()) {
                    continue;
                }
                ctl.check()?;
                examined += 1;
                let slots = SlotTables::build(&ranked, &z)?;
                let c = engine.count_for(&slots);
                if c > BigUint::ZERO {
                    total += c;
                    if stop_at_first {
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(PatternCountResult {
        count: total,
        elapsed: start.elapsed(),
        candidates_examined: examined,
    })
}

struct Engine<'a> {
    plan: &'a CountPlan,
    // (Z plays X, |Z|, witnesses as (trace, slot)) -> credited here.
    verdicts: HashMap<(bool, usize, Vec<(u32, usize)>), bool>,
}

impl Engine<'_> {
    fn count_for(&mut self, slots: &SlotTables) -> BigUint {
        let z = slots.universe().len();
        let mut total = BigUint::ZERO;
        for (role, as_x) in [(0, true), (1, false)] {
            if self.plan.sizes[role] != z {
                continue;
            }
            for sig in &self.plan.traces[role] {
                let groups = sig.grouped();
                // Cheap rejection before the slot split.
                let feasible = groups.iter().all(|&(mask, k)| {
                    (0..slots.slot_count()).map(|s| slots.get(s, mask)).sum::<i64>() >= k as i64
                });
                if !feasible {
                    continue;
                }
                let mut witnesses = Vec::new();
                self.split(slots, as_x, &groups, 0, 0, groups.first().map_or(0, |g| g.1), BigUint::from(1u8), &mut witnesses, &mut total);
            }
        }
        total
    }

    /// Distributes the multiplicity of each trace over the slots.
    #[allow(clippy::too_many_arguments)]
    fn split(
        &mut self,
        slots: &SlotTables,
        as_x: bool,
        groups: &[(u32, usize)],
        gi: usize,
        slot: usize,
        remaining: usize,
        weight: BigUint,
        witnesses: &mut Vec<(u32, usize)>,
        total: &mut BigUint,
    ) {
        if gi == groups.len() {
            if self.credited(as_x, slots.universe().len(), witnesses) {
                *total += weight;
            }
            return;
        }
        let mask = groups[gi].0;
        if remaining == 0 {
            let next = groups.get(gi + 1).map_or(0, |g| g.1);
            self.split(slots, as_x, groups, gi + 1, 0, next, weight, witnesses, total);
            return;
        }
        let last = slot + 1 == slots.slot_count();
        let available = slots.get(slot, mask);
        let lo = if last { remaining } else { 0 };
        for take in lo..=remaining {
            let w = binomial(available, take);
            if w == BigUint::ZERO {
                break;
            }
            witnesses.extend(std::iter::repeat((mask, slot)).take(take));
            let rest = remaining - take;
            if rest == 0 {
                let next = groups.get(gi + 1).map_or(0, |g| g.1);
                self.split(slots, as_x, groups, gi + 1, 0, next, &weight * w, witnesses, total);
            } else if !last {
                self.split(slots, as_x, groups, gi, slot + 1, rest, &weight * w, witnesses, total);
            }
            witnesses.truncate(witnesses.len() - take);
        }
    }

    fn credited(&mut self, as_x: bool, z: usize, witnesses: &[(u32, usize)]) -> bool {
        let key = (as_x, z, witnesses.to_vec());
        if let Some(&v) = self.verdicts.get(&key) {
            return v;
        }
        let (cz, cw) = cover_numbers(z, witnesses);
        let v = if as_x { cz <= cw } else { cz < cw };
        self.verdicts.insert(key, v);
        v
    }
}

/// Cover numbers `(Z side, witness side)` of the ordered occurrence formed by
/// `Z` (positions `0..z`) and witnesses given as `(trace, slot)`, using only
/// edges between the two sides.
pub(crate) fn cover_numbers(z: usize, witnesses: &[(u32, usize)]) -> (usize, usize) {
    let w = witnesses.len();
    let mut z_sets: Vec<u128> = (0..z).map(|i| 1u128 << i).collect();
    z_sets.extend(witnesses.iter().map(|&(t, s)| u128::from(t) & low_bits(s)));
    let cz = min_cover(&z_sets, low_bits(z), z);

    let mut w_sets: Vec<u128> = (0..w).map(|j| 1u128 << j).collect();
    w_sets.extend((0..z).map(|i| {
        witnesses
            .iter()
            .enumerate()
            .filter(|&(_, &(t, s))| t >> i & 1 == 1 && s <= i)
            .fold(0u128, |m, (j, _)| m | 1 << j)
    }));
    let cw = min_cover(&w_sets, low_bits(w), w);
    (cz, cw)
}

pub(crate) fn binomial(n: i64, k: usize) -> BigUint {
    if n < 0 || (n as u64) < k as u64 {
        return BigUint::ZERO;
    }
    let n = n as u64;
    let mut acc = BigUint::from(1u8);
    for i in 0..k as u64 {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Counts `K_{s,t}` occurrences (`|A| = s`, `|B| = t`) without a pattern
/// analysis. Every complete bipartite occurrence is covered by its last
/// vertex, so single vertices suffice as covers.
pub fn count_bicliques(g: &Graph, s: usize, t: usize) -> Result<PatternCountResult> {
    count_bicliques_with(g, s, t, &Control::unbounded())
}

pub fn count_bicliques_with(g: &Graph, s: usize, t: usize, ctl: &Control) -> Result<PatternCountResult> {
    if s < t || t < 1 {
        return Err(Error::InvalidArgument(format!("biclique sizes need s >= t >= 1, got {s},{t}")));
    }
    if s > MAX_LOCAL_BITS {
        return Err(Error::Capacity {
            requested: s,
            limit: MAX_LOCAL_BITS,
        });
    }
    let start = Instant::now();
    let og = degeneracy_order(g);
    let ranked = RankedLeftSubsets::build(&og, s);
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut total = BigUint::ZERO;
    let mut examined = 0u64;
    let sizes: BTreeSet<usize> = [s, t].into_iter().collect();

    for &u in og.order() {
        ctl.check()?;
        let pool = og.closed_left_neighborhood(&[u])?;
        for &k in &sizes {
            for pick in Combinations::new(pool.len(), k) {
                let z: Vec<Vertex> = pick.iter().map(|&i| pool[i]).collect();
                if !seen.insert(z.clone()) {
                    continue;
                }
                examined += 1;
                let slots = SlotTables::build(&ranked, &z)?;
                let full = slots.universe().len();
                let full = low_bits(full) as u32;
                let all: i64 = (0..slots.slot_count()).map(|i| slots.get(i, full)).sum();
                let after_last = slots.get(slots.slot_count() - 1, full);
                // Z as the s-side: credited when Z is covered by one vertex,
                // i.e. s = 1 or some witness comes last.
                if k == s {
                    total += if s == 1 {
                        binomial(all, t)
                    } else {
                        binomial(all, t) - binomial(all - after_last, t)
                    };
                }
                // Z as the t-side: credited when the s-side needs more.
                if k == t && s >= 2 {
                    total += binomial(all, s) - binomial(all - after_last, s);
                }
            }
        }
    }

    Ok(PatternCountResult {
        count: total,
        elapsed: start.elapsed(),
        candidates_examined: examined,
    })
}

/// Counts co-matching occurrences `M̄_t` using the known cover bound 2 and
/// its single signature, skipping the pattern analysis.
pub fn count_comatchings(g: &Graph, t: usize) -> Result<PatternCountResult> {
    count_comatchings_with(g, t, &Control::unbounded())
}

pub fn count_comatchings_with(g: &Graph, t: usize, ctl: &Control) -> Result<PatternCountResult> {
    if t < 2 {
        return Err(Error::InvalidArgument("co-matching size must be at least 2".into()));
    }
    let p = Pattern::comatching(t)?;
    let plan = CountPlan::with_cover_bound(&p, 2)?;
    run_plan(&degeneracy_order(g), &plan, ctl, false)
}

/// Largest `t` such that `K_{t,t}` occurs; 0 for edgeless graphs.
pub fn max_biclique(g: &Graph) -> Result<usize> {
    max_biclique_with(g, &Control::unbounded())
}

pub fn max_biclique_with(g: &Graph, ctl: &Control) -> Result<usize> {
    if g.m() == 0 {
        return Ok(0);
    }
    let mut t = 1;
    while count_bicliques_with(g, t + 1, t + 1, ctl)?.count > BigUint::ZERO {
        t += 1;
    }
    Ok(t)
}

/// Largest `t` such that the co-matching `M̄_t` occurs; `M̄_1` is a single
/// non-adjacent pair.
pub fn max_comatching(g: &Graph) -> Result<usize> {
    max_comatching_with(g, &Control::unbounded())
}

pub fn max_comatching_with(g: &Graph, ctl: &Control) -> Result<usize> {
    let n = g.n();
    if n < 2 || g.m() == n * (n - 1) / 2 {
        return Ok(0);
    }
    let og = degeneracy_order(g);
    let mut t = 1;
    loop {
        ctl.check()?;
        let plan = CountPlan::with_cover_bound(&Pattern::comatching(t + 1)?, 2)?;
        if run_plan(&og, &plan, ctl, true)?.count == BigUint::ZERO {
            return Ok(t);
        }
        t += 1;
    }
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn count(g: &Graph, spec: &str) -> u64 {
        let p = Pattern::from_builtin(spec).unwrap();
        count_pattern(g, &p).unwrap().count.try_into().unwrap()
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u8));
        assert_eq!(binomial(3, 4), BigUint::ZERO);
        assert_eq!(binomial(-1, 0), BigUint::ZERO);
        assert_eq!(binomial(0, 0), BigUint::from(1u8));
    }

    #[test]
    fn four_cycle_holds_one_biclique_twice() {
        assert_eq!(count(&fixtures::cycle(4), "biclique:2,2"), 2);
        assert_eq!(count_bicliques(&fixtures::cycle(4), 2, 2).unwrap().count, BigUint::from(2u8));
    }

    #[test]
    fn complete_bipartite_three_three() {
        let g = fixtures::complete_bipartite(3, 3);
        assert_eq!(count(&g, "biclique:2,2"), 18);
        assert_eq!(count_bicliques(&g, 2, 2).unwrap().count, BigUint::from(18u8));
        assert!(decide_pattern(&g, &Pattern::biclique(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn star_has_no_two_centres() {
        let star = fixtures::complete_bipartite(1, 4);
        assert_eq!(count_bicliques(&star, 2, 2).unwrap().count, BigUint::ZERO);
        assert_eq!(count_bicliques(&star, 4, 1).unwrap().count, BigUint::from(1u8));
    }

    #[test]
    fn edgeless_and_cliques() {
        assert_eq!(count(&Graph::new(6), "biclique:2,2"), 0);
        assert_eq!(count(&fixtures::complete(6), "comatching:2"), 0);
        assert_eq!(count_comatchings(&fixtures::complete(6), 2).unwrap().count, BigUint::ZERO);
        assert!(!decide_pattern(&fixtures::cycle(5), &Pattern::biclique(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn crown_contains_comatchings() {
        // A, B must be the two sides, in either role, matched in 3! ways
        // that all give the same pair of sets.
        assert_eq!(count(&fixtures::crown(3), "comatching:3"), 2);
        assert_eq!(count_comatchings(&fixtures::crown(3), 3).unwrap().count, BigUint::from(2u8));
    }

    #[test]
    fn ladder_graph_contains_small_ladder() {
        assert!(decide_pattern(&fixtures::ladder(3), &Pattern::ladder(2).unwrap()).unwrap());
    }

    #[test]
    fn one_sided_patterns_are_unsupported() {
        let p = Pattern::biclique(3, 1).unwrap();
        assert!(matches!(count_pattern(&fixtures::path(4), &p), Err(Error::UnsupportedPattern(_))));
        assert!(count_bicliques(&fixtures::path(4), 1, 2).is_err());
    }

    #[test]
    fn cover_numbers_of_small_orders() {
        // Z = {z0, z1}; one witness after both seeing both: Z covered by it.
        assert_eq!(cover_numbers(2, &[(0b11, 2), (0b00, 0)]), (1, 2));
        // Witnesses before both members: each member covers both witnesses.
        assert_eq!(cover_numbers(2, &[(0b11, 0), (0b11, 0)]), (2, 1));
    }

    #[test]
    fn maxima() {
        assert_eq!(max_biclique(&fixtures::complete_bipartite(3, 4)).unwrap(), 3);
        assert_eq!(max_biclique(&Graph::new(4)).unwrap(), 0);
        assert_eq!(max_biclique(&fixtures::path(3)).unwrap(), 1);
        assert_eq!(max_comatching(&fixtures::crown(4)).unwrap(), 4);
        assert_eq!(max_comatching(&fixtures::complete(5)).unwrap(), 0);
        assert_eq!(max_comatching(&Graph::new(3)).unwrap(), 1);
    }

    #[test]
    fn timeout_is_reported() {
        let ctl = Control::unbounded();
        ctl.cancel();
        let p = Pattern::biclique(2, 2).unwrap();
        assert!(matches!(count_pattern_with(&fixtures::cycle(4), &p, &ctl), Err(Error::Timeout)));
    }
}
