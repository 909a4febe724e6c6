//! VC-dimension of the neighbourhood set system `{ N(v) : v ∈ V(G) }`.
//!
//! A set `S` is shattered when every `X ⊆ S` equals `N(v) ∩ S` for some
//! vertex `v` (which may itself lie in `S`).

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::control::Control;
use crate::counter::Combinations;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph, OrderedGraph, Vertex};
use crate::subset_dict::MAX_LOCAL_BITS;
use crate::witness::{first_witnesses, ExactNeighborhoodTable, LeftSubsetCounter};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VcMode {
    Exact,
    Approx { epsilon: f64 },
    Linear,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VcWitness {
    pub subset: Vec<Vertex>,
    pub vertex: Vertex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VcResult {
    pub vc: usize,
    pub shattered_set: Vec<Vertex>,
    /// One witness per subset of the shattered set, by subset bitmask.
    pub witnesses: Vec<VcWitness>,
    pub mode: VcMode,
    pub degeneracy: usize,
    pub elapsed: Duration,
    pub sets_tested: u64,
}

impl VcResult {
    /// Checks every witness against the adjacency of `g` directly.
    pub fn verify(&self, g: &Graph) -> bool {
        let s = &self.shattered_set;
        if self.vc != s.len() || (g.n() > 0 && self.witnesses.len() != 1 << s.len()) {
            return false;
        }
        let mut seen = HashSet::new();
        self.witnesses.iter().all(|w| {
            let trace: Vec<Vertex> = s.iter().copied().filter(|&x| g.has_edge(w.vertex, x)).collect();
            let mut subset = w.subset.clone();
            subset.sort_unstable();
            trace == subset && seen.insert(subset)
        })
    }
}

/// Tunables for [`vc_exact_with`].
#[derive(Debug, Clone)]
pub struct VcConfig {
    /// Brute force over candidate `k`-subsets is chosen once its estimated
    /// cost times this factor drops below the remaining cover-phase cost.
    pub brute_force_factor: f64,
}

impl Default for VcConfig {
    fn default() -> Self {
        VcConfig { brute_force_factor: 1.0 }
    }
}

/// Number of vertices whose closed left neighbourhoods are guaranteed to
/// cover some maximum shattered set: `⌈log₂ d⌉ + 1`, and `d + 1` for `d ≤ 1`.
pub fn cover_bound(d: usize) -> usize {
    if d <= 1 {
        d + 1
    } else {
        (d as f64).log2().ceil() as usize + 1
    }
}

/// Vertices that may belong to a shattered set of size `k`: each needs at
/// least `C(k-1, i-1)` neighbours of degree at least `i` for `1 <= i < k`.
pub fn candidate_filter(g: &Graph, k: usize) -> Vec<Vertex> {
    candidate_mask(g, k)
        .iter()
        .enumerate()
        .filter(|(_, &ok)| ok)
        .map(|(v, _)| v as Vertex)
        .collect()
}

fn candidate_mask(g: &Graph, k: usize) -> Vec<bool> {
    let k = k.max(1);
    let needs: Vec<u128> = (1..k).map(|i| binom_u128(k - 1, i - 1)).collect();
    g.vertices()
        .map(|v| {
            let mut degrees: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            degrees.sort_unstable_by(|a, b| b.cmp(a));
            needs.iter().enumerate().all(|(idx, &need)| {
                let i = idx + 1;
                let have = degrees.partition_point(|&deg| deg >= i) as u128;
                have >= need
            })
        })
        .collect()
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// True when every bucket of `q` is positive.
pub fn is_shattered(q: &ExactNeighborhoodTable) -> bool {
    q.table().values().iter().all(|&c| c > 0)
}

fn witnesses_of(g: &Graph, s: &[Vertex]) -> Vec<VcWitness> {
    first_witnesses(g, s, &[])
        .iter()
        .enumerate()
        .filter_map(|(mask, w)| {
            w.map(|vertex| VcWitness {
                subset: s.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect(),
                vertex,
            })
        })
        .collect()
}

fn finish(g: &Graph, og: &OrderedGraph, mut set: Vec<Vertex>, mode: VcMode, start: Instant, tested: u64) -> VcResult {
    set.sort_unstable();
    VcResult {
        vc: set.len(),
        witnesses: witnesses_of(g, &set),
        shattered_set: set,
        mode,
        degeneracy: og.degeneracy(),
        elapsed: start.elapsed(),
        sets_tested: tested,
    }
}

pub fn vc_exact(g: &Graph) -> Result<VcResult> {
    vc_exact_with(g, &VcConfig::default(), &Control::unbounded())
}

/// Grows the target size one step at a time. For each size the candidate
/// filter is recomputed, the left-subset counts are rebuilt over the
/// candidates, and sets are drawn from joint left neighbourhoods of `c`
/// vertices for `c = 1, 2, …, cover_bound(d)`, or from all candidate
/// subsets once that looks cheaper.
pub fn vc_exact_with(g: &Graph, cfg: &VcConfig, ctl: &Control) -> Result<VcResult> {
    let start = Instant::now();
    let og = degeneracy_order(g);
    let mut best: Vec<Vertex> = Vec::new();
    let mut tested = 0u64;
    let p = cover_bound(og.degeneracy());

    let mut k = 1;
    while k <= og.degeneracy() + 1 && k <= g.n() {
        ctl.check()?;
        if k > MAX_LOCAL_BITS {
            return Err(Error::Capacity {
                requested: k,
                limit: MAX_LOCAL_BITS,
            });
        }
        let mask = candidate_mask(g, k);
        let candidates: Vec<Vertex> = og.order().iter().copied().filter(|&v| mask[v as usize]).collect();
        if candidates.len() < k {
            break;
        }
        let r = LeftSubsetCounter::build_filtered(&og, k, Some(mask.clone()));
        let mut search = Search {
            og: &og,
            r: &r,
            mask: &mask,
            k,
            seen: HashSet::new(),
            tested: 0,
            ctl,
        };
        let found = search.run(&candidates, p, cfg.brute_force_factor)?;
        tested += search.tested;
        match found {
            Some(s) => best = s,
            None => break,
        }
        k += 1;
    }
    Ok(finish(g, &og, best, VcMode::Exact, start, tested))
}

struct Search<'a> {
    og: &'a OrderedGraph,
    r: &'a LeftSubsetCounter<'a>,
    mask: &'a [bool],
    k: usize,
    seen: HashSet<Vec<Vertex>>,
    tested: u64,
    ctl: &'a Control,
}

impl Search<'_> {
    fn run(&mut self, candidates: &[Vertex], p: usize, factor: f64) -> Result<Option<Vec<Vertex>>> {
        let og = self.og;
        // Closed left neighbourhoods restricted to candidates.
        let local: Vec<(Vertex, Vec<Vertex>)> = og
            .order()
            .iter()
            .map(|&v| {
                let mut l: Vec<Vertex> =
                    og.left_neighbors(v).iter().copied().filter(|&u| self.mask[u as usize]).collect();
                if self.mask[v as usize] {
                    l.push(v);
                }
                (v, l)
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let avg = local.iter().map(|(_, l)| l.len()).sum::<usize>() as f64 / local.len().max(1) as f64;
        let k = self.k;
        let phase_cost = |c: usize| binom_f64(local.len(), c) * binom_f64((c as f64 * avg).round() as usize, k);
        let brute_cost = binom_f64(candidates.len(), self.k);
        let p = p.min(local.len());

        for c in 1..=p {
            let remaining: f64 = (c..=p).map(phase_cost).sum();
            if brute_cost * factor <= remaining {
                return self.brute_force(candidates);
            }
            for cover in Combinations::new(local.len(), c) {
                self.ctl.check()?;
                let mut pool: Vec<Vertex> = cover.iter().flat_map(|&i| local[i].1.iter().copied()).collect();
                pool.sort_unstable();
                pool.dedup();
                if pool.len() < self.k {
                    continue;
                }
                og.sort_by_rank(&mut pool);
                for pick in Combinations::new(pool.len(), self.k) {
                    let s: Vec<Vertex> = pick.iter().map(|&i| pool[i]).collect();
                    if self.test(s.clone())? {
                        return Ok(Some(s));
                    }
                }
            }
        }
        Ok(None)
    }

    fn brute_force(&mut self, candidates: &[Vertex]) -> Result<Option<Vec<Vertex>>> {
        for pick in Combinations::new(candidates.len(), self.k) {
            let s: Vec<Vertex> = pick.iter().map(|&i| candidates[i]).collect();
            if self.test(s.clone())? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    fn test(&mut self, s: Vec<Vertex>) -> Result<bool> {
        if !self.seen.insert(s.clone()) {
            return Ok(false);
        }
        if self.tested % 1024 == 0 {
            self.ctl.check()?;
        }
        self.tested += 1;
        Ok(is_shattered(&ExactNeighborhoodTable::build(self.r, &s)?))
    }
}

fn binom_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Approximation within a factor `epsilon`: inspects the joint closed left
/// neighbourhood of every `⌈ε·cover_bound(d)⌉`-set and takes the largest
/// shattered subset found there.
pub fn vc_approx(g: &Graph, epsilon: f64) -> Result<VcResult> {
    vc_approx_with(g, epsilon, &Control::unbounded())
}

pub fn vc_approx_with(g: &Graph, epsilon: f64, ctl: &Control) -> Result<VcResult> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidArgument(format!("epsilon must lie in (0, 1], got {epsilon}")));
    }
    let og = degeneracy_order(g);
    let c = ((epsilon * cover_bound(og.degeneracy()) as f64).ceil() as usize).max(1);
    approx_with_cover(g, og, c, VcMode::Approx { epsilon }, ctl)
}

/// The single-vertex case of [`vc_approx`], linear in `n` for fixed `d`.
pub fn vc_approx_linear(g: &Graph) -> Result<VcResult> {
    vc_approx_linear_with(g, &Control::unbounded())
}

pub fn vc_approx_linear_with(g: &Graph, ctl: &Control) -> Result<VcResult> {
    approx_with_cover(g, degeneracy_order(g), 1, VcMode::Linear, ctl)
}

fn approx_with_cover(g: &Graph, og: OrderedGraph, c: usize, mode: VcMode, ctl: &Control) -> Result<VcResult> {
    let start = Instant::now();
    let r = LeftSubsetCounter::build(&og, og.degeneracy());
    let mut best: Vec<Vertex> = Vec::new();
    let mut tested = 0u64;
    let vertices: Vec<Vertex> = og.order().to_vec();
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();

    for cover in Combinations::new(vertices.len(), c.min(vertices.len())) {
        ctl.check()?;
        let cover: Vec<Vertex> = cover.iter().map(|&i| vertices[i]).collect();
        let pool = og.closed_left_neighborhood(&cover)?;
        // A single vertex is the last of its own pool, so pools never repeat.
        if pool.len() <= best.len() || (c > 1 && !seen.insert(pool.clone())) {
            continue;
        }
        let q = ExactNeighborhoodTable::build(&r, &pool)?;
        tested += 1;
        let found = largest_shattered(&q, best.len());
        if found.count_ones() as usize > best.len() {
            best = q.vertices_of(found);
        }
    }
    Ok(finish(g, &og, best, mode, start, tested))
}

/// Largest subset of the universe of `q` shattered by the traces present in
/// `q`, as a mask; returns 0 unless something beats `at_least`.
fn largest_shattered(q: &ExactNeighborhoodTable, at_least: usize) -> u32 {
    let traces: Vec<u32> = q
        .table()
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(m, _)| m as u32)
        .collect();
    let bits = q.universe().len();
    // Shattered sets are closed under subsets, so grow them by their top bit.
    let mut level: Vec<u32> = vec![0];
    let mut best = 0u32;
    let mut size = 0;
    while !level.is_empty() {
        if size > at_least {
            best = level[0];
        }
        let mut next = Vec::new();
        if traces.len() >= 1 << (size + 1) {
            for &s in &level {
                let top = if s == 0 { 0 } else { 32 - s.leading_zeros() as usize };
                for e in top..bits {
                    let t = s | 1 << e;
                    if shatters(&traces, t) {
                        next.push(t);
                    }
                }
            }
        }
        level = next;
        size += 1;
    }
    best
}

fn shatters(traces: &[u32], s: u32) -> bool {
    let k = s.count_ones();
    let mut hit = vec![false; 1 << k];
    let mut distinct = 0;
    for &t in traces {
        let idx = compress(t & s, s);
        if !hit[idx] {
            hit[idx] = true;
            distinct += 1;
        }
    }
    distinct == 1 << k
}

/// Packs the bits of `x` selected by `sel` into the low bits.
fn compress(x: u32, sel: u32) -> usize {
    let mut out = 0;
    let mut j = 0;
    let mut rest = sel;
    while rest != 0 {
        let b = rest.trailing_zeros();
        if x >> b & 1 == 1 {
            out |= 1 << j;
        }
        j += 1;
        rest &= rest - 1;
    }
    out
}

/// Builds the graph that has a shattered set of size `k` iff `h` has a
/// `k`-clique: `k` copies of `V(H)`, an isolated vertex, one pendant per copy
/// vertex, one vertex per edge `uv` and ordered pair of copies `i != j`
/// adjacent to `u⁽ⁱ⁾` and `v⁽ʲ⁾`, and for each `I ⊆ [k]` with `|I| >= 3` a
/// vertex adjacent to every copy indexed by `I`.
pub fn clique_reduction(h: &Graph, k: usize) -> Result<Graph> {
    if !(3..=20).contains(&k) {
        return Err(Error::InvalidArgument(format!("reduction needs 3 <= k <= 20, got {k}")));
    }
    let nh = h.n() as Vertex;
    let k32 = k as Vertex;
    let copy = |i: Vertex, v: Vertex| i * nh + v;
    let mut next = k32 * nh;
    let mut edges = Vec::new();

    next += 1; // isolated vertex
    for i in 0..k32 {
        for v in 0..nh {
            edges.push((copy(i, v), next));
            next += 1;
        }
    }
    let host_edges: Vec<(Vertex, Vertex)> = h.edges().collect();
    for &(u, v) in &host_edges {
        for i in 0..k32 {
            for j in 0..k32 {
                if i != j {
                    edges.push((copy(i, u), next));
                    edges.push((copy(j, v), next));
                    next += 1;
                }
            }
        }
    }
    for set in 0u32..1 << k {
        if set.count_ones() < 3 {
            continue;
        }
        for i in (0..k32).filter(|i| set >> i & 1 == 1) {
            for v in 0..nh {
                edges.push((copy(i, v), next));
            }
        }
        next += 1;
    }
    Ok(Graph::from_edges(next as usize, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cover_bounds() {
        assert_eq!(cover_bound(0), 1);
        assert_eq!(cover_bound(1), 2);
        assert_eq!(cover_bound(2), 2);
        assert_eq!(cover_bound(3), 3);
        assert_eq!(cover_bound(4), 3);
        assert_eq!(cover_bound(5), 4);
    }

    #[test]
    fn filter_examples() {
        assert_eq!(candidate_filter(&fixtures::petersen(), 1).len(), 10);
        assert_eq!(candidate_filter(&fixtures::complete_bipartite(1, 5), 2).len(), 6);
        let s3 = candidate_filter(&fixtures::shattered(3), 3);
        assert!((0..3).all(|v| s3.contains(&v)));
        assert!(candidate_filter(&fixtures::path(3), 3).is_empty());
    }

    #[test]
    fn shattered_checks() {
        let c4 = fixtures::cycle(4);
        let og = degeneracy_order(&c4);
        let r = LeftSubsetCounter::build(&og, 2);
        assert!(is_shattered(&ExactNeighborhoodTable::build(&r, &[]).unwrap()));
        assert!(!is_shattered(&ExactNeighborhoodTable::build(&r, &[0, 2]).unwrap()));

        let s2 = fixtures::shattered(2);
        let og = degeneracy_order(&s2);
        let r = LeftSubsetCounter::build(&og, 2);
        assert!(is_shattered(&ExactNeighborhoodTable::build(&r, &[0, 1]).unwrap()));
    }

    #[test]
    fn exact_examples() {
        for n in 2..7 {
            let res = vc_exact(&fixtures::complete(n)).unwrap();
            assert_eq!(res.vc, 1, "K_{n}");
            assert!(res.verify(&fixtures::complete(n)));
        }
        let s3 = fixtures::shattered(3);
        let res = vc_exact(&s3).unwrap();
        assert_eq!(res.vc, 3);
        assert!(res.verify(&s3));
        assert_eq!(vc_exact(&Graph::new(0)).unwrap().vc, 0);
        let single = vc_exact(&Graph::new(1)).unwrap();
        assert_eq!((single.vc, single.witnesses.len()), (0, 1));
    }

    #[test]
    fn approximations() {
        let s3 = fixtures::shattered(3);
        let res = vc_approx(&s3, 1.0).unwrap();
        assert_eq!(res.vc, 3);
        assert!(res.verify(&s3));
        assert!(vc_approx(&s3, 0.0).is_err());
        assert!(vc_approx(&s3, 1.5).is_err());
        let lin = vc_approx_linear(&fixtures::petersen()).unwrap();
        assert!(lin.verify(&fixtures::petersen()) && lin.vc >= 1);
    }

    #[test]
    fn reduction_sizes() {
        let k3 = fixtures::complete(3);
        let g = clique_reduction(&k3, 3).unwrap();
        // copies + isolated + pendants + edge gadgets + one apex
        assert_eq!(g.n(), 9 + 1 + 9 + 3 * 6 + 1);
        assert!(clique_reduction(&k3, 2).is_err());
        assert!(clique_reduction(&k3, 21).is_err());
    }

    #[test]
    fn reduction_tracks_triangles() {
        assert_eq!(vc_exact(&clique_reduction(&fixtures::complete(3), 3).unwrap()).unwrap().vc, 3);
        assert_eq!(vc_exact(&clique_reduction(&fixtures::complete(4), 3).unwrap()).unwrap().vc, 3);
        assert!(vc_exact(&clique_reduction(&fixtures::cycle(4), 3).unwrap()).unwrap().vc < 3);
    }

    #[test]
    fn compress_bits() {
        assert_eq!(compress(0b1010, 0b1110), 0b101);
        assert_eq!(compress(0, 0), 0);
    }
}
