//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use degpat::pattern::{Color, Pattern, Side};
use degpat::{fixtures, Graph, Vertex};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn gnp(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// `count` random graphs with `n` in `3..=max_n` and mixed densities.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            let p = rng.gen_range(0.15..0.85);
            gnp(n, p, &mut rng)
        })
        .collect()
}

pub fn structured_fixtures() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("P6".to_string(), fixtures::path(6)),
        ("C4".to_string(), fixtures::cycle(4)),
        ("C5".to_string(), fixtures::cycle(5)),
        ("C6".to_string(), fixtures::cycle(6)),
        ("K5".to_string(), fixtures::complete(5)),
        ("K33".to_string(), fixtures::complete_bipartite(3, 3)),
        ("K24".to_string(), fixtures::complete_bipartite(2, 4)),
        ("crown3".to_string(), fixtures::crown(3)),
        ("crown4".to_string(), fixtures::crown(4)),
        ("2K2".to_string(), fixtures::matching(2)),
        ("ladder3".to_string(), fixtures::ladder(3)),
        ("ladder4".to_string(), fixtures::ladder(4)),
        ("shattered2".to_string(), fixtures::shattered(2)),
        ("petersen".to_string(), fixtures::petersen()),
        ("empty6".to_string(), Graph::new(6)),
    ];
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn subsets_of_size(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

pub fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn embeds(g: &Graph, p: &Pattern, a: &[Vertex], b: &[Vertex]) -> bool {
    permutations(a).iter().any(|pa| {
        permutations(b).iter().any(|pb| {
            (0..pa.len()).all(|i| {
                (0..pb.len()).all(|j| match p.color(i, j) {
                    Color::Black => g.has_edge(pa[i], pb[j]),
                    Color::Red => !g.has_edge(pa[i], pb[j]),
                    Color::White => true,
                })
            })
        })
    })
}

/// Number of disjoint pairs `(A, B)` hosting the pattern with `X → A`, `Y → B`.
pub fn brute_count(g: &Graph, p: &Pattern) -> u64 {
    let all: Vec<Vertex> = g.vertices().collect();
    let mut total = 0;
    for a in subsets_of_size(&all, p.side_len(Side::X)) {
        let rest: Vec<Vertex> = all.iter().copied().filter(|v| !a.contains(v)).collect();
        for b in subsets_of_size(&rest, p.side_len(Side::Y)) {
            if embeds(g, p, &a, &b) {
                total += 1;
            }
        }
    }
    total
}

/// Largest shattered set size, by trying every subset in increasing size.
pub fn brute_vc(g: &Graph) -> usize {
    let all: Vec<Vertex> = g.vertices().collect();
    brute_vc_over(g, &all)
}

/// As [`brute_vc`], with members of shattered sets of size at least 3 drawn
/// from `pool` (a `k`-set member has `2^(k-1)` distinct witnesses).
pub fn brute_vc_over(g: &Graph, pool: &[Vertex]) -> usize {
    let all: Vec<Vertex> = g.vertices().collect();
    let mut best = 0;
    for k in 1..=all.len() {
        let source: Vec<Vertex> = if k >= 3 {
            pool.iter().copied().filter(|&v| g.degree(v) >= 1 << (k - 1)).collect()
        } else {
            all.clone()
        };
        let found = subsets_of_size(&source, k).iter().any(|s| shattered(g, s));
        if !found {
            break;
        }
        best = k;
    }
    best
}

pub fn shattered(g: &Graph, s: &[Vertex]) -> bool {
    let mut traces = std::collections::HashSet::new();
    for v in g.vertices() {
        let mask = s
            .iter()
            .enumerate()
            .filter(|(_, &x)| g.has_edge(v, x))
            .fold(0u64, |m, (i, _)| m | 1 << i);
        traces.insert(mask);
    }
    traces.len() == 1 << s.len()
}

/// Ladder index by depth-first extension: `(a, b)` may be appended to
/// `a_1..a_j`, `b_1..b_j` when `a` sees every earlier `b` and `b` sees no `a`.
pub fn brute_ladder(g: &Graph) -> usize {
    fn extend(g: &Graph, a: &mut Vec<Vertex>, b: &mut Vec<Vertex>, best: &mut usize) {
        *best = (*best).max(a.len());
        for x in g.vertices() {
            if a.contains(&x) || b.contains(&x) || !b.iter().all(|&y| g.has_edge(x, y)) {
                continue;
            }
            for y in g.vertices() {
                if y == x || a.contains(&y) || b.contains(&y) {
                    continue;
                }
                if g.has_edge(x, y) || a.iter().any(|&z| g.has_edge(z, y)) {
                    continue;
                }
                a.push(x);
                b.push(y);
                extend(g, a, b, best);
                a.pop();
                b.pop();
            }
        }
    }
    let mut best = 0;
    extend(g, &mut Vec::new(), &mut Vec::new(), &mut best);
    best
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.vertices().any(|w| g.has_edge(u, w) && g.has_edge(v, w)))
}

/// One representative of every isomorphism class of graphs on `n <= 6` vertices.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(Vertex, Vertex)> =
        (0..n as Vertex).flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v))).collect();
    let perms = permutations(&(0..n as Vertex).collect::<Vec<_>>());
    let index = |u: Vertex, v: Vertex| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let mapped: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u as usize], p[v as usize])).collect())
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = mapped
            .iter()
            .map(|m| m.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u32, |acc, (_, &j)| acc | 1 << j))
            .min()
            .unwrap();
        if seen.insert(canon) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| canon >> i & 1 == 1).map(|(_, &e)| e).collect();
            out.push(Graph::from_edges(n, &edges));
        }
    }
    out
}
