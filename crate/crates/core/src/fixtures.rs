//! Small named graphs used throughout the tests and examples.

use crate::graph::{Graph, Vertex};

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n as Vertex).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n as Vertex).map(|v| (v - 1, v)).collect();
    edges.push((n as Vertex - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{s,t}` with left side `0..s` and right side `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s as Vertex {
        for v in 0..t as Vertex {
            edges.push((u, s as Vertex + v));
        }
    }
    Graph::from_edges(s + t, &edges)
}

/// `K_{t,t}` minus a perfect matching: `i` and `t + j` adjacent iff `i != j`.
pub fn crown(t: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..t as Vertex {
        for j in 0..t as Vertex {
            if i != j {
                edges.push((i, t as Vertex + j));
            }
        }
    }
    Graph::from_edges(2 * t, &edges)
}

/// `k` disjoint edges `2i - 2i+1`.
pub fn matching(k: usize) -> Graph {
    let edges: Vec<_> = (0..k as Vertex).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(2 * k, &edges)
}

/// The half graph realising the ladder `L_t`: `a_i = i`, `b_j = t + j`, with
/// `a_i b_j` an edge iff `i > j`.
pub fn ladder(t: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..t as Vertex {
        for j in 0..i {
            edges.push((i, t as Vertex + j));
        }
    }
    Graph::from_edges(2 * t, &edges)
}

/// Shattered set `0..t` plus one witness `t + mask` for every subset `mask`.
pub fn shattered(t: usize) -> Graph {
    assert!(t <= 20);
    let mut edges = Vec::new();
    for mask in 0..1u32 << t {
        let w = t as Vertex + mask;
        for i in 0..t as u32 {
            if mask >> i & 1 == 1 {
                edges.push((i, w));
            }
        }
    }
    Graph::from_edges(t + (1 << t), &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges)
}
