//! Simple undirected graphs, edge-list ingestion and degeneracy orderings.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Simple undirected graph on the dense vertex ids `0..n`.
///
/// Neighbour lists are sorted ascending and symmetric; there are no loops and
/// no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    // Neighbours of `v` are `targets[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n < u32::MAX as usize, "vertex count must fit in 32 bits");
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            m: 0,
        }
    }

    /// Builds a graph from an edge list, silently dropping loops and
    /// duplicate edges. Panics on ids `>= n`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        assert!(n < u32::MAX as usize, "vertex count must fit in 32 bits");
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in edges {
            assert!((u as usize) < n && (v as usize) < n, "edge {u}-{v} out of range");
            if u != v {
                degree[u as usize] += 1;
                degree[v as usize] += 1;
            }
        }
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + degree[v];
        }
        let mut fill = start.clone();
        let mut raw = vec![0 as Vertex; start[n]];
        for &(u, v) in edges {
            if u != v {
                raw[fill[u as usize]] = v;
                fill[u as usize] += 1;
                raw[fill[v as usize]] = u;
                fill[v as usize] += 1;
            }
        }
        // Sort and dedup each list, compacting in place.
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut len = 0;
        for v in 0..n {
            raw[start[v]..start[v + 1]].sort_unstable();
            let mut last = None;
            for i in start[v]..start[v + 1] {
                let x = raw[i];
                if last != Some(x) {
                    raw[len] = x;
                    len += 1;
                    last = Some(x);
                }
            }
            offsets.push(len);
        }
        raw.truncate(len);
        raw.shrink_to_fit();
        Graph {
            offsets,
            m: len / 2,
            targets: raw,
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n() as Vertex
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Graph::from_edges(self.n(), &edges)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }
}

/// A parsed edge list together with its token table and clean-up counters.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `labels[id]` is the token that was mapped to dense id `id`.
    pub labels: Vec<String>,
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

impl LoadedGraph {
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels_of(&self, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v as usize].clone()).collect()
    }
}

/// Parses whitespace- or comma-separated edge lists. Lines starting with `#`
/// or `%` are comments, blank lines are skipped. Vertex ids are assigned in
/// order of first appearance.
pub fn load_edge_list(text: &str) -> Result<LoadedGraph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut self_loops = 0;

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected 2 vertex tokens, found {}", tokens.len()),
            });
        }
        let mut id_of = |token: &str| -> Result<Vertex> {
            if let Some(&id) = ids.get(token) {
                return Ok(id);
            }
            if labels.len() >= u32::MAX as usize - 1 {
                return Err(Error::Capacity {
                    requested: labels.len() + 1,
                    limit: u32::MAX as usize - 1,
                });
            }
            let id = labels.len() as Vertex;
            ids.insert(token.to_string(), id);
            labels.push(token.to_string());
            Ok(id)
        };
        let u = id_of(tokens[0])?;
        let v = id_of(tokens[1])?;
        if u == v {
            self_loops += 1;
        } else {
            edges.push((u.min(v), u.max(v)));
        }
    }

    let raw = edges.len();
    edges.sort_unstable();
    edges.dedup();
    let duplicate_edges = raw - edges.len();
    let graph = Graph::from_edges(labels.len(), &edges);
    Ok(LoadedGraph {
        graph,
        labels,
        duplicate_edges,
        self_loops,
    })
}

/// A graph with a fixed vertex order and rank-sorted left neighbourhoods.
#[derive(Debug, Clone)]
pub struct OrderedGraph {
    graph: Graph,
    order: Vec<Vertex>,
    rank: Vec<u32>,
    // Stored by rank: the left neighbourhood of the vertex at rank `r` is
    // `left[left_offsets[r]..left_offsets[r + 1]]`.
    left_offsets: Vec<usize>,
    left: Vec<Vertex>,
    left_ranks: Vec<u32>,
    degeneracy: usize,
}

impl OrderedGraph {
    /// Orders `graph` by `order`, where `order[i]` is the vertex at rank `i`.
    pub fn with_order(graph: Graph, order: Vec<Vertex>) -> Result<Self> {
        let n = graph.n();
        if order.len() != n {
            return Err(Error::InvalidArgument(format!(
                "order has {} entries for {} vertices",
                order.len(),
                n
            )));
        }
        let mut rank = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            graph.check_vertex(v)?;
            if rank[v as usize] != u32::MAX {
                return Err(Error::InvalidArgument(format!("vertex {v} repeated in order")));
            }
            rank[v as usize] = i as u32;
        }

        let mut left_offsets = Vec::with_capacity(n + 1);
        left_offsets.push(0);
        let mut left_ranks: Vec<u32> = Vec::with_capacity(graph.m());
        let mut degeneracy = 0;
        for &v in &order {
            let rv = rank[v as usize];
            let from = left_ranks.len();
            left_ranks.extend(graph.neighbors(v).iter().map(|&u| rank[u as usize]).filter(|&ru| ru < rv));
            left_ranks[from..].sort_unstable();
            degeneracy = degeneracy.max(left_ranks.len() - from);
            left_offsets.push(left_ranks.len());
        }
        let left = left_ranks.iter().map(|&r| order[r as usize]).collect();
        Ok(OrderedGraph {
            graph,
            order,
            rank,
            left_offsets,
            left,
            left_ranks,
            degeneracy,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Vertex at each rank.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn rank(&self, v: Vertex) -> u32 {
        self.rank[v as usize]
    }

    pub fn vertex_at(&self, rank: u32) -> Vertex {
        self.order[rank as usize]
    }

    /// Neighbours of `v` that come before it, sorted by rank.
    pub fn left_neighbors(&self, v: Vertex) -> &[Vertex] {
        let r = self.rank[v as usize] as usize;
        &self.left[self.left_offsets[r]..self.left_offsets[r + 1]]
    }

    /// Ranks of [`Self::left_neighbors`], ascending.
    pub fn left_ranks(&self, v: Vertex) -> &[u32] {
        self.left_ranks_at(self.rank[v as usize])
    }

    /// [`Self::left_ranks`] of the vertex at `rank`.
    pub fn left_ranks_at(&self, rank: u32) -> &[u32] {
        let r = rank as usize;
        &self.left_ranks[self.left_offsets[r]..self.left_offsets[r + 1]]
    }

    /// Maximum left degree of this ordering.
    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    /// Sorts vertices by rank and removes duplicates.
    pub fn sort_by_rank(&self, vs: &mut Vec<Vertex>) {
        vs.sort_unstable_by_key(|&v| self.rank[v as usize]);
        vs.dedup();
    }

    pub fn ranks_of(&self, vs: &[Vertex]) -> Vec<u32> {
        vs.iter().map(|&v| self.rank[v as usize]).collect()
    }

    /// `N⁻(C) ∪ C` sorted by rank.
    pub fn closed_left_neighborhood(&self, cover: &[Vertex]) -> Result<Vec<Vertex>> {
        let mut out = Vec::with_capacity(cover.len() * (self.degeneracy + 1));
        for &c in cover {
            self.graph.check_vertex(c)?;
            out.push(c);
            out.extend_from_slice(self.left_neighbors(c));
        }
        self.sort_by_rank(&mut out);
        Ok(out)
    }
}

/// Smallest-last ordering: repeatedly removes a vertex of minimum remaining
/// degree and places removed vertices right to left.
/// The maximum left degree of the result is the degeneracy of the graph.
pub fn degeneracy_order(graph: &Graph) -> OrderedGraph {
    // Bin-sorted core decomposition: `vert` holds the vertices sorted by
    // current degree, `bin[k]` the first position of degree `k`.
    let n = graph.n();
    // (position in `vert`, current degree) per vertex, kept together since
    // every neighbour visit reads both.
    let mut state: Vec<(u32, u32)> = graph.vertices().map(|v| (0, graph.degree(v) as u32)).collect();
    let max_degree = state.iter().map(|s| s.1).max().unwrap_or(0) as usize;
    let mut bin = vec![0u32; max_degree + 2];
    for s in &state {
        bin[s.1 as usize + 1] += 1;
    }
    for k in 1..bin.len() {
        bin[k] += bin[k - 1];
    }
    let mut vert = vec![0 as Vertex; n];
    {
        let mut next = bin.clone();
        for (v, s) in state.iter_mut().enumerate() {
            let d = s.1 as usize;
            s.0 = next[d];
            vert[next[d] as usize] = v as Vertex;
            next[d] += 1;
        }
    }

    // Neighbours still waiting at removal time end up to the left.
    let mut removal_offsets = Vec::with_capacity(n + 1);
    removal_offsets.push(0);
    let mut removal_left: Vec<Vertex> = Vec::with_capacity(graph.m());
    for i in 0..n {
        let v = vert[i];
        let dv = state[v as usize].1;
        for &u in graph.neighbors(v) {
            let (pu, du) = state[u as usize];
            if pu as usize <= i {
                continue;
            }
            removal_left.push(u);
            if du > dv {
                // Swap `u` to the front of its bin, then shrink that bin.
                let first = bin[du as usize];
                let w = vert[first as usize];
                vert[pu as usize] = w;
                state[w as usize].0 = pu;
                vert[first as usize] = u;
                state[u as usize] = (first, du - 1);
                bin[du as usize] = first + 1;
            }
        }
        removal_offsets.push(removal_left.len());
    }

    // Removed first means rightmost.
    let last = n.saturating_sub(1) as u32;
    let rank: Vec<u32> = state.iter().map(|s| last - s.0).collect();
    vert.reverse();
    let mut left_offsets = Vec::with_capacity(n + 1);
    left_offsets.push(0);
    let mut pairs: Vec<(u32, Vertex)> = Vec::with_capacity(removal_left.len());
    let mut degeneracy = 0;
    for i in (0..n).rev() {
        let from = pairs.len();
        let block = &removal_left[removal_offsets[i]..removal_offsets[i + 1]];
        pairs.extend(block.iter().map(|&u| (rank[u as usize], u)));
        pairs[from..].sort_unstable();
        degeneracy = degeneracy.max(block.len());
        left_offsets.push(pairs.len());
    }
    OrderedGraph {
        graph: graph.clone(),
        order: vert,
        rank,
        left_offsets,
        left: pairs.iter().map(|p| p.1).collect(),
        left_ranks: pairs.iter().map(|p| p.0).collect(),
        degeneracy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn path_from_text() {
        let g = load_edge_list("1 2\n2 3").unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (3, 2));
        assert_eq!(g.labels, ["1", "2", "3"]);
    }

    #[test]
    fn duplicates_and_loops_are_dropped() {
        let g = load_edge_list("a b\nb a\na a").unwrap();
        assert_eq!(g.graph.m(), 1);
        assert_eq!(g.duplicate_edges, 1);
        assert_eq!(g.self_loops, 1);
    }

    #[test]
    fn comments_commas_and_blank_lines() {
        let g = load_edge_list("# header\n% other\n\n0,1\n1 , 2\n").unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (3, 2));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match load_edge_list("1 2\n3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(load_edge_list("1 2 3").is_err());
    }

    #[test]
    fn petersen_counts() {
        let g = fixtures::petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
    }

    #[test]
    fn degeneracy_of_small_families() {
        assert_eq!(degeneracy_order(&fixtures::complete(5)).degeneracy(), 4);
        assert_eq!(degeneracy_order(&fixtures::cycle(6)).degeneracy(), 2);
        assert_eq!(degeneracy_order(&fixtures::petersen()).degeneracy(), 3);
        assert_eq!(degeneracy_order(&Graph::new(0)).degeneracy(), 0);
        assert_eq!(degeneracy_order(&Graph::new(3)).degeneracy(), 0);
    }

    #[test]
    fn ties_break_towards_smallest_id() {
        // Edgeless: vertex 0 is removed first and so placed last.
        let og = degeneracy_order(&Graph::new(3));
        assert_eq!(og.order(), &[2, 1, 0]);
    }

    #[test]
    fn closed_left_neighborhood_on_path() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let og = OrderedGraph::with_order(g, vec![0, 1, 2]).unwrap();
        assert_eq!(og.closed_left_neighborhood(&[]).unwrap(), Vec::<Vertex>::new());
        assert_eq!(og.closed_left_neighborhood(&[2]).unwrap(), vec![1, 2]);
        assert!(matches!(
            og.closed_left_neighborhood(&[7]),
            Err(Error::UnknownVertex(7))
        ));
    }

    #[test]
    fn with_order_rejects_bad_permutations() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        assert!(OrderedGraph::with_order(g.clone(), vec![0]).is_err());
        assert!(OrderedGraph::with_order(g, vec![0, 0]).is_err());
    }
}
