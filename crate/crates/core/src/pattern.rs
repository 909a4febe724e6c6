//! Bipartite patterns: black pairs must be edges, red pairs must be non-edges
//! and every other pair (including all pairs inside a side) is unconstrained.
//!
//! Pattern vertices are numbered `0..|X|` for side X followed by
//! `|X|..|X|+|Y|` for side Y.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern [`analyze`] enumerates orderings for by default.
pub const DEFAULT_ANALYSIS_LIMIT: usize = 10;

const MAX_ORDERED_VERTICES: usize = 128;
const MAX_SIGNATURE_SIDE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    Red,
    White,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    side_x: Vec<String>,
    side_y: Vec<String>,
    // Pairs are (x index, y index).
    black: BTreeSet<(usize, usize)>,
    red: BTreeSet<(usize, usize)>,
}

impl Pattern {
    pub fn new(
        side_x: Vec<String>,
        side_y: Vec<String>,
        black: BTreeSet<(usize, usize)>,
        red: BTreeSet<(usize, usize)>,
    ) -> Result<Self> {
        if side_x.is_empty() || side_y.is_empty() {
            return Err(Error::InvalidArgument("both pattern sides must be nonempty".into()));
        }
        let mut seen = BTreeSet::new();
        for label in side_x.iter().chain(&side_y) {
            if !seen.insert(label) {
                return Err(Error::InvalidArgument(format!("duplicate pattern label {label}")));
            }
        }
        let in_range = |&(i, j): &(usize, usize)| i < side_x.len() && j < side_y.len();
        if !black.iter().chain(&red).all(in_range) {
            return Err(Error::InvalidArgument("pattern pair out of range".into()));
        }
        if let Some(pair) = black.intersection(&red).next() {
            return Err(Error::InvalidArgument(format!(
                "pair {}-{} is both black and red",
                side_x[pair.0], side_y[pair.1]
            )));
        }
        Ok(Pattern {
            side_x,
            side_y,
            black,
            red,
        })
    }

    fn from_fn(
        side_x: Vec<String>,
        side_y: Vec<String>,
        color: impl Fn(usize, usize) -> Color,
    ) -> Result<Self> {
        let mut black = BTreeSet::new();
        let mut red = BTreeSet::new();
        for i in 0..side_x.len() {
            for j in 0..side_y.len() {
                match color(i, j) {
                    Color::Black => {
                        black.insert((i, j));
                    }
                    Color::Red => {
                        red.insert((i, j));
                    }
                    Color::White => {}
                }
            }
        }
        Pattern::new(side_x, side_y, black, red)
    }

    pub fn side(&self, side: Side) -> &[String] {
        match side {
            Side::X => &self.side_x,
            Side::Y => &self.side_y,
        }
    }

    pub fn side_len(&self, side: Side) -> usize {
        self.side(side).len()
    }

    pub fn vertex_count(&self) -> usize {
        self.side_x.len() + self.side_y.len()
    }

    pub fn black(&self) -> &BTreeSet<(usize, usize)> {
        &self.black
    }

    pub fn red(&self) -> &BTreeSet<(usize, usize)> {
        &self.red
    }

    /// Colour of the cross pair `x_i y_j`.
    pub fn color(&self, i: usize, j: usize) -> Color {
        if self.black.contains(&(i, j)) {
            Color::Black
        } else if self.red.contains(&(i, j)) {
            Color::Red
        } else {
            Color::White
        }
    }

    /// Colour between index `a` on side `side` and index `b` on the other side.
    pub fn color_between(&self, side: Side, a: usize, b: usize) -> Color {
        match side {
            Side::X => self.color(a, b),
            Side::Y => self.color(b, a),
        }
    }

    pub fn has_white_cross_pairs(&self) -> bool {
        self.black.len() + self.red.len() < self.side_x.len() * self.side_y.len()
    }

    pub fn label(&self, v: usize) -> &str {
        if v < self.side_x.len() {
            &self.side_x[v]
        } else {
            &self.side_y[v - self.side_x.len()]
        }
    }

    fn side_of(&self, v: usize) -> (Side, usize) {
        if v < self.side_x.len() {
            (Side::X, v)
        } else {
            (Side::Y, v - self.side_x.len())
        }
    }

    /// Black adjacency between pattern vertices.
    pub fn is_black(&self, u: usize, v: usize) -> bool {
        match (self.side_of(u), self.side_of(v)) {
            ((Side::X, i), (Side::Y, j)) | ((Side::Y, j), (Side::X, i)) => self.black.contains(&(i, j)),
            _ => false,
        }
    }

    /// The black edges as a graph: X on `0..|X|`, Y after it.
    pub fn realize(&self) -> Graph {
        let nx = self.side_x.len() as u32;
        let edges: Vec<_> = self.black.iter().map(|&(i, j)| (i as u32, nx + j as u32)).collect();
        Graph::from_edges(self.vertex_count(), &edges)
    }

    pub fn biclique(s: usize, t: usize) -> Result<Self> {
        check_size(s)?;
        check_size(t)?;
        Pattern::from_fn(labels("x", s), labels("y", t), |_, _| Color::Black)
    }

    /// Complete bipartite pattern with the matched pairs `a_i b_i` red.
    pub fn comatching(t: usize) -> Result<Self> {
        check_size(t)?;
        Pattern::from_fn(labels("a", t), labels("b", t), |i, j| {
            if i == j {
                Color::Red
            } else {
                Color::Black
            }
        })
    }

    /// `a_i b_j` black if `i > j`, red otherwise.
    pub fn ladder(t: usize) -> Result<Self> {
        check_size(t)?;
        Pattern::from_fn(labels("a", t), labels("b", t), |i, j| {
            if i > j {
                Color::Black
            } else {
                Color::Red
            }
        })
    }

    /// Ladder black pairs; only `a_i b_i` red.
    pub fn semiladder(t: usize) -> Result<Self> {
        check_size(t)?;
        Pattern::from_fn(labels("a", t), labels("b", t), |i, j| {
            if i > j {
                Color::Black
            } else if i == j {
                Color::Red
            } else {
                Color::White
            }
        })
    }

    /// Shattered set `s_1..s_t` (side X) with one witness per subset (side
    /// Y): `w_I s_i` is black when `i ∈ I` and red otherwise.
    pub fn shattered(t: usize) -> Result<Self> {
        check_size(t)?;
        if t > 20 {
            return Err(Error::InvalidArgument(format!("shattered pattern size {t} exceeds 20")));
        }
        let witnesses = (0..1usize << t)
            .map(|mask| {
                let members: Vec<String> =
                    (0..t).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                format!("w{{{}}}", members.join(","))
            })
            .collect();
        Pattern::from_fn(labels("s", t), witnesses, |i, mask| {
            if mask >> i & 1 == 1 {
                Color::Black
            } else {
                Color::Red
            }
        })
    }

    /// Parses `biclique:s,t`, `comatching:t`, `ladder:t`, `semiladder:t` or
    /// `shattered:t`, with an optional `builtin:` prefix.
    pub fn from_builtin(spec: &str) -> Result<Self> {
        let spec = spec.strip_prefix("builtin:").unwrap_or(spec);
        let (name, args) = spec
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("malformed pattern spec {spec:?}")))?;
        let args: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidArgument(format!("malformed pattern arguments in {spec:?}")))?;
        match (name, args.as_slice()) {
            ("biclique", &[s, t]) => Pattern::biclique(s, t),
            ("comatching", &[t]) => Pattern::comatching(t),
            ("ladder", &[t]) => Pattern::ladder(t),
            ("semiladder", &[t]) => Pattern::semiladder(t),
            ("shattered", &[t]) => Pattern::shattered(t),
            _ => Err(Error::InvalidArgument(format!("unknown pattern spec {spec:?}"))),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PatternFile = serde_json::from_str(text)?;
        file.into_pattern()
    }

    pub fn to_json(&self) -> String {
        let pairs = |set: &BTreeSet<(usize, usize)>| {
            set.iter()
                .map(|&(i, j)| [self.side_x[i].clone(), self.side_y[j].clone()])
                .collect()
        };
        let file = PatternFile {
            side_x: self.side_x.clone(),
            side_y: self.side_y.clone(),
            black: pairs(&self.black),
            red: pairs(&self.red),
        };
        serde_json::to_string_pretty(&file).expect("pattern serializes")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pattern(|X|={}, |Y|={}, black={}, red={})",
            self.side_x.len(),
            self.side_y.len(),
            self.black.len(),
            self.red.len()
        )
    }
}

fn check_size(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::InvalidArgument("pattern sizes must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// On-disk pattern description; unlisted cross pairs are white.
#[derive(Debug, Serialize, Deserialize)]
pub struct PatternFile {
    #[serde(rename = "sideX")]
    pub side_x: Vec<String>,
    #[serde(rename = "sideY")]
    pub side_y: Vec<String>,
    #[serde(default)]
    pub black: Vec<[String; 2]>,
    #[serde(default)]
    pub red: Vec<[String; 2]>,
}

impl PatternFile {
    pub fn into_pattern(self) -> Result<Pattern> {
        let mut index: HashMap<&str, (Side, usize)> = HashMap::new();
        for (i, l) in self.side_x.iter().enumerate() {
            index.insert(l, (Side::X, i));
        }
        for (j, l) in self.side_y.iter().enumerate() {
            if index.insert(l, (Side::Y, j)).is_some() {
                return Err(Error::InvalidArgument(format!("label {l} on both sides")));
            }
        }
        let resolve = |pairs: &[[String; 2]]| -> Result<BTreeSet<(usize, usize)>> {
            pairs
                .iter()
                .map(|[a, b]| {
                    let lookup = |l: &str| {
                        index
                            .get(l)
                            .copied()
                            .ok_or_else(|| Error::InvalidArgument(format!("unknown label {l}")))
                    };
                    match (lookup(a)?, lookup(b)?) {
                        ((Side::X, i), (Side::Y, j)) | ((Side::Y, j), (Side::X, i)) => Ok((i, j)),
                        _ => Err(Error::InvalidArgument(format!(
                            "pair {a}-{b} lies inside one side"
                        ))),
                    }
                })
                .collect()
        };
        let black = resolve(&self.black)?;
        let red = resolve(&self.red)?;
        Pattern::new(self.side_x.clone(), self.side_y.clone(), black, red)
    }
}

/// A pattern together with a total order of all its vertices.
#[derive(Debug, Clone)]
pub struct OrderedPattern<'p> {
    pattern: &'p Pattern,
    order: Vec<usize>,
}

impl<'p> OrderedPattern<'p> {
    pub fn new(pattern: &'p Pattern, order: Vec<usize>) -> Result<Self> {
        let n = pattern.vertex_count();
        if n > MAX_ORDERED_VERTICES {
            return Err(Error::PatternTooLarge {
                vertices: n,
                limit: MAX_ORDERED_VERTICES,
            });
        }
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument("order is not a permutation of the pattern".into()));
        }
        Ok(OrderedPattern { pattern, order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Minimum cover sizes `(cover of X, cover of Y)`.
    pub fn cover_sizes(&self) -> (usize, usize) {
        let closed = closed_left_masks(self.pattern, &self.order);
        let nx = self.pattern.side_x.len();
        let x_mask = low_bits(nx);
        let y_mask = low_bits(self.pattern.vertex_count()) & !x_mask;
        (
            min_cover(&closed, x_mask, nx),
            min_cover(&closed, y_mask, self.pattern.side_y.len()),
        )
    }

    /// Fewest vertices whose closed black left neighbourhoods contain a whole side.
    pub fn left_cover_number(&self) -> usize {
        let (cx, cy) = self.cover_sizes();
        cx.min(cy)
    }
}

pub(crate) fn low_bits(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn closed_left_masks(p: &Pattern, order: &[usize]) -> Vec<u128> {
    let n = p.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| pos[u] < pos[v] && p.is_black(u, v))
                .fold(1u128 << v, |m, u| m | 1 << u)
        })
        .collect()
}

/// Smallest number of closed masks whose union contains `target`; at most
/// `bound`, which is always achievable by taking the target itself.
pub(crate) fn min_cover(closed: &[u128], target: u128, bound: usize) -> usize {
    let useful: Vec<u128> = closed
        .iter()
        .map(|&m| m & target)
        .filter(|&m| m != 0)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for size in 1..bound {
        if covers_with(&useful, target, size, 0, 0) {
            return size;
        }
    }
    bound
}

fn covers_with(sets: &[u128], target: u128, size: usize, start: usize, acc: u128) -> bool {
    if acc == target {
        return true;
    }
    if size == 0 {
        return false;
    }
    (start..sets.len()).any(|i| covers_with(sets, target, size - 1, i + 1, acc | sets[i]))
}

/// Multiset of index sets, stored as ascending bitmasks over the ordered side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature(Vec<u32>);

impl Signature {
    pub fn from_masks(mut masks: Vec<u32>) -> Self {
        masks.sort_unstable();
        Signature(masks)
    }

    pub fn masks(&self) -> &[u32] {
        &self.0
    }

    /// Distinct index sets with their multiplicities.
    pub fn grouped(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &m in &self.0 {
            match out.last_mut() {
                Some((last, k)) if *last == m => *k += 1,
                _ => out.push((m, 1)),
            }
        }
        out
    }
}

fn check_side_order(p: &Pattern, side: Side, z_order: &[usize]) -> Result<()> {
    let len = p.side_len(side);
    let offset = match side {
        Side::X => 0,
        Side::Y => p.side_x.len(),
    };
    let mut sorted = z_order.to_vec();
    sorted.sort_unstable();
    if sorted != (offset..offset + len).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(
            "ordering must be a permutation of exactly one side".into(),
        ));
    }
    if len > MAX_SIGNATURE_SIDE {
        return Err(Error::Capacity {
            requested: len,
            limit: MAX_SIGNATURE_SIDE,
        });
    }
    Ok(())
}

/// Signature of the ordering `z_order` (pattern vertex ids of one side): the
/// multiset of index sets of the opposite side's black neighbourhoods.
pub fn signature_of(p: &Pattern, z_order: &[usize]) -> Result<Signature> {
    let side = if z_order.first().is_some_and(|&v| v < p.side_x.len()) {
        Side::X
    } else {
        Side::Y
    };
    check_side_order(p, side, z_order)?;
    let offset = if side == Side::X { 0 } else { p.side_x.len() };
    let positions: Vec<usize> = z_order.iter().map(|&v| v - offset).collect();
    Ok(side_signature(p, side, &positions))
}

/// `positions[k]` is the side-local index placed at position `k`.
fn side_signature(p: &Pattern, side: Side, positions: &[usize]) -> Signature {
    let masks = (0..p.side_len(side.other()))
        .map(|u| {
            positions
                .iter()
                .enumerate()
                .filter(|&(_, &z)| p.color_between(side, z, u) == Color::Black)
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .collect();
    Signature::from_masks(masks)
}

/// All trace multisets an occurrence can produce on side `side`, taken over
/// every ordering of that side and every way of resolving white cross pairs.
/// Without white pairs this is exactly the set of signatures of the side.
pub fn completed_signatures(p: &Pattern, side: Side) -> Result<BTreeSet<Signature>> {
    let len = p.side_len(side);
    if len > MAX_SIGNATURE_SIDE {
        return Err(Error::Capacity {
            requested: len,
            limit: MAX_SIGNATURE_SIDE,
        });
    }
    let mut out = BTreeSet::new();
    let mut positions: Vec<usize> = (0..len).collect();
    loop {
        // Per opposite vertex: black mask and white mask over positions.
        let per_vertex: Vec<(u32, u32)> = (0..p.side_len(side.other()))
            .map(|u| {
                positions.iter().enumerate().fold((0, 0), |(b, w), (k, &z)| {
                    match p.color_between(side, z, u) {
                        Color::Black => (b | 1 << k, w),
                        Color::White => (b, w | 1 << k),
                        Color::Red => (b, w),
                    }
                })
            })
            .collect();
        let mut current = Vec::with_capacity(per_vertex.len());
        expand_completions(&per_vertex, &mut current, &mut out);
        if !next_permutation(&mut positions) {
            break;
        }
    }
    Ok(out)
}

fn expand_completions(per_vertex: &[(u32, u32)], current: &mut Vec<u32>, out: &mut BTreeSet<Signature>) {
    let Some((&(black, white), rest)) = per_vertex.split_first() else {
        out.insert(Signature::from_masks(current.clone()));
        return;
    };
    let mut sub = white;
    loop {
        current.push(black | sub);
        expand_completions(rest, current, out);
        current.pop();
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & white;
    }
}

/// Rearranges into the next lexicographic permutation; false after the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternAnalysis {
    /// Left-covering number: the worst ordering's minimum cover.
    pub lc: usize,
    /// Signatures of X from orderings whose minimum cover covers X.
    pub sigs_x: BTreeSet<Signature>,
    pub sigs_y: BTreeSet<Signature>,
    pub hoa_x: usize,
    pub hoa_y: usize,
    pub hoa: usize,
}

/// Analyses `p` by enumerating all `|H|!` orderings; refuses patterns with
/// more than [`DEFAULT_ANALYSIS_LIMIT`] vertices.
pub fn analyze(p: &Pattern) -> Result<PatternAnalysis> {
    analyze_with_limit(p, DEFAULT_ANALYSIS_LIMIT)
}

pub fn analyze_with_limit(p: &Pattern, max_vertices: usize) -> Result<PatternAnalysis> {
    let n = p.vertex_count();
    if n > max_vertices {
        return Err(Error::PatternTooLarge {
            vertices: n,
            limit: max_vertices,
        });
    }
    let nx = p.side_x.len();
    let ny = p.side_y.len();
    let x_mask = low_bits(nx);
    let y_mask = low_bits(n) & !x_mask;

    let mut lc = 0;
    let mut sigs_x = BTreeSet::new();
    let mut sigs_y = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let closed = closed_left_masks(p, &order);
        let cx = min_cover(&closed, x_mask, nx);
        let cy = min_cover(&closed, y_mask, ny);
        let best = cx.min(cy);
        lc = lc.max(best);
        if cx == best {
            let positions: Vec<usize> = order.iter().copied().filter(|&v| v < nx).collect();
            sigs_x.insert(side_signature(p, Side::X, &positions));
        }
        if cy == best {
            let positions: Vec<usize> =
                order.iter().filter(|&&v| v >= nx).map(|&v| v - nx).collect();
            sigs_y.insert(side_signature(p, Side::Y, &positions));
        }
        if !next_permutation(&mut order) {
            break;
        }
    }

    let hoa_x = half_ordering_asymmetry(p, Side::X);
    let hoa_y = half_ordering_asymmetry(p, Side::Y);
    Ok(PatternAnalysis {
        lc,
        sigs_x,
        sigs_y,
        hoa_x,
        hoa_y,
        hoa: hoa_x.max(hoa_y),
    })
}

/// Number of distinct signatures over all orderings of one side.
pub fn half_ordering_asymmetry(p: &Pattern, side: Side) -> usize {
    let mut positions: Vec<usize> = (0..p.side_len(side)).collect();
    let mut seen = BTreeSet::new();
    loop {
        seen.insert(side_signature(p, side, &positions));
        if !next_permutation(&mut positions) {
            break;
        }
    }
    seen.len()
}
