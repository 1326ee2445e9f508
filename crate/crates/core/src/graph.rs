//! Regular graphs: construction helpers and exhaustive labeled enumeration.

use std::fmt;

use crate::error::{arg_err, Error, Result};

/// An undirected edge, always stored with `u < v`.
pub type Edge = (usize, usize);

/// Largest order accepted by the labeled enumerator regardless of configuration.
pub const ENUMERATION_HARD_LIMIT: usize = 12;
/// Default cap on the order of exhaustively enumerated graphs.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// A simple graph on `0..n` in which every vertex has the same degree.
///
/// Edges are kept sorted lexicographically with `u < v`, so two graphs with
/// the same edge set compare equal and order by their sorted edge lists.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegularGraph {
    n: usize,
    d: usize,
    edges: Vec<Edge>,
}

impl RegularGraph {
    /// Builds a graph from an arbitrary edge list and checks that it is simple and regular.
    ///
    /// Degree 0 and 1 graphs are accepted here because they show up as
    /// building blocks (a single circulant offset class, complements of
    /// complete graphs); the `(n, d)` range checks live in [`feasible`].
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n < 3 {
            return arg_err(format!("order must be at least 3, got {n}"));
        }
        let mut norm: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return arg_err(format!("edge ({a}, {b}) has an endpoint outside 0..{n}"));
            }
            if a == b {
                return arg_err(format!("self-loop at vertex {a}"));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return arg_err(format!("duplicate edge ({}, {})", w[0].0, w[0].1));
        }
        let mut deg = vec![0usize; n];
        for &(u, v) in &norm {
            deg[u] += 1;
            deg[v] += 1;
        }
        let d = deg[0];
        if let Some(v) = deg.iter().position(|&x| x != d) {
            return arg_err(format!(
                "graph is not regular: vertex 0 has degree {d}, vertex {v} has degree {}",
                deg[v]
            ));
        }
        Ok(RegularGraph { n, d, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn complement(&self) -> RegularGraph {
        let mut edges = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.edges.len());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        RegularGraph {
            n: self.n,
            d: self.n - 1 - self.d,
            edges,
        }
    }

    /// Connected components, each as a sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                for &w in &adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Sorted cycle lengths of a 2-regular graph; `None` for other degrees.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        if self.d != 2 {
            return None;
        }
        let mut lens: Vec<usize> = self.components().iter().map(Vec::len).collect();
        lens.sort_unstable();
        Some(lens)
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::with_capacity(self.d); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

impl fmt::Display for RegularGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({}, {}) {{", self.n, self.d)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("}")
    }
}

fn check_range(n: usize, d: usize) -> Result<()> {
    if n < 3 {
        return arg_err(format!("n must be at least 3, got {n}"));
    }
    if d < 2 || d > n - 1 {
        return arg_err(format!("d must satisfy 2 <= d <= n-1 = {}, got {d}", n - 1));
    }
    Ok(())
}

/// Whether a `d`-regular graph of order `n` exists: `nd` must be even.
pub fn feasible(n: usize, d: usize) -> Result<bool> {
    check_range(n, d)?;
    Ok((n * d).is_multiple_of(2))
}

pub(crate) fn require_feasible(n: usize, d: usize) -> Result<()> {
    if !feasible(n, d)? {
        return arg_err(format!(
            "no {d}-regular graph of order {n} exists (n and d both odd)"
        ));
    }
    Ok(())
}

pub fn make_cycle(n: usize) -> Result<RegularGraph> {
    if n < 3 {
        return arg_err(format!("a cycle needs at least 3 vertices, got {n}"));
    }
    RegularGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<RegularGraph> {
    if n < 3 {
        return arg_err(format!("complete graph needs at least 3 vertices, got {n}"));
    }
    RegularGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Circulant graph: vertex `i` is joined to `i ± l` for every offset `l`.
///
/// In a convex placement with cyclic order `0..n` these are exactly the
/// diagonals of cyclic length `l`. Offset `n/2` contributes one edge per vertex.
pub fn make_circulant(n: usize, offsets: &[usize]) -> Result<RegularGraph> {
    if n < 3 {
        return arg_err(format!("circulant needs at least 3 vertices, got {n}"));
    }
    if offsets.is_empty() {
        return arg_err("offset set is empty");
    }
    let mut sorted = offsets.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return arg_err("offsets must be distinct");
    }
    if let Some(&bad) = sorted.iter().find(|&&l| l == 0 || l > n / 2) {
        return arg_err(format!("offset {bad} outside 1..={}", n / 2));
    }
    let mut edges = Vec::new();
    for &l in &sorted {
        for i in 0..n {
            let j = (i + l) % n;
            if 2 * l == n && j < i {
                continue;
            }
            edges.push((i, j));
        }
    }
    RegularGraph::from_edges(n, edges)
}

/// Cyclic length of the chord `{u, v}` on an `n`-gon labelled in cyclic order.
pub fn cyclic_length(n: usize, u: usize, v: usize) -> usize {
    let diff = u.abs_diff(v);
    diff.min(n - diff)
}

/// Index of the pair `u < v` in the lexicographic list of all pairs of `0..n`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Erdős–Gallai test for a degree sequence on fresh vertices.
fn is_graphical(degrees: &mut [u8]) -> bool {
    let total: usize = degrees.iter().map(|&x| x as usize).sum();
    if total % 2 == 1 {
        return false;
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let len = degrees.len();
    let mut lhs = 0usize;
    for k in 1..=len {
        lhs += degrees[k - 1] as usize;
        let rhs = k * (k - 1)
            + degrees[k..]
                .iter()
                .map(|&x| (x as usize).min(k))
                .sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Callbacks invoked by [`Walker`] as edges are pushed and popped.
pub(crate) trait WalkHooks {
    fn push(&mut self, u: usize, v: usize);
    fn pop(&mut self, u: usize, v: usize);
    /// Return `true` to abandon every completion of the current partial edge set.
    fn prune(&mut self, _remaining: &[u8]) -> bool {
        false
    }
}

pub(crate) struct NoHooks;

impl WalkHooks for NoHooks {
    fn push(&mut self, _: usize, _: usize) {}
    fn pop(&mut self, _: usize, _: usize) {}
}

/// Depth-first walk over labeled `d`-regular graphs in lexicographic edge-list order.
///
/// The lowest vertex with remaining degree picks its higher neighbours as a
/// combination in lexicographic order. Whenever a vertex is saturated the
/// residual degree sequence of the higher vertices is checked with
/// Erdős–Gallai, so every surviving branch has at least one completion.
pub(crate) struct Walker<H> {
    n: usize,
    rem: Vec<u8>,
    stack: Vec<Edge>,
    floor: usize,
    started: bool,
    finished: bool,
    pub(crate) hooks: H,
}

impl<H: WalkHooks> Walker<H> {
    /// A walker restricted to graphs whose sorted edge list starts with `prefix`.
    pub(crate) fn new(n: usize, d: usize, prefix: &[Edge], hooks: H) -> Self {
        let mut w = Walker {
            n,
            rem: vec![d as u8; n],
            stack: Vec::with_capacity(n * d / 2),
            floor: 0,
            started: false,
            finished: false,
            hooks,
        };
        if !w.push_all(prefix) {
            w.finished = true;
        }
        w.floor = w.stack.len();
        w
    }

    /// A walker positioned on an already visited leaf; the next call to
    /// [`Walker::next_leaf`] continues after it.
    pub(crate) fn resume(n: usize, d: usize, prefix: &[Edge], position: &[Edge], hooks: H) -> Self {
        let mut w = Walker::new(n, d, prefix, hooks);
        if w.finished {
            return w;
        }
        if position.len() != n * d / 2 || !position.starts_with(prefix) {
            w.finished = true;
            return w;
        }
        if !w.push_all(&position[prefix.len()..]) {
            w.finished = true;
        }
        w.started = true;
        w
    }

    fn push_all(&mut self, edges: &[Edge]) -> bool {
        for &(u, v) in edges {
            if u >= v || v >= self.n || self.rem[u] == 0 || self.rem[v] == 0 {
                return false;
            }
            if let Some(&(pu, pv)) = self.stack.last() {
                if (pu, pv) >= (u, v) {
                    return false;
                }
            }
            self.push(u, v);
        }
        true
    }

    pub(crate) fn edges(&self) -> &[Edge] {
        &self.stack
    }

    fn push(&mut self, u: usize, v: usize) {
        self.rem[u] -= 1;
        self.rem[v] -= 1;
        self.stack.push((u, v));
        self.hooks.push(u, v);
    }

    fn pop(&mut self) -> Edge {
        let (u, v) = self.stack.pop().expect("pop on empty walk stack");
        self.rem[u] += 1;
        self.rem[v] += 1;
        self.hooks.pop(u, v);
        (u, v)
    }

    /// Smallest admissible neighbour `w >= start` for vertex `v`.
    fn candidate(&self, v: usize, start: usize) -> Option<usize> {
        let need = self.rem[v] as usize;
        let w = (start..self.n).find(|&c| self.rem[c] > 0)?;
        let avail = (w..self.n).filter(|&c| self.rem[c] > 0).count();
        (avail >= need).then_some(w)
    }

    fn state_ok(&mut self) -> bool {
        let saturated_from = match self.stack.last() {
            None => Some(0),
            Some(&(u, _)) if self.rem[u] == 0 => Some(u + 1),
            Some(_) => None,
        };
        if let Some(lo) = saturated_from {
            let mut residual: Vec<u8> = self.rem[lo..].to_vec();
            if !is_graphical(&mut residual) {
                return false;
            }
        }
        !self.hooks.prune(&self.rem)
    }

    /// Greedily completes the current partial graph with minimal choices.
    fn descend(&mut self) -> bool {
        loop {
            let from = self.stack.last().map_or(0, |&(u, _)| u);
            let Some(v) = (from..self.n).find(|&x| self.rem[x] > 0) else {
                return true;
            };
            let start = match self.stack.last() {
                Some(&(u, w)) if u == v => w + 1,
                _ => v + 1,
            };
            let Some(w) = self.candidate(v, start) else {
                return false;
            };
            self.push(v, w);
            if !self.state_ok() {
                return false;
            }
        }
    }

    /// Replaces the top edge by its next sibling, popping as far as needed.
    fn backtrack(&mut self) -> bool {
        while self.stack.len() > self.floor {
            let (v, w) = self.pop();
            if let Some(next) = self.candidate(v, w + 1) {
                self.push(v, next);
                return true;
            }
        }
        false
    }

    /// Advances to the next complete graph; `false` once the walk is exhausted.
    pub(crate) fn next_leaf(&mut self) -> bool {
        if self.finished {
            return false;
        }
        let mut ok = if self.started {
            false
        } else {
            self.started = true;
            self.state_ok() && self.descend()
        };
        loop {
            if ok {
                return true;
            }
            if !self.backtrack() {
                self.finished = true;
                return false;
            }
            ok = self.state_ok() && self.descend();
        }
    }
}

/// Options for [`enumerate_labeled_regular_with`].
#[derive(Clone, Copy, Debug)]
pub struct EnumerationConfig {
    pub cap: usize,
    pub connected_only: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            connected_only: false,
        }
    }
}

/// Stream of labeled regular graphs in lexicographic edge-list order.
pub struct LabeledRegularGraphs {
    n: usize,
    d: usize,
    walker: Option<Walker<NoHooks>>,
    connected_only: bool,
}

impl Iterator for LabeledRegularGraphs {
    type Item = RegularGraph;

    fn next(&mut self) -> Option<RegularGraph> {
        let walker = self.walker.as_mut()?;
        while walker.next_leaf() {
            let g = RegularGraph {
                n: self.n,
                d: self.d,
                edges: walker.edges().to_vec(),
            };
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        self.walker = None;
        None
    }
}

pub(crate) fn check_enumeration_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(ENUMERATION_HARD_LIMIT);
    if n > cap {
        return Err(Error::Resource(format!(
            "order {n} exceeds enumeration cap {cap}"
        )));
    }
    Ok(())
}

/// Every labeled `d`-regular graph on `0..n` exactly once, including disconnected ones.
///
/// Infeasible `(n, d)` gives an empty stream; `n` above the default cap is a
/// resource error.
pub fn enumerate_labeled_regular(n: usize, d: usize) -> Result<LabeledRegularGraphs> {
    enumerate_labeled_regular_with(n, d, EnumerationConfig::default())
}

pub fn enumerate_labeled_regular_with(
    n: usize,
    d: usize,
    config: EnumerationConfig,
) -> Result<LabeledRegularGraphs> {
    enumerate_shard(n, d, &[], config)
}

/// The graphs of [`enumerate_labeled_regular`] whose edge list begins with `prefix`.
///
/// Disjoint prefixes give disjoint sub-streams; see [`shard_prefixes`].
pub fn enumerate_shard(
    n: usize,
    d: usize,
    prefix: &[Edge],
    config: EnumerationConfig,
) -> Result<LabeledRegularGraphs> {
    let feasible = feasible(n, d)?;
    check_enumeration_cap(n, config.cap)?;
    let walker = feasible.then(|| Walker::new(n, d, prefix, NoHooks));
    Ok(LabeledRegularGraphs {
        n,
        d,
        walker,
        connected_only: config.connected_only,
    })
}

/// Work split by the neighbourhood of vertex 0: one prefix per `d`-subset of `1..n`,
/// in lexicographic order.
pub fn shard_prefixes(n: usize, d: usize) -> Result<Vec<Vec<Edge>>> {
    check_range(n, d)?;
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (1..=d).collect();
    loop {
        out.push(combo.iter().map(|&w| (0, w)).collect());
        let Some(i) = (0..d).rev().find(|&i| combo[i] < n - d + i) else {
            break;
        };
        combo[i] += 1;
        for j in i + 1..d {
            combo[j] = combo[j - 1] + 1;
        }
    }
    Ok(out)
}
