//! Simple graphs on at most 64 vertices, vertex sets as bitsets, and the
//! cover / neighborhood / cycle combinatorics used by the rest of the crate.
//!
//! Vertices are 0-based inside the library. The text and CLI layers print
//! them 1-based.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count (one machine word per vertex set).
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..n` stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Sorted 0-based members.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Sorted 1-based members, the external presentation.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }

    /// Order used for reports: lexicographic on the sorted member lists.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Prints 1-based, e.g. `{1,2,3}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|v| v + 1))
    }
}

/// Undirected simple graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=", self.n)?;
        f.debug_list()
            .entries(self.edges().map(|(u, v)| (u + 1, v + 1)))
            .finish()?;
        f.write_str(")")
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(SimpleGraph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from 0-based edges. Self-loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same as [`SimpleGraph::new`] with 1-based endpoints.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex 0 in edge {{{u},{v}}}; vertices are numbered from 1"
                )));
            }
            zero.push((u - 1, v - 1));
        }
        Self::new(n, &zero)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge {{{},{}}} has an endpoint outside 1..{}",
                u + 1,
                v + 1,
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {}", u + 1)));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{},{}}}",
                u.min(v) + 1,
                u.max(v) + 1
            )));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Graph whose edges are the pairs `i<j` selected by `mask`, in the
    /// order `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                bit += 1;
            }
        }
        SimpleGraph { n, adj }
    }

    /// Cycle `0-1-...-(k-1)-0`.
    pub fn cycle(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::new(k, &edges)
    }

    /// Path `0-1-...-(k-1)`.
    pub fn path(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::new(k, &edges)
    }

    pub fn complete(k: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Self::new(k, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `N(U)`: vertices adjacent to some vertex of `u` (may meet `u`).
    pub fn open_neighborhood(&self, u: VertexSet) -> VertexSet {
        u.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// `N[U] = U ∪ N(U)`.
    pub fn closed_neighborhood(&self, u: VertexSet) -> VertexSet {
        u.union(self.open_neighborhood(u))
    }

    /// Induced subgraph on `u`, relabelled `0..|u|` in increasing order.
    /// The second component maps new labels to old ones.
    pub fn induced_subgraph(&self, u: VertexSet) -> (SimpleGraph, Vec<usize>) {
        let map = u.to_vec();
        let mut adj = vec![VertexSet::EMPTY; map.len()];
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate() {
                if self.adj[a].contains(b) {
                    adj[i].insert(j);
                }
            }
        }
        (SimpleGraph { n: map.len(), adj }, map)
    }

    /// Whether `s` meets every edge.
    pub fn is_cover(&self, s: VertexSet) -> bool {
        let outside = self.vertices().difference(s);
        outside
            .iter()
            .all(|v| self.adj[v].intersection(outside).is_empty())
    }

    /// A cover no proper subset of which is a cover.
    pub fn is_minimal_cover(&self, s: VertexSet) -> bool {
        self.is_cover(s) && s.iter().all(|v| !self.is_cover(s.without(v)))
    }

    /// Vertices of `f` with no neighbor outside `f`.
    pub fn core(&self, f: VertexSet) -> VertexSet {
        let outside = self.vertices().difference(f);
        f.iter()
            .filter(|&v| self.adj[v].intersection(outside).is_empty())
            .collect()
    }

    /// `core(F)` for a validated cover.
    pub fn core_of_cover(&self, f: &Cover) -> VertexSet {
        self.core(f.vertices())
    }

    /// Every vertex outside `u` has a neighbor in `u`.
    pub fn is_dominating(&self, u: VertexSet) -> bool {
        self.closed_neighborhood(u) == self.vertices()
    }

    /// Maximal independent sets of the induced subgraph on `domain`
    /// (Bron–Kerbosch with pivoting on the complement).
    pub fn maximal_independent_sets_within(&self, domain: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(domain, VertexSet::EMPTY, domain, VertexSet::EMPTY, &mut out);
        out
    }

    fn non_neighbors(&self, v: usize, domain: VertexSet) -> VertexSet {
        domain.difference(self.adj[v]).without(v)
    }

    fn bron_kerbosch(
        &self,
        domain: VertexSet,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.non_neighbors(u, domain)).len())
            .expect("p is non-empty");
        let candidates = p.difference(self.non_neighbors(pivot, domain));
        for v in candidates.iter() {
            let nv = self.non_neighbors(v, domain);
            self.bron_kerbosch(domain, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// All minimal vertex covers, sorted lexicographically.
    pub fn minimal_covers(&self) -> Vec<Cover> {
        self.covers_minimal_over(VertexSet::EMPTY)
    }

    /// Covers `F ⊇ s` such that no `v ∈ F \ s` can be dropped. These are
    /// `s ∪ M` for the minimal covers `M` of the graph induced on `V \ s`.
    pub fn covers_minimal_over(&self, s: VertexSet) -> Vec<Cover> {
        let domain = self.vertices().difference(s);
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets_within(domain)
            .into_iter()
            .map(|ind| s.union(domain.difference(ind)))
            .collect();
        covers.sort_by(VertexSet::lex_cmp);
        covers.dedup();
        covers.into_iter().map(Cover).collect()
    }

    /// Whether `f` is one of [`SimpleGraph::covers_minimal_over`]`(s)`.
    pub fn is_cover_minimal_over(&self, f: VertexSet, s: VertexSet) -> bool {
        s.is_subset(f)
            && self.is_cover(f)
            && f.difference(s).iter().all(|v| !self.is_cover(f.without(v)))
    }

    /// Connected components, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the subgraph induced on `u`.
    pub fn components_within(&self, u: VertexSet) -> Vec<VertexSet> {
        let mut rest = u;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self
                    .open_neighborhood(frontier)
                    .intersection(u)
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Whether the subgraph induced on `u` is connected (the empty set is not).
    pub fn is_connected_within(&self, u: VertexSet) -> bool {
        self.components_within(u).len() == 1
    }

    /// A shortest odd cycle of the subgraph induced on `u`, as a vertex
    /// sequence, or `None` if that subgraph is bipartite.
    pub fn shortest_odd_cycle_within(&self, u: VertexSet) -> Option<Vec<usize>> {
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, x, y)
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in u.iter() {
            self.bfs_layers(root, u, &mut dist, &mut parent);
            for (x, y) in self.edges() {
                if !u.contains(x) || !u.contains(y) || dist[x] == usize::MAX {
                    continue;
                }
                if dist[x] == dist[y] {
                    let len = 2 * dist[x] + 1;
                    if best.is_none_or(|b| len < b.0) {
                        best = Some((len, root, x, y));
                    }
                }
            }
        }
        let (len, root, x, y) = best?;
        self.bfs_layers(root, u, &mut dist, &mut parent);
        let walk_up = |mut v: usize| {
            let mut path = vec![v];
            while v != root {
                v = parent[v];
                path.push(v);
            }
            path
        };
        let mut cycle = walk_up(x);
        cycle.reverse(); // root .. x
        let mut tail = walk_up(y); // y .. root
        tail.pop();
        cycle.extend(tail);
        debug_assert_eq!(cycle.len(), len);
        debug_assert!(self.is_simple_cycle(&cycle));
        Some(cycle)
    }

    /// Length of a shortest odd cycle; `None` iff the graph is bipartite.
    pub fn shortest_odd_cycle(&self) -> Option<usize> {
        self.shortest_odd_cycle_within(self.vertices())
            .map(|c| c.len())
    }

    fn bfs_layers(&self, root: usize, u: VertexSet, dist: &mut [usize], parent: &mut [usize]) {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].intersection(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Whether `cycle` lists distinct vertices forming a closed cycle of length ≥ 3.
    pub fn is_simple_cycle(&self, cycle: &[usize]) -> bool {
        let set: VertexSet = cycle.iter().copied().collect();
        cycle.len() >= 3
            && set.len() == cycle.len()
            && (0..cycle.len()).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    /// Two-colouring test by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether every connected component of the subgraph induced on `u`
    /// contains an odd cycle, optionally of length at most `max_len`.
    /// The empty set does not qualify.
    pub fn every_component_has_odd_cycle(&self, u: VertexSet, max_len: Option<usize>) -> bool {
        !u.is_empty()
            && self.components_within(u).into_iter().all(|c| {
                self.shortest_odd_cycle_within(c)
                    .is_some_and(|cyc| max_len.is_none_or(|m| cyc.len() <= m))
            })
    }

    /// All triangles as vertex sets, sorted.
    pub fn triangles(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            for w in self.adj[u].intersection(self.adj[v]).iter() {
                if w > v {
                    out.push(VertexSet::from_iter([u, v, w]));
                }
            }
        }
        out.sort_by(VertexSet::lex_cmp);
        out
    }

    /// Serialises to the edge-list text format (1-based, LF endings).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`
    /// with `1 <= u < v <= n`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line `n m`".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Self::empty(n)?;
        let mut seen = 0;
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body)?;
            if !(1 <= u && u < v && v <= n) {
                return Err(Error::Parse {
                    line,
                    message: format!("edge `{body}` must satisfy 1 <= u < v <= {n}"),
                });
            }
            g.add_edge(u - 1, v - 1).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {m} edges, found {seen}"),
            });
        }
        Ok(g)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    let bad = || Error::Parse {
        line,
        message: format!("expected two non-negative integers, got `{body}`"),
    };
    if fields.len() != 2 {
        return Err(bad());
    }
    Ok([
        fields[0].parse().map_err(|_| bad())?,
        fields[1].parse().map_err(|_| bad())?,
    ])
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_edge_list(s)
    }
}

/// A vertex set meeting every edge of the ambient graph; encodes the
/// monomial prime generated by its variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cover(VertexSet);

impl Cover {
    pub fn new(g: &SimpleGraph, s: VertexSet) -> Result<Self> {
        if !s.is_subset(g.vertices()) || !g.is_cover(s) {
            return Err(Error::NotACover(s.to_string()));
        }
        Ok(Cover(s))
    }

    pub fn vertices(self) -> VertexSet {
        self.0
    }
}

impl fmt::Debug for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cover{}", self.0)
    }
}

impl Serialize for Cover {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn covers(v: Vec<Cover>) -> Vec<Vec<usize>> {
        v.into_iter().map(|c| c.vertices().to_one_based()).collect()
    }

    #[test]
    fn neighborhoods() {
        let t = triangle();
        assert_eq!(t.open_neighborhood(set(&[1])), set(&[2, 3]));
        assert_eq!(t.closed_neighborhood(set(&[1])), set(&[1, 2, 3]));
        assert_eq!(t.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        let p = SimpleGraph::path(3).unwrap();
        assert_eq!(p.open_neighborhood(set(&[1, 3])), set(&[2]));
        let g = tadpole();
        assert_eq!(g.open_neighborhood(set(&[1, 2, 3, 4])), set(&[1, 2, 3, 4, 5]));
        assert_eq!(bowtie().closed_neighborhood(set(&[2, 3])), set(&[1, 2, 3]));
    }

    #[test]
    fn induced_subgraphs() {
        let (p, map) = pentagon().induced_subgraph(set(&[1, 2, 3]));
        assert_eq!(p.edge_count(), 2);
        assert_eq!(map, vec![0, 1, 2]);
        let g = tadpole();
        assert_eq!(g.induced_subgraph(g.vertices()).0, g);
        assert_eq!(g.induced_subgraph(set(&[1, 2, 3])).0, triangle());
    }

    #[test]
    fn core_and_cover_predicates() {
        let t = triangle();
        assert!(t.core(set(&[1, 2])).is_empty());
        assert_eq!(t.core(set(&[1, 2, 3])), set(&[1, 2, 3]));
        let g = tadpole();
        assert_eq!(g.core(set(&[1, 2, 3, 4])), set(&[1, 2, 3]));
        assert!(!t.is_cover(set(&[1])));
        assert!(t.is_minimal_cover(set(&[1, 2])));
        assert!(g.is_cover(set(&[1, 2, 3, 4])));
        assert!(!g.is_minimal_cover(set(&[1, 2, 3, 4])));
        assert!(Cover::new(&t, set(&[1])).is_err());
    }

    #[test]
    fn minimal_cover_lists() {
        let e = SimpleGraph::path(2).unwrap();
        assert_eq!(covers(e.minimal_covers()), vec![vec![1], vec![2]]);
        assert_eq!(
            covers(triangle().minimal_covers()),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let pc = pentagon().minimal_covers();
        assert_eq!(pc.len(), 5);
        assert!(pc.iter().all(|c| c.vertices().len() == 3));
        // isolated vertices never enter a minimal cover
        let g = SimpleGraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(covers(g.minimal_covers()), vec![vec![1], vec![2]]);
        assert_eq!(covers(SimpleGraph::empty(2).unwrap().minimal_covers()), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn covers_minimal_over_examples() {
        let g = tadpole();
        assert_eq!(covers(g.covers_minimal_over(set(&[1, 2, 3, 4]))), vec![vec![1, 2, 3, 4]]);
        assert_eq!(covers(g.covers_minimal_over(g.vertices())), vec![vec![1, 2, 3, 4, 5]]);
        assert_eq!(triangle().covers_minimal_over(VertexSet::EMPTY), triangle().minimal_covers());
    }

    #[test]
    fn components() {
        let two = SimpleGraph::from_one_based(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(two.connected_components().len(), 2);
        assert_eq!(tadpole().connected_components().len(), 1);
        assert_eq!(SimpleGraph::empty(3).unwrap().connected_components().len(), 3);
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(triangle().shortest_odd_cycle(), Some(3));
        assert_eq!(pentagon().shortest_odd_cycle(), Some(5));
        assert_eq!(SimpleGraph::path(6).unwrap().shortest_odd_cycle(), None);
        assert_eq!(SimpleGraph::cycle(7).unwrap().shortest_odd_cycle(), Some(7));
        let c = bowtie().shortest_odd_cycle_within(bowtie().vertices()).unwrap();
        assert!(bowtie().is_simple_cycle(&c));
    }

    #[test]
    fn domination() {
        assert!(pentagon().is_dominating(pentagon().vertices()));
        assert!(!tadpole().is_dominating(set(&[1, 2, 3])));
        assert!(tadpole().is_dominating(set(&[1, 2, 3, 4])));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = tadpole();
        let text = g.to_edge_list();
        assert_eq!(text, "5 5\n1 2\n1 3\n2 3\n3 4\n4 5\n");
        assert_eq!(SimpleGraph::parse_edge_list(&text).unwrap(), g);
        let err = SimpleGraph::parse_edge_list("3 2\n1 2\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = SimpleGraph::parse_edge_list("3 2\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(SimpleGraph::parse_edge_list("3 1\n1 x\n").is_err());
        assert!(SimpleGraph::parse_edge_list("2 2\n1 2\n1 2\n").is_err());
    }

    #[test]
    fn subsets_enumeration() {
        let s = set(&[1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
    }

    #[test]
    fn exhaustive_cover_invariants_small() {
        // n <= 5 here; the n <= 6 sweep lives in the integration tests.
        for n in 1..=5 {
            let pairs = n * (n - 1) / 2;
            for mask in 0..1u64 << pairs {
                let g = SimpleGraph::from_edge_mask(n, mask);
                let brute: Vec<VertexSet> = g
                    .vertices()
                    .subsets()
                    .filter(|&s| {
                        g.is_cover(s) && s.iter().all(|v| !g.is_cover(s.without(v)))
                    })
                    .collect();
                let mut brute = brute;
                brute.sort_by(VertexSet::lex_cmp);
                let fast: Vec<_> = g.minimal_covers().into_iter().map(|c| c.vertices()).collect();
                assert_eq!(fast, brute);
                for s in g.vertices().subsets() {
                    if g.is_cover(s) {
                        assert_eq!(g.core(s).is_empty(), g.is_minimal_cover(s));
                    }
                }
                assert_eq!(g.shortest_odd_cycle().is_none(), g.is_bipartite());
            }
        }
    }
}
