//! Matching number of vertex-weighted graphs.
//!
//! A matching of a weighted graph is a multiset of edges in which every
//! vertex appears at most as often as its weight. The maximum size is
//! computed by blowing each vertex `i` up into `weight(i)` clones, joining
//! clones of adjacent vertices, and running Edmonds' blossom algorithm on the
//! resulting simple graph.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Default bound on the total weight accepted by [`nu_bruteforce`].
pub const BRUTEFORCE_CUTOFF: u32 = 14;

/// A simple base graph whose vertices carry positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    base: SimpleGraph,
    weights: Vec<u32>,
    /// Ambient label of each vertex (identity unless built by [`WeightedGraph::induced`]).
    labels: Vec<usize>,
}

impl WeightedGraph {
    pub fn new(base: SimpleGraph, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != base.n() {
            return Err(Error::Rejected(format!(
                "{} weights given for {} vertices",
                weights.len(),
                base.n()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Rejected(format!("vertex {} has weight 0", i + 1)));
        }
        let labels = (0..base.n()).collect();
        Ok(WeightedGraph {
            base,
            weights,
            labels,
        })
    }

    /// The weighted graph of an exponent vector: the subgraph of `g` induced
    /// on the support of `a`, vertex `i` weighted by `a[i]`.
    pub fn induced(g: &SimpleGraph, a: &[u32]) -> Self {
        assert_eq!(a.len(), g.n(), "exponent vector length must equal n");
        let support: VertexSet = (0..g.n()).filter(|&i| a[i] > 0).collect();
        let (base, labels) = g.induced_subgraph(support);
        let weights = labels.iter().map(|&i| a[i]).collect();
        WeightedGraph {
            base,
            weights,
            labels,
        }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// `deg_H(i)`: total weight of the neighbours of `i`.
    pub fn weighted_degree(&self, v: usize) -> u32 {
        self.base.neighbors(v).iter().map(|u| self.weights[u]).sum()
    }

    /// `H - N`: the weighted subgraph induced on the complement of `n`.
    pub fn minus(&self, n: VertexSet) -> WeightedGraph {
        let keep = self.base.vertices().difference(n);
        let (base, map) = self.base.induced_subgraph(keep);
        WeightedGraph {
            base,
            weights: map.iter().map(|&i| self.weights[i]).collect(),
            labels: map.iter().map(|&i| self.labels[i]).collect(),
        }
    }
}

/// A multiset of edges of a weighted graph, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that every pair is an edge of `h` and that no vertex is
    /// used more often than its weight.
    pub fn new(h: &WeightedGraph, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        for &(u, v) in &edges {
            if !h.base.has_edge(u, v) {
                return Err(Error::Rejected(format!(
                    "{{{},{}}} is not an edge",
                    u + 1,
                    v + 1
                )));
            }
        }
        let m = Matching { edges };
        let usage = m.usage(h.n());
        if let Some(i) = (0..h.n()).find(|&i| usage[i] > h.weights[i]) {
            return Err(Error::Rejected(format!(
                "vertex {} used {} times but has weight {}",
                i + 1,
                usage[i],
                h.weights[i]
            )));
        }
        Ok(m)
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of appearances of each vertex among the edges.
    pub fn usage(&self, n: usize) -> Vec<u32> {
        let mut w = vec![0; n];
        for &(u, v) in &self.edges {
            w[u] += 1;
            w[v] += 1;
        }
        w
    }
}

/// `ν(H)`.
pub fn nu(h: &WeightedGraph) -> usize {
    nu_masked(&h.base, &h.weights)
}

/// A maximum matching of `h`; its size is `ν(H)`.
pub fn maximum_matching(h: &WeightedGraph) -> Matching {
    let blow = BlowUp::new(&h.base, &h.weights);
    let mate = blow.max_matching();
    let mut edges = Vec::new();
    for (c, &m) in mate.iter().enumerate() {
        if m != NONE && c < m {
            let (u, v) = (blow.owner[c], blow.owner[m]);
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    Matching { edges }
}

/// `ν(H - N)`.
pub fn nu_minus(h: &WeightedGraph, n: VertexSet) -> usize {
    let mut w = h.weights.clone();
    let len = w.len();
    for v in n.iter().filter(|&v| v < len) {
        w[v] = 0;
    }
    nu_masked(&h.base, &w)
}

/// Matching number of the weighted graph induced on the support of `w`
/// (entries equal to zero are absent vertices).
pub(crate) fn nu_masked(g: &SimpleGraph, w: &[u32]) -> usize {
    BlowUp::new(g, w).matching_size()
}

const NONE: usize = usize::MAX;

/// Clone graph of a weighted graph. Each weight is first capped by the
/// weighted degree, which no matching can exceed at that vertex.
struct BlowUp {
    adj: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

impl BlowUp {
    fn new(g: &SimpleGraph, w: &[u32]) -> Self {
        let n = g.n();
        let mut first = vec![0usize; n + 1];
        for i in 0..n {
            let cap = if w[i] == 0 {
                0
            } else {
                let deg: u32 = g.neighbors(i).iter().map(|j| w[j]).sum();
                w[i].min(deg)
            };
            first[i + 1] = first[i] + cap as usize;
        }
        let total = first[n];
        let mut owner = vec![0; total];
        for i in 0..n {
            owner[first[i]..first[i + 1]].fill(i);
        }
        let mut adj = vec![Vec::new(); total];
        for (u, v) in g.edges() {
            for cu in first[u]..first[u + 1] {
                for cv in first[v]..first[v + 1] {
                    adj[cu].push(cv);
                    adj[cv].push(cu);
                }
            }
        }
        BlowUp { adj, owner }
    }

    fn matching_size(&self) -> usize {
        self.max_matching().iter().filter(|&&m| m != NONE).count() / 2
    }

    fn max_matching(&self) -> Vec<usize> {
        Edmonds::new(&self.adj).run()
    }
}

/// Edmonds' blossom algorithm for maximum cardinality matching, one
/// breadth-first search per exposed vertex.
struct Edmonds<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Edmonds<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Edmonds {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed vertex at
    /// the end of an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for k in 0..self.adj[v].len() {
                let to = self.adj[v][k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// Whether `m` admits an augmenting walk: an odd-length walk whose even
/// edges form a sub-multiset of `m`, whose odd edges are arbitrary edges,
/// and whose endpoints have spare capacity (two units if both ends coincide).
/// Flipping such a walk yields a matching with one more edge.
pub fn has_augmenting_walk(h: &WeightedGraph, m: &Matching) -> Result<bool> {
    let m = Matching::new(h, m.edges.clone())?;
    let n = h.n();
    let usage = m.usage(n);
    let spare: Vec<u32> = (0..n).map(|i| h.weights[i] - usage[i]).collect();

    // distinct matching edges with multiplicities
    let mut kinds: Vec<(usize, usize)> = m.edges.clone();
    kinds.dedup();
    let counts: Vec<u32> = kinds
        .iter()
        .map(|e| m.edges.iter().filter(|f| *f == e).count() as u32)
        .collect();
    let incident: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..kinds.len())
                .filter(|&k| kinds[k].0 == v || kinds[k].1 == v)
                .collect()
        })
        .collect();

    for start in (0..n).filter(|&v| spare[v] > 0) {
        let mut seen: HashSet<(usize, Vec<u32>)> = HashSet::new();
        let mut stack = vec![(start, counts.clone())];
        seen.insert((start, counts.clone()));
        while let Some((cur, remaining)) = stack.pop() {
            for x in h.base.neighbors(cur).iter() {
                let need = if x == start { 2 } else { 1 };
                if spare[x] >= need {
                    return Ok(true);
                }
                for &k in &incident[x] {
                    if remaining[k] == 0 {
                        continue;
                    }
                    let (a, b) = kinds[k];
                    let y = if a == x { b } else { a };
                    let mut next = remaining.clone();
                    next[k] -= 1;
                    if seen.insert((y, next.clone())) {
                        stack.push((y, next));
                    }
                }
            }
        }
    }
    Ok(false)
}

/// `ν(H)` by exhaustive search over edge multiplicities, with the default
/// total-weight cutoff.
pub fn nu_bruteforce(h: &WeightedGraph) -> Result<usize> {
    nu_bruteforce_with_cutoff(h, BRUTEFORCE_CUTOFF)
}

pub fn nu_bruteforce_with_cutoff(h: &WeightedGraph, cutoff: u32) -> Result<usize> {
    let total = h.total_weight();
    if total > cutoff {
        return Err(Error::Oversize(format!(
            "total weight {total} exceeds the brute-force cutoff {cutoff}"
        )));
    }
    let edges: Vec<(usize, usize)> = h.base.edges().collect();
    let mut cap = h.weights.clone();
    let mut best = 0;
    search_multiplicities(&edges, 0, &mut cap, 0, &mut best);
    Ok(best)
}

fn search_multiplicities(
    edges: &[(usize, usize)],
    k: usize,
    cap: &mut [u32],
    size: usize,
    best: &mut usize,
) {
    if size > *best {
        *best = size;
    }
    if k == edges.len() {
        return;
    }
    // Every remaining edge consumes two units of capacity among its endpoints.
    let live: VertexSet = edges[k..].iter().flat_map(|&(u, v)| [u, v]).collect();
    let room: u32 = live.iter().map(|v| cap[v]).sum();
    if size + (room / 2) as usize <= *best {
        return;
    }
    let (u, v) = edges[k];
    let most = cap[u].min(cap[v]);
    for mult in (0..=most).rev() {
        cap[u] -= mult;
        cap[v] -= mult;
        search_multiplicities(edges, k + 1, cap, size + mult as usize, best);
        cap[u] += mult;
        cap[v] += mult;
    }
}
