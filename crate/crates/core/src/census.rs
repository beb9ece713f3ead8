//! Exhaustive and sampled runs over small labeled graphs, comparing the
//! matching criteria with the brute-force oracle.

use std::time::{Duration, Instant};

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::assoc::{ass_primes, ass_primes_2, ass_primes_3, ass_primes_oracle, prime_sets};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Largest `n` for which full (unsampled) runs are accepted.
pub const FULL_CENSUS_MAX: usize = 6;

/// Number of vertex pairs, i.e. bits in an edge mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices, by edge mask.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs = pair_count(n);
    assert!(pairs < 64, "too many labeled graphs on {n} vertices");
    (0..1u64 << pairs).map(move |mask| SimpleGraph::from_edge_mask(n, mask))
}

/// `k` distinct labeled graphs on `n` vertices, chosen uniformly with a
/// seeded ChaCha8 generator.
pub fn sample_graphs(n: usize, k: usize, seed: u64) -> Result<Vec<SimpleGraph>> {
    let pairs = pair_count(n);
    if pairs > 30 {
        return Err(Error::Oversize(format!(
            "sampling supports at most 30 vertex pairs, n = {n} has {pairs}"
        )));
    }
    let total = 1usize << pairs;
    if k > total {
        return Err(Error::Rejected(format!(
            "asked for {k} distinct graphs, only {total} exist on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut masks = index::sample(&mut rng, total, k).into_vec();
    masks.sort_unstable();
    Ok(masks
        .into_iter()
        .map(|m| SimpleGraph::from_edge_mask(n, m as u64))
        .collect())
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    for (k, (u, v)) in pairs.enumerate() {
        idx[u][v] = k;
        idx[v][u] = k;
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative (the smallest edge mask) of each isomorphism class
/// of graphs on `n ≤ 6` vertices.
pub fn isomorphism_classes(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > FULL_CENSUS_MAX {
        return Err(Error::Oversize(format!(
            "isomorphism classes are enumerated for n <= {FULL_CENSUS_MAX}"
        )));
    }
    let pairs = pair_count(n);
    let idx = pair_index(n);
    let edge_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = vec![false; 1 << pairs];
    let mut reps = Vec::new();
    for mask in 0..1u64 << pairs {
        if seen[mask as usize] {
            continue;
        }
        reps.push(SimpleGraph::from_edge_mask(n, mask));
        for p in &perms {
            let mut image = 0u64;
            for (k, &(u, v)) in edge_pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << idx[p[u]][p[v]];
                }
            }
            seen[image as usize] = true;
        }
    }
    Ok(reps)
}

/// Which engine disagreed with the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    Formula,
    Classified,
}

/// A graph on which an engine's `Ass(I^t)` differs from the oracle's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// The graph in edge-list format.
    pub graph: String,
    pub engine: Engine,
    pub expected: Vec<VertexSet>,
    pub got: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub t: usize,
    pub graphs_checked: usize,
    pub mismatches: Vec<Mismatch>,
    #[serde(
        rename = "elapsed_ms",
        skip_serializing_if = "Option::is_none",
        serialize_with = "as_millis"
    )]
    pub elapsed: Option<Duration>,
}

fn as_millis<S: Serializer>(d: &Option<Duration>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_u128(d.as_millis()),
        None => s.serialize_none(),
    }
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Parameters of [`run_census`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub n: usize,
    pub t: usize,
    /// Check this many random graphs instead of all of them.
    pub sample: Option<usize>,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Record wall-clock time in the report.
    pub timing: bool,
}

impl CensusOptions {
    pub fn new(n: usize, t: usize) -> Self {
        CensusOptions {
            n,
            t,
            sample: None,
            seed: 0,
            threads: None,
            timing: false,
        }
    }
}

/// Compares the formula engine (and, for `t ≤ 3`, the closed forms) with
/// the oracle on one graph.
pub fn check_graph(g: &SimpleGraph, t: usize) -> Result<Vec<Mismatch>> {
    let expected = prime_sets(&ass_primes_oracle(g, t)?);
    let mut out = Vec::new();
    let mut compare = |engine, got: Vec<VertexSet>| {
        if got != expected {
            out.push(Mismatch {
                graph: g.to_edge_list(),
                engine,
                expected: expected.clone(),
                got,
            });
        }
    };
    compare(Engine::Formula, prime_sets(&ass_primes(g, t)));
    let classified = match t {
        1 => Some(prime_sets(&ass_primes(g, 1))),
        2 => Some(prime_sets(&ass_primes_2(g))),
        3 => Some(prime_sets(&ass_primes_3(g))),
        _ => None,
    };
    if let Some(c) = classified {
        compare(Engine::Classified, c);
    }
    Ok(out)
}

/// Runs the formula-versus-oracle comparison of `Ass(I^t)` over all
/// labeled graphs on `n` vertices, or a seeded sample of them.
pub fn run_census(opts: &CensusOptions) -> Result<CensusReport> {
    if opts.t == 0 {
        return Err(Error::Rejected("t must be at least 1".into()));
    }
    if opts.sample.is_none() && opts.n > FULL_CENSUS_MAX {
        return Err(Error::Oversize(format!(
            "a full census is limited to n <= {FULL_CENSUS_MAX}; pass a sample size"
        )));
    }
    let start = Instant::now();
    let graphs: Vec<SimpleGraph> = match opts.sample {
        Some(k) => sample_graphs(opts.n, k, opts.seed)?,
        None => labeled_graphs(opts.n).collect(),
    };
    let work = || -> Result<Vec<Mismatch>> {
        let per_graph: Vec<Vec<Mismatch>> = graphs
            .par_iter()
            .map(|g| check_graph(g, opts.t))
            .collect::<Result<_>>()?;
        Ok(per_graph.into_iter().flatten().collect())
    };
    let mismatches = match opts.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Rejected(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    Ok(CensusReport {
        n: opts.n,
        t: opts.t,
        graphs_checked: graphs.len(),
        mismatches,
        elapsed: opts.timing.then(|| start.elapsed()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graphs(1).count(), 1);
        let counts: Vec<usize> = (1..=6).map(|n| isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn sampling_is_seeded_and_distinct() {
        let a = sample_graphs(6, 50, 7).unwrap();
        let b = sample_graphs(6, 50, 7).unwrap();
        assert_eq!(a, b);
        let mut edges: Vec<String> = a.iter().map(|g| g.to_edge_list()).collect();
        edges.dedup();
        assert_eq!(edges.len(), 50);
        assert_ne!(a, sample_graphs(6, 50, 8).unwrap());
        assert!(sample_graphs(3, 9, 0).is_err());
    }

    #[test]
    fn small_census_passes() {
        let report = run_census(&CensusOptions::new(4, 2)).unwrap();
        assert_eq!(report.graphs_checked, 64);
        assert!(report.passed(), "{:?}", report.mismatches);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(json, r#"{"n":4,"t":2,"graphs_checked":64,"mismatches":[]}"#);
    }

    #[test]
    fn oversize_full_census_is_refused() {
        assert!(matches!(run_census(&CensusOptions::new(7, 2)), Err(Error::Oversize(_))));
    }
}
