//! Membership of monomials in powers of an edge ideal and in their
//! saturations, expressed through matching numbers of weighted graphs.
//!
//! For an exponent vector `a` on the ambient graph `g`:
//!
//! * `x^a ∈ I^t` iff `ν(Γ_a) ≥ t`;
//! * `x^a ∈ sat(I^t) \ I^t` iff `ν(Γ_a) < t` and
//!   `ν(Γ_a - N_a(i)) ≥ t - deg_a(i)` for every vertex `i` of `g`.
//!
//! A weighted graph is *t-saturating* when the second condition holds on
//! its own vertices, and *strongly t-saturating* when `ν(H) < t` and
//! `ν(H - j) ≥ t - a_j` for all `j`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, SignedExponentVector};
use crate::graph::{SimpleGraph, VertexSet};
use crate::matching::{nu_masked, WeightedGraph};

/// `x^a ∈ I^t`.
pub fn in_power(g: &SimpleGraph, a: &ExponentVector, t: usize) -> bool {
    nu_masked(g, a.as_slice()) >= t
}

/// `ν(Γ_a - N_a(i)) ≥ t - deg_a(i)` at one vertex `i` of `g`.
pub fn neighborhood_condition(g: &SimpleGraph, a: &ExponentVector, i: usize, t: usize) -> bool {
    local_condition(g, a.as_slice(), i, t)
}

fn local_condition(g: &SimpleGraph, w: &[u32], i: usize, t: usize) -> bool {
    let nbrs = g.neighbors(i);
    let deg: usize = nbrs.iter().map(|j| w[j] as usize).sum();
    if deg >= t {
        return true;
    }
    let mut rest = w.to_vec();
    for j in nbrs.iter() {
        rest[j] = 0;
    }
    nu_masked(g, &rest) >= t - deg
}

fn local_condition_everywhere(g: &SimpleGraph, a: &ExponentVector, t: usize) -> bool {
    (0..g.n()).all(|i| local_condition(g, a.as_slice(), i, t))
}

/// `x^a ∈ sat(I^t)`: either `x^a ∈ I^t`, or the local condition holds at
/// every vertex.
pub fn in_saturation(g: &SimpleGraph, a: &ExponentVector, t: usize) -> bool {
    in_power(g, a, t) || local_condition_everywhere(g, a, t)
}

/// `x^a ∈ sat(I^t) \ I^t`.
pub fn in_sat_minus_power(g: &SimpleGraph, a: &ExponentVector, t: usize) -> bool {
    !in_power(g, a, t) && local_condition_everywhere(g, a, t)
}

/// Whether `Γ_a` (weights on the support of `a`) is t-saturating.
pub fn is_t_saturating_on(g: &SimpleGraph, a: &ExponentVector, t: usize) -> bool {
    let w = a.as_slice();
    nu_masked(g, w) < t && a.support().iter().all(|i| local_condition(g, w, i, t))
}

/// Whether `Γ_a` is strongly t-saturating.
pub fn is_strongly_t_saturating_on(g: &SimpleGraph, a: &ExponentVector, t: usize) -> bool {
    let w = a.as_slice();
    if nu_masked(g, w) >= t {
        return false;
    }
    let mut rest = w.to_vec();
    a.support().iter().all(|j| {
        let aj = w[j] as usize;
        if aj >= t {
            return true;
        }
        rest[j] = 0;
        let ok = nu_masked(g, &rest) >= t - aj;
        rest[j] = w[j];
        ok
    })
}

fn weights_of(h: &WeightedGraph) -> ExponentVector {
    ExponentVector::new(h.weights().to_vec())
}

/// `ν(H) < t` and `ν(H - N_H(i)) ≥ t - deg_H(i)` for every vertex `i`.
pub fn is_t_saturating(h: &WeightedGraph, t: usize) -> bool {
    is_t_saturating_on(h.base(), &weights_of(h), t)
}

/// `ν(H) < t` and `ν(H - j) ≥ t - a_j` for every vertex `j`.
pub fn is_strongly_t_saturating(h: &WeightedGraph, t: usize) -> bool {
    is_strongly_t_saturating_on(h.base(), &weights_of(h), t)
}

/// The level `t` with `Σ a_i = 2t - 1`, if the degree is odd.
fn odd_level(a: &ExponentVector) -> Option<usize> {
    let d = a.degree() as usize;
    (d % 2 == 1).then_some(d.div_ceil(2))
}

/// `Γ_b` is strongly t-saturating with `Σ b_i = 2t - 1` and
/// `ν(Γ_b) = ν(Γ_{b - e_i}) = t - 1` for all `i ∈ V_b`.
pub fn is_extendable(g: &SimpleGraph, b: &ExponentVector) -> Option<usize> {
    let t = odd_level(b)?;
    let tight = nu_masked(g, b.as_slice()) == t - 1
        && b
            .support()
            .iter()
            .all(|i| nu_masked(g, b.minus_unit(i).as_slice()) == t - 1);
    (tight && is_strongly_t_saturating_on(g, b, t)).then_some(t)
}

/// Adds the edge `{h, j}` (0-based, `h ∈ V_b`) to an extendable weighted
/// graph `Γ_b`, returning `a = b + e_h + e_j`. The result is strongly
/// `(t+1)`-saturating with `Σ a_i = 2t + 1` and
/// `ν(Γ_a) = ν(Γ_{a - e_i}) = t`; these postconditions are re-checked.
pub fn extend_by_edge(
    g: &SimpleGraph,
    b: &ExponentVector,
    (h, j): (usize, usize),
) -> Result<ExponentVector> {
    if b.len() != g.n() {
        return Err(Error::Rejected(format!(
            "exponent vector has length {}, graph has {} vertices",
            b.len(),
            g.n()
        )));
    }
    if !g.has_edge(h, j) {
        return Err(Error::Rejected(format!(
            "{{{},{}}} is not an edge of the graph",
            h + 1,
            j + 1
        )));
    }
    if b[h] == 0 {
        return Err(Error::Rejected(format!(
            "vertex {} is not in the support of b",
            h + 1
        )));
    }
    let t = is_extendable(g, b).ok_or_else(|| {
        Error::Rejected(format!(
            "Γ_b for b = ({b}) is not strongly saturating with tight matching numbers"
        ))
    })?;
    let a = b.plus_unit(h).plus_unit(j);
    if a.degree() as usize != 2 * t + 1 || is_extendable(g, &a) != Some(t + 1) {
        return Err(Error::Invariant(format!(
            "extending ({b}) by {{{},{}}} did not give a strongly {}-saturating graph",
            h + 1,
            j + 1,
            t + 1
        )));
    }
    Ok(a)
}

/// Result of [`build_strong`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongConstruction {
    pub exponents: ExponentVector,
    pub t: usize,
}

/// Grows the seed (a strongly s-saturating induced subgraph on `2s - 1`
/// vertices) to a strongly t-saturating weighted graph on all of `u`, with
/// `t = |u| - s + 1`, adding one edge per new vertex in breadth-first order.
pub fn build_strong(
    g: &SimpleGraph,
    u: VertexSet,
    seed: VertexSet,
) -> Result<StrongConstruction> {
    if !u.is_subset(g.vertices()) || !seed.is_subset(u) {
        return Err(Error::Rejected("seed must lie inside u, u inside V".into()));
    }
    if !g.is_connected_within(u) {
        return Err(Error::Rejected(format!("the graph induced on {u} is not connected")));
    }
    if seed.len() < 3 || seed.len().is_multiple_of(2) {
        return Err(Error::Rejected(format!(
            "seed {seed} must have an odd number (at least 3) of vertices"
        )));
    }
    let s = seed.len().div_ceil(2);
    let mut a = ExponentVector::indicator(g.n(), seed);
    if !is_strongly_t_saturating_on(g, &a, s) {
        return Err(Error::Rejected(format!(
            "seed {seed} is not strongly {s}-saturating"
        )));
    }
    let mut reached = seed;
    let mut queue: VecDeque<usize> = seed.iter().collect();
    while let Some(h) = queue.pop_front() {
        for j in g.neighbors(h).intersection(u).difference(reached).iter() {
            a = extend_by_edge(g, &a, (h, j))?;
            reached.insert(j);
            queue.push_back(j);
        }
    }
    let t = u.len() - s + 1;
    debug_assert_eq!(odd_level(&a), Some(t));
    Ok(StrongConstruction { exponents: a, t })
}

/// Bounds for [`saturating_vectors_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatingSearch {
    /// Largest weight tried at a vertex.
    pub max_weight: u32,
    /// Largest total weight tried.
    pub max_total: u32,
    /// If set, only supports whose every induced component has an odd cycle
    /// of at most this length are tried.
    pub odd_cycle_bound: Option<usize>,
}

impl SaturatingSearch {
    /// The complete bounds: weights `≤ t - 1`, total `≤ 3(t - 1)`, every
    /// component of the support with an odd cycle of length `≤ 2t - 1`.
    pub fn pruned(t: usize) -> Self {
        let t1 = t.saturating_sub(1) as u32;
        SaturatingSearch {
            max_weight: t1,
            max_total: 3 * t1,
            odd_cycle_bound: Some(2 * t - 1),
        }
    }

    /// Every support, weights up to `3t`.
    pub fn unpruned(t: usize, n: usize) -> Self {
        SaturatingSearch {
            max_weight: 3 * t as u32,
            max_total: 3 * t as u32 * n as u32,
            odd_cycle_bound: None,
        }
    }
}

/// All `a` such that `Γ_a` is t-saturating, sorted by support (as a sorted
/// vertex list) and then by `a`.
pub fn saturating_vectors(g: &SimpleGraph, t: usize) -> Vec<ExponentVector> {
    if t < 2 {
        return Vec::new();
    }
    saturating_vectors_with(g, t, &SaturatingSearch::pruned(t))
}

pub fn saturating_vectors_with(
    g: &SimpleGraph,
    t: usize,
    search: &SaturatingSearch,
) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    for u in g.vertices().subsets().filter(|u| !u.is_empty()) {
        if let Some(bound) = search.odd_cycle_bound {
            if !g.every_component_has_odd_cycle(u, Some(bound)) {
                continue;
            }
        }
        if (u.len() as u32) > search.max_total {
            continue;
        }
        for_each_weighting(g.n(), u, search.max_weight, search.max_total, &mut |a| {
            if is_t_saturating_on(g, a, t) {
                out.push(a.clone());
            }
        });
    }
    sort_by_support(&mut out);
    out
}

pub(crate) fn sort_by_support(v: &mut [ExponentVector]) {
    v.sort_by(|x, y| x.support().lex_cmp(&y.support()).then_with(|| x.cmp(y)));
}

/// Calls `f` on every `a` with support exactly `u`, entries in
/// `1..=max_weight` and total at most `max_total`, in lexicographic order.
pub(crate) fn for_each_weighting(
    n: usize,
    u: VertexSet,
    max_weight: u32,
    max_total: u32,
    f: &mut dyn FnMut(&ExponentVector),
) {
    let verts = u.to_vec();
    let mut a = vec![0u32; n];
    for &v in &verts {
        a[v] = 1;
    }
    let base = verts.len() as u32;
    if base > max_total || (max_weight == 0 && !verts.is_empty()) {
        return;
    }
    fn rec(
        verts: &[usize],
        k: usize,
        a: &mut Vec<u32>,
        spare: u32,
        max_weight: u32,
        f: &mut dyn FnMut(&ExponentVector),
    ) {
        if k == verts.len() {
            f(&ExponentVector::new(a.clone()));
            return;
        }
        let v = verts[k];
        for extra in 0..=spare.min(max_weight - 1) {
            a[v] = 1 + extra;
            rec(verts, k + 1, a, spare - extra, max_weight, f);
        }
        a[v] = 1;
    }
    rec(&verts, 0, &mut a, max_total - base, max_weight, f);
}

/// Facets of the degree-`a` complex of `I^t`: the sets `G \ G_a` for
/// `G_a ⊆ G ⊆ V` with `x^{a_G} ∈ sat((I^t)_G) \ (I^t)_G`, decided by
/// localising at `F = V \ G` and testing the edge ideal of `Γ_{core(F)}`
/// at power `s = t - Σ_{i ∈ F \ core(F)} a_i`. Sets `G` whose complement is
/// not a cover give the unit ideal and never contribute.
pub fn facets_delta(g: &SimpleGraph, a: &SignedExponentVector, t: usize) -> Vec<VertexSet> {
    assert_eq!(a.len(), g.n(), "exponent vector length must equal n");
    let neg = a.negative_part();
    let v = g.vertices();
    let mut facets = Vec::new();
    for extra in v.difference(neg).subsets() {
        let big_g = neg.union(extra);
        let f = v.difference(big_g);
        if !g.is_cover(f) {
            continue;
        }
        let core = g.core(f);
        let spent: i64 = f.difference(core).iter().map(|i| a.as_slice()[i]).sum();
        let s = t as i64 - spent;
        if s < 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(core);
        let b = a.truncate(big_g).restrict(&map);
        if in_sat_minus_power(&sub, &b, s as usize) {
            facets.push(extra);
        }
    }
    facets.sort_by(VertexSet::lex_cmp);
    facets
}
