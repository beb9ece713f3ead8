//! Associated primes of `I^t` for the edge ideal `I` of a graph.
//!
//! Every associated prime is `P_F` for a cover `F`. Minimal primes are the
//! minimal covers. An embedded `P_F` exists exactly when some `a` with
//! `Γ_a` t-saturating has `F` minimal among the covers containing
//! `N[V_a]` and satisfies `ν(Γ_a - N_a(i)) ≥ t - deg_a(i)` on
//! `core(F) \ V_a`. For `t = 2, 3` this collapses to small subgraph shapes.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::graph::{Cover, SimpleGraph, VertexSet};
use crate::oracle;
use crate::saturation::{
    for_each_weighting, is_strongly_t_saturating_on, is_t_saturating_on, neighborhood_condition,
    saturating_vectors, SaturatingSearch,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeKind {
    Minimal,
    Embedded,
}

/// Subgraph patterns behind the closed forms for `t = 2, 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Triangle,
    /// A triangle plus an edge at one of its vertices.
    EdgeTriangle,
    /// Two vertex-disjoint triangles with no edge between them.
    TwoTriangles,
    /// Two triangles sharing exactly one vertex.
    Bowtie,
    Pentagon,
}

impl Shape {
    pub const ALL: [Shape; 5] = [
        Shape::Triangle,
        Shape::EdgeTriangle,
        Shape::TwoTriangles,
        Shape::Bowtie,
        Shape::Pentagon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Triangle => "triangle",
            Shape::EdgeTriangle => "edge+triangle",
            Shape::TwoTriangles => "two disjoint triangles",
            Shape::Bowtie => "two triangles sharing a vertex",
            Shape::Pentagon => "pentagon",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a prime was reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    /// `F` is a minimal cover.
    MinimalCover,
    /// A monomial `x^a` certifying `F` through the general criterion.
    Witness { exponents: ExponentVector },
    /// `F` is minimal over `N[S]` for a subgraph of the given shape on `S`.
    Shape { shape: Shape, vertices: VertexSet },
    /// `F` is minimal over `N[U]` with every component of `Γ_U` non-bipartite.
    StableSet { vertices: VertexSet },
    /// `I^t : x^w = P_F`, found by the brute-force oracle.
    Oracle { monomial: ExponentVector },
}

/// One associated prime `P_F` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssPrimeReport {
    #[serde(rename = "vertices")]
    pub prime: Cover,
    pub kind: PrimeKind,
    pub evidence: Evidence,
}

impl AssPrimeReport {
    pub fn vertices(&self) -> VertexSet {
        self.prime.vertices()
    }

    /// Re-checks the evidence against `g` at power `t`.
    pub fn verify(&self, g: &SimpleGraph, t: usize) -> bool {
        let f = self.vertices();
        let kind_ok = (self.kind == PrimeKind::Minimal) == g.is_minimal_cover(f);
        kind_ok
            && match &self.evidence {
                Evidence::MinimalCover => g.is_minimal_cover(f),
                Evidence::Witness { exponents } => witness_certifies(g, f, exponents, t),
                Evidence::Shape { shape, vertices } => {
                    shapes_within(g, *vertices).contains(&(*shape, *vertices))
                        && g.is_cover_minimal_over(f, g.closed_neighborhood(*vertices))
                }
                Evidence::StableSet { vertices } => {
                    g.every_component_has_odd_cycle(*vertices, None)
                        && g.is_cover_minimal_over(f, g.closed_neighborhood(*vertices))
                }
                Evidence::Oracle { monomial } => {
                    if g.edge_count() == 0 {
                        return f.is_empty();
                    }
                    let Ok(power) = oracle::edge_ideal(g).map(|i| i.power(t)) else {
                        return false;
                    };
                    oracle::Monomial::new(monomial.as_slice())
                        .ok()
                        .and_then(|w| power.colon_prime(w))
                        == Some(f)
                }
            }
    }
}

/// The JSON report `{"t": .., "primes": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssReport {
    pub t: usize,
    pub primes: Vec<AssPrimeReport>,
}

/// `m` for the maximal ideal, else the sorted 1-based cover.
pub fn prime_label(g: &SimpleGraph, f: VertexSet) -> String {
    if g.n() > 0 && f == g.vertices() {
        "m".to_string()
    } else {
        f.to_string()
    }
}

impl AssReport {
    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.primes.iter().map(|p| p.vertices()).collect()
    }

    /// Plain-text table, one prime per line.
    pub fn render(&self, g: &SimpleGraph) -> String {
        let mut out = format!("Ass(I^{}): {} primes\n", self.t, self.primes.len());
        for p in &self.primes {
            let kind = match p.kind {
                PrimeKind::Minimal => "minimal",
                PrimeKind::Embedded => "embedded",
            };
            let why = match &p.evidence {
                Evidence::MinimalCover => "minimal cover".to_string(),
                Evidence::Witness { exponents } => format!("witness a = ({exponents})"),
                Evidence::Shape { shape, vertices } => format!("{shape} on {vertices}"),
                Evidence::StableSet { vertices } => format!("U = {vertices}"),
                Evidence::Oracle { monomial } => format!("I^t : x^({monomial}) = P_F"),
            };
            out.push_str(&format!(
                "  {:<16} {:<9} {}\n",
                prime_label(g, p.vertices()),
                kind,
                why
            ));
        }
        out
    }
}

/// How to compute `Ass(I^t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// The general matching criterion.
    Formula,
    /// Brute-force colon ideals.
    Oracle,
    /// The shape classification (`t ≤ 3`).
    Classified,
}

/// Collects reports keyed by cover, keeping the first evidence seen.
struct Collector(HashMap<VertexSet, AssPrimeReport>);

impl Collector {
    fn with_minimal_covers(g: &SimpleGraph) -> Self {
        let mut c = Collector(HashMap::new());
        for f in g.minimal_covers() {
            c.0.insert(
                f.vertices(),
                AssPrimeReport {
                    prime: f,
                    kind: PrimeKind::Minimal,
                    evidence: Evidence::MinimalCover,
                },
            );
        }
        c
    }

    fn add_embedded(&mut self, f: Cover, evidence: impl FnOnce() -> Evidence) {
        self.0.entry(f.vertices()).or_insert_with(|| AssPrimeReport {
            prime: f,
            kind: PrimeKind::Embedded,
            evidence: evidence(),
        });
    }

    fn finish(self) -> Vec<AssPrimeReport> {
        let mut v: Vec<_> = self.0.into_values().collect();
        v.sort_by(|a, b| a.vertices().lex_cmp(&b.vertices()));
        v
    }
}

fn witness_certifies(g: &SimpleGraph, f: VertexSet, a: &ExponentVector, t: usize) -> bool {
    let support = a.support();
    is_t_saturating_on(g, a, t)
        && g.is_cover_minimal_over(f, g.closed_neighborhood(support))
        && g
            .core(f)
            .difference(support)
            .iter()
            .all(|i| neighborhood_condition(g, a, i, t))
}

/// Decides `P_F ∈ Ass(I^t)`. Minimal covers get [`Evidence::MinimalCover`];
/// otherwise the first witness `a` in (support, weights) order is returned,
/// searching `V_a ⊆ core(F)`, `a_i ≤ t - 1`, `Σ a_i ≤ 3(t - 1)`.
pub fn is_associated(g: &SimpleGraph, f: VertexSet, t: usize) -> Result<Option<Evidence>> {
    if t == 0 {
        return Err(Error::Rejected("t must be at least 1".into()));
    }
    if !f.is_subset(g.vertices()) || !g.is_cover(f) {
        return Err(Error::NotACover(f.to_string()));
    }
    if g.is_minimal_cover(f) {
        return Ok(Some(Evidence::MinimalCover));
    }
    if t == 1 {
        return Ok(None);
    }
    let search = SaturatingSearch::pruned(t);
    let mut supports: Vec<VertexSet> = g
        .core(f)
        .subsets()
        .filter(|u| g.every_component_has_odd_cycle(*u, search.odd_cycle_bound))
        .collect();
    supports.sort_by(VertexSet::lex_cmp);
    for u in supports {
        if !g.is_cover_minimal_over(f, g.closed_neighborhood(u)) {
            continue;
        }
        let mut found = None;
        for_each_weighting(g.n(), u, search.max_weight, search.max_total, &mut |a| {
            if found.is_none() && witness_certifies(g, f, a, t) {
                found = Some(a.clone());
            }
        });
        if let Some(a) = found {
            return Ok(Some(Evidence::Witness { exponents: a }));
        }
    }
    Ok(None)
}

/// `Ass(I^t)` from the general criterion, sorted by cover.
pub fn ass_primes(g: &SimpleGraph, t: usize) -> Vec<AssPrimeReport> {
    if t == 0 {
        return Vec::new();
    }
    let mut c = Collector::with_minimal_covers(g);
    for a in saturating_vectors(g, t) {
        let support = a.support();
        for f in g.covers_minimal_over(g.closed_neighborhood(support)) {
            if c.0.contains_key(&f.vertices()) {
                continue;
            }
            let core = g.core(f.vertices());
            if core
                .difference(support)
                .iter()
                .all(|i| neighborhood_condition(g, &a, i, t))
            {
                c.add_embedded(f, || Evidence::Witness { exponents: a.clone() });
            }
        }
    }
    c.finish()
}

fn ass_from_shapes(g: &SimpleGraph, shapes: &[(Shape, VertexSet)]) -> Vec<AssPrimeReport> {
    let mut c = Collector::with_minimal_covers(g);
    for &(shape, s) in shapes {
        for f in g.covers_minimal_over(g.closed_neighborhood(s)) {
            c.add_embedded(f, || Evidence::Shape { shape, vertices: s });
        }
    }
    c.finish()
}

/// `Ass(I^2)`: minimal covers, and covers minimal over `N[T]` for a
/// triangle `T`.
pub fn ass_primes_2(g: &SimpleGraph) -> Vec<AssPrimeReport> {
    let shapes: Vec<_> = g.triangles().into_iter().map(|t| (Shape::Triangle, t)).collect();
    ass_from_shapes(g, &shapes)
}

/// `Ass(I^3)`: minimal covers, and covers minimal over `N[S]` where `S`
/// carries one of the five [`Shape`]s as a (not necessarily induced)
/// subgraph.
pub fn ass_primes_3(g: &SimpleGraph) -> Vec<AssPrimeReport> {
    ass_from_shapes(g, &shapes_within(g, g.vertices()))
}

/// Vertex sets of the five shapes occurring as subgraphs inside `domain`,
/// ordered by shape and then lexicographically. A vertex set is listed
/// once per shape it carries.
pub fn shapes_within(g: &SimpleGraph, domain: VertexSet) -> Vec<(Shape, VertexSet)> {
    let tris: Vec<VertexSet> = g
        .triangles()
        .into_iter()
        .filter(|t| t.is_subset(domain))
        .collect();
    let mut out: Vec<(Shape, VertexSet)> = tris.iter().map(|&t| (Shape::Triangle, t)).collect();

    for &t in &tris {
        for i in t.iter() {
            for v in g.neighbors(i).intersection(domain).difference(t).iter() {
                out.push((Shape::EdgeTriangle, t.with(v)));
            }
        }
    }
    for (k, &t1) in tris.iter().enumerate() {
        for &t2 in &tris[k + 1..] {
            let shared = t1.intersection(t2).len();
            if shared == 0 && g.open_neighborhood(t1).intersection(t2).is_empty() {
                out.push((Shape::TwoTriangles, t1.union(t2)));
            } else if shared == 1 {
                out.push((Shape::Bowtie, t1.union(t2)));
            }
        }
    }
    for c in five_cycles_within(g, domain) {
        out.push((Shape::Pentagon, c));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.lex_cmp(&b.1)));
    out.dedup();
    out
}

/// Vertex sets of 5-cycles (not necessarily induced) inside `domain`.
fn five_cycles_within(g: &SimpleGraph, domain: VertexSet) -> Vec<VertexSet> {
    fn extend(
        g: &SimpleGraph,
        domain: VertexSet,
        start: usize,
        last: usize,
        used: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if used.len() == 5 {
            if g.has_edge(last, start) {
                out.push(used);
            }
            return;
        }
        for v in g.neighbors(last).intersection(domain).difference(used).iter() {
            if v > start {
                extend(g, domain, start, v, used.with(v), out);
            }
        }
    }
    let mut out = Vec::new();
    for s in domain.iter() {
        extend(g, domain, s, s, VertexSet::singleton(s), &mut out);
    }
    out.sort_by(VertexSet::lex_cmp);
    out.dedup();
    out
}

/// The six kinds of `x^a ∈ sat(I^3) \ I^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeSatCase {
    /// (i) a triangle weighted `(2,2,1)`.
    WeightedTriangle,
    /// (ii) spanned by a triangle and an edge meeting at a vertex of weight 2.
    EdgeTriangle,
    /// (iii) two non-adjacent triangles.
    TwoTriangles,
    /// (iv) spanned by two triangles sharing a vertex.
    Bowtie,
    /// (v) spanned by a pentagon.
    Pentagon,
    /// (vi) `K_4`, with every outside vertex adjacent to two of its vertices.
    K4,
}

impl ThreeSatCase {
    pub fn roman(self) -> &'static str {
        match self {
            ThreeSatCase::WeightedTriangle => "i",
            ThreeSatCase::EdgeTriangle => "ii",
            ThreeSatCase::TwoTriangles => "iii",
            ThreeSatCase::Bowtie => "iv",
            ThreeSatCase::Pentagon => "v",
            ThreeSatCase::K4 => "vi",
        }
    }
}

/// Structural classification of `x^a ∈ sat(I^3) \ I^3`: `V_a` must
/// dominate `g` and `Γ_a` must be one of the six weighted graphs.
pub fn classify_3_saturating(g: &SimpleGraph, a: &ExponentVector) -> Option<ThreeSatCase> {
    let u = a.support();
    if u.is_empty() || !g.is_dominating(u) {
        return None;
    }
    let w = |i: usize| a[i];
    let mut weights: Vec<u32> = u.iter().map(w).collect();
    weights.sort_unstable();
    let all_ones = weights.iter().all(|&x| x == 1);
    let has = |shape: Shape| shapes_within(g, u).contains(&(shape, u));
    match (u.len(), weights.as_slice()) {
        (3, [1, 2, 2]) if has(Shape::Triangle) => Some(ThreeSatCase::WeightedTriangle),
        (4, [1, 1, 1, 2]) => {
            let heavy = u.iter().find(|&i| w(i) == 2)?;
            let spanned = g.triangles().into_iter().any(|t| {
                t.is_subset(u)
                    && t.contains(heavy)
                    && u.difference(t).iter().all(|v| g.has_edge(v, heavy))
            });
            spanned.then_some(ThreeSatCase::EdgeTriangle)
        }
        (4, _) if all_ones => {
            let complete = u.iter().all(|i| g.neighbors(i).intersection(u).len() == 3);
            let outside_ok = g
                .vertices()
                .difference(u)
                .iter()
                .all(|v| g.neighbors(v).intersection(u).len() >= 2);
            (complete && outside_ok).then_some(ThreeSatCase::K4)
        }
        (5, _) if all_ones && has(Shape::Bowtie) => Some(ThreeSatCase::Bowtie),
        (5, _) if all_ones && has(Shape::Pentagon) => Some(ThreeSatCase::Pentagon),
        (6, _) if all_ones && has(Shape::TwoTriangles) => Some(ThreeSatCase::TwoTriangles),
        _ => None,
    }
}

/// `Ass^∞(I)`: minimal covers, and covers minimal over `N[U]` for sets `U`
/// whose every induced component has an odd cycle.
pub fn ass_infinity(g: &SimpleGraph) -> Vec<AssPrimeReport> {
    let mut c = Collector::with_minimal_covers(g);
    let mut us: Vec<VertexSet> = g
        .vertices()
        .subsets()
        .filter(|u| g.every_component_has_odd_cycle(*u, None))
        .collect();
    us.sort_by(VertexSet::lex_cmp);
    for u in us {
        for f in g.covers_minimal_over(g.closed_neighborhood(u)) {
            c.add_embedded(f, || Evidence::StableSet { vertices: u });
        }
    }
    c.finish()
}

/// Largest `s` such that the graph induced on `c` contains an induced
/// strongly s-saturating graph on `2s - 1` vertices, or `None` when `c`
/// has no odd cycle.
pub fn largest_strong_seed(g: &SimpleGraph, c: VertexSet) -> Option<(usize, VertexSet)> {
    let top = if c.len() % 2 == 1 { c.len() } else { c.len().saturating_sub(1) };
    for k in (3..=top).rev().step_by(2) {
        let mut best: Option<VertexSet> = None;
        for w in c.subsets().filter(|w| w.len() == k) {
            let s = k.div_ceil(2);
            if is_strongly_t_saturating_on(g, &ExponentVector::indicator(g.n(), w), s)
                && best.is_none_or(|b| w.lex_cmp(&b).is_lt())
            {
                best = Some(w);
            }
        }
        if let Some(w) = best {
            return Some((k.div_ceil(2), w));
        }
    }
    None
}

/// Memoised `s_i` over connected vertex sets.
#[derive(Default)]
struct SeedCache(HashMap<VertexSet, usize>);

impl SeedCache {
    fn get(&mut self, g: &SimpleGraph, c: VertexSet) -> Option<usize> {
        if let Some(&s) = self.0.get(&c) {
            return Some(s);
        }
        let (s, _) = largest_strong_seed(g, c)?;
        self.0.insert(c, s);
        Some(s)
    }
}

/// `s(U) = |U| - Σ s_i + 1` over the components of `Γ_U`, when every
/// component has an odd cycle.
pub fn s_of(g: &SimpleGraph, u: VertexSet) -> Option<usize> {
    s_of_cached(g, u, &mut SeedCache::default())
}

fn s_of_cached(g: &SimpleGraph, u: VertexSet, cache: &mut SeedCache) -> Option<usize> {
    if !g.every_component_has_odd_cycle(u, None) {
        return None;
    }
    let mut sum = 0;
    for c in g.components_within(u) {
        sum += cache.get(g, c)?;
    }
    Some(u.len() + 1 - sum)
}

/// `s(Γ)`, the maximum of `s(U)`; `1` for bipartite graphs. Bounds the
/// index from which `Ass(I^t)` is constant.
pub fn s_gamma(g: &SimpleGraph) -> usize {
    s_gamma_witness(g).map_or(1, |(s, _)| s)
}

/// `s(Γ)` with the first maximising `U` in (decreasing size, lex) order.
pub fn s_gamma_witness(g: &SimpleGraph) -> Option<(usize, VertexSet)> {
    let mut cache = SeedCache::default();
    let mut us: Vec<VertexSet> = g.vertices().subsets().collect();
    us.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.lex_cmp(b)));
    let mut best: Option<(usize, VertexSet)> = None;
    for u in us {
        if let Some(s) = s_of_cached(g, u, &mut cache) {
            if best.is_none_or(|(b, _)| s > b) {
                best = Some((s, u));
            }
        }
    }
    best
}

/// `depth R/I^t > 0`, i.e. the maximal ideal is not associated, for
/// `t ∈ {2, 3}`: no dominating triangle (`t = 2`), no dominating
/// subgraph of the five shapes (`t = 3`).
pub fn depth_positive(g: &SimpleGraph, t: usize) -> Result<bool> {
    let supports: Vec<VertexSet> = match t {
        2 => g.triangles(),
        3 => shapes_within(g, g.vertices()).into_iter().map(|(_, s)| s).collect(),
        _ => {
            return Err(Error::Unsupported(format!(
                "depth criterion is available for t = 2 and t = 3, not t = {t}"
            )))
        }
    };
    Ok(!supports.into_iter().any(|s| g.is_dominating(s)))
}

/// `Ass(I^t)` by the brute-force oracle. The zero ideal (no edges) is
/// itself prime and is reported as `P_∅`.
pub fn ass_primes_oracle(g: &SimpleGraph, t: usize) -> Result<Vec<AssPrimeReport>> {
    if t == 0 {
        return Err(Error::Rejected("t must be at least 1".into()));
    }
    if g.edge_count() == 0 {
        return Ok(vec![AssPrimeReport {
            prime: Cover::new(g, VertexSet::EMPTY)?,
            kind: PrimeKind::Minimal,
            evidence: Evidence::Oracle {
                monomial: ExponentVector::zeros(g.n()),
            },
        }]);
    }
    oracle::ass_primes_oracle(g, t)?
        .into_iter()
        .map(|(f, w)| {
            Ok(AssPrimeReport {
                prime: Cover::new(g, f)?,
                kind: if g.is_minimal_cover(f) {
                    PrimeKind::Minimal
                } else {
                    PrimeKind::Embedded
                },
                evidence: Evidence::Oracle { monomial: w },
            })
        })
        .collect()
}

/// `Ass(I^t)` by the chosen method.
pub fn ass_report(g: &SimpleGraph, t: usize, method: Method) -> Result<AssReport> {
    if t == 0 {
        return Err(Error::Rejected("t must be at least 1".into()));
    }
    let primes = match method {
        Method::Formula => ass_primes(g, t),
        Method::Oracle => ass_primes_oracle(g, t)?,
        Method::Classified => match t {
            1 => ass_primes(g, 1),
            2 => ass_primes_2(g),
            3 => ass_primes_3(g),
            _ => {
                return Err(Error::Unsupported(format!(
                    "the classified method covers t <= 3, not t = {t}"
                )))
            }
        },
    };
    Ok(AssReport { t, primes })
}

/// Sets `F` of a report list, for comparisons.
pub fn prime_sets(reports: &[AssPrimeReport]) -> Vec<VertexSet> {
    reports.iter().map(|r| r.vertices()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::saturation::in_sat_minus_power;

    fn sets(r: &[AssPrimeReport]) -> Vec<Vec<usize>> {
        r.iter().map(|p| p.vertices().to_one_based()).collect()
    }

    fn ev(a: &[u32]) -> ExponentVector {
        ExponentVector::new(a.to_vec())
    }

    fn square() -> SimpleGraph {
        SimpleGraph::cycle(4).unwrap()
    }

    fn k4() -> SimpleGraph {
        SimpleGraph::complete(4).unwrap()
    }

    #[test]
    fn is_associated_examples() {
        let g = tadpole();
        assert_eq!(is_associated(&g, g.vertices(), 2).unwrap(), None);
        assert_eq!(
            is_associated(&g, set(&[1, 2, 3, 4]), 2).unwrap(),
            Some(Evidence::Witness {
                exponents: ev(&[1, 1, 1, 0, 0])
            })
        );
        assert_eq!(
            is_associated(&triangle(), set(&[1, 2]), 1).unwrap(),
            Some(Evidence::MinimalCover)
        );
        assert!(matches!(
            is_associated(&triangle(), set(&[1]), 2),
            Err(Error::NotACover(_))
        ));
    }

    #[test]
    fn ass_primes_examples() {
        let tri = ass_primes(&triangle(), 2);
        assert_eq!(sets(&tri), vec![vec![1, 2], vec![1, 2, 3], vec![1, 3], vec![2, 3]]);
        let sq = ass_primes(&square(), 3);
        assert!(sq.iter().all(|p| p.kind == PrimeKind::Minimal));
        assert_eq!(sq.len(), 2);
        let g = tadpole();
        let got = ass_primes(&g, 2);
        let embedded: Vec<_> = got.iter().filter(|p| p.kind == PrimeKind::Embedded).collect();
        assert_eq!(embedded.len(), 1);
        assert_eq!(embedded[0].vertices(), set(&[1, 2, 3, 4]));
        for p in &got {
            assert!(p.verify(&g, 2), "{p:?}");
        }
    }

    #[test]
    fn closed_forms_examples() {
        assert!(sets(&ass_primes_2(&triangle())).contains(&vec![1, 2, 3]));
        assert!(ass_primes_2(&square()).iter().all(|p| p.kind == PrimeKind::Minimal));
        let g = tadpole();
        let two: Vec<_> = ass_primes_2(&g).into_iter().filter(|p| p.kind == PrimeKind::Embedded).collect();
        assert_eq!(sets(&two), vec![vec![1, 2, 3, 4]]);
        assert!(sets(&ass_primes_3(&bowtie())).contains(&vec![1, 2, 3, 4, 5]));
        assert!(sets(&ass_primes_3(&pentagon())).contains(&vec![1, 2, 3, 4, 5]));
        assert!(ass_primes_3(&square()).iter().all(|p| p.kind == PrimeKind::Minimal));
    }

    #[test]
    fn shapes_of_small_graphs() {
        let b = shapes_within(&bowtie(), bowtie().vertices());
        assert!(b.contains(&(Shape::Bowtie, bowtie().vertices())));
        assert!(!b.iter().any(|(s, _)| *s == Shape::Pentagon));
        assert_eq!(five_cycles_within(&pentagon(), pentagon().vertices()).len(), 1);
        // K5 has twelve 5-cycles but one vertex set
        let k5 = SimpleGraph::complete(5).unwrap();
        assert_eq!(five_cycles_within(&k5, k5.vertices()).len(), 1);
        let two = SimpleGraph::from_one_based(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]).unwrap();
        assert!(shapes_within(&two, two.vertices()).contains(&(Shape::TwoTriangles, two.vertices())));
        let joined = SimpleGraph::from_one_based(
            6,
            &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)],
        )
        .unwrap();
        assert!(!shapes_within(&joined, joined.vertices())
            .iter()
            .any(|(s, _)| *s == Shape::TwoTriangles));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_3_saturating(&triangle(), &ev(&[2, 2, 1])),
            Some(ThreeSatCase::WeightedTriangle)
        );
        assert_eq!(
            classify_3_saturating(&pentagon(), &ev(&[1; 5])),
            Some(ThreeSatCase::Pentagon)
        );
        assert_eq!(classify_3_saturating(&triangle(), &ev(&[1, 1, 1])), None);
        assert_eq!(classify_3_saturating(&k4(), &ev(&[1; 4])), Some(ThreeSatCase::K4));
        let paw = SimpleGraph::from_one_based(4, &[(1, 2), (1, 3), (2, 3), (1, 4)]).unwrap();
        assert_eq!(
            classify_3_saturating(&paw, &ev(&[2, 1, 1, 1])),
            Some(ThreeSatCase::EdgeTriangle)
        );
        assert_eq!(classify_3_saturating(&paw, &ev(&[1, 2, 1, 1])), None);
        assert_eq!(classify_3_saturating(&bowtie(), &ev(&[1; 5])), Some(ThreeSatCase::Bowtie));
        // K4 plus a vertex seeing only one K4 vertex: (vi) fails
        let k4_pendant =
            SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        assert_eq!(classify_3_saturating(&k4_pendant, &ev(&[1, 1, 1, 1, 0])), None);
        assert!(!in_sat_minus_power(&k4_pendant, &ev(&[1, 1, 1, 1, 0]), 3));
    }

    #[test]
    fn ass_infinity_examples() {
        assert!(ass_infinity(&square()).iter().all(|p| p.kind == PrimeKind::Minimal));
        assert!(sets(&ass_infinity(&triangle())).contains(&vec![1, 2, 3]));
        // Every U with an odd cycle in the bowtie has N[U] = V.
        let b = bowtie();
        let emb: Vec<_> = ass_infinity(&b).into_iter().filter(|p| p.kind == PrimeKind::Embedded).collect();
        assert_eq!(sets(&emb), vec![vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn s_gamma_examples() {
        assert_eq!(s_gamma(&square()), 1);
        assert_eq!(s_gamma(&SimpleGraph::path(4).unwrap()), 1);
        assert_eq!(s_gamma(&pentagon()), 3);
        assert_eq!(s_gamma(&bowtie()), 3);
        assert_eq!(s_gamma(&triangle()), 2);
        // three triangles sharing vertex 1: s = 4
        let fan = SimpleGraph::from_one_based(
            7,
            &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5), (1, 6), (1, 7), (6, 7)],
        )
        .unwrap();
        assert_eq!(s_gamma(&fan), 4);
        assert_eq!(largest_strong_seed(&pentagon(), pentagon().vertices()).unwrap().0, 3);
        assert_eq!(s_of(&bowtie(), set(&[1, 2, 3])), Some(2));
        assert_eq!(s_of(&bowtie(), set(&[2, 3])), None);
    }

    #[test]
    fn depth_examples() {
        assert!(!depth_positive(&triangle(), 2).unwrap());
        assert!(depth_positive(&SimpleGraph::path(3).unwrap(), 2).unwrap());
        assert!(!depth_positive(&pentagon(), 3).unwrap());
        assert!(depth_positive(&pentagon(), 2).unwrap());
        assert!(depth_positive(&tadpole(), 2).unwrap());
        assert!(matches!(depth_positive(&triangle(), 4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn oracle_reports_and_methods() {
        let g = tadpole();
        let o = ass_report(&g, 2, Method::Oracle).unwrap();
        let f = ass_report(&g, 2, Method::Formula).unwrap();
        let c = ass_report(&g, 2, Method::Classified).unwrap();
        assert_eq!(o.vertex_sets(), f.vertex_sets());
        assert_eq!(c.vertex_sets(), f.vertex_sets());
        assert!(!o.vertex_sets().contains(&g.vertices()));
        for p in o.primes.iter().chain(&c.primes) {
            assert!(p.verify(&g, 2));
        }
        let empty = SimpleGraph::empty(3).unwrap();
        assert_eq!(
            prime_sets(&ass_primes_oracle(&empty, 2).unwrap()),
            prime_sets(&ass_primes(&empty, 2))
        );
        assert!(ass_report(&g, 4, Method::Classified).is_err());
        let text = f.render(&g);
        assert!(text.contains("{1,2,3,4}"));
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.starts_with(r#"{"t":2,"primes":[{"vertices":[1,2,3,4],"kind":"embedded""#), "{json}");
        assert_eq!(prime_label(&triangle(), triangle().vertices()), "m");
    }
}
