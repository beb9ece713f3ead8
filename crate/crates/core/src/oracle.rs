//! Brute-force monomial ideal arithmetic, independent of the matching
//! criteria: powers, colon ideals, saturation, membership and associated
//! primes through monomial witnesses.
//!
//! Monomials are packed one byte per variable into a `u64`, so ideals here
//! live in at most 8 variables with exponents below 128. That is ample for
//! the census sizes this is meant to check.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::graph::{SimpleGraph, VertexSet};

/// Largest number of variables the oracle handles.
pub const MAX_VARS: usize = 8;
const MAX_EXPONENT: u32 = 127;
const HIGH: u64 = 0x8080_8080_8080_8080;

/// A monomial packed as eight 7-bit exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Oversize(format!(
                "{} variables; the oracle handles at most {MAX_VARS}",
                exps.len()
            )));
        }
        let mut m = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::Oversize(format!(
                    "exponent {e} exceeds {MAX_EXPONENT}"
                )));
            }
            m |= (e as u64) << (8 * i);
        }
        Ok(Monomial(m))
    }

    pub fn var(i: usize) -> Self {
        Monomial(1u64 << (8 * i))
    }

    pub fn exponent(self, i: usize) -> u32 {
        (self.0 >> (8 * i) & 0x7f) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    pub fn support(self) -> VertexSet {
        (0..MAX_VARS).filter(|&i| self.exponent(i) > 0).collect()
    }

    /// Per-byte mask: `0xff` where `self ≥ other`, else `0`.
    fn ge_mask(self, other: Monomial) -> u64 {
        let flags = ((self.0 | HIGH) - other.0) & HIGH;
        (flags >> 7) * 0xff
    }

    /// `self | other`.
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH) - self.0) & HIGH == HIGH
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial(self.0 & m | other.0 & !m)
    }

    /// `self / gcd(self, other)`: exponentwise `max(self - other, 0)`.
    pub fn quotient(self, other: Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((((self.0 | HIGH) - other.0) ^ HIGH) & m)
    }

    fn is_variable(self) -> Option<usize> {
        (self.0 != 0 && self.0.is_power_of_two() && self.0.trailing_zeros().is_multiple_of(8))
            .then(|| self.0.trailing_zeros() as usize / 8)
    }
}

/// Product; exponents must stay below 128.
impl std::ops::Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        let sum = self.0 + other.0;
        debug_assert_eq!(sum & HIGH, 0, "exponent overflow");
        Monomial(sum)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents(MAX_VARS))
    }
}

/// A monomial ideal stored by its minimal generators, sorted by degree and
/// then by packed value. The zero ideal has no generators; the unit ideal
/// is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.gens.iter().map(|m| m.exponents(self.nvars)))
            .finish()
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.gens.iter().map(|m| m.exponents(self.nvars)))
    }
}

impl MonomialIdeal {
    /// Ideal generated by `gens` (minimalised).
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::Oversize(format!(
                "{nvars} variables; the oracle handles at most {MAX_VARS}"
            )));
        }
        Ok(Self::from_raw(nvars, gens))
    }

    pub fn from_exponents(nvars: usize, gens: &[ExponentVector]) -> Result<Self> {
        let packed = gens
            .iter()
            .map(|a| Monomial::new(a.as_slice()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, packed)
    }

    fn from_raw(nvars: usize, gens: Vec<Monomial>) -> Self {
        let ideal = MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        };
        #[cfg(debug_assertions)]
        ideal.assert_antichain();
        ideal
    }

    #[cfg(debug_assertions)]
    fn assert_antichain(&self) {
        if self.gens.len() <= 256 {
            for (i, a) in self.gens.iter().enumerate() {
                for b in &self.gens[i + 1..] {
                    assert!(!a.divides(*b) && !b.divides(*a), "generators not minimal");
                }
            }
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::ONE],
        }
    }

    /// `P_F = (x_i : i ∈ F)`.
    pub fn prime(nvars: usize, f: VertexSet) -> Self {
        Self::from_raw(nvars, f.iter().map(Monomial::var).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn generator_exponents(&self) -> Vec<ExponentVector> {
        self.gens
            .iter()
            .map(|m| ExponentVector::new(m.exponents(self.nvars)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial::ONE)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    /// Least common multiple of the generators.
    pub fn lcm(&self) -> Monomial {
        self.gens.iter().fold(Monomial::ONE, |acc, &g| acc.lcm(g))
    }

    /// `J^t`, from the multisets of `t` generators.
    pub fn power(&self, t: usize) -> MonomialIdeal {
        if t == 0 {
            return Self::unit(self.nvars);
        }
        let mut layer = vec![(Monomial::ONE, 0usize)];
        for _ in 0..t {
            let mut next = Vec::with_capacity(layer.len() * self.gens.len());
            for &(m, from) in &layer {
                for (k, &g) in self.gens.iter().enumerate().skip(from) {
                    next.push((m * g, k));
                }
            }
            layer = next;
        }
        Self::from_raw(self.nvars, layer.into_iter().map(|(m, _)| m).collect())
    }

    /// `J : w`.
    pub fn colon_monomial(&self, w: Monomial) -> MonomialIdeal {
        Self::from_raw(self.nvars, self.gens.iter().map(|g| g.quotient(w)).collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::from_raw(self.nvars, gens)
    }

    /// `J : m = ∩_i J : x_i`.
    pub fn colon_maximal(&self) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for i in 0..self.nvars {
            let q = self.colon_monomial(Monomial::var(i));
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| Self::unit(self.nvars))
    }

    /// `sat(J) = ∪_k J : m^k`, by iterating `K ← K : m` to a fixpoint.
    pub fn saturate(&self) -> MonomialIdeal {
        let mut k = self.clone();
        loop {
            let next = k.colon_maximal();
            if next == k {
                return k;
            }
            k = next;
        }
    }

    /// `sat(J) = ∩_i J : x_i^∞`, where `J : x_i^∞` drops `x_i` from every
    /// generator. Same ideal as [`MonomialIdeal::saturate`], computed
    /// without the fixpoint loop.
    pub fn saturate_by_variables(&self) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for i in 0..self.nvars {
            let mask = !(0xffu64 << (8 * i));
            let q = Self::from_raw(
                self.nvars,
                self.gens.iter().map(|g| Monomial(g.0 & mask)).collect(),
            );
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| Self::unit(self.nvars))
    }

    /// If `J : w` is a monomial prime `P_F`, returns `F`.
    pub fn colon_prime(&self, w: Monomial) -> Option<VertexSet> {
        let mut f = VertexSet::EMPTY;
        let mut rest = Vec::new();
        for &g in &self.gens {
            let q = g.quotient(w);
            if q == Monomial::ONE {
                return None;
            }
            match q.is_variable() {
                Some(i) => f.insert(i),
                None => rest.push(q),
            }
        }
        if f.is_empty() {
            return None;
        }
        rest.iter()
            .all(|q| !q.support().intersection(f).is_empty())
            .then_some(f)
    }

    /// Associated primes `P_F = J : w` over all divisors `w` of the lcm of
    /// the generators, each with its first witness in the sweep order.
    pub fn associated_primes(&self) -> Result<Vec<(VertexSet, Monomial)>> {
        if self.is_zero() {
            return Err(Error::Rejected(
                "the zero ideal has no associated primes of this form".into(),
            ));
        }
        let top = self.lcm().exponents(self.nvars);
        let mut found: Vec<(VertexSet, Monomial)> = Vec::new();
        let mut digits = vec![0u32; self.nvars];
        loop {
            let w = Monomial::new(&digits).expect("bounded by the lcm");
            if let Some(f) = self.colon_prime(w) {
                if !found.iter().any(|(g, _)| *g == f) {
                    found.push((f, w));
                }
            }
            // mixed-radix increment
            let mut k = 0;
            loop {
                if k == self.nvars {
                    found.sort_by(|a, b| a.0.lex_cmp(&b.0));
                    return Ok(found);
                }
                if digits[k] < top[k] {
                    digits[k] += 1;
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }
}

/// Keeps the inclusion-minimal monomials, sorted by degree then value.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by_key(|m| (m.degree(), m.0));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    kept
}

/// The edge ideal `I(Γ) = (x_i x_j : {i,j} ∈ Γ)`.
pub fn edge_ideal(g: &SimpleGraph) -> Result<MonomialIdeal> {
    if g.n() > MAX_VARS {
        return Err(Error::Oversize(format!(
            "{} vertices; the oracle handles at most {MAX_VARS}",
            g.n()
        )));
    }
    Ok(MonomialIdeal::from_raw(
        g.n(),
        g.edges()
            .map(|(u, v)| Monomial::var(u) * Monomial::var(v))
            .collect(),
    ))
}

/// `x^a ∈ J`.
pub fn membership(j: &MonomialIdeal, a: &ExponentVector) -> Result<bool> {
    Ok(j.contains(Monomial::new(a.as_slice())?))
}

/// `Ass(I^t)` for the edge ideal of `g`, as vertex sets with witnesses.
pub fn ass_primes_oracle(g: &SimpleGraph, t: usize) -> Result<Vec<(VertexSet, ExponentVector)>> {
    let power = edge_ideal(g)?.power(t);
    // The lcm of the generators of I^t has exponent t at every
    // non-isolated vertex and 0 elsewhere, so the sweep has (t+1)^n points.
    debug_assert!({
        let top = power.lcm();
        (0..g.n()).all(|i| {
            let want = if g.degree(i) > 0 { t as u32 } else { 0 };
            power.is_zero() || top.exponent(i) == want
        })
    });
    Ok(power
        .associated_primes()?
        .into_iter()
        .map(|(f, w)| (f, ExponentVector::new(w.exponents(g.n()))))
        .collect())
}
