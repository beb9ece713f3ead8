//! Exponent vectors of monomials, plain and signed.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// `a ∈ N^n`, the exponent vector of `x^a`; also the weights of `Γ_a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(a: Vec<u32>) -> Self {
        ExponentVector(a)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The 0/1 vector of a vertex set.
    pub fn indicator(n: usize, s: VertexSet) -> Self {
        ExponentVector((0..n).map(|i| s.contains(i) as u32).collect())
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut a = vec![0; n];
        a[i] = 1;
        ExponentVector(a)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `V_a = {i : a_i > 0}`.
    pub fn support(&self) -> VertexSet {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// `deg x^a`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `N_a(i)`: neighbours of `i` inside the support.
    pub fn neighbors_in_support(&self, g: &SimpleGraph, i: usize) -> VertexSet {
        g.neighbors(i).intersection(self.support())
    }

    /// `deg_a(i) = Σ_{j ∈ N_a(i)} a_j`.
    pub fn weighted_degree(&self, g: &SimpleGraph, i: usize) -> u32 {
        g.neighbors(i).iter().map(|j| self.0[j]).sum()
    }

    /// Copy with the coordinates in `s` set to zero.
    pub fn zeroed_on(&self, s: VertexSet) -> Self {
        ExponentVector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &x)| if s.contains(i) { 0 } else { x })
                .collect(),
        )
    }

    /// Restriction to the coordinates listed in `map` (new index → old index).
    pub fn restrict(&self, map: &[usize]) -> Self {
        ExponentVector(map.iter().map(|&i| self.0[i]).collect())
    }

    pub fn plus_unit(&self, i: usize) -> Self {
        let mut a = self.0.clone();
        a[i] += 1;
        ExponentVector(a)
    }

    /// `a - e_i`, saturating at zero.
    pub fn minus_unit(&self, i: usize) -> Self {
        let mut a = self.0.clone();
        a[i] = a[i].saturating_sub(1);
        ExponentVector(a)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(a: Vec<u32>) -> Self {
        ExponentVector(a)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Comma-separated, e.g. `1,1,1,0,0`.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_csv(s).map(ExponentVector)
    }
}

/// `a ∈ Z^n`; negative coordinates mark the set `G_a`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedExponentVector(Vec<i64>);

impl SignedExponentVector {
    pub fn new(a: Vec<i64>) -> Self {
        SignedExponentVector(a)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `G_a = {i : a_i < 0}`.
    pub fn negative_part(&self) -> VertexSet {
        (0..self.0.len()).filter(|&i| self.0[i] < 0).collect()
    }

    /// `a_G`: coordinates in `g` set to zero. Coordinates outside `g` must
    /// be non-negative, which holds whenever `G_a ⊆ g`.
    pub fn truncate(&self, g: VertexSet) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    if g.contains(i) {
                        0
                    } else {
                        u32::try_from(x).expect("negative coordinate outside G")
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for SignedExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for SignedExponentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_csv(s).map(SignedExponentVector)
    }
}

fn write_csv<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_csv<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(k, field)| {
            field.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("entry {} (`{}`) is not a valid integer", k + 1, field.trim()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let a: ExponentVector = "1, 2,0".parse().unwrap();
        assert_eq!(a.as_slice(), &[1, 2, 0]);
        assert_eq!(a.to_string(), "1,2,0");
        assert!("1,-1".parse::<ExponentVector>().is_err());
        assert!("1,x".parse::<ExponentVector>().is_err());
        let s: SignedExponentVector = "1,1,1,0,-1".parse().unwrap();
        assert_eq!(s.negative_part(), VertexSet::singleton(4));
        assert_eq!(s.truncate(s.negative_part()).as_slice(), &[1, 1, 1, 0, 0]);
    }

    #[test]
    fn support_and_degrees() {
        let g = SimpleGraph::complete(3).unwrap();
        let a = ExponentVector::new(vec![2, 0, 1]);
        assert_eq!(a.support().to_vec(), vec![0, 2]);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.weighted_degree(&g, 1), 3);
        assert_eq!(a.neighbors_in_support(&g, 0).to_vec(), vec![2]);
    }
}
