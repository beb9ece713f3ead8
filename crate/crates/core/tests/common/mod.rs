#![allow(dead_code)]

use edgeideal::census::pair_count;
use edgeideal::{ExponentVector, SimpleGraph};
use proptest::prelude::*;

/// Random graphs on `1..=max_n` vertices.
pub fn graphs(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = pair_count(n);
        let mask = if pairs == 0 { 0 } else { bits & (u64::MAX >> (64 - pairs)) };
        SimpleGraph::from_edge_mask(n, mask)
    })
}

/// A random graph with an exponent vector of matching length.
pub fn graph_and_vector(max_n: usize, max_entry: u32) -> impl Strategy<Value = (SimpleGraph, ExponentVector)> {
    graphs(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), prop::collection::vec(0..=max_entry, n).prop_map(ExponentVector::new))
    })
}

/// Calls `f` on every vector in `[lo..=hi]^n`.
pub fn for_each_vector(n: usize, lo: i64, hi: i64, f: &mut dyn FnMut(&[i64])) {
    let mut a = vec![lo; n];
    loop {
        f(&a);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            if a[k] < hi {
                a[k] += 1;
                break;
            }
            a[k] = lo;
            k += 1;
        }
    }
}

pub fn unsigned(a: &[i64]) -> ExponentVector {
    ExponentVector::new(a.iter().map(|&x| x as u32).collect())
}
