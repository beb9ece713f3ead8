//! Facets of the degree complexes of `I^t`, which determine its local
//! cohomology in each degree `a` (negative entries allowed).
//!
//!     cargo run --example facets

use edgeideal::saturation::facets_delta;
use edgeideal::{SignedExponentVector, SimpleGraph};

fn main() -> edgeideal::Result<()> {
    let tadpole = SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])?;
    for (a, t) in [
        (vec![1, 1, 1, 0, 0], 2),
        (vec![0, 0, 0, 0, 0], 2),
        (vec![0, 0, -1, 0, 0], 2),
        (vec![1, 1, 1, 0, 0], 3),
        (vec![-1, 0, 0, 0, -1], 1),
    ] {
        let a = SignedExponentVector::new(a);
        let facets: Vec<String> = facets_delta(&tadpole, &a, t).iter().map(|f| f.to_string()).collect();
        println!("t = {t}, a = ({a}): [{}]", facets.join(", "));
    }
    Ok(())
}
