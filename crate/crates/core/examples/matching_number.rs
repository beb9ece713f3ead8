//! Matching numbers of vertex-weighted graphs: a vertex of weight `w` may
//! lie on up to `w` edges of a matching, and edges may repeat.
//!
//!     cargo run --example matching_number

use edgeideal::matching::{has_augmenting_walk, maximum_matching, nu, nu_minus};
use edgeideal::{SimpleGraph, VertexSet, WeightedGraph};

fn main() -> edgeideal::Result<()> {
    let triangle = SimpleGraph::from_one_based(3, &[(1, 2), (1, 3), (2, 3)])?;
    for w in [[1, 1, 1], [2, 2, 1], [2, 2, 2], [3, 1, 1]] {
        let h = WeightedGraph::new(triangle.clone(), w.to_vec())?;
        let m = maximum_matching(&h);
        let shown: Vec<String> = m.edges().iter().map(|&(u, v)| format!("{}{}", u + 1, v + 1)).collect();
        println!(
            "triangle weights {w:?}: nu = {}, matching [{}], augmenting walk: {}",
            nu(&h),
            shown.join(" "),
            has_augmenting_walk(&h, &m)?
        );
    }

    // Deleting vertices: nu(H - N).
    let h = WeightedGraph::new(triangle, vec![1, 1, 1])?;
    for n in [VertexSet::singleton(0), [1, 2].into_iter().collect()] {
        println!("nu(H - {n}) = {}", nu_minus(&h, n));
    }

    // Gamma_a keeps the vertices with a_i > 0.
    let pentagon = SimpleGraph::cycle(5)?;
    let a = [1, 0, 2, 1, 1];
    let h = WeightedGraph::induced(&pentagon, &a);
    println!("pentagon with a = {a:?}: {} vertices kept, nu = {}", h.n(), nu(&h));
    Ok(())
}
