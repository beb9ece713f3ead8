//! t-saturating and strongly t-saturating weighted graphs, and growing a
//! strong graph from an odd cycle one edge at a time.
//!
//!     cargo run --example saturating_graphs

use edgeideal::saturation::{
    build_strong, extend_by_edge, is_extendable, is_strongly_t_saturating_on, saturating_vectors,
};
use edgeideal::{ExponentVector, SimpleGraph, VertexSet};

fn main() -> edgeideal::Result<()> {
    let bowtie = SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])?;
    for t in 2..=3 {
        let found = saturating_vectors(&bowtie, t);
        println!("bowtie: {} weightings are {t}-saturating", found.len());
        for a in &found {
            let strong = is_strongly_t_saturating_on(&bowtie, a, t);
            println!("  a = ({a}) on {}{}", a.support(), if strong { "  strong" } else { "" });
        }
    }

    // A triangle is extendable at level 2; one pendant edge lifts it to level 3.
    let g = SimpleGraph::from_one_based(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])?;
    let b = ExponentVector::new(vec![1, 1, 1, 0]);
    println!("triangle extendable at t = {:?}", is_extendable(&g, &b));
    let a = extend_by_edge(&g, &b, (2, 3))?;
    println!("after adding 3-4: a = ({a}), extendable at t = {:?}", is_extendable(&g, &a));

    // The whole construction on a 7-vertex tree of triangles and paths.
    let g = SimpleGraph::from_one_based(7, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 7)])?;
    let seed: VertexSet = [0, 1, 2].into_iter().collect();
    let built = build_strong(&g, g.vertices(), seed)?;
    println!("grown from {seed}: a = ({}) is strongly {}-saturating", built.exponents, built.t);
    Ok(())
}
