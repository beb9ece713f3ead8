//! `depth R/I^t > 0` for `t = 2, 3`, read off from dominating triangles and
//! the five shapes.
//!
//!     cargo run --example depth

use edgeideal::assoc::{depth_positive, shapes_within};
use edgeideal::SimpleGraph;

fn main() -> edgeideal::Result<()> {
    let graphs = [
        ("path P4", SimpleGraph::path(4)?),
        ("triangle", SimpleGraph::complete(3)?),
        ("tadpole", SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])?),
        ("bowtie", SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])?),
        ("pentagon", SimpleGraph::cycle(5)?),
    ];
    for (name, g) in &graphs {
        let shapes: Vec<String> = shapes_within(g, g.vertices())
            .into_iter()
            .filter(|(_, s)| g.is_dominating(*s))
            .map(|(shape, s)| format!("{shape} on {s}"))
            .collect();
        println!(
            "{name:<9} depth>0 at t=2: {:<5} t=3: {:<5} dominating shapes: [{}]",
            depth_positive(g, 2)?,
            depth_positive(g, 3)?,
            shapes.join(", ")
        );
    }
    Ok(())
}
