//! Associated primes of `I^t` by the general criterion, by the closed forms
//! for `t = 2, 3`, and by the brute-force ideal computation.
//!
//!     cargo run --example associated_primes

use edgeideal::assoc::{ass_report, is_associated, Method};
use edgeideal::SimpleGraph;

fn main() -> edgeideal::Result<()> {
    let graphs = [
        ("tadpole", SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])?),
        ("bowtie", SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])?),
        ("pentagon", SimpleGraph::cycle(5)?),
    ];
    for (name, g) in &graphs {
        for t in 2..=3 {
            let formula = ass_report(g, t, Method::Formula)?;
            let classified = ass_report(g, t, Method::Classified)?;
            let oracle = ass_report(g, t, Method::Oracle)?;
            assert_eq!(formula.vertex_sets(), classified.vertex_sets());
            assert_eq!(formula.vertex_sets(), oracle.vertex_sets());
            println!("{name}, t = {t}:");
            print!("{}", formula.render(g));
        }
    }

    // One prime at a time, with the weighting that certifies it.
    let (_, tadpole) = &graphs[0];
    let f = tadpole.vertices().without(4);
    println!("P_{f} in Ass(I^2): {:?}", is_associated(tadpole, f, 2)?);
    let json = serde_json::to_string(&ass_report(tadpole, 2, Method::Formula)?).expect("serializes");
    println!("{json}");
    Ok(())
}
