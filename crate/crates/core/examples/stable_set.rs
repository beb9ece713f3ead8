//! The stable set of associated primes and the index `s(G)` from which
//! `Ass(I^t)` no longer changes.
//!
//!     cargo run --example stable_set

use edgeideal::assoc::{ass_infinity, ass_primes, prime_label, prime_sets, s_gamma_witness};
use edgeideal::SimpleGraph;

fn main() -> edgeideal::Result<()> {
    // Triangles sharing vertex 1, then a pentagon with a pendant path.
    let fan = SimpleGraph::from_one_based(7, &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5), (1, 6), (1, 7), (6, 7)])?;
    let tail = SimpleGraph::from_one_based(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7)])?;
    for (name, g) in [("three-triangle fan", fan), ("pentagon with tail", tail)] {
        let stable = ass_infinity(&g);
        let (s, u) = s_gamma_witness(&g).expect("not bipartite");
        println!("{name}: s(G) = {s}, attained at U = {u}");
        for p in &stable {
            println!("  {}", prime_label(&g, p.vertices()));
        }
        for t in 1..=s {
            let n = ass_primes(&g, t).len();
            println!("  |Ass(I^{t})| = {n} of {}", stable.len());
        }
        assert_eq!(prime_sets(&ass_primes(&g, s)), prime_sets(&stable));
    }
    Ok(())
}
