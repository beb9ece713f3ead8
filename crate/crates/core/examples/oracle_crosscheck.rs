//! The monomial-ideal engine on its own: powers, colons, two saturation
//! routes, and associated primes by a divisor sweep.
//!
//!     cargo run --example oracle_crosscheck

use edgeideal::assoc::{ass_primes, prime_sets};
use edgeideal::oracle::{ass_primes_oracle, edge_ideal, Monomial};
use edgeideal::SimpleGraph;

fn main() -> edgeideal::Result<()> {
    let g = SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])?;
    let i = edge_ideal(&g)?;
    println!("I   = {i:?}");
    for t in 2..=3 {
        let power = i.power(t);
        let sat = power.saturate();
        assert_eq!(sat, power.saturate_by_variables());
        let extra: Vec<_> = sat
            .generators()
            .iter()
            .filter(|m| !power.contains(**m))
            .map(|m| m.exponents(g.n()))
            .collect();
        println!("I^{t} has {} generators, sat(I^{t}) adds {extra:?}", power.generators().len());
    }

    let square = i.power(2);
    let w = Monomial::new(&[1, 1, 1, 0, 0])?;
    println!("I^2 : x1x2x3 = {:?}", square.colon_monomial(w));
    println!("prime of I^2 : x1x2x3 = {:?}", square.colon_prime(w));

    for t in 1..=3 {
        let sweep: Vec<_> = ass_primes_oracle(&g, t)?.into_iter().map(|(f, _)| f).collect();
        assert_eq!(sweep, prime_sets(&ass_primes(&g, t)));
        let shown: Vec<String> = sweep.iter().map(|f| f.to_string()).collect();
        println!("Ass(I^{t}) = {}", shown.join(" "));
    }
    Ok(())
}
