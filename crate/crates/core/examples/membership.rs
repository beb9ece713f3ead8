//! Whether `x^a` lies in `I^t`, in its saturation, or strictly between,
//! decided through matching numbers and checked against the ideal itself.
//!
//!     cargo run --example membership

use edgeideal::oracle::{edge_ideal, membership};
use edgeideal::saturation::{in_power, in_sat_minus_power, in_saturation};
use edgeideal::{ExponentVector, SimpleGraph};

fn report(name: &str, g: &SimpleGraph, a: &[u32], t: usize) -> edgeideal::Result<()> {
    let a = ExponentVector::new(a.to_vec());
    let power = edge_ideal(g)?.power(t);
    let sat = power.saturate();
    println!(
        "{name:<9} t={t} a=({a}): in I^t {:<5} in sat {:<5} in sat \\ I^t {:<5} (ideal: {} / {})",
        in_power(g, &a, t),
        in_saturation(g, &a, t),
        in_sat_minus_power(g, &a, t),
        membership(&power, &a)?,
        membership(&sat, &a)?,
    );
    Ok(())
}

fn main() -> edgeideal::Result<()> {
    let triangle = SimpleGraph::from_one_based(3, &[(1, 2), (1, 3), (2, 3)])?;
    let pentagon = SimpleGraph::cycle(5)?;
    let tadpole = SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])?;

    report("triangle", &triangle, &[1, 1, 1], 2)?;
    report("triangle", &triangle, &[2, 2, 1], 2)?;
    report("triangle", &triangle, &[2, 2, 1], 3)?;
    report("pentagon", &pentagon, &[1, 1, 1, 1, 1], 3)?;
    // The triangle does not dominate vertex 5.
    report("tadpole", &tadpole, &[1, 1, 1, 0, 0], 2)?;
    report("tadpole", &tadpole, &[1, 1, 1, 1, 0], 2)?;
    Ok(())
}
