//! Compares the combinatorial engines with the ideal computation on every
//! labeled graph of a given size, or on a seeded sample.
//!
//!     cargo run --release --example census -- 5 3
//!     cargo run --release --example census -- 7 2 200

use edgeideal::census::{run_census, CensusOptions};

fn main() -> edgeideal::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("arguments are n, t and an optional sample size"))
        .collect();
    let (n, t) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(2));
    let opts = CensusOptions {
        sample: args.get(2).copied(),
        seed: 1,
        timing: true,
        ..CensusOptions::new(n, t)
    };
    let report = run_census(&opts)?;
    println!(
        "n = {n}, t = {t}: {} graphs, {} mismatches, {} ms",
        report.graphs_checked,
        report.mismatches.len(),
        report.elapsed.map_or(0, |d| d.as_millis())
    );
    for m in &report.mismatches {
        println!("{m:?}");
    }
    Ok(())
}
