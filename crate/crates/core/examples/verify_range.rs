//! Re-checks the predicted structure for every prime in a small range.

use surface_actions::extensions::ClassifyOptions;
use surface_actions::verify::verify_range;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let summary = verify_range(7, 31, &ClassifyOptions::default())?;
    println!("primes {:?}: {} checks", summary.primes, summary.checks);
    for f in &summary.failures {
        println!("  q={} λ={}: {}", f.q, f.lambda, f.assertion);
    }
    for note in &summary.flags {
        println!("  flag: {note}");
    }
    Ok(())
}
