//! Candidate signatures for actions of order λ(g − 1), with their areas.

use surface_actions::geometry::{enumerate_signatures, hyperbolic_area, teichmuller_dimension};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (genus, lambda) in [(12, 5), (8, 6), (8, 3), (14, 6)] {
        println!("genus {genus}, order {lambda}(g-1):");
        for s in enumerate_signatures(genus, lambda)? {
            println!("  {:<16} area/2π = {:<6} Teichmüller dim {}", s.to_string(), hyperbolic_area(&s)?, teichmuller_dimension(&s));
        }
    }
    // A composite q is rejected.
    println!("{:?}", enumerate_signatures(9, 5).unwrap_err());
    Ok(())
}
