//! Splitting generating vectors into topological equivalence classes.

use surface_actions::actions::{braid_move, OrbitSpace, SearchLimits};
use surface_actions::group::GroupSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (spec, sig) in [
        (GroupSpec::new(11, 5, 3, false)?, "0;5,5,5"),
        (GroupSpec::new(7, 6, 3, false)?, "0;2,2,3,3"),
        (GroupSpec::new(7, 6, 3, false)?, "0;3,6,6"),
        (GroupSpec::new(7, 6, 3, true)?, "0;2,6,6"),
    ] {
        let space = OrbitSpace::build(spec, &sig.parse()?, SearchLimits::default())?;
        println!("{spec} {sig}: {} vectors in {} orbits", space.total_vectors(), space.orbit_count());
        for (k, orbit) in space.orbits().iter().enumerate() {
            let v = &orbit.representative;
            let moved = braid_move(v, 1)?;
            assert_eq!(space.orbit_of(&moved)?, k);
            let images: Vec<String> = v.period_images().iter().map(ToString::to_string).collect();
            println!("  orbit {k}: {} vectors, representative {}", orbit.size, images.join(" "));
        }
    }
    Ok(())
}
