//! Generating vectors, braid moves and topological equivalence classes of actions.

mod enumerate;
mod orbits;
mod vector;

pub use enumerate::{count_generating_vectors, enumerate_generating_vectors};
pub use orbits::{are_equivalent, equivalence_orbits, ActionOrbit, OrbitSpace, SearchLimits};
pub use vector::{apply_automorphism, braid_move, braid_move_inverse, GeneratingVector};
