//! Irreducible representations, the 𝔍 criterion, admissible collections and
//! isogeny decompositions of Jacobians.

mod cyclotomic;
mod decomposition;
mod irreps;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use decomposition::{
    admissibility_table, check_admissible, decompose_jacobian, element_word, fixed_subspace_dim,
    relevant_representations, subgroup_label, surface_genus, AdmissibilityRow, BuiltinCollection,
    DecompositionReport, DeviationNote, Factor,
};
pub use irreps::{character_value, inner_product, irreducible_representations, orbit_labels, Irrep, IrrepKind};
