//! Exact arithmetic in the metacyclic family (C_n ⋊_r C_m) × C_2^ε.

mod automorphism;
mod context;
mod spec;
mod subgroup;
mod table;

pub use automorphism::{
    automorphism_group, automorphism_group_bounded, GroupAutomorphism, DEFAULT_AUTOMORPHISM_BOUND,
};
pub(crate) use automorphism::{embeddings, images_permutation};
pub use context::GroupContext;
pub use spec::{GroupElement, GroupSpec};
pub use subgroup::{generated_subgroup, Subgroup};
pub use table::{CayleyTable, ConjugacyData};

use crate::error::Result;

pub fn build_group(n: u32, m: u32, r: u32, central: bool) -> Result<GroupSpec> {
    GroupSpec::new(n, m, r, central)
}

pub use crate::arith::root_of_order;

pub fn multiply(spec: &GroupSpec, x: GroupElement, y: GroupElement) -> GroupElement {
    spec.multiply(x, y)
}

pub fn invert(spec: &GroupSpec, x: GroupElement) -> GroupElement {
    spec.invert(x)
}

pub fn element_order(spec: &GroupSpec, x: GroupElement) -> u32 {
    spec.element_order(x)
}

/// Conjugacy classes as sorted element lists, ordered by their minimal element.
pub fn conjugacy_classes(spec: &GroupSpec) -> Vec<Vec<GroupElement>> {
    let table = CayleyTable::new(*spec);
    ConjugacyData::new(&table)
        .classes
        .iter()
        .map(|c| c.iter().map(|&x| table.element(x)).collect())
        .collect()
}

/// Whether two specs describe isomorphic groups.
pub fn is_isomorphic(x: &GroupSpec, y: &GroupSpec) -> bool {
    if x.order() != y.order() {
        return false;
    }
    let table = CayleyTable::new(*y);
    let all: Vec<u32> = (0..table.size() as u32).collect();
    !embeddings(&table, *x, &all, true).is_empty()
}
