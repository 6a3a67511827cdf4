use std::sync::Arc;

use super::automorphism::automorphism_generators;
use super::spec::GroupSpec;
use super::table::{CayleyTable, ConjugacyData};

/// Everything the searches need about one group, computed once and shared.
#[derive(Debug)]
pub struct GroupContext {
    table: CayleyTable,
    conjugacy: ConjugacyData,
    automorphism_generators: Vec<Vec<u32>>,
    center_order: usize,
}

impl GroupContext {
    pub fn new(spec: GroupSpec) -> Arc<Self> {
        let table = CayleyTable::new(spec);
        let conjugacy = ConjugacyData::new(&table);
        let automorphism_generators = automorphism_generators(&table);
        let center_order = conjugacy.center().len();
        Arc::new(GroupContext { table, conjugacy, automorphism_generators, center_order })
    }

    pub fn spec(&self) -> GroupSpec {
        self.table.spec()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conjugacy
    }

    /// Generators of Aut(G) as permutations of element indices.
    pub fn automorphism_generators(&self) -> &[Vec<u32>] {
        &self.automorphism_generators
    }

    pub fn center_order(&self) -> usize {
        self.center_order
    }

    /// Size of every inner-automorphism class of generating tuples.
    pub fn inner_class_size(&self) -> usize {
        self.table.size() / self.center_order
    }
}
