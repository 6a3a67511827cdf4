use serde::{Deserialize, Serialize};

use super::spec::{GroupElement, GroupSpec};

/// A subgroup stored as its sorted element set plus the generators it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    parent: GroupSpec,
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
}

impl Subgroup {
    pub fn parent(&self) -> GroupSpec {
        self.parent
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub(crate) fn indices(&self) -> Vec<u32> {
        self.elements.iter().map(|&e| self.parent.index_of(e) as u32).collect()
    }

    /// g H g⁻¹
    pub fn conjugate_by(&self, g: GroupElement) -> Subgroup {
        let spec = self.parent;
        let mut elements: Vec<_> = self.elements.iter().map(|&x| spec.conjugate(g, x)).collect();
        elements.sort_unstable();
        let generators = self.generators.iter().map(|&x| spec.conjugate(g, x)).collect();
        Subgroup { parent: spec, elements, generators }
    }

    pub fn is_conjugate_to(&self, other: &Subgroup) -> bool {
        if self.parent != other.parent || self.order() != other.order() {
            return false;
        }
        self.parent
            .elements()
            .any(|g| self.conjugate_by(g).elements == other.elements)
    }
}

/// Smallest subgroup containing `gens`.
pub fn generated_subgroup(spec: GroupSpec, gens: &[GroupElement]) -> Subgroup {
    let mut elements = vec![spec.identity()];
    let mut seen = std::collections::HashSet::from([spec.identity()]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        head += 1;
        for &g in gens {
            let y = spec.multiply(x, g);
            if seen.insert(y) {
                elements.push(y);
            }
        }
    }
    elements.sort_unstable();
    Subgroup { parent: spec, elements, generators: gens.to_vec() }
}
