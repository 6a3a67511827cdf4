use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::spec::{GroupElement, GroupSpec};
use super::table::CayleyTable;
use crate::error::{Error, Result};

pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 4096;

/// An automorphism given by the images of a, the twisting generator and z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupAutomorphism {
    pub image_of_a: GroupElement,
    pub image_of_twist_gen: GroupElement,
    pub image_of_z: GroupElement,
}

impl GroupAutomorphism {
    pub fn identity(spec: GroupSpec) -> Self {
        GroupAutomorphism {
            image_of_a: spec.a(),
            image_of_twist_gen: spec.twist_generator(),
            image_of_z: spec.z(),
        }
    }

    /// a^i t^j z^k ↦ A^i T^j Z^k
    pub fn apply(&self, spec: GroupSpec, x: GroupElement) -> GroupElement {
        let p = spec.power(self.image_of_a, x.base as i64);
        let q = spec.power(self.image_of_twist_gen, x.twist as i64);
        let r = spec.power(self.image_of_z, x.central as i64);
        spec.multiply(spec.multiply(p, q), r)
    }

    /// `self ∘ other`
    pub fn compose(&self, spec: GroupSpec, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            image_of_a: self.apply(spec, other.image_of_a),
            image_of_twist_gen: self.apply(spec, other.image_of_twist_gen),
            image_of_z: self.apply(spec, other.image_of_z),
        }
    }

    pub(crate) fn permutation(&self, table: &CayleyTable) -> Vec<u32> {
        images_permutation(
            table,
            table.spec(),
            table.index(self.image_of_a),
            table.index(self.image_of_twist_gen),
            table.index(self.image_of_z),
        )
        .expect("automorphism images define a bijection")
    }
}

/// For a homomorphism `source → target` given by generator images, the image
/// of every source element (in source index order), or `None` if not injective.
pub(crate) fn images_permutation(
    target: &CayleyTable,
    source: GroupSpec,
    a: u32,
    t: u32,
    z: u32,
) -> Option<Vec<u32>> {
    let a_pows: Vec<u32> = std::iter::successors(Some(0u32), |&x| Some(target.mul(x, a)))
        .take(source.base_order() as usize)
        .collect();
    let t_pows: Vec<u32> = std::iter::successors(Some(0u32), |&x| Some(target.mul(x, t)))
        .take(source.twist_order() as usize)
        .collect();
    let z_pows: &[u32] = if source.has_central_involution() { &[0, z] } else { &[0] };
    let mut seen = vec![false; target.size()];
    let mut out = Vec::with_capacity(source.order());
    for &ap in &a_pows {
        for &tp in &t_pows {
            let at = target.mul(ap, tp);
            for &zp in z_pows {
                let y = target.mul(at, zp);
                if std::mem::replace(&mut seen[y as usize], true) {
                    return None;
                }
                out.push(y);
            }
        }
    }
    Some(out)
}

/// Every injective homomorphism from `source` into `target` whose image lies in `allowed`.
///
/// Candidate generator images are filtered by exact order and the defining
/// relations of `source`; injectivity is checked on the full image.
pub(crate) fn embeddings(
    target: &CayleyTable,
    source: GroupSpec,
    allowed: &[u32],
    first_only: bool,
) -> Vec<(u32, u32, u32)> {
    let n = source.base_order();
    let m = source.twist_order();
    let r = source.twist() as i64;
    let a_cands: Vec<u32> = allowed.iter().copied().filter(|&x| target.order_of(x) == n).collect();
    let t_cands: Vec<u32> = allowed.iter().copied().filter(|&x| target.order_of(x) == m).collect();
    let z_cands: Vec<u32> = if source.has_central_involution() {
        allowed.iter().copied().filter(|&x| target.order_of(x) == 2).collect()
    } else {
        vec![0]
    };
    let mut found = Vec::new();
    for &a in &a_cands {
        let a_r = target.pow(a, r);
        for &t in &t_cands {
            if target.conj(t, a) != a_r {
                continue;
            }
            for &z in &z_cands {
                if source.has_central_involution()
                    && (target.mul(z, a) != target.mul(a, z) || target.mul(z, t) != target.mul(t, z))
                {
                    continue;
                }
                if images_permutation(target, source, a, t, z).is_some() {
                    found.push((a, t, z));
                    if first_only {
                        return found;
                    }
                }
            }
        }
    }
    found
}

/// All automorphisms of the group, by brute force over generator images.
pub fn automorphism_group(spec: GroupSpec) -> Result<Vec<GroupAutomorphism>> {
    automorphism_group_bounded(spec, DEFAULT_AUTOMORPHISM_BOUND)
}

pub fn automorphism_group_bounded(spec: GroupSpec, bound: usize) -> Result<Vec<GroupAutomorphism>> {
    if spec.order() > bound {
        return Err(Error::BoundExceeded { what: format!("group order {}", spec.order()), bound });
    }
    let table = CayleyTable::new(spec);
    Ok(automorphisms_with_table(&table))
}

pub(crate) fn automorphisms_with_table(table: &CayleyTable) -> Vec<GroupAutomorphism> {
    let all: Vec<u32> = (0..table.size() as u32).collect();
    let mut auts: Vec<GroupAutomorphism> = embeddings(table, table.spec(), &all, false)
        .into_iter()
        .map(|(a, t, z)| GroupAutomorphism {
            image_of_a: table.element(a),
            image_of_twist_gen: table.element(t),
            image_of_z: table.element(z),
        })
        .collect();
    auts.sort_unstable();
    auts
}

/// A small generating set of Aut(G), as permutations of element indices.
pub(crate) fn automorphism_generators(table: &CayleyTable) -> Vec<Vec<u32>> {
    let spec = table.spec();
    let key_of = |w: &GroupAutomorphism| {
        (table.index(w.image_of_a), table.index(w.image_of_twist_gen), table.index(w.image_of_z))
    };
    let (a, t, z) = key_of(&GroupAutomorphism::identity(spec));
    // An automorphism is determined by its generator images, so closure runs on those triples.
    let mut reached: HashSet<(u32, u32, u32)> = HashSet::from([(a, t, z)]);
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for w in automorphisms_with_table(table) {
        if reached.contains(&key_of(&w)) {
            continue;
        }
        gens.push(w.permutation(table));
        let mut frontier: Vec<(u32, u32, u32)> = reached.iter().copied().collect();
        while let Some((xa, xt, xz)) = frontier.pop() {
            for g in &gens {
                let y = (g[xa as usize], g[xt as usize], g[xz as usize]);
                if reached.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automorphism_counts() {
        let g = GroupSpec::new(11, 5, 3, false).unwrap();
        assert_eq!(automorphism_group(g).unwrap().len(), 110);
        assert_eq!(automorphism_group(GroupSpec::new(7, 1, 1, false).unwrap()).unwrap().len(), 6);
        let g = GroupSpec::new(7, 6, 3, false).unwrap();
        let auts = automorphism_group(g).unwrap();
        assert_eq!(auts.len(), 42);
        // a ↦ a^u, t ↦ a^v t for every unit u and every v
        for u in 1..7 {
            for v in 0..7 {
                let w = GroupAutomorphism {
                    image_of_a: GroupElement::new(u, 0, 0),
                    image_of_twist_gen: GroupElement::new(v, 1, 0),
                    image_of_z: g.identity(),
                };
                assert!(auts.contains(&w));
            }
        }
    }

    #[test]
    fn automorphisms_form_a_group() {
        let g = GroupSpec::new(7, 6, 3, true).unwrap();
        let auts = automorphism_group(g).unwrap();
        let set: HashSet<_> = auts.iter().copied().collect();
        assert!(set.contains(&GroupAutomorphism::identity(g)));
        for x in &auts {
            assert!(auts.iter().any(|y| x.compose(g, y) == GroupAutomorphism::identity(g)));
            for y in auts.iter().take(10) {
                assert!(set.contains(&x.compose(g, y)));
            }
        }
    }

    #[test]
    fn generators_span_the_automorphism_group() {
        let g = GroupSpec::new(7, 6, 3, true).unwrap();
        let table = CayleyTable::new(g);
        let gens = automorphism_generators(&table);
        assert!(gens.len() <= 4);
        let identity: Vec<u32> = (0..table.size() as u32).collect();
        let mut reached = HashSet::from([identity.clone()]);
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for p in &gens {
                let y: Vec<u32> = x.iter().map(|&i| p[i as usize]).collect();
                if reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(reached.len(), automorphism_group(g).unwrap().len());
    }

    #[test]
    fn bound_is_enforced() {
        let r = crate::arith::root_of_order(61, 10).unwrap() as u32;
        let g = GroupSpec::new(61, 10, r, false).unwrap();
        assert!(matches!(automorphism_group_bounded(g, 100), Err(Error::BoundExceeded { .. })));
    }
}
