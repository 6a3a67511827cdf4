use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{class_representatives_of_order, search_tuples, TupleShape};
use super::vector::GeneratingVector;
use crate::error::{Error, Result};
use crate::geometry::Signature;
use crate::group::{GroupContext, GroupSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Upper bound on stored canonical nodes across all period arrangements.
    pub max_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: 10_000_000 }
    }
}

/// One topological equivalence class of actions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionOrbit {
    /// Lexicographically smallest member in the sorted period arrangement.
    pub representative: GeneratingVector,
    /// Number of vectors in the sorted arrangement.
    pub size: u64,
    /// Set for genus-one signatures, where only existence is decided and the
    /// single record stands for every vector found.
    pub existence_only: bool,
}

/// Generating vectors of one (group, signature) pair, split into
/// topological equivalence classes.
///
/// Vectors are stored up to inner automorphisms: each node is the
/// lexicographic minimum of its conjugation class, so its first entry is a
/// class representative. Edges are braid moves Φ_{i,i+1} and a generating set
/// of Aut(G); orbits are the connected components.
#[derive(Debug)]
pub struct OrbitSpace {
    ctx: Arc<GroupContext>,
    signature: Signature,
    nodes: Vec<Box<[u32]>>,
    lookup: HashMap<Box<[u32]>, u32>,
    orbit_of_node: Vec<u32>,
    orbits: Vec<Vec<u32>>,
    existence_only: bool,
}

impl OrbitSpace {
    pub fn build(group: GroupSpec, signature: &Signature, limits: SearchLimits) -> Result<Self> {
        OrbitSpace::with_context(GroupContext::new(group), signature, limits)
    }

    pub fn with_context(ctx: Arc<GroupContext>, signature: &Signature, limits: SearchLimits) -> Result<Self> {
        match signature.orbit_genus() {
            0 => Self::build_genus_zero(ctx, signature, limits),
            1 => Self::build_existence_only(ctx, signature, limits),
            h => Err(Error::UnsupportedGenus(h)),
        }
    }

    fn build_existence_only(ctx: Arc<GroupContext>, signature: &Signature, limits: SearchLimits) -> Result<Self> {
        let table = ctx.table();
        let shape = TupleShape { handles: 2 * signature.orbit_genus() as usize, arrangement: signature.periods() };
        let all: Vec<u32> = (0..table.size() as u32).collect();
        let nodes: Vec<Box<[u32]>> = if signature.period_count() == 0 {
            Vec::new()
        } else {
            search_tuples(table, &shape, &all, &|_| true).into_iter().map(Vec::into_boxed_slice).collect()
        };
        check_limit(&nodes, signature, &ctx, limits)?;
        let orbits = if nodes.is_empty() { Vec::new() } else { vec![(0..nodes.len() as u32).collect()] };
        Ok(OrbitSpace {
            orbit_of_node: vec![0; nodes.len()],
            lookup: HashMap::new(),
            ctx,
            signature: signature.clone(),
            nodes,
            orbits,
            existence_only: true,
        })
    }

    fn build_genus_zero(ctx: Arc<GroupContext>, signature: &Signature, limits: SearchLimits) -> Result<Self> {
        let table = ctx.table();
        let mut nodes: Vec<Box<[u32]>> = Vec::new();
        if signature.period_count() > 0 {
            for arrangement in signature.arrangements() {
                let reps = class_representatives_of_order(table, ctx.conjugacy(), arrangement[0]);
                let shape = TupleShape { handles: 0, arrangement: &arrangement };
                let found = search_tuples(table, &shape, &reps, &|t| is_canonical(&ctx, t));
                nodes.extend(found.into_iter().map(Vec::into_boxed_slice));
                check_limit(&nodes, signature, &ctx, limits)?;
            }
        }
        let lookup: HashMap<Box<[u32]>, u32> =
            nodes.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();

        let l = signature.period_count();
        let neighbours: Vec<Vec<u32>> = nodes
            .par_iter()
            .map(|v| {
                let mut out = Vec::with_capacity(l.saturating_sub(1) + ctx.automorphism_generators().len());
                let mut w = v.to_vec();
                for i in 0..l.saturating_sub(1) {
                    w.copy_from_slice(v);
                    braid_indices(&ctx, &mut w, i);
                    canonicalize(&ctx, &mut w);
                    out.push(lookup[&w[..]]);
                }
                for p in ctx.automorphism_generators() {
                    for (dst, &src) in w.iter_mut().zip(v.iter()) {
                        *dst = p[src as usize];
                    }
                    canonicalize(&ctx, &mut w);
                    out.push(lookup[&w[..]]);
                }
                out
            })
            .collect();

        let mut forest = UnionFind::new(nodes.len());
        for (x, ys) in neighbours.iter().enumerate() {
            for &y in ys {
                forest.union(x as u32, y);
            }
        }

        let sorted = signature.periods();
        let mut members: HashMap<u32, Vec<u32>> = HashMap::new();
        for (id, v) in nodes.iter().enumerate() {
            if v.iter().zip(sorted).all(|(&x, &m)| table.order_of(x) == m) {
                members.entry(forest.find(id as u32)).or_default().push(id as u32);
            }
        }
        // Node ids follow the lexicographic order of the sorted arrangement, so
        // the first member of each list is the orbit's minimum.
        let mut orbits: Vec<Vec<u32>> = members.into_values().collect();
        orbits.sort_unstable_by(|x, y| nodes[x[0] as usize].cmp(&nodes[y[0] as usize]));
        let mut root_to_orbit = HashMap::new();
        for (k, orbit) in orbits.iter().enumerate() {
            root_to_orbit.insert(forest.find(orbit[0]), k as u32);
        }
        let orbit_of_node = (0..nodes.len() as u32)
            .map(|id| {
                *root_to_orbit
                    .get(&forest.find(id))
                    .expect("every orbit meets the sorted arrangement")
            })
            .collect();

        Ok(OrbitSpace {
            ctx,
            signature: signature.clone(),
            nodes,
            lookup,
            orbit_of_node,
            orbits,
            existence_only: false,
        })
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn group(&self) -> GroupSpec {
        self.ctx.spec()
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn is_existence_only(&self) -> bool {
        self.existence_only
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of vectors in the orbit, in the sorted arrangement.
    pub fn orbit_size(&self, orbit: usize) -> u64 {
        let weight = if self.existence_only { 1 } else { self.ctx.inner_class_size() as u64 };
        self.orbits[orbit].len() as u64 * weight
    }

    pub fn total_vectors(&self) -> u64 {
        (0..self.orbits.len()).map(|k| self.orbit_size(k)).sum()
    }

    pub fn representative(&self, orbit: usize) -> GeneratingVector {
        self.vector_of(&self.nodes[self.orbits[orbit][0] as usize])
    }

    pub fn orbits(&self) -> Vec<ActionOrbit> {
        (0..self.orbits.len())
            .map(|k| ActionOrbit {
                representative: self.representative(k),
                size: self.orbit_size(k),
                existence_only: self.existence_only,
            })
            .collect()
    }

    /// Canonical members of an orbit in the sorted arrangement, as element indices.
    pub(crate) fn sorted_members(&self, orbit: usize) -> impl Iterator<Item = &[u32]> + '_ {
        self.orbits[orbit].iter().map(move |&id| &self.nodes[id as usize][..])
    }

    pub(crate) fn vector_of(&self, tuple: &[u32]) -> GeneratingVector {
        let handles = 2 * self.signature.orbit_genus() as usize;
        let (h, p) = tuple.split_at(handles);
        GeneratingVector::from_indices_unchecked(self.ctx.table(), self.signature.clone(), h, p)
    }

    /// Orbit containing a genus-zero tuple of period images in any arrangement.
    pub(crate) fn orbit_of_indices(&self, tuple: &[u32]) -> Option<usize> {
        if self.existence_only || tuple.len() != self.signature.period_count() {
            return None;
        }
        let mut w = tuple.to_vec();
        canonicalize(&self.ctx, &mut w);
        self.lookup.get(&w[..]).map(|&id| self.orbit_of_node[id as usize] as usize)
    }

    pub fn orbit_of(&self, v: &GeneratingVector) -> Result<usize> {
        if v.group() != self.group() || v.signature() != &self.signature {
            return Err(Error::GroupMismatch);
        }
        if self.existence_only {
            return Err(Error::UnsupportedGenus(self.signature.orbit_genus()));
        }
        self.orbit_of_indices(&v.period_indices())
            .ok_or_else(|| Error::InvalidVector("not a generating vector of this space".into()))
    }

    pub fn are_equivalent(&self, v1: &GeneratingVector, v2: &GeneratingVector) -> Result<bool> {
        Ok(self.orbit_of(v1)? == self.orbit_of(v2)?)
    }
}

fn check_limit(nodes: &[Box<[u32]>], sig: &Signature, ctx: &GroupContext, limits: SearchLimits) -> Result<()> {
    if nodes.len() > limits.max_nodes {
        return Err(Error::BoundExceeded {
            what: format!("orbit search for {} on {}", ctx.spec().name(), sig),
            bound: limits.max_nodes,
        });
    }
    Ok(())
}

/// Φ_{i+1,i+2} on raw indices (0-based `i`).
fn braid_indices(ctx: &GroupContext, w: &mut [u32], i: usize) {
    let t = ctx.table();
    let (x, y) = (w[i], w[i + 1]);
    w[i] = y;
    w[i + 1] = t.conj(t.inv(y), x);
}

/// Replace `w` by the lexicographic minimum of its conjugation class.
pub(crate) fn canonicalize(ctx: &GroupContext, w: &mut [u32]) {
    let t = ctx.table();
    let conj = ctx.conjugacy();
    let g = conj.to_rep[w[0] as usize];
    for x in w.iter_mut() {
        *x = t.conj(g, *x);
    }
    let centralizer = &conj.centralizers[conj.class_of[w[0] as usize] as usize];
    let original = w.to_vec();
    for &c in centralizer {
        for k in 1..w.len() {
            let y = t.conj(c, original[k]);
            if y < w[k] {
                w[k] = y;
                for j in k + 1..w.len() {
                    w[j] = t.conj(c, original[j]);
                }
                break;
            }
            if y > w[k] {
                break;
            }
        }
    }
}

/// Whether `w`, whose first entry is a class representative, is minimal
/// under conjugation by that entry's centralizer.
fn is_canonical(ctx: &GroupContext, w: &[u32]) -> bool {
    let t = ctx.table();
    let conj = ctx.conjugacy();
    let centralizer = &conj.centralizers[conj.class_of[w[0] as usize] as usize];
    for &c in centralizer {
        for &x in &w[1..] {
            let y = t.conj(c, x);
            if y < x {
                return false;
            }
            if y > x {
                break;
            }
        }
    }
    true
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, x: u32, y: u32) {
        let (a, b) = (self.find(x), self.find(y));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Topological equivalence classes of actions of `group` with signature `sig`.
pub fn equivalence_orbits(group: GroupSpec, sig: &Signature) -> Result<Vec<ActionOrbit>> {
    Ok(OrbitSpace::build(group, sig, SearchLimits::default())?.orbits())
}

/// Whether two vectors of the same group and signature are topologically equivalent.
pub fn are_equivalent(v1: &GeneratingVector, v2: &GeneratingVector) -> Result<bool> {
    if v1.group() != v2.group() || v1.signature() != v2.signature() {
        return Err(Error::GroupMismatch);
    }
    OrbitSpace::build(v1.group(), v1.signature(), SearchLimits::default())?.are_equivalent(v1, v2)
}

#[cfg(test)]
mod tests {
    use std::collections::{HashSet, VecDeque};

    use super::*;
    use crate::actions::{apply_automorphism, braid_move, enumerate_generating_vectors};
    use crate::group::{automorphism_group, GroupElement};

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    /// Orbits over the full, unreduced vector set in every arrangement, by
    /// breadth-first closure under braid moves and every automorphism.
    fn brute_force_orbit_sizes(group: GroupSpec, signature: &Signature) -> Vec<usize> {
        let auts = automorphism_group(group).unwrap();
        let elements: Vec<GroupElement> = group.elements().collect();
        let mut all: Vec<Vec<GroupElement>> = Vec::new();
        for arrangement in signature.arrangements() {
            let mut partial: Vec<Vec<GroupElement>> = vec![vec![]];
            for &m in &arrangement {
                let options: Vec<_> = elements.iter().copied().filter(|&x| group.element_order(x) == m).collect();
                partial = partial
                    .into_iter()
                    .flat_map(|p| options.iter().map(move |&x| [p.clone(), vec![x]].concat()))
                    .collect();
            }
            all.extend(
                partial
                    .into_iter()
                    .filter(|p| GeneratingVector::new(group, signature.clone(), vec![], p.clone()).is_ok()),
            );
        }
        let mut seen: HashSet<Vec<GroupElement>> = HashSet::new();
        let mut sizes = Vec::new();
        for start in &all {
            if seen.contains(start) {
                continue;
            }
            let mut sorted_count = 0;
            let mut queue = VecDeque::from([start.clone()]);
            seen.insert(start.clone());
            while let Some(p) = queue.pop_front() {
                let v = GeneratingVector::new(group, signature.clone(), vec![], p.clone()).unwrap();
                if v.arrangement() == signature.periods() {
                    sorted_count += 1;
                }
                let mut next: Vec<GeneratingVector> =
                    (1..p.len()).map(|i| braid_move(&v, i).unwrap()).collect();
                next.extend(auts.iter().map(|w| apply_automorphism(&v, w)));
                for n in next {
                    if seen.insert(n.period_images().to_vec()) {
                        queue.push_back(n.period_images().to_vec());
                    }
                }
            }
            sizes.push(sorted_count);
        }
        sizes.sort_unstable();
        sizes
    }

    fn sizes(space: &OrbitSpace) -> Vec<usize> {
        let mut s: Vec<usize> = (0..space.orbit_count()).map(|k| space.orbit_size(k) as usize).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn four_orbits_for_c11_c5() {
        let g = GroupSpec::new(11, 5, 3, false).unwrap();
        let space = OrbitSpace::build(g, &sig("0;5,5,5"), SearchLimits::default()).unwrap();
        assert_eq!(space.orbit_count(), 4);
        assert_eq!(sizes(&space), brute_force_orbit_sizes(g, &sig("0;5,5,5")));
        assert_eq!(
            space.total_vectors() as usize,
            enumerate_generating_vectors(g, &sig("0;5,5,5")).unwrap().len()
        );
    }

    #[test]
    fn single_orbit_for_2233() {
        let g = GroupSpec::new(7, 6, 3, false).unwrap();
        let space = OrbitSpace::build(g, &sig("0;2,2,3,3"), SearchLimits::default()).unwrap();
        assert_eq!(space.orbit_count(), 1);
        assert_eq!(sizes(&space), brute_force_orbit_sizes(g, &sig("0;2,2,3,3")));
    }

    #[test]
    fn two_orbits_for_the_12q_group() {
        let g = GroupSpec::new(7, 6, 3, true).unwrap();
        let space = OrbitSpace::build(g, &sig("0;2,6,6"), SearchLimits::default()).unwrap();
        assert_eq!(space.orbit_count(), 2);
        assert_eq!(sizes(&space), brute_force_orbit_sizes(g, &sig("0;2,6,6")));
    }

    #[test]
    fn triangle_366_orbits_match_brute_force() {
        for (r, expected) in [(2, 2), (3, 2)] {
            let g = GroupSpec::new(7, 6, r, false).unwrap();
            let space = OrbitSpace::build(g, &sig("0;3,6,6"), SearchLimits::default()).unwrap();
            assert_eq!(space.orbit_count(), expected, "r = {r}");
            assert_eq!(sizes(&space), brute_force_orbit_sizes(g, &sig("0;3,6,6")));
        }
    }

    /// Automorphisms fix the image in G/⟨a⟩ ≅ C₆ when the action is faithful,
    /// and braid moves permute those images, so their multiset is an invariant.
    #[test]
    fn twist_multiset_separates_the_366_orbits() {
        let g = GroupSpec::new(7, 6, 3, false).unwrap();
        let space = OrbitSpace::build(g, &sig("0;3,6,6"), SearchLimits::default()).unwrap();
        let mut types: Vec<Vec<u32>> = (0..space.orbit_count())
            .map(|k| {
                let mut t: Vec<u32> = space.representative(k).period_images().iter().map(|x| x.twist).collect();
                t.sort_unstable();
                t
            })
            .collect();
        types.sort();
        assert_eq!(types, vec![vec![1, 1, 4], vec![2, 5, 5]]);
    }

    #[test]
    fn representatives_are_orbit_minima() {
        let g = GroupSpec::new(11, 5, 3, false).unwrap();
        let s = sig("0;5,5,5");
        let space = OrbitSpace::build(g, &s, SearchLimits::default()).unwrap();
        let all = enumerate_generating_vectors(g, &s).unwrap();
        for k in 0..space.orbit_count() {
            let min = all.iter().filter(|v| space.orbit_of(v).unwrap() == k).min().unwrap();
            assert_eq!(min, &space.representative(k));
        }
    }

    #[test]
    fn distinct_and_equal_classes() {
        let g = GroupSpec::new(11, 5, 3, false).unwrap();
        let s = sig("0;5,5,5");
        let theta_122 = GeneratingVector::from_triples(g, s.clone(), &[(8, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        let theta_113 = GeneratingVector::from_triples(g, s.clone(), &[(8, 1, 0), (1, 1, 0), (0, 3, 0)]).unwrap();
        assert!(!are_equivalent(&theta_122, &theta_113).unwrap());
        let moved = braid_move(&theta_122, 1).unwrap();
        assert!(are_equivalent(&theta_122, &moved).unwrap());
        let other = GeneratingVector::from_triples(
            GroupSpec::new(7, 6, 3, false).unwrap(),
            sig("0;2,2,3,3"),
            &[(0, 3, 0), (1, 3, 0), (1, 2, 0), (0, 4, 0)],
        )
        .unwrap();
        assert_eq!(are_equivalent(&theta_122, &other), Err(Error::GroupMismatch));
    }

    #[test]
    fn node_cap_is_enforced() {
        let g = GroupSpec::new(11, 5, 3, false).unwrap();
        let err = OrbitSpace::build(g, &sig("0;5,5,5"), SearchLimits { max_nodes: 3 }).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { bound: 3, .. }));
    }
}
