#![allow(dead_code)]

use std::collections::HashSet;

use surface_actions::geometry::Signature;
use surface_actions::group::{GroupElement, GroupSpec};

/// Subgroup generated by `gens`, by closure under multiplication.
pub fn generates(g: GroupSpec, gens: &[GroupElement]) -> bool {
    let mut seen: HashSet<GroupElement> = HashSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.multiply(x, s);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.len() == g.order()
}

fn commutator(g: GroupSpec, u: GroupElement, v: GroupElement) -> GroupElement {
    let (ui, vi) = (g.invert(u), g.invert(v));
    [v, ui, vi].iter().fold(u, |acc, &x| g.multiply(acc, x))
}

/// Tuples (handles, periods in sorted order) with exact orders, the long
/// relation and generation, found by trying every tuple.
pub fn naive_vectors(g: GroupSpec, sig: &Signature) -> Vec<Vec<GroupElement>> {
    let elements: Vec<GroupElement> = g.elements().collect();
    let handles = 2 * sig.orbit_genus() as usize;
    let periods = sig.periods();
    let mut partial: Vec<Vec<GroupElement>> = vec![Vec::new()];
    for slot in 0..handles + periods.len() - 1 {
        let allowed: Vec<GroupElement> = if slot < handles {
            elements.clone()
        } else {
            elements.iter().copied().filter(|&x| g.element_order(x) == periods[slot - handles]).collect()
        };
        partial = partial
            .into_iter()
            .flat_map(|p| allowed.iter().map(move |&x| [p.clone(), vec![x]].concat()))
            .collect();
    }
    let last = *periods.last().unwrap();
    partial
        .into_iter()
        .filter_map(|mut p| {
            let mut acc = g.identity();
            for pair in p[..handles].chunks(2) {
                acc = g.multiply(acc, commutator(g, pair[0], pair[1]));
            }
            for &x in &p[handles..] {
                acc = g.multiply(acc, x);
            }
            let x = g.invert(acc);
            if g.element_order(x) != last {
                return None;
            }
            p.push(x);
            generates(g, &p).then_some(p)
        })
        .collect()
}
