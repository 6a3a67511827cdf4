mod common;

use std::collections::BTreeMap;

use surface_actions::actions::{count_generating_vectors, enumerate_generating_vectors, OrbitSpace, SearchLimits};
use surface_actions::arith::{primes_in, roots_of_order};
use surface_actions::extensions::{candidate_groups, order_10q_group, order_12q_group};
use surface_actions::geometry::{enumerate_signatures, Signature};
use surface_actions::group::GroupSpec;

fn sig(s: &str) -> Signature {
    s.parse().unwrap()
}

#[test]
fn frozen_count_for_c11_c5() {
    let g = GroupSpec::new(11, 5, 3, false).unwrap();
    let naive = common::naive_vectors(g, &sig("0;5,5,5")).len();
    assert_eq!(naive, 1320);
    assert_eq!(count_generating_vectors(g, &sig("0;5,5,5")).unwrap(), 1320);
}

/// Unreduced enumeration, class-reduced counting and the orbit space all agree
/// with trying every tuple.
#[test]
fn reduced_counts_match_brute_force() {
    for q in [7u32, 11] {
        let mut pairs: Vec<(GroupSpec, Signature)> = Vec::new();
        for lambda in [3u64, 5, 6] {
            let sigs = enumerate_signatures(q as u64 + 1, lambda).unwrap();
            for c in candidate_groups(q, lambda as u32).unwrap() {
                pairs.extend(sigs.iter().map(|s| (c.spec, s.clone())));
            }
        }
        if q == 11 {
            pairs.push((order_10q_group(q).unwrap(), sig("0;2,5,10")));
        } else {
            pairs.push((order_12q_group(q).unwrap(), sig("0;2,6,6")));
        }
        for (g, s) in pairs {
            let naive = common::naive_vectors(g, &s).len() as u64;
            let listed = enumerate_generating_vectors(g, &s).unwrap().len() as u64;
            let counted = count_generating_vectors(g, &s).unwrap();
            assert_eq!((listed, counted), (naive, naive), "{g} {s}");
            if s.orbit_genus() == 0 {
                let space = OrbitSpace::build(g, &s, SearchLimits::default()).unwrap();
                assert_eq!(space.total_vectors(), naive, "{g} {s}");
            }
        }
    }
}

/// Orbit counts per signature for each candidate group, keyed by its label.
fn counts(q: u32, lambda: u64, pick: impl Fn(GroupSpec) -> GroupSpec) -> BTreeMap<(String, String), usize> {
    let sigs = enumerate_signatures(q as u64 + 1, lambda).unwrap();
    let mut out = BTreeMap::new();
    for c in candidate_groups(q, lambda as u32).unwrap() {
        let g = pick(c.spec);
        for s in sigs.iter().filter(|s| s.orbit_genus() == 0) {
            let n = OrbitSpace::build(g, s, SearchLimits::default()).unwrap().orbit_count();
            out.insert((c.label.clone(), s.to_string()), n);
        }
    }
    out
}

#[test]
fn orbit_counts_do_not_depend_on_the_chosen_root() {
    for q in primes_in(7, 31) {
        let q = q as u32;
        for lambda in [3u64, 5, 6] {
            let base = counts(q, lambda, |g| g);
            for variant in 1..4 {
                let other = counts(q, lambda, |g| {
                    let d = g.action_order() as u64;
                    if d == 1 || g.base_order() != q {
                        return g;
                    }
                    let roots = roots_of_order(q as u64, d);
                    let r = roots[variant % roots.len()] as u32;
                    GroupSpec::new(q, g.twist_order(), r, g.has_central_involution()).unwrap()
                });
                assert_eq!(base, other, "q={q} λ={lambda}");
            }
        }
    }
}
