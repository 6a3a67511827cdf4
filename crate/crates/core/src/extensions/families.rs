use serde::{Deserialize, Serialize};

use crate::arith::{roots_of_order, root_of_order};
use crate::error::Result;
use crate::group::GroupSpec;

/// A group of order λq from the Sylow analysis, with its conventional name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub label: String,
    pub spec: GroupSpec,
}

impl Candidate {
    fn new(label: impl Into<String>, spec: GroupSpec) -> Self {
        Candidate { label: label.into(), spec }
    }
}

/// Least unit mod 3q that is 1 mod q and −1 mod 3.
fn crt_twist(q: u32) -> u32 {
    (1..3 * q).find(|&r| r % q == 1 % q && r % 3 == 2).expect("q and 3 are coprime")
}

/// Every group of order λq for λ ∈ {3, 5, 6} up to isomorphism (q ≥ 7 prime).
/// Semidirect products that need a root of unity mod q appear only when it exists.
pub fn candidate_groups(q: u32, lambda: u32) -> Result<Vec<Candidate>> {
    let root = |k: u64| root_of_order(q as u64, k).ok().map(|r| r as u32);
    let mut out = Vec::new();
    match lambda {
        3 => {
            out.push(Candidate::new(format!("C{}", 3 * q), GroupSpec::new(q, 3, 1, false)?));
            if let Some(r3) = root(3) {
                out.push(Candidate::new(format!("C{q} ⋊_3 C3"), GroupSpec::new(q, 3, r3, false)?));
            }
        }
        5 => {
            out.push(Candidate::new(format!("C{}", 5 * q), GroupSpec::new(q, 5, 1, false)?));
            if let Some(r5) = root(5) {
                out.push(Candidate::new(format!("C{q} ⋊_5 C5"), GroupSpec::new(q, 5, r5, false)?));
            }
        }
        6 => {
            out.push(Candidate::new(format!("C{}", 6 * q), GroupSpec::new(q, 6, 1, false)?));
            out.push(Candidate::new(format!("C{q} ⋊_2 C6"), GroupSpec::new(q, 6, q - 1, false)?));
            if let (Some(r3), Some(t6)) = (root(3), root(6)) {
                out.push(Candidate::new(format!("C{q} ⋊_3 C6"), GroupSpec::new(q, 6, r3, false)?));
                out.push(Candidate::new(format!("C{q} ⋊_6 C6"), GroupSpec::new(q, 6, t6, false)?));
            }
            out.push(Candidate::new(format!("D{}", 3 * q), GroupSpec::new(3 * q, 2, 3 * q - 1, false)?));
            out.push(Candidate::new(format!("C{q} x D3"), GroupSpec::new(3 * q, 2, crt_twist(q), false)?));
        }
        other => return Err(crate::error::Error::UnsupportedOrder(other as u64)),
    }
    Ok(out)
}

/// The groups of order 15q in the metacyclic family: C_q ⋊ C₁₅ for each
/// admissible order d | 15 of the action (d = 1 is the cyclic group).
pub fn order_15q_family(q: u32) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    for d in [1u64, 3, 5, 15] {
        if (q as u64 - 1) % d != 0 {
            continue;
        }
        let r = roots_of_order(q as u64, d)[0] as u32;
        let label = if d == 1 { format!("C{}", 15 * q) } else { format!("C{q} ⋊_{d} C15") };
        out.push(Candidate::new(label, GroupSpec::new(q, 15, r, false)?));
    }
    Ok(out)
}

/// C_q ⋊₁₀ C₁₀, containing C_q ⋊₅ C₅ with index 2.
pub fn order_10q_group(q: u32) -> Result<GroupSpec> {
    GroupSpec::new(q, 10, root_of_order(q as u64, 10)? as u32, false)
}

/// (C_q ⋊₆ C₆) × C₂.
pub fn order_12q_group(q: u32) -> Result<GroupSpec> {
    GroupSpec::new(q, 6, root_of_order(q as u64, 6)? as u32, true)
}

/// C_q ⋊₆ C₆.
pub fn order_6q_family_group(q: u32) -> Result<GroupSpec> {
    GroupSpec::new(q, 6, root_of_order(q as u64, 6)? as u32, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    #[test]
    fn six_pairwise_distinct_groups_of_order_6q() {
        for q in [7u32, 13] {
            let c = candidate_groups(q, 6).unwrap();
            assert_eq!(c.len(), 6);
            for (i, x) in c.iter().enumerate() {
                assert_eq!(x.spec.order(), 6 * q as usize);
                for y in &c[i + 1..] {
                    assert!(!is_isomorphic(&x.spec, &y.spec), "{} ≅ {}", x.label, y.label);
                }
            }
        }
        assert_eq!(candidate_groups(11, 6).unwrap().len(), 4);
    }

    #[test]
    fn crt_twist_gives_direct_product_with_d3() {
        let r = crt_twist(7);
        assert_eq!((r % 7, r % 3), (1, 2));
    }

    #[test]
    fn family_sizes() {
        assert_eq!(candidate_groups(11, 5).unwrap().len(), 2);
        assert_eq!(candidate_groups(13, 5).unwrap().len(), 1);
        assert_eq!(candidate_groups(7, 3).unwrap().len(), 2);
        assert_eq!(order_15q_family(31).unwrap().len(), 4);
        assert_eq!(order_15q_family(7).unwrap().len(), 2);
        assert_eq!(order_15q_family(17).unwrap().len(), 1);
    }
}
