use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclotomic;
use crate::arith::{is_prime, lcm, multiplicative_order, pow_mod};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum IrrepKind {
    /// a ↦ 1, t ↦ ω_m^label
    Linear { label: u32 },
    /// Induced from a ↦ ω_n^k; `orbit_label` is the least k in its ⟨r⟩-orbit.
    Induced { index: u32, orbit_label: u32 },
}

/// A complex irreducible representation of (C_n ⋊_r C_m) × C_2^ε with n prime
/// and r of exact order m, optionally tensored with a sign character of C₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Irrep {
    pub group: GroupSpec,
    pub kind: IrrepKind,
    /// ±1 on z; `None` without a central factor.
    pub tensor_sign: Option<i8>,
    pub degree: u32,
}

impl Irrep {
    pub fn is_trivial(&self) -> bool {
        matches!(self.kind, IrrepKind::Linear { label: 0 }) && self.tensor_sign.unwrap_or(1) == 1
    }

    /// Exponent base N of the cyclotomic field holding all character values.
    pub fn field_order(&self) -> u32 {
        character_field_order(self.group)
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            IrrepKind::Linear { label } => write!(f, "U{label}")?,
            IrrepKind::Induced { index, orbit_label } => write!(f, "V{index}[k={orbit_label}]")?,
        }
        match self.tensor_sign {
            Some(1) => write!(f, "+"),
            Some(_) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

pub(crate) fn character_field_order(spec: GroupSpec) -> u32 {
    lcm(lcm(spec.base_order() as u64, spec.twist_order() as u64), 2) as u32
}

fn check_supported(spec: GroupSpec) -> Result<()> {
    let n = spec.base_order() as u64;
    let m = spec.twist_order() as u64;
    if !is_prime(n) || multiplicative_order(spec.twist() as u64, n) != Some(m) {
        return Err(Error::UnsupportedGroup(spec.name()));
    }
    Ok(())
}

/// Least representatives of the ⟨r⟩-orbits on (ℤ/n)^*, ascending.
pub fn orbit_labels(spec: GroupSpec) -> Vec<u32> {
    let n = spec.base_order() as u64;
    let r = spec.twist() as u64;
    let mut seen = vec![false; n as usize];
    let mut labels = Vec::new();
    for k in 1..n {
        if seen[k as usize] {
            continue;
        }
        labels.push(k as u32);
        let mut x = k;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = x * r % n;
        }
    }
    labels
}

/// All irreducible representations: m·2^ε linear ones, then (n−1)/m·2^ε of degree m.
pub fn irreducible_representations(spec: GroupSpec) -> Result<Vec<Irrep>> {
    check_supported(spec)?;
    let signs: Vec<Option<i8>> = if spec.has_central_involution() { vec![Some(1), Some(-1)] } else { vec![None] };
    let mut out = Vec::new();
    for &tensor_sign in &signs {
        for label in 0..spec.twist_order() {
            out.push(Irrep { group: spec, kind: IrrepKind::Linear { label }, tensor_sign, degree: 1 });
        }
    }
    for &tensor_sign in &signs {
        for (j, k) in orbit_labels(spec).into_iter().enumerate() {
            out.push(Irrep {
                group: spec,
                kind: IrrepKind::Induced { index: j as u32 + 1, orbit_label: k },
                tensor_sign,
                degree: spec.twist_order(),
            });
        }
    }
    Ok(out)
}

/// χ_V(x) as an exact element of ℤ[ζ_N].
pub fn character_value(irrep: &Irrep, x: GroupElement) -> Cyclotomic {
    let mut out = Cyclotomic::zero(irrep.field_order());
    add_character_value(irrep, x, &mut out);
    out
}

/// `acc += χ_V(x)`
pub(crate) fn add_character_value(irrep: &Irrep, x: GroupElement, acc: &mut Cyclotomic) {
    let spec = irrep.group;
    let big_n = acc.order() as i64;
    let n = spec.base_order() as i64;
    let m = spec.twist_order() as i64;
    let sign_shift = match irrep.tensor_sign {
        Some(-1) if x.central == 1 => big_n / 2,
        _ => 0,
    };
    match irrep.kind {
        IrrepKind::Linear { label } => {
            acc.add_root((big_n / m) * label as i64 * x.twist as i64 + sign_shift, 1);
        }
        IrrepKind::Induced { orbit_label, .. } => {
            if x.twist != 0 {
                return;
            }
            let r = spec.twist() as u64;
            for t in 0..m as u64 {
                let e = orbit_label as u64 * pow_mod(r, t, n as u64) % n as u64 * x.base as u64;
                acc.add_root((big_n / n) * (e % n as u64) as i64 + sign_shift, 1);
            }
        }
    }
}

/// ⟨χ_V, χ_W⟩ over the whole group.
pub fn inner_product(v: &Irrep, w: &Irrep) -> Result<i64> {
    if v.group != w.group {
        return Err(Error::GroupMismatch);
    }
    let spec = v.group;
    let mut total = Cyclotomic::zero(v.field_order());
    for x in spec.elements() {
        total.add_assign(&character_value(v, x).mul(&character_value(w, x).conj()));
    }
    let value = total.as_integer().ok_or(Error::NonIntegralDimension)?;
    if value % spec.order() as i64 != 0 {
        return Err(Error::NonIntegralDimension);
    }
    Ok(value / spec.order() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_completeness() {
        let g = GroupSpec::new(11, 10, 2, false).unwrap();
        let irreps = irreducible_representations(g).unwrap();
        assert_eq!(irreps.iter().filter(|v| v.degree == 1).count(), 10);
        assert_eq!(irreps.iter().filter(|v| v.degree == 10).count(), 1);
        assert_eq!(irreps.iter().map(|v| v.degree * v.degree).sum::<u32>(), 110);

        let g = GroupSpec::new(7, 6, 3, false).unwrap();
        let irreps = irreducible_representations(g).unwrap();
        assert_eq!(irreps.iter().filter(|v| v.degree == 1).count(), 6);
        assert_eq!(irreps.iter().filter(|v| v.degree == 6).count(), 1);

        let g = GroupSpec::new(7, 6, 3, true).unwrap();
        let irreps = irreducible_representations(g).unwrap();
        assert_eq!(irreps.iter().filter(|v| v.degree == 1).count(), 12);
        assert_eq!(irreps.iter().filter(|v| v.degree == 6).count(), 2);
        assert_eq!(irreps.iter().map(|v| v.degree * v.degree).sum::<u32>(), 84);
    }

    #[test]
    fn unsupported_groups() {
        assert!(matches!(
            irreducible_representations(GroupSpec::new(21, 2, 20, false).unwrap()),
            Err(Error::UnsupportedGroup(_))
        ));
        // twist of order 3 in a C₆ top
        assert!(irreducible_representations(GroupSpec::new(7, 6, 2, false).unwrap()).is_err());
    }

    #[test]
    fn orbit_labels_partition_units() {
        let g = GroupSpec::new(31, 10, crate::arith::root_of_order(31, 10).unwrap() as u32, false).unwrap();
        let labels = orbit_labels(g);
        assert_eq!(labels.len(), 3);
        let mut covered: Vec<u64> = labels
            .iter()
            .flat_map(|&k| (0..10).map(move |t| k as u64 * pow_mod(g.twist() as u64, t, 31) % 31))
            .collect();
        covered.sort_unstable();
        covered.dedup();
        assert_eq!(covered, (1..31).collect::<Vec<_>>());
    }

    #[test]
    fn character_values() {
        let g = GroupSpec::new(11, 10, 2, false).unwrap();
        let irreps = irreducible_representations(g).unwrap();
        let u1 = irreps.iter().find(|v| v.kind == IrrepKind::Linear { label: 1 }).unwrap();
        assert_eq!(character_value(u1, g.twist_generator()), Cyclotomic::root(110, 11));
        let v = irreps.iter().find(|v| v.degree == 10).unwrap();
        for k in 1..10 {
            assert_eq!(character_value(v, g.element(0, k, 0)).as_integer(), Some(0));
        }
        assert_eq!(character_value(v, g.identity()).as_integer(), Some(10));
        // Σ over the ten Galois conjugates of ω_11 that appear is −1
        assert_eq!(character_value(v, g.a()).as_integer(), Some(-1));
    }

    #[test]
    fn orthogonality() {
        for g in [GroupSpec::new(7, 6, 3, true).unwrap(), GroupSpec::new(11, 5, 3, false).unwrap()] {
            let irreps = irreducible_representations(g).unwrap();
            for (i, v) in irreps.iter().enumerate() {
                for (j, w) in irreps.iter().enumerate() {
                    assert_eq!(inner_product(v, w).unwrap(), (i == j) as i64, "{v} vs {w}");
                }
            }
        }
    }
}
