use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Signature;
use crate::group::{CayleyTable, GroupAutomorphism, GroupElement, GroupSpec};

/// Images of the canonical generators of a Fuchsian group of signature
/// `signature` under a surface-kernel epimorphism onto `group`.
///
/// Period images may appear in any arrangement of the signature's periods;
/// braid moves between unequal periods permute them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratingVector {
    group: GroupSpec,
    signature: Signature,
    handle_images: Vec<GroupElement>,
    period_images: Vec<GroupElement>,
}

impl GeneratingVector {
    /// Validates exact orders, the long relation and surjectivity.
    pub fn new(
        group: GroupSpec,
        signature: Signature,
        handle_images: Vec<GroupElement>,
        period_images: Vec<GroupElement>,
    ) -> Result<Self> {
        let v = GeneratingVector { group, signature, handle_images, period_images };
        v.validate()?;
        Ok(v)
    }

    /// Genus-zero shorthand taking coordinate triples.
    pub fn from_triples(group: GroupSpec, signature: Signature, periods: &[(i64, i64, i64)]) -> Result<Self> {
        let images = periods.iter().map(|&(i, j, z)| group.element(i, j, z)).collect();
        GeneratingVector::new(group, signature, Vec::new(), images)
    }

    pub(crate) fn from_indices_unchecked(
        table: &CayleyTable,
        signature: Signature,
        handles: &[u32],
        periods: &[u32],
    ) -> Self {
        GeneratingVector {
            group: table.spec(),
            signature,
            handle_images: handles.iter().map(|&x| table.element(x)).collect(),
            period_images: periods.iter().map(|&x| table.element(x)).collect(),
        }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn handle_images(&self) -> &[GroupElement] {
        &self.handle_images
    }

    pub fn period_images(&self) -> &[GroupElement] {
        &self.period_images
    }

    /// Orders of the period images, in position order.
    pub fn arrangement(&self) -> Vec<u32> {
        self.period_images.iter().map(|&x| self.group.element_order(x)).collect()
    }

    pub(crate) fn period_indices(&self) -> Vec<u32> {
        self.period_images.iter().map(|&x| self.group.index_of(x) as u32).collect()
    }

    fn validate(&self) -> Result<()> {
        let spec = self.group;
        let bad = |msg: String| Err(Error::InvalidVector(msg));
        let h = self.signature.orbit_genus() as usize;
        if self.handle_images.len() != 2 * h {
            return bad(format!("expected {} handle images, found {}", 2 * h, self.handle_images.len()));
        }
        if self.period_images.len() != self.signature.period_count() {
            return bad(format!(
                "expected {} period images, found {}",
                self.signature.period_count(),
                self.period_images.len()
            ));
        }
        for &x in self.handle_images.iter().chain(&self.period_images) {
            if !spec.contains(x) {
                return bad(format!("{x} is not an element of {}", spec.name()));
            }
        }
        let mut orders = self.arrangement();
        orders.sort_unstable();
        if orders != self.signature.periods() {
            return bad(format!("image orders {orders:?} do not match {}", self.signature));
        }
        let mut product = spec.identity();
        for pair in self.handle_images.chunks(2) {
            product = spec.multiply(product, commutator(spec, pair[0], pair[1]));
        }
        for &x in &self.period_images {
            product = spec.multiply(product, x);
        }
        if product != spec.identity() {
            return bad(format!("relation product is {product}, not the identity"));
        }
        let all: Vec<GroupElement> = self.handle_images.iter().chain(&self.period_images).copied().collect();
        if !crate::group::generated_subgroup(spec, &all).is_whole_group() {
            return bad("images do not generate the group".into());
        }
        Ok(())
    }
}

fn commutator(spec: GroupSpec, u: GroupElement, v: GroupElement) -> GroupElement {
    let uv = spec.multiply(u, v);
    spec.multiply(uv, spec.multiply(spec.invert(u), spec.invert(v)))
}

fn check_braid_index(v: &GeneratingVector, i: usize) -> Result<()> {
    if v.signature.orbit_genus() != 0 {
        return Err(Error::UnsupportedGenus(v.signature.orbit_genus()));
    }
    let len = v.period_images.len();
    if i == 0 || i >= len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    Ok(())
}

/// Φ_{i,i+1} with 1-based `i`: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}.
pub fn braid_move(v: &GeneratingVector, i: usize) -> Result<GeneratingVector> {
    check_braid_index(v, i)?;
    let spec = v.group;
    let mut out = v.clone();
    let (x, y) = (v.period_images[i - 1], v.period_images[i]);
    out.period_images[i - 1] = y;
    out.period_images[i] = spec.conjugate(spec.invert(y), x);
    Ok(out)
}

/// Φ_{i,i+1}⁻¹: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i.
pub fn braid_move_inverse(v: &GeneratingVector, i: usize) -> Result<GeneratingVector> {
    check_braid_index(v, i)?;
    let spec = v.group;
    let mut out = v.clone();
    let (x, y) = (v.period_images[i - 1], v.period_images[i]);
    out.period_images[i - 1] = spec.conjugate(x, y);
    out.period_images[i] = x;
    Ok(out)
}

/// ω ∘ θ
pub fn apply_automorphism(v: &GeneratingVector, omega: &GroupAutomorphism) -> GeneratingVector {
    let spec = v.group;
    let map = |xs: &[GroupElement]| xs.iter().map(|&x| omega.apply(spec, x)).collect();
    GeneratingVector {
        group: spec,
        signature: v.signature.clone(),
        handle_images: map(&v.handle_images),
        period_images: map(&v.period_images),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c11() -> GroupSpec {
        GroupSpec::new(11, 5, 3, false).unwrap()
    }

    fn theta_122() -> GeneratingVector {
        GeneratingVector::from_triples(c11(), "0;5,5,5".parse().unwrap(), &[(8, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap()
    }

    #[test]
    fn validation() {
        let sig: Signature = "0;5,5,5".parse().unwrap();
        let g = c11();
        assert!(GeneratingVector::from_triples(g, sig.clone(), &[(8, 1, 0), (1, 2, 0), (0, 2, 0)]).is_ok());
        // product not one
        assert!(GeneratingVector::from_triples(g, sig.clone(), &[(7, 1, 0), (1, 2, 0), (0, 2, 0)]).is_err());
        // inside ⟨b⟩ only
        assert!(GeneratingVector::from_triples(g, sig.clone(), &[(0, 1, 0), (0, 2, 0), (0, 2, 0)]).is_err());
        // wrong period count
        assert!(GeneratingVector::from_triples(g, sig, &[(0, 1, 0), (0, 4, 0)]).is_err());
    }

    #[test]
    fn braid_move_on_theta_122() {
        let moved = braid_move(&theta_122(), 1).unwrap();
        let expected: Vec<GroupElement> =
            vec![GroupElement::new(1, 2, 0), GroupElement::new(6, 1, 0), GroupElement::new(0, 2, 0)];
        assert_eq!(moved.period_images(), expected.as_slice());
        assert_eq!(braid_move_inverse(&moved, 1).unwrap(), theta_122());
        assert!(matches!(braid_move(&theta_122(), 3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
        assert!(matches!(braid_move(&theta_122(), 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn automorphism_on_theta_122() {
        let g = c11();
        let omega = GroupAutomorphism {
            image_of_a: GroupElement::new(2, 0, 0),
            image_of_twist_gen: g.twist_generator(),
            image_of_z: g.identity(),
        };
        let w = apply_automorphism(&theta_122(), &omega);
        let expected = [GroupElement::new(5, 1, 0), GroupElement::new(2, 2, 0), GroupElement::new(0, 2, 0)];
        assert_eq!(w.period_images(), &expected);
        assert_eq!(apply_automorphism(&theta_122(), &GroupAutomorphism::identity(g)), theta_122());
    }

    #[test]
    fn moves_between_unequal_periods_permute_the_arrangement() {
        let g = GroupSpec::new(7, 6, 3, false).unwrap();
        // θ_{3,0} = (s, as, ab², b) with b = t⁴, s = t³
        let v = GeneratingVector::from_triples(
            g,
            "0;2,2,3,3".parse().unwrap(),
            &[(0, 3, 0), (1, 3, 0), (1, 2, 0), (0, 4, 0)],
        )
        .unwrap();
        let w = braid_move(&v, 2).unwrap();
        assert_eq!(w.arrangement(), vec![2, 3, 2, 3]);
        assert!(GeneratingVector::new(g, w.signature().clone(), vec![], w.period_images().to_vec()).is_ok());
    }
}
