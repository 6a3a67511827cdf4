use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclotomic;
use super::irreps::{add_character_value, character_field_order, irreducible_representations, Irrep};
use crate::actions::GeneratingVector;
use crate::error::{Error, Result};
use crate::geometry::{hyperbolic_area, quotient_genus_with_table};
use crate::group::{generated_subgroup, CayleyTable, GroupElement, GroupSpec, Subgroup};

/// dim V^H = (1/|H|) Σ_{h∈H} χ_V(h), computed exactly.
pub fn fixed_subspace_dim(irrep: &Irrep, subgroup: &Subgroup) -> Result<u32> {
    if subgroup.parent() != irrep.group {
        return Err(Error::NotASubgroup);
    }
    fixed_dim_of_elements(irrep, subgroup.elements())
}

fn fixed_dim_of_elements(irrep: &Irrep, elements: &[GroupElement]) -> Result<u32> {
    let mut total = Cyclotomic::zero(character_field_order(irrep.group));
    for &h in elements {
        add_character_value(irrep, h, &mut total);
    }
    let sum = total.as_integer().ok_or(Error::NonIntegralDimension)?;
    let order = elements.len() as i64;
    if sum < 0 || sum % order != 0 {
        return Err(Error::NonIntegralDimension);
    }
    Ok((sum / order) as u32)
}

fn cyclic(spec: GroupSpec, x: GroupElement) -> Vec<GroupElement> {
    generated_subgroup(spec, &[x]).elements().to_vec()
}

/// The set 𝔍 of irreducible representations whose isotypic component of the
/// Jacobian is nonzero, for an action of signature (γ; m₁, …, m_l).
///
/// The trivial representation belongs iff γ ≠ 0; any other V iff
/// 2d_V(γ − 1) + Σᵢ (d_V − d_V^{⟨xᵢ⟩}) ≠ 0.
pub fn relevant_representations(vector: &GeneratingVector) -> Result<Vec<Irrep>> {
    let spec = vector.group();
    let gamma = vector.signature().orbit_genus() as i64;
    let cyclics: Vec<Vec<GroupElement>> = vector.period_images().iter().map(|&x| cyclic(spec, x)).collect();
    let mut out = Vec::new();
    for v in irreducible_representations(spec)? {
        if v.is_trivial() {
            if gamma != 0 {
                out.push(v);
            }
            continue;
        }
        let d = v.degree as i64;
        let mut twice = 2 * d * (gamma - 1);
        for c in &cyclics {
            twice += d - fixed_dim_of_elements(&v, c)? as i64;
        }
        if twice != 0 {
            out.push(v);
        }
    }
    Ok(out)
}

/// Per representation in 𝔍: Σ_H d_V^H against d_V.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityRow {
    pub irrep: String,
    pub fixed_sum: u32,
    pub degree: u32,
}

pub fn admissibility_table(vector: &GeneratingVector, subgroups: &[Subgroup]) -> Result<Vec<AdmissibilityRow>> {
    if subgroups.iter().any(|h| h.parent() != vector.group()) {
        return Err(Error::NotASubgroup);
    }
    relevant_representations(vector)?
        .into_iter()
        .map(|v| {
            let mut fixed_sum = 0;
            for h in subgroups {
                fixed_sum += fixed_subspace_dim(&v, h)?;
            }
            Ok(AdmissibilityRow { irrep: v.to_string(), fixed_sum, degree: v.degree })
        })
        .collect()
}

/// Whether Σ_H d_V^H ≤ d_V for every V ∈ 𝔍.
pub fn check_admissible(vector: &GeneratingVector, subgroups: &[Subgroup]) -> Result<bool> {
    Ok(admissibility_table(vector, subgroups)?.iter().all(|row| row.fixed_sum <= row.degree))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    /// The class of conjugate subgroups, named by its smallest member.
    pub subgroup: String,
    pub order: usize,
    pub genus: u64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviationNote {
    pub subgroup: String,
    pub expected_genus: u64,
    pub computed_genus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub action: GeneratingVector,
    pub genus: u64,
    pub factors: Vec<Factor>,
    /// g − Σ genus · multiplicity: the dimension of the complementary factor.
    pub remainder_dim: u64,
    pub deviation_notes: Vec<DeviationNote>,
}

/// JS ∼ Π J(S/Hᵢ) × P for an admissible collection, with quotient genera
/// from coset monodromy and conjugate subgroups merged.
pub fn decompose_jacobian(vector: &GeneratingVector, subgroups: &[Subgroup]) -> Result<DecompositionReport> {
    if !check_admissible(vector, subgroups)? {
        return Err(Error::NotAdmissible);
    }
    let table = CayleyTable::new(vector.group());
    let mut classes: Vec<(Subgroup, usize)> = Vec::new();
    for h in subgroups {
        match classes.iter_mut().find(|(k, _)| k.is_conjugate_to(h)) {
            Some((_, count)) => *count += 1,
            None => classes.push((h.clone(), 1)),
        }
    }
    let genus = surface_genus(vector)?;
    let mut factors = Vec::new();
    let mut used = 0u64;
    for (h, multiplicity) in classes {
        let genus_h = quotient_genus_with_table(&table, vector, &h)?;
        used += genus_h * multiplicity as u64;
        factors.push(Factor { subgroup: subgroup_label(&h), order: h.order(), genus: genus_h, multiplicity });
    }
    let remainder_dim = genus.checked_sub(used).ok_or(Error::NotAdmissible)?;
    Ok(DecompositionReport { action: vector.clone(), genus, factors, remainder_dim, deviation_notes: Vec::new() })
}

/// Genus of the surface from Riemann–Hurwitz: 2g − 2 = |G| · area.
pub fn surface_genus(vector: &GeneratingVector) -> Result<u64> {
    let area = hyperbolic_area(vector.signature())? * vector.group().order() as i64;
    if !area.is_integer() || area.to_integer() % 2 != 0 {
        return Err(Error::InvalidVector("Riemann–Hurwitz gives a non-integral genus".into()));
    }
    Ok((area.to_integer() / 2 + 1) as u64)
}

/// Name of a subgroup's conjugacy class via its lexicographically least
/// conjugate, written with a, c (the twisting generator) and z.
pub fn subgroup_label(h: &Subgroup) -> String {
    let spec = h.parent();
    let least = spec
        .elements()
        .map(|g| h.conjugate_by(g))
        .min_by(|x, y| x.elements().cmp(y.elements()))
        .expect("nonempty group");
    let order = least.order() as u32;
    if let Some(&g) = least.elements().iter().find(|&&x| spec.element_order(x) == order) {
        return format!("<{}>", element_word(spec, g));
    }
    let gens: Vec<String> = least.generators().iter().map(|&g| element_word(spec, g)).collect();
    format!("<{}>", gens.join(", "))
}

/// a^i c^j z^k with trivial parts dropped.
pub fn element_word(spec: GroupSpec, x: GroupElement) -> String {
    let mut s = String::new();
    let part = |s: &mut String, sym: &str, e: u32| match e {
        0 => {}
        1 => s.push_str(sym),
        _ => s.push_str(&format!("{sym}^{e}")),
    };
    part(&mut s, "a", x.base);
    part(&mut s, "c", x.twist);
    if spec.has_central_involution() {
        part(&mut s, "z", x.central);
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// The subgroup collections used for Jacobian decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuiltinCollection {
    /// ⟨a⟩ and ⟨aᵗc⟩ for 1 ≤ t ≤ m
    TwistCosets,
    /// ⟨a⟩ and ⟨aᵗcz⟩ for 1 ≤ t ≤ m
    CentralTwistCosets,
}

impl BuiltinCollection {
    pub fn subgroups(&self, spec: GroupSpec) -> Vec<Subgroup> {
        let z = match self {
            BuiltinCollection::TwistCosets => 0,
            BuiltinCollection::CentralTwistCosets => 1,
        };
        let mut out = vec![generated_subgroup(spec, &[spec.a()])];
        for t in 1..=spec.twist_order() as i64 {
            out.push(generated_subgroup(spec, &[spec.element(t, 1, z)]));
        }
        out
    }

    /// Quotient genera stated for these collections: 2 for ⟨a⟩, (q − 1)/m for the cyclic class.
    pub fn expected_genera(&self, spec: GroupSpec) -> Vec<(String, u64)> {
        let subgroups = self.subgroups(spec);
        let q = spec.base_order() as u64;
        vec![
            (subgroup_label(&subgroups[0]), 2),
            (subgroup_label(&subgroups[1]), (q - 1) / spec.twist_order() as u64),
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            BuiltinCollection::TwistCosets => "{<a>, <a^t c>}",
            BuiltinCollection::CentralTwistCosets => "{<a>, <a^t c z>}",
        }
    }

    /// Decomposition with deviations from the expected genera recorded.
    pub fn decompose(&self, vector: &GeneratingVector) -> Result<DecompositionReport> {
        let mut report = decompose_jacobian(vector, &self.subgroups(vector.group()))?;
        for (label, expected) in self.expected_genera(vector.group()) {
            if let Some(f) = report.factors.iter().find(|f| f.subgroup == label) {
                if f.genus != expected {
                    report.deviation_notes.push(DeviationNote {
                        subgroup: label,
                        expected_genus: expected,
                        computed_genus: f.genus,
                    });
                }
            }
        }
        Ok(report)
    }
}
