use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{
    candidate_groups, order_10q_group, order_12q_group, order_15q_family, order_6q_family_group,
};
use super::normal_forms::{family_form, NamedGenerators};
use super::words::{builtin_word_tables, evaluate_word_table, Isomorphism, WordParams, WordTable};
use crate::actions::{enumerate_generating_vectors, GeneratingVector, OrbitSpace, SearchLimits};
use crate::error::{Error, Result};
use crate::geometry::{enumerate_signatures, Signature};
use crate::group::{GroupContext, GroupElement, GroupSpec};
use crate::jacobian::{admissibility_table, BuiltinCollection, DeviationNote, Factor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Maximum number of orbit representatives printed per stratum.
    pub orbit_cap: usize,
    pub limits: SearchLimits,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { orbit_cap: 16, limits: SearchLimits::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Established by a computation in this run.
    Computed,
    /// Taken from the literature.
    Cited,
    /// A structural input of the search (group lists, Fuchsian word subgroups).
    Assumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub statement: String,
    pub provenance: Provenance,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedExclusion {
    pub claim: String,
    pub citation: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumRole {
    /// A group of order λq.
    Primary,
    /// A supergroup used for extension checks.
    Extension,
}

/// For one sub-orbit, the super-orbits whose restriction lands in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitExtension {
    pub orbit: usize,
    pub super_orbits: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionVerdict {
    pub table: String,
    pub supergroup: GroupSpec,
    pub supergroup_name: String,
    pub super_signature: Signature,
    pub orbits: Vec<OrbitExtension>,
    pub all_extend: bool,
}

/// For one super-orbit, the sub-orbits its restrictions reach.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionSummary {
    pub table: String,
    pub subgroup: GroupSpec,
    pub subgroup_name: String,
    pub sub_signature: Signature,
    pub super_orbit: usize,
    pub sub_orbits: Vec<usize>,
}

/// Bookkeeping for one word table over all its evaluations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRun {
    pub table: String,
    pub evaluations: usize,
    /// Evaluations whose images generate a subgroup of the wrong index.
    pub index_violations: usize,
    /// Evaluations whose image subgroup matches no stratum group.
    pub unmatched: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullAutomorphismVerdict {
    pub group: String,
    pub order: usize,
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianSummary {
    pub orbit: usize,
    pub collection: String,
    pub factors: Vec<Factor>,
    pub remainder: u64,
    /// Σ genus · multiplicity + remainder.
    pub dimension_sum: u64,
    /// Σ_H d_V^H = d_V for every V in 𝔍.
    pub admissibility_equalities: bool,
    pub deviation_notes: Vec<DeviationNote>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub role: StratumRole,
    pub signature: Signature,
    pub group: GroupSpec,
    pub group_name: String,
    pub vector_count: u64,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<u64>,
    pub existence_only: bool,
    pub representatives: Vec<GeneratingVector>,
    pub extends_to: Vec<ExtensionVerdict>,
    pub restricts_to: Vec<RestrictionSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_aut: Option<FullAutomorphismVerdict>,
    pub jacobian: Vec<JacobianSummary>,
}

impl Stratum {
    /// Whether every orbit extends through at least one table.
    pub fn all_orbits_extend(&self) -> bool {
        (0..self.orbit_count)
            .all(|k| self.extends_to.iter().any(|v| v.orbits.iter().any(|o| o.orbit == k && !o.super_orbits.is_empty())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmptyStratum {
    pub role: StratumRole,
    pub signature: Signature,
    pub group: GroupSpec,
    pub group_name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub genus: u64,
    pub q: u64,
    pub lambda: u64,
    pub existence: bool,
    pub condition: String,
    pub condition_holds: bool,
    pub strata: Vec<Stratum>,
    pub empty_strata: Vec<EmptyStratum>,
    pub table_runs: Vec<TableRun>,
    pub facts: Vec<Fact>,
    pub caveats: Vec<String>,
    pub excluded_by_citation: Vec<CitedExclusion>,
}

impl ClassificationReport {
    pub fn stratum(&self, group: GroupSpec, signature: &Signature) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.group == group && &s.signature == signature)
    }

    /// Orbit count for a (group, signature) pair, zero when the stratum is empty.
    pub fn orbit_count(&self, group: GroupSpec, signature: &Signature) -> usize {
        self.stratum(group, signature).map_or(0, |s| s.orbit_count)
    }
}

const BJ: &str = "Belolipetsky–Jones";
const CONDER: &str = "Conder, lists of group actions on surfaces of genus 2 to 101";
const SINGERMAN: &str = "Singerman, finitely maximal Fuchsian groups";

pub fn classify_genus(genus: u64, lambda: u64) -> Result<ClassificationReport> {
    classify_genus_with(genus, lambda, &ClassifyOptions::default())
}

/// A (group, signature) pair with its orbit space.
struct Job {
    role: StratumRole,
    label: String,
    space: OrbitSpace,
}

struct Setup {
    supergroup: GroupSpec,
    super_signature: Signature,
    tables: Vec<WordTable>,
}

pub fn classify_genus_with(genus: u64, lambda: u64, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    if !matches!(lambda, 3 | 5 | 6) {
        return Err(Error::UnsupportedOrder(lambda));
    }
    let signatures = enumerate_signatures(genus, lambda)?;
    let q = genus - 1;
    let q32 = q as u32;
    let candidates = candidate_groups(q32, lambda as u32)?;

    let (modulus, condition) = if lambda == 5 { (5, "g ≡ 2 mod 5") } else { (3, "g ≡ 2 mod 3") };
    let condition_holds = genus % modulus == 2;

    let setup = extension_setup(q32, lambda)?;
    let contexts: Vec<Arc<GroupContext>> = candidates.par_iter().map(|c| GroupContext::new(c.spec)).collect();

    let mut pairs: Vec<(StratumRole, String, Arc<GroupContext>, Signature)> = Vec::new();
    for sig in &signatures {
        for (c, ctx) in candidates.iter().zip(&contexts) {
            pairs.push((StratumRole::Primary, c.label.clone(), ctx.clone(), sig.clone()));
        }
    }
    if let Some(s) = &setup {
        let label = super_label(s.supergroup);
        pairs.push((StratumRole::Extension, label, GroupContext::new(s.supergroup), s.super_signature.clone()));
    }
    let jobs: Vec<Job> = pairs
        .into_par_iter()
        .map(|(role, label, ctx, sig)| {
            OrbitSpace::with_context(ctx, &sig, opts.limits).map(|space| Job { role, label, space })
        })
        .collect::<Result<_>>()?;

    let mut strata = Vec::new();
    let mut empty_strata = Vec::new();
    let mut spaces: Vec<&Job> = Vec::new();
    for job in &jobs {
        let space = &job.space;
        if space.orbit_count() == 0 {
            empty_strata.push(EmptyStratum {
                role: job.role,
                signature: space.signature().clone(),
                group: space.group(),
                group_name: job.label.clone(),
            });
            continue;
        }
        let orbits = space.orbits();
        strata.push(Stratum {
            role: job.role,
            signature: space.signature().clone(),
            group: space.group(),
            group_name: job.label.clone(),
            vector_count: space.total_vectors(),
            orbit_count: space.orbit_count(),
            orbit_sizes: orbits.iter().map(|o| o.size).collect(),
            existence_only: space.is_existence_only(),
            representatives: orbits.into_iter().take(opts.orbit_cap).map(|o| o.representative).collect(),
            extends_to: Vec::new(),
            restricts_to: Vec::new(),
            full_aut: None,
            jacobian: Vec::new(),
        });
        spaces.push(job);
    }

    let mut table_runs = Vec::new();
    if let Some(s) = &setup {
        if let Some(super_idx) = spaces.iter().position(|j| j.role == StratumRole::Extension) {
            for table in &s.tables {
                let (hits, run) = run_table(table, &spaces, super_idx, q32);
                attach_hits(table, &hits, &spaces, super_idx, &mut strata);
                table_runs.push(run);
            }
        }
    }

    for (stratum, job) in strata.iter_mut().zip(&spaces) {
        if let Some(collection) = stated_collection(stratum) {
            stratum.jacobian = jacobian_summaries(&job.space, collection);
        }
    }

    let mut facts = vec![Fact {
        statement: format!(
            "groups of order {}q considered: {}",
            lambda,
            candidates.iter().map(|c| c.label.as_str()).collect::<Vec<_>>().join(", ")
        ),
        provenance: Provenance::Assumed,
        holds: true,
        citation: Some("Sylow theorems".into()),
    }];
    if setup.is_some() {
        facts.push(Fact {
            statement: "word subgroups of the extension tables are Fuchsian of the stated signature".into(),
            provenance: Provenance::Assumed,
            holds: true,
            citation: None,
        });
    }
    let mut excluded_by_citation = Vec::new();
    let mut caveats = Vec::new();
    match lambda {
        5 => {
            let empty = order_15q_family(q32)?
                .iter()
                .map(|c| enumerate_generating_vectors(c.spec, &"0;3,3,5".parse().unwrap()).map(|v| v.is_empty()))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .all(|e| e);
            facts.push(Fact {
                statement: "no group of order 15q in the metacyclic family admits signature (0; 3,3,5), \
                            so no action extends to (0; 3,3,5) or (0; 2,3,10)"
                    .into(),
                provenance: Provenance::Computed,
                holds: empty,
                citation: None,
            });
            excluded_by_citation.push(CitedExclusion {
                claim: "every group of order 15q maps onto C15, so the metacyclic family covers (0; 3,3,5)".into(),
                citation: "Sylow theorems".into(),
            });
            excluded_by_citation.push(CitedExclusion {
                claim: "no surface of genus q+1 has 30q automorphisms acting with signature (0; 2,3,10)".into(),
                citation: SINGERMAN.into(),
            });
            assign_full_aut_five(&mut strata, empty, q);
        }
        6 => {
            excluded_by_citation.push(CitedExclusion {
                claim: "no group of order 12q acts with signature (0; 2,2,2,3)".into(),
                citation: format!("{BJ} for q > 18; {CONDER} for q = 7, 13"),
            });
            excluded_by_citation.push(CitedExclusion {
                claim: "no surface of genus q+1 has 24q automorphisms, in particular none with signature (0; 2,4,6)"
                    .into(),
                citation: BJ.into(),
            });
            excluded_by_citation.push(CitedExclusion {
                claim: "for g > 14 the two (0; 2,6,6) surfaces are the only ones with 12q automorphisms".into(),
                citation: BJ.into(),
            });
            if genus == 14 {
                caveats.push(
                    "there are three non-isomorphic Riemann surfaces of genus 14 with full automorphism group \
                     PSL(2,13) of order 1092 in the closed (0; 2,2,3,3) family; they are not the (0; 2,6,6) \
                     surfaces and are not computed here"
                        .into(),
                );
            }
            assign_full_aut_six(&mut strata, genus, q);
        }
        _ => {
            excluded_by_citation.push(CitedExclusion {
                claim: "a (0; 3,3,3,3) action of order 3q can only extend with signature (0; 2,2,3,3)".into(),
                citation: SINGERMAN.into(),
            });
            assign_full_aut_three(&mut strata, q);
        }
    }

    let existence = strata.iter().any(|s| s.role == StratumRole::Primary);
    Ok(ClassificationReport {
        genus,
        q,
        lambda,
        existence,
        condition: condition.into(),
        condition_holds,
        strata,
        empty_strata,
        table_runs,
        facts,
        caveats,
        excluded_by_citation,
    })
}

fn super_label(spec: GroupSpec) -> String {
    let q = spec.base_order();
    if spec.has_central_involution() {
        format!("(C{q} ⋊_6 C6) x C2")
    } else {
        format!("C{q} ⋊_{m} C{m}", m = spec.twist_order())
    }
}

/// Supergroup, its signature and the tables to evaluate for each λ, when the supergroup exists.
fn extension_setup(q: u32, lambda: u64) -> Result<Option<Setup>> {
    let tables = builtin_word_tables();
    let pick = |names: &[&str]| -> Vec<WordTable> {
        tables.iter().filter(|t| names.contains(&t.name.as_str())).cloned().collect()
    };
    let setup = match lambda {
        5 if (q - 1) % 10 == 0 => {
            Setup { supergroup: order_10q_group(q)?, super_signature: "0;2,5,10".parse()?, tables: pick(&["T1"]) }
        }
        6 if (q - 1) % 6 == 0 => Setup {
            supergroup: order_12q_group(q)?,
            super_signature: "0;2,6,6".parse()?,
            tables: pick(&["T2a", "T2b", "T3"]),
        },
        3 if (q - 1) % 6 == 0 => Setup {
            supergroup: order_6q_family_group(q)?,
            super_signature: "0;2,2,3,3".parse()?,
            tables: pick(&["T4a", "T4b"]),
        },
        _ => return Ok(None),
    };
    Ok(Some(setup))
}

/// (sub-stratum index, sub-orbit, super-orbit)
type Hit = (usize, usize, usize);

type IsoCache = Mutex<HashMap<Vec<GroupElement>, Option<(usize, Arc<Isomorphism>)>>>;

/// Evaluates a table on the supergroup actions and locates each restriction
/// among the orbit spaces with the table's sub-signature.
fn run_table(table: &WordTable, spaces: &[&Job], super_idx: usize, q: u32) -> (BTreeSet<Hit>, TableRun) {
    let sup = &spaces[super_idx].space;
    let on_family = sup.signature() == &Signature::new(0, vec![2, 2, 3, 3]);
    let inputs: Vec<(GeneratingVector, usize, Option<WordParams>)> = if table.parametric {
        parametric_inputs(sup, q)
    } else if on_family {
        // The family words only restrict correctly on the normal forms θ_{3,m}.
        family_inputs(sup, q).into_iter().map(|(v, o, _)| (v, o, None)).collect()
    } else {
        (0..sup.orbit_count())
            .flat_map(|o| sup.sorted_members(o).map(move |t| (t, o)))
            .map(|(t, o)| (sup.vector_of(t), o, None))
            .collect()
    };
    let targets: Vec<usize> = (0..spaces.len())
        .filter(|&k| k != super_idx && spaces[k].space.signature() == &table.sub_signature)
        .collect();
    let cache: IsoCache = Mutex::new(HashMap::new());
    let outcomes: Vec<(Option<Hit>, bool, bool)> = inputs
        .par_iter()
        .map(|(v, o, params)| {
            let Ok(r) = evaluate_word_table(table, v, *params) else { return (None, false, true) };
            let bad_index = r.index() != table.index;
            let key = r.subgroup.elements().to_vec();
            let found = {
                let cached = cache.lock().unwrap().get(&key).cloned();
                match cached {
                    Some(x) => x,
                    None => {
                        let x = targets.iter().find_map(|&k| {
                            Isomorphism::find(sup.context().table(), &r.subgroup, spaces[k].space.group())
                                .ok()
                                .map(|iso| (k, Arc::new(iso)))
                        });
                        cache.lock().unwrap().insert(key, x.clone());
                        x
                    }
                }
            };
            let Some((k, iso)) = found else { return (None, bad_index, true) };
            let sub = &spaces[k].space;
            let target = sub.context().table();
            debug_assert_eq!(iso.target(), sub.group());
            let tuple: Vec<u32> = r.images.iter().map(|&x| target.index(iso.apply(x))).collect();
            match sub.orbit_of_indices(&tuple) {
                Some(orbit) => (Some((k, orbit, *o)), bad_index, false),
                None => (None, bad_index, true),
            }
        })
        .collect();
    let run = TableRun {
        table: table.name.clone(),
        evaluations: outcomes.len(),
        index_violations: outcomes.iter().filter(|x| x.1).count(),
        unmatched: outcomes.iter().filter(|x| x.2).count(),
    };
    (outcomes.into_iter().filter_map(|x| x.0).collect(), run)
}

/// θ_{3,m} for every m, paired with every l, as the parametric table requires.
fn family_inputs(sup: &OrbitSpace, q: u32) -> Vec<(GeneratingVector, usize, i64)> {
    (0..q as i64)
        .filter_map(|m| {
            let v = family_form(sup.group(), m).ok()?;
            let o = sup.orbit_of(&v).ok()?;
            Some((v, o, m))
        })
        .collect()
}

fn parametric_inputs(sup: &OrbitSpace, q: u32) -> Vec<(GeneratingVector, usize, Option<WordParams>)> {
    let Ok(named) = NamedGenerators::new(sup.group()) else { return Vec::new() };
    family_inputs(sup, q)
        .into_iter()
        .flat_map(|(v, o, m)| (0..q as i64).map(move |l| (v.clone(), o, Some(WordParams { l, m, r: named.r }))))
        .collect()
}

fn attach_hits(table: &WordTable, hits: &BTreeSet<Hit>, spaces: &[&Job], super_idx: usize, strata: &mut [Stratum]) {
    let sup = &spaces[super_idx].space;
    let mut sub_indices: Vec<usize> = hits.iter().map(|h| h.0).collect();
    sub_indices.dedup();
    for &k in &sub_indices {
        let orbits = (0..spaces[k].space.orbit_count())
            .map(|orbit| OrbitExtension {
                orbit,
                super_orbits: hits.iter().filter(|h| h.0 == k && h.1 == orbit).map(|h| h.2).collect(),
            })
            .collect::<Vec<_>>();
        let all_extend = orbits.iter().all(|o| !o.super_orbits.is_empty());
        strata[k].extends_to.push(ExtensionVerdict {
            table: table.name.clone(),
            supergroup: sup.group(),
            supergroup_name: spaces[super_idx].label.clone(),
            super_signature: sup.signature().clone(),
            orbits,
            all_extend,
        });
        for super_orbit in 0..sup.orbit_count() {
            let mut sub_orbits: Vec<usize> =
                hits.iter().filter(|h| h.0 == k && h.2 == super_orbit).map(|h| h.1).collect();
            sub_orbits.dedup();
            strata[super_idx].restricts_to.push(RestrictionSummary {
                table: table.name.clone(),
                subgroup: spaces[k].space.group(),
                subgroup_name: spaces[k].label.clone(),
                sub_signature: table.sub_signature.clone(),
                super_orbit,
                sub_orbits,
            });
        }
    }
}

/// The subgroup collection used for a stratum's Jacobian, for the actions whose decomposition is stated.
fn stated_collection(stratum: &Stratum) -> Option<BuiltinCollection> {
    let g = stratum.group;
    let full_action = g.action_order() == g.twist_order();
    match (g.twist_order(), g.has_central_involution(), stratum.signature.periods()) {
        (10, false, [2, 5, 10]) if full_action => Some(BuiltinCollection::TwistCosets),
        (6, false, [2, 2, 3, 3]) if full_action => Some(BuiltinCollection::TwistCosets),
        (6, true, [2, 6, 6]) if full_action => Some(BuiltinCollection::CentralTwistCosets),
        _ => None,
    }
}

fn jacobian_summaries(space: &OrbitSpace, collection: BuiltinCollection) -> Vec<JacobianSummary> {
    (0..space.orbit_count())
        .into_par_iter()
        .map(|orbit| {
            let v = space.representative(orbit);
            let mut summary = JacobianSummary {
                orbit,
                collection: collection.name().into(),
                factors: Vec::new(),
                remainder: 0,
                dimension_sum: 0,
                admissibility_equalities: false,
                deviation_notes: Vec::new(),
                error: None,
            };
            let subgroups = collection.subgroups(v.group());
            match admissibility_table(&v, &subgroups) {
                Ok(rows) => summary.admissibility_equalities = rows.iter().all(|r| r.fixed_sum == r.degree),
                Err(e) => summary.error = Some(e.to_string()),
            }
            match collection.decompose(&v) {
                Ok(report) => {
                    summary.dimension_sum = report.factors.iter().map(|f| f.genus * f.multiplicity as u64).sum::<u64>()
                        + report.remainder_dim;
                    summary.factors = report.factors;
                    summary.remainder = report.remainder_dim;
                    summary.deviation_notes = report.deviation_notes;
                }
                Err(e) => summary.error = Some(e.to_string()),
            }
            summary
        })
        .collect()
}

fn verdict(group: String, order: usize, provenance: Provenance, note: &str) -> Option<FullAutomorphismVerdict> {
    Some(FullAutomorphismVerdict { group, order, provenance, note: note.into() })
}

fn assign_full_aut_five(strata: &mut [Stratum], no_15q: bool, q: u64) {
    let sup = strata.iter().find(|s| s.role == StratumRole::Extension).map(|s| s.group_name.clone());
    for s in strata.iter_mut() {
        let note_15q = if no_15q { "" } else { " (the order-15q check FAILED)" };
        s.full_aut = match (s.role, &sup) {
            (StratumRole::Extension, _) => verdict(
                s.group_name.clone(),
                10 * q as usize,
                Provenance::Computed,
                &format!("maximal: no extension through (0; 3,3,5) or (0; 2,3,10){note_15q}"),
            ),
            (StratumRole::Primary, Some(name)) if s.all_orbits_extend() => verdict(
                name.clone(),
                10 * q as usize,
                Provenance::Computed,
                &format!("every orbit extends via T1{note_15q}"),
            ),
            _ => None,
        };
    }
}

fn assign_full_aut_six(strata: &mut [Stratum], genus: u64, q: u64) {
    let sup = strata.iter().find(|s| s.role == StratumRole::Extension).map(|s| s.group_name.clone());
    let large = genus > 14;
    let twelve_note = if large {
        "maximal for g > 14"
    } else {
        "maximality for g <= 14 is not established here"
    };
    for s in strata.iter_mut() {
        let periods = s.signature.periods().to_vec();
        s.full_aut = match (s.role, periods.as_slice(), &sup) {
            (StratumRole::Extension, _, _) => {
                verdict(s.group_name.clone(), 12 * q as usize, Provenance::Cited, twelve_note)
            }
            (StratumRole::Primary, [3, 6, 6], Some(name)) if s.all_orbits_extend() => verdict(
                name.clone(),
                12 * q as usize,
                Provenance::Cited,
                &format!("every orbit extends via T2a/T2b; {twelve_note}"),
            ),
            (StratumRole::Primary, [2, 2, 3, 3], _) => verdict(
                s.group_name.clone(),
                6 * q as usize,
                Provenance::Cited,
                "generic member of the family; no extension with signature (0; 2,2,2,3)",
            ),
            _ => None,
        };
    }
}

fn assign_full_aut_three(strata: &mut [Stratum], q: u64) {
    let sup = strata.iter().find(|s| s.role == StratumRole::Extension).map(|s| s.group_name.clone());
    for s in strata.iter_mut() {
        s.full_aut = match (s.role, &sup) {
            (StratumRole::Primary, Some(name)) if s.all_orbits_extend() => verdict(
                name.clone(),
                6 * q as usize,
                Provenance::Computed,
                "every orbit extends via T4a/T4b into the (0; 2,2,3,3) family",
            ),
            _ => None,
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_twelve_order_five() {
        let r = classify_genus(12, 5).unwrap();
        assert!(r.existence && r.condition_holds);
        let primary: Vec<&Stratum> = r.strata.iter().filter(|s| s.role == StratumRole::Primary).collect();
        assert_eq!(primary.len(), 1);
        assert_eq!(primary[0].orbit_count, 4);
        assert_eq!(primary[0].signature.to_string(), "(0; 5,5,5)");
        assert!(primary[0].all_orbits_extend());
        let fa = primary[0].full_aut.as_ref().unwrap();
        assert_eq!(fa.order, 110);
        let sup = r.strata.iter().find(|s| s.role == StratumRole::Extension).unwrap();
        assert_eq!(sup.orbit_count, 4);
        assert!(r.facts.iter().all(|f| f.holds));
        assert_eq!(r.table_runs[0].index_violations, 0);
        assert_eq!(r.table_runs[0].unmatched, 0);
    }

    #[test]
    fn genus_fourteen_order_five_is_empty() {
        let r = classify_genus(14, 5).unwrap();
        assert!(!r.existence);
        assert!(r.strata.is_empty());
        assert!(!r.empty_strata.is_empty());
    }

    #[test]
    fn genus_eight_order_six() {
        let r = classify_genus(8, 6).unwrap();
        assert!(r.existence);
        let t6 = order_6q_family_group(7).unwrap();
        let r3 = GroupSpec::new(7, 6, 2, false).unwrap();
        let sig = |s: &str| -> Signature { s.parse().unwrap() };
        assert_eq!(r.orbit_count(t6, &sig("0;2,2,3,3")), 1);
        assert_eq!(r.orbit_count(r3, &sig("0;2,2,3,3")), 0);
        assert_eq!(r.orbit_count(r3, &sig("0;3,6,6")), 2);
        // Two twist types (c⁴, c, c) and (c², c⁵, c⁵), not one.
        assert_eq!(r.orbit_count(t6, &sig("0;3,6,6")), 2);
        assert_eq!(r.orbit_count(order_12q_group(7).unwrap(), &sig("0;2,6,6")), 2);
        for s in ["0;2,2,2,6", "0;2,7,42"] {
            assert!(r.strata.iter().all(|x| x.signature != sig(s)));
        }
        for s in r.strata.iter().filter(|s| s.signature == sig("0;3,6,6")) {
            assert!(s.all_orbits_extend(), "{}", s.group_name);
        }
        assert!(r.table_runs.iter().all(|t| t.index_violations == 0 && t.unmatched == 0));
        // Each (0; 3,6,6) orbit sits on exactly one of the two (0; 2,6,6) surfaces.
        for s in r.strata.iter().filter(|s| s.signature == sig("0;3,6,6")) {
            let mut targets: Vec<usize> = (0..s.orbit_count)
                .map(|k| {
                    let supers: BTreeSet<usize> = s
                        .extends_to
                        .iter()
                        .flat_map(|v| v.orbits[k].super_orbits.iter().copied())
                        .collect();
                    assert_eq!(supers.len(), 1);
                    *supers.first().unwrap()
                })
                .collect();
            targets.sort_unstable();
            assert_eq!(targets, vec![0, 1]);
        }
    }

    #[test]
    fn genus_eight_order_three() {
        let r = classify_genus(8, 3).unwrap();
        assert!(r.existence);
        let s = r.strata.iter().find(|s| s.role == StratumRole::Primary).unwrap();
        assert_eq!(s.signature.to_string(), "(0; 3,3,3,3)");
        assert!(s.all_orbits_extend());
        assert_eq!(s.full_aut.as_ref().unwrap().order, 42);
        assert!(r.strata.iter().all(|s| s.signature.orbit_genus() == 0));
        assert!(r.table_runs.iter().all(|t| t.index_violations == 0 && t.unmatched == 0));
    }
}
