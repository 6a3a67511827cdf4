//! Word tables for Fuchsian subgroups, extension of actions, and the
//! per-genus classification driver.

mod classify;
mod families;
mod normal_forms;
mod words;

pub use classify::{
    classify_genus, classify_genus_with, ClassificationReport, ClassifyOptions, CitedExclusion, EmptyStratum,
    ExtensionVerdict, Fact, FullAutomorphismVerdict, JacobianSummary, OrbitExtension, Provenance,
    RestrictionSummary, Stratum, StratumRole, TableRun,
};
pub use families::{
    candidate_groups, order_10q_group, order_12q_group, order_15q_family, order_6q_family_group, Candidate,
};
pub use normal_forms::{
    family_form, order_10q_form, order_12q_form, order_3q_case_a, order_3q_case_b, order_5q_forms,
    order_6q_form_action_six, order_6q_form_action_three, theta_ijk, NamedGenerators,
};
pub use words::{builtin_word_tables, evaluate_word_table, word_table, Exponent, Restriction, Word, WordParams, WordTable};

use crate::actions::{are_equivalent, GeneratingVector};
use crate::error::{Error, Result};
use crate::geometry::teichmuller_dimension;

/// Whether the action `super_vector` restricts, through the table's words,
/// to an action equivalent to `sub_vector`.
pub fn check_extension(
    sub_vector: &GeneratingVector,
    super_vector: &GeneratingVector,
    table: &WordTable,
    params: Option<WordParams>,
) -> Result<bool> {
    let sub = teichmuller_dimension(sub_vector.signature());
    let sup = teichmuller_dimension(super_vector.signature());
    if sub != sup {
        return Err(Error::DimensionMismatch { sub, sup });
    }
    let restricted = evaluate_word_table(table, super_vector, params)?.transport(sub_vector.group())?;
    are_equivalent(&restricted, sub_vector)
}
