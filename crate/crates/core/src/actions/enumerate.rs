use rayon::prelude::*;

use super::vector::GeneratingVector;
use crate::error::{Error, Result};
use crate::geometry::Signature;
use crate::group::{CayleyTable, ConjugacyData, GroupSpec};

/// Layout of a raw tuple: 2h handle images, then the period images in `arrangement` order.
pub(crate) struct TupleShape<'a> {
    pub handles: usize,
    pub arrangement: &'a [u32],
}

/// Depth-first search over tuples satisfying the long relation with exact
/// period orders and full generation. The first slot ranges over `first`,
/// the last period image is derived. Results come out in lexicographic order.
pub(crate) fn search_tuples(
    table: &CayleyTable,
    shape: &TupleShape<'_>,
    first: &[u32],
    keep: &(dyn Fn(&[u32]) -> bool + Sync),
) -> Vec<Vec<u32>> {
    let slots = shape.handles + shape.arrangement.len();
    assert!(!shape.arrangement.is_empty(), "at least one period is required");
    let all: Vec<u32> = (0..table.size() as u32).collect();
    let by_order: Vec<Vec<u32>> =
        shape.arrangement.iter().map(|&m| table.elements_of_order(m)).collect();
    if slots == 1 {
        // x₁ = 1 is forced, which has no period ≥ 2.
        return Vec::new();
    }
    // Candidates for the free slots after the first (the last slot is derived).
    let candidates: Vec<&[u32]> = (0..slots - 1)
        .map(|k| if k < shape.handles { all.as_slice() } else { by_order[k - shape.handles].as_slice() })
        .collect();
    let last_order = *shape.arrangement.last().unwrap();
    first
        .par_iter()
        .flat_map_iter(|&x0| {
            let mut out = Vec::new();
            let mut stack = Vec::with_capacity(slots);
            stack.push(x0);
            extend(table, shape, &candidates, last_order, &mut stack, keep, &mut out);
            out
        })
        .collect()
}

fn extend(
    table: &CayleyTable,
    shape: &TupleShape<'_>,
    candidates: &[&[u32]],
    last_order: u32,
    stack: &mut Vec<u32>,
    keep: &(dyn Fn(&[u32]) -> bool + Sync),
    out: &mut Vec<Vec<u32>>,
) {
    let slots = shape.handles + shape.arrangement.len();
    if stack.len() == slots - 1 {
        let last = table.inv(relation_prefix(table, shape.handles, stack));
        if table.order_of(last) != last_order {
            return;
        }
        stack.push(last);
        if keep(stack) && table.generates(stack) {
            out.push(stack.clone());
        }
        stack.pop();
        return;
    }
    for &x in candidates[stack.len()] {
        stack.push(x);
        extend(table, shape, candidates, last_order, stack, keep, out);
        stack.pop();
    }
}

/// Π[αᵢ, βᵢ] · x₁ ⋯ x_k for a tuple whose handle part is complete.
fn relation_prefix(table: &CayleyTable, handles: usize, tuple: &[u32]) -> u32 {
    let mut acc = 0;
    for pair in tuple[..handles].chunks(2) {
        acc = table.mul(acc, table.commutator(pair[0], pair[1]));
    }
    tuple[handles..].iter().fold(acc, |acc, &x| table.mul(acc, x))
}

fn check_genus(sig: &Signature) -> Result<()> {
    match sig.orbit_genus() {
        0 | 1 => Ok(()),
        h => Err(Error::UnsupportedGenus(h)),
    }
}

/// Every generating vector for the signature in its sorted arrangement.
pub fn enumerate_generating_vectors(group: GroupSpec, sig: &Signature) -> Result<Vec<GeneratingVector>> {
    check_genus(sig)?;
    if sig.period_count() == 0 {
        return Ok(Vec::new());
    }
    let table = CayleyTable::new(group);
    let shape = TupleShape { handles: 2 * sig.orbit_genus() as usize, arrangement: sig.periods() };
    let first: Vec<u32> = if shape.handles > 0 {
        (0..table.size() as u32).collect()
    } else {
        table.elements_of_order(sig.periods()[0])
    };
    Ok(search_tuples(&table, &shape, &first, &|_| true)
        .into_iter()
        .map(|t| {
            let (h, p) = t.split_at(shape.handles);
            GeneratingVector::from_indices_unchecked(&table, sig.clone(), h, p)
        })
        .collect())
}

/// Number of generating vectors in the sorted arrangement, found by fixing the
/// first period image to conjugacy-class representatives and weighting by class size.
pub fn count_generating_vectors(group: GroupSpec, sig: &Signature) -> Result<u64> {
    check_genus(sig)?;
    if sig.period_count() == 0 {
        return Ok(0);
    }
    if sig.orbit_genus() > 0 {
        return Ok(enumerate_generating_vectors(group, sig)?.len() as u64);
    }
    let table = CayleyTable::new(group);
    let conj = ConjugacyData::new(&table);
    Ok(class_reduced_counts(&table, &conj, sig.periods())
        .into_iter()
        .map(|(rep, n)| conj.class_size(rep) as u64 * n)
        .sum())
}

/// For each class representative of the first period's order, the number of
/// genus-zero tuples starting with it.
pub(crate) fn class_reduced_counts(
    table: &CayleyTable,
    conj: &ConjugacyData,
    arrangement: &[u32],
) -> Vec<(u32, u64)> {
    let shape = TupleShape { handles: 0, arrangement };
    class_representatives_of_order(table, conj, arrangement[0])
        .into_iter()
        .map(|rep| (rep, search_tuples(table, &shape, &[rep], &|_| true).len() as u64))
        .collect()
}

pub(crate) fn class_representatives_of_order(table: &CayleyTable, conj: &ConjugacyData, order: u32) -> Vec<u32> {
    conj.classes.iter().map(|c| c[0]).filter(|&x| table.order_of(x) == order).collect()
}
