//! Fuchsian signatures: area, Teichmüller dimension, Riemann–Hurwitz
//! enumeration and quotient genera from coset monodromy.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::actions::GeneratingVector;
use crate::arith::{divisors, is_prime};
use crate::error::{Error, Result};
use crate::group::{CayleyTable, Subgroup};

/// Orbifold data (h; m₁, …, m_l) with periods kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, Vec<u32>)", into = "(u32, Vec<u32>)")]
pub struct Signature {
    orbit_genus: u32,
    periods: Vec<u32>,
}

impl From<(u32, Vec<u32>)> for Signature {
    fn from((h, periods): (u32, Vec<u32>)) -> Self {
        Signature::new(h, periods)
    }
}

impl From<Signature> for (u32, Vec<u32>) {
    fn from(s: Signature) -> Self {
        (s.orbit_genus, s.periods)
    }
}

impl Signature {
    pub fn new(orbit_genus: u32, mut periods: Vec<u32>) -> Self {
        periods.sort_unstable();
        Signature { orbit_genus, periods }
    }

    pub fn orbit_genus(&self) -> u32 {
        self.orbit_genus
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn period_count(&self) -> usize {
        self.periods.len()
    }

    /// Every distinct ordering of the periods, lexicographically; the sorted one first.
    pub fn arrangements(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = self.periods.clone();
        loop {
            out.push(current.clone());
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.periods.iter().map(u32::to_string).collect();
        write!(f, "({}; {})", self.orbit_genus, ps.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `0;2,2,3,3`, `(0; 2,2,3,3)` or `1;3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSignature(s.to_string());
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (h, rest) = body.split_once(';').ok_or_else(bad)?;
        let h: u32 = h.trim().parse().map_err(|_| bad())?;
        let mut periods = Vec::new();
        for p in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let m: u32 = p.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            periods.push(m);
        }
        Ok(Signature::new(h, periods))
    }
}

/// Area divided by 2π: 2h − 2 + Σ(1 − 1/mᵢ).
pub fn hyperbolic_area(sig: &Signature) -> Result<Ratio<i64>> {
    let area = raw_area(sig);
    if area <= Ratio::from_integer(0) {
        return Err(Error::NotHyperbolic(sig.to_string()));
    }
    Ok(area)
}

fn raw_area(sig: &Signature) -> Ratio<i64> {
    sig.periods
        .iter()
        .fold(Ratio::from_integer(2 * sig.orbit_genus as i64 - 2), |acc, &m| {
            acc + Ratio::new(m as i64 - 1, m as i64)
        })
}

/// 3h − 3 + l
pub fn teichmuller_dimension(sig: &Signature) -> i64 {
    3 * sig.orbit_genus as i64 - 3 + sig.periods.len() as i64
}

pub const SUPPORTED_MULTIPLIERS: [u64; 5] = [3, 5, 6, 10, 12];
const MAX_ORBIT_GENUS: u32 = 2;
const MAX_PERIODS: usize = 8;

/// All signatures of actions of a group of order λ(g−1) on a surface of genus g.
///
/// Riemann–Hurwitz forces area 2/λ; periods must divide λq. Bounded search
/// over h ≤ 2 and l ≤ 8, which the area cap makes exhaustive.
pub fn enumerate_signatures(genus: u64, lambda: u64) -> Result<Vec<Signature>> {
    if !SUPPORTED_MULTIPLIERS.contains(&lambda) {
        return Err(Error::UnsupportedOrder(lambda));
    }
    if genus < 8 {
        return Err(Error::GenusTooSmall(genus));
    }
    let q = genus - 1;
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let order = (lambda * q) as i64;
    let target = Ratio::new(2, lambda as i64);
    let allowed: Vec<i64> = divisors(order as u64).into_iter().filter(|&d| d >= 2).map(|d| d as i64).collect();
    let mut out = Vec::new();
    for h in 0..=MAX_ORBIT_GENUS {
        // Σ(1 − 1/mᵢ) must equal this budget.
        let budget = target - Ratio::from_integer(2 * h as i64 - 2);
        if budget < Ratio::from_integer(0) {
            continue;
        }
        let mut stack = Vec::new();
        extend_periods(&allowed, 0, budget, &mut stack, &mut |ps| {
            out.push(Signature::new(h, ps.iter().map(|&m| m as u32).collect()))
        });
    }
    out.sort();
    Ok(out)
}

fn extend_periods(
    allowed: &[i64],
    start: usize,
    budget: Ratio<i64>,
    stack: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if budget == Ratio::from_integer(0) {
        emit(stack);
        return;
    }
    if stack.len() == MAX_PERIODS {
        return;
    }
    for (k, &m) in allowed.iter().enumerate().skip(start) {
        let term = Ratio::new(m - 1, m);
        // Every further term is at least as large as this one.
        if term > budget {
            break;
        }
        stack.push(m);
        extend_periods(allowed, k, budget - term, stack, emit);
        stack.pop();
    }
}

/// Genus of S/H from the permutation action of the period images on left cosets of H.
///
/// 2·genus − 2 = [G:H](2h − 2) + Σᵢ([G:H] − #cycles(θ(xᵢ)))
pub fn quotient_genus(vector: &GeneratingVector, subgroup: &Subgroup) -> Result<u64> {
    if subgroup.parent() != vector.group() {
        return Err(Error::NotASubgroup);
    }
    let table = CayleyTable::new(vector.group());
    quotient_genus_with_table(&table, vector, subgroup)
}

pub(crate) fn quotient_genus_with_table(
    table: &CayleyTable,
    vector: &GeneratingVector,
    subgroup: &Subgroup,
) -> Result<u64> {
    if subgroup.parent() != table.spec() || vector.group() != table.spec() {
        return Err(Error::NotASubgroup);
    }
    let members = subgroup.indices();
    let size = table.size();
    // Label every element by the index of its coset gH.
    let mut coset_of = vec![u32::MAX; size];
    let mut reps = Vec::new();
    for g in 0..size as u32 {
        if coset_of[g as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(g);
        for &h in &members {
            coset_of[table.mul(g, h) as usize] = id;
        }
    }
    let index = reps.len() as i64;
    let mut twice_genus_minus_two = index * (2 * vector.signature().orbit_genus() as i64 - 2);
    for &x in vector.period_images() {
        let x = table.index(x);
        let perm: Vec<u32> = reps.iter().map(|&g| coset_of[table.mul(x, g) as usize]).collect();
        twice_genus_minus_two += index - cycle_count(&perm) as i64;
    }
    let twice_genus = twice_genus_minus_two + 2;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::InvalidVector(format!(
            "monodromy gives non-integral quotient genus ({twice_genus}/2)"
        )));
    }
    Ok((twice_genus / 2) as u64)
}

pub(crate) fn cycle_count(perm: &[u32]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn areas() {
        assert_eq!(hyperbolic_area(&sig("0;5,5,5")).unwrap(), Ratio::new(2, 5));
        assert_eq!(hyperbolic_area(&sig("0;2,2,3,3")).unwrap(), Ratio::new(1, 3));
        assert_eq!(hyperbolic_area(&sig("0;2,3,7")).unwrap(), Ratio::new(1, 42));
        assert!(matches!(hyperbolic_area(&sig("0;2,3,6")), Err(Error::NotHyperbolic(_))));
        assert!(matches!(hyperbolic_area(&sig("1;")), Err(Error::NotHyperbolic(_))));
    }

    #[test]
    fn dimensions() {
        assert_eq!(teichmuller_dimension(&sig("0;5,5,5")), 0);
        assert_eq!(teichmuller_dimension(&sig("0;2,2,3,3")), 1);
        assert_eq!(teichmuller_dimension(&sig("1;3")), 1);
    }

    #[test]
    fn parsing_and_display() {
        let s = sig("(0; 3,2,3,2)");
        assert_eq!(s.periods(), &[2, 2, 3, 3]);
        assert_eq!(s.to_string(), "(0; 2,2,3,3)");
        assert!("0;1,2".parse::<Signature>().is_err());
        assert!("x".parse::<Signature>().is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,[2,2,3,3]]");
    }

    #[test]
    fn arrangements_are_distinct_orderings() {
        assert_eq!(sig("0;2,2,3,3").arrangements().len(), 6);
        assert_eq!(sig("0;3,6,6").arrangements().len(), 3);
        assert_eq!(sig("0;5,5,5").arrangements().len(), 1);
        assert_eq!(sig("0;2,5,10").arrangements()[0], vec![2, 5, 10]);
    }

    #[test]
    fn signature_lists() {
        assert_eq!(enumerate_signatures(12, 5).unwrap(), vec![sig("0;5,5,5")]);
        let mut expected = vec![sig("0;2,2,3,3"), sig("0;2,2,2,6"), sig("0;3,6,6"), sig("0;2,7,42")];
        expected.sort();
        assert_eq!(enumerate_signatures(8, 6).unwrap(), expected);
        let mut expected = vec![sig("1;3"), sig("0;3,3,3,3")];
        expected.sort();
        assert_eq!(enumerate_signatures(14, 3).unwrap(), expected);
        let mut expected = vec![sig("1;3"), sig("0;3,3,3,3"), sig("0;7,7,21")];
        expected.sort();
        assert_eq!(enumerate_signatures(8, 3).unwrap(), expected);
        assert_eq!(enumerate_signatures(12, 4), Err(Error::UnsupportedOrder(4)));
        assert_eq!(enumerate_signatures(10, 5), Err(Error::NotPrime(9)));
    }
}
