//! Explicit generating vectors in the notation a, b, s, z of the proofs.
//!
//! Inside (C_q ⋊ C_10) the twisting generator c gives b = c⁶ and s = c⁵; inside
//! the order-6 tops b = c⁴ and s = c³. In each case r denotes the action of b on ⟨a⟩.

use crate::actions::GeneratingVector;
use crate::error::{Error, Result};
use crate::geometry::Signature;
use crate::group::{GroupElement, GroupSpec};

/// The elements a, b, s, z of a group, with r the exponent by which b acts.
#[derive(Clone, Copy, Debug)]
pub struct NamedGenerators {
    pub spec: GroupSpec,
    pub a: GroupElement,
    pub b: GroupElement,
    pub s: GroupElement,
    pub z: GroupElement,
    pub r: i64,
}

impl NamedGenerators {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let (b_exp, s_exp) = match spec.twist_order() {
            10 => (6, 5),
            6 => (4, 3),
            3 | 5 => (1, 0),
            _ => return Err(Error::UnsupportedGroup(spec.name())),
        };
        Ok(NamedGenerators {
            spec,
            a: spec.a(),
            b: spec.element(0, b_exp, 0),
            s: spec.element(0, s_exp, 0),
            z: spec.z(),
            r: spec.twist_power(b_exp as u32) as i64,
        })
    }

    /// a^i
    pub fn a(&self, i: i64) -> GroupElement {
        self.spec.power(self.a, i)
    }

    /// b^j
    pub fn b(&self, j: i64) -> GroupElement {
        self.spec.power(self.b, j)
    }

    /// Product of the factors, left to right.
    pub fn word(&self, factors: &[GroupElement]) -> GroupElement {
        factors.iter().fold(self.spec.identity(), |acc, &x| self.spec.multiply(acc, x))
    }

    /// r^k reduced modulo q.
    pub fn r_pow(&self, k: u32) -> i64 {
        let q = self.spec.base_order() as i64;
        (0..k).fold(1, |acc, _| acc * self.r % q)
    }

    fn vector(&self, sig: &str, periods: Vec<GroupElement>) -> Result<GeneratingVector> {
        let sig: Signature = sig.parse().expect("static signature");
        GeneratingVector::new(self.spec, sig, vec![], periods)
    }
}

fn require(spec: GroupSpec, m: u32, action: u32, central: bool) -> Result<NamedGenerators> {
    if spec.twist_order() != m || spec.action_order() != action || spec.has_central_involution() != central {
        return Err(Error::UnsupportedGroup(spec.name()));
    }
    NamedGenerators::new(spec)
}

/// θ_{i,j,k} = (a^{−r^i}bⁱ, abʲ, bᵏ) on C_q ⋊₅ C₅, signature (0; 5,5,5).
pub fn theta_ijk(spec: GroupSpec, i: u32, j: u32, k: u32) -> Result<GeneratingVector> {
    let g = require(spec, 5, 5, false)?;
    let x1 = g.word(&[g.a(-g.r_pow(i)), g.b(i as i64)]);
    let x2 = g.word(&[g.a, g.b(j as i64)]);
    g.vector("0;5,5,5", vec![x1, x2, g.b(k as i64)])
}

/// θ₁, …, θ₄ = θ_{1,2,2}, θ_{2,4,4}, θ_{1,1,3}, θ_{3,3,4}.
pub fn order_5q_forms(spec: GroupSpec) -> Result<Vec<GeneratingVector>> {
    [(1, 2, 2), (2, 4, 4), (1, 1, 3), (3, 3, 4)].iter().map(|&(i, j, k)| theta_ijk(spec, i, j, k)).collect()
}

/// Θ_n = (as, ab^{2n}, b^{−2n}s) on C_q ⋊₁₀ C₁₀, signature (0; 2,5,10).
pub fn order_10q_form(spec: GroupSpec, n: i64) -> Result<GeneratingVector> {
    let g = require(spec, 10, 10, false)?;
    let y1 = g.word(&[g.a, g.s]);
    let y2 = g.word(&[g.a, g.b(2 * n)]);
    let y3 = g.word(&[g.b(-2 * n), g.s]);
    g.vector("0;2,5,10", vec![y1, y2, y3])
}

/// θ_{3,m} = (s, as, a^{1+(1+r)m}b², a^m b) on C_q ⋊₆ C₆, signature (0; 2,2,3,3).
pub fn family_form(spec: GroupSpec, m: i64) -> Result<GeneratingVector> {
    let g = require(spec, 6, 6, false)?;
    let x3 = g.word(&[g.a(1 + (1 + g.r) * m), g.b(2)]);
    let x4 = g.word(&[g.a(m), g.b]);
    g.vector("0;2,2,3,3", vec![g.s, g.word(&[g.a, g.s]), x3, x4])
}

/// θ_{1,i} = (bⁱ, a^{−r^i}bⁱs, abⁱs) on C_q ⋊₃ C₆, signature (0; 3,6,6).
pub fn order_6q_form_action_three(spec: GroupSpec, i: u32) -> Result<GeneratingVector> {
    let g = require(spec, 6, 3, false)?;
    let bi = g.b(i as i64);
    let x2 = g.word(&[g.a(-g.r_pow(i)), bi, g.s]);
    let x3 = g.word(&[g.a, bi, g.s]);
    g.vector("0;3,6,6", vec![bi, x2, x3])
}

/// θ₂ = (ab, bs, a^r bs) on C_q ⋊₆ C₆, signature (0; 3,6,6).
pub fn order_6q_form_action_six(spec: GroupSpec) -> Result<GeneratingVector> {
    let g = require(spec, 6, 6, false)?;
    let x1 = g.word(&[g.a, g.b]);
    let x2 = g.word(&[g.b, g.s]);
    let x3 = g.word(&[g.a(g.r), g.b, g.s]);
    g.vector("0;3,6,6", vec![x1, x2, x3])
}

/// Θ₁ = (as, bsz, a^{−r²}b²z) and Θ₂ = (as, b²sz, a^{−r}bz) on
/// (C_q ⋊₆ C₆) × C₂, signature (0; 2,6,6).
pub fn order_12q_form(spec: GroupSpec, i: u32) -> Result<GeneratingVector> {
    let g = require(spec, 6, 6, true)?;
    let y1 = g.word(&[g.a, g.s]);
    let (y2, y3) = match i {
        1 => (g.word(&[g.b, g.s, g.z]), g.word(&[g.a(-g.r_pow(2)), g.b(2), g.z])),
        2 => (g.word(&[g.b(2), g.s, g.z]), g.word(&[g.a(-g.r), g.b, g.z])),
        _ => return Err(Error::IndexOutOfRange { index: i as usize, len: 2 }),
    };
    g.vector("0;2,6,6", vec![y1, y2, y3])
}

/// Case A: θ_n = (b², ab², a^{−r(n+1)}b, aⁿb) on C_q ⋊₃ C₃, signature (0; 3,3,3,3).
pub fn order_3q_case_a(spec: GroupSpec, n: i64) -> Result<GeneratingVector> {
    let g = require(spec, 3, 3, false)?;
    let x3 = g.word(&[g.a(-g.r * (n + 1)), g.b]);
    let x4 = g.word(&[g.a(n), g.b]);
    g.vector("0;3,3,3,3", vec![g.b(2), g.word(&[g.a, g.b(2)]), x3, x4])
}

/// Case B: θ_l = (a^l b², a^{−1−lr}b², b, ab) on C_q ⋊₃ C₃, signature (0; 3,3,3,3).
pub fn order_3q_case_b(spec: GroupSpec, l: i64) -> Result<GeneratingVector> {
    let g = require(spec, 3, 3, false)?;
    let x1 = g.word(&[g.a(l), g.b(2)]);
    let x2 = g.word(&[g.a(-1 - l * g.r), g.b(2)]);
    g.vector("0;3,3,3,3", vec![x1, x2, g.b, g.word(&[g.a, g.b])])
}
