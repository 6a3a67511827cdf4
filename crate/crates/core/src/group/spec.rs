use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, multiplicative_order, pow_mod};
use crate::error::{Error, Result};

/// The group (C_n ⋊_r C_m) × C_2^ε.
///
/// Generated by `a` of order n, a twisting generator `t` of order m acting by
/// `t a t⁻¹ = a^r`, and (when `central` is set) a central involution `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct GroupSpec {
    n: u32,
    m: u32,
    r: u32,
    central: bool,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: u32,
    m: u32,
    r: u32,
    central: bool,
}

impl TryFrom<RawSpec> for GroupSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        GroupSpec::new(raw.n, raw.m, raw.r, raw.central)
    }
}

impl From<GroupSpec> for RawSpec {
    fn from(s: GroupSpec) -> Self {
        RawSpec { n: s.n, m: s.m, r: s.r, central: s.central }
    }
}

/// An element a^base · t^twist · z^central, stored with reduced coordinates.
///
/// The derived ordering is the lexicographic order on (base, twist, central)
/// used for every canonical form in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct GroupElement {
    pub base: u32,
    pub twist: u32,
    pub central: u32,
}

impl GroupElement {
    pub const fn new(base: u32, twist: u32, central: u32) -> Self {
        GroupElement { base, twist, central }
    }
}

impl From<[u32; 3]> for GroupElement {
    fn from(v: [u32; 3]) -> Self {
        GroupElement::new(v[0], v[1], v[2])
    }
}

impl From<GroupElement> for [u32; 3] {
    fn from(e: GroupElement) -> Self {
        [e.base, e.twist, e.central]
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.base, self.twist, self.central)
    }
}

impl GroupSpec {
    /// Validates and builds a group spec.
    pub fn new(n: u32, m: u32, r: u32, central: bool) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidTwist { n, m, r, reason: reason.to_string() };
        if n < 2 {
            return Err(invalid("base order must be at least 2"));
        }
        if m < 1 {
            return Err(invalid("twist order must be positive"));
        }
        if r < 1 || r >= n {
            return Err(invalid("twist must lie in [1, n)"));
        }
        if gcd(r as u64, n as u64) != 1 {
            return Err(invalid("twist is not a unit modulo n"));
        }
        if pow_mod(r as u64, m as u64, n as u64) != 1 {
            return Err(invalid("r^m is not 1 modulo n"));
        }
        Ok(GroupSpec { n, m, r, central })
    }

    pub fn base_order(&self) -> u32 {
        self.n
    }

    pub fn twist_order(&self) -> u32 {
        self.m
    }

    pub fn twist(&self) -> u32 {
        self.r
    }

    pub fn has_central_involution(&self) -> bool {
        self.central
    }

    /// Order of the conjugation action of the twisting generator on ⟨a⟩.
    pub fn action_order(&self) -> u32 {
        multiplicative_order(self.r as u64, self.n as u64).unwrap_or(1) as u32
    }

    pub fn order(&self) -> usize {
        self.n as usize * self.m as usize * if self.central { 2 } else { 1 }
    }

    fn central_range(&self) -> u32 {
        if self.central {
            2
        } else {
            1
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(0, 0, 0)
    }

    pub fn a(&self) -> GroupElement {
        GroupElement::new(1 % self.n, 0, 0)
    }

    pub fn twist_generator(&self) -> GroupElement {
        GroupElement::new(0, 1 % self.m, 0)
    }

    /// The central involution, or the identity when the group has none.
    pub fn z(&self) -> GroupElement {
        GroupElement::new(0, 0, self.central_range() - 1)
    }

    /// Element from arbitrary integer exponents, reduced into canonical range.
    pub fn element(&self, base: i64, twist: i64, central: i64) -> GroupElement {
        GroupElement::new(
            base.rem_euclid(self.n as i64) as u32,
            twist.rem_euclid(self.m as i64) as u32,
            central.rem_euclid(self.central_range() as i64) as u32,
        )
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        x.base < self.n && x.twist < self.m && x.central < self.central_range()
    }

    /// r^j mod n
    pub fn twist_power(&self, j: u32) -> u32 {
        pow_mod(self.r as u64, j as u64, self.n as u64) as u32
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let c = self.central_range();
        (0..self.n).flat_map(move |i| {
            (0..self.m).flat_map(move |j| (0..c).map(move |z| GroupElement::new(i, j, z)))
        })
    }

    /// Position of `x` in [`GroupSpec::elements`].
    pub fn index_of(&self, x: GroupElement) -> usize {
        ((x.base as usize * self.m as usize) + x.twist as usize) * self.central_range() as usize
            + x.central as usize
    }

    pub fn element_at(&self, idx: usize) -> GroupElement {
        let c = self.central_range() as usize;
        let central = (idx % c) as u32;
        let rest = idx / c;
        GroupElement::new((rest / self.m as usize) as u32, (rest % self.m as usize) as u32, central)
    }

    /// (i₁,j₁,z₁)·(i₂,j₂,z₂) = (i₁ + r^{j₁}·i₂, j₁+j₂, z₁⊕z₂)
    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let n = self.n as u64;
        let base = (x.base as u64 + self.twist_power(x.twist) as u64 * y.base as u64) % n;
        GroupElement::new(
            base as u32,
            (x.twist + y.twist) % self.m,
            (x.central + y.central) % self.central_range(),
        )
    }

    pub fn invert(&self, x: GroupElement) -> GroupElement {
        // (i,j,z)⁻¹ = (-r^{-j} i, -j, z)
        let j_inv = (self.m - x.twist) % self.m;
        let n = self.n as u64;
        let base = (n - (self.twist_power(j_inv) as u64 * x.base as u64) % n) % n;
        GroupElement::new(base as u32, j_inv, x.central)
    }

    pub fn power(&self, x: GroupElement, k: i64) -> GroupElement {
        let (mut base, mut e) = if k < 0 { (self.invert(x), k.unsigned_abs()) } else { (x, k as u64) };
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn conjugate(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        self.multiply(self.multiply(g, x), self.invert(g))
    }

    pub fn element_order(&self, x: GroupElement) -> u32 {
        let id = self.identity();
        let mut y = x;
        let mut k = 1;
        while y != id {
            y = self.multiply(y, x);
            k += 1;
        }
        k
    }

    /// Human-readable isomorphism-type label.
    pub fn name(&self) -> String {
        let d = self.action_order();
        let core = if d == 1 {
            format!("C{} x C{}", self.n, self.m)
        } else if self.m == 2 && d == 2 && self.r == self.n - 1 {
            format!("D{}", self.n)
        } else {
            format!("C{} ⋊_{} C{} (r={})", self.n, d, self.m, self.r)
        };
        if self.central {
            format!("({core}) x C2")
        } else {
            core
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
