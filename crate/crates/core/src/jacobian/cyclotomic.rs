//! Exact elements of ℤ[ζ_N], reduced modulo the cyclotomic polynomial Φ_N.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::divisors;

/// Σ c_k ζ_N^k with ζ_N = exp(2πi/N). Stored densely over exponents 0..N.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic { order, coeffs: vec![0; order as usize] }
    }

    pub fn integer(order: u32, value: i64) -> Self {
        let mut z = Cyclotomic::zero(order);
        z.coeffs[0] = value;
        z
    }

    /// ζ_N^k
    pub fn root(order: u32, k: i64) -> Self {
        let mut z = Cyclotomic::zero(order);
        z.add_root(k, 1);
        z
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_root(&mut self, k: i64, coeff: i64) {
        let e = k.rem_euclid(self.order as i64) as usize;
        self.coeffs[e] += coeff;
    }

    pub fn add_assign(&mut self, other: &Cyclotomic) {
        assert_eq!(self.order, other.order);
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *x += y;
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.order, other.order);
        let n = self.order as usize;
        let mut out = Cyclotomic::zero(self.order);
        for (i, &x) in self.coeffs.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in other.coeffs.iter().enumerate().filter(|(_, &y)| y != 0) {
                out.coeffs[(i + j) % n] += x * y;
            }
        }
        out
    }

    /// Complex conjugate: ζ^k ↦ ζ^{−k}.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.order as usize;
        let mut out = Cyclotomic::zero(self.order);
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - k) % n] += c;
        }
        out
    }

    /// Coordinates in the basis 1, ζ, …, ζ^{φ(N)−1}.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut c = self.coeffs.clone();
        for k in (deg..c.len()).rev() {
            let lead = c[k];
            if lead == 0 {
                continue;
            }
            for (j, &p) in phi.iter().enumerate() {
                c[k - deg + j] -= lead * p;
            }
        }
        c.truncate(deg);
        c
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        r[1..].iter().all(|&x| x == 0).then(|| r[0])
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.reduced() == other.reduced()
    }
}

impl Eq for Cyclotomic {}

/// Coefficients of Φ_N, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n − 1 = Π_{d | n} Φ_d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n as u64).into_iter().filter(|&d| d < n as u64) {
        p = divide_monic(&p, &cyclotomic_polynomial(d as u32));
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(110).len() - 1, 40);
    }

    #[test]
    fn sums_of_roots() {
        // Σ_{t<p} ζ_p^t = 0
        let mut s = Cyclotomic::zero(7);
        for t in 0..7 {
            s.add_root(t, 1);
        }
        assert_eq!(s.as_integer(), Some(0));
        // ζ_6 + ζ_6^{-1} = 1
        let mut u = Cyclotomic::root(6, 1);
        u.add_root(-1, 1);
        assert_eq!(u.as_integer(), Some(1));
        assert_eq!(Cyclotomic::root(10, 3).as_integer(), None);
        assert_eq!(Cyclotomic::root(4, 1).mul(&Cyclotomic::root(4, 1)), Cyclotomic::integer(4, -1));
        let z = Cyclotomic::root(70, 11);
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(1));
    }
}
