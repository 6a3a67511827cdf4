//! Small modular-arithmetic helpers shared by the group and geometry code.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

/// Least k ≥ 1 with x^k ≡ 1 (mod n); `None` when x is not a unit.
pub fn multiplicative_order(x: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(x % n, n) != 1 {
        return None;
    }
    let mut k = 1;
    let mut y = x % n;
    while y != 1 {
        y = y * (x % n) % n;
        k += 1;
    }
    Some(k)
}

/// Smallest u in [2, n-1] whose multiplicative order modulo the prime `n` is exactly `order`.
///
/// `order == 1` has no such root in that range, so it is reported as [`Error::NoSuchRoot`].
pub fn root_of_order(n: u64, order: u64) -> Result<u64> {
    let none = Error::NoSuchRoot { modulus: n, order };
    if n < 3 || order == 0 || (n - 1) % order != 0 {
        return Err(none);
    }
    (2..n)
        .find(|&u| multiplicative_order(u, n) == Some(order))
        .ok_or(none)
}

/// All u in [1, n) of exact multiplicative order `order` modulo `n`.
pub fn roots_of_order(n: u64, order: u64) -> Vec<u64> {
    (1..n)
        .filter(|&u| multiplicative_order(u, n) == Some(order))
        .collect()
}

pub fn mod_inverse(x: i64, n: i64) -> Option<i64> {
    let (mut old_r, mut r) = (x.rem_euclid(n), n);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n))
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}
