//! Small integer helpers shared by the group and construction code.

use num_integer::Integer;

/// Deterministic for all u64 (Miller-Rabin with a fixed witness set).
pub fn is_prime(n: u64) -> bool {
    primal::is_prime(n)
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime factorization with multiplicity, e.g. 12 -> [2, 2, 3].
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in prime_divisors(n) {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo a prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Smallest primitive root modulo a prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_divisors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// An element of exact order `k` in the multiplicative group mod prime `p`.
pub fn root_of_unity(k: u64, p: u64) -> Option<u64> {
    if (p - 1) % k != 0 {
        return None;
    }
    Some(pow_mod(primitive_root(p), (p - 1) / k, p))
}

/// A square root of `a` modulo an odd prime `p`, by exhaustive search.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (0..p).find(|&x| x * x % p == a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(2448), vec![2, 3, 17]);
        assert_eq!(prime_factors(360), vec![2, 2, 2, 3, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(inv_mod(3, 7), 5);
        let w = root_of_unity(7, 337).unwrap();
        assert_ne!(w, 1);
        assert_eq!(pow_mod(w, 7, 337), 1);
        let s = sqrt_mod(337 - 7, 337).unwrap();
        assert_eq!(s * s % 337, 330);
        assert_eq!(root_of_unity(3, 11), None);
    }
}
