//! Integer arithmetic utilities: deterministic primality testing, Pollard
//! rho factorization, divisor enumeration, and Legendre/Jacobi symbols.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^64, so widening through u128 cannot overflow
    (a * b) % m
}

fn powmod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (fixed witness set valid below 2^64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // n odd composite, not a prime power issue: returns a nontrivial factor
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u64;
        let f = |v: u128| (mulmod(v, v, n as u128) + c) % n as u128;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            d = (diff as u64).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of a positive u64 as prime → exponent.
pub fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

/// Prime factorization of |n| for nonzero BigInt fitting in u64 after
/// removing small primes; None if a remaining cofactor exceeds u64.
pub fn factor_bigint(n: &BigInt) -> Option<BTreeMap<BigInt, u32>> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.abs();
    let mut out: BTreeMap<BigInt, u32> = BTreeMap::new();
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let bp = BigInt::from(p);
        while (&m % &bp).is_zero() {
            *out.entry(bp.clone()).or_insert(0) += 1;
            m = &m / &bp;
        }
    }
    if m.is_one() {
        return Some(out);
    }
    let small = m.to_u64()?;
    for (p, e) in factor_u64(small) {
        *out.entry(BigInt::from(p)).or_insert(0) += e;
    }
    Some(out)
}

/// All positive divisors of |n| (None when factorization is out of range).
pub fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let f = factor_bigint(n)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in f {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk = &pk * &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Legendre symbol (a/p) for odd prime p: 0, 1 or −1.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - BigInt::one()) / BigInt::from(2);
    let r = a.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(1_000_000_007));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }

    #[test]
    fn factoring() {
        let f = factor_u64(2 * 2 * 3 * 97 * 1_000_003);
        assert_eq!(f.get(&2), Some(&2));
        assert_eq!(f.get(&3), Some(&1));
        assert_eq!(f.get(&97), Some(&1));
        assert_eq!(f.get(&1_000_003), Some(&1));
    }

    #[test]
    fn divisor_lists() {
        let d = divisors(&BigInt::from(12)).unwrap();
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d, expect);
        assert_eq!(divisors(&BigInt::from(-7)).unwrap().len(), 2);
    }

    #[test]
    fn legendre_symbols() {
        let p = BigInt::from(7);
        // squares mod 7: 1, 2, 4
        assert_eq!(legendre(&BigInt::from(1), &p), 1);
        assert_eq!(legendre(&BigInt::from(2), &p), 1);
        assert_eq!(legendre(&BigInt::from(4), &p), 1);
        assert_eq!(legendre(&BigInt::from(3), &p), -1);
        assert_eq!(legendre(&BigInt::from(5), &p), -1);
        assert_eq!(legendre(&BigInt::from(6), &p), -1);
        assert_eq!(legendre(&BigInt::from(7), &p), 0);
        assert_eq!(legendre(&BigInt::from(-1), &p), -1); // 7 ≡ 3 (mod 4)
    }
}
